#include <gtest/gtest.h>

#include "../support/convert.hpp"
#include "qtoric/combinatorics.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/momentangle.hpp"

using namespace qtoric;
using namespace qtoric::momentangle;
using combinatorics::SimplicialComplex;
using combinatorics::simplex;

namespace {

SimplicialComplex points(int m) {
  std::vector<combinatorics::Face> f;
  for (int i = 1; i <= m; ++i) f.push_back({i});
  return SimplicialComplex(m, f);
}

void expect_sphere(const HomologyProfile& h, int dim) {
  ASSERT_EQ(static_cast<int>(h.groups.size()), dim + 1);
  for (int k = 0; k <= dim; ++k) {
    const auto& g = h.groups[static_cast<std::size_t>(k)];
    EXPECT_TRUE(g.torsion.empty()) << "degree " << k;
    EXPECT_EQ(g.free_rank, (k == 0 || k == dim) ? 1u : 0u) << "degree " << k;
  }
  EXPECT_TRUE(h.is_sphere(dim));
}

}  // namespace

TEST(CellModel, TwoPointsComplex) {
  const auto model = build_cell_model(points(2), Flavor::Complex);
  EXPECT_EQ(model.top_dimension(), 3);
  std::size_t total = 0;
  for (int d = 0; d <= model.top_dimension(); ++d) {
    total += model.cell_count(d);
    for (const auto& cell : model.cells(d))
      EXPECT_FALSE(cell[0] == CellRole::Disc && cell[1] == CellRole::Disc);
  }
  EXPECT_EQ(total, 8u);
}

TEST(CellModel, TwoPointsQuaternionicDims) {
  const auto model = build_cell_model(points(2), Flavor::Quaternionic);
  EXPECT_EQ(model.top_dimension(), 7);
  for (int d = 0; d <= 7; ++d)
    for (const auto& cell : model.cells(d)) {
      int sum = 0;
      for (auto r : cell) sum += r == CellRole::Base ? 0 : r == CellRole::Sphere ? 3 : 4;
      EXPECT_EQ(sum, d);
    }
}

TEST(CellModel, TriangleBoundaryNoTripleDisc) {
  const auto model = build_cell_model(simplex(2).dual(), Flavor::Complex);
  EXPECT_EQ(model.top_dimension(), 5);
  for (int d = 0; d <= 5; ++d)
    for (const auto& cell : model.cells(d))
      EXPECT_FALSE(std::all_of(cell.begin(), cell.end(),
                               [](CellRole r) { return r == CellRole::Disc; }));
}

TEST(CellModel, BoundarySquaresToZero) {
  for (auto flavor : {Flavor::Complex, Flavor::Quaternionic}) {
    const auto model = build_cell_model(combinatorics::cube(2).dual(), flavor);
    for (int d = 2; d <= model.top_dimension(); ++d) {
      const auto& a = model.boundary(d - 1);
      const auto& b = model.boundary(d);
      if (a.rows == 0 || b.cols == 0 || a.cols == 0) continue;
      EXPECT_TRUE((a.to_dense() * b.to_dense()).is_zero()) << d;
    }
  }
}

TEST(CellModel, CountsMatchCombinatorialFormula) {
  for (auto flavor : {Flavor::Complex, Flavor::Quaternionic})
    for (const auto& k : {points(3), simplex(2).dual(), combinatorics::cube(2).dual()}) {
      const auto model = build_cell_model(k, flavor);
      const auto counts = combinatorial_cell_counts(k, flavor);
      ASSERT_EQ(counts.size(), static_cast<std::size_t>(model.top_dimension() + 1));
      for (int d = 0; d <= model.top_dimension(); ++d)
        EXPECT_EQ(model.cell_count(d), counts[static_cast<std::size_t>(d)]);
    }
}

TEST(CellModel, BudgetEnforced) {
  EXPECT_THROW(build_cell_model(points(11), Flavor::Complex), BudgetError);
  EXPECT_THROW(build_cell_model(points(10), Flavor::Quaternionic), BudgetError);
  EXPECT_THROW(build_cell_model(points(4), Flavor::Complex, 3), BudgetError);
}

TEST(Homology, Spheres) {
  expect_sphere(homology(build_cell_model(points(2), Flavor::Complex)), 3);
  expect_sphere(homology(build_cell_model(points(2), Flavor::Quaternionic)), 7);
  expect_sphere(homology(build_cell_model(simplex(2).dual(), Flavor::Complex)), 5);
  expect_sphere(homology(build_cell_model(simplex(2).dual(), Flavor::Quaternionic)), 11);
}

TEST(Homology, SquareIsProductOfSpheres) {
  // The square's moment-angle complex is S^3 x S^3.
  const auto h = homology(build_cell_model(combinatorics::cube(2).dual(), Flavor::Complex));
  ASSERT_EQ(h.groups.size(), 7u);
  for (std::size_t k = 0; k <= 6; ++k)
    EXPECT_EQ(h.groups[k].free_rank, (k == 0 || k == 6) ? 1u : k == 3 ? 2u : 0u) << k;
}

TEST(Homology, SparseFactorsMatchOracle) {
  const auto model = build_cell_model(points(3), Flavor::Complex);
  for (int d = 1; d <= model.top_dimension(); ++d) {
    const auto& b = model.boundary(d);
    if (b.rows == 0 || b.cols == 0 || b.rows > 8 || b.cols > 8) continue;
    const auto got = sparse_invariant_factors(b);
    const auto want = oracle::invariant_factors(testing_support::to_mat(b.to_dense()));
    EXPECT_EQ(got.rank, want.size());
    for (std::size_t i = 0; i < got.factors.size(); ++i)
      EXPECT_EQ(got.factors[i].get_si(), want[i]);
  }
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_characteristic(build_cell_model(points(2), Flavor::Complex)), 0);
  EXPECT_EQ(euler_characteristic(build_cell_model(points(1), Flavor::Complex)), 1);
  const auto model = build_cell_model(points(3), Flavor::Quaternionic);
  EXPECT_EQ(model.top_dimension(), 10);
  EXPECT_EQ(euler_characteristic(model), homology(model).euler_characteristic());
}

TEST(Dimension, Formulas) {
  EXPECT_EQ(dimension(points(2), Flavor::Complex, 1), 3);
  EXPECT_EQ(dimension(points(2), Flavor::Quaternionic, 1), 7);
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(dimension(simplex(n).dual(), Flavor::Quaternionic, n), 4 * n + 3);
  const auto check = quaternionic_dimension_check(3, 2);
  EXPECT_EQ(check.dimension, 11);
  EXPECT_EQ(check.m_plus_n, 5);
  EXPECT_TRUE(check.mismatch);
}

TEST(Flavor, Parse) {
  EXPECT_EQ(parse_flavor("complex"), Flavor::Complex);
  EXPECT_EQ(parse_flavor("quaternionic"), Flavor::Quaternionic);
  EXPECT_THROW(parse_flavor("real"), DomainError);
}

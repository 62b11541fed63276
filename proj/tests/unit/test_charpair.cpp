#include <gtest/gtest.h>

#include <random>

#include "../support/convert.hpp"
#include "qtoric/charpair.hpp"
#include "qtoric/errors.hpp"

using namespace qtoric;
using namespace qtoric::charpair;
using combinatorics::cube;
using combinatorics::simplex;

namespace {

CharacteristicMatrix cols(std::vector<IntVector> c) { return CharacteristicMatrix::from_columns(c); }

bool mentions(const std::vector<std::string>& failures, const std::string& needle) {
  for (const auto& f : failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Pair, ProjectiveSpacesValid) {
  for (int n = 1; n <= 3; ++n)
    EXPECT_TRUE(validate_characteristic_pair(simplex(n), projective_space_matrix(n)).valid);
}

TEST(Pair, HirzebruchValid) {
  for (long a = -3; a <= 3; ++a)
    EXPECT_TRUE(validate_characteristic_pair(cube(2), hirzebruch_matrix(a)).valid) << a;
}

TEST(Pair, DeterminantFailureNamesVertex) {
  const auto r = validate_characteristic_pair(simplex(2), CharacteristicMatrix(2, 3, IntMatrix{{1, 0, 2}, {0, 1, 0}}));
  EXPECT_FALSE(r.valid);
  bool found = false;
  for (const auto& v : r.vertices)
    if (v.vertex == combinatorics::Face{2, 3}) {
      EXPECT_EQ(v.determinant, -2);
      EXPECT_FALSE(v.ok);
      found = true;
    }
  EXPECT_TRUE(found);
  EXPECT_TRUE(mentions(r.failures, "{2,3}"));
}

TEST(Pair, NonPrimitiveColumnNamed) {
  const auto r = validate_characteristic_pair(
      simplex(2), cols({make_vector({1, 0}), make_vector({0, 1}), make_vector({2, 4})}));
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.columns[2].primitive);
  EXPECT_TRUE(mentions(r.failures, "facet 3"));
}

TEST(Pair, ShapeMismatchThrows) {
  EXPECT_THROW(validate_characteristic_pair(simplex(2), projective_space_matrix(3)), ShapeError);
  EXPECT_THROW(require_valid_pair(simplex(2), cols({make_vector({1, 0}), make_vector({0, 1}),
                                                    make_vector({1, 2})})),
               ValidationError);
  EXPECT_NO_THROW(require_valid_pair(simplex(2), projective_space_matrix(2)));
}

TEST(Pair, VertexDeterminantsMatchCofactorOracle) {
  std::mt19937 rng(23);
  const auto p = cube(3);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = testing_support::random_matrix(rng, 3, 6, -2, 2);
    bool has_zero_col = false;
    for (std::size_t c = 0; c < 6; ++c) has_zero_col = has_zero_col || m.column(c) == IntVector(3, 0);
    if (has_zero_col) continue;
    const CharacteristicMatrix l(3, 6, m);
    const auto r = validate_characteristic_pair(p, l);
    bool expect = true;
    for (const auto& v : r.vertices) {
      const long long d = oracle::det(testing_support::to_mat(l.submatrix(v.vertex)));
      EXPECT_EQ(v.determinant.get_si(), d);
      expect = expect && (d == 1 || d == -1);
    }
    // Unimodular vertex blocks force every lower face to be fine too.
    if (expect) EXPECT_TRUE(r.valid);
    else EXPECT_FALSE(r.valid);
  }
}

TEST(Pair, InvariantUnderAutomorphismRelabeling) {
  const auto p = cube(2);
  for (long a = -2; a <= 2; ++a) {
    const auto l = hirzebruch_matrix(a);
    for (const auto& perm : combinatorics::automorphisms(p.dual())) {
      std::vector<std::size_t> order;
      for (int i : combinatorics::inverse(perm)) order.push_back(static_cast<std::size_t>(i - 1));
      const CharacteristicMatrix moved(2, 4, l.matrix().select_columns(order));
      EXPECT_EQ(validate_characteristic_pair(p, moved).valid,
                validate_characteristic_pair(p, l).valid);
    }
  }
}

TEST(CanonicalModel, Examples) {
  const auto seg = canonical_model_table(simplex(1), projective_space_matrix(1));
  bool saw1 = false, saw2 = false;
  for (const auto& e : seg) {
    if (e.face == combinatorics::Face{1}) { EXPECT_EQ(e.generators, (IntMatrix{{1}})); saw1 = true; }
    if (e.face == combinatorics::Face{2}) { EXPECT_EQ(e.generators, (IntMatrix{{-1}})); saw2 = true; }
  }
  EXPECT_TRUE(saw1 && saw2);
  for (const auto& e : canonical_model_table(simplex(2), projective_space_matrix(2)))
    if (e.face == combinatorics::Face{1, 2}) EXPECT_EQ(e.generators, IntMatrix::identity(2));
  for (long a = 0; a <= 3; ++a)
    for (const auto& e : canonical_model_table(cube(2), hirzebruch_matrix(a)))
      if (e.face == combinatorics::Face{2, 3})
        EXPECT_EQ(e.generators, (IntMatrix{{0, -1}, {1, a}}));
}

TEST(Functor, InjectivityFailures) {
  const auto dup = validate_quaternionic_functor(simplex(1), {1, {{1}, {1}}});
  EXPECT_FALSE(dup.valid);
  EXPECT_FALSE(dup.injective);
  const auto sq = validate_quaternionic_functor(cube(2), {2, {{1}, {2}, {1}, {2}}});
  EXPECT_FALSE(sq.valid);
  EXPECT_FALSE(sq.injective);
  for (const auto& v : sq.vertices) EXPECT_TRUE(v.disjoint);
}

TEST(Functor, VertexDisjointness) {
  const auto r = validate_quaternionic_functor(simplex(2), {3, {{1}, {1, 2}, {3}}});
  EXPECT_FALSE(r.valid);
  bool bad = false;
  for (const auto& v : r.vertices) bad = bad || !v.disjoint;
  EXPECT_TRUE(bad);
}

TEST(Functor, AcceptsSimplexAndSquare) {
  EXPECT_TRUE(validate_quaternionic_functor(simplex(1), {2, {{1}, {2}}}).valid);
  EXPECT_TRUE(validate_quaternionic_functor(simplex(2), {3, {{1}, {2}, {3}}}).valid);
  EXPECT_TRUE(validate_quaternionic_functor(cube(2), {4, {{1}, {2}, {3}, {4}}}).valid);
}

TEST(Functor, MalformedLabelsThrow) {
  EXPECT_THROW(validate_quaternionic_functor(simplex(1), {2, {{1}}}), ValidationError);
  EXPECT_THROW(validate_quaternionic_functor(simplex(1), {2, {{1}, {}}}), ValidationError);
  EXPECT_THROW(validate_quaternionic_functor(simplex(1), {2, {{1}, {3}}}), ValidationError);
}

TEST(Functor, CoordinatePermutationInvariance) {
  const QuaternionicIsotropyFunctor f{3, {{1}, {2, 3}, {3}}};
  const QuaternionicIsotropyFunctor g{3, {{3}, {1, 2}, {2}}};  // 1->3, 2->1, 3->2
  const auto p = simplex(2);
  EXPECT_EQ(validate_quaternionic_functor(p, f).valid, validate_quaternionic_functor(p, g).valid);
}

TEST(Global, Examples) {
  EXPECT_TRUE(validate_global({2, {{1}, {2}}}));
  EXPECT_FALSE(validate_global({3, {{1, 2}, {2, 3}}}));
  EXPECT_TRUE(validate_global({2, {{1}, {1, 2}}}));
}

TEST(Global, FaceLabelTuple) {
  const QuaternionicIsotropyFunctor f{3, {{1}, {2}, {3}}};
  EXPECT_EQ(face_label_tuple(f, {1, 3}), (std::vector<combinatorics::Face>{{1}, {3}}));
}

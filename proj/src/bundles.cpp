#include "qtoric/bundles.hpp"

#include "qtoric/errors.hpp"
#include "qtoric/intlat.hpp"

namespace qtoric::bundles {
namespace {

// Lexicographically first n-subset of columns with determinant +-1.
std::optional<std::vector<std::size_t>> unimodular_columns(const IntMatrix& l) {
  const std::size_t n = l.rows();
  const std::size_t m = l.cols();
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  if (n > m) return std::nullopt;
  for (;;) {
    if (intlat::is_unimodular(l.select_columns(pick))) return pick;
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

KernelSequence kernel_sequence(const charpair::CharacteristicMatrix& l) {
  const IntMatrix& lam = l.matrix();
  KernelSequence seq;
  seq.kernel = intlat::kernel_basis(lam);
  const auto n = lam.rows();
  const auto m = lam.cols();
  seq.section = IntMatrix(m, n);
  if (auto cols = unimodular_columns(lam)) {
    const IntMatrix inv = intlat::inverse_unimodular(lam.select_columns(*cols));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) seq.section((*cols)[r], c) = inv(r, c);
    return seq;
  }
  const auto snf = intlat::smith_normal_form(lam);
  if (snf.rank() != n || snf.invariant_factors().back() != 1)
    throw ValidationError(
        "characteristic matrix is not onto Z^n; the kernel sequence does not "
        "split over the integers");
  // Lambda = U^-1 [I 0] V^-1, so V [I; 0] U is a right inverse.
  IntMatrix embed(m, n);
  for (std::size_t i = 0; i < n; ++i) embed(i, i) = 1;
  seq.section = snf.V * embed * snf.U;
  return seq;
}

IntMatrix coordinate_matrix(const std::vector<cohomology::CohomologyClass>& classes,
                            std::size_t width) {
  std::vector<IntVector> rows;
  for (const auto& c : classes) rows.push_back(c.coordinates);
  return IntMatrix::from_rows(rows, width);
}

ChernTuple kernel_chern_classes(const combinatorics::SimplePolytope& p,
                                const charpair::CharacteristicMatrix& l,
                                bool diagnostics) {
  charpair::require_valid_pair(p, l);
  return kernel_chern_classes(p, l, kernel_sequence(l).kernel, diagnostics);
}

ChernTuple kernel_chern_classes(const combinatorics::SimplePolytope& p,
                                const charpair::CharacteristicMatrix& l,
                                const IntMatrix& kernel, bool diagnostics) {
  const auto pres = cohomology::quasitoric_presentation(p, l);
  const auto h2 = cohomology::graded_component(pres, 2);
  if (h2.relations.rows() != 0)
    throw IntegrityError("degree-2 component carries relations");
  const std::size_t width = h2.basis.size();
  const std::size_t m = static_cast<std::size_t>(l.m());
  if (kernel.cols() != m || kernel.rows() != m - static_cast<std::size_t>(l.n()))
    throw ShapeError("kernel basis must be (m-n) x m");
  if (!(l.matrix() * kernel.transpose()).is_zero())
    throw ValidationError("kernel rows are not in the kernel of Lambda");

  std::vector<cohomology::CohomologyClass> x;
  for (int i = 1; i <= l.m(); ++i) x.push_back(cohomology::facet_class(pres, i));

  // Solve A^T c = x one coordinate of H^2 at a time.
  const IntMatrix at = kernel.transpose();
  const std::size_t r = kernel.rows();
  std::vector<IntVector> coords(r, IntVector(width, Integer(0)));
  for (std::size_t t = 0; t < width; ++t) {
    IntVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = x[i].coordinates[t];
    const auto sol = intlat::solve_integer(at, rhs);
    if (!sol)
      throw IntegrityError(
          "facet classes are not an integral combination of kernel rows");
    for (std::size_t k = 0; k < r; ++k) coords[k][t] = (*sol)[k];
  }

  ChernTuple tuple;
  for (auto& c : coords) tuple.classes.push_back(h2.reduce(std::move(c)));

  // x_i = sum_k a_ki c^(k) must hold exactly.
  for (std::size_t i = 0; i < m; ++i) {
    IntVector lhs(width, Integer(0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t t = 0; t < width; ++t)
        lhs[t] += kernel(k, i) * tuple.classes[k].coordinates[t];
    if (h2.reduce(lhs) != x[i])
      throw IntegrityError("kernel class system does not reproduce facet class " +
                           std::to_string(i + 1));
  }
  tuple.basis = verify_chern_basis(tuple.classes, pres);

  if (diagnostics) {
    std::vector<cohomology::CohomologyClass> alt;
    for (std::size_t k = 0; k < r; ++k)
      alt.push_back(cohomology::facet_combination(pres, kernel.row(k)));
    tuple.row_formula_classes = std::move(alt);
  }
  return tuple;
}

bool verify_chern_basis(const std::vector<cohomology::CohomologyClass>& classes,
                        const cohomology::GradedRingPresentation& pres) {
  const auto h2 = cohomology::graded_component(pres, pres.generator_degree);
  if (!h2.group.torsion.empty()) return false;
  if (classes.size() != h2.group.free_rank) return false;
  for (const auto& c : classes)
    if (c.degree != h2.degree || c.coordinates.size() != h2.basis.size())
      return false;
  const IntMatrix stacked =
      coordinate_matrix(classes, h2.basis.size()).stack(h2.relations);
  const auto factors = intlat::invariant_factors(stacked);
  if (factors.size() != h2.basis.size()) return false;
  for (const auto& d : factors)
    if (d != 1) return false;
  return true;
}

H4Presentation simplex_h4(int n) {
  H4Presentation h;
  h.rank = 1;
  h.facet_classes.assign(static_cast<std::size_t>(n + 1), make_vector({1}));
  return h;
}

IntMatrix standard_simplex_kernel_map(int n) {
  IntMatrix b(1, static_cast<std::size_t>(n + 1));
  b(0, 0) = 1;
  return b;
}

QuaternionicPrimaryTuple quaternionic_primary_tuple(
    const combinatorics::SimplePolytope& p,
    const charpair::QuaternionicIsotropyFunctor& f,
    const std::optional<H4Presentation>& h4, const IntMatrix& b) {
  charpair::require_valid_functor(p, f);
  const auto m = static_cast<std::size_t>(p.facet_count());
  const auto r = m - static_cast<std::size_t>(p.dim());
  H4Presentation pres;
  if (h4) {
    pres = *h4;
  } else if (p.facet_count() == p.dim() + 1) {
    pres = simplex_h4(p.dim());
  } else {
    throw UnsupportedError(
        "no degree-4 presentation for this quoric base; supply one (a general "
        "matrix formula for these classes is an open combinatorial problem)");
  }
  if (pres.facet_classes.size() != m)
    throw ShapeError("H4 presentation must list one class per facet");
  for (const auto& y : pres.facet_classes)
    if (y.size() != pres.rank) throw ShapeError("facet class has wrong rank");
  if (b.rows() != r || b.cols() != m)
    throw ShapeError("kernel map must be " + std::to_string(r) + "x" +
                     std::to_string(m) + ", got " + std::to_string(b.rows()) +
                     "x" + std::to_string(b.cols()));

  QuaternionicPrimaryTuple tuple;
  tuple.base_dim = 4 * p.dim();
  for (std::size_t k = 0; k < r; ++k) {
    IntVector c(pres.rank, Integer(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t t = 0; t < pres.rank; ++t)
        c[t] += b(k, i) * pres.facet_classes[i][t];
    tuple.classes.push_back(std::move(c));
  }
  return tuple;
}

}  // namespace qtoric::bundles

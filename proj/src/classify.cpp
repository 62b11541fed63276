#include "qtoric/classify.hpp"

#include <algorithm>

#include "qtoric/errors.hpp"
#include "qtoric/intlat.hpp"

namespace qtoric::classify {
namespace {

using charpair::CharacteristicMatrix;

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Columns of `l` permuted so that column i becomes column perm(i) of `l2`'s
// labeling: result[:, i] = l2[:, perm(i)].
CharacteristicMatrix pull_back(const CharacteristicMatrix& l2,
                               const Permutation& perm) {
  std::vector<std::size_t> cols;
  for (int image : perm) cols.push_back(static_cast<std::size_t>(image - 1));
  return CharacteristicMatrix(l2.n(), l2.m(), l2.matrix().select_columns(cols));
}

std::vector<cohomology::CohomologyClass> transport(
    const std::vector<cohomology::CohomologyClass>& classes,
    const cohomology::GradedRingPresentation& from,
    const cohomology::GradedRingPresentation& to,
    const EquivalenceCertificate& cert) {
  // x_sigma(j) -> signs[j] * x'_j
  const Permutation inv = combinatorics::inverse(cert.sigma);
  std::vector<cohomology::CohomologyClass> out;
  for (const auto& c : classes) {
    IntVector coeffs(static_cast<std::size_t>(to.m), Integer(0));
    for (std::size_t t = 0; t < c.coordinates.size(); ++t) {
      const int i = from.free_generators[t];
      const auto j = static_cast<std::size_t>(inv[static_cast<std::size_t>(i - 1)] - 1);
      coeffs[j] += c.coordinates[t] * cert.signs[j];
    }
    out.push_back(cohomology::facet_combination(to, coeffs));
  }
  return out;
}

}  // namespace

bool verify_certificate(const CharacteristicMatrix& l,
                        const CharacteristicMatrix& l2,
                        const EquivalenceCertificate& cert) {
  if (l.n() != l2.n() || l.m() != l2.m()) return false;
  if (!intlat::is_unimodular(cert.delta)) return false;
  if (cert.sigma.size() != static_cast<std::size_t>(l.m()) ||
      cert.signs.size() != cert.sigma.size())
    return false;
  for (int j = 1; j <= l.m(); ++j) {
    const int s = cert.signs[static_cast<std::size_t>(j - 1)];
    if (s != 1 && s != -1) return false;
    IntVector image = cert.delta * l.column(cert.sigma[static_cast<std::size_t>(j - 1)]);
    if (s == -1) image = negated(std::move(image));
    if (image != l2.column(j)) return false;
  }
  return true;
}

std::optional<EquivalenceCertificate> equivalent_pairs(
    const combinatorics::SimplePolytope& p, const CharacteristicMatrix& l,
    const CharacteristicMatrix& l2, std::size_t bound) {
  if (l.m() != l2.m() || l.n() != l2.n() || l.m() != p.facet_count() ||
      l.n() != p.dim())
    throw IncomparableError("characteristic matrices live over different polytopes");
  charpair::require_valid_pair(p, l);
  charpair::require_valid_pair(p, l2);

  const auto& anchor = p.dual().maximal_faces().front();
  const auto n = static_cast<std::size_t>(p.dim());
  const IntMatrix target = l2.submatrix(anchor);

  for (const auto& sigma : combinatorics::automorphisms(p.dual(), bound)) {
    for (unsigned pattern = 0; pattern < (1u << n); ++pattern) {
      IntMatrix block(n, n);
      for (std::size_t c = 0; c < n; ++c) {
        const int src = sigma[static_cast<std::size_t>(anchor[c] - 1)];
        IntVector col = l.column(src);
        if (pattern >> c & 1) col = negated(std::move(col));
        for (std::size_t r = 0; r < n; ++r) block(r, c) = col[r];
      }
      EquivalenceCertificate cert;
      cert.delta = target * intlat::inverse_unimodular(block);
      cert.sigma = sigma;
      cert.signs.assign(static_cast<std::size_t>(l.m()), 1);
      bool ok = true;
      for (int j = 1; j <= l.m() && ok; ++j) {
        const IntVector image =
            cert.delta * l.column(sigma[static_cast<std::size_t>(j - 1)]);
        const IntVector want = l2.column(j);
        if (image == want)
          cert.signs[static_cast<std::size_t>(j - 1)] = 1;
        else if (negated(image) == want)
          cert.signs[static_cast<std::size_t>(j - 1)] = -1;
        else
          ok = false;
      }
      if (ok) return cert;
    }
  }
  return std::nullopt;
}

bool compare_kernel_bundles(const bundles::ChernTuple& t,
                            const bundles::ChernTuple& t2,
                            const cohomology::GradedRingPresentation& pres) {
  const auto h2 = cohomology::graded_component(pres, pres.generator_degree);
  const std::size_t width = h2.basis.size();
  for (const auto* tuple : {&t, &t2})
    for (const auto& c : tuple->classes)
      if (c.degree != h2.degree || c.coordinates.size() != width)
        throw IncomparableError("tuple does not live in this presentation");
  const IntMatrix a =
      bundles::coordinate_matrix(t.classes, width).stack(h2.relations);
  const IntMatrix b =
      bundles::coordinate_matrix(t2.classes, width).stack(h2.relations);
  return intlat::hermite_row_form(a) == intlat::hermite_row_form(b);
}

std::string to_string(Level level) {
  switch (level) {
    case Level::Equivalent:
      return "equivalent";
    case Level::Inequivalent:
      return "inequivalent";
    case Level::PrimaryEquivalent:
      return "primary-equivalent";
    case Level::PrimaryDistinct:
      return "primary-distinct";
    case Level::Incomparable:
      return "incomparable";
  }
  return "incomparable";
}

int exit_code(Level level) {
  switch (level) {
    case Level::Equivalent:
    case Level::PrimaryEquivalent:
      return 0;
    case Level::Inequivalent:
    case Level::PrimaryDistinct:
      return 3;
    case Level::Incomparable:
      return 4;
  }
  return 4;
}

RigidityVerdict rigidity_verdict_complex(const combinatorics::SimplePolytope& p,
                                         const CharacteristicMatrix& l,
                                         const combinatorics::SimplePolytope& p2,
                                         const CharacteristicMatrix& l2,
                                         std::size_t bound) {
  charpair::require_valid_pair(p, l);
  charpair::require_valid_pair(p2, l2);
  RigidityVerdict verdict;
  if (p.dim() != p2.dim()) return verdict;
  const auto iso = combinatorics::find_isomorphism(p.dual(), p2.dual(), bound);
  if (!iso) return verdict;
  verdict.isomorphism = iso;

  // Relabel the second pair onto the first polytope's facets.
  const CharacteristicMatrix pulled = pull_back(l2, *iso);
  const auto cert = equivalent_pairs(p, l, pulled, bound);
  if (!cert) {
    verdict.level = Level::Inequivalent;
    return verdict;
  }
  verdict.level = Level::Equivalent;
  verdict.certificate = cert;

  // Equivalent pairs must carry the same kernel bundle.
  const auto pres = cohomology::quasitoric_presentation(p, l);
  const auto pres2 = cohomology::quasitoric_presentation(p, pulled);
  const auto tuple = bundles::kernel_chern_classes(p, l);
  const auto tuple2 = bundles::kernel_chern_classes(p, pulled);
  bundles::ChernTuple moved;
  moved.classes = transport(tuple.classes, pres, pres2, *cert);
  verdict.equal_sublattice = compare_kernel_bundles(moved, tuple2, pres2);
  if (!*verdict.equal_sublattice)
    throw IntegrityError("equivalent pairs produced different kernel bundles");
  return verdict;
}

bool functors_match(const charpair::QuaternionicIsotropyFunctor& f,
                    const charpair::QuaternionicIsotropyFunctor& f2,
                    const Permutation& facet_map) {
  if (f.n_act != f2.n_act || f.labels.size() != f2.labels.size()) return false;
  // A coordinate bijection tau with tau(gamma_i) = gamma'_phi(i) exists iff
  // the coordinates' facet memberships agree as multisets.
  auto memberships = [](const charpair::QuaternionicIsotropyFunctor& g,
                        const Permutation* relabel) {
    std::vector<combinatorics::Face> sets(static_cast<std::size_t>(g.n_act));
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
      const int facet = relabel ? (*relabel)[i] : static_cast<int>(i + 1);
      for (int a : g.labels[i]) sets[static_cast<std::size_t>(a - 1)].push_back(facet);
    }
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    return sets;
  };
  return memberships(f, &facet_map) == memberships(f2, nullptr);
}

RigidityVerdict rigidity_verdict_quaternionic(
    const combinatorics::SimplePolytope& p,
    const charpair::QuaternionicIsotropyFunctor& f,
    const bundles::QuaternionicPrimaryTuple& t,
    const combinatorics::SimplePolytope& p2,
    const charpair::QuaternionicIsotropyFunctor& f2,
    const bundles::QuaternionicPrimaryTuple& t2, int base_dim,
    std::size_t bound) {
  charpair::require_valid_functor(p, f);
  charpair::require_valid_functor(p2, f2);
  RigidityVerdict verdict;
  verdict.symmetry_policy =
      "all dual-complex automorphisms, any bijection of acting coordinates";
  if (base_dim != 4 * p.dim())
    throw ShapeError("base dimension " + std::to_string(base_dim) +
                     " does not match 4n = " + std::to_string(4 * p.dim()));
  if (p.dim() != p2.dim()) return verdict;
  const auto isos = combinatorics::isomorphisms(p.dual(), p2.dual(), bound);
  if (isos.empty()) return verdict;
  verdict.isomorphism = isos.front();

  if (t.classes.size() != t2.classes.size())
    throw IncomparableError("primary tuples have different lengths");
  std::size_t width = 0;
  for (const auto* tuple : {&t, &t2})
    for (const auto& c : tuple->classes) {
      if (width == 0) width = c.size();
      if (c.size() != width)
        throw IncomparableError("primary tuples live in different presentations");
    }
  const bool same_lattice =
      intlat::hermite_row_form(IntMatrix::from_rows(t.classes, width)) ==
      intlat::hermite_row_form(IntMatrix::from_rows(t2.classes, width));
  verdict.equal_sublattice = same_lattice;

  bool match = false;
  for (const auto& phi : isos)
    if (functors_match(f, f2, phi)) {
      verdict.isomorphism = phi;
      match = true;
      break;
    }

  const bool same = match && same_lattice;
  if (base_dim == 4)
    verdict.level = same ? Level::Equivalent : Level::Inequivalent;
  else
    verdict.level = same ? Level::PrimaryEquivalent : Level::PrimaryDistinct;
  if (base_dim > 4 && verdict.level == Level::Equivalent)
    throw IntegrityError("primary invariants cannot decide equivalence above dimension 4");
  return verdict;
}

}  // namespace qtoric::classify

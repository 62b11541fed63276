#include "qtoric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qtoric/errors.hpp"

namespace qtoric::cohomology {
namespace {

using Polynomial = std::map<Monomial, Integer>;

// Exponent vectors of total degree k in `vars` variables, lexicographically
// descending (first variable largest).
void monomials_rec(int vars, int k, std::size_t pos, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[pos] = e;
    monomials_rec(vars, k - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Monomial> monomials(int vars, int k) {
  std::vector<Monomial> out;
  if (vars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Monomial cur(static_cast<std::size_t>(vars), 0);
  monomials_rec(vars, k, 0, cur, out);
  return out;
}

Polynomial multiply_linear(const Polynomial& p, const IntVector& linear) {
  Polynomial out;
  for (const auto& [mono, coeff] : p)
    for (std::size_t j = 0; j < linear.size(); ++j) {
      if (linear[j] == 0) continue;
      Monomial next = mono;
      ++next[j];
      Integer& slot = out[next];
      slot += coeff * linear[j];
      if (slot == 0) out.erase(next);
    }
  return out;
}

void check_degree(const GradedRingPresentation& pres, int degree) {
  if (degree < 0 || degree % pres.generator_degree != 0)
    throw DomainError("degree " + std::to_string(degree) +
                      " is not a nonnegative multiple of " +
                      std::to_string(pres.generator_degree));
  if (degree > pres.max_degree)
    throw DomainError("degree " + std::to_string(degree) +
                      " exceeds the computed range (max " +
                      std::to_string(pres.max_degree) + ")");
}

std::size_t index_of(const std::vector<Monomial>& basis, const Monomial& m) {
  // basis is sorted descending
  auto it = std::lower_bound(basis.begin(), basis.end(), m,
                             [](const Monomial& a, const Monomial& b) {
                               return a > b;
                             });
  if (it == basis.end() || *it != m)
    throw IntegrityError("monomial missing from component basis");
  return static_cast<std::size_t>(it - basis.begin());
}

// Memoizes components for computations that touch a degree repeatedly.
class ComponentCache {
 public:
  explicit ComponentCache(const GradedRingPresentation& pres) : pres_(pres) {}
  const GradedComponent& get(int degree) {
    auto it = cache_.find(degree);
    if (it == cache_.end())
      it = cache_.emplace(degree, graded_component(pres_, degree)).first;
    return it->second;
  }

 private:
  const GradedRingPresentation& pres_;
  std::map<int, GradedComponent> cache_;
};

CohomologyClass multiply_in(ComponentCache& cache,
                            const GradedRingPresentation& pres,
                            const CohomologyClass& a, const CohomologyClass& b) {
  const int degree = a.degree + b.degree;
  check_degree(pres, degree);
  const auto& ca = cache.get(a.degree);
  const auto& cb = cache.get(b.degree);
  const auto& target = cache.get(degree);
  if (a.coordinates.size() != ca.basis.size() ||
      b.coordinates.size() != cb.basis.size())
    throw IncomparableError("class does not belong to this presentation");
  IntVector coords(target.basis.size(), Integer(0));
  for (std::size_t i = 0; i < ca.basis.size(); ++i) {
    if (a.coordinates[i] == 0) continue;
    for (std::size_t j = 0; j < cb.basis.size(); ++j) {
      if (b.coordinates[j] == 0) continue;
      Monomial prod = ca.basis[i];
      for (std::size_t t = 0; t < prod.size(); ++t) prod[t] += cb.basis[j][t];
      coords[index_of(target.basis, prod)] += a.coordinates[i] * b.coordinates[j];
    }
  }
  return target.reduce(std::move(coords));
}

}  // namespace

int GradedRingPresentation::top_degree() const {
  if (is_quasitoric())
    return generator_degree * static_cast<int>(linear_relations.rows());
  return max_degree;
}

CohomologyClass GradedComponent::reduce(IntVector coords) const {
  if (coords.size() != basis.size())
    throw ShapeError("class has " + std::to_string(coords.size()) +
                     " coordinates, component basis has " +
                     std::to_string(basis.size()));
  return {degree, intlat::reduce_modulo(relations, std::move(coords))};
}

CohomologyClass GradedComponent::zero() const {
  return {degree, IntVector(basis.size(), Integer(0))};
}

GradedRingPresentation sr_presentation(const combinatorics::SimplicialComplex& k,
                                       int generator_degree) {
  if (generator_degree != 2 && generator_degree != 4)
    throw DomainError("generator degree must be 2 or 4");
  GradedRingPresentation pres;
  pres.m = k.vertex_count();
  pres.generator_degree = generator_degree;
  pres.monomial_ideal = combinatorics::minimal_non_faces(k);
  pres.linear_relations = IntMatrix(0, static_cast<std::size_t>(pres.m));
  for (int i = 1; i <= pres.m; ++i) pres.free_generators.push_back(i);
  pres.substitution = IntMatrix::identity(static_cast<std::size_t>(pres.m));
  pres.max_degree = 2 * generator_degree * (k.dimension() + 1);
  return pres;
}

GradedRingPresentation quasitoric_presentation(
    const combinatorics::SimplePolytope& p,
    const charpair::CharacteristicMatrix& l) {
  charpair::require_valid_pair(p, l);
  GradedRingPresentation pres = sr_presentation(p.dual(), 2);
  pres.linear_relations = l.matrix();

  // Lexicographically first vertex with a unimodular column block.
  const Face* chosen = nullptr;
  for (const auto& v : p.dual().maximal_faces())
    if (intlat::is_unimodular(l.submatrix(v))) {
      chosen = &v;
      break;
    }
  if (!chosen) throw ValidationError("no vertex with unimodular columns");

  pres.eliminated = *chosen;
  pres.free_generators.clear();
  for (int i = 1; i <= pres.m; ++i)
    if (!std::binary_search(chosen->begin(), chosen->end(), i))
      pres.free_generators.push_back(i);

  // Lambda_V v_V + Lambda_W v_W = 0  =>  v_V = -Lambda_V^{-1} Lambda_W v_W.
  const IntMatrix inv = intlat::inverse_unimodular(l.submatrix(*chosen));
  const IntMatrix solved = inv * l.submatrix(pres.free_generators);
  const auto f = pres.free_generators.size();
  pres.substitution = IntMatrix(static_cast<std::size_t>(pres.m), f);
  for (std::size_t r = 0; r < chosen->size(); ++r)
    for (std::size_t c = 0; c < f; ++c)
      pres.substitution(static_cast<std::size_t>((*chosen)[r] - 1), c) =
          -solved(r, c);
  for (std::size_t c = 0; c < f; ++c)
    pres.substitution(static_cast<std::size_t>(pres.free_generators[c] - 1), c) =
        1;
  pres.max_degree = 2 * 2 * p.dim();
  return pres;
}

GradedComponent graded_component(const GradedRingPresentation& pres,
                                 int degree) {
  check_degree(pres, degree);
  const int k = degree / pres.generator_degree;
  GradedComponent comp;
  comp.degree = degree;
  comp.basis = monomials(pres.free_count(), k);

  std::vector<combinatorics::FaceMask> non_faces;
  for (const auto& f : pres.monomial_ideal)
    non_faces.push_back(combinatorics::to_mask(f));

  std::vector<IntVector> rows;
  for (const auto& mono : monomials(pres.m, k)) {
    combinatorics::FaceMask support = 0;
    for (int i = 0; i < pres.m; ++i)
      if (mono[static_cast<std::size_t>(i)] > 0)
        support |= combinatorics::FaceMask{1} << i;
    const bool in_ideal =
        std::any_of(non_faces.begin(), non_faces.end(),
                    [support](auto nf) { return (nf & ~support) == 0; });
    if (!in_ideal) continue;
    Polynomial image{{Monomial(static_cast<std::size_t>(pres.free_count()), 0),
                      Integer(1)}};
    for (int i = 0; i < pres.m; ++i)
      for (int e = 0; e < mono[static_cast<std::size_t>(i)]; ++e)
        image = multiply_linear(image,
                                pres.substitution.row(static_cast<std::size_t>(i)));
    IntVector row(comp.basis.size(), Integer(0));
    for (const auto& [m, c] : image) row[index_of(comp.basis, m)] = c;
    rows.push_back(std::move(row));
  }
  const IntMatrix rel = IntMatrix::from_rows(rows, comp.basis.size());
  comp.relations = intlat::hermite_row_form(rel);
  comp.group = intlat::cokernel(comp.relations);
  return comp;
}

CohomologyClass unit(const GradedRingPresentation& pres) {
  return graded_component(pres, 0).reduce(make_vector({1}));
}

CohomologyClass facet_class(const GradedRingPresentation& pres, int i) {
  if (i < 1 || i > pres.m)
    throw DomainError("facet index " + std::to_string(i) + " outside 1.." +
                      std::to_string(pres.m));
  return graded_component(pres, pres.generator_degree)
      .reduce(pres.substitution.row(static_cast<std::size_t>(i - 1)));
}

CohomologyClass facet_combination(const GradedRingPresentation& pres,
                                  const IntVector& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(pres.m))
    throw ShapeError("facet combination needs one coefficient per facet");
  IntVector coords(static_cast<std::size_t>(pres.free_count()), Integer(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      coords[j] += coeffs[i] * pres.substitution(i, j);
  return graded_component(pres, pres.generator_degree).reduce(std::move(coords));
}

CohomologyClass add(const GradedRingPresentation& pres,
                    const CohomologyClass& a, const CohomologyClass& b) {
  if (a.degree != b.degree || a.coordinates.size() != b.coordinates.size())
    throw ShapeError("cannot add classes of different degrees");
  IntVector coords = a.coordinates;
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += b.coordinates[i];
  return graded_component(pres, a.degree).reduce(std::move(coords));
}

CohomologyClass scale(const GradedRingPresentation& pres,
                      const CohomologyClass& a, const Integer& factor) {
  IntVector coords = a.coordinates;
  for (auto& c : coords) c *= factor;
  return graded_component(pres, a.degree).reduce(std::move(coords));
}

CohomologyClass multiply(const GradedRingPresentation& pres,
                         const CohomologyClass& a, const CohomologyClass& b) {
  ComponentCache cache(pres);
  return multiply_in(cache, pres, a, b);
}

std::vector<CohomologyClass> total_chern_class(
    const GradedRingPresentation& pres) {
  if (!pres.is_quasitoric())
    throw DomainError("total Chern class needs a quasitoric presentation");
  ComponentCache cache(pres);
  const int step = pres.generator_degree;
  const int top = pres.top_degree();
  std::vector<CohomologyClass> parts;
  for (int d = 0; d <= top; d += step) parts.push_back(cache.get(d).zero());
  parts[0] = cache.get(0).reduce(make_vector({1}));
  for (int i = 1; i <= pres.m; ++i) {
    const CohomologyClass x =
        cache.get(step).reduce(pres.substitution.row(static_cast<std::size_t>(i - 1)));
    for (std::size_t d = parts.size() - 1; d >= 1; --d) {
      const CohomologyClass term = multiply_in(cache, pres, parts[d - 1], x);
      IntVector coords = parts[d].coordinates;
      for (std::size_t t = 0; t < coords.size(); ++t)
        coords[t] += term.coordinates[t];
      parts[d] = cache.get(parts[d].degree).reduce(std::move(coords));
    }
  }
  return parts;
}

std::string render(const GradedRingPresentation& pres,
                   const CohomologyClass& c) {
  const auto comp = graded_component(pres, c.degree);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.coordinates.size(); ++i) {
    const Integer& coeff = c.coordinates[i];
    if (coeff == 0) continue;
    if (!first) os << (coeff < 0 ? " - " : " + ");
    else if (coeff < 0) os << '-';
    first = false;
    const Integer mag = abs(coeff);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t j = 0; j < comp.basis[i].size(); ++j) {
      const int e = comp.basis[i][j];
      if (e == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << 'v' << pres.free_generators[j];
      if (e > 1) mono << '^' << e;
    }
    if (!any) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << mono.str();
    }
  }
  return first ? "0" : os.str();
}

}  // namespace qtoric::cohomology

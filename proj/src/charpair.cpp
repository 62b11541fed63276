#include "qtoric/charpair.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "qtoric/errors.hpp"
#include "qtoric/intlat.hpp"

namespace qtoric::charpair {
namespace {

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  return s + "}";
}

}  // namespace

CharacteristicMatrix::CharacteristicMatrix(int n, int m, IntMatrix entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
  if (n_ < 1 || m_ < 1) throw ShapeError("characteristic matrix needs n, m >= 1");
  if (entries_.rows() != static_cast<std::size_t>(n_) ||
      entries_.cols() != static_cast<std::size_t>(m_))
    throw ShapeError("characteristic matrix declared " + std::to_string(n_) +
                     "x" + std::to_string(m_) + " but has shape " +
                     std::to_string(entries_.rows()) + "x" +
                     std::to_string(entries_.cols()));
}

CharacteristicMatrix CharacteristicMatrix::from_columns(
    const std::vector<IntVector>& columns) {
  if (columns.empty()) throw ShapeError("characteristic matrix has no columns");
  const std::size_t n = columns.front().size();
  return CharacteristicMatrix(static_cast<int>(n),
                              static_cast<int>(columns.size()),
                              IntMatrix::from_columns(columns, n));
}

IntVector CharacteristicMatrix::column(int facet) const {
  if (facet < 1 || facet > m_) throw DomainError("facet index out of range");
  return entries_.column(static_cast<std::size_t>(facet - 1));
}

IntMatrix CharacteristicMatrix::submatrix(const Face& facets) const {
  std::vector<std::size_t> cols;
  for (int i : facets) cols.push_back(static_cast<std::size_t>(i - 1));
  return entries_.select_columns(cols);
}

PairReport validate_characteristic_pair(const SimplePolytope& p,
                                        const CharacteristicMatrix& l) {
  if (l.m() != p.facet_count() || l.n() != p.dim())
    throw ShapeError("characteristic matrix is " + std::to_string(l.n()) + "x" +
                     std::to_string(l.m()) + " but the polytope has n=" +
                     std::to_string(p.dim()) +
                     ", m=" + std::to_string(p.facet_count()));
  PairReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.failures.push_back(std::move(msg));
  };

  for (int i = 1; i <= l.m(); ++i) {
    const IntVector col = l.column(i);
    const bool primitive = intlat::gcd(col) == 1;
    report.columns.push_back({i, primitive});
    if (!primitive)
      fail("facet " + std::to_string(i) + ": column " + to_string(col) +
           " is not primitive");
  }

  const auto faces = combinatorics::enumerate_faces(p.dual());
  for (const auto& group : faces)
    for (const auto& face : group) {
      const IntMatrix sub = l.submatrix(face);
      if (face.size() == static_cast<std::size_t>(p.dim())) {
        const Integer det = determinant(sub);
        const bool ok = det == 1 || det == -1;
        report.vertices.push_back({face, det, ok});
        if (!ok)
          fail("vertex " + face_str(face) + ": determinant " + det.get_str() +
               " is not +-1");
      } else {
        const Integer g = intlat::maximal_minor_gcd(sub.transpose());
        const bool ok = g == 1;
        report.faces.push_back({face, g, ok});
        if (!ok)
          fail("face " + face_str(face) + ": gcd of maximal minors is " +
               g.get_str());
      }
    }
  return report;
}

void require_valid_pair(const SimplePolytope& p, const CharacteristicMatrix& l) {
  const auto report = validate_characteristic_pair(p, l);
  if (!report.valid)
    throw ValidationError("invalid characteristic pair: " +
                          report.failures.front());
}

std::vector<IsotropyEntry> canonical_model_table(const SimplePolytope& p,
                                                 const CharacteristicMatrix& l) {
  require_valid_pair(p, l);
  std::vector<IsotropyEntry> out;
  for (const auto& pf : combinatorics::face_poset(p))
    out.push_back({pf.facets, l.submatrix(pf.facets)});
  return out;
}

std::vector<Face> face_label_tuple(const QuaternionicIsotropyFunctor& f,
                                   const Face& face) {
  std::vector<Face> labels;
  for (int i : face) labels.push_back(f.labels[static_cast<std::size_t>(i - 1)]);
  std::sort(labels.begin(), labels.end());
  return labels;
}

FunctorReport validate_quaternionic_functor(const SimplePolytope& p,
                                            const QuaternionicIsotropyFunctor& f) {
  if (f.labels.size() != static_cast<std::size_t>(p.facet_count()))
    throw ValidationError("functor has " + std::to_string(f.labels.size()) +
                          " labels, polytope has " +
                          std::to_string(p.facet_count()));
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    const Face& g = f.labels[i];
    if (g.empty())
      throw ValidationError("facet " + std::to_string(i + 1) +
                            " has an empty label");
    for (int a : g)
      if (a < 1 || a > f.n_act)
        throw ValidationError("facet " + std::to_string(i + 1) + " label " +
                              face_str(g) + " leaves 1.." +
                              std::to_string(f.n_act));
  }

  FunctorReport report;
  for (const auto& v : p.dual().maximal_faces()) {
    std::size_t total = 0;
    combinatorics::FaceMask uni = 0;
    for (int i : v) {
      const Face& g = f.labels[static_cast<std::size_t>(i - 1)];
      total += g.size();
      uni |= combinatorics::to_mask(g);
    }
    const bool disjoint =
        static_cast<std::size_t>(std::popcount(uni)) == total;
    report.vertices.push_back({v, disjoint});
    if (!disjoint) {
      report.valid = false;
      report.failures.push_back("vertex " + face_str(v) +
                                ": labels of its facets overlap");
    }
  }

  std::map<std::vector<Face>, Face> seen;
  for (const auto& pf : combinatorics::face_poset(p)) {
    auto key = face_label_tuple(f, pf.facets);
    auto [it, inserted] = seen.emplace(std::move(key), pf.facets);
    if (!inserted) {
      report.injective = false;
      report.valid = false;
      report.collisions.emplace_back(it->second, pf.facets);
      report.failures.push_back("faces " + face_str(it->second) + " and " +
                                face_str(pf.facets) +
                                " receive the same isotropy class");
    }
  }
  return report;
}

void require_valid_functor(const SimplePolytope& p,
                           const QuaternionicIsotropyFunctor& f) {
  const auto report = validate_quaternionic_functor(p, f);
  if (!report.valid)
    throw ValidationError("invalid isotropy functor: " +
                          report.failures.front());
}

bool validate_global(const QuaternionicIsotropyFunctor& f) {
  for (std::size_t a = 0; a < f.labels.size(); ++a)
    for (std::size_t b = a + 1; b < f.labels.size(); ++b) {
      const auto x = combinatorics::to_mask(f.labels[a]);
      const auto y = combinatorics::to_mask(f.labels[b]);
      const bool disjoint = (x & y) == 0;
      const bool nested = (x & ~y) == 0 || (y & ~x) == 0;
      if (!disjoint && !nested) return false;
    }
  return true;
}

CharacteristicMatrix projective_space_matrix(int n) {
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    m(i, i) = 1;
    m(i, static_cast<std::size_t>(n)) = -1;
  }
  return CharacteristicMatrix(n, n + 1, std::move(m));
}

CharacteristicMatrix hirzebruch_matrix(long a) {
  return CharacteristicMatrix(2, 4, IntMatrix{{1, 0, -1, 0}, {0, 1, a, -1}});
}

}  // namespace qtoric::charpair

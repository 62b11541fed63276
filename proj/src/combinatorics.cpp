#include "qtoric/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "qtoric/errors.hpp"

namespace qtoric::combinatorics {
namespace {

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f[i]);
  }
  return s + "}";
}

bool lex_less(const Face& a, const Face& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool size_then_lex(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

// Strong connectivity: maximal faces linked when they share a codimension-one
// face.
bool strongly_connected(const std::vector<FaceMask>& facets) {
  if (facets.empty()) return false;
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (seen[b]) continue;
      const int shared = std::popcount(facets[a] & facets[b]);
      if (shared + 1 == std::popcount(facets[a]) &&
          shared + 1 == std::popcount(facets[b])) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SimplicialComplex& s, const SimplicialComplex& t,
                    std::size_t limit)
      : src_(s), dst_(t), limit_(limit), m_(s.vertex_count()) {
    src_degree_ = degrees(src_);
    dst_degree_ = degrees(dst_);
    dst_set_.insert(dst_.maximal_masks().begin(), dst_.maximal_masks().end());
  }

  std::vector<Permutation> run() {
    if (src_.vertex_count() != dst_.vertex_count() ||
        src_.maximal_masks().size() != dst_.maximal_masks().size())
      return {};
    image_.assign(static_cast<std::size_t>(m_), 0);
    used_ = 0;
    extend(0);
    return found_;
  }

 private:
  static std::vector<std::multiset<int>> degrees(const SimplicialComplex& k) {
    std::vector<std::multiset<int>> d(static_cast<std::size_t>(k.vertex_count()));
    for (FaceMask f : k.maximal_masks())
      for (int v = 0; v < k.vertex_count(); ++v)
        if (f >> v & 1) d[static_cast<std::size_t>(v)].insert(std::popcount(f));
    return d;
  }

  FaceMask map_mask(FaceMask f) const {
    FaceMask out = 0;
    for (int v = 0; v < m_; ++v)
      if (f >> v & 1) out |= FaceMask{1} << image_[static_cast<std::size_t>(v)];
    return out;
  }

  // Every partially mapped maximal face must fit inside a target maximal
  // face of the same size, and vice versa through the inverse.
  bool consistent(int assigned) const {
    const FaceMask dom = assigned == 64 ? ~FaceMask{0}
                                        : (FaceMask{1} << assigned) - 1;
    for (FaceMask f : src_.maximal_masks()) {
      const FaceMask img = map_mask(f & dom);
      const int size = std::popcount(f);
      bool ok = false;
      for (FaceMask g : dst_.maximal_masks())
        if (std::popcount(g) == size && (img & ~g) == 0) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    for (FaceMask g : dst_.maximal_masks()) {
      FaceMask pre = 0;
      for (int v = 0; v < assigned; ++v)
        if (g >> image_[static_cast<std::size_t>(v)] & 1) pre |= FaceMask{1} << v;
      const int size = std::popcount(g);
      bool ok = false;
      for (FaceMask f : src_.maximal_masks())
        if (std::popcount(f) == size && (pre & ~f) == 0) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }

  bool done() const { return limit_ != 0 && found_.size() >= limit_; }

  void extend(int v) {
    if (done()) return;
    if (v == m_) {
      for (FaceMask f : src_.maximal_masks())
        if (!dst_set_.count(map_mask(f))) return;
      Permutation p(static_cast<std::size_t>(m_));
      for (int i = 0; i < m_; ++i)
        p[static_cast<std::size_t>(i)] = image_[static_cast<std::size_t>(i)] + 1;
      found_.push_back(std::move(p));
      return;
    }
    for (int w = 0; w < m_ && !done(); ++w) {
      if (used_ >> w & 1) continue;
      if (src_degree_[static_cast<std::size_t>(v)] !=
          dst_degree_[static_cast<std::size_t>(w)])
        continue;
      image_[static_cast<std::size_t>(v)] = w;
      used_ |= FaceMask{1} << w;
      if (consistent(v + 1)) extend(v + 1);
      used_ &= ~(FaceMask{1} << w);
    }
  }

  const SimplicialComplex& src_;
  const SimplicialComplex& dst_;
  std::size_t limit_;
  int m_;
  std::vector<std::multiset<int>> src_degree_, dst_degree_;
  std::set<FaceMask> dst_set_;
  std::vector<int> image_;
  FaceMask used_ = 0;
  std::vector<Permutation> found_;
};

}  // namespace

FaceMask to_mask(const Face& f) {
  FaceMask mask = 0;
  for (int v : f) {
    if (v < 1 || v > kMaxVertices)
      throw ValidationError("vertex index " + std::to_string(v) +
                            " out of range");
    mask |= FaceMask{1} << (v - 1);
  }
  return mask;
}

Face to_face(FaceMask mask) {
  Face f;
  for (int v = 0; v < kMaxVertices; ++v)
    if (mask >> v & 1) f.push_back(v + 1);
  return f;
}

SimplicialComplex::SimplicialComplex(int vertex_count,
                                     std::vector<Face> maximal_faces)
    : m_(vertex_count) {
  if (m_ < 1 || m_ > kMaxVertices)
    throw ValidationError("vertex count must lie in 1.." +
                          std::to_string(kMaxVertices) + ", got " +
                          std::to_string(m_));
  if (maximal_faces.empty()) throw ValidationError("empty complex");
  FaceMask used = 0;
  for (auto& f : maximal_faces) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw ValidationError("empty maximal face");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw ValidationError("repeated vertex in face " + face_str(f));
    for (int v : f)
      if (v < 1 || v > m_)
        throw ValidationError("face " + face_str(f) + " uses vertex " +
                              std::to_string(v) + " outside 1.." +
                              std::to_string(m_));
    used |= to_mask(f);
  }
  std::sort(maximal_faces.begin(), maximal_faces.end(), lex_less);
  for (std::size_t i = 0; i + 1 < maximal_faces.size(); ++i)
    if (maximal_faces[i] == maximal_faces[i + 1])
      throw ValidationError("duplicate maximal face " +
                            face_str(maximal_faces[i]));
  for (const auto& f : maximal_faces) maximal_masks_.push_back(to_mask(f));
  for (std::size_t i = 0; i < maximal_masks_.size(); ++i)
    for (std::size_t j = 0; j < maximal_masks_.size(); ++j)
      if (i != j && (maximal_masks_[i] & ~maximal_masks_[j]) == 0)
        throw ValidationError("maximal face " + face_str(maximal_faces[i]) +
                              " is contained in " +
                              face_str(maximal_faces[j]));
  const FaceMask all = m_ == 64 ? ~FaceMask{0} : (FaceMask{1} << m_) - 1;
  if (used != all)
    throw ValidationError("vertex " +
                          std::to_string(std::countr_zero(~used & all) + 1) +
                          " lies in no face");
  maximal_ = std::move(maximal_faces);
}

bool SimplicialComplex::is_face(FaceMask mask) const {
  return std::any_of(maximal_masks_.begin(), maximal_masks_.end(),
                     [mask](FaceMask f) { return (mask & ~f) == 0; });
}

int SimplicialComplex::dimension() const {
  int d = 0;
  for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()));
  return d - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](const Face& f) {
    return f.size() == maximal_.front().size();
  });
}

namespace {

SimplicialComplex validated_dual(int m, int n, const std::vector<Face>& verts) {
  if (n < 1) throw ValidationError("polytope dimension must be positive");
  if (m < n + 1)
    throw ValidationError("an " + std::to_string(n) +
                          "-polytope needs at least " + std::to_string(n + 1) +
                          " facets, got " + std::to_string(m));
  std::vector<Face> faces;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Face f = verts[i];
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() != static_cast<std::size_t>(n) || verts[i].size() != f.size())
      throw ValidationError("vertex " + std::to_string(i + 1) + " " +
                            face_str(verts[i]) + " must be a set of exactly " +
                            std::to_string(n) + " facets");
    faces.push_back(std::move(f));
  }
  SimplicialComplex k(m, faces);  // distinctness and range checks
  // Pseudomanifold: each (n-2)-face lies in exactly two maximal faces.
  std::map<FaceMask, int> ridges;
  for (FaceMask f : k.maximal_masks())
    for (FaceMask rest = f; rest; rest &= rest - 1)
      ++ridges[f & ~(rest & -rest)];
  for (const auto& [ridge, count] : ridges)
    if (count != 2)
      throw ValidationError("ridge " + face_str(to_face(ridge)) + " lies in " +
                            std::to_string(count) +
                            " maximal faces; a simple polytope needs exactly 2");
  if (!strongly_connected(k.maximal_masks()))
    throw ValidationError("dual complex is not connected");
  return k;
}

}  // namespace

SimplePolytope::SimplePolytope(int facet_count, int dim,
                               std::vector<Face> vertices)
    : m_(facet_count),
      n_(dim),
      vertices_(vertices),
      dual_(validated_dual(facet_count, dim, vertices)) {
  for (auto& v : vertices_) std::sort(v.begin(), v.end());
}

SimplicialComplex dual_complex(const SimplePolytope& p) { return p.dual(); }

std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& k) {
  std::set<FaceMask> all;
  for (FaceMask f : k.maximal_masks())
    for (FaceMask sub = f; sub; sub = (sub - 1) & f) all.insert(sub);
  std::vector<std::vector<Face>> grouped(
      static_cast<std::size_t>(k.dimension() + 1));
  for (FaceMask f : all)
    grouped[static_cast<std::size_t>(std::popcount(f) - 1)].push_back(to_face(f));
  for (auto& g : grouped) std::sort(g.begin(), g.end(), lex_less);
  return grouped;
}

std::vector<PosetFace> face_poset(const SimplePolytope& p) {
  std::vector<PosetFace> out{{Face{}, 0}};
  for (const auto& group : enumerate_faces(p.dual()))
    for (const auto& f : group)
      out.push_back({f, static_cast<int>(f.size())});
  return out;
}

std::vector<Face> minimal_non_faces(const SimplicialComplex& k) {
  std::set<FaceMask> faces;
  for (FaceMask f : k.maximal_masks())
    for (FaceMask sub = f; sub; sub = (sub - 1) & f) faces.insert(sub);
  auto is_face = [&](FaceMask s) { return s == 0 || faces.count(s) > 0; };
  std::set<FaceMask> found;
  // Every minimal non-face is a face plus one vertex.
  std::vector<FaceMask> bases(faces.begin(), faces.end());
  bases.push_back(0);
  for (FaceMask f : bases)
    for (int v = 0; v < k.vertex_count(); ++v) {
      const FaceMask s = f | FaceMask{1} << v;
      if (s == f || is_face(s)) continue;
      bool minimal = true;
      for (FaceMask rest = s; rest && minimal; rest &= rest - 1)
        if (!is_face(s & ~(rest & -rest))) minimal = false;
      if (minimal) found.insert(s);
    }
  std::vector<Face> out;
  for (FaceMask s : found) out.push_back(to_face(s));
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<Permutation> isomorphisms(const SimplicialComplex& source,
                                      const SimplicialComplex& target,
                                      std::size_t bound, std::size_t limit) {
  const auto m = static_cast<std::size_t>(
      std::max(source.vertex_count(), target.vertex_count()));
  if (m > bound)
    throw BudgetError("symmetry search on " + std::to_string(m) +
                          " vertices exceeds the configured budget",
                      static_cast<long long>(bound));
  return IsomorphismSearch(source, target, limit).run();
}

std::vector<Permutation> automorphisms(const SimplicialComplex& k,
                                       std::size_t bound) {
  return isomorphisms(k, k, bound);
}

std::optional<Permutation> find_isomorphism(const SimplicialComplex& source,
                                            const SimplicialComplex& target,
                                            std::size_t bound) {
  auto found = isomorphisms(source, target, bound, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

Face apply(const Permutation& perm, const Face& f) {
  Face out;
  out.reserve(f.size());
  for (int v : f) out.push_back(perm[static_cast<std::size_t>(v - 1)]);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    out[i] = outer[static_cast<std::size_t>(inner[i] - 1)];
  return out;
}

Permutation inverse(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    out[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i + 1);
  return out;
}

Permutation identity_permutation(int m) {
  Permutation p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

std::vector<CubeFace> cube_embedding_faces(const SimplePolytope& p) {
  std::vector<CubeFace> out;
  for (const auto& v : p.vertices()) {
    CubeFace c{v, v, {}};
    for (int j = 1; j <= p.facet_count(); ++j)
      if (!std::binary_search(v.begin(), v.end(), j))
        c.pinned_coordinates.push_back(j);
    out.push_back(std::move(c));
  }
  return out;
}

SimplePolytope simplex(int n) {
  std::vector<Face> verts;
  for (int skip = n + 1; skip >= 1; --skip) {
    Face f;
    for (int i = 1; i <= n + 1; ++i)
      if (i != skip) f.push_back(i);
    verts.push_back(std::move(f));
  }
  return SimplePolytope(n + 1, n, std::move(verts));
}

SimplePolytope cube(int n) {
  std::vector<Face> verts;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    Face f;
    for (int i = 0; i < n; ++i) f.push_back(bits >> i & 1 ? i + 1 + n : i + 1);
    std::sort(f.begin(), f.end());
    verts.push_back(std::move(f));
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  return SimplePolytope(2 * n, n, std::move(verts));
}

SimplePolytope polytope_from_dual(const SimplicialComplex& k) {
  return SimplePolytope(k.vertex_count(), k.dimension() + 1, k.maximal_faces());
}

}  // namespace qtoric::combinatorics

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Combinatorics of simple polytopes and their dual simplicial complexes.
// Vertices of a complex (= facets of a polytope) are numbered 1..m in the
// public interface; internally faces are 64-bit masks with bit i-1 for i.
namespace qtoric::combinatorics {

using Face = std::vector<int>;  // sorted, 1-based
using FaceMask = std::uint64_t;
using Permutation = std::vector<int>;  // perm[i-1] = image of i, 1-based

inline constexpr int kMaxVertices = 64;
inline constexpr std::size_t kDefaultSymmetryBound = 12;

FaceMask to_mask(const Face& f);
Face to_face(FaceMask mask);

class SimplicialComplex {
 public:
  // Validates: every face nonempty and inside {1..m}, no duplicates, no
  // maximal face contained in another, every vertex used.
  SimplicialComplex(int vertex_count, std::vector<Face> maximal_faces);

  int vertex_count() const { return m_; }
  // Sorted lexicographically.
  const std::vector<Face>& maximal_faces() const { return maximal_; }
  const std::vector<FaceMask>& maximal_masks() const { return maximal_masks_; }

  bool is_face(FaceMask mask) const;
  bool is_face(const Face& f) const { return is_face(to_mask(f)); }
  // -1 for the empty complex is impossible; returns max |face| - 1.
  int dimension() const;
  bool is_pure() const;

  bool operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && maximal_ == o.maximal_;
  }

 private:
  int m_;
  std::vector<Face> maximal_;
  std::vector<FaceMask> maximal_masks_;
};

class SimplePolytope {
 public:
  // Validates: each vertex is an n-subset of {1..m}, vertices distinct,
  // every facet touches a vertex, the dual complex is a strongly connected
  // pseudomanifold of dimension n-1.
  SimplePolytope(int facet_count, int dim, std::vector<Face> vertices);

  int facet_count() const { return m_; }
  int dim() const { return n_; }
  const std::vector<Face>& vertices() const { return vertices_; }
  const SimplicialComplex& dual() const { return dual_; }

 private:
  int m_;
  int n_;
  std::vector<Face> vertices_;  // input order
  SimplicialComplex dual_;
};

struct PosetFace {
  Face facets;  // empty for the polytope itself
  int codimension;
};

struct CubeFace {
  Face vertex;           // facets through the vertex
  Face free_coordinates;  // coordinates varying over the cube face
  Face pinned_coordinates;  // coordinates fixed at 1
};

SimplicialComplex dual_complex(const SimplePolytope& p);

// Nonempty faces grouped by dimension; lexicographic within each group.
std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& k);

// Faces of the polytope as facet sets, ordered by codimension then lex,
// starting with the polytope itself (codimension 0).
std::vector<PosetFace> face_poset(const SimplePolytope& p);

// Inclusion-minimal non-faces ordered by size, then lexicographically.
std::vector<Face> minimal_non_faces(const SimplicialComplex& k);

// All bijections {1..m} -> {1..m'} carrying faces of `source` onto faces of
// `target`, in lexicographic order of the image lists. Throws BudgetError if
// m exceeds `bound`.
std::vector<Permutation> isomorphisms(const SimplicialComplex& source,
                                      const SimplicialComplex& target,
                                      std::size_t bound = kDefaultSymmetryBound,
                                      std::size_t limit = 0);

std::vector<Permutation> automorphisms(
    const SimplicialComplex& k, std::size_t bound = kDefaultSymmetryBound);

std::optional<Permutation> find_isomorphism(
    const SimplicialComplex& source, const SimplicialComplex& target,
    std::size_t bound = kDefaultSymmetryBound);

Face apply(const Permutation& perm, const Face& f);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& perm);
Permutation identity_permutation(int m);

// Vertex v = F_i1 ^ ... ^ F_in lands on the cube face {x_j = 1, j not in v}.
std::vector<CubeFace> cube_embedding_faces(const SimplePolytope& p);

// Standard examples.
SimplePolytope simplex(int n);
SimplePolytope cube(int n);
// Polytope with the given dual; validated like any other input.
SimplePolytope polytope_from_dual(const SimplicialComplex& k);

}  // namespace qtoric::combinatorics

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtoric/combinatorics.hpp"
#include "qtoric/intlat.hpp"

// Disk-sphere CW models of complex and quaternionic moment-angle manifolds
// and their integral homology.
//
// Each coordinate carries the minimal CW structure of (D, S) = (D^2, S^1)
// or (D^4, S^3): a base point b, a sphere cell s, a disc cell d with
// boundary d -> s. A cell of the model is a tuple (c_1..c_m) whose d-support
// is a face of K. The boundary of a product cell is the Koszul-signed sum
//   sum_{i: c_i = d} (-1)^{dim c_1 + ... + dim c_{i-1}} (c with c_i := s).
namespace qtoric::momentangle {

enum class Flavor { Complex, Quaternionic };

enum class CellRole : std::uint8_t { Base = 0, Sphere = 1, Disc = 2 };
using CellTuple = std::vector<CellRole>;

int sphere_cell_dim(Flavor f);
int disc_cell_dim(Flavor f);
std::size_t default_budget(Flavor f);
std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  int value;
};

// Boundary map C_k -> C_{k-1}; rows index (k-1)-cells, columns k-cells.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;

  IntMatrix to_dense() const;
};

class CellModel {
 public:
  int vertex_count() const { return m_; }
  Flavor flavor() const { return flavor_; }
  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }

  std::size_t cell_count(int dim) const;
  // Cells of dimension `dim` in lexicographic order (b < s < d).
  std::vector<CellTuple> cells(int dim) const;
  // Boundary map out of dimension `dim` (dim >= 1).
  const BoundaryMatrix& boundary(int dim) const;

 private:
  friend CellModel build_cell_model(const combinatorics::SimplicialComplex&,
                                    Flavor, std::size_t);
  int m_ = 0;
  Flavor flavor_ = Flavor::Complex;
  std::vector<std::vector<std::uint64_t>> cells_;  // base-3 codes, sorted
  std::vector<BoundaryMatrix> boundary_;           // index k = d_k
};

// Throws BudgetError when the vertex count exceeds `budget` (0 selects the
// flavor's default).
CellModel build_cell_model(const combinatorics::SimplicialComplex& k,
                           Flavor flavor, std::size_t budget = 0);

struct RankAndFactors {
  std::size_t rank = 0;
  std::vector<Integer> factors;  // nonzero invariant factors
};

// Rank and invariant factors of a sparse integer matrix: unit pivots are
// eliminated sparsely, the remainder goes through dense Smith reduction.
RankAndFactors sparse_invariant_factors(const BoundaryMatrix& m);

struct HomologyProfile {
  std::vector<intlat::AbelianGroupInvariants> groups;  // index = degree

  int top_nonvanishing_degree() const;
  bool is_sphere(int dim) const;
  long long euler_characteristic() const;
};

HomologyProfile homology(const CellModel& model);

long long euler_characteristic(const CellModel& model);

// Dimension of the moment-angle manifold over an n-polytope with m facets:
// m + n for the complex flavor, 3m + n for the quaternionic one. The complex
// must be pure of dimension n - 1.
int dimension(const combinatorics::SimplicialComplex& k, Flavor flavor, int n);

// The closed form m + n is sometimes quoted for the quaternionic dimension;
// the cell structure gives 4n + 3(m - n) = 3m + n. This records both.
struct QuaternionicDimensionCheck {
  int dimension;      // 3m + n
  int m_plus_n;       // the quoted closed form
  bool mismatch;      // true whenever m > 0
};

QuaternionicDimensionCheck quaternionic_dimension_check(int m, int n);

// Cell counts by dimension from the face vector alone: sum over faces sigma
// (including the empty face) of C(m - |sigma|, j) cells of dimension
// |sigma| * disc + j * sphere.
std::vector<std::size_t> combinatorial_cell_counts(
    const combinatorics::SimplicialComplex& k, Flavor flavor);

}  // namespace qtoric::momentangle

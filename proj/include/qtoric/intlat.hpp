#pragma once

#include <optional>
#include <vector>

#include "qtoric/int_matrix.hpp"

// Exact linear algebra over the integers.
namespace qtoric::intlat {

// U * M * V == D with U, V unimodular and D diagonal, nonnegative, and
// d_1 | d_2 | ... along the diagonal.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  // Nonzero diagonal entries of D in order.
  std::vector<Integer> invariant_factors() const;
};

// A finitely generated abelian group Z^free_rank + sum Z/t_i.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // entries > 1, divisibility chain

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroupInvariants&) const = default;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Invariant factors only; cheaper than the full decomposition.
std::vector<Integer> invariant_factors(const IntMatrix& m);

// Z^cols / (row lattice of relations).
AbelianGroupInvariants cokernel(const IntMatrix& relations);

// Rows form a saturated Z-basis of {v : L v = 0}, returned in Hermite row
// form so the basis is canonical.
IntMatrix kernel_basis(const IntMatrix& l);

Integer gcd(const IntVector& v);

// gcd of entries is 1. Throws DomainError for the zero (or empty) vector.
bool is_primitive(const IntVector& v);

// gcd of all rows x rows minors; 0 iff rank deficient. Throws ShapeError
// when rows > cols.
Integer maximal_minor_gcd(const IntMatrix& m);

// Canonical row echelon form of the row lattice: positive pivots, entries
// above each pivot reduced into [0, pivot), zero rows removed.
IntMatrix hermite_row_form(const IntMatrix& m);

// Reduces v modulo the row lattice of a matrix already in Hermite row form.
// The result is the canonical representative of v's coset.
IntVector reduce_modulo(const IntMatrix& hermite, IntVector v);

// Some c with B * c == x over Z, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& b, const IntVector& x);

// Inverse of a square matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

}  // namespace qtoric::intlat

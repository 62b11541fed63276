#pragma once

#include <optional>
#include <vector>

#include "qtoric/charpair.hpp"
#include "qtoric/cohomology.hpp"

// Characteristic classes of kernel bundles K -> Z_P -> Z_P / K.
namespace qtoric::bundles {

struct KernelSequence {
  IntMatrix kernel;   // (m - n) x m, rows a saturated basis of ker(Lambda)
  IntMatrix section;  // m x n with Lambda * section = identity
};

// Throws ValidationError when Lambda is not onto Z^n (the torus sequence
// does not split integrally).
KernelSequence kernel_sequence(const charpair::CharacteristicMatrix& l);

struct ChernTuple {
  std::vector<cohomology::CohomologyClass> classes;  // degree 2, m - n of them
  bool basis = false;
  // c_k = sum_i a_ki x_i, evaluated only in diagnostics mode.
  std::optional<std::vector<cohomology::CohomologyClass>> row_formula_classes;
};

// First Chern classes c^(1..m-n) of the circle factors of the kernel torus,
// determined by x_i = sum_k a_ki c^(k) for every facet i. Throws
// ValidationError for an invalid pair and IntegrityError if the system has
// no integral solution.
ChernTuple kernel_chern_classes(const combinatorics::SimplePolytope& p,
                                const charpair::CharacteristicMatrix& l,
                                bool diagnostics = false);

// Same, for an explicit kernel basis (rows spanning ker Lambda).
ChernTuple kernel_chern_classes(const combinatorics::SimplePolytope& p,
                                const charpair::CharacteristicMatrix& l,
                                const IntMatrix& kernel, bool diagnostics);

// Classes form a Z-basis of the degree-2 component.
bool verify_chern_basis(const std::vector<cohomology::CohomologyClass>& classes,
                        const cohomology::GradedRingPresentation& pres);

// Coordinates of tuple classes stacked as rows.
IntMatrix coordinate_matrix(const std::vector<cohomology::CohomologyClass>& classes,
                            std::size_t width);

// Degree-4 cohomology of a quoric base, supplied as the coordinates of each
// quaternionic facet class y_i in Z^rank.
struct H4Presentation {
  std::size_t rank = 0;
  std::vector<IntVector> facet_classes;  // one per facet
};

struct QuaternionicPrimaryTuple {
  std::vector<IntVector> classes;  // r = m - n vectors in Z^rank
  int base_dim = 0;                // 4n
};

// H^4(HP^n) = Z with every facet class equal to the generator.
H4Presentation simplex_h4(int n);

// The kernel map [1, 0, ..., 0] over Delta^n, whose class is the generator.
IntMatrix standard_simplex_kernel_map(int n);

// c_k = sum_i B_ki y_i. Without an H4 presentation only the simplex family
// is supported; other bases throw UnsupportedError.
QuaternionicPrimaryTuple quaternionic_primary_tuple(
    const combinatorics::SimplePolytope& p,
    const charpair::QuaternionicIsotropyFunctor& f,
    const std::optional<H4Presentation>& h4, const IntMatrix& b);

}  // namespace qtoric::bundles

#pragma once

#include <vector>

#include "qtoric/charpair.hpp"
#include "qtoric/combinatorics.hpp"
#include "qtoric/intlat.hpp"

// Cohomology rings presented as Stanley-Reisner rings, optionally modulo the
// linear ideal of a characteristic matrix.
//
// Graded components are computed degree by degree: after solving the linear
// relations for n of the generators, the ring is Z[w_1..w_f] modulo the image
// of the Stanley-Reisner ideal, and the degree-k part of that image is spanned
// by images of the degree-k monomials whose support is not a face.
namespace qtoric::cohomology {

using combinatorics::Face;
using Monomial = std::vector<int>;  // exponents over the free generators

struct GradedRingPresentation {
  int m = 0;                // generators v_1..v_m, one per facet
  int generator_degree = 2; // 2 or 4
  std::vector<Face> monomial_ideal;  // minimal non-faces
  IntMatrix linear_relations;        // rows theta_j = sum_i lambda_ji v_i
  std::vector<int> eliminated;       // generators solved for (1-based)
  std::vector<int> free_generators;  // remaining generators (1-based)
  // Row i-1 expresses v_i in the free generators.
  IntMatrix substitution;
  int max_degree = 0;  // components above this are refused

  int free_count() const { return static_cast<int>(free_generators.size()); }
  bool is_quasitoric() const { return linear_relations.rows() > 0; }
  // Highest degree that can be nonzero for a quasitoric presentation: 2n.
  int top_degree() const;

  bool operator==(const GradedRingPresentation&) const = default;
};

struct CohomologyClass {
  int degree = 0;
  IntVector coordinates;  // over the monomial basis of the component

  bool operator==(const CohomologyClass&) const = default;
};

struct GradedComponent {
  int degree = 0;
  std::vector<Monomial> basis;  // graded lex, first generator largest
  intlat::AbelianGroupInvariants group;
  IntMatrix relations;          // Hermite row form of the relation lattice

  CohomologyClass reduce(IntVector coords) const;
  CohomologyClass zero() const;
};

GradedRingPresentation sr_presentation(const combinatorics::SimplicialComplex& k,
                                       int generator_degree);

GradedRingPresentation quasitoric_presentation(
    const combinatorics::SimplePolytope& p,
    const charpair::CharacteristicMatrix& l);

GradedComponent graded_component(const GradedRingPresentation& pres,
                                 int degree);

CohomologyClass unit(const GradedRingPresentation& pres);

// Normal form of v_i in the generator degree. Throws DomainError when i is
// out of range.
CohomologyClass facet_class(const GradedRingPresentation& pres, int i);

// sum_i coeffs[i-1] * v_i in normal form.
CohomologyClass facet_combination(const GradedRingPresentation& pres,
                                  const IntVector& coeffs);

CohomologyClass add(const GradedRingPresentation& pres,
                    const CohomologyClass& a, const CohomologyClass& b);

CohomologyClass scale(const GradedRingPresentation& pres,
                      const CohomologyClass& a, const Integer& factor);

// Throws DomainError when the product degree exceeds pres.max_degree.
CohomologyClass multiply(const GradedRingPresentation& pres,
                         const CohomologyClass& a, const CohomologyClass& b);

// Graded parts of (1 + x_1)...(1 + x_m), degrees 0, 2, ..., 2n.
std::vector<CohomologyClass> total_chern_class(const GradedRingPresentation& pres);

// Renders a class over the basis monomials, e.g. "2*v3 + v4" or "3*v3^2".
std::string render(const GradedRingPresentation& pres,
                   const CohomologyClass& c);

}  // namespace qtoric::cohomology

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtoric/bundles.hpp"
#include "qtoric/charpair.hpp"
#include "qtoric/combinatorics.hpp"

// Decision procedures for equivariant equivalence of characteristic data
// and comparison of kernel bundles.
namespace qtoric::classify {

using combinatorics::Permutation;

// Lambda'[:, j] == signs[j] * delta * Lambda[:, sigma(j)] for every facet j,
// i.e. Lambda' = delta * Lambda * P_sigma * D_signs.
struct EquivalenceCertificate {
  IntMatrix delta;
  Permutation sigma;
  std::vector<int> signs;
};

bool verify_certificate(const charpair::CharacteristicMatrix& l,
                        const charpair::CharacteristicMatrix& l2,
                        const EquivalenceCertificate& cert);

// Searches automorphisms of the dual complex and sign patterns, anchored on
// the first vertex. Throws IncomparableError if the polytopes have different
// dual complexes and BudgetError if the automorphism search is too large.
std::optional<EquivalenceCertificate> equivalent_pairs(
    const combinatorics::SimplePolytope& p,
    const charpair::CharacteristicMatrix& l,
    const charpair::CharacteristicMatrix& l2,
    std::size_t bound = combinatorics::kDefaultSymmetryBound);

// Same sublattice of the degree-2 component, i.e. equal up to GL(r, Z).
bool compare_kernel_bundles(const bundles::ChernTuple& t,
                            const bundles::ChernTuple& t2,
                            const cohomology::GradedRingPresentation& pres);

enum class Level {
  Equivalent,
  Inequivalent,
  PrimaryEquivalent,
  PrimaryDistinct,
  Incomparable
};

std::string to_string(Level level);
// 0 for (primary-)equivalent, 3 for inequivalent/primary-distinct,
// 4 for incomparable.
int exit_code(Level level);

struct RigidityVerdict {
  Level level = Level::Incomparable;
  std::optional<EquivalenceCertificate> certificate;
  // Facet identification source -> target used for the comparison.
  std::optional<Permutation> isomorphism;
  std::optional<bool> equal_sublattice;
  std::string symmetry_policy = "all dual-complex automorphisms";
};

RigidityVerdict rigidity_verdict_complex(
    const combinatorics::SimplePolytope& p,
    const charpair::CharacteristicMatrix& l,
    const combinatorics::SimplePolytope& p2,
    const charpair::CharacteristicMatrix& l2,
    std::size_t bound = combinatorics::kDefaultSymmetryBound);

// Functors agree up to a facet isomorphism and a bijection of the acting
// coordinates.
bool functors_match(const charpair::QuaternionicIsotropyFunctor& f,
                    const charpair::QuaternionicIsotropyFunctor& f2,
                    const Permutation& facet_map);

RigidityVerdict rigidity_verdict_quaternionic(
    const combinatorics::SimplePolytope& p,
    const charpair::QuaternionicIsotropyFunctor& f,
    const bundles::QuaternionicPrimaryTuple& t,
    const combinatorics::SimplePolytope& p2,
    const charpair::QuaternionicIsotropyFunctor& f2,
    const bundles::QuaternionicPrimaryTuple& t2, int base_dim,
    std::size_t bound = combinatorics::kDefaultSymmetryBound);

}  // namespace qtoric::classify

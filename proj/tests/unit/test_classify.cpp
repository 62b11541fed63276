#include <gtest/gtest.h>

#include <random>

#include "qtoric/classify.hpp"
#include "qtoric/errors.hpp"

using namespace qtoric;
using namespace qtoric::classify;
using charpair::CharacteristicMatrix;
using charpair::hirzebruch_matrix;
using charpair::projective_space_matrix;
using combinatorics::cube;
using combinatorics::simplex;

TEST(Equivalence, HirzebruchSignFlip) {
  const auto cert = equivalent_pairs(cube(2), hirzebruch_matrix(1), hirzebruch_matrix(-1));
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(hirzebruch_matrix(1), hirzebruch_matrix(-1), *cert));
  EXPECT_FALSE(equivalent_pairs(cube(2), hirzebruch_matrix(1), hirzebruch_matrix(2)));
  EXPECT_FALSE(equivalent_pairs(cube(2), hirzebruch_matrix(0), hirzebruch_matrix(1)));
}

TEST(Equivalence, CertificateCheckerRejectsTampering) {
  auto cert = *equivalent_pairs(cube(2), hirzebruch_matrix(2), hirzebruch_matrix(-2));
  cert.signs[0] = -cert.signs[0];
  EXPECT_FALSE(verify_certificate(hirzebruch_matrix(2), hirzebruch_matrix(-2), cert));
  cert.signs[0] = 2;
  EXPECT_FALSE(verify_certificate(hirzebruch_matrix(2), hirzebruch_matrix(-2), cert));
}

TEST(Equivalence, Errors) {
  EXPECT_THROW(equivalent_pairs(cube(2), hirzebruch_matrix(1), projective_space_matrix(2)),
               IncomparableError);
  const CharacteristicMatrix bad(2, 4, IntMatrix{{1, 0, 2, 0}, {0, 1, 0, 1}});
  EXPECT_THROW(equivalent_pairs(cube(2), hirzebruch_matrix(1), bad), ValidationError);
}

TEST(Equivalence, GlChangeOfBasisIsEquivalent) {
  const IntMatrix delta{{2, 1}, {1, 1}};
  const auto l = hirzebruch_matrix(3);
  const CharacteristicMatrix moved(2, 4, delta * l.matrix());
  const auto cert = equivalent_pairs(cube(2), l, moved);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(l, moved, *cert));
}

TEST(Verdict, ComplexLevels) {
  const auto eq = rigidity_verdict_complex(cube(2), hirzebruch_matrix(1), cube(2), hirzebruch_matrix(-1));
  EXPECT_EQ(eq.level, Level::Equivalent);
  ASSERT_TRUE(eq.equal_sublattice.has_value());
  EXPECT_TRUE(*eq.equal_sublattice);
  EXPECT_EQ(exit_code(eq.level), 0);
  const auto ne = rigidity_verdict_complex(cube(2), hirzebruch_matrix(0), cube(2), hirzebruch_matrix(1));
  EXPECT_EQ(ne.level, Level::Inequivalent);
  EXPECT_EQ(exit_code(ne.level), 3);
  const auto inc = rigidity_verdict_complex(simplex(2), projective_space_matrix(2), cube(2),
                                            hirzebruch_matrix(0));
  EXPECT_EQ(inc.level, Level::Incomparable);
  EXPECT_EQ(exit_code(inc.level), 4);
}

TEST(Verdict, RelabeledPolytope) {
  // Square with vertices listed after the facet relabeling 1->2->3->4->1.
  const combinatorics::SimplePolytope rotated(4, 2, {{2, 3}, {3, 4}, {1, 4}, {1, 2}});
  const auto l = hirzebruch_matrix(2);
  // Column of facet i moves to facet i+1.
  const CharacteristicMatrix moved(2, 4, l.matrix().select_columns({3, 0, 1, 2}));
  const auto v = rigidity_verdict_complex(cube(2), l, rotated, moved);
  EXPECT_EQ(v.level, Level::Equivalent);
}

TEST(Verdict, QuaternionicBase4) {
  const auto p = simplex(1);
  const charpair::QuaternionicIsotropyFunctor f{2, {{1}, {2}}};
  const bundles::QuaternionicPrimaryTuple one{{make_vector({1})}, 4};
  const bundles::QuaternionicPrimaryTuple neg{{make_vector({-1})}, 4};
  const bundles::QuaternionicPrimaryTuple two{{make_vector({2})}, 4};
  EXPECT_EQ(rigidity_verdict_quaternionic(p, f, one, p, f, one, 4).level, Level::Equivalent);
  EXPECT_EQ(rigidity_verdict_quaternionic(p, f, one, p, f, neg, 4).level, Level::Equivalent);
  EXPECT_EQ(rigidity_verdict_quaternionic(p, f, one, p, f, two, 4).level, Level::Inequivalent);
  const charpair::QuaternionicIsotropyFunctor g{2, {{2}, {1}}};
  EXPECT_EQ(rigidity_verdict_quaternionic(p, f, one, p, g, one, 4).level, Level::Equivalent);
  EXPECT_THROW(rigidity_verdict_quaternionic(p, f, one, p, f, one, 8), ShapeError);
}

TEST(Verdict, QuaternionicAboveFourIsPrimaryOnly) {
  const auto p = simplex(2);
  const charpair::QuaternionicIsotropyFunctor f{3, {{1}, {2}, {3}}};
  const bundles::QuaternionicPrimaryTuple one{{make_vector({1})}, 8};
  const bundles::QuaternionicPrimaryTuple three{{make_vector({3})}, 8};
  EXPECT_EQ(rigidity_verdict_quaternionic(p, f, one, p, f, one, 8).level, Level::PrimaryEquivalent);
  EXPECT_EQ(rigidity_verdict_quaternionic(p, f, one, p, f, three, 8).level, Level::PrimaryDistinct);
}

TEST(Verdict, FunctorMatching) {
  const charpair::QuaternionicIsotropyFunctor f{3, {{1}, {2, 3}, {1}}};
  const charpair::QuaternionicIsotropyFunctor g{3, {{2}, {1, 3}, {2}}};
  EXPECT_TRUE(functors_match(f, g, {1, 2, 3}));
  const charpair::QuaternionicIsotropyFunctor h{3, {{1}, {2, 3}, {2}}};
  EXPECT_FALSE(functors_match(f, h, {1, 2, 3}));
}

TEST(Levels, Names) {
  EXPECT_EQ(to_string(Level::PrimaryDistinct), "primary-distinct");
  EXPECT_EQ(to_string(Level::Incomparable), "incomparable");
}

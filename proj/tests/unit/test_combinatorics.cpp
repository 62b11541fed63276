#include <gtest/gtest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "qtoric/combinatorics.hpp"
#include "qtoric/errors.hpp"

using namespace qtoric;
using namespace qtoric::combinatorics;

namespace {

SimplicialComplex two_points() { return SimplicialComplex(2, {{1}, {2}}); }
SimplicialComplex four_cycle() { return SimplicialComplex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

}  // namespace

TEST(Complex, RejectsMalformed) {
  EXPECT_THROW(SimplicialComplex(3, {{1, 2}, {1, 2, 3}}), ValidationError);  // containment
  EXPECT_THROW(SimplicialComplex(3, {{1, 2}}), ValidationError);             // unused vertex
  EXPECT_THROW(SimplicialComplex(2, {{1, 3}}), ValidationError);             // out of range
  EXPECT_THROW(SimplicialComplex(0, {}), ValidationError);
}

TEST(Polytope, RejectsMalformed) {
  EXPECT_THROW(SimplePolytope(3, 2, {{1, 2}, {1, 3}}), ValidationError);  // ridge {2} once
  EXPECT_THROW(SimplePolytope(3, 2, {{1, 2}, {1, 2}, {2, 3}}), ValidationError);
  EXPECT_THROW(SimplePolytope(3, 2, {{1, 2, 3}}), ValidationError);
  // Two disjoint triangles: pseudomanifold but disconnected.
  EXPECT_THROW(SimplePolytope(6, 2, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}),
               ValidationError);
}

TEST(Dual, Examples) {
  EXPECT_EQ(simplex(2).dual(), SimplicialComplex(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(cube(2).dual(), four_cycle());
  EXPECT_EQ(simplex(1).dual(), two_points());
  EXPECT_EQ(dual_complex(cube(3)), cube(3).dual());
}

TEST(Faces, Enumeration) {
  const auto pts = enumerate_faces(two_points());
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], (std::vector<Face>{{1}, {2}}));
  const auto tri = enumerate_faces(simplex(2).dual());
  ASSERT_EQ(tri.size(), 2u);
  EXPECT_EQ(tri[0].size(), 3u);
  EXPECT_EQ(tri[1].size(), 3u);
  const auto cyc = enumerate_faces(four_cycle());
  EXPECT_EQ(cyc[0].size(), 4u);
  EXPECT_EQ(cyc[1].size(), 4u);
}

TEST(Faces, PosetCountsForCube) {
  // A 3-cube has 1 + 6 + 12 + 8 faces including itself.
  const auto poset = face_poset(cube(3));
  EXPECT_EQ(poset.size(), 27u);
  EXPECT_TRUE(poset.front().facets.empty());
  EXPECT_EQ(poset.front().codimension, 0);
}

TEST(NonFaces, Examples) {
  EXPECT_EQ(minimal_non_faces(two_points()), (std::vector<Face>{{1, 2}}));
  EXPECT_EQ(minimal_non_faces(simplex(2).dual()), (std::vector<Face>{{1, 2, 3}}));
  EXPECT_EQ(minimal_non_faces(four_cycle()), (std::vector<Face>{{1, 3}, {2, 4}}));
}

TEST(NonFaces, AgainstBruteForce) {
  for (const auto& p : {simplex(3), cube(2), cube(3), simplex(1)}) {
    const auto& k = p.dual();
    const auto got = minimal_non_faces(k);
    const std::set<Face> brute = oracle::minimal_non_faces(k.vertex_count(), k.maximal_faces());
    EXPECT_EQ(std::set<Face>(got.begin(), got.end()), brute);
  }
}

TEST(Symmetry, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(two_points()).size(), 2u);
  EXPECT_EQ(automorphisms(simplex(2).dual()).size(), 6u);
  EXPECT_EQ(automorphisms(four_cycle()).size(), 8u);
  EXPECT_EQ(automorphisms(cube(3).dual()).size(), 48u);
}

TEST(Symmetry, MatchesBruteForcePermutations) {
  const auto& k = four_cycle();
  const auto got = automorphisms(k);
  const auto brute = oracle::isomorphisms(4, k.maximal_faces(), k.maximal_faces());
  EXPECT_EQ(std::set<Permutation>(got.begin(), got.end()),
            std::set<Permutation>(brute.begin(), brute.end()));
}

TEST(Symmetry, RelabeledIsomorphism) {
  std::mt19937 rng(19);
  const auto p = cube(3);
  const auto& k = p.dual();
  Permutation perm = identity_permutation(6);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Face> moved;
  for (const auto& f : k.maximal_faces()) moved.push_back(combinatorics::apply(perm, f));
  const SimplicialComplex k2(6, moved);
  const auto iso = find_isomorphism(k, k2);
  ASSERT_TRUE(iso.has_value());
  for (const auto& f : k.maximal_faces()) EXPECT_TRUE(k2.is_face(combinatorics::apply(*iso, f)));
  EXPECT_FALSE(find_isomorphism(simplex(3).dual(), cube(2).dual()).has_value());
}

TEST(Symmetry, BudgetEnforced) {
  std::vector<Face> pts;
  for (int i = 1; i <= 13; ++i) pts.push_back({i});
  EXPECT_THROW(automorphisms(SimplicialComplex(13, pts)), BudgetError);
}

TEST(Permutations, Algebra) {
  const Permutation p{2, 3, 1};
  EXPECT_EQ(compose(p, inverse(p)), identity_permutation(3));
  EXPECT_EQ(combinatorics::apply(p, Face{1, 3}), (Face{1, 2}));
}

TEST(CubeEmbedding, Examples) {
  const auto seg = cube_embedding_faces(simplex(1));
  ASSERT_EQ(seg.size(), 2u);
  EXPECT_EQ(seg[0].vertex, (Face{1}));
  EXPECT_EQ(seg[1].vertex, (Face{2}));
  for (const auto& f : cube_embedding_faces(cube(2))) {
    EXPECT_EQ(f.vertex.size(), 2u);
    EXPECT_EQ(f.free_coordinates, f.vertex);
  }
}

TEST(Builders, PolytopeFromDual) {
  const auto p = polytope_from_dual(cube(3).dual());
  EXPECT_EQ(p.facet_count(), 6);
  EXPECT_EQ(p.dim(), 3);
  EXPECT_EQ(p.dual(), cube(3).dual());
}

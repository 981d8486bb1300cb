#include "doctest.h"

#include "deltacheck/ehrhart.hpp"
#include "deltacheck/orbring.hpp"
#include "deltacheck/random.hpp"
#include "test_util.hpp"

using namespace deltacheck;
using namespace testutil;

namespace {

LatticeTriangulation trivial_segment() { return triangulate(segment(0, 2), ints({0, 0, 0})); }
LatticeTriangulation split_segment() { return triangulate(segment(0, 2), ints({0, -1, 0})); }

std::size_t dense_rank(const GradedSlice& s) {
  IntMatrix m(s.relations.size(), s.basis.size());
  for (std::size_t r = 0; r < s.relations.size(); ++r)
    for (const auto& [c, v] : s.relations[r]) m(r, c) = v;
  return rank_exact(m);
}

}  // namespace

TEST_CASE("multiplication") {
  const DeformedGroupRing trivial(trivial_segment());
  const DeformedGroupRing split(split_segment());
  const ConePoint zero = trivial.point(iv({0, 0}));
  CHECK(zero.carrier.empty());
  for (const auto& v : {iv({0, 1}), iv({1, 1}), iv({3, 2})}) {
    const ConePoint b = trivial.point(v);
    CHECK(trivial.multiply(zero, b) == b);
  }
  auto prod = trivial.multiply(trivial.point(iv({0, 1})), trivial.point(iv({2, 1})));
  REQUIRE(prod.has_value());
  CHECK(prod->v == iv({2, 2}));
  CHECK(prod->carrier == Face{0, 2});
  CHECK_FALSE(split.multiply(split.point(iv({0, 1})), split.point(iv({2, 1}))).has_value());
  CHECK(deformed_multiply(split.point(iv({0, 1})), split.point(iv({1, 1})), split).has_value());
  CHECK_THROWS_AS(trivial.point(iv({3, 1})), UsageError);
  CHECK_THROWS_AS(trivial.point(iv({0, -1})), UsageError);
}

TEST_CASE("carriers") {
  const DeformedGroupRing split(split_segment());
  CHECK(split.point(iv({1, 1})).carrier == Face{1});
  CHECK(split.point(iv({3, 2})).carrier == Face{1, 2});
  CHECK(split.point(iv({2, 2})).carrier == Face{1});
  const DeformedGroupRing trivial(trivial_segment());
  CHECK(trivial.point(iv({1, 1})).carrier == Face{0, 2});
  CHECK(trivial.box_part(iv({3, 2})) == iv({1, 1}));
  CHECK(trivial.box_part(iv({2, 2})) == iv({0, 0}));
}

TEST_CASE("relation generators") {
  const DeformedGroupRing trivial(trivial_segment());
  auto g = trivial.relation_generators();
  REQUIRE(g.size() == 2);
  using Terms = std::vector<std::pair<std::size_t, Int>>;
  CHECK(g[0].terms == Terms{{0, Int(0)}, {2, Int(2)}});
  CHECK(g[1].terms == Terms{{0, Int(1)}, {2, Int(1)}});
  const DeformedGroupRing split(split_segment());
  CHECK(split.relation_generators()[0].terms == Terms{{0, Int(0)}, {1, Int(1)}, {2, Int(2)}});
}

TEST_CASE("graded pieces of the trivial triangulation of [0,2]") {
  const DeformedGroupRing ring(trivial_segment());
  CHECK(ring.graded_dimension(0) == 1);
  const GradedSlice s1 = ring.slice(1);
  CHECK(s1.basis.size() == 3);
  CHECK(s1.relation_rank == 2);
  CHECK(s1.quotient_dimension() == 1);
  const GradedSlice s2 = ring.slice(2);
  CHECK(s2.basis.size() == 5);
  CHECK(s2.relations.size() == 6);
  CHECK(s2.relation_rank == 5);
  CHECK(ring.hilbert_delta() == poly({1, 1}));
}

TEST_CASE("blocked rank equals dense exact rank") {
  for (const auto& p : {reeve(3), simplex(2, 3), box(2, 2)}) {
    const DeformedGroupRing ring(generic_triangulation(p, 2));
    for (unsigned k = 1; k <= p.ambient_rank() + 1; ++k) {
      const GradedSlice s = ring.slice(k);
      CHECK(s.relation_rank == dense_rank(s));
    }
  }
}

TEST_CASE("Hilbert function is delta and vanishes above the dimension") {
  for (const auto& p : {unit_cube(), reeve(2), reeve(5), simplex(2, 2), box(3, 1), simplex(3, 2)})
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      const DeformedGroupRing ring(generic_triangulation(p, seed));
      CHECK(ring.hilbert_delta() == counting_delta(p));
      const unsigned d = p.ambient_rank();
      CHECK(ring.graded_dimension(d + 1) == 0);
      CHECK(ring.graded_dimension(d + 2) == 0);
    }
}

TEST_CASE("quotient does not depend on the dual basis") {
  const DeformedGroupRing ring(generic_triangulation(reeve(3), 1));
  const IntMatrix u = IntMatrix::from_rows({iv({1, 2, 0, 0}), iv({0, 1, 0, 3}), iv({0, 0, 1, -1}),
                                            iv({0, 0, 0, 1})});
  REQUIRE(determinant(u) == 1);
  for (unsigned k = 0; k <= 3; ++k) CHECK(ring.graded_dimension(k, &u) == ring.graded_dimension(k));
}

TEST_CASE("restriction to [0,1] inside [0,2]") {
  const auto pair = triangulation_of_pair(segment(0, 2), segment(0, 1), 1);
  const PairRings rings(pair);
  const auto& whole = rings.whole;
  CHECK_FALSE(restriction_j(whole.point(iv({2, 1})), pair, rings).has_value());
  auto j0 = restriction_j(whole.point(iv({0, 0})), pair, rings);
  REQUIRE(j0.has_value());
  CHECK(j0->carrier.empty());
  auto a = whole.point(iv({0, 1}));
  auto b = whole.point(iv({1, 1}));
  auto ab = whole.multiply(a, b);
  REQUIRE(ab.has_value());
  auto jab = restriction_j(*ab, pair, rings);
  auto ja = restriction_j(a, pair, rings);
  auto jb = restriction_j(b, pair, rings);
  REQUIRE((jab && ja && jb));
  CHECK(rings.restricted.multiply(*ja, *jb) == jab);
  CHECK(jab->v == iv({1, 2}));
  const auto c = whole.point(iv({2, 1}));
  auto cc = whole.multiply(c, c);
  REQUIRE(cc.has_value());
  CHECK_FALSE(restriction_j(*cc, pair, rings).has_value());

  CHECK(check_ring_hom(pair, rings, 1000, 3).ok);
  auto s0 = induced_surjectivity(pair, rings, 0);
  CHECK(s0.ok());
  CHECK(s0.restricted_dimension == 1);
  auto s1 = induced_surjectivity(pair, rings, 1);
  CHECK(s1.ok());
  CHECK(s1.restricted_dimension == 0);
}

TEST_CASE("restriction with P = Q is the identity") {
  const auto pair = triangulation_of_pair(reeve(3), reeve(3), 4);
  const PairRings rings(pair);
  for (const auto& m : rings.whole.monomials(2)) {
    auto jm = restriction_j(m, pair, rings);
    REQUIRE(jm.has_value());
    CHECK(jm->v == m.v);
  }
  const auto hom = check_ring_hom(pair, rings, 1000, 1);
  CHECK(hom.ok);
  CHECK(hom.nonzero_images > 0);
  for (unsigned k = 0; k <= 3; ++k) CHECK(induced_surjectivity(pair, rings, k).ok());
}

TEST_CASE("restriction from [0,2]^2 to an edge") {
  const auto pair =
      triangulation_of_pair(box(2, 2), LatticePolytope({iv({0, 0}), iv({2, 0})}), 5);
  const PairRings rings(pair);
  const auto s1 = induced_surjectivity(pair, rings, 1);
  CHECK(s1.restricted_dimension == 1);
  CHECK(s1.restricted_dimension <= s1.whole_dimension);
  CHECK(s1.ok());
  CHECK(check_ring_hom(pair, rings, 1000, 2).ok);
}

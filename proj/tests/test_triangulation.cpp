#include "doctest.h"

#include <set>

#include "deltacheck/ehrhart.hpp"
#include "deltacheck/triangulation.hpp"
#include "test_util.hpp"

using namespace deltacheck;
using namespace testutil;

namespace {

LatticeTriangulation trivial_segment() { return triangulate(segment(0, 2), ints({0, 0, 0})); }
LatticeTriangulation split_segment() { return triangulate(segment(0, 2), ints({0, -1, 0})); }

}  // namespace

TEST_CASE("regular_subdivision of [0,2]") {
  const std::vector<IntVector> pts{iv({0}), iv({1}), iv({2})};
  CHECK(regular_subdivision(pts, ints({0, 0, 0})) == std::vector<Face>{{0, 2}});
  CHECK(regular_subdivision(pts, ints({0, -1, 0})) == std::vector<Face>{{0, 1}, {1, 2}});
  CHECK(regular_subdivision(pts, ints({0, 5, 0})) == std::vector<Face>{{0, 2}});
}

TEST_CASE("regular_subdivision of the unit square") {
  // lexicographic points (0,0),(0,1),(1,0),(1,1)
  const std::vector<IntVector> pts{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})};
  CHECK(regular_subdivision(pts, ints({0, 1, 1, 0})) == std::vector<Face>{{0, 1, 3}, {0, 2, 3}});
  CHECK(regular_subdivision(pts, ints({1, 0, 0, 1})) == std::vector<Face>{{0, 1, 2}, {1, 2, 3}});
  CHECK_THROWS_AS(regular_subdivision(pts, ints({0, 0, 0, 0})), NotGeneric);
}

TEST_CASE("generic_heights") {
  const auto a = generic_heights(3, 1);
  CHECK(a.size() == 3);
  CHECK(a == generic_heights(3, 1));
  for (const auto& h : a) {
    CHECK(h >= 0);
    CHECK(h < 65536);
  }
  std::set<std::vector<Int>> seen;
  for (std::uint64_t s = 0; s < 100; ++s) seen.insert(generic_heights(3, s));
  CHECK(seen.size() == 100);
  const auto pen = generic_heights(3, 1, ints({0, 1000000, 0}));
  CHECK(pen[1] == a[1] + 1000000);
}

TEST_CASE("faces, links and h-polynomials on [0,2]") {
  const auto trivial = trivial_segment();
  const auto split = split_segment();
  CHECK(all_faces(trivial) == std::vector<Face>{{}, {0}, {2}, {0, 2}});
  CHECK(all_faces(split).size() == 6);
  CHECK(link(split, {1}) == std::vector<Face>{{}, {0}, {2}});
  CHECK(link(split, {0, 1}) == std::vector<Face>{{}});
  CHECK(link(split, {}) == all_faces(split));
  CHECK_THROWS_AS(link(split, {0, 2}), UsageError);
  CHECK(h_polynomial(all_faces(trivial), 1) == poly({1}));
  CHECK(h_polynomial(all_faces(split), 1) == poly({1, 1}));
  CHECK(h_polynomial({{}}, -1) == poly({1}));
  CHECK(is_unimodular(split));
  CHECK_FALSE(is_unimodular(trivial));
}

TEST_CASE("a single maximal simplex has 2^(d+1) faces") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto t = generic_triangulation(simplex(d), 1);
    CHECK(t.simplices().size() == 1);
    CHECK(all_faces(t).size() == (std::size_t{1} << (d + 1)));
  }
}

TEST_CASE("unit square diagonal triangulation is unimodular") {
  const auto t = triangulate(unit_square(), ints({0, 1, 1, 0}));
  CHECK(is_unimodular(t));
  CHECK(h_polynomial(t) == poly({1, 1}));
}

TEST_CASE("generic triangulations are valid and certified") {
  for (const auto& p : {unit_cube(), reeve(3), simplex(3, 2), box(3, 2)})
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const auto t = generic_triangulation(p, seed);
      CHECK_FALSE(validate_triangulation(t).has_value());
      CHECK(regularity_certificate(t));
      Int vol = 0;
      for (const auto& s : t.simplices()) vol += simplex_volume(t, s);
      CHECK(vol == normalized_volume(p));
      // h_T is an h-vector of a ball: h_0 = 1 and h(1) = number of cells
      const IntPoly h = h_polynomial(t);
      CHECK(h.coeff(0) == 1);
      CHECK(h.evaluate(1) == Int(static_cast<unsigned long>(t.simplices().size())));
    }
}

TEST_CASE("h_T equals delta exactly for unimodular triangulations of the cube") {
  const IntPoly delta = counting_delta(unit_cube());
  std::size_t unimodular = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto t = generic_triangulation(unit_cube(), seed);
    CHECK((h_polynomial(t) == delta) == is_unimodular(t));
    unimodular += is_unimodular(t);
  }
  CHECK(unimodular > 0);
}

TEST_CASE("triangulation_of_pair") {
  SUBCASE("[0,1] inside [0,2]") {
    const auto pair = triangulation_of_pair(segment(0, 2), segment(0, 1), 1);
    CHECK_FALSE(check_restriction(pair).has_value());
    CHECK(std::find(pair.whole.vertices().begin(), pair.whole.vertices().end(), 1) !=
          pair.whole.vertices().end());
    CHECK(pair.restricted.simplices().size() == 1);
    CHECK(pair.to_whole({0, 1}) == Face{0, 1});
    CHECK_FALSE(pair.to_restricted({1, 2}).has_value());
  }
  SUBCASE("P = Q") {
    const auto pair = triangulation_of_pair(unit_cube(), unit_cube(), 3);
    CHECK(pair.whole.simplices() == pair.restricted.simplices());
  }
  SUBCASE("diagonal of [0,2]^2") {
    const auto pair =
        triangulation_of_pair(box(2, 2), LatticePolytope({iv({0, 0}), iv({1, 1})}), 7);
    CHECK_FALSE(check_restriction(pair).has_value());
    CHECK(pair.restricted.dimension() == 1);
    CHECK(regularity_certificate(pair.whole));
    CHECK(regularity_certificate(pair.restricted));
  }
  SUBCASE("interior point of [0,2]^2") {
    const auto pair = triangulation_of_pair(box(2, 2), LatticePolytope({iv({1, 1})}), 2);
    CHECK(pair.restricted.dimension() == 0);
    CHECK(pair.restricted.simplices() == std::vector<Face>{{0}});
    CHECK_FALSE(check_restriction(pair).has_value());
  }
}

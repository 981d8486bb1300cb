#include "doctest.h"

#include <algorithm>
#include <functional>

#include "deltacheck/polytope.hpp"
#include "deltacheck/random.hpp"
#include "test_util.hpp"

using namespace deltacheck;
using namespace testutil;

namespace {

// Membership in a simplex by barycentric coordinates: solve for lambda with
// sum lambda_i (v_i, 1) = (x, 1) and require lambda >= 0.
bool in_simplex(const std::vector<IntVector>& vs, const IntVector& x) {
  const std::size_t d = x.size();
  RatMatrix a(d + 1, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) a(r, c) = vs[c][r];
    a(d, c) = 1;
  }
  RatVector b;
  for (const auto& xi : x) b.emplace_back(xi);
  b.emplace_back(1);
  auto lambda = solve(a, b);
  if (!lambda) return false;
  return std::all_of(lambda->begin(), lambda->end(), [](const Rat& q) { return q >= 0; });
}

Facet facet(std::initializer_list<long> n, long offset) { return Facet{iv(n), Int(offset)}; }

}  // namespace

TEST_CASE("construction validates vertices") {
  CHECK_THROWS_AS(LatticePolytope({}), UsageError);
  CHECK_THROWS_AS(LatticePolytope({iv({0}), iv({0, 1})}), UsageError);
  CHECK_THROWS_AS(LatticePolytope({iv({0}), iv({0})}), UsageError);
  CHECK_THROWS_AS(LatticePolytope({iv({0}), iv({1}), iv({2})}), UsageError);
  auto p = LatticePolytope::hull_of({iv({0}), iv({1}), iv({2}), iv({2})});
  CHECK(p.vertices() == std::vector<IntVector>{iv({0}), iv({2})});
  CHECK(LatticePolytope({iv({0, 0}), iv({2, 2})}).dimension() == 1);
}

TEST_CASE("facet_system") {
  auto sq = facet_system(unit_square());
  std::sort(sq.begin(), sq.end());
  FacetSystem expected{facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, 0}, -1), facet({0, -1}, -1)};
  std::sort(expected.begin(), expected.end());
  CHECK(sq == expected);

  auto tri = facet_system(simplex(2));
  std::sort(tri.begin(), tri.end());
  FacetSystem expected_tri{facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, -1}, -1)};
  std::sort(expected_tri.begin(), expected_tri.end());
  CHECK(tri == expected_tri);

  CHECK_THROWS_AS(facet_system(LatticePolytope({iv({0, 0}), iv({1, 1})})), DimensionError);
}

TEST_CASE("Reeve facets agree with barycentric membership") {
  const LatticePolytope p = reeve(2);
  const auto fs = facet_system(p);
  CHECK(fs.size() == 4);
  for (long x = -1; x <= 2; ++x)
    for (long y = -1; y <= 2; ++y)
      for (long z = -1; z <= 3; ++z) {
        const IntVector pt = iv({x, y, z});
        CHECK(satisfies(fs, pt) == in_simplex(p.vertices(), pt));
      }
}

TEST_CASE("lattice_points") {
  CHECK(lattice_points(segment(0, 2), 3).size() == 7);
  CHECK(lattice_points(unit_square(), 2).size() == 9);
  CHECK(lattice_points(reeve(2), 1).size() == 4);
  const auto pts = lattice_points(box(2, 1), 1);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(pts.front() == iv({0, 0}));
  CHECK(pts.back() == iv({2, 1}));
}

TEST_CASE("lattice point count agrees with a convex-hull membership scan") {
  SeededRng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::vector<IntVector> raw(d + 2, IntVector(d));
    for (auto& v : raw)
      for (auto& c : v) c = Int(static_cast<long>(rng.below(4)));
    const LatticePolytope p = LatticePolytope::hull_of(raw);
    if (!p.is_full_dimensional()) continue;
    for (unsigned m = 1; m <= 2; ++m) {
      std::vector<IntVector> scaled;
      for (const auto& v : p.vertices()) scaled.push_back(scale(v, m));
      Int brute = 0;
      IntVector x(d);
      std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == d) {
          if (in_convex_hull(scaled, x)) ++brute;
          return;
        }
        for (long t = 0; t <= 3 * static_cast<long>(m); ++t) {
          x[c] = t;
          rec(c + 1);
        }
      };
      rec(0);
      CHECK(count_lattice_points(p, m) == brute);
    }
  }
}

TEST_CASE("contains") {
  CHECK(contains(unit_square(), unit_square()));
  CHECK(contains(box(2, 2), unit_square()));
  CHECK_FALSE(contains(unit_square(), box(2, 2)));
  CHECK(contains(box(2, 2), LatticePolytope({iv({0, 0}), iv({1, 1})})));
  CHECK_FALSE(contains(LatticePolytope({iv({0, 0}), iv({2, 2})}), LatticePolytope({iv({0, 1})})));
  CHECK_THROWS_AS(contains(unit_square(), segment(0, 1)), UsageError);
}

TEST_CASE("normalized_volume") {
  for (std::size_t d = 1; d <= 4; ++d) CHECK(normalized_volume(simplex(d)) == 1);
  CHECK(normalized_volume(simplex(2, 2)) == 4);
  CHECK(normalized_volume(reeve(2)) == 2);
  CHECK(normalized_volume(unit_cube()) == 6);
  CHECK(normalized_volume(box(2, 3)) == 12);
  SeededRng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + trial % 3;
    std::vector<IntVector> vs(d + 1, IntVector(d));
    for (auto& v : vs)
      for (auto& c : v) c = Int(static_cast<long>(rng.below(5)));
    IntMatrix m(d + 1, d + 1);
    for (std::size_t c = 0; c <= d; ++c) {
      for (std::size_t r = 0; r < d; ++r) m(r, c) = vs[c][r];
      m(d, c) = 1;
    }
    const Int det = abs(determinant(m));
    if (det == 0) continue;
    CHECK(normalized_volume(LatticePolytope(vs)) == det);
  }
}

TEST_CASE("normalize puts a lower-dimensional polytope in its own lattice") {
  auto n = normalize(LatticePolytope({iv({0, 0, 0}), iv({2, 2, 0}), iv({0, 0, 3})}, "tri"));
  CHECK(n.polytope.is_full_dimensional());
  CHECK(n.polytope.ambient_rank() == 2);
  CHECK(n.polytope.name() == "tri");
  CHECK(normalized_volume(n.polytope) == 6);
}

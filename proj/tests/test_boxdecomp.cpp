#include "doctest.h"

#include <functional>
#include <set>

#include "deltacheck/boxdecomp.hpp"
#include "deltacheck/ehrhart.hpp"
#include "test_util.hpp"

using namespace deltacheck;
using namespace testutil;

namespace {

// Lattice points of the half-open parallelepiped by scanning its bounding box
// and solving for the coefficients.
std::set<IntVector> scanned_parallelepiped(const LatticeTriangulation& t, const Face& s) {
  const std::size_t n = t.dimension() + 1;
  std::vector<IntVector> cols;
  for (auto i : s) cols.push_back(t.lifted(i));
  IntVector lo(n), hi(n);
  for (const auto& c : cols)
    for (std::size_t r = 0; r < n; ++r) (c[r] < 0 ? lo[r] : hi[r]) += c[r];
  RatMatrix a(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) a(r, c) = cols[c][r];
  std::set<IntVector> out;
  IntVector x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == n) {
      RatVector b(x.begin(), x.end());
      auto q = solve(a, b);
      for (const auto& qi : *q)
        if (qi < 0 || qi >= 1) return;
      out.insert(x);
      return;
    }
    for (Int v = lo[r]; v <= hi[r]; ++v) {
      x[r] = v;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("box points of the long edge of [0,2]") {
  const auto t = triangulate(segment(0, 2), ints({0, 0, 0}));
  const auto b = box_points({0, 2}, t);
  REQUIRE(b.size() == 1);
  CHECK(b[0].w == iv({1, 1}));
  CHECK(b[0].q == RatVector{Rat(1, 2), Rat(1, 2)});
  CHECK(b[0].age == 1);
  CHECK(box_poly({0, 2}, t) == poly({0, 1}));
  CHECK(box_points({0}, t).empty());
  CHECK(box_poly({0}, t).is_zero());
  const auto e = box_points({}, t);
  REQUIRE(e.size() == 1);
  CHECK(e[0].w == iv({0, 0}));
  CHECK(e[0].age == 0);
  CHECK(box_poly({}, t) == poly({1}));
  CHECK(box_delta(t) == poly({1, 1}));
}

TEST_CASE("unimodular simplices have empty boxes") {
  const auto t = generic_triangulation(simplex(3), 1);
  for (const auto& f : t.faces())
    if (!f.empty()) CHECK(box_points(f, t).empty());
}

TEST_CASE("half-open parallelepiped matches a bounding-box scan") {
  for (const auto& p : {reeve(3), simplex(3, 2), box(3, 2), simplex(2, 3)})
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      const auto t = generic_triangulation(p, seed);
      for (const auto& s : t.simplices()) {
        std::set<IntVector> fast;
        for (const auto& pt : half_open_parallelepiped(t, s)) fast.insert(pt.w);
        CHECK(fast == scanned_parallelepiped(t, s));
        CHECK(Int(static_cast<unsigned long>(fast.size())) == simplex_volume(t, s));
      }
    }
}

TEST_CASE("box points partition each parallelepiped and pair ages symmetrically") {
  const auto t = generic_triangulation(simplex(3, 2), 4);
  for (const auto& s : t.simplices()) {
    std::size_t total = 0;
    for (unsigned mask = 0; mask < (1u << s.size()); ++mask) {
      Face f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      for (const auto& b : box_points(f, t)) {
        ++total;
        for (const auto& q : b.q) CHECK((q > 0 && q < 1));
      }
      const IntPoly ages = box_poly(f, t);
      for (std::size_t a = 0; a <= f.size(); ++a) CHECK(ages.coeff(a) == ages.coeff(f.size() - a));
    }
    CHECK(Int(static_cast<unsigned long>(total)) == simplex_volume(t, s));
  }
}

TEST_CASE("box decomposition reproduces delta") {
  CHECK(box_delta(generic_triangulation(reeve(2), 1)) == poly({1, 0, 1}));
  for (const auto& p : {unit_cube(), reeve(4), simplex(2, 2), box(3, 2), simplex(3, 2)})
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto t = generic_triangulation(p, seed);
      const IntPoly delta = counting_delta(p);
      CHECK(box_delta(t) == delta);
      CHECK(checked_box_delta(t, delta) == delta);
      if (is_unimodular(t)) CHECK(h_polynomial(t) == delta);
    }
  const auto t = generic_triangulation(reeve(3), 1);
  CHECK_THROWS_AS(checked_box_delta(t, poly({1, 1})), InconsistencyError);
}

TEST_CASE("decomposition terms") {
  const auto t = triangulate(segment(0, 2), ints({0, 0, 0}));
  const auto terms = box_decomposition(t);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].face.empty());
  CHECK(terms[0].link_h == poly({1}));
  CHECK(terms[0].d_ref == 1);
  CHECK(terms[1].face == Face{0, 2});
  CHECK(terms[1].box == poly({0, 1}));
  CHECK(terms[1].link_h == poly({1}));
  CHECK(terms[1].d_ref == -1);
}

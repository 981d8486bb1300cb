#include "doctest.h"

#include "deltacheck/ehrhart.hpp"
#include "test_util.hpp"

using namespace deltacheck;
using namespace testutil;

TEST_CASE("ehrhart_counts") {
  CHECK(ehrhart_counts(segment(0, 2)) == ints({1, 3}));
  CHECK(ehrhart_counts(unit_cube()) == ints({1, 8, 27, 64}));
  CHECK(ehrhart_counts(simplex(2, 2), 3) == ints({1, 6, 15, 28}));
  // Frozen from an independent bounding-box scan.
  CHECK(ehrhart_counts(reeve(2), 4) == ints({1, 4, 11, 24, 45}));
  CHECK(ehrhart_counts(reeve(3), 4) == ints({1, 4, 12, 28, 55}));
  CHECK(ehrhart_counts(reeve(4), 4) == ints({1, 4, 13, 32, 65}));
  CHECK(ehrhart_counts(reeve(5), 4) == ints({1, 4, 14, 36, 75}));
}

TEST_CASE("ehrhart_polynomial") {
  auto rat = [](long a) { return Rat(a); };
  auto f = ehrhart_polynomial(ints({1, 3}), 1);
  CHECK(f.coefficients == std::vector<Rat>{rat(1), rat(2)});
  f = ehrhart_polynomial(ints({1, 4, 9}), 2);
  CHECK(f.coefficients == std::vector<Rat>{rat(1), rat(2), rat(1)});
  f = ehrhart_polynomial(ints({1, 6, 15}), 2);
  CHECK(f.coefficients == std::vector<Rat>{rat(1), rat(3), rat(2)});
  CHECK(f.evaluate(3) == 28);
  // Reeve h=2: f(m) = m^3/3 + m^2 + 5m/3 + 1 predicts the later counts.
  f = ehrhart_polynomial(ints({1, 4, 11, 24}), 3);
  CHECK(f.evaluate(4) == 45);
  CHECK(f.coefficients.back() == Rat(1, 3));
}

TEST_CASE("delta_from_counts") {
  CHECK(delta_from_counts(ints({1, 3}), 1) == poly({1, 1}));
  CHECK(delta_from_counts(ints({1, 8, 27, 64}), 3) == poly({1, 4, 1}));
  for (std::size_t d = 1; d <= 4; ++d) CHECK(counting_delta(simplex(d)) == poly({1}));
  CHECK_THROWS_AS(delta_from_counts(ints({1, 1}), 1), InconsistencyError);
}

TEST_CASE("counting_delta goldens") {
  for (long k = 1; k <= 4; ++k) CHECK(counting_delta(segment(0, k)) == poly({1, k - 1}));
  CHECK(counting_delta(unit_square()) == poly({1, 1}));
  CHECK(counting_delta(unit_cube()) == poly({1, 4, 1}));
  CHECK(counting_delta(simplex(2, 2)) == poly({1, 3}));
  for (long h = 2; h <= 5; ++h) CHECK(counting_delta(reeve(h)) == poly({1, 0, h - 1}));
}

TEST_CASE("delta reproduces counts beyond the interpolation window") {
  for (const auto& p : {unit_cube(), reeve(3), simplex(3, 2), box(2, 3)}) {
    const std::size_t d = p.ambient_rank();
    const IntPoly delta = counting_delta(p);
    const auto counts = ehrhart_counts(p, d + 2);
    for (unsigned m = 0; m <= d + 2; ++m) {
      Int f = 0;
      for (std::size_t i = 0; i <= d && i <= m; ++i) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), m - i + d, d);
        f += delta.coeff(i) * b;
      }
      CHECK(f == counts[m]);
    }
  }
}

TEST_CASE("poly_leq") {
  CHECK(poly_leq(poly({1}), poly({1, 1})));
  CHECK_FALSE(poly_leq(poly({1, 2}), poly({1, 1})));
  CHECK(poly_leq(poly({1, 0, 1}), poly({1, 4, 1})));
  CHECK(poly({1, 4, 1}).to_string() == "1 + 4t + t^2");
  CHECK((poly({1, 1}) * poly({1, -1})) == poly({1, 0, -1}));
  CHECK(IntPoly::one_minus_t_pow(2) == poly({1, -2, 1}));
}

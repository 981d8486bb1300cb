#pragma once

#include <vector>

#include "deltacheck/poly.hpp"
#include "deltacheck/polytope.hpp"

namespace deltacheck {

/// f(m) = #(mP ∩ N) as a polynomial in m with rational coefficients,
/// lowest degree first.
struct EhrhartPolynomial {
  std::vector<Rat> coefficients;
  Rat evaluate(const Int& m) const;
};

/// (f(0), ..., f(up_to)); up_to defaults to dim P. p must be full-dimensional.
std::vector<Int> ehrhart_counts(const LatticePolytope& p);
std::vector<Int> ehrhart_counts(const LatticePolytope& p, unsigned up_to);

/// Interpolant of degree <= d through (m, counts[m]), m = 0..d.
EhrhartPolynomial ehrhart_polynomial(std::span<const Int> counts, unsigned d);

/// Numerator of sum_m f(m) t^m = delta(t) / (1-t)^{d+1}:
///   delta_i = sum_{j<=i} (-1)^j C(d+1, j) f(i-j),  i = 0..d.
/// Throws InconsistencyError on a negative coefficient.
IntPoly delta_from_counts(std::span<const Int> counts, unsigned d);

/// delta of a full-dimensional polytope by lattice-point counting.
IntPoly counting_delta(const LatticePolytope& p);

}  // namespace deltacheck

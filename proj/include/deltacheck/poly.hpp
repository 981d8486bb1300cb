#pragma once

#include <string>
#include <vector>

#include "deltacheck/exactmath.hpp"

namespace deltacheck {

/// Integer polynomial in t, lowest degree first, trailing zeros trimmed.
/// Used for delta-polynomials, h-polynomials and box generating functions.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coefficients);
  static IntPoly monomial(std::size_t degree, const Int& coefficient = 1);
  /// (1 - t)^e
  static IntPoly one_minus_t_pow(std::size_t e);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int evaluate(const Int& t) const;
  bool has_negative_coefficient() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  /// e.g. "1 + 4t + t^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Coefficientwise f <= g, missing coefficients read as 0.
bool poly_leq(const IntPoly& f, const IntPoly& g);

}  // namespace deltacheck

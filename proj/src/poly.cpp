#include "deltacheck/poly.hpp"

#include <algorithm>
#include <sstream>

namespace deltacheck {

IntPoly::IntPoly(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, const Int& coefficient) {
  std::vector<Int> c(degree + 1);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::one_minus_t_pow(std::size_t e) {
  // binomial row with alternating signs
  std::vector<Int> c(e + 1);
  Int b = 1;
  for (std::size_t k = 0; k <= e; ++k) {
    c[k] = (k % 2 == 0) ? b : Int(-b);
    b = b * static_cast<unsigned long>(e - k) / static_cast<unsigned long>(k + 1);
  }
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::evaluate(const Int& t) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool IntPoly::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c < 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool poly_leq(const IntPoly& f, const IntPoly& g) {
  const std::size_t n = std::max(f.coefficients().size(), g.coefficients().size());
  for (std::size_t i = 0; i < n; ++i)
    if (f.coeff(i) > g.coeff(i)) return false;
  return true;
}

}  // namespace deltacheck

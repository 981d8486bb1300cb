#include "deltacheck/ehrhart.hpp"

namespace deltacheck {

namespace {

Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

Rat EhrhartPolynomial::evaluate(const Int& m) const {
  Rat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * m + *it;
  return acc;
}

std::vector<Int> ehrhart_counts(const LatticePolytope& p) {
  return ehrhart_counts(p, static_cast<unsigned>(p.dimension()));
}

std::vector<Int> ehrhart_counts(const LatticePolytope& p, unsigned up_to) {
  std::vector<Int> counts;
  counts.reserve(up_to + 1);
  for (unsigned m = 0; m <= up_to; ++m) counts.push_back(count_lattice_points(p, m));
  return counts;
}

EhrhartPolynomial ehrhart_polynomial(std::span<const Int> counts, unsigned d) {
  if (counts.size() < d + 1) throw UsageError("ehrhart_polynomial: need d+1 counts");
  // Newton forward differences, then expand the falling-factorial basis.
  std::vector<Rat> diff(counts.begin(), counts.begin() + d + 1);
  std::vector<Rat> newton;
  for (unsigned k = 0; k <= d; ++k) {
    newton.push_back(diff[0]);
    for (unsigned i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  EhrhartPolynomial out{std::vector<Rat>(d + 1)};
  std::vector<Rat> basis{Rat(1)};  // C(m, k) expanded in powers of m
  for (unsigned k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) out.coefficients[i] += newton[k] * basis[i];
    // C(m, k+1) = C(m, k) * (m - k) / (k + 1)
    std::vector<Rat> next(basis.size() + 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i] / (k + 1);
      next[i] -= basis[i] * k / (k + 1);
    }
    basis = std::move(next);
  }
  return out;
}

IntPoly delta_from_counts(std::span<const Int> counts, unsigned d) {
  if (counts.size() < d + 1) throw UsageError("delta_from_counts: need d+1 counts");
  std::vector<Int> delta(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      Int term = binomial(d + 1, j) * counts[i - j];
      if (j % 2) delta[i] -= term;
      else delta[i] += term;
    }
    if (delta[i] < 0)
      throw InconsistencyError("delta_from_counts: negative coefficient delta_" +
                               std::to_string(i) + " = " + delta[i].get_str() +
                               " (counts " + to_string(counts) + ")");
  }
  return IntPoly(std::move(delta));
}

IntPoly counting_delta(const LatticePolytope& p) {
  const auto d = static_cast<unsigned>(p.dimension());
  return delta_from_counts(ehrhart_counts(p, d), d);
}

}  // namespace deltacheck

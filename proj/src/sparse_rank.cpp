#include <algorithm>
#include <unordered_map>

#include "deltacheck/exactmath.hpp"

namespace deltacheck {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mul_mod(acc, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t reduce(const Int& x) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(kPrime));
}

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

// r <- r - f * p, merging sorted supports; drops zeros.
ModRow eliminate_mod(const ModRow& r, const ModRow& p, std::uint64_t f) {
  ModRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, sub_mod(0, mul_mod(f, p[j].second)));
      ++j;
    } else {
      std::uint64_t v = sub_mod(r[i].second, mul_mod(f, p[j].second));
      if (v) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// r <- a*r - b*p over Z, merging sorted supports; drops zeros.
SparseRow eliminate_int(const SparseRow& r, const SparseRow& p, const Int& a, const Int& b) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Int v = a * r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void remove_content(SparseRow& r) {
  Int g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

void check_row(const SparseRow& r, std::size_t cols) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].first >= cols) throw UsageError("sparse row column out of range");
    if (i > 0 && r[i].first <= r[i - 1].first)
      throw UsageError("sparse row columns must be strictly increasing");
  }
}

}  // namespace

std::size_t sparse_rank_modular(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::unordered_map<std::size_t, ModRow> pivots;
  const std::size_t limit = std::min(rows.size(), cols);
  for (const auto& src : rows) {
    if (pivots.size() == limit) break;
    check_row(src, cols);
    ModRow r;
    r.reserve(src.size());
    for (const auto& [c, v] : src)
      if (auto m = reduce(v)) r.emplace_back(c, m);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = pow_mod(r.front().second, kPrime - 2);
        for (auto& e : r) e.second = mul_mod(e.second, inv);
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      r = eliminate_mod(r, it->second, r.front().second);
    }
  }
  return pivots.size();
}

std::size_t sparse_rank_integer(std::vector<SparseRow> rows, std::size_t cols) {
  std::unordered_map<std::size_t, SparseRow> pivots;
  const std::size_t limit = std::min(rows.size(), cols);
  for (auto& r : rows) {
    if (pivots.size() == limit) break;
    check_row(r, cols);
    remove_content(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const Int& pv = it->second.front().second;
      const Int& rv = r.front().second;
      Int g;
      mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), rv.get_mpz_t());
      const Int a = pv / g;
      const Int b = rv / g;
      r = eliminate_int(r, it->second, a, b);
      remove_content(r);
    }
  }
  return pivots.size();
}

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t cols) {
  const std::size_t lower = sparse_rank_modular(rows, cols);
  if (lower == std::min(rows.size(), cols)) return lower;
  return sparse_rank_integer(std::move(rows), cols);
}

}  // namespace deltacheck

#include "deltacheck/exactmath.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace deltacheck {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
  return out;
}

Int pairing(std::span<const Int> u, std::span<const Int> v) {
  if (u.size() != v.size())
    throw UsageError("pairing: length mismatch (" + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
  Int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

IntVector add(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw UsageError("add: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector subtract(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw UsageError("subtract: length mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector scale(std::span<const Int> a, const Int& k) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

IntVector append(std::span<const Int> x, const Int& last) {
  IntVector out(x.begin(), x.end());
  out.push_back(last);
  return out;
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

namespace {

// Bareiss forward elimination in place; returns rank and sign of the row
// permutation applied.
std::size_t bareiss(IntMatrix& m, int* sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Int prev = 1;
  Int tmp;
  if (sign) *sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      m.swap_rows(p, rank);
      if (sign) *sign = -*sign;
    }
    const Int pivot = m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        tmp = pivot * m(i, j) - lead * m(rank, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rat scaled = m(r, c) * l;
      out(r, c) = scaled.get_num();
    }
  }
  return out;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& m) {
  IntMatrix work = m;
  return bareiss(work, nullptr);
}

std::size_t rank_exact(const RatMatrix& m) {
  IntMatrix work = clear_denominators(m);
  return bareiss(work, nullptr);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix work = m;
  int sign = 1;
  if (bareiss(work, &sign) < n) return 0;
  return sign * work(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("adjugate: matrix not square");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_ij goes to adj(j, i)
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Int cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
    }
  }
  return adj;
}

namespace {

// Column operation on both h and u: (ca, cb) <- (x*ca + y*cb, z*ca + w*cb).
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Int& x, const Int& y,
                     const Int& z, const Int& w) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int va = m(r, a);
    Int vb = m(r, b);
    m(r, a) = x * va + y * vb;
    m(r, b) = z * va + w * vb;
  }
}

void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= k * m(r, src);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm column_hermite(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t n = h.cols();
  std::size_t col = 0;
  Int g, x, y;
  for (std::size_t row = 0; row < h.rows() && col < n; ++row) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (h(row, j) == 0) continue;
      const Int av = h(row, col);
      const Int bv = h(row, j);
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
      const Int z = -bv / g;
      const Int w = av / g;
      combine_columns(h, col, j, x, y, z, w);
      combine_columns(u, col, j, x, y, z, w);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_column(h, col);
      negate_column(u, col);
    }
    const Int pivot = h(row, col);
    for (std::size_t k = 0; k < col; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, k).get_mpz_t(), pivot.get_mpz_t());
      if (q != 0) {
        axpy_column(h, k, col, q);
        axpy_column(u, k, col, q);
      }
    }
    out.pivot_rows.push_back(row);
    ++col;
  }
  out.rank = col;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  HermiteForm hf = column_hermite(a);
  const std::size_t n = a.cols();
  IntMatrix ker(n, n - hf.rank);
  for (std::size_t c = hf.rank; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) ker(r, c - hf.rank) = hf.u(r, c);
  return ker;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rat> b) {
  if (b.size() != a.rows()) throw UsageError("solve: right-hand side length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RatMatrix aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = a(r, c);
    aug(r, cols) = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && aug(p, c) == 0) ++p;
    if (p == rows) continue;
    aug.swap_rows(p, rank);
    const Rat inv = 1 / aug(rank, c);
    for (std::size_t j = c; j <= cols; ++j) aug(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || aug(i, c) == 0) continue;
      const Rat f = aug(i, c);
      for (std::size_t j = c; j <= cols; ++j) aug(i, j) -= f * aug(rank, j);
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (aug(r, cols) != 0) return std::nullopt;
  if (rank < cols) throw UsageError("solve: system is underdetermined");
  RatVector x(cols);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = aug(r, cols);
  return x;
}

AffineEmbedding::AffineEmbedding(IntVector origin, IntMatrix basis)
    : origin_(std::move(origin)), basis_(std::move(basis)) {
  if (basis_.cols() > 0 && basis_.rows() != origin_.size())
    throw UsageError("AffineEmbedding: basis rows must match origin length");
  if (basis_.cols() == 0) basis_ = IntMatrix(origin_.size(), 0);
}

IntVector AffineEmbedding::to_ambient(std::span<const Int> reduced) const {
  if (reduced.size() != dim()) throw UsageError("to_ambient: wrong reduced length");
  IntVector out = origin_;
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out[r] += basis_(r, c) * reduced[c];
  return out;
}

std::optional<IntVector> AffineEmbedding::solve_linear(std::span<const Int> direction) const {
  // Basis is in column Hermite form, so forward substitution along the
  // leading rows determines y; the full product is then re-checked.
  IntVector y(dim());
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim(); ++c) {
    while (row < basis_.rows() && basis_(row, c) == 0) ++row;
    if (row == basis_.rows()) throw UsageError("AffineEmbedding: basis is not in Hermite form");
    Int rhs = direction[row];
    for (std::size_t k = 0; k < c; ++k) rhs -= basis_(row, k) * y[k];
    if (!mpz_divisible_p(rhs.get_mpz_t(), basis_(row, c).get_mpz_t())) return std::nullopt;
    y[c] = rhs / basis_(row, c);
    ++row;
  }
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < dim(); ++c) acc += basis_(r, c) * y[c];
    if (acc != direction[r]) return std::nullopt;
  }
  return y;
}

std::optional<IntVector> AffineEmbedding::to_reduced(std::span<const Int> ambient) const {
  if (ambient.size() != ambient_rank()) throw UsageError("to_reduced: wrong ambient length");
  return solve_linear(subtract(ambient, origin_));
}

std::optional<IntVector> AffineEmbedding::cone_to_reduced(
    std::span<const Int> ambient_with_height) const {
  if (ambient_with_height.size() != ambient_rank() + 1)
    throw UsageError("cone_to_reduced: wrong length");
  const Int& k = ambient_with_height.back();
  IntVector direction(ambient_rank());
  for (std::size_t i = 0; i < ambient_rank(); ++i)
    direction[i] = ambient_with_height[i] - k * origin_[i];
  auto y = solve_linear(direction);
  if (!y) return std::nullopt;
  y->push_back(k);
  return y;
}

IntVector AffineEmbedding::cone_to_ambient(std::span<const Int> reduced_with_height) const {
  if (reduced_with_height.size() != dim() + 1) throw UsageError("cone_to_ambient: wrong length");
  const Int& k = reduced_with_height.back();
  IntVector out(ambient_rank() + 1);
  for (std::size_t r = 0; r < ambient_rank(); ++r) {
    out[r] = k * origin_[r];
    for (std::size_t c = 0; c < dim(); ++c) out[r] += basis_(r, c) * reduced_with_height[c];
  }
  out.back() = k;
  return out;
}

AffineNormalization hermite_affine_normalize(std::span<const IntVector> points) {
  if (points.empty()) throw UsageError("hermite_affine_normalize: empty point list");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw UsageError("hermite_affine_normalize: mixed point lengths");

  // Rows: differences to the first point. Their orthogonal lattice, and the
  // kernel of that, is the saturated lattice of the affine span.
  IntMatrix diffs(points.size() - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) diffs(i - 1, c) = points[i][c] - points[0][c];
  IntMatrix normals = integer_kernel(diffs);
  IntMatrix span = integer_kernel(normals.transpose());
  HermiteForm hf = column_hermite(span);
  IntMatrix basis(n, hf.rank);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < hf.rank; ++c) basis(r, c) = hf.h(r, c);

  AffineNormalization out{{}, AffineEmbedding(points.front(), std::move(basis))};
  out.points.reserve(points.size());
  for (const auto& p : points) {
    auto y = out.embedding.to_reduced(p);
    if (!y) throw InconsistencyError("hermite_affine_normalize: point not in its own span");
    out.points.push_back(std::move(*y));
  }
  return out;
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw UsageError("integer " + x.get_str() + " exceeds machine range");
  return x.get_si();
}

}  // namespace deltacheck

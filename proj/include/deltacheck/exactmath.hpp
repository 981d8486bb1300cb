#pragma once

// Exact integer/rational substrate: dense matrices, Hermite normal form,
// integer kernels, exact rank and solving, and affine re-coordinatization.
// Nothing in this library touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltacheck/errors.hpp"

namespace deltacheck {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw UsageError("from_rows: ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw UsageError("from_columns: ragged columns");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rational(const IntMatrix& m);

/// Dot product identifying M x Z with Z^{d+1} in dual coordinates.
Int pairing(std::span<const Int> u, std::span<const Int> v);

IntVector add(std::span<const Int> a, std::span<const Int> b);
IntVector subtract(std::span<const Int> a, std::span<const Int> b);
IntVector scale(std::span<const Int> a, const Int& k);
/// (x, last) in N x Z.
IntVector append(std::span<const Int> x, const Int& last);

Int gcd_of(std::span<const Int> v);

/// Exact rank over Q (fraction-free Bareiss elimination).
std::size_t rank_exact(const RatMatrix& m);
std::size_t rank_exact(const IntMatrix& m);

/// Determinant of a square integer matrix (Bareiss).
Int determinant(const IntMatrix& m);

/// Adjugate of a square integer matrix: adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Column-style Hermite normal form: `a * u == h` with `u` unimodular.
/// The first `rank` columns of `h` are nonzero; column j has its leading
/// (topmost) nonzero entry in row pivot_rows[j], that entry is positive,
/// and entries to its left in the same row lie in [0, pivot).
/// Remaining columns of `h` are zero.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
HermiteForm column_hermite(const IntMatrix& a);

/// Basis (as columns) of the saturated lattice {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Unique solution of a x = b, nullopt if inconsistent.
/// Throws UsageError when the system is consistent but underdetermined.
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rat> b);

/// Affine map y -> origin + basis * y from Z^dim onto (aff span) ∩ Z^n.
class AffineEmbedding {
 public:
  AffineEmbedding() = default;
  AffineEmbedding(IntVector origin, IntMatrix basis);

  std::size_t ambient_rank() const { return origin_.size(); }
  std::size_t dim() const { return basis_.cols(); }
  const IntVector& origin() const { return origin_; }
  const IntMatrix& basis() const { return basis_; }

  IntVector to_ambient(std::span<const Int> reduced) const;
  /// Reduced coordinates of an ambient lattice point, nullopt if the point is
  /// off the affine span (or not on its lattice).
  std::optional<IntVector> to_reduced(std::span<const Int> ambient) const;

  /// Linear extension to cones: (x, k) with x in k*aff -> (y, k).
  std::optional<IntVector> cone_to_reduced(std::span<const Int> ambient_with_height) const;
  IntVector cone_to_ambient(std::span<const Int> reduced_with_height) const;

 private:
  std::optional<IntVector> solve_linear(std::span<const Int> direction) const;

  IntVector origin_;
  IntMatrix basis_;  // ambient_rank x dim, column Hermite form
};

struct AffineNormalization {
  std::vector<IntVector> points;  // reduced coordinates, first point at the origin
  AffineEmbedding embedding;
};

/// Re-express points in a basis of (affine span ∩ ambient lattice).
AffineNormalization hermite_affine_normalize(std::span<const IntVector> points);

/// Sparse integer row: (column, nonzero value), strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Int>>;

/// Exact rank over Q of a sparse integer matrix. A modular elimination runs
/// first; its rank is a lower bound of the rational rank, so when it reaches
/// min(rows, cols) it is returned directly. Otherwise an exact
/// fraction-free elimination over Z decides.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t cols);

/// Exact-only path of sparse_rank (no modular shortcut). Exposed for tests.
std::size_t sparse_rank_integer(std::vector<SparseRow> rows, std::size_t cols);

/// Rank of the matrix reduced modulo the prime 2^61 - 1.
std::size_t sparse_rank_modular(const std::vector<SparseRow>& rows, std::size_t cols);

std::string to_string(std::span<const Int> v);

/// Int narrowed to a machine integer; throws if it does not fit.
long to_long(const Int& x);

}  // namespace deltacheck

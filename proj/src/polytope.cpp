#include "deltacheck/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace deltacheck {

namespace {

// Normal to the hyperplane through p[idx[0]], ..., p[idx[d-1]] in Z^d via
// signed maximal minors of the difference matrix.
IntVector hyperplane_normal(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx,
                            std::size_t d) {
  IntMatrix w(d - 1, d);
  for (std::size_t r = 1; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) w(r - 1, c) = pts[idx[r]][c] - pts[idx[0]][c];
  IntVector normal(d);
  IntMatrix minor(d - 1, d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (std::size_t c = 0, mc = 0; c < d; ++c)
        if (c != j) minor(r, mc++) = w(r, c);
    Int det = determinant(minor);
    normal[j] = (j % 2 == 0) ? det : Int(-det);
  }
  return normal;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t affine_dimension(const std::vector<IntVector>& pts) {
  return hermite_affine_normalize(pts).embedding.dim();
}

// Interval of integers x with n*x >= rhs, intersected into [lo, hi].
// Returns false when empty.
bool tighten(const Int& n, const Int& rhs, Int& lo, Int& hi) {
  if (n > 0) {
    Int b;
    mpz_cdiv_q(b.get_mpz_t(), rhs.get_mpz_t(), n.get_mpz_t());
    if (b > lo) lo = b;
  } else if (n < 0) {
    Int b;
    mpz_fdiv_q(b.get_mpz_t(), rhs.get_mpz_t(), n.get_mpz_t());
    if (b < hi) hi = b;
  } else if (rhs > 0) {
    return false;
  }
  return lo <= hi;
}

// Scans the bounding box of m*p, pruning the last coordinate to the exact
// interval allowed by the facets. Calls emit(x) in lexicographic order.
template <typename Emit>
void scan_lattice_points(const LatticePolytope& p, unsigned m, Emit&& emit) {
  const FacetSystem facets = facet_system(p);
  const std::size_t d = p.ambient_rank();
  if (d == 0) {
    emit(IntVector{});
    return;
  }
  IntVector lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    lo[c] = hi[c] = p.vertices().front()[c];
    for (const auto& v : p.vertices()) {
      if (v[c] < lo[c]) lo[c] = v[c];
      if (v[c] > hi[c]) hi[c] = v[c];
    }
    lo[c] *= m;
    hi[c] *= m;
  }
  std::vector<Int> rhs(facets.size());
  IntVector x(lo);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c + 1 == d) {
      Int a = lo[c], b = hi[c];
      for (std::size_t f = 0; f < facets.size(); ++f) {
        Int r = facets[f].offset * m;
        for (std::size_t i = 0; i < c; ++i) r -= facets[f].normal[i] * x[i];
        if (!tighten(facets[f].normal[c], r, a, b)) return;
      }
      for (Int t = a; t <= b; ++t) {
        x[c] = t;
        emit(x);
      }
      return;
    }
    for (Int t = lo[c]; t <= hi[c]; ++t) {
      x[c] = t;
      rec(c + 1);
    }
  };
  rec(0);
}

}  // namespace

LatticePolytope::LatticePolytope(std::vector<IntVector> vertices, std::string name)
    : vertices_(std::move(vertices)), name_(std::move(name)) {
  if (vertices_.empty()) throw UsageError("polytope needs at least one vertex");
  ambient_rank_ = vertices_.front().size();
  for (const auto& v : vertices_)
    if (v.size() != ambient_rank_) throw UsageError("polytope vertices have mixed lengths");
  {
    std::set<IntVector> seen;
    for (const auto& v : vertices_)
      if (!seen.insert(v).second) throw UsageError("duplicate vertex " + to_string(v));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i) others.push_back(vertices_[j]);
    if (!others.empty() && in_convex_hull(others, vertices_[i]))
      throw UsageError("vertex " + to_string(vertices_[i]) + " is not extreme");
  }
  dimension_ = affine_dimension(vertices_);
}

LatticePolytope LatticePolytope::hull_of(const std::vector<IntVector>& points, std::string name) {
  std::vector<IntVector> distinct;
  std::set<IntVector> seen;
  for (const auto& p : points)
    if (seen.insert(p).second) distinct.push_back(p);
  std::vector<IntVector> extreme;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (j != i) others.push_back(distinct[j]);
    if (others.empty() || !in_convex_hull(others, distinct[i])) extreme.push_back(distinct[i]);
  }
  return LatticePolytope(std::move(extreme), std::move(name));
}

LatticePolytope LatticePolytope::dilate(const Int& m) const {
  if (m <= 0) throw UsageError("dilate: factor must be positive");
  std::vector<IntVector> vs;
  for (const auto& v : vertices_) vs.push_back(scale(v, m));
  return LatticePolytope(std::move(vs), name_);
}

NormalizedPolytope normalize(const LatticePolytope& p) {
  AffineNormalization n = hermite_affine_normalize(p.vertices());
  return {LatticePolytope(std::move(n.points), p.name()), std::move(n.embedding)};
}

FacetSystem hull_facets(const std::vector<IntVector>& points) {
  if (points.empty()) throw UsageError("hull_facets: no points");
  const std::size_t d = points.front().size();
  if (d == 0) return {};
  std::set<Facet> found;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    IntVector normal = hyperplane_normal(points, idx, d);
    Int g = gcd_of(normal);
    if (g == 0) return;
    for (auto& c : normal) c /= g;
    Int offset = pairing(normal, points[idx[0]]);
    bool any_pos = false, any_neg = false;
    for (const auto& p : points) {
      Int s = pairing(normal, p) - offset;
      if (s > 0) any_pos = true;
      if (s < 0) any_neg = true;
      if (any_pos && any_neg) return;
    }
    if (any_neg) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    found.insert(Facet{std::move(normal), std::move(offset)});
  });
  return {found.begin(), found.end()};
}

FacetSystem facet_system(const LatticePolytope& p) {
  if (!p.is_full_dimensional())
    throw DimensionError("facet_system: polytope of dimension " + std::to_string(p.dimension()) +
                         " in rank " + std::to_string(p.ambient_rank()) +
                         " is not full-dimensional; normalize it first");
  return hull_facets(p.vertices());
}

bool satisfies(const FacetSystem& facets, std::span<const Int> x, const Int& dilation) {
  for (const auto& f : facets)
    if (pairing(f.normal, x) < f.offset * dilation) return false;
  return true;
}

bool in_convex_hull(const std::vector<IntVector>& points, std::span<const Int> x) {
  AffineNormalization n = hermite_affine_normalize(points);
  auto y = n.embedding.to_reduced(x);
  if (!y) return false;
  return satisfies(hull_facets(n.points), *y);
}

std::vector<IntVector> lattice_points(const LatticePolytope& p, unsigned m) {
  std::vector<IntVector> out;
  scan_lattice_points(p, m, [&](const IntVector& x) { out.push_back(x); });
  return out;
}

Int count_lattice_points(const LatticePolytope& p, unsigned m) {
  Int n = 0;
  scan_lattice_points(p, m, [&](const IntVector&) { ++n; });
  return n;
}

bool contains(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_rank() != q.ambient_rank())
    throw UsageError("contains: ambient ranks differ");
  NormalizedPolytope np = normalize(p);
  const FacetSystem facets = hull_facets(np.polytope.vertices());
  for (const auto& v : q.vertices()) {
    auto y = np.embedding.to_reduced(v);
    if (!y || !satisfies(facets, *y)) return false;
  }
  return true;
}

namespace {

Int pulling_volume(const std::vector<IntVector>& vertices) {
  const std::size_t d = vertices.front().size();
  if (d == 0) return 1;
  const IntVector& apex = vertices.front();
  Int total = 0;
  for (const auto& f : hull_facets(vertices)) {
    Int height = pairing(f.normal, apex) - f.offset;
    if (height == 0) continue;
    std::vector<IntVector> on_facet;
    for (const auto& v : vertices)
      if (pairing(f.normal, v) == f.offset) on_facet.push_back(v);
    AffineNormalization facet = hermite_affine_normalize(on_facet);
    total += height * pulling_volume(facet.points);
  }
  return total;
}

}  // namespace

Int normalized_volume(const LatticePolytope& p) {
  if (!p.is_full_dimensional())
    throw DimensionError("normalized_volume: polytope is not full-dimensional; normalize it first");
  return pulling_volume(p.vertices());
}

}  // namespace deltacheck

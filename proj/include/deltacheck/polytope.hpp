#pragma once

#include <string>
#include <vector>

#include "deltacheck/exactmath.hpp"

namespace deltacheck {

/// Inequality <normal, x> >= offset with a primitive inner normal.
struct Facet {
  IntVector normal;
  Int offset;
  bool operator==(const Facet&) const = default;
  bool operator<(const Facet& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

using FacetSystem = std::vector<Facet>;

/// Convex hull of finitely many lattice points, stored by its vertices.
/// Construction rejects duplicates and non-extreme vertices.
class LatticePolytope {
 public:
  LatticePolytope(std::vector<IntVector> vertices, std::string name = {});

  /// Polytope spanned by arbitrary points; non-extreme points and duplicates
  /// are dropped (first occurrence order is kept).
  static LatticePolytope hull_of(const std::vector<IntVector>& points, std::string name = {});

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::string& name() const { return name_; }
  /// Affine dimension.
  std::size_t dimension() const { return dimension_; }
  bool is_full_dimensional() const { return dimension_ == ambient_rank_; }

  LatticePolytope dilate(const Int& m) const;

 private:
  std::vector<IntVector> vertices_;
  std::string name_;
  std::size_t ambient_rank_ = 0;
  std::size_t dimension_ = 0;
};

/// A polytope re-expressed in the lattice of its affine span, plus the map back.
struct NormalizedPolytope {
  LatticePolytope polytope;
  AffineEmbedding embedding;
};

NormalizedPolytope normalize(const LatticePolytope& p);

/// Facets of the hull of `points`, which must affinely span Z^d.
/// Points need not be extreme. Sorted, irredundant.
FacetSystem hull_facets(const std::vector<IntVector>& points);

/// Throws DimensionError unless p is full-dimensional.
FacetSystem facet_system(const LatticePolytope& p);

bool satisfies(const FacetSystem& facets, std::span<const Int> x, const Int& dilation = 1);

/// True iff x lies in conv(points); any point set, any dimension.
bool in_convex_hull(const std::vector<IntVector>& points, std::span<const Int> x);

/// Lattice points of m*p in lexicographic order. p must be full-dimensional.
std::vector<IntVector> lattice_points(const LatticePolytope& p, unsigned m);

/// Number of lattice points of m*p without materializing them.
Int count_lattice_points(const LatticePolytope& p, unsigned m);

/// True iff q ⊆ p (same ambient rank required).
bool contains(const LatticePolytope& p, const LatticePolytope& q);

/// d! * Euclidean volume of a full-dimensional p. Computed by coning from the
/// first vertex over the facets missing it (a pulling triangulation),
/// recursing into each facet's own lattice.
Int normalized_volume(const LatticePolytope& p);

}  // namespace deltacheck

#pragma once

// Deformed group ring Q[N x Z]^Δ of the fan over a lattice triangulation:
// one monomial y^v per lattice point v of the cone over P x {1}, with
// y^v * y^w = y^{v+w} when some cone of the fan holds both and 0 otherwise.
// Quotienting by the degree-one forms theta_u = sum_i <(v_i,1), u> y^{(v_i,1)}
// gives a graded algebra whose Hilbert function is delta_P.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltacheck/exactmath.hpp"
#include "deltacheck/poly.hpp"
#include "deltacheck/triangulation.hpp"

namespace deltacheck {

/// Lattice point of the cone; degree = last coordinate; carrier = minimal
/// face whose cone contains v (empty for v = 0).
struct ConePoint {
  IntVector v;
  Int degree;
  Face carrier;
  bool operator==(const ConePoint&) const = default;
};

/// theta_u with one term per vertex of T (zero coefficients kept).
struct RelationGenerator {
  IntVector u;
  std::vector<std::pair<std::size_t, Int>> terms;  // (point index, <(v_i,1), u>)
};

/// Degree-k piece: monomial basis and the relation rows y^w * theta_u
/// (deg w = k-1) written over that basis. Rank is summed over blocks of
/// monomials sharing a box part, which the relations never mix.
struct GradedSlice {
  unsigned degree = 0;
  std::vector<ConePoint> basis;       // lexicographic in v
  std::vector<SparseRow> relations;   // columns index `basis`
  std::size_t relation_rank = 0;
  std::size_t blocks = 0;
  bool rank_computed = false;

  Int quotient_dimension() const { return Int(basis.size()) - Int(relation_rank); }
};

class DeformedGroupRing {
 public:
  explicit DeformedGroupRing(LatticeTriangulation t);

  const LatticeTriangulation& triangulation() const { return t_; }
  std::size_t rank() const { return t_.dimension() + 1; }

  /// Validates v ∈ σ ∩ (N x Z) and attaches its carrier; UsageError otherwise.
  ConePoint point(IntVector v) const;

  /// y^a * y^b, nullopt for zero.
  std::optional<ConePoint> multiply(const ConePoint& a, const ConePoint& b) const;

  /// theta_u for u running over the columns of `dual_basis` (the standard
  /// basis of M x Z when omitted).
  std::vector<RelationGenerator> relation_generators(const IntMatrix* dual_basis = nullptr) const;

  /// Monomials of degree k, lexicographic.
  std::vector<ConePoint> monomials(unsigned k) const;

  GradedSlice slice(unsigned k, const IntMatrix* dual_basis = nullptr,
                    bool compute_rank = true) const;

  /// dim of the degree-k quotient piece.
  Int graded_dimension(unsigned k, const IntMatrix* dual_basis = nullptr) const;

  /// sum_{k <= d} graded_dimension(k) t^k.
  IntPoly hilbert_delta() const;

  /// Box part of v: sum of frac(lambda_i) (v_i, 1) over its carrier.
  IntVector box_part(std::span<const Int> v) const;

 private:
  struct Location {
    std::size_t simplex;
    IntVector numerators;  // lambda_i * |det| over the simplex vertices
  };
  Location locate(std::span<const Int> v) const;

  LatticeTriangulation t_;
  std::vector<IntMatrix> lifted_;    // per simplex, columns (v_i, 1)
  std::vector<IntMatrix> adjugate_;  // per simplex
  std::vector<Int> det_;             // per simplex
};

std::optional<ConePoint> deformed_multiply(const ConePoint& a, const ConePoint& b,
                                           const DeformedGroupRing& ring);

/// Rings of both sides of a certified pair.
struct PairRings {
  DeformedGroupRing whole;
  DeformedGroupRing restricted;
  explicit PairRings(const TriangulatedPair& pair);
};

/// j(y^v) = y^v (in Q's own coordinates) when the carrier of v is a face of
/// T_Q, 0 otherwise.
std::optional<ConePoint> restriction_j(const ConePoint& a, const TriangulatedPair& pair,
                                       const PairRings& rings);

struct RingHomCheck {
  bool ok = true;
  std::size_t samples = 0;
  std::size_t nonzero_images = 0;
  std::string counterexample;
};

/// j(a*b) == j(a)*j(b) on `samples` seeded monomial pairs of degree <= 3.
RingHomCheck check_ring_hom(const TriangulatedPair& pair, const PairRings& rings,
                            std::size_t samples, std::uint64_t seed);

struct SurjectivityCheck {
  unsigned degree = 0;
  Int whole_dimension;       // P-side quotient dimension (if computed)
  Int restricted_dimension;  // Q-side quotient dimension
  Int image_dimension;       // rank of the induced map
  bool well_defined = false;     // j maps P relations into Q relations
  bool generators_match = false; // Q generators lie in span j(P generators)
  bool surjective = false;
  bool ok() const { return well_defined && generators_match && surjective; }
};

/// Rank of the map induced by j between degree-k quotient pieces.
SurjectivityCheck induced_surjectivity(const TriangulatedPair& pair, const PairRings& rings,
                                       unsigned k);

}  // namespace deltacheck

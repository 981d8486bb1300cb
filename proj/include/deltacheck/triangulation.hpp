#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deltacheck/poly.hpp"
#include "deltacheck/polytope.hpp"

namespace deltacheck {

/// Sorted point indices. The empty face has dimension -1.
using Face = std::vector<std::size_t>;

inline long face_dim(const Face& f) { return static_cast<long>(f.size()) - 1; }

/// Regular lattice triangulation of a full-dimensional lattice polytope.
/// `points` are all lattice points of the polytope (lexicographic); maximal
/// simplices index into them. Points that are not vertices lie on or above
/// the lower hull of the lifting.
class LatticeTriangulation {
 public:
  LatticeTriangulation(LatticePolytope polytope, std::vector<IntVector> points,
                       std::vector<Int> heights, std::vector<Face> simplices);

  const LatticePolytope& polytope() const { return polytope_; }
  std::size_t dimension() const { return polytope_.ambient_rank(); }
  const std::vector<IntVector>& points() const { return points_; }
  const std::vector<Int>& heights() const { return heights_; }
  const std::vector<Face>& simplices() const { return simplices_; }

  /// Point indices used as vertices, ascending.
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  /// All faces including the empty one; ordered by size, then lexicographically.
  const std::vector<Face>& faces() const { return faces_; }
  bool is_face(const Face& f) const { return face_set_.count(f) > 0; }

  /// (points[i], 1) in N x Z.
  IntVector lifted(std::size_t i) const { return append(points_[i], 1); }

 private:
  LatticePolytope polytope_;
  std::vector<IntVector> points_;
  std::vector<Int> heights_;
  std::vector<Face> simplices_;
  std::vector<std::size_t> vertices_;
  std::vector<Face> faces_;
  std::set<Face> face_set_;
};

/// Maximal cells of the regular subdivision of `points` (full-dimensional in
/// Z^d) induced by `heights`: projections of the lower facets of the lifted
/// configuration, found by gift-wrapping. Each cell is reported by its
/// extreme points; lifted points lying on a cell without being extreme are
/// left unused. Throws NotGeneric if some cell is not a simplex.
std::vector<Face> regular_subdivision(const std::vector<IntVector>& points,
                                      const std::vector<Int>& heights);

/// Regular triangulation of a full-dimensional polytope with one height per
/// lattice point (lexicographic order of lattice_points(p, 1)).
LatticeTriangulation triangulate(const LatticePolytope& p, const std::vector<Int>& heights);

/// Seeded heights uniform in [0, 2^16), plus an optional per-point penalty.
std::vector<Int> generic_heights(std::size_t n, std::uint64_t seed,
                                 const std::vector<Int>& penalty = {});

/// Triangulation with generic heights, reseeding on NotGeneric.
LatticeTriangulation generic_triangulation(const LatticePolytope& p, std::uint64_t seed);

/// |det| of the (d+1)x(d+1) matrix of lifted vertices.
Int simplex_volume(const LatticeTriangulation& t, const Face& simplex);

bool is_unimodular(const LatticeTriangulation& t);

/// Recomputing the lower hull from the stored heights reproduces the cells.
bool regularity_certificate(const LatticeTriangulation& t);

/// Covering (volumes sum to the normalized volume) and pseudomanifold
/// conditions (each ridge in at most two cells, boundary ridges on facets of
/// P). Returns a description of the first violation.
std::optional<std::string> validate_triangulation(const LatticeTriangulation& t);

std::vector<Face> all_faces(const LatticeTriangulation& t);

/// {G : G ∩ F = ∅ and G ∪ F a face}; link(∅) is the whole complex.
/// Throws UsageError if F is not a face.
std::vector<Face> link(const LatticeTriangulation& t, const Face& f);

/// sum over faces G of t^{dim G + 1} (1 - t)^{d_ref - dim G}.
/// Requires d_ref >= dim G for every G.
IntPoly h_polynomial(const std::vector<Face>& faces, long d_ref);

/// h_T with d_ref = dim P.
IntPoly h_polynomial(const LatticeTriangulation& t);

/// Triangulation T of P together with its restriction to Q ⊆ P.
struct TriangulatedPair {
  NormalizedPolytope p_normalized;  // P in its own lattice
  LatticeTriangulation whole;       // triangulates p_normalized.polytope
  /// Q in its own lattice; the embedding maps Q-reduced into P-reduced coordinates.
  NormalizedPolytope q_normalized;
  LatticeTriangulation restricted;  // triangulates q_normalized.polytope
  std::vector<std::size_t> q_to_p;  // restricted point index -> whole point index
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  Int penalty;

  /// Face of `restricted` expressed in `whole`'s point indices.
  Face to_whole(const Face& f) const;
  /// Face of `whole` in `restricted`'s indices, nullopt unless all its vertices lie in Q.
  std::optional<Face> to_restricted(const Face& f) const;
};

/// Heights small and generic on Q ∩ N and offset by a penalty elsewhere;
/// the penalty grows 16x and heights are redrawn until the restriction is
/// certified (at most 8 attempts). Throws VerificationFailed otherwise.
TriangulatedPair triangulation_of_pair(const LatticePolytope& p, const LatticePolytope& q,
                                       std::uint64_t seed);

/// Faces of `whole` contained in Q equal the faces of `restricted`.
std::optional<std::string> check_restriction(const TriangulatedPair& pair);

std::string to_string(const Face& f);

}  // namespace deltacheck

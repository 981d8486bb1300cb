#pragma once

#include <vector>

#include "deltacheck/poly.hpp"
#include "deltacheck/triangulation.hpp"

namespace deltacheck {

/// Lattice point w = sum q_i (v_i, 1) with all 0 < q_i < 1 over the vertices
/// v_i of `face`. Its age is the last coordinate of w. The empty face has the
/// single box point w = 0 of age 0.
struct BoxPoint {
  Face face;
  IntVector w;  // in N x Z, length d+1
  RatVector q;  // one per vertex of face, in face order
  Int age;
};

/// Lattice point of the half-open parallelepiped {sum q_i (v_i,1) : 0 <= q_i < 1}
/// of a maximal simplex, with the vertices carrying q_i > 0.
struct ParallelepipedPoint {
  IntVector w;
  RatVector q;  // one per simplex vertex
  Face support;
};

/// All |det| lattice points of the half-open parallelepiped of `simplex`,
/// enumerated as coset representatives of Z^{d+1} modulo the lattice spanned
/// by the lifted vertices (read off its Hermite form) and reduced into the
/// parallelepiped. Sorted by w.
std::vector<ParallelepipedPoint> half_open_parallelepiped(const LatticeTriangulation& t,
                                                          const Face& simplex);

/// BOX(F) ∩ (N x Z), sorted by w.
std::vector<BoxPoint> box_points(const Face& f, const LatticeTriangulation& t);

/// sum over BOX(F) of t^age; 1 for the empty face.
IntPoly box_poly(const Face& f, const LatticeTriangulation& t);

/// One summand B_F(t) * h_{link F}(t) of the box decomposition.
struct FaceTerm {
  Face face;
  IntPoly box;
  IntPoly link_h;
  long d_ref;
};

/// Terms for the empty face and every face with a nonempty box, in face order.
std::vector<FaceTerm> box_decomposition(const LatticeTriangulation& t);

/// delta_P(t) = sum_F B_F(t) h_{link F}(t), with link h-vectors taken at
/// reference dimension d - dim F - 1.
///
/// Worked case: [0,2] triangulated by the single edge {0,2}. The empty face
/// gives 1 * h_T = 1; the edge has the box point (1,1) of age 1 and link {∅}
/// at d_ref = -1, giving t. Total 1 + t.
IntPoly box_delta(const LatticeTriangulation& t);

/// box_delta, compared against an independently computed delta.
/// Throws InconsistencyError carrying both polynomials on mismatch.
IntPoly checked_box_delta(const LatticeTriangulation& t, const IntPoly& expected);

}  // namespace deltacheck

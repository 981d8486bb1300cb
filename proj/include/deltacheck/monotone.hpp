#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltacheck/orbring.hpp"
#include "deltacheck/poly.hpp"
#include "deltacheck/polytope.hpp"
#include "deltacheck/triangulation.hpp"

namespace deltacheck {

struct PairBounds {
  unsigned dim = 2;
  unsigned max_coord = 3;
  /// Lift the 1 <= dim <= 3, max_coord <= 6 guardrails.
  bool unbounded = false;
};

/// Seeded nested pair: P is the hull of dim+1..dim+3 random points of
/// [0, max_coord]^dim (full-dimensional draws only), Q the hull of a random
/// subset of P's lattice points. Throws UsageError on bad bounds and
/// VerificationFailed if no full-dimensional P turns up.
std::pair<LatticePolytope, LatticePolytope> random_pair(const PairBounds& bounds,
                                                        std::uint64_t seed);

struct LinkwiseCheck {
  bool ok = true;
  std::size_t faces = 0;
  std::string counterexample;
};

/// For every nonempty face F of T_Q: h(link_{T_Q} F) <= h(link_T F), at
/// reference dimensions dim Q - dim F - 1 and dim P - dim F - 1.
LinkwiseCheck linkwise_monotonicity(const TriangulatedPair& pair);

/// delta by counting, by the box decomposition and by the orbifold ring.
struct TripleDelta {
  IntPoly count;
  IntPoly boxes;
  IntPoly orbifold;
  bool agree() const { return count == boxes && boxes == orbifold; }
};

TripleDelta triple_delta(const LatticeTriangulation& t, const DeformedGroupRing& ring);

struct PairReport {
  std::string p_name, q_name;
  TripleDelta p, q;
  IntPoly delta_p, delta_q;  // counting values
  bool monotone = false;
  bool linkwise = false;
  bool hom_check = false;
  std::vector<bool> surjective;  // k = 0..dim Q
  std::size_t hom_samples = 0;

  std::uint64_t seed = 0;          // pair triangulation seed
  std::uint64_t hom_seed = 0;
  unsigned attempts = 0;
  Int penalty;
  std::vector<Int> heights;        // on P's lattice points
  std::string linkwise_counterexample, hom_counterexample;

  double seconds = 0;  // wall time, reported only on request

  bool passed() const;
  /// Raw reproducing data for a failed report.
  std::string certificate() const;
};

constexpr std::size_t kDefaultHomSamples = 1000;

/// Full pipeline on Q ⊆ P (ambient coordinates; Q may be lower-dimensional).
/// UsageError if Q ⊄ P.
PairReport verify_pair(const LatticePolytope& p, const LatticePolytope& q, std::uint64_t seed,
                       std::size_t hom_samples = kDefaultHomSamples);

}  // namespace deltacheck

#include "deltacheck/monotone.hpp"

#include <chrono>
#include <sstream>

#include "deltacheck/boxdecomp.hpp"
#include "deltacheck/ehrhart.hpp"
#include "deltacheck/random.hpp"

namespace deltacheck {

namespace {

constexpr int kMaxDraws = 200;

std::string face_label(const Face& f, const LatticeTriangulation& t) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << to_string(t.points()[f[i]]);
  os << '}';
  return os.str();
}

}  // namespace

std::pair<LatticePolytope, LatticePolytope> random_pair(const PairBounds& bounds,
                                                        std::uint64_t seed) {
  if (bounds.dim < 1 || bounds.max_coord < 1)
    throw UsageError("random_pair: dim and max_coord must be positive");
  if (!bounds.unbounded && (bounds.dim > 3 || bounds.max_coord > 6))
    throw UsageError("random_pair: dim must be <= 3 and max_coord <= 6");
  SeededRng rng(seed);
  const std::uint64_t side = bounds.max_coord + 1;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const std::size_t n = bounds.dim + 1 + rng.below(3);
    std::vector<IntVector> pts(n, IntVector(bounds.dim));
    for (auto& x : pts)
      for (auto& c : x) c = Int(static_cast<unsigned long>(rng.below(side)));
    LatticePolytope p = LatticePolytope::hull_of(pts, "P");
    if (!p.is_full_dimensional()) continue;

    std::vector<IntVector> lattice = lattice_points(p, 1);
    const std::size_t k = 1 + rng.below(std::min<std::size_t>(lattice.size(), bounds.dim + 2));
    for (std::size_t i = 0; i < k; ++i) std::swap(lattice[i], lattice[i + rng.below(lattice.size() - i)]);
    lattice.resize(k);
    return {std::move(p), LatticePolytope::hull_of(lattice, "Q")};
  }
  throw VerificationFailed("random_pair: no full-dimensional draw after " +
                           std::to_string(kMaxDraws) + " attempts (seed " +
                           std::to_string(seed) + ")");
}

LinkwiseCheck linkwise_monotonicity(const TriangulatedPair& pair) {
  LinkwiseCheck out;
  const long dim_p = static_cast<long>(pair.whole.dimension());
  const long dim_q = static_cast<long>(pair.restricted.dimension());
  for (const auto& f : pair.restricted.faces()) {
    if (f.empty()) continue;
    ++out.faces;
    const Face fp = pair.to_whole(f);
    IntPoly hq = h_polynomial(link(pair.restricted, f), dim_q - face_dim(f) - 1);
    IntPoly hp = h_polynomial(link(pair.whole, fp), dim_p - face_dim(f) - 1);
    if (poly_leq(hq, hp)) continue;
    out.ok = false;
    out.counterexample = "face " + face_label(fp, pair.whole) + ": h(link in T_Q) = " +
                         hq.to_string() + " but h(link in T) = " + hp.to_string();
    return out;
  }
  return out;
}

TripleDelta triple_delta(const LatticeTriangulation& t, const DeformedGroupRing& ring) {
  return {counting_delta(t.polytope()), box_delta(t), ring.hilbert_delta()};
}

bool PairReport::passed() const {
  if (!(monotone && p.agree() && q.agree() && linkwise && hom_check)) return false;
  for (bool s : surjective)
    if (!s) return false;
  return true;
}

std::string PairReport::certificate() const {
  std::ostringstream os;
  os << "P = " << p_name << ", Q = " << q_name << "; delta_P = " << delta_p.to_string()
     << ", delta_Q = " << delta_q.to_string() << "; seed " << seed << " (attempt " << attempts
     << ", penalty " << penalty.get_str() << "); heights [";
  for (std::size_t i = 0; i < heights.size(); ++i) os << (i ? "," : "") << heights[i].get_str();
  os << ']';
  if (!linkwise_counterexample.empty()) os << "; linkwise: " << linkwise_counterexample;
  if (!hom_counterexample.empty()) os << "; ring hom: " << hom_counterexample;
  return os.str();
}

PairReport verify_pair(const LatticePolytope& p, const LatticePolytope& q, std::uint64_t seed,
                       std::size_t hom_samples) {
  if (!contains(p, q)) throw UsageError("verify_pair: Q is not contained in P");
  const auto start = std::chrono::steady_clock::now();
  PairReport r;
  r.p_name = p.name();
  r.q_name = q.name();
  r.seed = seed;
  r.hom_seed = derive_seed(seed, 1);

  const TriangulatedPair pair = triangulation_of_pair(p, q, seed);
  r.attempts = pair.attempts;
  r.penalty = pair.penalty;
  r.heights = pair.whole.heights();
  const PairRings rings(pair);

  r.p = triple_delta(pair.whole, rings.whole);
  r.q = triple_delta(pair.restricted, rings.restricted);
  r.delta_p = r.p.count;
  r.delta_q = r.q.count;
  r.monotone = poly_leq(r.delta_q, r.delta_p);

  const LinkwiseCheck lw = linkwise_monotonicity(pair);
  r.linkwise = lw.ok;
  r.linkwise_counterexample = lw.counterexample;

  const RingHomCheck hom = check_ring_hom(pair, rings, hom_samples, r.hom_seed);
  r.hom_check = hom.ok;
  r.hom_samples = hom.samples;
  r.hom_counterexample = hom.counterexample;

  for (unsigned k = 0; k <= pair.restricted.dimension(); ++k)
    r.surjective.push_back(induced_surjectivity(pair, rings, k).ok());

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace deltacheck

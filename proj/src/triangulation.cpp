#include "deltacheck/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "deltacheck/random.hpp"

namespace deltacheck {

namespace {

// Affine function x -> a.x + b on R^d.
struct AffineFunction {
  RatVector a;
  Rat b;

  Rat operator()(std::span<const Int> x) const {
    Rat acc = b;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i];
    return acc;
  }
};

// Integer affine function g(x) = c.x + e vanishing on a flat.
struct Pivot {
  IntVector c;
  Int e;

  Int operator()(std::span<const Int> x) const { return pairing(c, x) + e; }
};

class LowerHull {
 public:
  LowerHull(const std::vector<IntVector>& points, const std::vector<Int>& heights)
      : pts_(points), hts_(heights), d_(points.front().size()) {}

  std::vector<Face> run() {
    std::vector<Face> cells;
    std::set<Face> seen;
    std::deque<Face> queue;
    Face first = first_cell();
    seen.insert(first);
    queue.push_back(first);
    while (!queue.empty()) {
      Face cell = queue.front();
      queue.pop_front();
      cells.push_back(cell);
      const AffineFunction ell = through(cell);
      for (std::size_t j = 0; j < cell.size(); ++j) {
        Face ridge;
        for (std::size_t k = 0; k < cell.size(); ++k)
          if (k != j) ridge.push_back(cell[k]);
        Pivot g = vanishing_on(ridge);
        if (g(pts_[cell[j]]) > 0) negate(g);
        auto next = rotate(ell, g);
        if (!next) continue;  // boundary ridge
        Face neighbour = cell_from_tight(tight_set(*next));
        if (seen.insert(neighbour).second) queue.push_back(neighbour);
      }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
  }

 private:
  static void negate(Pivot& g) {
    for (auto& x : g.c) x = -x;
    g.e = -g.e;
  }

  Rat slack(const AffineFunction& ell, std::size_t i) const { return Rat(hts_[i]) - ell(pts_[i]); }

  std::vector<std::size_t> tight_set(const AffineFunction& ell) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (slack(ell, i) == 0) out.push_back(i);
    return out;
  }

  // ell + t*g for the smallest t > 0 making a new point tight; nullopt if
  // no point has g > 0.
  std::optional<AffineFunction> rotate(const AffineFunction& ell, const Pivot& g) const {
    std::optional<Rat> best;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      Int gi = g(pts_[i]);
      if (gi <= 0) continue;
      Rat t = slack(ell, i) / gi;
      if (!best || t < *best) best = t;
    }
    if (!best) return std::nullopt;
    AffineFunction out = ell;
    for (std::size_t k = 0; k < d_; ++k) out.a[k] += *best * g.c[k];
    out.b += *best * g.e;
    return out;
  }

  // Maximal affinely independent subset, greedily in index order.
  std::vector<std::size_t> affine_basis(const std::vector<std::size_t>& idx) const {
    std::vector<std::size_t> basis;
    std::vector<IntVector> rows;
    for (std::size_t i : idx) {
      if (basis.empty()) {
        basis.push_back(i);
        continue;
      }
      rows.push_back(subtract(pts_[i], pts_[basis.front()]));
      if (rank_exact(IntMatrix::from_rows(rows)) == rows.size()) {
        basis.push_back(i);
        if (basis.size() == d_ + 1) break;
      } else {
        rows.pop_back();
      }
    }
    return basis;
  }

  // A nonzero affine function vanishing on the affine span of idx (which
  // must have dimension < d).
  Pivot vanishing_on(const std::vector<std::size_t>& idx) const {
    IntMatrix diffs(idx.size() - 1, d_);
    for (std::size_t r = 1; r < idx.size(); ++r)
      for (std::size_t c = 0; c < d_; ++c) diffs(r - 1, c) = pts_[idx[r]][c] - pts_[idx[0]][c];
    IntMatrix ker = integer_kernel(diffs);
    Pivot g{ker.column(0), 0};
    g.e = -pairing(g.c, pts_[idx[0]]);
    return g;
  }

  AffineFunction through(const Face& cell) const {
    RatMatrix m(d_ + 1, d_ + 1);
    RatVector rhs(d_ + 1);
    for (std::size_t r = 0; r <= d_; ++r) {
      for (std::size_t c = 0; c < d_; ++c) m(r, c) = pts_[cell[r]][c];
      m(r, d_) = 1;
      rhs[r] = hts_[cell[r]];
    }
    RatVector sol = *solve(m, rhs);
    AffineFunction ell{RatVector(sol.begin(), sol.begin() + static_cast<long>(d_)), sol[d_]};
    return ell;
  }

  Face first_cell() const {
    Int lowest = hts_.front();
    for (const auto& h : hts_)
      if (h < lowest) lowest = h;
    AffineFunction ell{RatVector(d_), Rat(lowest)};
    while (true) {
      auto tight = tight_set(ell);
      auto basis = affine_basis(tight);
      if (basis.size() == d_ + 1) return cell_from_tight(tight);
      Pivot g = vanishing_on(basis);
      bool any_positive = false;
      for (const auto& p : pts_)
        if (g(p) > 0) any_positive = true;
      if (!any_positive) negate(g);
      auto next = rotate(ell, g);
      if (!next) throw UsageError("regular_subdivision: points are not full-dimensional");
      ell = *next;
    }
  }

  // Extreme points of conv(tight) when it is a simplex.
  Face cell_from_tight(const std::vector<std::size_t>& tight) const {
    if (tight.size() == d_ + 1) return tight;
    constexpr std::size_t kSubsetLimit = 20000;
    Int subsets;
    mpz_bin_uiui(subsets.get_mpz_t(), tight.size(), d_ + 1);
    if (subsets > kSubsetLimit)
      throw NotGeneric("regular_subdivision: degenerate cell with " +
                       std::to_string(tight.size()) + " points on one lifted facet");
    std::vector<std::size_t> pick(d_ + 1);
    for (std::size_t i = 0; i <= d_; ++i) pick[i] = i;
    while (true) {
      Face cand;
      for (auto k : pick) cand.push_back(tight[k]);
      if (simplex_contains_all(cand, tight)) return cand;
      std::size_t i = d_ + 1;
      while (i > 0 && pick[i - 1] == tight.size() - (d_ + 1) + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j <= d_; ++j) pick[j] = pick[j - 1] + 1;
    }
    throw NotGeneric("regular_subdivision: non-simplicial cell on " +
                     std::to_string(tight.size()) + " points");
  }

  bool simplex_contains_all(const Face& cand, const std::vector<std::size_t>& pts) const {
    IntMatrix m(d_ + 1, d_ + 1);
    for (std::size_t c = 0; c <= d_; ++c) {
      for (std::size_t r = 0; r < d_; ++r) m(r, c) = pts_[cand[c]][r];
      m(d_, c) = 1;
    }
    const Int det = determinant(m);
    if (det == 0) return false;
    const IntMatrix adj = adjugate(m);
    for (std::size_t i : pts) {
      for (std::size_t r = 0; r <= d_; ++r) {
        Int num = 0;
        for (std::size_t c = 0; c < d_; ++c) num += adj(r, c) * pts_[i][c];
        num += adj(r, d_);
        if (sgn(num) * sgn(det) < 0) return false;
      }
    }
    return true;
  }

  const std::vector<IntVector>& pts_;
  const std::vector<Int>& hts_;
  std::size_t d_;
};

IntMatrix lifted_matrix(const LatticeTriangulation& t, const Face& simplex) {
  const std::size_t d = t.dimension();
  IntMatrix m(d + 1, simplex.size());
  for (std::size_t c = 0; c < simplex.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) m(r, c) = t.points()[simplex[c]][r];
    m(d, c) = 1;
  }
  return m;
}

}  // namespace

LatticeTriangulation::LatticeTriangulation(LatticePolytope polytope, std::vector<IntVector> points,
                                           std::vector<Int> heights, std::vector<Face> simplices)
    : polytope_(std::move(polytope)),
      points_(std::move(points)),
      heights_(std::move(heights)),
      simplices_(std::move(simplices)) {
  if (!polytope_.is_full_dimensional())
    throw DimensionError("triangulation: polytope must be full-dimensional");
  if (heights_.size() != points_.size())
    throw UsageError("triangulation: one height per lattice point required");
  const std::size_t d = polytope_.ambient_rank();
  for (auto& s : simplices_) {
    std::sort(s.begin(), s.end());
    if (s.size() != d + 1) throw UsageError("triangulation: maximal simplex of wrong size");
    for (auto i : s)
      if (i >= points_.size()) throw UsageError("triangulation: vertex index out of range");
  }
  std::sort(simplices_.begin(), simplices_.end());
  for (const auto& s : simplices_) {
    const std::size_t n = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Face f;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (std::size_t{1} << k)) f.push_back(s[k]);
      face_set_.insert(std::move(f));
    }
  }
  faces_.assign(face_set_.begin(), face_set_.end());
  std::stable_sort(faces_.begin(), faces_.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });
  for (const auto& f : faces_)
    if (f.size() == 1) vertices_.push_back(f.front());
}

std::vector<Face> regular_subdivision(const std::vector<IntVector>& points,
                                      const std::vector<Int>& heights) {
  if (points.empty()) throw UsageError("regular_subdivision: no points");
  if (points.size() != heights.size())
    throw UsageError("regular_subdivision: heights and points differ in length");
  const std::size_t d = points.front().size();
  if (d == 0) return {Face{0}};
  return LowerHull(points, heights).run();
}

LatticeTriangulation triangulate(const LatticePolytope& p, const std::vector<Int>& heights) {
  auto points = lattice_points(p, 1);
  auto cells = regular_subdivision(points, heights);
  return LatticeTriangulation(p, std::move(points), heights, std::move(cells));
}

std::vector<Int> generic_heights(std::size_t n, std::uint64_t seed,
                                 const std::vector<Int>& penalty) {
  if (!penalty.empty() && penalty.size() != n)
    throw UsageError("generic_heights: penalty length mismatch");
  SeededRng rng(seed);
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<unsigned long>(rng.next() >> 48);
    if (!penalty.empty()) out[i] += penalty[i];
  }
  return out;
}

LatticeTriangulation generic_triangulation(const LatticePolytope& p, std::uint64_t seed) {
  const auto points = lattice_points(p, 1);
  constexpr unsigned kAttempts = 16;
  for (unsigned a = 0; a < kAttempts; ++a) {
    const std::uint64_t s = a == 0 ? seed : derive_seed(seed, a);
    try {
      return triangulate(p, generic_heights(points.size(), s));
    } catch (const NotGeneric&) {
    }
  }
  throw NotGeneric("generic_triangulation: no generic heights after reseeding");
}

Int simplex_volume(const LatticeTriangulation& t, const Face& simplex) {
  return abs(determinant(lifted_matrix(t, simplex)));
}

bool is_unimodular(const LatticeTriangulation& t) {
  return std::all_of(t.simplices().begin(), t.simplices().end(),
                     [&](const Face& s) { return simplex_volume(t, s) == 1; });
}

bool regularity_certificate(const LatticeTriangulation& t) {
  try {
    return regular_subdivision(t.points(), t.heights()) == t.simplices();
  } catch (const NotGeneric&) {
    return false;
  }
}

std::optional<std::string> validate_triangulation(const LatticeTriangulation& t) {
  Int total = 0;
  for (const auto& s : t.simplices()) {
    Int v = simplex_volume(t, s);
    if (v == 0) return "degenerate simplex " + to_string(s);
    total += v;
  }
  const Int expected = normalized_volume(t.polytope());
  if (total != expected)
    return "volumes sum to " + total.get_str() + ", polytope has " + expected.get_str();
  const std::size_t d = t.dimension();
  if (d == 0) return std::nullopt;
  std::map<Face, int> ridge_count;
  for (const auto& s : t.simplices())
    for (std::size_t j = 0; j < s.size(); ++j) {
      Face r;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != j) r.push_back(s[k]);
      ++ridge_count[r];
    }
  const FacetSystem facets = facet_system(t.polytope());
  for (const auto& [ridge, count] : ridge_count) {
    if (count > 2) return "ridge " + to_string(ridge) + " lies in " + std::to_string(count) + " cells";
    if (count == 2) continue;
    bool on_boundary = std::any_of(facets.begin(), facets.end(), [&](const Facet& f) {
      return std::all_of(ridge.begin(), ridge.end(), [&](std::size_t i) {
        return pairing(f.normal, t.points()[i]) == f.offset;
      });
    });
    if (!on_boundary) return "interior ridge " + to_string(ridge) + " lies in one cell";
  }
  return std::nullopt;
}

std::vector<Face> all_faces(const LatticeTriangulation& t) { return t.faces(); }

std::vector<Face> link(const LatticeTriangulation& t, const Face& f) {
  if (!t.is_face(f)) throw UsageError("link: " + to_string(f) + " is not a face");
  std::vector<Face> out;
  for (const auto& g : t.faces()) {
    Face u;
    std::set_union(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(u));
    if (u.size() != f.size() + g.size()) continue;  // not disjoint
    if (t.is_face(u)) out.push_back(g);
  }
  return out;
}

IntPoly h_polynomial(const std::vector<Face>& faces, long d_ref) {
  IntPoly h;
  for (const auto& g : faces) {
    const long dim = face_dim(g);
    if (d_ref < dim)
      throw UsageError("h_polynomial: reference dimension " + std::to_string(d_ref) +
                       " below face dimension " + std::to_string(dim));
    h += IntPoly::monomial(static_cast<std::size_t>(dim + 1)) *
         IntPoly::one_minus_t_pow(static_cast<std::size_t>(d_ref - dim));
  }
  return h;
}

IntPoly h_polynomial(const LatticeTriangulation& t) {
  return h_polynomial(t.faces(), static_cast<long>(t.dimension()));
}

Face TriangulatedPair::to_whole(const Face& f) const {
  Face out;
  for (auto i : f) out.push_back(q_to_p.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Face> TriangulatedPair::to_restricted(const Face& f) const {
  Face out;
  for (auto i : f) {
    auto it = std::find(q_to_p.begin(), q_to_p.end(), i);
    if (it == q_to_p.end()) return std::nullopt;
    out.push_back(static_cast<std::size_t>(it - q_to_p.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> check_restriction(const TriangulatedPair& pair) {
  std::set<Face> inside;
  for (const auto& f : pair.whole.faces())
    if (auto r = pair.to_restricted(f)) inside.insert(*r);
  std::set<Face> expected(pair.restricted.faces().begin(), pair.restricted.faces().end());
  if (inside == expected) return std::nullopt;
  std::ostringstream os;
  os << "faces of T inside Q differ from T_Q:";
  for (const auto& f : inside)
    if (!expected.count(f)) os << " extra " << to_string(f);
  for (const auto& f : expected)
    if (!inside.count(f)) os << " missing " << to_string(f);
  return os.str();
}

TriangulatedPair triangulation_of_pair(const LatticePolytope& p, const LatticePolytope& q,
                                       std::uint64_t seed) {
  if (p.ambient_rank() != q.ambient_rank())
    throw UsageError("triangulation_of_pair: ambient ranks differ");
  NormalizedPolytope pn = normalize(p);
  std::vector<IntVector> q_in_p;
  for (const auto& v : q.vertices()) {
    auto y = pn.embedding.to_reduced(v);
    if (!y) throw UsageError("triangulation_of_pair: Q leaves the affine span of P");
    q_in_p.push_back(std::move(*y));
  }
  LatticePolytope q_reduced(q_in_p, q.name());
  if (!contains(pn.polytope, q_reduced))
    throw UsageError("triangulation_of_pair: Q is not contained in P");
  NormalizedPolytope qn = normalize(q_reduced);

  const auto p_points = lattice_points(pn.polytope, 1);
  const auto q_points = lattice_points(qn.polytope, 1);
  std::vector<std::size_t> q_to_p;
  for (const auto& y : q_points) {
    IntVector x = qn.embedding.to_ambient(y);
    auto it = std::lower_bound(p_points.begin(), p_points.end(), x);
    if (it == p_points.end() || *it != x)
      throw InconsistencyError("triangulation_of_pair: lattice point of Q missing from P");
    q_to_p.push_back(static_cast<std::size_t>(it - p_points.begin()));
  }
  std::vector<bool> in_q(p_points.size(), false);
  for (auto i : q_to_p) in_q[i] = true;

  constexpr unsigned kAttempts = 8;
  Int penalty = Int(1) << 20;
  std::string last_failure = "no attempt made";
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt, penalty *= 16) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, attempt);
    std::vector<Int> extra(p_points.size());
    for (std::size_t i = 0; i < p_points.size(); ++i)
      if (!in_q[i]) extra[i] = penalty;
    const auto heights = generic_heights(p_points.size(), s, extra);
    std::vector<Int> q_heights;
    for (auto i : q_to_p) q_heights.push_back(heights[i]);
    try {
      LatticeTriangulation whole(pn.polytope, p_points, heights,
                                 regular_subdivision(p_points, heights));
      LatticeTriangulation restricted(qn.polytope, q_points, q_heights,
                                      regular_subdivision(q_points, q_heights));
      TriangulatedPair pair{pn, std::move(whole), qn, std::move(restricted), q_to_p, seed,
                            attempt + 1, penalty};
      auto failure = check_restriction(pair);
      if (!failure) return pair;
      last_failure = *failure;
    } catch (const NotGeneric& e) {
      last_failure = e.what();
    }
  }
  std::ostringstream os;
  os << "triangulation_of_pair: no certified restriction after " << kAttempts
     << " attempts (seed " << seed << ", final penalty " << Int(penalty / 16).get_str()
     << "): " << last_failure;
  throw VerificationFailed(os.str());
}

std::string to_string(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

}  // namespace deltacheck

#include "deltacheck/orbring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "deltacheck/random.hpp"

namespace deltacheck {

DeformedGroupRing::DeformedGroupRing(LatticeTriangulation t) : t_(std::move(t)) {
  const std::size_t n = t_.dimension() + 1;
  for (const auto& s : t_.simplices()) {
    IntMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      IntVector col = t_.lifted(s[c]);
      for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
    }
    det_.push_back(determinant(m));
    adjugate_.push_back(adjugate(m));
    lifted_.push_back(std::move(m));
  }
}

DeformedGroupRing::Location DeformedGroupRing::locate(std::span<const Int> v) const {
  const std::size_t n = rank();
  if (v.size() != n) throw UsageError("cone point has wrong length");
  IntVector num(n);
  for (std::size_t s = 0; s < det_.size(); ++s) {
    const IntMatrix& adj = adjugate_[s];
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      num[i] = 0;
      for (std::size_t k = 0; k < n; ++k) num[i] += adj(i, k) * v[k];
      if (det_[s] < 0) num[i] = -num[i];
      inside = num[i] >= 0;
    }
    if (inside) return {s, num};
  }
  throw UsageError("point " + to_string(v) + " is outside the cone over P");
}

ConePoint DeformedGroupRing::point(IntVector v) const {
  if (v.size() != rank()) throw UsageError("cone point has wrong length");
  if (v.back() < 0) throw UsageError("cone point of negative degree");
  Location loc = locate(v);
  const Face& s = t_.simplices()[loc.simplex];
  Face carrier;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (loc.numerators[i] != 0) carrier.push_back(s[i]);
  Int degree = v.back();
  return ConePoint{std::move(v), std::move(degree), std::move(carrier)};
}

std::optional<ConePoint> DeformedGroupRing::multiply(const ConePoint& a, const ConePoint& b) const {
  Face u;
  std::set_union(a.carrier.begin(), a.carrier.end(), b.carrier.begin(), b.carrier.end(),
                 std::back_inserter(u));
  if (!t_.is_face(u)) return std::nullopt;
  return ConePoint{add(a.v, b.v), a.degree + b.degree, std::move(u)};
}

IntVector DeformedGroupRing::box_part(std::span<const Int> v) const {
  Location loc = locate(v);
  const Int abs_det = abs(det_[loc.simplex]);
  const IntMatrix& m = lifted_[loc.simplex];
  const std::size_t n = rank();
  IntVector frac(n);
  for (std::size_t i = 0; i < n; ++i)
    mpz_fdiv_r(frac[i].get_mpz_t(), loc.numerators[i].get_mpz_t(), abs_det.get_mpz_t());
  IntVector w(n);
  for (std::size_t r = 0; r < n; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += m(r, c) * frac[c];
    w[r] = acc / abs_det;
  }
  return w;
}

std::vector<RelationGenerator> DeformedGroupRing::relation_generators(
    const IntMatrix* dual_basis) const {
  const std::size_t n = rank();
  const IntMatrix basis = dual_basis ? *dual_basis : IntMatrix::identity(n);
  if (basis.rows() != n) throw UsageError("relation_generators: dual basis has wrong size");
  std::vector<RelationGenerator> gens;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    RelationGenerator g{basis.column(c), {}};
    for (auto i : t_.vertices()) g.terms.emplace_back(i, pairing(t_.lifted(i), g.u));
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<ConePoint> DeformedGroupRing::monomials(unsigned k) const {
  std::vector<ConePoint> out;
  if (k == 0) {
    out.push_back(point(IntVector(rank())));
    return out;
  }
  for (auto& x : lattice_points(t_.polytope(), k)) out.push_back(point(append(x, k)));
  return out;
}

GradedSlice DeformedGroupRing::slice(unsigned k, const IntMatrix* dual_basis,
                                     bool compute_rank) const {
  GradedSlice s;
  s.degree = k;
  s.basis = monomials(k);
  s.rank_computed = compute_rank;
  if (k == 0) {
    s.blocks = 1;
    return s;
  }
  std::map<IntVector, std::size_t> column;
  for (std::size_t c = 0; c < s.basis.size(); ++c) column.emplace(s.basis[c].v, c);

  const auto gens = relation_generators(dual_basis);
  std::vector<IntVector> rays(t_.points().size());
  for (auto i : t_.vertices()) rays[i] = t_.lifted(i);
  for (const auto& w : monomials(k - 1)) {
    // vertices i with carrier(w) ∪ {i} a face, and the resulting columns
    std::vector<std::pair<std::size_t, std::size_t>> star;  // (vertex, column)
    for (auto i : t_.vertices()) {
      Face u = w.carrier;
      if (!std::binary_search(u.begin(), u.end(), i)) u.insert(std::upper_bound(u.begin(), u.end(), i), i);
      if (!t_.is_face(u)) continue;
      star.emplace_back(i, column.at(add(w.v, rays[i])));
    }
    for (const auto& g : gens) {
      SparseRow row;
      for (const auto& [i, col] : star) {
        auto it = std::lower_bound(g.terms.begin(), g.terms.end(), i,
                                   [](const auto& term, std::size_t idx) { return term.first < idx; });
        if (it->second != 0) row.emplace_back(col, it->second);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!row.empty()) s.relations.push_back(std::move(row));
    }
  }
  if (!compute_rank) return s;

  std::map<IntVector, std::size_t> block_of_key;
  std::vector<std::size_t> block(s.basis.size());
  std::vector<std::size_t> local(s.basis.size());
  std::vector<std::size_t> block_size;
  for (std::size_t c = 0; c < s.basis.size(); ++c) {
    auto [it, fresh] = block_of_key.emplace(box_part(s.basis[c].v), block_size.size());
    if (fresh) block_size.push_back(0);
    block[c] = it->second;
    local[c] = block_size[it->second]++;
  }
  std::vector<std::vector<SparseRow>> rows(block_size.size());
  for (const auto& r : s.relations) {
    SparseRow lr;
    const std::size_t b = block[r.front().first];
    for (const auto& [c, v] : r) {
      if (block[c] != b) throw InconsistencyError("relation row mixes box parts");
      lr.emplace_back(local[c], v);
    }
    rows[b].push_back(std::move(lr));
  }
  s.blocks = block_size.size();
  for (std::size_t b = 0; b < rows.size(); ++b)
    s.relation_rank += sparse_rank(std::move(rows[b]), block_size[b]);
  return s;
}

Int DeformedGroupRing::graded_dimension(unsigned k, const IntMatrix* dual_basis) const {
  GradedSlice s = slice(k, dual_basis);
  Int dim = s.quotient_dimension();
  if (dim < 0) throw InconsistencyError("graded_dimension: negative dimension");
  return dim;
}

IntPoly DeformedGroupRing::hilbert_delta() const {
  std::vector<Int> coeffs;
  for (unsigned k = 0; k <= t_.dimension(); ++k) coeffs.push_back(graded_dimension(k));
  return IntPoly(std::move(coeffs));
}

std::optional<ConePoint> deformed_multiply(const ConePoint& a, const ConePoint& b,
                                           const DeformedGroupRing& ring) {
  return ring.multiply(a, b);
}

PairRings::PairRings(const TriangulatedPair& pair)
    : whole(pair.whole), restricted(pair.restricted) {}

std::optional<ConePoint> restriction_j(const ConePoint& a, const TriangulatedPair& pair,
                                       const PairRings& rings) {
  auto face = pair.to_restricted(a.carrier);
  if (!face || !pair.restricted.is_face(*face)) return std::nullopt;
  auto v = pair.q_normalized.embedding.cone_to_reduced(a.v);
  if (!v) throw InconsistencyError("restriction_j: carrier in Q but point off Q's lattice");
  return rings.restricted.point(std::move(*v));
}

namespace {

std::string describe(const std::optional<ConePoint>& p) {
  return p ? "y^" + to_string(p->v) : std::string("0");
}

}  // namespace

RingHomCheck check_ring_hom(const TriangulatedPair& pair, const PairRings& rings,
                            std::size_t samples, std::uint64_t seed) {
  constexpr unsigned kMaxDegree = 3;
  std::vector<std::vector<ConePoint>> all(kMaxDegree + 1), in_q(kMaxDegree + 1);
  for (unsigned k = 0; k <= kMaxDegree; ++k) {
    all[k] = rings.whole.monomials(k);
    for (const auto& m : all[k])
      if (pair.to_restricted(m.carrier)) in_q[k].push_back(m);
  }
  SeededRng rng(seed);
  auto draw = [&]() -> const ConePoint& {
    const auto k = rng.below(kMaxDegree + 1);
    const auto& pool = (rng.below(2) == 0 && !in_q[k].empty()) ? in_q[k] : all[k];
    return pool[rng.below(pool.size())];
  };
  RingHomCheck out;
  for (std::size_t s = 0; s < samples; ++s) {
    const ConePoint& a = draw();
    const ConePoint& b = draw();
    auto prod = rings.whole.multiply(a, b);
    auto lhs = prod ? restriction_j(*prod, pair, rings) : std::nullopt;
    auto ja = restriction_j(a, pair, rings);
    auto jb = restriction_j(b, pair, rings);
    auto rhs = (ja && jb) ? rings.restricted.multiply(*ja, *jb) : std::nullopt;
    ++out.samples;
    if (lhs) ++out.nonzero_images;
    bool carriers_ok = true;
    for (const auto& [src, img] : {std::pair{&a, &ja}, std::pair{&b, &jb}})
      if (*img && pair.to_whole((*img)->carrier) != src->carrier) carriers_ok = false;
    if (lhs == rhs && carriers_ok) continue;
    std::ostringstream os;
    os << "a = y^" << to_string(a.v) << ", b = y^" << to_string(b.v) << ": j(ab) = "
       << describe(lhs) << " but j(a)j(b) = " << describe(rhs)
       << (carriers_ok ? "" : " (carrier mismatch)");
    out.ok = false;
    out.counterexample = os.str();
    return out;
  }
  return out;
}

SurjectivityCheck induced_surjectivity(const TriangulatedPair& pair, const PairRings& rings,
                                       unsigned k) {
  SurjectivityCheck out;
  out.degree = k;
  const GradedSlice ps = rings.whole.slice(k, nullptr, k <= pair.whole.dimension());
  const GradedSlice qs = rings.restricted.slice(k);
  out.whole_dimension = ps.rank_computed ? ps.quotient_dimension() : Int(-1);
  out.restricted_dimension = qs.quotient_dimension();
  const std::size_t qcols = qs.basis.size();

  std::map<IntVector, std::size_t> qcolumn;
  for (std::size_t c = 0; c < qcols; ++c) qcolumn.emplace(qs.basis[c].v, c);
  // j on the monomial basis of degree k: P column -> Q column
  std::vector<std::optional<std::size_t>> image(ps.basis.size());
  for (std::size_t c = 0; c < ps.basis.size(); ++c)
    if (auto jm = restriction_j(ps.basis[c], pair, rings)) image[c] = qcolumn.at(jm->v);

  // Surjectivity: rank of (image monomials + Q relations) minus rank of Q relations.
  std::vector<SparseRow> combined = qs.relations;
  for (const auto& col : image)
    if (col) combined.push_back(SparseRow{{*col, Int(1)}});
  const std::size_t with_image = sparse_rank(combined, qcols);
  out.image_dimension = Int(with_image) - Int(qs.relation_rank);
  out.surjective = out.image_dimension == out.restricted_dimension;

  // Well-definedness: j(P relations) ⊆ span(Q relations).
  auto map_row = [&](const SparseRow& r) {
    std::map<std::size_t, Int> acc;
    for (const auto& [c, v] : r)
      if (image[c]) acc[*image[c]] += v;
    SparseRow out_row;
    for (auto& [c, v] : acc)
      if (v != 0) out_row.emplace_back(c, v);
    return out_row;
  };
  std::vector<SparseRow> q_plus_image = qs.relations;
  for (const auto& r : ps.relations)
    if (auto m = map_row(r); !m.empty()) q_plus_image.push_back(std::move(m));
  out.well_defined = sparse_rank(q_plus_image, qcols) == qs.relation_rank;

  // Degree-one generators: span j(theta^P) == span theta^Q.
  const auto q1 = rings.restricted.monomials(1);
  std::map<IntVector, std::size_t> q1col;
  for (std::size_t c = 0; c < q1.size(); ++c) q1col.emplace(q1[c].v, c);
  std::vector<SparseRow> jp, both;
  for (const auto& g : rings.whole.relation_generators()) {
    std::map<std::size_t, Int> acc;
    for (const auto& [i, coef] : g.terms) {
      auto jm = restriction_j(rings.whole.point(pair.whole.lifted(i)), pair, rings);
      if (jm && coef != 0) acc[q1col.at(jm->v)] += coef;
    }
    SparseRow row;
    for (auto& [c, v] : acc)
      if (v != 0) row.emplace_back(c, v);
    if (!row.empty()) jp.push_back(std::move(row));
  }
  both = jp;
  for (const auto& g : rings.restricted.relation_generators()) {
    SparseRow row;
    for (const auto& [i, coef] : g.terms)
      if (coef != 0) row.emplace_back(q1col.at(pair.restricted.lifted(i)), coef);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty()) both.push_back(std::move(row));
  }
  out.generators_match = sparse_rank(jp, q1.size()) == sparse_rank(both, q1.size());
  return out;
}

}  // namespace deltacheck

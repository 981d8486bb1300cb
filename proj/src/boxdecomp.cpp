#include "deltacheck/boxdecomp.hpp"

#include <algorithm>
#include <map>

namespace deltacheck {

namespace {

IntMatrix lifted_columns(const LatticeTriangulation& t, const Face& simplex) {
  const std::size_t d = t.dimension();
  IntMatrix m(d + 1, simplex.size());
  for (std::size_t c = 0; c < simplex.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) m(r, c) = t.points()[simplex[c]][r];
    m(d, c) = 1;
  }
  return m;
}

const Face& containing_simplex(const LatticeTriangulation& t, const Face& f) {
  for (const auto& s : t.simplices())
    if (std::includes(s.begin(), s.end(), f.begin(), f.end())) return s;
  throw UsageError("box_points: " + to_string(f) + " is not a face");
}

bool advance(IntVector& x, const IntMatrix& h) {
  for (std::size_t r = x.size(); r-- > 0;) {
    if (++x[r] < h(r, r)) return true;
    x[r] = 0;
  }
  return false;
}

}  // namespace

std::vector<ParallelepipedPoint> half_open_parallelepiped(const LatticeTriangulation& t,
                                                          const Face& simplex) {
  const std::size_t n = t.dimension() + 1;
  if (simplex.size() != n) throw UsageError("half_open_parallelepiped: not a maximal simplex");
  const IntMatrix v = lifted_columns(t, simplex);
  const Int det = determinant(v);
  if (det == 0) throw UsageError("half_open_parallelepiped: degenerate simplex");
  const Int abs_det = abs(det);
  const IntMatrix adj = adjugate(v);
  const HermiteForm hf = column_hermite(v);

  std::vector<ParallelepipedPoint> out;
  IntVector x(n);
  IntVector frac(n);
  // Coset representatives: 0 <= x_r < h(r, r) for the lower-triangular form.
  do {
    for (std::size_t i = 0; i < n; ++i) {
      Int num = 0;
      for (std::size_t k = 0; k < n; ++k) num += adj(i, k) * x[k];
      if (det < 0) num = -num;
      mpz_fdiv_r(frac[i].get_mpz_t(), num.get_mpz_t(), abs_det.get_mpz_t());
    }
    ParallelepipedPoint pt{IntVector(n), RatVector(n), {}};
    for (std::size_t r = 0; r < n; ++r) {
      Int acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += v(r, c) * frac[c];
      if (!mpz_divisible_p(acc.get_mpz_t(), abs_det.get_mpz_t()))
        throw InconsistencyError("half_open_parallelepiped: non-integral reduction");
      pt.w[r] = acc / abs_det;
    }
    for (std::size_t i = 0; i < n; ++i) {
      pt.q[i] = Rat(frac[i], abs_det);
      pt.q[i].canonicalize();
      if (frac[i] != 0) pt.support.push_back(simplex[i]);
    }
    out.push_back(std::move(pt));
  } while (advance(x, hf.h));
  std::sort(out.begin(), out.end(),
            [](const ParallelepipedPoint& a, const ParallelepipedPoint& b) { return a.w < b.w; });
  if (Int(out.size()) != abs_det)
    throw InconsistencyError("half_open_parallelepiped: coset count differs from |det|");
  return out;
}

std::vector<BoxPoint> box_points(const Face& f, const LatticeTriangulation& t) {
  if (f.empty()) return {BoxPoint{{}, IntVector(t.dimension() + 1), {}, 0}};
  if (!t.is_face(f)) throw UsageError("box_points: " + to_string(f) + " is not a face");
  const Face& s = containing_simplex(t, f);
  std::vector<BoxPoint> out;
  for (auto& pt : half_open_parallelepiped(t, s)) {
    if (pt.support != f) continue;
    BoxPoint b{f, pt.w, {}, pt.w.back()};
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::binary_search(f.begin(), f.end(), s[i])) b.q.push_back(pt.q[i]);
    out.push_back(std::move(b));
  }
  return out;
}

IntPoly box_poly(const Face& f, const LatticeTriangulation& t) {
  IntPoly b;
  for (const auto& pt : box_points(f, t)) b += IntPoly::monomial(pt.age.get_ui());
  return b;
}

std::vector<FaceTerm> box_decomposition(const LatticeTriangulation& t) {
  const long d = static_cast<long>(t.dimension());
  // Each face is read off the first maximal simplex containing it.
  std::map<Face, std::size_t> owner;
  for (std::size_t k = 0; k < t.simplices().size(); ++k) {
    const Face& s = t.simplices()[k];
    for (std::size_t mask = 1; mask < (std::size_t{1} << s.size()); ++mask) {
      Face f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
      owner.emplace(std::move(f), k);
    }
  }
  std::map<Face, IntPoly> boxes;
  for (std::size_t k = 0; k < t.simplices().size(); ++k) {
    for (const auto& pt : half_open_parallelepiped(t, t.simplices()[k])) {
      if (pt.support.empty() || owner.at(pt.support) != k) continue;
      boxes[pt.support] += IntPoly::monomial(pt.w.back().get_ui());
    }
  }
  std::vector<FaceTerm> terms;
  terms.push_back(FaceTerm{{}, IntPoly::monomial(0), h_polynomial(t.faces(), d), d});
  for (const auto& f : t.faces()) {
    auto it = boxes.find(f);
    if (it == boxes.end()) continue;
    const long d_ref = d - face_dim(f) - 1;
    terms.push_back(FaceTerm{f, it->second, h_polynomial(link(t, f), d_ref), d_ref});
  }
  return terms;
}

IntPoly box_delta(const LatticeTriangulation& t) {
  IntPoly delta;
  for (const auto& term : box_decomposition(t)) delta += term.box * term.link_h;
  return delta;
}

IntPoly checked_box_delta(const LatticeTriangulation& t, const IntPoly& expected) {
  IntPoly delta = box_delta(t);
  if (delta != expected)
    throw InconsistencyError("box decomposition gives " + delta.to_string() +
                             " but counting gives " + expected.to_string());
  return delta;
}

}  // namespace deltacheck

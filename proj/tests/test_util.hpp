#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "deltacheck/exactmath.hpp"
#include "deltacheck/poly.hpp"
#include "deltacheck/polytope.hpp"

namespace testutil {

using deltacheck::Int;
using deltacheck::IntPoly;
using deltacheck::IntVector;
using deltacheck::LatticePolytope;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<Int> ints(std::initializer_list<long> xs) { return iv(xs); }

inline IntPoly poly(std::initializer_list<long> xs) { return IntPoly(iv(xs)); }

inline LatticePolytope segment(long a, long b) { return LatticePolytope({iv({a}), iv({b})}); }

inline LatticePolytope unit_square() {
  return LatticePolytope({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})}, "unit_square");
}

inline LatticePolytope box(long a, long b) {
  return LatticePolytope({iv({0, 0}), iv({a, 0}), iv({0, b}), iv({a, b})});
}

inline LatticePolytope unit_cube() {
  std::vector<IntVector> vs;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) vs.push_back(iv({x, y, z}));
  return LatticePolytope(vs, "unit_cube");
}

inline LatticePolytope simplex(std::size_t d, long scale = 1) {
  std::vector<IntVector> vs{IntVector(d)};
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d);
    e[i] = scale;
    vs.push_back(e);
  }
  return LatticePolytope(vs);
}

inline LatticePolytope reeve(long h) {
  return LatticePolytope({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, h})});
}

}  // namespace testutil

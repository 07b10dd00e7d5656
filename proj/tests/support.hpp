#pragma once

#include <vector>

#include "gmvi/geometry.hpp"
#include "gmvi/problems.hpp"

namespace gmvi::testing {

/// F(x) = b for every x.
inline ProblemInstance constant_instance(const Vector& b) {
  const Index n = b.size();
  return make_affine("CONST", Matrix::Zero(n, n), b, Monotonicity::Monotone);
}

inline Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

inline Vector random_vector(Rng& rng, Index n, double lo, double hi) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

inline std::vector<Geometry> all_geometries(Index n) {
  return {Geometry::euclidean(n), Geometry::entropy(n), Geometry::pnorm(n)};
}

}  // namespace gmvi::testing

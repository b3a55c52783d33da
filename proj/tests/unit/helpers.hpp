#pragma once

#include <random>

#include "spinpair/spinpair.hpp"

namespace testing {

inline spinpair::ModelParams chain(double B, double lambda, int M = 500, double t = 1.0) {
  spinpair::ModelParams p;
  p.B = B;
  p.lambda = lambda;
  p.M = M;
  p.t = t;
  return p;
}

inline bool close(spinpair::Complex x, spinpair::Complex y, double tol) {
  return std::abs(x - y) <= tol;
}

/// Fixed-seed generator so property tests are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261014);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

}  // namespace testing

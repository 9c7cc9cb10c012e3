#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pptedge/linalg.hpp"

namespace pptedge {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer, used to decorrelate user seeds before they are
/// combined with stream indices.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for restart `index` under a user seed:
/// mixed(seed) XOR index.
inline Rng restart_stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed) ^ index);
}

/// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts
/// N(0, 1/2)).
inline ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix m(rows, cols);
  // Explicit loop fixes the draw order.
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = Complex(re, im);
    }
  return m;
}

/// Haar-random unit vector.
inline ComplexVector random_unit_vector(Eigen::Index n, Rng& rng) {
  ComplexVector v = complex_gaussian(n, 1, rng);
  return v / v.norm();
}

}  // namespace pptedge

#pragma once

#include <cstdint>
#include <random>

#include "slicealg/linalg.hpp"

namespace slicealg {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); streams are trial indices, so a
/// parallel run draws exactly what the serial run draws.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return Rng(z);
}

inline double standard_normal(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

inline double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

inline Element random_element(int n, Rng& rng) {
  Element e(n);
  for (int i = 0; i < n; ++i) e(i) = standard_normal(rng);
  return e;
}

inline Complex random_complex(Rng& rng, double scale = 1.0) {
  return {scale * standard_normal(rng), scale * standard_normal(rng)};
}

}  // namespace slicealg

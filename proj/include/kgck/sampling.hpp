#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kgck/repn.hpp"

namespace kgck {

/// Deterministic pseudo-random inputs for the property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n);
  const Path& pick(const std::vector<Path>& paths) { return paths.at(index(paths.size())); }
  /// `count` distinct paths (fewer if the pool is smaller), canonical order.
  std::vector<Path> subset(const std::vector<Path>& pool, std::size_t count);
  /// Σ c_i t_{λ_i} t_{μ_i}* with s(λ_i) = s(μ_i) and coefficients having
  /// real and imaginary parts uniform in [-1, 1].
  FormalElement<Complex> formal_element(const std::vector<Path>& paths, std::size_t terms);
  /// As above with small integer coefficients.
  FormalElement<Rational> rational_element(const std::vector<Path>& paths, std::size_t terms);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kgck

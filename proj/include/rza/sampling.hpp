#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rza/rational.hpp"

namespace rza {

struct SampleOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 42;
};

/// Seeded source of small rationals u/v with u in [-100, 100], v in [1, 10].
/// Keeping numerators and denominators small bounds exact-arithmetic growth.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational entry();
  /// Nonzero vector of sampled entries.
  std::vector<Rational> direction(std::size_t n);
  /// Strictly positive vector: |u/v| floored at 1/100.
  std::vector<Rational> positive_direction(std::size_t n);
  std::vector<Rational> point(std::size_t n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rza

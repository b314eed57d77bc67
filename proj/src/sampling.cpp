#include "rza/sampling.hpp"

#include <algorithm>

namespace rza {

Rational RationalSampler::entry() {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 10);
  const long u = num(engine_);
  const long v = den(engine_);
  Rational r(u, v);
  r.canonicalize();
  return r;
}

std::vector<Rational> RationalSampler::direction(std::size_t n) {
  if (n == 0) return {};
  while (true) {
    auto v = point(n);
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) return v;
  }
}

std::vector<Rational> RationalSampler::positive_direction(std::size_t n) {
  static const Rational kFloor(1, 100);
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = abs(entry());
    v.push_back(x < kFloor ? kFloor : x);
  }
  return v;
}

std::vector<Rational> RationalSampler::point(std::size_t n) {
  std::vector<Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(entry());
  return v;
}

}  // namespace rza

#include <doctest.h>

#include "rza/error.hpp"
#include "rza/realroot.hpp"
#include "support.hpp"

using namespace rza;
using U = UnivariatePolynomial;

TEST_CASE("univariate basics") {
  const U f({1, 2, 1});
  CHECK(f.degree() == 2);
  CHECK(U().degree() == -1);
  CHECK(f.evaluate(-1) == 0);
  CHECK(f.derivative() == U({2, 2}));
  const auto [q, r] = divmod(U({-1, 0, 1}), U({-1, 1}));
  CHECK(q == U({1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(f, U()), PreconditionError);
  CHECK(gcd(U({-1, 0, 1}), U({1, 2, 1})) == U({1, 1}));
}

TEST_CASE("square-free part") {
  const U f = U::linear_with_root(1) * U::linear_with_root(1) * U::linear_with_root(-2);
  CHECK(squarefree_part(f) == U::linear_with_root(1) * U::linear_with_root(-2));
  CHECK(squarefree_part(U({1, 0, 1})) == U({1, 0, 1}));
  CHECK(squarefree_part(U::constant(5)) == U::constant(1));
  CHECK_THROWS_AS(squarefree_part(U()), PreconditionError);
}

TEST_CASE("Sturm chain ends in a nonzero constant") {
  const SturmChain c(U({-1, 0, 0, 1}));
  REQUIRE(!c.sequence().empty());
  CHECK(c.sequence().back().degree() == 0);
  CHECK(c.sequence().front() == U({-1, 0, 0, 1}).primitive());
}

TEST_CASE("root counts") {
  CHECK(count_real_roots(U({1, 0, -1})) == 2);
  CHECK(count_real_roots(U({1, 3, 3})) == 0);
  CHECK(count_real_roots(U({1, 0, Rational(-1, 4)}), Interval::open(0, 1)) == 0);
  CHECK(count_real_roots(U({-1, 1}), Interval::open(0, 1)) == 0);
  CHECK(count_real_roots(U({-1, 1}), Interval::closed(0, 1)) == 1);
  CHECK(count_real_roots(U({-1, 1}), {Endpoint::open(0), Endpoint::closed_at(1)}) == 1);
  CHECK(count_real_roots(U({-1, 1}), {Endpoint::closed_at(1), Endpoint::infinite()}) == 1);
  CHECK_THROWS_AS(count_real_roots(U()), PreconditionError);
}

TEST_CASE("real-rootedness") {
  CHECK(is_real_rooted(U({1, 3, 3, 1})));
  CHECK_FALSE(is_real_rooted(U({1, 3, 3})));
  CHECK_FALSE(is_real_rooted(U()));
  CHECK(is_real_rooted(U::constant(-4)));
}

TEST_CASE("property: products of linear factors are real-rooted, t^2+1 breaks it") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int k = 0; k < 300; ++k) {
    const auto roots = rza::testing::small_vector(rng, static_cast<std::size_t>(deg(rng)));
    const U f(rza::testing::from_roots(roots, rza::testing::small_rational(rng) + 10));
    CHECK(is_real_rooted(f));
    CHECK_FALSE(is_real_rooted(f * U({1, 0, 1})));
  }
}

TEST_CASE("property: counts add up over a partition of the line") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    auto roots = rza::testing::small_vector(rng, 5);
    U f(rza::testing::from_roots(roots));
    f = f * U({1, 0, 1});
    std::vector<Rational> cuts = rza::testing::small_vector(rng, 3, 20, 7);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    bool hits_root = false;
    for (const auto& c : cuts) hits_root = hits_root || f.evaluate(c) == 0;
    if (hits_root) continue;
    int total = count_real_roots(f, {Endpoint::infinite(), Endpoint::open(cuts.front())});
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += count_real_roots(f, Interval::open(cuts[i], cuts[i + 1]));
    total += count_real_roots(f, {Endpoint::open(cuts.back()), Endpoint::infinite()});
    CHECK(total == count_real_roots(f));
  }
}

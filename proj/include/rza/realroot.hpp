#pragma once

#include <optional>
#include <vector>

#include "rza/rational.hpp"
#include "rza/univariate.hpp"

namespace rza {

/// f / gcd(f, f'), monic. Throws PreconditionError on the zero polynomial.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f);

/// One end of an interval. An absent value means -inf (lower) or +inf (upper).
struct Endpoint {
  std::optional<Rational> value;
  bool closed = false;

  static Endpoint infinite() { return {}; }
  static Endpoint open(Rational v) { return {std::move(v), false}; }
  static Endpoint closed_at(Rational v) { return {std::move(v), true}; }
};

struct Interval {
  Endpoint lower;
  Endpoint upper;

  static Interval real_line() { return {}; }
  static Interval open(Rational a, Rational b) { return {Endpoint::open(std::move(a)), Endpoint::open(std::move(b))}; }
  static Interval closed(Rational a, Rational b) {
    return {Endpoint::closed_at(std::move(a)), Endpoint::closed_at(std::move(b))};
  }
};

/// Sturm chain of the square-free part of a nonzero polynomial. Each element
/// after the first two is the negated remainder, rescaled by a positive
/// constant to keep coefficients integral.
class SturmChain {
 public:
  explicit SturmChain(const UnivariatePolynomial& f);

  const std::vector<UnivariatePolynomial>& sequence() const { return chain_; }
  /// Sign variations at t (zeros skipped).
  int variations_at(const Rational& t) const;
  int variations_at_infinity(bool towards_positive) const;
  /// Distinct real roots in the half-open interval (a, b].
  int roots_in_half_open(const std::optional<Rational>& a, const std::optional<Rational>& b) const;

 private:
  std::vector<UnivariatePolynomial> chain_;
};

/// Number of distinct real roots of f in the interval. Throws PreconditionError on f = 0.
int count_real_roots(const UnivariatePolynomial& f, const Interval& interval = Interval::real_line());

/// True iff f is nonzero and all its complex roots are real. Nonzero constants
/// are real-rooted; the zero polynomial is not.
bool is_real_rooted(const UnivariatePolynomial& f);

}  // namespace rza

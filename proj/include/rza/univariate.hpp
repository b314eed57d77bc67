#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rza/rational.hpp"

namespace rza {

/// Dense univariate polynomial, lowest degree first. Trailing zeros are always
/// stripped, so the zero polynomial has an empty coefficient vector.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  static UnivariatePolynomial constant(const Rational& c);
  /// Monic linear factor t - root.
  static UnivariatePolynomial linear_with_root(const Rational& root);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(evaluate(t)); }
  /// Sign of f(t) as t -> +inf (towards_positive) or -inf.
  int sign_at_infinity(bool towards_positive) const;

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  /// Integer coefficients with gcd 1, obtained by scaling with a positive rational.
  UnivariatePolynomial primitive() const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& rhs);

 private:
  void normalize();
  std::vector<Rational> c_;
};

UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b);
UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b);
UnivariatePolynomial operator-(UnivariatePolynomial a);
UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c);

/// Quotient and remainder; throws PreconditionError on division by zero.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& num,
                                                             const UnivariatePolynomial& den);
/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

std::string format(const UnivariatePolynomial& f, const std::string& var = "t");

}  // namespace rza

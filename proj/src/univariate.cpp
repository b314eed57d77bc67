#include "rza/univariate.hpp"

#include <algorithm>
#include <sstream>

#include "rza/error.hpp"

namespace rza {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
  normalize();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
  return UnivariatePolynomial({c});
}

UnivariatePolynomial UnivariatePolynomial::linear_with_root(const Rational& root) {
  return UnivariatePolynomial({-root, 1});
}

void UnivariatePolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

int UnivariatePolynomial::sign_at_infinity(bool towards_positive) const {
  if (c_.empty()) return 0;
  const int s = sgn(leading());
  return (towards_positive || degree() % 2 == 0) ? s : -s;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (c_.empty()) return *this;
  return *this * Rational(1 / leading());
}

UnivariatePolynomial UnivariatePolynomial::primitive() const {
  if (c_.empty()) return *this;
  Integer lcm_den = 1, gcd_num = 0;
  for (const auto& c : c_) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(lcm_den, gcd_num);
  scale.canonicalize();
  return *this * scale;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
UnivariatePolynomial operator-(UnivariatePolynomial a) { return a * Rational(-1); }

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (a.coefficients()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
      out[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) {
  std::vector<Rational> out = a.coefficients();
  for (auto& v : out) v *= c;
  return UnivariatePolynomial(std::move(out));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& num,
                                                             const UnivariatePolynomial& den) {
  if (den.is_zero()) throw PreconditionError("univariate division by zero polynomial");
  if (num.degree() < den.degree()) return {UnivariatePolynomial(), num};
  std::vector<Rational> rem = num.coefficients();
  std::vector<Rational> quo(num.degree() - den.degree() + 1);
  const int dd = den.degree();
  const Rational& lead = den.leading();
  for (int k = num.degree() - dd; k >= 0; --k) {
    const Rational q = rem[k + dd] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den.coefficients()[j];
  }
  rem.resize(dd);
  return {UnivariatePolynomial(std::move(quo)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

std::string format(const UnivariatePolynomial& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= f.degree(); ++i) {
    Rational c = f.coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << to_string(c);
      continue;
    }
    if (c != 1) out << to_string(c) << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace rza

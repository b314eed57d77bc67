#include "rza/realroot.hpp"

#include "rza/error.hpp"

namespace rza {

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw PreconditionError("square-free part of the zero polynomial");
  if (f.degree() == 0) return UnivariatePolynomial::constant(1);
  const UnivariatePolynomial g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

SturmChain::SturmChain(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw PreconditionError("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree_part(f).primitive());
  if (chain_.front().degree() == 0) return;
  chain_.push_back(chain_.front().derivative().primitive());
  while (chain_.back().degree() > 0) {
    const auto& prev = chain_[chain_.size() - 2];
    const auto& last = chain_.back();
    UnivariatePolynomial next = -divmod(prev, last).second;
    // Square-free input makes the final element a nonzero constant, never zero.
    if (next.is_zero()) throw GuardError("Sturm chain ended in zero on a square-free input");
    chain_.push_back(next.primitive());
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& g : chain_) signs.push_back(g.sign_at(t));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool towards_positive) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& g : chain_) signs.push_back(g.sign_at_infinity(towards_positive));
  return count_variations(signs);
}

int SturmChain::roots_in_half_open(const std::optional<Rational>& a, const std::optional<Rational>& b) const {
  const int va = a ? variations_at(*a) : variations_at_infinity(false);
  const int vb = b ? variations_at(*b) : variations_at_infinity(true);
  return va - vb;
}

int count_real_roots(const UnivariatePolynomial& f, const Interval& interval) {
  if (f.is_zero()) throw PreconditionError("root count of the zero polynomial");
  const auto& lo = interval.lower.value;
  const auto& hi = interval.upper.value;
  if (lo && hi && *lo > *hi) return 0;
  if (lo && hi && *lo == *hi) {
    return (interval.lower.closed && interval.upper.closed && f.evaluate(*lo) == 0) ? 1 : 0;
  }
  const SturmChain chain(f);
  int count = chain.roots_in_half_open(lo, hi);
  // Endpoint membership is settled by exact evaluation.
  if (hi && !interval.upper.closed && f.evaluate(*hi) == 0) --count;
  if (lo && interval.lower.closed && f.evaluate(*lo) == 0) ++count;
  return count;
}

bool is_real_rooted(const UnivariatePolynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  const UnivariatePolynomial sf = squarefree_part(f);
  return count_real_roots(sf) == sf.degree();
}

}  // namespace rza

#pragma once

// Generators and independent oracles shared by the test binaries. Nothing here
// calls into the library's own deciders.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rza/matrix.hpp"
#include "rza/polynomial.hpp"

namespace rza::testing {

inline Rational small_rational(std::mt19937_64& rng, int num = 9, int den = 4) {
  std::uniform_int_distribution<int> u(-num, num), v(1, den);
  return Rational(u(rng), v(rng));
}

inline std::vector<Rational> small_vector(std::mt19937_64& rng, std::size_t n, int num = 9, int den = 4) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(small_rational(rng, num, den));
  for (auto& x : out) x.canonicalize();
  return out;
}

/// Random sparse polynomial over `vars` with up to `terms` terms of degree <= max_deg.
inline Polynomial random_polynomial(std::mt19937_64& rng, const VariableSet& vars, int terms, unsigned max_deg) {
  Polynomial p(vars);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  for (int k = 0; k < terms; ++k) {
    Monomial m(vars.size(), 0);
    unsigned budget = e(rng);
    for (std::size_t i = 0; i < vars.size() && budget > 0; ++i) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      m[i] = take(rng);
      budget -= m[i];
    }
    std::shuffle(m.begin(), m.end(), rng);
    Rational c = small_rational(rng);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

/// 1 + aᵀx with a random rational a.
inline Polynomial random_linear_factor(std::mt19937_64& rng, const VariableSet& vars) {
  Polynomial p = Polynomial::constant(1, vars);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Monomial m(vars.size(), 0);
    m[i] = 1;
    Rational c = small_rational(rng);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

inline MatrixQ random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int num = 5, int den = 3) {
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = small_rational(rng, num, den);
      m(i, j).canonicalize();
    }
  return m;
}

inline SymmetricMatrixQ random_symmetric(std::mt19937_64& rng, std::size_t d, int num = 5, int den = 3) {
  MatrixQ m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational v = small_rational(rng, num, den);
      v.canonicalize();
      m(i, j) = v;
      m(j, i) = v;
    }
  return SymmetricMatrixQ(m);
}

/// G·Gᵀ for a random d×k G: PSD of rank <= k.
inline SymmetricMatrixQ random_gram(std::mt19937_64& rng, std::size_t d, std::size_t k) {
  const MatrixQ g = random_matrix(rng, d, k);
  return SymmetricMatrixQ(g * g.transposed());
}

/// Leibniz formula over all permutations; independent of the library's eliminations.
inline Rational leibniz_determinant(const MatrixQ& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Expands Π (t - r_i) into coefficients, lowest first.
inline std::vector<Rational> from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
  std::vector<Rational> c{lead};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

inline double horner(const std::vector<double>& c, double t) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

/// Counts distinct real roots numerically: Descartes' rule of signs on
/// Möbius-transformed intervals (Vincent–Collins–Akritas), exact on rationals,
/// with a Cauchy bound. The input has to be square-free.
class DescartesIsolator {
 public:
  /// Coefficients lowest first; must be square-free and nonzero.
  explicit DescartesIsolator(std::vector<Rational> c) : c_(std::move(c)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  int count_all() const {
    if (c_.size() <= 1) return 0;
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      Rational q = abs(c_[i] / c_.back());
      if (q > bound) bound = q;
    }
    bound += 1;
    int zero_root = c_.front() == 0 ? 1 : 0;
    return zero_root + count_open(Rational(0), bound) + count_open(-bound, Rational(0));
  }

 private:
  Rational eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  /// Coefficients of (1+x)^n f((a + b x)/(1 + x)) mapped to sign variations.
  int descartes(const Rational& a, const Rational& b) const {
    const std::size_t n = c_.size() - 1;
    // g(x) = Σ c_i (a + b x)^i (1 + x)^(n-i)
    std::vector<Rational> g(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
      if (c_[i] == 0) continue;
      std::vector<Rational> term{c_[i]};
      auto mul = [&](const Rational& u, const Rational& v) {
        std::vector<Rational> next(term.size() + 1, Rational(0));
        for (std::size_t k = 0; k < term.size(); ++k) {
          next[k] += term[k] * u;
          next[k + 1] += term[k] * v;
        }
        term = std::move(next);
      };
      for (std::size_t k = 0; k < i; ++k) mul(a, b);
      for (std::size_t k = i; k < n; ++k) mul(Rational(1), Rational(1));
      for (std::size_t k = 0; k < term.size(); ++k) g[k] += term[k];
    }
    int changes = 0, last = 0;
    for (const auto& x : g) {
      const int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b, int depth = 0) const {
    const int v = descartes(a, b);
    if (v == 0) return 0;
    if (v == 1) return 1;
    if (depth > 200) return -1000;
    Rational mid = (a + b) / 2;
    mid.canonicalize();
    return count_open(a, mid, depth + 1) + (eval(mid) == 0 ? 1 : 0) + count_open(mid, b, depth + 1);
  }

  std::vector<Rational> c_;
};

/// Every permutation of 0..n-1.
inline std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace rza::testing

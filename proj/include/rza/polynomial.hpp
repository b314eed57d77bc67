#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rza/rational.hpp"
#include "rza/univariate.hpp"

namespace rza {

/// Ordered list of distinct variable names. The order is fixed at creation and
/// drives exponent-vector layout and canonical printing.
class VariableSet {
 public:
  VariableSet() = default;
  VariableSet(std::initializer_list<std::string> names);
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  /// Index of `name`; throws InputError if absent.
  std::size_t require(std::string_view name) const;

  /// This set followed by the names of `other` not already present.
  VariableSet united(const VariableSet& other) const;
  VariableSet with(std::string name) const;
  VariableSet without(std::string_view name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_identifier(std::string_view name);

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic: lower total degree first; within a degree the monomial
/// with the larger exponent on the earliest variable comes first.
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Rational, GradedLexOrder>;

/// deg(0). Every degree query on the zero polynomial returns this.
inline constexpr int kZeroDegree = -1;

/// Sparse multivariate polynomial with exact rational coefficients. Terms with a
/// zero coefficient are never stored, so the term map is canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VariableSet vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const Rational& c, VariableSet vars = {});
  static Polynomial variable(VariableSet vars, std::string_view name);

  const VariableSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  int degree_in(std::size_t var) const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  bool is_multi_affine() const;
  bool is_homogeneous() const;
  bool has_nonnegative_coefficients() const;
  /// Names of variables appearing with positive exponent, in declared order.
  std::vector<std::string> occurring_variables() const;

  /// Accumulates c·x^m; drops the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Re-expresses this polynomial over `target` (matching variables by name).
  /// Throws PreconditionError if an occurring variable is missing from `target`.
  Polynomial over(const VariableSet& target) const;
  /// Drops declared variables that do not occur.
  Polynomial trimmed() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  /// Equality as polynomials: variables are matched by name, unused variables ignored.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  VariableSet vars_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
Polynomial pow(const Polynomial& p, unsigned exponent);

enum class ArithOp { kAdd, kSub, kMul, kPow };
/// Uniform entry point; `exponent` is read only for kPow and must be >= 0.
Polynomial arith(ArithOp op, const Polynomial& lhs, const Polynomial& rhs, long exponent = 0);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Sets one variable to a value. The variable stays declared.
Polynomial substitute(const Polynomial& p, std::string_view var, const Rational& value);
/// Replaces one variable by a polynomial; result is over vars(p) ∪ vars(image).
Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& image);
/// Replaces variable i of p by images[i]; all images must live over `target`.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images, const VariableSet& target);

/// p(t·a + b) as a univariate polynomial in t.
UnivariatePolynomial restrict_line(const Polynomial& p, std::span<const Rational> a,
                                   std::span<const Rational> b);
UnivariatePolynomial restrict_line(const Polynomial& p, std::span<const Rational> a);

/// p(x + a).
Polynomial shift(const Polynomial& p, std::span<const Rational> a);

/// newvar^d · p(x / newvar). Requires d >= deg p and a fresh variable name.
Polynomial homogenize(const Polynomial& p, unsigned d, const std::string& newvar);

Polynomial partial_derivative(const Polynomial& p, std::string_view var, unsigned order = 1);

Polynomial multi_affine_part(const Polynomial& p);
Polynomial homogeneous_component(const Polynomial& p, unsigned k);
Polynomial elementary_symmetric(const VariableSet& vars, unsigned k);

/// Subset family of a multi-affine polynomial as bitmasks over p.vars()
/// (bit i set <=> variable i in the subset), sorted ascending.
std::vector<std::uint64_t> support(const Polynomial& p);

/// Canonical text, e.g. "1 + 3*x2 + x1*x2". The zero polynomial prints as "0".
std::string format(const Polynomial& p);

/// Parses the grammar
///   poly := ['-'] term (('+'|'-') term)*
///   term := coeff ('*' factor)* | factor ('*' factor)*
///   coeff := int | int '/' posint ;  factor := ident ('^' posint)?
/// Every identifier must belong to `vars`.
Polynomial parse(std::string_view text, const VariableSet& vars);
/// Same grammar; variables are collected from the text and sorted naturally
/// (alphabetic prefix, then numeric suffix: x2 < x10 < y).
Polynomial parse(std::string_view text);

/// Orders names by alphabetic stem, then numeric suffix.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace rza

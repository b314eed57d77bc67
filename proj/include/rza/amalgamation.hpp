#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rza/certify.hpp"
#include "rza/matrix.hpp"
#include "rza/polynomial.hpp"

namespace rza {

/// p over (x, y) and q over (x, z); x may be empty.
struct AmalgamationProblem {
  VariableSet x;
  VariableSet y;
  VariableSet z;
  Polynomial p;
  Polynomial q;
};

/// Throws InputError when the three blocks overlap or p, q use variables
/// outside (x, y) and (x, z).
void validate_problem(const AmalgamationProblem& prob);

/// p(x, 0) - q(x, 0). Zero iff the two marginals are compatible.
Polynomial compatibility_difference(const AmalgamationProblem& prob);

// --------------------------------------------------------- disjoint (ℓ = 0)

struct DisjointAmalgam {
  Polynomial r;
  unsigned degree = 0;
  /// Σ_{i+j=d} ∂_s^i ∂_t^j p̃q̃ before setting s + t to 1.
  Polynomial r_tilde;
  std::string s;
  std::string t;
};

/// Degree-d operator amalgam of p over y and q over z (no shared variables).
/// d defaults to max(deg p, deg q); an explicit d must not be smaller.
/// Requires p(0) = q(0) != 0. GuardError if r̃ ∉ R[s+t, y, z].
DisjointAmalgam amalgamate_disjoint_full(const Polynomial& p, const Polynomial& q,
                                         std::optional<unsigned> degree = std::nullopt);
Polynomial amalgamate_disjoint(const Polynomial& p, const Polynomial& q,
                               std::optional<unsigned> degree = std::nullopt);

// ------------------------------------------------------------- quadratic

/// p = [x;y]ᵀ[[A, E], [Eᵀ, B]][x;y] + aᵀx + bᵀy + 1 and
/// q = [x;z]ᵀ[[A, F], [Fᵀ, C]][x;z] + aᵀx + cᵀz + 1.
struct QuadraticBlocks {
  SymmetricMatrixQ a_mat;
  SymmetricMatrixQ b_mat;
  SymmetricMatrixQ c_mat;
  MatrixQ e;
  MatrixQ f;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct QuadraticAmalgam {
  Polynomial r;
  QuadraticBlocks blocks;
  SymmetricMatrixQ p_disc;
  SymmetricMatrixQ q_disc;
  /// Filled (y, z) block of the joint discriminant.
  MatrixQ w;
  /// Coefficient block: r contains 2·G_ij·y_i·z_j.
  MatrixQ g;
  /// Discriminant of r over (x, y, z); PSD by construction and re-checked.
  SymmetricMatrixQ joint_disc;
};

/// Requires deg p, deg q <= 2, compatible marginals, p(0) != 0 and both inputs
/// real zero. Fills the joint discriminant by solving P_xx X = Q_xz and
/// setting W = P_yx X. Violations raise PreconditionError.
QuadraticAmalgam amalgamate_quadratic_full(const AmalgamationProblem& prob);
Polynomial amalgamate_quadratic(const AmalgamationProblem& prob);

// ---------------------------------------------------------- determinantal

struct DeterminantalAmalgam {
  Polynomial r;
  Polynomial p;
  Polynomial q;
};

/// r = det(I + Σ x·A + Σ y·B + Σ z·C); p and q are the (x, y) and (x, z)
/// determinants built from the same shared matrices.
DeterminantalAmalgam amalgamate_determinantal(const std::vector<NamedMatrix>& x_mats,
                                              const std::vector<NamedMatrix>& y_mats,
                                              const std::vector<NamedMatrix>& z_mats);

// ------------------------------------------------------ averaging identities

struct WalshCheck {
  bool equal = false;
  Polynomial lhs;
  Polynomial rhs;
};

/// Σ_{i+j=d} ∂_s^i ∂_t^j Π(s + a_i) Π(t + b_j) against
/// Σ_{σ ∈ S_d} Π(s + t + a_i + b_σ(i)). |a| = |b| <= 6.
WalshCheck walsh_identity(const std::vector<Rational>& a, const std::vector<Rational>& b);
bool walsh_identity_check(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Σ_{P ∈ S_d} det(A + Uᵀ PᵀDP U) for diagonal entries `diag` of D. U = I when null.
Rational permutation_sum(const MatrixQ& a, const std::vector<Rational>& diag, const MatrixQ* u = nullptr);
/// (1/d!) Σ_P det(A + PᵀDP). D must be diagonal, d <= 6.
Rational permutation_average(const SymmetricMatrixQ& a, const SymmetricMatrixQ& d);

// ------------------------------------------------------------ Monte Carlo

/// Polynomial with double coefficients for Monte Carlo estimates only.
class FloatPolynomial {
 public:
  FloatPolynomial() = default;
  explicit FloatPolynomial(VariableSet vars) : vars_(std::move(vars)) {}
  static FloatPolynomial constant(double c, const VariableSet& vars);
  static FloatPolynomial variable(const VariableSet& vars, std::string_view name);

  const VariableSet& vars() const { return vars_; }
  const std::map<Monomial, double, GradedLexOrder>& terms() const { return terms_; }
  double coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, double c);

  FloatPolynomial& operator+=(const FloatPolynomial& rhs);
  FloatPolynomial& operator-=(const FloatPolynomial& rhs);

 private:
  VariableSet vars_;
  std::map<Monomial, double, GradedLexOrder> terms_;
};

FloatPolynomial operator+(FloatPolynomial a, const FloatPolynomial& b);
FloatPolynomial operator-(FloatPolynomial a, const FloatPolynomial& b);
FloatPolynomial operator-(FloatPolynomial a);
FloatPolynomial operator*(const FloatPolynomial& a, const FloatPolynomial& b);
FloatPolynomial operator*(FloatPolynomial a, double c);
std::string format(const FloatPolynomial& p, int precision = 6);

struct MonteCarloEstimate {
  FloatPolynomial mean;
  /// Standard error of each coefficient of `mean` (same monomials).
  std::map<Monomial, double, GradedLexOrder> std_error;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Averages det(I + Σ y·B + Uᵀ(Σ z·C)U) over N Haar-orthogonal U. Sample i
/// draws from its own generator seeded by (seed, i). d <= 5 and at most two
/// matrices per side.
MonteCarloEstimate mc_orthogonal_amalgam(const std::vector<NamedMatrix>& y_mats,
                                         const std::vector<NamedMatrix>& z_mats, std::size_t samples,
                                         std::uint64_t seed);

}  // namespace rza

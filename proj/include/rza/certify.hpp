#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rza/matrix.hpp"
#include "rza/polynomial.hpp"
#include "rza/sampling.hpp"
#include "rza/verdict.hpp"

namespace rza {

// ------------------------------------------------------------------ PSD tests

/// Exact PSD decision: M is PSD iff every coefficient of det(tI + M) is >= 0.
bool is_psd(const SymmetricMatrixQ& m);

/// A vector v with vᵀMv < 0, or nullopt when M is PSD. Found by exact
/// symmetric elimination (Schur complements), independent of is_psd.
std::optional<std::vector<Rational>> negative_direction(const MatrixQ& m);

// -------------------------------------------------------- quadratic real zero

/// p = xᵀAx + bᵀx + c for a polynomial of degree <= 2.
struct QuadraticForm {
  SymmetricMatrixQ a;
  std::vector<Rational> b;
  Rational c;
};

QuadraticForm quadratic_form(const Polynomial& p);
/// bbᵀ - 4A of the form normalized to constant term 1.
SymmetricMatrixQ discriminant_matrix(const QuadraticForm& q);

/// Exact decision for deg p <= 2: Certified iff bbᵀ - 4A is PSD (after p(0) = 1),
/// else Refuted with a direction on which the discriminant is negative.
Verdict quadratic_real_zero(const Polynomial& p);

// ------------------------------------------------------------- line sampling

/// Draws seeded directions a and checks p(ta) exactly. Refuted on the first
/// failing line (or at once if p(0) = 0), Probable otherwise.
Verdict real_zero_sample(const Polynomial& p, const SampleOptions& opts = {});

/// Draws seeded pairs (a > 0, b) and checks p(ta + b) exactly.
Verdict stable_sample(const Polynomial& p, const SampleOptions& opts = {});

/// Re-checks a refutation witness against p with exact arithmetic. A kLine
/// witness with an empty offset is read as the origin line p(ta).
bool witness_rechecks(const Polynomial& p, const Witness& w);

// --------------------------------------------------------- Rayleigh and SOS

/// (∂_i p)(∂_j p) - p·∂_i∂_j p for multi-affine p.
Polynomial rayleigh(const Polynomial& p, const std::string& i, const std::string& j);

struct SosTerm {
  Rational weight;
  Polynomial root;
};

/// target = Σ weight·root². `target` is optional in files; when present it is
/// the polynomial the certificate claims to represent.
struct SosCertificate {
  std::optional<Polynomial> target;
  std::vector<SosTerm> squares;
};

/// Σ weight·root² expanded.
Polynomial sos_sum(const SosCertificate& cert);
/// target - Σ weight·root²; zero iff the certificate verifies.
Polynomial sos_residual(const Polynomial& target, const SosCertificate& cert);
bool verify_sos(const Polynomial& target, const SosCertificate& cert);

/// Certified by a verifying certificate or when every term has even exponents
/// and a nonnegative coefficient; Refuted at a sampled point where p < 0;
/// Unknown otherwise.
Verdict global_nonneg(const Polynomial& p, const SosCertificate* cert, const SampleOptions& opts = {});

/// Recursive Wagner–Wei criterion on a multi-affine polynomial with nonnegative
/// coefficients. Only occurring variables are branched on. Subproblem ids are
/// paths: "root", "root/d:x1" (∂_{x1}), "root/0:x1" (x1 = 0), ...
/// `certs` maps subproblem ids to SOS certificates for that node's Rayleigh
/// obligation. children[0] of the result is the root's Rayleigh obligation.
/// With `cite_small_matroids`, a node that is the bases generating polynomial
/// of a matroid on at most 6 occurring elements is closed as Certified by the
/// known stability of such polynomials instead of being expanded.
Verdict wagner_wei_stable(const Polynomial& p, const std::map<std::string, SosCertificate>& certs,
                          const SampleOptions& opts = {}, bool cite_small_matroids = true);

/// True iff p is a bases generating polynomial (coefficients all 1,
/// homogeneous, support satisfies basis exchange) over its occurring variables.
bool is_bases_generating(const Polynomial& p);

// --------------------------------------------------------- rigid convexity

/// a ∈ C(p): p(ta) has no root in the open interval (0, 1). Requires p(0) != 0.
bool rigidly_convex_contains(const Polynomial& p, std::span<const Rational> a);

/// Sufficient test for R^n_{>=0} ⊆ C(p): all coefficients nonnegative.
/// false means "not decided". Requires p(0) > 0.
bool orthant_in_rigid_set(const Polynomial& p);

// ------------------------------------------------------------ determinants

using NamedMatrix = std::pair<std::string, SymmetricMatrixQ>;

/// det(I + Σ v·M_v) expanded exactly over the variables named in `mats`.
/// An empty list gives the constant 1.
Polynomial det_polynomial(const std::vector<NamedMatrix>& mats);
/// Same polynomial by cofactor expansion (d <= 6); an independent route for checks.
Polynomial det_polynomial_cofactor(const std::vector<NamedMatrix>& mats);

}  // namespace rza

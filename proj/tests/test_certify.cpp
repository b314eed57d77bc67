#include <doctest.h>

#include "rza/certify.hpp"
#include "rza/error.hpp"
#include "rza/matroid.hpp"
#include "rza/realroot.hpp"
#include "rza/report.hpp"
#include "support.hpp"

using namespace rza;

namespace {

SymmetricMatrixQ sym(const std::vector<std::vector<Rational>>& rows) { return SymmetricMatrixQ(MatrixQ::from_rows(rows)); }

std::vector<Rational> ones_then_zero() { return {1, 1, 1, 1, 1, 1, 0}; }

}  // namespace

TEST_CASE("exact PSD") {
  CHECK(is_psd(sym({{1, -1}, {-1, 1}})));
  CHECK_FALSE(is_psd(sym({{0, 2}, {2, 0}})));
  CHECK(is_psd(SymmetricMatrixQ::diagonal({4, 4, 4})));
  CHECK(is_psd(SymmetricMatrixQ::zero(3)));
  CHECK_FALSE(is_psd(sym({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})));
  CHECK_THROWS_AS(SymmetricMatrixQ(MatrixQ::from_rows({{1, 2}, {3, 4}})), InputError);
}

TEST_CASE("negative direction is a certificate") {
  const MatrixQ m = MatrixQ::from_rows({{0, 2}, {2, 0}});
  const auto v = negative_direction(m);
  REQUIRE(v.has_value());
  Rational q = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) q += (*v)[i] * m(i, j) * (*v)[j];
  CHECK(q < 0);
  CHECK_FALSE(negative_direction(MatrixQ::from_rows({{1, -1}, {-1, 1}})).has_value());
}

TEST_CASE("property: PSD decision agrees with Schur elimination") {
  std::mt19937_64 rng(31);
  int psd = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t d = 1 + k % 5;
    const SymmetricMatrixQ m = k % 2 ? rza::testing::random_gram(rng, d, 1 + k % d) : rza::testing::random_symmetric(rng, d);
    const bool p = is_psd(m);
    psd += p;
    CHECK(p == !negative_direction(m.matrix()).has_value());
  }
  CHECK(psd > 100);
}

TEST_CASE("quadratic real zero") {
  CHECK(quadratic_real_zero(parse("1 - x1^2 - x2^2")).status == Status::kCertified);
  CHECK(quadratic_real_zero(parse("1 + x")).status == Status::kCertified);
  const Verdict v = quadratic_real_zero(parse("x1*x2 - 1"));
  CHECK(v.status == Status::kRefuted);
  REQUIRE(v.witness.has_value());
  CHECK(witness_rechecks(parse("x1*x2 - 1"), *v.witness));
  CHECK_THROWS_AS(quadratic_real_zero(parse("1 + x^3")), PreconditionError);
  CHECK_THROWS_AS(quadratic_real_zero(parse("x + y")), PreconditionError);
}

TEST_CASE("real zero sampling") {
  const Verdict v = real_zero_sample(parse("1 + x1^2"));
  CHECK(v.status == Status::kRefuted);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == Witness::Kind::kLine);
  CHECK(witness_rechecks(parse("1 + x1^2"), *v.witness));

  const std::vector<NamedMatrix> mats{{"x1", sym({{1, 2, 0}, {2, -1, 1}, {0, 1, 3}})},
                                      {"x2", sym({{0, 1, 1}, {1, 2, 0}, {1, 0, -2}})}};
  CHECK(real_zero_sample(det_polynomial(mats), {200, 7}).status == Status::kProbable);

  const Polynomial p = bases_generating_poly(poljak_turzik(PoljakTurzik::kM1));
  const auto a = ones_then_zero();
  CHECK(real_zero_sample(shift(p, a), {100, 42}).status == Status::kProbable);

  const Verdict origin = real_zero_sample(parse("x + y"));
  CHECK(origin.status == Status::kRefuted);
  CHECK(origin.witness->kind == Witness::Kind::kOrigin);
}

TEST_CASE("stable sampling") {
  CHECK(stable_sample(parse("x1*x2 - 1")).status == Status::kProbable);
  const Verdict v = stable_sample(parse("1 - x1^2 - x2^2"));
  CHECK(v.status == Status::kRefuted);
  CHECK(witness_rechecks(parse("1 - x1^2 - x2^2"), *v.witness));
  const Verdict w = stable_sample(parse("x1*x2 + x3*x4"));
  CHECK(w.status == Status::kRefuted);
  CHECK(witness_rechecks(parse("x1*x2 + x3*x4"), *w.witness));

  // hand-checked line: p(t+1, t+1, t-1, t-1) = 2t^2 + 2
  Witness hand{Witness::Kind::kLine, {1, 1, 1, 1}, {1, 1, -1, -1}};
  CHECK(witness_rechecks(parse("x1*x2 + x3*x4"), hand));
  Witness real_rooted{Witness::Kind::kLine, {1, 1, 1, 1}, {1, -1, 1, -1}};
  CHECK_FALSE(witness_rechecks(parse("x1*x2 + x3*x4"), real_rooted));
}

TEST_CASE("Rayleigh polynomials") {
  CHECK(rayleigh(parse("1 + x1 + x2 + x1*x2"), "x1", "x2").is_zero());
  CHECK(rayleigh(parse("x1*x2 + x1*x3 + x2*x3"), "x1", "x2") == parse("x3^2"));
  const Polynomial p = bases_generating_poly(poljak_turzik(PoljakTurzik::kM1));
  const SosCertificate c = pt_rayleigh_certificate(PoljakTurzik::kM1);
  REQUIRE(c.target.has_value());
  CHECK(rayleigh(p, "x1", "x2") == *c.target);
}

TEST_CASE("SOS verification") {
  SosCertificate sq{std::nullopt, {{1, parse("x")}}};
  CHECK(verify_sos(parse("x^2"), sq));
  CHECK_FALSE(verify_sos(parse("x^2 + 1"), sq));
  CHECK(sos_residual(parse("x^2 + 1"), sq) == parse("1"));
  for (const auto which : {PoljakTurzik::kM1, PoljakTurzik::kM2}) {
    const SosCertificate c = pt_rayleigh_certificate(which);
    const Polynomial p = bases_generating_poly(poljak_turzik(which));
    CHECK(verify_sos(rayleigh(p, "x1", "x2"), c));
  }
  SosCertificate bad{std::nullopt, {{-1, parse("x")}}};
  CHECK_FALSE(verify_sos(parse("-x^2"), bad));
}

TEST_CASE("global nonnegativity") {
  CHECK(global_nonneg(parse("x3^2"), nullptr).status == Status::kCertified);
  const Verdict v = global_nonneg(parse("x2*x4"), nullptr);
  CHECK(v.status == Status::kRefuted);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->kind == Witness::Kind::kPoint);
  CHECK(witness_rechecks(parse("x2*x4"), *v.witness));
  const Polynomial p = bases_generating_poly(poljak_turzik(PoljakTurzik::kM1));
  const SosCertificate c = pt_rayleigh_certificate(PoljakTurzik::kM1);
  CHECK(global_nonneg(rayleigh(p, "x1", "x2"), &c).status == Status::kCertified);
  CHECK(global_nonneg(parse("x^2 - 2*x*y + y^2"), nullptr).status == Status::kUnknown);
}

TEST_CASE("Wagner-Wei recursion") {
  const Polynomial e2 = parse("x1*x2 + x1*x3 + x2*x3");
  CHECK(wagner_wei_stable(e2, {}).status == Status::kCertified);
  CHECK(wagner_wei_stable(e2, {}, {}, false).status == Status::kCertified);
  const Verdict bad = wagner_wei_stable(parse("x1*x2 + x3*x4"), {});
  CHECK(bad.status == Status::kRefuted);

  const Polynomial p = bases_generating_poly(poljak_turzik(PoljakTurzik::kM1));
  const Verdict v = wagner_wei_stable(p, {{"root", pt_rayleigh_certificate(PoljakTurzik::kM1)}});
  REQUIRE(!v.children.empty());
  CHECK(v.children.front().status == Status::kCertified);
  CHECK(v.status >= Status::kProbable);
  CHECK_THROWS_AS(wagner_wei_stable(parse("x^2"), {}), PreconditionError);
  CHECK_THROWS_AS(wagner_wei_stable(parse("x - y"), {}), PreconditionError);
}

TEST_CASE("bases generating detection") {
  CHECK(is_bases_generating(parse("x1*x2 + x1*x3 + x2*x3")));
  CHECK_FALSE(is_bases_generating(parse("x1*x2 + x3*x4")));
  CHECK_FALSE(is_bases_generating(parse("2*x1*x2")));
  CHECK_FALSE(is_bases_generating(parse("x1 + x1*x2")));
}

TEST_CASE("rigid convexity") {
  const Polynomial p = parse("1 - x^2");
  CHECK(rigidly_convex_contains(p, std::vector<Rational>{Rational(1, 2)}));
  CHECK_FALSE(rigidly_convex_contains(p, std::vector<Rational>{3}));
  CHECK(rigidly_convex_contains(p, std::vector<Rational>{1}));
  const Polynomial m1 = bases_generating_poly(poljak_turzik(PoljakTurzik::kM1));
  const auto a = ones_then_zero();
  CHECK(orthant_in_rigid_set(shift(m1, a)));
  CHECK_FALSE(orthant_in_rigid_set(parse("1 - x")));
  CHECK(orthant_in_rigid_set(parse("1")));
  CHECK_THROWS_AS(orthant_in_rigid_set(parse("x")), PreconditionError);
}

TEST_CASE("determinant polynomials") {
  CHECK(det_polynomial({{"x", SymmetricMatrixQ::diagonal({1, 2})}}) == parse("1 + 3*x + 2*x^2"));
  CHECK(det_polynomial({}) == parse("1"));
  const std::vector<NamedMatrix> mats{{"x", SymmetricMatrixQ::diagonal({1, 2})}, {"y", sym({{0, 1}, {1, 0}})}};
  // (1 + x)(1 + 2x) - y^2
  CHECK(det_polynomial(mats) == parse("1 + 3*x + 2*x^2 - y^2"));
  CHECK(det_polynomial(mats) == det_polynomial_cofactor(mats));
}

TEST_CASE("property: determinant polynomial routes agree") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 40; ++k) {
    const std::size_t d = 1 + k % 4;
    std::vector<NamedMatrix> mats{{"u", rza::testing::random_symmetric(rng, d)},
                                  {"v", rza::testing::random_symmetric(rng, d)},
                                  {"w", rza::testing::random_symmetric(rng, d)}};
    const Polynomial p = det_polynomial(mats);
    CHECK(p == det_polynomial_cofactor(mats));
    const std::vector<Rational> pt = rza::testing::small_vector(rng, 3);
    MatrixQ m = identity_matrix(d);
    for (std::size_t i = 0; i < 3; ++i) m = m + scaled(mats[i].second.matrix(), pt[i]);
    CHECK(evaluate(p, pt) == rza::testing::leibniz_determinant(m));
  }
}

TEST_CASE("property: quadratic decision agrees with sampling") {
  std::mt19937_64 rng(51);
  const VariableSet vars{"a", "b", "c"};
  int certified = 0;
  for (int k = 0; k < 500; ++k) {
    Polynomial p = Polynomial::constant(1, vars);
    if (k % 2) {
      // PSD discriminant by construction: 1 + bᵀx + xᵀAx with A = (bbᵀ - G Gᵀ)/4
      const auto b = rza::testing::small_vector(rng, 3);
      const SymmetricMatrixQ g = rza::testing::random_gram(rng, 3, 1 + k % 3);
      for (std::size_t i = 0; i < 3; ++i) {
        Monomial m(3, 0);
        m[i] = 1;
        p.add_term(m, b[i]);
        for (std::size_t j = i; j < 3; ++j) {
          Monomial mm(3, 0);
          mm[i] += 1;
          mm[j] += 1;
          Rational a = (b[i] * b[j] - g(i, j)) / 4;
          p.add_term(mm, i == j ? a : 2 * a);
        }
      }
    } else {
      const Polynomial r = rza::testing::random_polynomial(rng, vars, 6, 2);
      p = p + r - Polynomial::constant(r.constant_term(), vars);
    }
    const Verdict exact = quadratic_real_zero(p);
    const Verdict sampled = real_zero_sample(p, {500, static_cast<std::uint64_t>(k)});
    if (exact.status == Status::kCertified) {
      ++certified;
      CHECK(sampled.status != Status::kRefuted);
    } else {
      REQUIRE(exact.witness.has_value());
      CHECK_FALSE(is_real_rooted(restrict_line(p, exact.witness->direction)));
    }
    if (sampled.status == Status::kRefuted) CHECK(witness_rechecks(p, *sampled.witness));
  }
  CHECK(certified >= 250);
}

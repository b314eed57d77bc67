#include <doctest.h>

#include "rza/certify.hpp"
#include "rza/matroid.hpp"
#include "rza/report.hpp"
#include "support.hpp"

using namespace rza;

namespace {

using Labels = std::vector<std::string>;

/// Rank by brute force over the bases, without the library's rank().
int brute_rank(const Matroid& m, Subset a) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, popcount(a & b));
  return best;
}

/// Closed sets by brute force: F is a flat iff adding any element raises the rank.
std::vector<Subset> brute_flats(const Matroid& m) {
  std::vector<Subset> out;
  const Subset full = m.ground().full();
  for (Subset f = 0; f <= full; ++f) {
    bool closed = true;
    for (std::size_t e = 0; e < m.ground().size() && closed; ++e) {
      if (f >> e & 1u) continue;
      if (brute_rank(m, f | (Subset{1} << e)) == brute_rank(m, f)) closed = false;
    }
    if (closed) out.push_back(f);
  }
  return out;
}

/// Matroid of a random rational matrix's columns (rank = max independent columns).
Matroid random_linear_matroid(std::mt19937_64& rng, std::size_t rows, std::size_t n) {
  const MatrixQ a = rza::testing::random_matrix(rng, rows, n, 2, 1);
  Labels ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back("e" + std::to_string(i));
  std::vector<Subset> bases;
  int best = -1;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const int k = popcount(s);
    if (k > static_cast<int>(rows)) continue;
    MatrixQ sub(rows, k);
    int c = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (s >> j & 1u) {
        for (std::size_t i = 0; i < rows; ++i) sub(i, c) = a(i, j);
        ++c;
      }
    // columns independent iff the Gram determinant is nonzero
    const bool indep = k == 0 || determinant(sub.transposed() * sub) != 0;
    if (!indep) continue;
    if (k > best) {
      best = k;
      bases.clear();
    }
    if (k == best) bases.push_back(s);
  }
  return Matroid::from_bases(GroundSet(ground), bases);
}

}  // namespace

TEST_CASE("construction and validation") {
  const Matroid u23 = Matroid::from_bases(Labels{"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK(u23 == Matroid::uniform(2, {"a", "b", "c"}));
  try {
    Matroid::from_bases(Labels{"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    FAIL("expected an exchange failure");
  } catch (const MatroidAxiomError& e) {
    REQUIRE(e.exchange().has_value());
    CHECK(e.exchange()->b == 0b0011);
    CHECK(e.exchange()->x == 0);
  }
  CHECK_THROWS_AS(Matroid::from_bases(Labels{"a", "b"}, {{"a"}, {"a", "b"}}), MatroidAxiomError);
  CHECK_THROWS_AS(Matroid::from_bases(Labels{"a"}, {}), MatroidAxiomError);
  CHECK_THROWS_AS(GroundSet(Labels{"a", "a"}), InputError);
}

TEST_CASE("Poljak-Turzik pair") {
  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  const Matroid m2 = poljak_turzik(PoljakTurzik::kM2);
  CHECK(m1.bases().size() == 30);
  CHECK(m2.bases().size() == 31);
  const Labels xs{"x1", "x2", "x3", "x4", "x5", "x6"};
  CHECK(restriction(m1, xs) == restriction(m2, xs));
  const Matroid r = restriction(m1, xs);
  CHECK(r.bases().size() == 18);
  CHECK_FALSE(r.is_basis(r.ground().subset({"x1", "x2", "x3"})));
  CHECK_FALSE(r.is_basis(r.ground().subset({"x4", "x5", "x6"})));
  const GroundSet& g = m1.ground();
  CHECK((m1.closure(g.subset({"x1", "x4"})) & g.subset({"y"})) != 0);
  CHECK(m1.rank(g.subset({"y", "x3", "x6"})) == 2);
  CHECK(m1.rank(0) == 0);
  CHECK(m1.loops() == 0);
  CHECK(m1.coloops() == 0);
  CHECK(m2.loops() == 0);
  CHECK(m2.coloops() == 0);
  CHECK(bases_generating_poly(m1) == pt_formula(PoljakTurzik::kM1));
  CHECK(bases_generating_poly(m2) == pt_formula(PoljakTurzik::kM2));
}

TEST_CASE("minors") {
  const Matroid u23 = Matroid::uniform(2, {"a", "b", "c"});
  CHECK(contraction(u23, Labels{"a"}) == Matroid::uniform(1, {"b", "c"}));
  CHECK(restriction(u23, Labels{"a", "b"}) == Matroid::uniform(2, {"a", "b"}));
  CHECK(bases_generating_poly(Matroid::uniform(3, {"x1", "x2", "x3", "x4"})) ==
        elementary_symmetric(VariableSet{"x1", "x2", "x3", "x4"}, 3));
}

TEST_CASE("modularity") {
  CHECK(is_modular(Matroid::uniform(2, {"a", "b", "c"})));
  for (int r = 0; r <= 2; ++r) CHECK(is_modular(Matroid::uniform(r, {"a", "b"})));
  CHECK(is_modular(Matroid::from_bases(Labels{"a", "b"}, {{"a"}})));
  CHECK(is_modular(Matroid::from_bases(Labels{"a", "b"}, {{"a"}, {"b"}})));

  // flat-pair oracle
  for (const auto which : {PoljakTurzik::kM1, PoljakTurzik::kM2}) {
    const Matroid m = poljak_turzik(which);
    const auto flats = brute_flats(m);
    bool modular = true;
    for (Subset f : flats)
      for (Subset h : flats)
        if (brute_rank(m, f & h) + brute_rank(m, f | h) != brute_rank(m, f) + brute_rank(m, h)) modular = false;
    CHECK(is_modular(m) == modular);
    CHECK(m.flats() == flats);
  }
  // U(2,4) is modular; U(3,5) is not ({a,b} and {c,d} meet in rank 0, span 3)
  CHECK(is_modular(Matroid::uniform(2, {"a", "b", "c", "d"})));
  CHECK_FALSE(is_modular(Matroid::uniform(3, {"a", "b", "c", "d", "e"})));
}

TEST_CASE("support matroids") {
  CHECK(support_matroid(bases_generating_poly(poljak_turzik(PoljakTurzik::kM1))) == poljak_turzik(PoljakTurzik::kM1));
  CHECK(support_matroid(elementary_symmetric(VariableSet{"a", "b", "c", "d"}, 3)) ==
        Matroid::uniform(3, {"a", "b", "c", "d"}));
  CHECK_THROWS_AS(support_matroid(parse("x1*x2 + x3*x4")), MatroidAxiomError);
}

TEST_CASE("property: rank axioms on constructed matroids") {
  std::mt19937_64 rng(61);
  std::vector<Matroid> ms{poljak_turzik(PoljakTurzik::kM1), poljak_turzik(PoljakTurzik::kM2)};
  for (int k = 0; k < 30; ++k) ms.push_back(random_linear_matroid(rng, 1 + k % 4, 4 + k % 4));
  for (const auto& m : ms) {
    const Subset full = m.ground().full();
    CHECK(rank_table(m).satisfies_axioms());
    for (Subset a = 0; a <= full; ++a) {
      const int r = m.rank(a);
      CHECK(r == brute_rank(m, a));
      CHECK(r <= popcount(a));
      CHECK(m.rank(m.closure(a)) == r);
      CHECK((m.closure(a) & a) == a);
      for (std::size_t e = 0; e < m.ground().size(); ++e) {
        const Subset b = a | (Subset{1} << e);
        CHECK(m.rank(b) >= r);
        CHECK(m.rank(b) <= r + 1);
        CHECK((m.closure(b) & m.closure(a)) == m.closure(a));
      }
    }
  }
}

TEST_CASE("amalgam search") {
  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  const Matroid m2 = poljak_turzik(PoljakTurzik::kM2);
  const AmalgamResult r = amalgam_search(m1, m2);
  CHECK(r.kind == AmalgamResult::Kind::kInfeasible);
  CHECK_FALSE(r.amalgam.has_value());

  const Matroid u23 = Matroid::uniform(2, {"a", "b", "c"});
  const AmalgamResult same = amalgam_search(u23, u23);
  REQUIRE(same.amalgam.has_value());
  CHECK(*same.amalgam == u23);

  const AmalgamResult free = amalgam_search(Matroid::uniform(2, {"a", "b"}), Matroid::uniform(2, {"b", "c"}));
  REQUIRE(free.amalgam.has_value());
  CHECK(restriction(*free.amalgam, Labels{"a", "b"}) == Matroid::uniform(2, {"a", "b"}));
  CHECK(restriction(*free.amalgam, Labels{"b", "c"}) == Matroid::uniform(2, {"b", "c"}));

  const AmalgamResult clash = amalgam_search(Matroid::uniform(1, {"a", "b"}), Matroid::uniform(2, {"a", "b", "c"}));
  CHECK(clash.kind == AmalgamResult::Kind::kIncompatibleRestrictions);

  Labels big;
  for (int i = 0; i < 11; ++i) big.push_back("g" + std::to_string(i));
  CHECK_THROWS_AS(amalgam_search(Matroid::uniform(1, big), Matroid::uniform(1, big)), GuardError);
}

TEST_CASE("property: amalgam of a matroid with itself and restriction re-checks") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 20; ++k) {
    const Matroid m = random_linear_matroid(rng, 1 + k % 3, 3 + k % 4);
    const AmalgamResult r = amalgam_search(m, m);
    REQUIRE(r.amalgam.has_value());
    CHECK(*r.amalgam == m);
  }
  for (int k = 0; k < 20; ++k) {
    // two restrictions of one linear matroid always amalgamate
    const Matroid big = random_linear_matroid(rng, 2 + k % 2, 6);
    const Labels l1{"e0", "e1", "e2", "e3"}, l2{"e2", "e3", "e4", "e5"};
    const Matroid a = restriction(big, l1), b = restriction(big, l2);
    const AmalgamResult r = amalgam_search(a, b);
    REQUIRE(r.amalgam.has_value());
    CHECK(restriction(*r.amalgam, l1) == a);
    CHECK(restriction(*r.amalgam, l2) == b);
  }
}

TEST_CASE("delta-matroids") {
  CHECK(is_delta_matroid(DeltaMatroid::from_sets({"a", "b"}, {{}, {"a"}, {"a", "b"}})).ok);
  CHECK(is_delta_matroid(DeltaMatroid::from_sets({"a", "b"}, {{"b"}})).ok);
  const DeltaMatroid all = DeltaMatroid::from_sets({"a", "b"}, {{}, {"a", "b"}, {"a"}, {"b"}});
  CHECK(is_delta_matroid(all).ok);
  const DeltaMatroid bad2 = DeltaMatroid::from_sets({"a", "b", "c"}, {{}, {"a", "b", "c"}});
  const DeltaCheck c = is_delta_matroid(bad2);
  CHECK_FALSE(c.ok);
  REQUIRE(c.witness.has_value());
  CHECK_FALSE(c.witness->satisfied());
  CHECK(c.failing_triples == exchange_failures(bad2).size());
  CHECK_THROWS_AS(DeltaMatroid::from_sets({"a"}, {}), InputError);
}

TEST_CASE("lower and upper matroids") {
  const DeltaMatroid d = DeltaMatroid::from_sets({"a", "b"}, {{}, {"a"}, {"a", "b"}});
  CHECK(lower_matroid(d).rank() == 0);
  CHECK(upper_matroid(d) == Matroid::uniform(2, {"a", "b"}));
  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  const DeltaMatroid bases(m1.ground(), m1.bases());
  CHECK(lower_matroid(bases) == m1);
  CHECK(upper_matroid(bases) == m1);
  const DeltaMatroid mixed = DeltaMatroid::from_sets({"a", "b", "c"}, {{"a"}, {"b"}, {"a", "c"}, {"b", "c"}});
  CHECK(is_delta_matroid(mixed).ok);
  CHECK(lower_matroid(mixed) == Matroid::from_bases(Labels{"a", "b", "c"}, {{"a"}, {"b"}}));
  CHECK(upper_matroid(mixed) == Matroid::from_bases(Labels{"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
}

TEST_CASE("property: lower/upper of supports of stable products are matroids") {
  // products of multi-affine stable blocks with disjoint variables: 1 + c·v,
  // c·u + d·v, and e2 of three variables
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> pick(0, 2), coef(1, 5);
  for (int k = 0; k < 40; ++k) {
    Polynomial p = Polynomial::constant(1);
    int next = 0;
    auto fresh = [&] { return "v" + std::to_string(next++); };
    const int blocks = 1 + k % 3;
    for (int b = 0; b < blocks; ++b) {
      const int kind = pick(rng);
      if (kind == 0) {
        p = p * parse("1 + " + std::to_string(coef(rng)) + "*" + fresh());
      } else if (kind == 1) {
        const std::string u = fresh(), v = fresh();
        p = p * parse(std::to_string(coef(rng)) + "*" + u + " + " + std::to_string(coef(rng)) + "*" + v);
      } else {
        const std::string u = fresh(), v = fresh(), w = fresh();
        p = p * parse(u + "*" + v + " + " + u + "*" + w + " + " + v + "*" + w);
      }
    }
    const DeltaMatroid d = support_family(p);
    CHECK(is_delta_matroid(d).ok);
    CHECK_NOTHROW(lower_matroid(d));
    CHECK_NOTHROW(upper_matroid(d));
  }
}

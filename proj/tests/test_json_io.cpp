#include <doctest.h>

#include <fstream>

#include "rza/error.hpp"
#include "rza/json_io.hpp"
#include "support.hpp"

using namespace rza;

TEST_CASE("polynomial JSON round trip") {
  std::mt19937_64 rng(7);
  const VariableSet vars{"x1", "x2", "y"};
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = rza::testing::random_polynomial(rng, vars, 5, 3);
    const Json j = polynomial_to_json(p);
    CHECK(polynomial_from_json(j) == p);
    CHECK(polynomial_from_json(Json::parse(j.dump())) == p);
    CHECK(polynomial_from_json(j["text"]) == p);
  }
  CHECK(polynomial_from_json(Json(3)) == parse("3"));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"vars":["x"],"terms":[{"c":"1","e":[1,2]}]})")), InputError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"terms":[]})")), InputError);
}

TEST_CASE("rationals and matrices") {
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
  CHECK(rational_from_json(Json(4)) == 4);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
  const MatrixQ m = matrix_from_json(Json::parse(R"([["1/2", 0], [0, "-1"]])"));
  CHECK(matrix_to_json(m).dump() == R"([["1/2","0"],["0","-1"]])");
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), InputError);
  const auto named = named_matrices_from_json(Json::parse(R"({"b": [[1]], "a": [[2]]})"));
  REQUIRE(named.size() == 2);
  CHECK(named[0].first == "b");
  CHECK_THROWS_AS(named_matrices_from_json(Json::parse(R"({"a": [[1, 2], [3, 4]]})")), InputError);
}

TEST_CASE("matroid and delta JSON") {
  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  CHECK(matroid_from_json(matroid_to_json(m1)) == m1);
  const DeltaMatroid d = DeltaMatroid::from_sets({"a", "b"}, {{}, {"a"}});
  const DeltaMatroid back = delta_from_json(delta_to_json(d));
  CHECK(back.feasible() == d.feasible());
  CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"ground": ["a"]})")), InputError);
}

TEST_CASE("SOS certificates and shipped data") {
  for (const auto& [which, file] : {std::pair{PoljakTurzik::kM1, "pt_m1_rayleigh_sos.json"},
                                    std::pair{PoljakTurzik::kM2, "pt_m2_rayleigh_sos.json"}}) {
    std::ifstream in(std::string(RZA_DATA_DIR) + "/" + file);
    REQUIRE(in.good());
    const SosCertificate c = sos_from_json(Json::parse(in));
    REQUIRE(c.target.has_value());
    CHECK(verify_sos(*c.target, c));
    const SosCertificate builtin = pt_rayleigh_certificate(which);
    CHECK(*c.target == *builtin.target);
    CHECK(sos_sum(c) == sos_sum(builtin));
    const SosCertificate round = sos_from_json(sos_to_json(c));
    CHECK(sos_sum(round) == sos_sum(c));
  }
  for (const auto& [which, file] : {std::pair{PoljakTurzik::kM1, "pt_m1.json"}, std::pair{PoljakTurzik::kM2, "pt_m2.json"}}) {
    std::ifstream in(std::string(RZA_DATA_DIR) + "/" + file);
    REQUIRE(in.good());
    CHECK(matroid_from_json(Json::parse(in)) == poljak_turzik(which));
  }
}

TEST_CASE("problem JSON") {
  const AmalgamationProblem prob =
      problem_from_json(Json::parse(R"({"x":["x"],"y":["y"],"z":["z"],"p":"1+x+y","q":"1+x+z"})"));
  CHECK(prob.p == parse("1 + x + y"));
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"y":["y"],"z":["z"],"p":"1+w","q":"1+z"})")), InputError);
}

TEST_CASE("verdict and report JSON") {
  const Verdict v = Verdict::refuted("no", Witness{Witness::Kind::kLine, {1, 2}});
  const Json j = verdict_to_json(v);
  CHECK(j["status"] == "Refuted");
  CHECK(j["witness"]["direction"][1] == "2");
  ScenarioReport r{"demo", {{"one", StepStatus::kPass, {"ok"}, std::nullopt}}, 5, 9};
  const Json rj = report_to_json(r);
  CHECK(rj["overall"] == "pass");
  CHECK(rj["steps"][0]["name"] == "one");
}

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rza/amalgamation.hpp"
#include "rza/certify.hpp"
#include "rza/matroid.hpp"
#include "rza/report.hpp"

namespace rza {

using Json = nlohmann::ordered_json;

/// Rational from a JSON integer or a string "n" / "n/d".
Rational rational_from_json(const Json& j);
/// Exact rationals are emitted as strings.
Json rational_to_json(const Rational& r);

/// Polynomial from text ("1 - x1^2") or {"vars": [...], "terms": [{"c": "1/2", "e": [1, 0]}]}.
/// With `vars`, text input is parsed over that set.
Polynomial polynomial_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, const VariableSet& vars);
/// {"vars", "terms", "text"}.
Json polynomial_to_json(const Polynomial& p);

/// {"target": <poly>?, "squares": [{"w": "3/4", "q": <poly>}, ...]}.
SosCertificate sos_from_json(const Json& j);
Json sos_to_json(const SosCertificate& c);

/// Row-major array of rationals.
MatrixQ matrix_from_json(const Json& j);
Json matrix_to_json(const MatrixQ& m);
/// {"name": [[...]], ...} in insertion order, or [["name", [[...]]], ...].
std::vector<NamedMatrix> named_matrices_from_json(const Json& j);

/// {"ground": [...], "bases": [[...], ...]}.
Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);
/// {"ground": [...], "feasible": [[...], ...]}.
DeltaMatroid delta_from_json(const Json& j);
Json delta_to_json(const DeltaMatroid& d);
Json exchange_check_to_json(const ExchangeCheck& c, const GroundSet& g);

/// {"x": [...], "y": [...], "z": [...], "p": <poly>, "q": <poly>}.
AmalgamationProblem problem_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Json verdict_to_json(const Verdict& v);
Json report_to_json(const ScenarioReport& r);

}  // namespace rza

#include "rza/json_io.hpp"

#include "rza/error.hpp"

namespace rza {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> string_sets(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& e : j) out.push_back(strings(e, what));
  return out;
}

Json sets_to_json(const GroundSet& g, const std::vector<Subset>& family) {
  Json arr = Json::array();
  for (Subset s : family) arr.push_back(g.names(s));
  return arr;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a rational string, got " + j.dump());
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  if (j.is_number_integer()) return Polynomial::constant(j.get<long>());
  const VariableSet vars(strings(field(j, "vars"), "vars"));
  return polynomial_from_json(j, vars);
}

Polynomial polynomial_from_json(const Json& j, const VariableSet& vars) {
  if (j.is_string()) return parse(j.get<std::string>(), vars);
  if (j.is_number_integer()) return Polynomial::constant(j.get<long>(), vars);
  const VariableSet own = j.contains("vars") ? VariableSet(strings(j.at("vars"), "vars")) : vars;
  Polynomial p(own);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("terms must be an array");
  for (const auto& t : terms) {
    const Json& e = field(t, "e");
    if (!e.is_array() || e.size() != own.size()) throw InputError("exponent vector length must match vars");
    Monomial m;
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) throw InputError("exponents must be nonnegative integers");
      m.push_back(x.get<Exponent>());
    }
    p.add_term(m, rational_from_json(field(t, "c")));
  }
  return own == vars ? p : p.over(own.united(vars));
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"c", rational_to_json(c)}, {"e", m}});
  return {{"vars", p.vars().names()}, {"terms", terms}, {"text", format(p)}};
}

SosCertificate sos_from_json(const Json& j) {
  SosCertificate c;
  if (j.contains("target") && !j.at("target").is_null()) c.target = polynomial_from_json(j.at("target"));
  const Json& squares = field(j, "squares");
  if (!squares.is_array()) throw InputError("squares must be an array");
  for (const auto& s : squares) c.squares.push_back({rational_from_json(field(s, "w")), polynomial_from_json(field(s, "q"))});
  return c;
}

Json sos_to_json(const SosCertificate& c) {
  Json out = Json::object();
  if (c.target) out["target"] = format(*c.target);
  Json squares = Json::array();
  for (const auto& s : c.squares) squares.push_back({{"w", rational_to_json(s.weight)}, {"q", format(s.root)}});
  out["squares"] = squares;
  return out;
}

MatrixQ matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(rational_from_json(e));
    rows.push_back(std::move(row));
  }
  return MatrixQ::from_rows(rows);
}

Json matrix_to_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

std::vector<NamedMatrix> named_matrices_from_json(const Json& j) {
  std::vector<NamedMatrix> out;
  if (j.is_null()) return out;
  if (j.is_object()) {
    for (const auto& [name, m] : j.items()) out.emplace_back(name, SymmetricMatrixQ(matrix_from_json(m)));
    return out;
  }
  if (!j.is_array()) throw InputError("matrix list must be an object or an array of [name, matrix] pairs");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string()) throw InputError("expected [name, matrix]");
    out.emplace_back(e[0].get<std::string>(), SymmetricMatrixQ(matrix_from_json(e[1])));
  }
  return out;
}

Matroid matroid_from_json(const Json& j) {
  return Matroid::from_bases(strings(field(j, "ground"), "ground"), string_sets(field(j, "bases"), "bases"));
}

Json matroid_to_json(const Matroid& m) {
  return {{"ground", m.ground().labels()}, {"rank", m.rank()}, {"bases", sets_to_json(m.ground(), m.bases())}};
}

DeltaMatroid delta_from_json(const Json& j) {
  return DeltaMatroid::from_sets(strings(field(j, "ground"), "ground"), string_sets(field(j, "feasible"), "feasible"));
}

Json delta_to_json(const DeltaMatroid& d) {
  return {{"ground", d.ground().labels()}, {"feasible", sets_to_json(d.ground(), d.feasible())}};
}

Json exchange_check_to_json(const ExchangeCheck& c, const GroundSet& g) {
  Json cands = Json::array();
  for (const auto& e : c.candidates) cands.push_back({{"y", g[e.y]}, {"set", g.names(e.set)}, {"feasible", e.feasible}});
  return {{"A", g.names(c.a)}, {"B", g.names(c.b)}, {"x", g[c.x]}, {"candidates", cands}};
}

AmalgamationProblem problem_from_json(const Json& j) {
  AmalgamationProblem prob;
  prob.x = j.contains("x") ? VariableSet(strings(j.at("x"), "x")) : VariableSet();
  prob.y = VariableSet(strings(field(j, "y"), "y"));
  prob.z = VariableSet(strings(field(j, "z"), "z"));
  prob.p = polynomial_from_json(field(j, "p"), prob.x.united(prob.y));
  prob.q = polynomial_from_json(field(j, "q"), prob.x.united(prob.z));
  validate_problem(prob);
  return prob;
}

Json witness_to_json(const Witness& w) {
  Json out{{"kind", to_string(w.kind)}};
  auto vec = [](const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
  };
  if (!w.direction.empty()) out["direction"] = vec(w.direction);
  if (!w.offset.empty()) out["offset"] = vec(w.offset);
  if (!w.point.empty()) out["point"] = vec(w.point);
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"status", to_string(v.status)}, {"label", v.label}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness);
  if (v.samples_used > 0) out["samples_used"] = v.samples_used;
  if (v.seed) out["seed"] = *v.seed;
  if (!v.notes.empty()) out["notes"] = v.notes;
  if (!v.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : v.children) kids.push_back(verdict_to_json(c));
    out["children"] = kids;
  }
  return out;
}

Json report_to_json(const ScenarioReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step{{"name", s.name}, {"status", to_string(s.status)}, {"details", s.details}};
    if (s.witness) step["witness"] = *s.witness;
    steps.push_back(step);
  }
  return {{"title", r.title}, {"overall", to_string(r.overall())}, {"samples", r.samples}, {"seed", r.seed},
          {"steps", steps}};
}

}  // namespace rza

// Command-line front end: rza <command> [options] [INPUT]
#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rza/amalgamation.hpp"
#include "rza/certify.hpp"
#include "rza/error.hpp"
#include "rza/json_io.hpp"
#include "rza/matroid.hpp"
#include "rza/realroot.hpp"
#include "rza/report.hpp"

using namespace rza;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInput = 1;
constexpr int kExitGuard = 2;
constexpr int kExitNegative = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 42;
  std::size_t samples = 500;
  double tol = 1e-9;
  std::string input;
};

/// Text of an INPUT argument: "-" reads stdin, an existing path reads the
/// file, anything else is taken literally (inline JSON or a polynomial).
std::string read_input(const std::string& positional, const Options& o) {
  const std::string& src = positional.empty() ? o.input : positional;
  if (src.empty()) throw InputError("no input given (use INPUT or --input)");
  if (src == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (src.front() != '{' && src.front() != '[' && std::filesystem::is_regular_file(src, ec)) {
    std::ifstream in(src);
    if (!in) throw InputError("cannot read '" + src + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return src;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

Polynomial read_polynomial(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return polynomial_from_json(parse_json(t));
  return parse(t);
}

std::vector<Rational> parse_point(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(trim(item)));
  return out;
}

std::vector<std::string> parse_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

SampleOptions sampling(const Options& o) { return {o.samples, o.seed}; }

int verdict_exit(Status s) { return s == Status::kCertified || s == Status::kProbable ? kExitPass : kExitNegative; }

int emit_verdict(const Options& o, const std::string& command, const Verdict& v, Json extra = Json::object()) {
  if (o.format == "json") {
    Json out{{"command", command}, {"verdict", verdict_to_json(v)}};
    for (auto& [k, val] : extra.items()) out[k] = val;
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [k, val] : extra.items())
      std::cout << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    std::cout << render(v, 4);
  }
  return verdict_exit(v.status);
}

/// Prints a JSON document or key/value lines.
void emit(const Options& o, const Json& doc) {
  if (o.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (auto& [k, v] : doc.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// ------------------------------------------------------------------ check

int check_rz(const Options& o, const std::string& in) {
  const Polynomial p = read_polynomial(in);
  if (p.degree() <= 2 && p.constant_term() != 0) {
    return emit_verdict(o, "check rz", quadratic_real_zero(p), {{"polynomial", format(p)}, {"method", "exact quadratic"}});
  }
  return emit_verdict(o, "check rz", real_zero_sample(p, sampling(o)),
                      {{"polynomial", format(p)}, {"method", "line sampling"}});
}

int check_stable(const Options& o, const std::string& in) {
  const Polynomial p = read_polynomial(in);
  return emit_verdict(o, "check stable", stable_sample(p, sampling(o)),
                      {{"polynomial", format(p)}, {"method", "line sampling"}});
}

int check_rigid(const Options& o, const std::string& in, const std::string& point) {
  const Polynomial p = read_polynomial(in);
  Json doc{{"command", "check rigid"}, {"polynomial", format(p)}};
  bool ok = false;
  if (!point.empty()) {
    const auto a = parse_point(point);
    if (a.size() != p.vars().size()) throw InputError("point has the wrong number of coordinates");
    ok = rigidly_convex_contains(p, a);
    doc["point"] = point;
    doc["contains"] = ok;
  } else {
    ok = orthant_in_rigid_set(p);
    doc["orthant_contained"] = ok ? "yes (nonnegative coefficients)" : "not decided";
  }
  emit(o, doc);
  return ok ? kExitPass : kExitNegative;
}

int check_psd(const Options& o, const std::string& in) {
  const SymmetricMatrixQ m(matrix_from_json(parse_json(in)));
  const bool psd = is_psd(m);
  Json doc{{"command", "check psd"}, {"matrix", format(m.matrix())}, {"psd", psd}};
  if (!psd) {
    if (auto v = negative_direction(m.matrix())) {
      Json w = Json::array();
      for (const auto& x : *v) w.push_back(to_string(x));
      doc["witness"] = w;
    }
  }
  emit(o, doc);
  return psd ? kExitPass : kExitNegative;
}

int check_sos(const Options& o, const std::string& in, const std::string& cert_path) {
  const std::string t = trim(in);
  std::optional<SosCertificate> cert;
  Polynomial target;
  if (!t.empty() && t.front() == '{' && parse_json(t).contains("squares")) {
    cert = sos_from_json(parse_json(t));
    if (!cert->target) throw InputError("certificate has no target polynomial");
    target = *cert->target;
  } else {
    target = read_polynomial(t);
  }
  if (!cert_path.empty()) cert = sos_from_json(parse_json(read_input(cert_path, o)));
  const Verdict v = global_nonneg(target, cert ? &*cert : nullptr, sampling(o));
  Json extra{{"target", format(target)}};
  if (cert) extra["residual"] = format(sos_residual(target, *cert));
  return emit_verdict(o, "check sos", v, extra);
}

int check_delta(const Options& o, const std::string& in) {
  const DeltaMatroid d = delta_from_json(parse_json(in));
  const DeltaCheck c = is_delta_matroid(d);
  Json doc{{"command", "check delta"}, {"delta_matroid", c.ok}, {"failing_triples", c.failing_triples}};
  if (c.witness) doc["witness"] = exchange_check_to_json(*c.witness, d.ground());
  emit(o, doc);
  return c.ok ? kExitPass : kExitNegative;
}

int check_matroid(const Options& o, const std::string& in) {
  const Json j = parse_json(in);
  try {
    const Matroid m = matroid_from_json(j);
    emit(o, {{"command", "check matroid"}, {"matroid", true}, {"rank", m.rank()}, {"bases", m.bases().size()}});
    return kExitPass;
  } catch (const MatroidAxiomError& e) {
    Json doc{{"command", "check matroid"}, {"matroid", false}, {"reason", e.what()}};
    if (e.exchange()) {
      const GroundSet g(j.at("ground").get<std::vector<std::string>>());
      doc["witness"] = {{"B", g.names(e.exchange()->b)}, {"C", g.names(e.exchange()->c)}, {"x", g[e.exchange()->x]}};
    }
    emit(o, doc);
    return kExitNegative;
  }
}

// ------------------------------------------------------------- amalgamate

Json marginal_block(const Polynomial& r, const Polynomial& p, const Polynomial& q, const VariableSet& y,
                    const VariableSet& z, int bound) {
  auto zero = [&](Polynomial f, const VariableSet& vs) {
    for (const auto& v : vs.names())
      if (f.vars().contains(v)) f = substitute(f, v, Rational(0));
    return f;
  };
  const bool left = zero(r, z) == p;
  const bool right = zero(r, y) == q;
  return {{"r(x,y,0) = p", left}, {"r(x,0,z) = q", right}, {"deg r", r.degree()}, {"deg r <= max(deg p, deg q)", r.degree() <= bound}};
}

int amalgamate_cmd(const Options& o, const std::string& mode, const std::string& in) {
  const Json j = parse_json(in);
  Json doc{{"command", "amalgamate " + mode}};
  Polynomial r;
  if (mode == "disjoint") {
    const Polynomial p = polynomial_from_json(j.at("p"));
    const Polynomial q = polynomial_from_json(j.at("q"));
    r = amalgamate_disjoint(p, q);
    doc["r"] = format(r);
    doc["verification"] = marginal_block(r, p, q, p.vars(), q.vars(), std::max(p.degree(), q.degree()));
  } else if (mode == "quadratic") {
    const AmalgamationProblem prob = problem_from_json(j);
    const Polynomial diff = compatibility_difference(prob);
    if (!diff.is_zero()) {
      doc["error"] = "incompatible marginals";
      doc["difference"] = format(diff);
      emit(o, doc);
      return kExitNegative;
    }
    const QuadraticAmalgam qa = amalgamate_quadratic_full(prob);
    r = qa.r;
    doc["r"] = format(r);
    doc["G"] = format(qa.g);
    doc["joint_discriminant"] = format(qa.joint_disc.matrix());
    Json v = marginal_block(r, prob.p, prob.q, prob.y, prob.z, std::max(prob.p.degree(), prob.q.degree()));
    v["joint discriminant PSD"] = is_psd(qa.joint_disc);
    doc["verification"] = v;
  } else {
    const auto xs = named_matrices_from_json(j.value("x", Json()));
    const auto ys = named_matrices_from_json(j.value("y", Json()));
    const auto zs = named_matrices_from_json(j.value("z", Json()));
    const DeterminantalAmalgam da = amalgamate_determinantal(xs, ys, zs);
    r = da.r;
    std::vector<std::string> yn, zn;
    for (const auto& [n, m] : ys) yn.push_back(n);
    for (const auto& [n, m] : zs) zn.push_back(n);
    doc["r"] = format(r);
    doc["p"] = format(da.p);
    doc["q"] = format(da.q);
    doc["verification"] = marginal_block(r, da.p, da.q, VariableSet(yn), VariableSet(zn),
                                         std::max(da.p.degree(), da.q.degree()));
  }
  emit(o, doc);
  for (const auto& [k, v] : doc["verification"].items())
    if (v.is_boolean() && !v.get<bool>()) return kExitGuard;
  return kExitPass;
}

// ---------------------------------------------------------------- matroid

int matroid_cmd(const Options& o, const std::string& op, const std::string& in, const std::string& set,
                const std::string& other) {
  const Matroid m = matroid_from_json(parse_json(in));
  const auto labels = parse_labels(set);
  Json doc{{"command", "matroid " + op}};
  if (op == "rank") {
    doc["set"] = labels;
    doc["rank"] = m.rank(m.ground().subset(labels));
  } else if (op == "closure") {
    doc["set"] = labels;
    doc["closure"] = m.ground().names(m.closure(m.ground().subset(labels)));
  } else if (op == "restrict") {
    doc["matroid"] = matroid_to_json(restriction(m, labels));
  } else if (op == "contract") {
    doc["matroid"] = matroid_to_json(contraction(m, labels));
  } else if (op == "bases-poly") {
    doc["polynomial"] = format(bases_generating_poly(m));
  } else if (op == "modular") {
    const bool mod = is_modular(m);
    doc["modular"] = mod;
    emit(o, doc);
    return mod ? kExitPass : kExitNegative;
  } else if (op == "amalgam") {
    const Matroid m2 = matroid_from_json(parse_json(read_input(other, Options{})));
    const AmalgamResult res = amalgam_search(m, m2);
    doc["result"] = to_string(res.kind);
    doc["nodes"] = res.nodes;
    if (!res.detail.empty()) doc["detail"] = res.detail;
    if (res.amalgam) doc["amalgam"] = matroid_to_json(*res.amalgam);
    emit(o, doc);
    return res.kind == AmalgamResult::Kind::kAmalgam ? kExitPass : kExitNegative;
  }
  emit(o, doc);
  return kExitPass;
}

int delta_cmd(const Options& o, const std::string& op, const std::string& in) {
  if (op == "check") return check_delta(o, in);
  const DeltaMatroid d = delta_from_json(parse_json(in));
  const Matroid m = op == "lower" ? lower_matroid(d) : upper_matroid(d);
  emit(o, {{"command", "delta " + op}, {"matroid", matroid_to_json(m)}});
  return kExitPass;
}

// ------------------------------------------------------------ mc-average

int mc_average_cmd(const Options& o, const std::string& in) {
  const Json j = parse_json(in);
  const auto ys = named_matrices_from_json(j.value("y", Json()));
  const auto zs = named_matrices_from_json(j.value("z", Json()));
  const MonteCarloEstimate est = mc_orthogonal_amalgam(ys, zs, o.samples, o.seed);
  const std::size_t d = ys.empty() ? (zs.empty() ? 0 : zs.front().second.dim()) : ys.front().second.dim();
  const Polynomial exact = amalgamate_disjoint(det_polynomial(ys), det_polynomial(zs), static_cast<unsigned>(d));
  const Polynomial exact_over = exact.over(est.mean.vars().united(exact.vars()));
  Json coeffs = Json::array();
  bool all_ok = true;
  double max_dev = 0.0;
  for (const auto& [m, se] : est.std_error) {
    Monomial mm(exact_over.vars().size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) mm[*exact_over.vars().index_of(est.mean.vars()[i])] = m[i];
    const double ex = exact_over.coefficient(mm).get_d();
    const double mean = est.mean.coefficient(m);
    const double dev = std::abs(mean - ex);
    const bool ok = dev <= 3 * se + o.tol;
    all_ok = all_ok && ok;
    max_dev = std::max(max_dev, dev);
    FloatPolynomial mono(est.mean.vars());
    mono.add_term(m, 1.0);
    coeffs.push_back({{"monomial", format(mono)}, {"mean", mean}, {"std_error", se}, {"exact", ex}, {"within_3se", ok}});
  }
  Json doc{{"command", "mc-average"}, {"samples", est.samples}, {"seed", est.seed}, {"estimate", format(est.mean)},
           {"operator_formula", format(exact)}, {"max_abs_deviation", max_dev}};
  if (o.format == "json") {
    doc["coefficients"] = coeffs;
    std::cout << doc.dump(2) << "\n";
  } else {
    emit(o, doc);
    for (const auto& c : coeffs) {
      std::cout << "  " << c["monomial"].get<std::string>() << ": " << c["mean"].get<double>() << " +- "
                << c["std_error"].get<double>() << "  exact " << c["exact"].get<double>()
                << (c["within_3se"].get<bool>() ? "" : "  OUTSIDE 3 SE") << "\n";
    }
  }
  return all_ok ? kExitPass : kExitNegative;
}

int parse_cmd(const Options& o, const std::string& in) {
  const Polynomial p = read_polynomial(in);
  if (o.format == "json") {
    Json j = polynomial_to_json(p);
    j["degree"] = p.degree();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format(p) << "\n";
    std::cout << "vars: ";
    for (std::size_t i = 0; i < p.vars().size(); ++i) std::cout << (i ? ", " : "") << p.vars()[i];
    std::cout << "\ndegree: " << p.degree() << "\n";
  }
  return kExitPass;
}

int repro_cmd(const Options& o) {
  const ScenarioReport r = repro_counterexample(sampling(o));
  if (o.format == "json") std::cout << report_to_json(r).dump(2) << "\n";
  else std::cout << render_text(r);
  return r.overall() == StepStatus::kFail ? kExitNegative : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real zero / stable polynomial checks, amalgamation and matroid tools"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Sampling seed");
  app.add_option("--samples", o.samples, "Number of samples");
  app.add_option("--tol", o.tol, "Absolute tolerance added to Monte Carlo comparisons");
  app.add_option("--input", o.input, "Input file, '-' for stdin, or inline text");

  std::string positional, point, cert, set, other;
  std::function<int()> action;

  auto* parse_sc = app.add_subcommand("parse", "Parse and print a polynomial in canonical form");
  parse_sc->add_option("INPUT", positional);
  parse_sc->callback([&] { action = [&] { return parse_cmd(o, read_input(positional, o)); }; });

  auto* check = app.add_subcommand("check", "Decide or semidecide a property");
  check->require_subcommand(1);
  struct CheckKind {
    const char* name;
    const char* help;
  };
  for (const CheckKind k : {CheckKind{"rz", "real zero"}, {"stable", "stable"}, {"rigid", "rigid convexity membership"},
                            {"psd", "positive semidefinite matrix"}, {"sos", "nonnegativity / SOS certificate"},
                            {"delta", "delta-matroid exchange"}, {"matroid", "matroid basis axioms"}}) {
    auto* sc = check->add_subcommand(k.name, k.help);
    sc->add_option("INPUT", positional);
    const std::string name = k.name;
    if (name == "rigid") sc->add_option("--point", point, "Comma-separated rational point");
    if (name == "sos") sc->add_option("--certificate", cert, "Certificate JSON (file or inline)");
    sc->callback([&, name] {
      action = [&, name] {
        const std::string in = read_input(positional, o);
        if (name == "rz") return check_rz(o, in);
        if (name == "stable") return check_stable(o, in);
        if (name == "rigid") return check_rigid(o, in, point);
        if (name == "psd") return check_psd(o, in);
        if (name == "sos") return check_sos(o, in, cert);
        if (name == "delta") return check_delta(o, in);
        return check_matroid(o, in);
      };
    });
  }

  auto* amalg = app.add_subcommand("amalgamate", "Construct an amalgam with exact verification");
  amalg->require_subcommand(1);
  for (const char* mode : {"disjoint", "quadratic", "determinantal"}) {
    auto* sc = amalg->add_subcommand(mode, std::string(mode) + " amalgamation");
    sc->add_option("INPUT", positional);
    const std::string m = mode;
    sc->callback([&, m] { action = [&, m] { return amalgamate_cmd(o, m, read_input(positional, o)); }; });
  }

  auto* mat = app.add_subcommand("matroid", "Matroid operations");
  mat->require_subcommand(1);
  for (const char* op : {"rank", "closure", "restrict", "contract", "bases-poly", "amalgam", "modular"}) {
    auto* sc = mat->add_subcommand(op, std::string("matroid ") + op);
    sc->add_option("INPUT", positional);
    const std::string name = op;
    if (name == "rank" || name == "closure" || name == "restrict" || name == "contract") {
      sc->add_option("--set", set, "Comma-separated element labels");
    }
    if (name == "amalgam") sc->add_option("--other", other, "Second matroid (file or inline JSON)")->required();
    sc->callback([&, name] {
      action = [&, name] { return matroid_cmd(o, name, read_input(positional, o), set, other); };
    });
  }

  auto* delta = app.add_subcommand("delta", "Delta-matroid operations");
  delta->require_subcommand(1);
  for (const char* op : {"check", "lower", "upper"}) {
    auto* sc = delta->add_subcommand(op, std::string("delta-matroid ") + op);
    sc->add_option("INPUT", positional);
    const std::string name = op;
    sc->callback([&, name] { action = [&, name] { return delta_cmd(o, name, read_input(positional, o)); }; });
  }

  auto* mc = app.add_subcommand("mc-average", "Monte Carlo orthogonal average against the operator formula");
  mc->add_option("INPUT", positional);
  mc->callback([&] { action = [&] { return mc_average_cmd(o, read_input(positional, o)); }; });

  auto* repro = app.add_subcommand("repro", "Scripted reproductions");
  repro->require_subcommand(1);
  auto* ce = repro->add_subcommand("counterexample", "Run the Poljak-Turzik counterexample chain");
  ce->callback([&] { action = [&] { return repro_cmd(o); }; });

  std::function<void(CLI::App*)> pass_globals = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sc : a->get_subcommands({})) pass_globals(sc);
  };
  pass_globals(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitNegative;
  } catch (const GuardError& e) {
    std::cerr << "internal guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitGuard;
  }
}

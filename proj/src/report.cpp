#include "rza/report.hpp"

#include <sstream>

#include "rza/error.hpp"

namespace rza {

std::string_view to_string(StepStatus s) {
  switch (s) {
    case StepStatus::kFail:
      return "fail";
    case StepStatus::kProbable:
      return "probable";
    case StepStatus::kPass:
      return "pass";
  }
  return "?";
}

StepStatus ScenarioReport::overall() const {
  StepStatus s = StepStatus::kPass;
  for (const auto& step : steps) s = std::min(s, step.status);
  return s;
}

std::string render_text(const ScenarioReport& r) {
  std::ostringstream out;
  out << r.title << "  [samples=" << r.samples << ", seed=" << r.seed << "]\n";
  int k = 1;
  for (const auto& step : r.steps) {
    out << "(" << k++ << ") " << to_string(step.status) << "  " << step.name << "\n";
    for (const auto& d : step.details) out << "      " << d << "\n";
    if (step.witness) out << "      witness: " << *step.witness << "\n";
  }
  out << "overall: " << to_string(r.overall()) << "\n";
  return out.str();
}

namespace {

const char* kPtRayleighP[][2] = {
    {"1", "y*x3 + y*x6 + x3*x4 + x3*x5 + x3*x6 + 1/2*x4*x5 + 1/2*x4*x6 + 1/2*x5*x6"},
    {"3/4", "x4*x5 + x4*x6 + x5*x6"},
};

const char* kPtRayleighQ[][2] = {
    {"1", "z*x3 + 1/2*z*x6 + x3*x4 + x3*x5 + x3*x6 + 1/2*x4*x5 + 1/2*x4*x6 + 1/2*x5*x6"},
    {"1/12", "3*z*x6 + x4*x5 + x4*x6 + x5*x6"},
    {"2/3", "x4*x5 + x4*x6 + x5*x6"},
};

}  // namespace

SosCertificate pt_rayleigh_certificate(PoljakTurzik which) {
  SosCertificate cert;
  auto add = [&](const char* w, const char* q) { cert.squares.push_back({parse_rational(w), parse(q)}); };
  if (which == PoljakTurzik::kM1) {
    for (const auto& sq : kPtRayleighP) add(sq[0], sq[1]);
  } else {
    for (const auto& sq : kPtRayleighQ) add(sq[0], sq[1]);
  }
  cert.target = rayleigh(pt_formula(which), "x1", "x2");
  return cert;
}

Polynomial pt_formula(PoljakTurzik which) {
  const bool first = which == PoljakTurzik::kM1;
  const VariableSet vars{"x1", "x2", "x3", "x4", "x5", "x6", first ? "y" : "z"};
  const Polynomial removed = first ? parse("y*x1*x4 + y*x3*x6 + y*x2*x5 + x1*x2*x3 + x4*x5*x6", vars)
                                   : parse("z*x1*x4 + z*x2*x5 + x1*x2*x3 + x4*x5*x6", vars);
  return elementary_symmetric(vars, 3) - removed;
}

bool RankReplay::all_hold() const {
  for (const auto& [name, ok] : assertions)
    if (!ok) return false;
  return contradiction;
}

RankReplay pt_rank_replay(const Matroid& m1, const Matroid& m2) {
  RankReplay out;
  const auto& g1 = m1.ground();
  const auto& g2 = m2.ground();
  auto r1 = [&](const std::vector<std::string>& s) { return m1.rank(g1.subset(s)); };
  auto r2 = [&](const std::vector<std::string>& s) { return m2.rank(g2.subset(s)); };
  auto in_cl1 = [&](const std::string& e, const std::vector<std::string>& s) {
    return (m1.closure(g1.subset(s)) & g1.subset({e})) != 0;
  };
  auto in_cl2 = [&](const std::string& e, const std::vector<std::string>& s) {
    return (m2.closure(g2.subset(s)) & g2.subset({e})) != 0;
  };
  const std::vector<std::string> a{"x1", "x4"}, b{"x2", "x5"}, ab{"x1", "x2", "x4", "x5"};
  auto check = [&](std::string name, bool ok) { out.assertions.emplace_back(std::move(name), ok); };

  check("y in cl_M1({x1, x4})", in_cl1("y", a));
  check("y in cl_M1({x2, x5})", in_cl1("y", b));
  check("z in cl_M2({x1, x4})", in_cl2("z", a));
  check("z in cl_M2({x2, x5})", in_cl2("z", b));
  const int ra = r1(a), rb = r1(b), rab = r1(ab);
  check("r({x1, x4}) = 2 in M1 and M2", ra == 2 && r2(a) == 2);
  check("r({x2, x5}) = 2 in M1 and M2", rb == 2 && r2(b) == 2);
  check("r({x1, x2, x4, x5}) = 3 in M1 and M2", rab == 3 && r2(ab) == 3);
  // In any amalgam N: r(A ∪ {y,z}) = r(A), r(B ∪ {y,z}) = r(B) and
  // r(A ∪ B ∪ {y,z}) >= r(A ∪ B); submodularity on A ∪ {y,z}, B ∪ {y,z} bounds r({y,z}).
  const int upper = ra + rb - rab;
  const int lower = std::max(r1({"y"}), r2({"z"}));
  check("submodularity bound r({y, z}) <= r(A) + r(B) - r(A u B) = 1", upper == 1);
  check("r({y}) = r({z}) = 1 (no loops)", r1({"y"}) == 1 && r2({"z"}) == 1);
  out.forced_rank_yz = upper == lower ? upper : -1;
  check("r({y, z}) = 1 forced, so y and z are parallel in any amalgam", out.forced_rank_yz == 1);
  out.rank_y_x3_x6 = r1({"y", "x3", "x6"});
  out.rank_z_x3_x6 = r2({"z", "x3", "x6"});
  check("r({y, x3, x6}) = 2 in M1", out.rank_y_x3_x6 == 2);
  check("r({z, x3, x6}) = 3 in M2", out.rank_z_x3_x6 == 3);
  // Parallel y, z force r({y,x3,x6}) = r({y,z,x3,x6}) = r({z,x3,x6}) in N.
  out.contradiction = out.forced_rank_yz == 1 && out.rank_y_x3_x6 != out.rank_z_x3_x6;
  return out;
}

namespace {

template <typename Body>
ReportStep run_step(std::string name, Body&& body) {
  ReportStep step{std::move(name)};
  try {
    body(step);
  } catch (const std::exception& e) {
    step.status = StepStatus::kFail;
    step.witness = std::string("exception: ") + e.what();
  }
  return step;
}

void require(ReportStep& step, bool ok, const std::string& what) {
  step.details.push_back((ok ? "ok    " : "FAIL  ") + what);
  if (!ok) {
    step.status = StepStatus::kFail;
    if (!step.witness) step.witness = what;
  }
}

}  // namespace

ScenarioReport repro_counterexample(const SampleOptions& opts) {
  ScenarioReport report;
  report.title = "Poljak-Turzik counterexample chain";
  report.samples = opts.samples;
  report.seed = opts.seed;

  const Matroid m1 = poljak_turzik(PoljakTurzik::kM1);
  const Matroid m2 = poljak_turzik(PoljakTurzik::kM2);
  const Polynomial p = bases_generating_poly(m1);
  const Polynomial q = bases_generating_poly(m2);
  const std::vector<std::string> xs{"x1", "x2", "x3", "x4", "x5", "x6"};
  bool stable_certified = false;

  report.steps.push_back(run_step("build matroids M1, M2", [&](ReportStep& s) {
    require(s, m1.bases().size() == 30, "|bases(M1)| = " + std::to_string(m1.bases().size()) + " (expected 30)");
    require(s, m2.bases().size() == 31, "|bases(M2)| = " + std::to_string(m2.bases().size()) + " (expected 31)");
    require(s, restriction(m1, xs) == restriction(m2, xs), "M1|{x1..x6} = M2|{x1..x6}");
    require(s, m1.loops() == 0 && m1.coloops() == 0 && m2.loops() == 0 && m2.coloops() == 0,
            "no loops or coloops in M1, M2");
  }));

  report.steps.push_back(run_step("bases generating polynomials", [&](ReportStep& s) {
    require(s, p == pt_formula(PoljakTurzik::kM1), "p_M1 = e3 - y*x1*x4 - y*x3*x6 - y*x2*x5 - x1*x2*x3 - x4*x5*x6");
    require(s, q == pt_formula(PoljakTurzik::kM2), "q_M2 = e3 - z*x1*x4 - z*x2*x5 - x1*x2*x3 - x4*x5*x6");
    s.details.push_back("p has " + std::to_string(p.num_terms()) + " terms, q has " + std::to_string(q.num_terms()));
  }));

  const SosCertificate cert_p = pt_rayleigh_certificate(PoljakTurzik::kM1);
  const SosCertificate cert_q = pt_rayleigh_certificate(PoljakTurzik::kM2);
  report.steps.push_back(run_step("sum-of-squares certificates", [&](ReportStep& s) {
    const Polynomial rp = rayleigh(p, "x1", "x2");
    const Polynomial rq = rayleigh(q, "x1", "x2");
    const Polynomial dp = sos_residual(rp, cert_p);
    const Polynomial dq = sos_residual(rq, cert_q);
    require(s, dp.is_zero(), "Rayleigh(p; x1, x2) - (sum of 2 weighted squares) = " + format(dp));
    require(s, dq.is_zero(), "Rayleigh(q; x1, x2) - (sum of 3 weighted squares) = " + format(dq));
  }));

  report.steps.push_back(run_step("Wagner-Wei stability of p and q", [&](ReportStep& s) {
    const Verdict vp = wagner_wei_stable(p, {{"root", cert_p}}, opts);
    const Verdict vq = wagner_wei_stable(q, {{"root", cert_q}}, opts);
    for (const auto* v : {&vp, &vq}) {
      const bool root_cert = !v->children.empty() && v->children.front().status == Status::kCertified;
      require(s, root_cert, "root Rayleigh obligation: " + (v->children.empty() ? "missing" : v->children.front().label));
      require(s, v->status == Status::kCertified, std::string("overall ") + std::string(to_string(v->status)));
    }
    s.details.push_back("sub-polynomials on 6 variables are closed as bases generating polynomials of matroids on 6 elements");
    stable_certified = s.status == StepStatus::kPass;
  }));

  report.steps.push_back(run_step("delta-matroid exchange violation", [&](ReportStep& s) {
    const GroundSet g({"x1", "x2", "x3", "x4", "x5", "x6", "y", "z"});
    std::vector<Subset> fam;
    for (Subset b : m1.bases()) fam.push_back(g.subset(m1.ground().names(b)));
    for (Subset b : m2.bases()) fam.push_back(g.subset(m2.ground().names(b)));
    fam.push_back(g.subset({"y", "z"}));
    const DeltaMatroid d(g, fam);
    const DeltaCheck dc = is_delta_matroid(d);
    require(s, !dc.ok, "supp(p) u supp(q) u {{y, z}} is not a delta-matroid (" +
                           std::to_string(dc.failing_triples) + " failing triples)");
    const ExchangeCheck ec = exchange_check(d, g.subset({"x1", "x4", "x5"}), g.subset({"y", "z"}), *g.index_of("x5"));
    require(s, ec.candidates.size() == 5, "A = {x1, x4, x5}, B = {y, z}, x = x5 has 5 candidate exchanges");
    for (const auto& c : ec.candidates) {
      require(s, !c.feasible, "A xor {x5, " + g[c.y] + "} = " + g.format(c.set) + " is not feasible");
    }
    if (dc.witness) {
      s.details.push_back("first failing triple in mask order: A = " + g.format(dc.witness->a) +
                          ", B = " + g.format(dc.witness->b) + ", x = " + g[dc.witness->x]);
    }
  }));

  report.steps.push_back(run_step("matroid amalgam search", [&](ReportStep& s) {
    const AmalgamResult res = amalgam_search(m1, m2);
    require(s, res.kind == AmalgamResult::Kind::kInfeasible,
            "amalgam_search(M1, M2) = " + std::string(to_string(res.kind)));
    s.details.push_back("search nodes: " + std::to_string(res.nodes));
  }));

  report.steps.push_back(run_step("rank-function contradiction", [&](ReportStep& s) {
    const RankReplay rr = pt_rank_replay(m1, m2);
    for (const auto& [name, ok] : rr.assertions) require(s, ok, name);
    require(s, rr.contradiction, "r({y, x3, x6}) = 2 != 3 = r({z, x3, x6}) although y, z are parallel");
  }));

  report.steps.push_back(run_step("shifted real zero polynomials", [&](ReportStep& s) {
    const std::vector<Rational> a{1, 1, 1, 1, 1, 1, 0};
    const Rational pa = evaluate(p, a);
    const Rational qa = evaluate(q, a);
    require(s, pa == 18 && qa == 18, "p(1,...,1,0) = " + to_string(pa) + ", q(1,...,1,0) = " + to_string(qa));
    const Polynomial ps = shift(p, a);
    const Polynomial qs = shift(q, a);
    require(s, ps.constant_term() == 18 && qs.constant_term() == 18, "constant term of p(x+1, y) and q(x+1, z) is 18");
    require(s, substitute(ps, "y", Rational(0)).trimmed() == substitute(qs, "z", Rational(0)).trimmed(),
            "p(x+1, 0) = q(x+1, 0)");
    require(s, orthant_in_rigid_set(ps) && orthant_in_rigid_set(qs),
            "nonnegative coefficients: the closed orthant lies in both rigidly convex sets");
    require(s, stable_certified, "real zero: p, q stable (certified above), shift point nonnegative with p(a) != 0");
    for (const auto* f : {&ps, &qs}) {
      const Verdict v = real_zero_sample(*f, opts);
      require(s, v.status != Status::kRefuted,
              "line sampling: " + std::string(to_string(v.status)) + " (" + std::to_string(v.samples_used) +
                  " lines, seed " + std::to_string(opts.seed) + ")" +
                  (v.witness ? ", witness " + describe(*v.witness) : std::string()));
    }
  }));

  return report;
}

}  // namespace rza

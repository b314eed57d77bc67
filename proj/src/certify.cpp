#include "rza/certify.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "rza/error.hpp"
#include "rza/matroid.hpp"
#include "rza/realroot.hpp"

namespace rza {

// ------------------------------------------------------------------ PSD tests

bool is_psd(const SymmetricMatrixQ& m) {
  const auto chi = shifted_charpoly(m.matrix());
  return std::all_of(chi.coefficients().begin(), chi.coefficients().end(),
                     [](const Rational& c) { return c >= 0; });
}

std::optional<std::vector<Rational>> negative_direction(const MatrixQ& m) {
  const std::size_t n = m.rows();
  if (n == 0) return std::nullopt;
  std::vector<Rational> v(n);
  if (m(0, 0) < 0) {
    v[0] = 1;
    return v;
  }
  if (m(0, 0) == 0) {
    for (std::size_t j = 1; j < n; ++j) {
      if (m(0, j) == 0) continue;
      // (s·e0 + ej)ᵀ M (s·e0 + ej) = 2s·m0j + mjj = -1 for this s.
      v[0] = -(m(j, j) + 1) / (2 * m(0, j));
      v[j] = 1;
      return v;
    }
    auto rest = negative_direction(m.block(1, 1, n - 1, n - 1));
    if (!rest) return std::nullopt;
    std::copy(rest->begin(), rest->end(), v.begin() + 1);
    return v;
  }
  // Positive pivot: recurse on the Schur complement, then back-substitute.
  MatrixQ schur(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) schur(i - 1, j - 1) = m(i, j) - m(i, 0) * m(0, j) / m(0, 0);
  auto w = negative_direction(schur);
  if (!w) return std::nullopt;
  Rational dot = 0;
  for (std::size_t j = 1; j < n; ++j) dot += m(0, j) * (*w)[j - 1];
  v[0] = -dot / m(0, 0);
  std::copy(w->begin(), w->end(), v.begin() + 1);
  return v;
}

// -------------------------------------------------------- quadratic real zero

QuadraticForm quadratic_form(const Polynomial& p) {
  if (p.degree() > 2) throw PreconditionError("quadratic form requested for degree " + std::to_string(p.degree()));
  const std::size_t n = p.vars().size();
  MatrixQ a(n, n);
  std::vector<Rational> b(n);
  Rational c = 0;
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (Exponent e = 0; e < m[i]; ++e) idx.push_back(i);
    if (idx.empty()) {
      c = coeff;
    } else if (idx.size() == 1) {
      b[idx[0]] = coeff;
    } else if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) = coeff;
    } else {
      a(idx[0], idx[1]) = coeff / 2;
      a(idx[1], idx[0]) = coeff / 2;
    }
  }
  return {SymmetricMatrixQ(std::move(a)), std::move(b), c};
}

SymmetricMatrixQ discriminant_matrix(const QuadraticForm& q) {
  if (q.c == 0) throw PreconditionError("discriminant needs a nonzero constant term");
  const std::size_t n = q.b.size();
  MatrixQ d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational bi = q.b[i] / q.c, bj = q.b[j] / q.c;
      d(i, j) = bi * bj - 4 * q.a(i, j) / q.c;
    }
  return SymmetricMatrixQ(std::move(d));
}

Verdict quadratic_real_zero(const Polynomial& p) {
  if (p.degree() > 2) throw PreconditionError("quadratic_real_zero needs degree <= 2");
  const QuadraticForm q = quadratic_form(p);
  if (q.c == 0) throw PreconditionError("quadratic_real_zero needs p(0) != 0");
  const SymmetricMatrixQ disc = discriminant_matrix(q);
  if (is_psd(disc)) {
    Verdict v = Verdict::certified("real zero: bbᵀ - 4A is positive semidefinite");
    v.notes.push_back("discriminant matrix " + format(disc.matrix()));
    return v;
  }
  auto dir = negative_direction(disc.matrix());
  if (!dir) throw GuardError("PSD routes disagree on the discriminant matrix");
  Witness w{Witness::Kind::kLine, *dir, {}, {}, "p(ta) has negative discriminant"};
  return Verdict::refuted("not real zero: bbᵀ - 4A is not positive semidefinite", std::move(w));
}

// ------------------------------------------------------------- line sampling

Verdict real_zero_sample(const Polynomial& p, const SampleOptions& opts) {
  if (p.constant_term() == 0) {
    Verdict v = Verdict::refuted("not real zero", {Witness::Kind::kOrigin, {}, {}, {}, "vanishes at origin"});
    v.seed = opts.seed;
    return v;
  }
  if (p.is_constant()) return Verdict::certified("real zero: nonzero constant");
  RationalSampler sampler(opts.seed);
  const std::size_t n = p.vars().size();
  for (std::size_t k = 0; k < opts.samples; ++k) {
    auto a = sampler.direction(n);
    if (!is_real_rooted(restrict_line(p, a))) {
      Verdict v = Verdict::refuted("not real zero", {Witness::Kind::kLine, std::move(a), {}, {}, "p(ta) not real-rooted"});
      v.samples_used = k + 1;
      v.seed = opts.seed;
      return v;
    }
  }
  Verdict v{Status::kProbable, "real zero on every sampled line"};
  v.samples_used = opts.samples;
  v.seed = opts.seed;
  return v;
}

Verdict stable_sample(const Polynomial& p, const SampleOptions& opts) {
  if (p.is_zero()) throw PreconditionError("stable_sample on the zero polynomial");
  if (p.is_constant()) return Verdict::certified("stable: nonzero constant");
  RationalSampler sampler(opts.seed);
  const std::size_t n = p.vars().size();
  for (std::size_t k = 0; k < opts.samples; ++k) {
    auto a = sampler.positive_direction(n);
    auto b = sampler.point(n);
    const auto f = restrict_line(p, a, b);
    if (f.is_zero() || !is_real_rooted(f)) {
      const auto kind = f.is_zero() ? Witness::Kind::kZeroLine : Witness::Kind::kLine;
      Verdict v = Verdict::refuted("not stable", {kind, std::move(a), std::move(b), {}, "p(ta+b) not real-rooted"});
      v.samples_used = k + 1;
      v.seed = opts.seed;
      return v;
    }
  }
  Verdict v{Status::kProbable, "stable on every sampled line"};
  v.samples_used = opts.samples;
  v.seed = opts.seed;
  return v;
}

bool witness_rechecks(const Polynomial& p, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::kOrigin:
      return p.constant_term() == 0;
    case Witness::Kind::kLine:
    case Witness::Kind::kZeroLine: {
      const auto f = w.offset.empty() ? restrict_line(p, w.direction) : restrict_line(p, w.direction, w.offset);
      return w.kind == Witness::Kind::kZeroLine ? f.is_zero() : !is_real_rooted(f);
    }
    case Witness::Kind::kPoint:
      return evaluate(p, w.point) < 0;
    case Witness::Kind::kStructural:
      return false;
  }
  return false;
}

// --------------------------------------------------------- Rayleigh and SOS

Polynomial rayleigh(const Polynomial& p, const std::string& i, const std::string& j) {
  if (!p.is_multi_affine()) throw PreconditionError("Rayleigh polynomial needs a multi-affine input");
  if (i == j) throw PreconditionError("Rayleigh polynomial needs two distinct variables");
  const Polynomial di = partial_derivative(p, i);
  const Polynomial dj = partial_derivative(p, j);
  return di * dj - p * partial_derivative(di, j);
}

Polynomial sos_sum(const SosCertificate& cert) {
  Polynomial total;
  for (const auto& [w, q] : cert.squares) total += w * (q * q);
  return total;
}

Polynomial sos_residual(const Polynomial& target, const SosCertificate& cert) {
  return (target - sos_sum(cert)).over(target.vars().united(sos_sum(cert).vars()));
}

bool verify_sos(const Polynomial& target, const SosCertificate& cert) {
  for (const auto& sq : cert.squares) {
    if (sq.weight <= 0) return false;
  }
  return sos_residual(target, cert).is_zero();
}

namespace {

bool all_even_nonnegative(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) return false;
    for (auto e : m) {
      if (e % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace

Verdict global_nonneg(const Polynomial& p, const SosCertificate* cert, const SampleOptions& opts) {
  std::vector<std::string> notes;
  if (cert != nullptr) {
    if (verify_sos(p, *cert)) {
      return Verdict::certified("nonnegative: sum-of-squares certificate verified exactly");
    }
    notes.push_back("supplied certificate did not verify");
  }
  if (all_even_nonnegative(p)) {
    Verdict v = Verdict::certified("nonnegative: every term is an even monomial with nonnegative coefficient");
    v.notes = std::move(notes);
    return v;
  }
  RationalSampler sampler(opts.seed);
  for (std::size_t k = 0; k < opts.samples; ++k) {
    auto x = sampler.point(p.vars().size());
    if (evaluate(p, x) < 0) {
      Verdict v = Verdict::refuted("negative somewhere", {Witness::Kind::kPoint, {}, {}, std::move(x), "p(point) < 0"});
      v.samples_used = k + 1;
      v.seed = opts.seed;
      v.notes = std::move(notes);
      return v;
    }
  }
  Verdict v{Status::kUnknown, "no negative value found"};
  v.samples_used = opts.samples;
  v.seed = opts.seed;
  v.notes = std::move(notes);
  return v;
}

// ------------------------------------------------------------- Wagner–Wei

namespace {

class WagnerWei {
 public:
  WagnerWei(const std::map<std::string, SosCertificate>& certs, const SampleOptions& opts, bool cite)
      : certs_(certs), opts_(opts), cite_(cite) {}

  Verdict node(const Polynomial& p, const std::string& id) {
    const std::string key = format(p);
    if (auto it = memo_.find(key); it != memo_.end()) {
      Verdict stub{it->second.status, id + " = " + it->second.id + " (shared subproblem)"};
      return stub;
    }
    Verdict v = evaluate_node(p, id);
    memo_.emplace(key, Memo{v.status, id});
    return v;
  }

 private:
  struct Memo {
    Status status;
    std::string id;
  };

  Verdict evaluate_node(const Polynomial& p, const std::string& id) {
    const auto occ = p.occurring_variables();
    Verdict v{Status::kCertified, id + ": " + abbreviated(p)};
    if (occ.size() <= 1) {
      v.label += "  [at most one occurring variable]";
      return v;
    }
    if (cite_ && occ.size() <= 6 && is_bases_generating(p)) {
      v.label += "  [bases generating polynomial of a matroid on <= 6 elements]";
      return v;
    }
    if (occ.size() < p.vars().size()) {
      v.notes.push_back("criterion applied to the " + std::to_string(occ.size()) + " occurring variables only");
    }
    Verdict obligation = rayleigh_obligation(p, id, occ);
    v.status = weakest(v.status, obligation.status);
    v.children.push_back(std::move(obligation));
    for (const auto& var : occ) {
      Verdict d = node(partial_derivative(p, var), id + "/d:" + var);
      v.status = weakest(v.status, d.status);
      v.children.push_back(std::move(d));
      const Polynomial restricted = substitute(p, var, Rational(0));
      if (restricted.is_zero()) {
        // p = var·∂_var p, so this branch adds nothing beyond the derivative child.
        v.notes.push_back(var + " divides p (coloop): zero restriction treated as vacuous");
        continue;
      }
      Verdict r = node(restricted, id + "/0:" + var);
      v.status = weakest(v.status, r.status);
      v.children.push_back(std::move(r));
    }
    return v;
  }

  Verdict rayleigh_obligation(const Polynomial& p, const std::string& id, const std::vector<std::string>& occ) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < occ.size(); ++i)
      for (std::size_t j = i + 1; j < occ.size(); ++j) pairs.emplace_back(occ[i], occ[j]);
    auto pair_label = [&](const auto& pr) { return "rayleigh(" + pr.first + ", " + pr.second + ")"; };

    std::vector<Polynomial> rays;
    for (const auto& pr : pairs) rays.push_back(rayleigh(p, pr.first, pr.second));

    if (auto it = certs_.find(id); it != certs_.end()) {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (verify_sos(rays[k], it->second)) {
          Verdict v = Verdict::certified(pair_label(pairs[k]) + " is a verified sum of squares");
          return v;
        }
      }
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      Verdict g = global_nonneg(rays[k], nullptr, {0, 0});
      if (g.status == Status::kCertified) {
        g.label = pair_label(pairs[k]) + ": " + g.label;
        return g;
      }
    }
    std::optional<Verdict> first_refutation;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      Verdict g = global_nonneg(rays[k], nullptr, {opts_.samples, opts_.seed + 7919 * ++calls_});
      g.label = pair_label(pairs[k]) + ": " + g.label;
      if (g.status != Status::kRefuted) return g;
      if (!first_refutation) first_refutation = std::move(g);
    }
    Verdict v = std::move(*first_refutation);
    v.notes.push_back("every Rayleigh pair was refuted by sampling");
    return v;
  }

  static std::string abbreviated(const Polynomial& p) {
    std::string s = format(p);
    if (s.size() > 80) s = s.substr(0, 77) + "...";
    return s;
  }

  const std::map<std::string, SosCertificate>& certs_;
  SampleOptions opts_;
  bool cite_ = true;
  std::unordered_map<std::string, Memo> memo_;
  std::uint64_t calls_ = 0;
};

}  // namespace

Verdict wagner_wei_stable(const Polynomial& p, const std::map<std::string, SosCertificate>& certs,
                          const SampleOptions& opts, bool cite_small_matroids) {
  if (p.is_zero()) throw PreconditionError("Wagner–Wei criterion on the zero polynomial");
  if (!p.is_multi_affine()) throw PreconditionError("Wagner–Wei criterion needs a multi-affine polynomial");
  if (!p.has_nonnegative_coefficients()) {
    throw PreconditionError("Wagner–Wei criterion needs nonnegative coefficients");
  }
  WagnerWei solver(certs, opts, cite_small_matroids);
  Verdict v = solver.node(p, "root");
  v.seed = opts.seed;
  return v;
}

bool is_bases_generating(const Polynomial& p) {
  if (p.is_zero() || !p.is_multi_affine() || !p.is_homogeneous()) return false;
  for (const auto& [m, c] : p.terms())
    if (c != 1) return false;
  const Polynomial t = p.trimmed();
  if (t.vars().size() > kMaxGround) return false;
  try {
    support_matroid(t);
  } catch (const MatroidAxiomError&) {
    return false;
  }
  return true;
}

// --------------------------------------------------------- rigid convexity

bool rigidly_convex_contains(const Polynomial& p, std::span<const Rational> a) {
  if (p.constant_term() == 0) throw PreconditionError("rigid convexity needs p(0) != 0");
  return count_real_roots(restrict_line(p, a), Interval::open(0, 1)) == 0;
}

bool orthant_in_rigid_set(const Polynomial& p) {
  if (p.constant_term() <= 0) throw PreconditionError("orthant test needs p(0) > 0");
  return p.has_nonnegative_coefficients();
}

// ------------------------------------------------------------ determinants

namespace {

std::pair<VariableSet, std::size_t> det_shape(const std::vector<NamedMatrix>& mats) {
  std::vector<std::string> names;
  const std::size_t d = mats.empty() ? 0 : mats.front().second.dim();
  for (const auto& [name, m] : mats) {
    if (m.dim() != d) throw PreconditionError("det_polynomial: matrix dimensions differ");
    names.push_back(name);
  }
  return {VariableSet(std::move(names)), d};
}

Matrix<Polynomial> pencil(const std::vector<NamedMatrix>& mats, const VariableSet& vars, std::size_t d) {
  Matrix<Polynomial> k(d, d, Polynomial(vars));
  for (std::size_t i = 0; i < d; ++i) k(i, i) = Polynomial::constant(1, vars);
  for (const auto& [name, m] : mats) {
    const Polynomial v = Polynomial::variable(vars, name);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (m(i, j) != 0) k(i, j) += v * m(i, j);
  }
  return k;
}

}  // namespace

Polynomial det_polynomial(const std::vector<NamedMatrix>& mats) {
  auto [vars, d] = det_shape(mats);
  if (mats.empty()) return Polynomial::constant(1, vars);
  return berkowitz_determinant(pencil(mats, vars, d), Polynomial::constant(1, vars));
}

Polynomial det_polynomial_cofactor(const std::vector<NamedMatrix>& mats) {
  auto [vars, d] = det_shape(mats);
  if (d > 6) throw GuardError("cofactor determinant limited to dimension 6");
  if (mats.empty()) return Polynomial::constant(1, vars);
  return cofactor_determinant(pencil(mats, vars, d), Polynomial::constant(1, vars));
}

}  // namespace rza

#include "rza/amalgamation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "rza/error.hpp"

namespace rza {

namespace {

Polynomial zero_out(const Polynomial& p, const VariableSet& vars) {
  Polynomial out = p;
  for (const auto& v : vars.names())
    if (out.vars().contains(v)) out = substitute(out, v, Rational(0));
  return out;
}

void require_within(const Polynomial& p, const VariableSet& allowed, const char* which) {
  for (const auto& v : p.occurring_variables()) {
    if (!allowed.contains(v)) throw InputError(std::string(which) + " uses variable '" + v + "' outside its blocks");
  }
}

std::string fresh_name(const std::string& stem, const VariableSet& taken) {
  if (!taken.contains(stem)) return stem;
  for (int k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (!taken.contains(name)) return name;
  }
}

MatrixQ sub(const MatrixQ& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  return m.block(r0, c0, nr, nc);
}

}  // namespace

void validate_problem(const AmalgamationProblem& prob) {
  for (const auto& v : prob.y.names())
    if (prob.x.contains(v) || prob.z.contains(v)) throw InputError("variable '" + v + "' appears in two blocks");
  for (const auto& v : prob.z.names())
    if (prob.x.contains(v)) throw InputError("variable '" + v + "' appears in two blocks");
  require_within(prob.p, prob.x.united(prob.y), "p");
  require_within(prob.q, prob.x.united(prob.z), "q");
}

Polynomial compatibility_difference(const AmalgamationProblem& prob) {
  validate_problem(prob);
  const Polynomial p0 = zero_out(prob.p, prob.y).over(prob.x);
  const Polynomial q0 = zero_out(prob.q, prob.z).over(prob.x);
  return p0 - q0;
}

// ------------------------------------------------------------------ disjoint

DisjointAmalgam amalgamate_disjoint_full(const Polynomial& p, const Polynomial& q, std::optional<unsigned> degree) {
  for (const auto& v : p.occurring_variables()) {
    if (q.vars().contains(v)) throw PreconditionError("disjoint amalgamation: variable '" + v + "' is shared");
  }
  for (const auto& v : q.occurring_variables()) {
    if (p.vars().contains(v)) throw PreconditionError("disjoint amalgamation: variable '" + v + "' is shared");
  }
  const Rational p0 = p.constant_term();
  const Rational q0 = q.constant_term();
  if (p0 == 0 || q0 == 0) throw PreconditionError("disjoint amalgamation needs p(0) != 0 and q(0) != 0");
  if (p0 != q0) {
    throw PreconditionError("disjoint amalgamation needs p(0) = q(0), got " + to_string(p0) + " and " +
                            to_string(q0));
  }
  const unsigned min_d = static_cast<unsigned>(std::max({p.degree(), q.degree(), 0}));
  const unsigned d = degree.value_or(min_d);
  if (d < min_d) throw PreconditionError("amalgamation degree below max(deg p, deg q)");

  const Polynomial pt = p.trimmed() * Rational(1 / p0);
  const Polynomial qt = q.trimmed() * Rational(1 / q0);
  VariableSet all = p.vars();
  for (const auto& v : q.vars().names())
    if (!all.contains(v)) all = all.with(v);
  DisjointAmalgam out;
  out.degree = d;
  out.s = fresh_name("s", all);
  out.t = fresh_name("t", all.with(out.s));

  const Polynomial prod = homogenize(pt, d, out.s) * homogenize(qt, d, out.t);
  Polynomial rt(prod.vars());
  for (unsigned i = 0; i <= d; ++i) {
    rt += partial_derivative(partial_derivative(prod, out.s, i), out.t, d - i);
  }
  // r̃ must be a polynomial in s + t: rebuild it from r̃(u, 0) with u = s + t.
  const VariableSet st{out.s, out.t};
  const Polynomial g = substitute(rt, out.t, Rational(0));
  const Polynomial s_plus_t = Polynomial::variable(st, out.s) + Polynomial::variable(st, out.t);
  if (!(substitute(g, out.s, s_plus_t) == rt)) {
    throw GuardError("operator amalgam is not a polynomial in s + t");
  }
  out.r_tilde = rt;
  Polynomial r = substitute(substitute(rt, out.s, Rational(1)), out.t, Rational(0));
  r *= p0 / factorial(d);
  out.r = r.over(all);
  return out;
}

Polynomial amalgamate_disjoint(const Polynomial& p, const Polynomial& q, std::optional<unsigned> degree) {
  return amalgamate_disjoint_full(p, q, degree).r;
}

// ----------------------------------------------------------------- quadratic

QuadraticAmalgam amalgamate_quadratic_full(const AmalgamationProblem& prob) {
  const Polynomial diff = compatibility_difference(prob);
  if (!diff.is_zero()) throw PreconditionError("incompatible marginals: p(x,0) - q(x,0) = " + format(diff));
  if (prob.p.degree() > 2 || prob.q.degree() > 2) throw PreconditionError("quadratic amalgamation needs degree <= 2");
  const Rational c0 = prob.p.constant_term();
  if (c0 == 0) throw PreconditionError("quadratic amalgamation needs p(0) != 0");

  const VariableSet xy = prob.x.united(prob.y);
  const VariableSet xz = prob.x.united(prob.z);
  const VariableSet xyz = xy.united(prob.z);
  const Polynomial pn = (prob.p * Rational(1 / c0)).over(xy);
  const Polynomial qn = (prob.q * Rational(1 / c0)).over(xz);
  const std::size_t l = prob.x.size(), m = prob.y.size(), n = prob.z.size();

  const QuadraticForm fp = quadratic_form(pn);
  const QuadraticForm fq = quadratic_form(qn);
  QuadraticAmalgam out;
  auto& bl = out.blocks;
  bl.a_mat = SymmetricMatrixQ(sub(fp.a.matrix(), 0, 0, l, l));
  bl.b_mat = SymmetricMatrixQ(sub(fp.a.matrix(), l, l, m, m));
  bl.c_mat = SymmetricMatrixQ(sub(fq.a.matrix(), l, l, n, n));
  bl.e = sub(fp.a.matrix(), 0, l, l, m);
  bl.f = sub(fq.a.matrix(), 0, l, l, n);
  bl.a.assign(fp.b.begin(), fp.b.begin() + l);
  bl.b.assign(fp.b.begin() + l, fp.b.end());
  bl.c.assign(fq.b.begin() + l, fq.b.end());

  out.p_disc = discriminant_matrix(fp);
  out.q_disc = discriminant_matrix(fq);
  if (!is_psd(out.p_disc)) throw PreconditionError("p is not real zero: its discriminant matrix is not PSD");
  if (!is_psd(out.q_disc)) throw PreconditionError("q is not real zero: its discriminant matrix is not PSD");

  out.w = MatrixQ(m, n);
  if (l > 0) {
    const MatrixQ pxx = sub(out.p_disc.matrix(), 0, 0, l, l);
    const MatrixQ qxz = sub(out.q_disc.matrix(), 0, l, l, n);
    auto xsol = solve_linear(pxx, qxz);
    if (!xsol) throw PreconditionError("completion system P_xx X = Q_xz is inconsistent");
    out.w = sub(out.p_disc.matrix(), l, 0, m, l) * *xsol;
  }
  out.g = MatrixQ(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.g(i, j) = (bl.b[i] * bl.c[j] - out.w(i, j)) / 4;

  Polynomial r = pn.over(xyz) + qn.over(xyz) - zero_out(pn, prob.y).over(xyz);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (out.g(i, j) == 0) continue;
      r += Polynomial::variable(xyz, prob.y[i]) * Polynomial::variable(xyz, prob.z[j]) * (2 * out.g(i, j));
    }
  out.joint_disc = discriminant_matrix(quadratic_form(r));
  if (!is_psd(out.joint_disc)) throw GuardError("completed joint discriminant is not PSD");
  out.r = r * c0;
  if (!(zero_out(out.r, prob.z) == prob.p) || !(zero_out(out.r, prob.y) == prob.q)) {
    throw GuardError("quadratic amalgam does not reproduce its marginals");
  }
  return out;
}

Polynomial amalgamate_quadratic(const AmalgamationProblem& prob) { return amalgamate_quadratic_full(prob).r; }

// ------------------------------------------------------------- determinantal

DeterminantalAmalgam amalgamate_determinantal(const std::vector<NamedMatrix>& x_mats,
                                              const std::vector<NamedMatrix>& y_mats,
                                              const std::vector<NamedMatrix>& z_mats) {
  auto join = [](std::vector<NamedMatrix> a, const std::vector<NamedMatrix>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  const auto all = join(join(x_mats, y_mats), z_mats);
  DeterminantalAmalgam out;
  out.r = det_polynomial(all);
  out.p = det_polynomial(join(x_mats, y_mats));
  out.q = det_polynomial(join(x_mats, z_mats));
  return out;
}

// ------------------------------------------------------ averaging identities

WalshCheck walsh_identity(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw PreconditionError("Walsh identity needs |a| = |b|");
  const std::size_t d = a.size();
  if (d > 6) throw GuardError("Walsh identity limited to d <= 6");
  const VariableSet st{"s", "t"};
  const Polynomial s = Polynomial::variable(st, "s");
  const Polynomial t = Polynomial::variable(st, "t");
  const Polynomial one = Polynomial::constant(1, st);

  Polynomial prod = one;
  for (const auto& ai : a) prod *= s + one * ai;
  for (const auto& bi : b) prod *= t + one * bi;
  WalshCheck out;
  out.lhs = Polynomial(st);
  for (unsigned i = 0; i <= d; ++i) out.lhs += partial_derivative(partial_derivative(prod, "s", i), "t", d - i);

  out.rhs = Polynomial(st);
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Polynomial term = one;
    for (std::size_t i = 0; i < d; ++i) term *= s + t + one * (a[i] + b[sigma[i]]);
    out.rhs += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  out.equal = out.lhs == out.rhs;
  return out;
}

bool walsh_identity_check(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return walsh_identity(a, b).equal;
}

Rational permutation_sum(const MatrixQ& a, const std::vector<Rational>& diag, const MatrixQ* u) {
  const std::size_t d = a.rows();
  if (a.cols() != d || diag.size() != d) throw PreconditionError("permutation sum dimension mismatch");
  if (u && (u->rows() != d || u->cols() != d)) throw PreconditionError("conjugating matrix has the wrong size");
  if (d > 6) throw GuardError("permutation sums limited to d <= 6");
  std::vector<std::size_t> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational total = 0;
  do {
    MatrixQ pdp(d, d);
    for (std::size_t i = 0; i < d; ++i) pdp(i, i) = diag[sigma[i]];
    if (u) pdp = u->transposed() * pdp * *u;
    total += determinant(a + pdp);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Rational permutation_average(const SymmetricMatrixQ& a, const SymmetricMatrixQ& d) {
  if (a.dim() != d.dim()) throw PreconditionError("permutation average dimension mismatch");
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (i != j && d(i, j) != 0) throw PreconditionError("permutation average needs a diagonal D");
    diag.push_back(d(i, i));
  }
  return permutation_sum(a.matrix(), diag) / factorial(static_cast<unsigned>(a.dim()));
}

// --------------------------------------------------------------- Monte Carlo

FloatPolynomial FloatPolynomial::constant(double c, const VariableSet& vars) {
  FloatPolynomial p(vars);
  p.add_term(Monomial(vars.size(), 0), c);
  return p;
}

FloatPolynomial FloatPolynomial::variable(const VariableSet& vars, std::string_view name) {
  FloatPolynomial p(vars);
  Monomial m(vars.size(), 0);
  m[vars.require(name)] = 1;
  p.add_term(m, 1.0);
  return p;
}

double FloatPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

void FloatPolynomial::add_term(const Monomial& m, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

FloatPolynomial& FloatPolynomial::operator+=(const FloatPolynomial& rhs) {
  if (vars_.empty()) vars_ = rhs.vars_;
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

FloatPolynomial& FloatPolynomial::operator-=(const FloatPolynomial& rhs) {
  if (vars_.empty()) vars_ = rhs.vars_;
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

FloatPolynomial operator+(FloatPolynomial a, const FloatPolynomial& b) { return a += b; }
FloatPolynomial operator-(FloatPolynomial a, const FloatPolynomial& b) { return a -= b; }
FloatPolynomial operator-(FloatPolynomial a) { return a * -1.0; }

FloatPolynomial operator*(const FloatPolynomial& a, const FloatPolynomial& b) {
  FloatPolynomial out(a.vars().empty() ? b.vars() : a.vars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

FloatPolynomial operator*(FloatPolynomial a, double c) {
  FloatPolynomial out(a.vars());
  for (const auto& [m, v] : a.terms()) out.add_term(m, v * c);
  return out;
}

std::string format(const FloatPolynomial& p, int precision) {
  if (p.terms().empty()) return "0";
  std::ostringstream out;
  out.precision(precision);
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      mono += (mono.empty() ? "" : "*") + p.vars()[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const double mag = first ? c : std::abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    if (mono.empty()) out << mag;
    else if (mag == 1.0) out << mono;
    else if (mag == -1.0) out << "-" << mono;
    else out << mag << "*" << mono;
    first = false;
  }
  return out.str();
}

namespace {

Eigen::MatrixXd to_eigen(const SymmetricMatrixQ& m) {
  Eigen::MatrixXd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with R's
/// diagonal made positive.
Eigen::MatrixXd haar_orthogonal(std::size_t d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = normal(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (std::size_t j = 0; j < d; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

void monomials_up_to(std::size_t n, unsigned degree, Monomial& cur, std::size_t pos,
                     std::vector<Monomial>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur[pos] = e;
    monomials_up_to(n, degree - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

MonteCarloEstimate mc_orthogonal_amalgam(const std::vector<NamedMatrix>& y_mats,
                                         const std::vector<NamedMatrix>& z_mats, std::size_t samples,
                                         std::uint64_t seed) {
  if (y_mats.size() > 2 || z_mats.size() > 2) throw GuardError("Monte Carlo amalgam limited to two matrices per side");
  if (samples == 0) throw PreconditionError("Monte Carlo amalgam needs at least one sample");
  std::vector<std::string> names;
  std::size_t d = 0;
  bool have_dim = false;
  for (const auto* side : {&y_mats, &z_mats})
    for (const auto& [name, m] : *side) {
      if (have_dim && m.dim() != d) throw PreconditionError("Monte Carlo amalgam: matrix dimensions differ");
      d = m.dim();
      have_dim = true;
      names.push_back(name);
    }
  if (d > 5) throw GuardError("Monte Carlo amalgam limited to d <= 5");
  const VariableSet vars(names);

  std::vector<Eigen::MatrixXd> bs, cs;
  for (const auto& [name, m] : y_mats) bs.push_back(to_eigen(m));
  for (const auto& [name, m] : z_mats) cs.push_back(to_eigen(m));

  std::vector<Monomial> monos;
  Monomial cur(vars.size(), 0);
  monomials_up_to(vars.size(), static_cast<unsigned>(d), cur, 0, monos);
  std::vector<double> mean(monos.size(), 0.0), m2(monos.size(), 0.0);

  const FloatPolynomial one = FloatPolynomial::constant(1.0, vars);
  std::vector<FloatPolynomial> var_polys;
  for (const auto& v : names) var_polys.push_back(FloatPolynomial::variable(vars, v));

  for (std::size_t k = 0; k < samples; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    std::mt19937_64 gen(seq);
    std::vector<Eigen::MatrixXd> conj;
    if (!cs.empty()) {
      const Eigen::MatrixXd u = haar_orthogonal(d, gen);
      for (const auto& c : cs) conj.push_back(u.transpose() * c * u);
    }
    Matrix<FloatPolynomial> kmat(d, d, FloatPolynomial(vars));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        FloatPolynomial entry(vars);
        if (i == j) entry += one;
        for (std::size_t v = 0; v < bs.size(); ++v) entry += var_polys[v] * bs[v](i, j);
        for (std::size_t v = 0; v < conj.size(); ++v) entry += var_polys[bs.size() + v] * conj[v](i, j);
        kmat(i, j) = entry;
      }
    const FloatPolynomial det = cofactor_determinant(kmat, one);
    // Welford update; identical samples leave the spread exactly zero.
    const double count = static_cast<double>(k + 1);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      const double x = det.coefficient(monos[i]);
      const double delta = x - mean[i];
      mean[i] += delta / count;
      m2[i] += delta * (x - mean[i]);
    }
  }

  MonteCarloEstimate est;
  est.mean = FloatPolynomial(vars);
  est.samples = samples;
  est.seed = seed;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const double se = samples > 1 ? std::sqrt(m2[i] / static_cast<double>(samples - 1) / static_cast<double>(samples))
                                  : 0.0;
    if (mean[i] == 0.0 && se == 0.0) continue;
    est.mean.add_term(monos[i], mean[i]);
    est.std_error[monos[i]] = se;
  }
  return est;
}

}  // namespace rza

#include "rza/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rza/error.hpp"

namespace rza {

// ---------------------------------------------------------------- VariableSet

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

VariableSet::VariableSet(std::initializer_list<std::string> names)
    : VariableSet(std::vector<std::string>(names)) {}

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableSet::require(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  return *idx;
}

VariableSet VariableSet::united(const VariableSet& other) const {
  if (other == *this) return *this;
  std::vector<std::string> names = names_;
  for (const auto& n : other.names_) {
    if (!contains(n)) names.push_back(n);
  }
  return VariableSet(std::move(names));
}

VariableSet VariableSet::with(std::string name) const {
  std::vector<std::string> names = names_;
  names.push_back(std::move(name));
  return VariableSet(std::move(names));
}

VariableSet VariableSet::without(std::string_view name) const {
  std::vector<std::string> names;
  for (const auto& n : names_) {
    if (n != name) names.push_back(n);
  }
  return VariableSet(std::move(names));
}

bool natural_less(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    return std::pair{s.substr(0, cut), s.substr(cut)};
  };
  auto [stem_a, num_a] = split(a);
  auto [stem_b, num_b] = split(b);
  if (stem_a != stem_b) return stem_a < stem_b;
  if (num_a.empty() != num_b.empty()) return num_a.empty();
  if (num_a.size() != num_b.size()) return num_a.size() < num_b.size();
  return num_a < num_b;
}

// ------------------------------------------------------------------ Monomials

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ----------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Rational& c, VariableSet vars) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial(p.vars().size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VariableSet vars, std::string_view name) {
  Polynomial p(std::move(vars));
  Monomial m(p.vars().size(), 0);
  m[p.vars().require(name)] = 1;
  p.add_term(m, 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return kZeroDegree;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(vars_.size(), 0)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_multi_affine() const {
  for (const auto& [m, c] : terms_) {
    for (auto e : m) {
      if (e > 1) return false;
    }
  }
  return true;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

bool Polynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

std::vector<std::string> Polynomial::occurring_variables() const {
  std::vector<bool> seen(vars_.size(), false);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) seen[i] = true;
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(vars_[i]);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.size() != vars_.size()) throw GuardError("monomial length does not match variable count");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::over(const VariableSet& target) const {
  if (target == vars_) return *this;
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.index_of(vars_[i]);
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial n(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) {
        throw PreconditionError("variable '" + vars_[i] + "' does not embed into the target variable set");
      }
      n[*map[i]] = m[i];
    }
    out.terms_.emplace(std::move(n), c);
  }
  return out;
}

Polynomial Polynomial::trimmed() const { return over(VariableSet(occurring_variables())); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) {
    const VariableSet u = vars_.united(rhs.vars_);
    *this = over(u);
    return *this += rhs.over(u);
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) {
    const VariableSet u = vars_.united(rhs.vars_);
    *this = over(u);
    return *this -= rhs.over(u);
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const VariableSet u = a.vars_.united(b.vars_);
  return a.over(u).terms_ == b.over(u).terms_;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) {
    const VariableSet u = a.vars().united(b.vars());
    return a.over(u) * b.over(u);
  }
  Polynomial out(a.vars());
  Monomial m(a.vars().size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1, p.vars());
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial arith(ArithOp op, const Polynomial& lhs, const Polynomial& rhs, long exponent) {
  switch (op) {
    case ArithOp::kAdd:
      return lhs + rhs;
    case ArithOp::kSub:
      return lhs - rhs;
    case ArithOp::kMul:
      return lhs * rhs;
    case ArithOp::kPow:
      if (exponent < 0) throw PreconditionError("pow with negative exponent");
      return pow(lhs, static_cast<unsigned>(exponent));
  }
  throw GuardError("unknown arithmetic operation");
}

// ------------------------------------------------------ structural operators

namespace {

void check_length(const Polynomial& p, std::size_t n, const char* what) {
  if (p.vars().size() != n) {
    throw PreconditionError(std::string(what) + ": vector length " + std::to_string(n) +
                            " does not match variable count " + std::to_string(p.vars().size()));
  }
}

// powers[i][k] = base_i^k for k up to the degree of variable i in p.
template <typename T, typename Mul>
std::vector<std::vector<T>> power_table(const Polynomial& p, const std::vector<T>& bases, T one,
                                        Mul mul) {
  std::vector<std::vector<T>> powers(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const int d = std::max(0, p.degree_in(i));
    powers[i].reserve(d + 1);
    powers[i].push_back(one);
    for (int k = 1; k <= d; ++k) powers[i].push_back(mul(powers[i].back(), bases[i]));
  }
  return powers;
}

}  // namespace

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  check_length(p, point.size(), "evaluate");
  std::vector<Rational> bases(point.begin(), point.end());
  auto powers = power_table<Rational>(p, bases, Rational(1),
                                      [](const Rational& a, const Rational& b) { return Rational(a * b); });
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m[i]) term *= powers[i][m[i]];
    }
    total += term;
  }
  return total;
}

Polynomial substitute(const Polynomial& p, std::string_view var, const Rational& value) {
  const std::size_t idx = p.vars().require(var);
  Polynomial out(p.vars());
  std::vector<Rational> powers{1};
  for (const auto& [m, c] : p.terms()) {
    while (powers.size() <= m[idx]) powers.push_back(powers.back() * value);
    Monomial n = m;
    n[idx] = 0;
    out.add_term(n, c * powers[m[idx]]);
  }
  return out;
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images, const VariableSet& target) {
  check_length(p, images.size(), "compose");
  std::vector<Polynomial> bases;
  bases.reserve(images.size());
  for (const auto& img : images) bases.push_back(img.over(target));
  auto powers = power_table<Polynomial>(p, bases, Polynomial::constant(1, target),
                                        [](const Polynomial& a, const Polynomial& b) { return a * b; });
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(c, target);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) term = term * powers[i][m[i]];
    }
    out += term;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& image) {
  const std::size_t idx = p.vars().require(var);
  const VariableSet target = p.vars().united(image.vars());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    images.push_back(i == idx ? image : Polynomial::variable(target, p.vars()[i]));
  }
  return compose(p, images, target);
}

UnivariatePolynomial restrict_line(const Polynomial& p, std::span<const Rational> a,
                                   std::span<const Rational> b) {
  check_length(p, a.size(), "restrict_line");
  check_length(p, b.size(), "restrict_line");
  std::vector<UnivariatePolynomial> bases;
  for (std::size_t i = 0; i < a.size(); ++i) bases.emplace_back(std::vector<Rational>{b[i], a[i]});
  auto powers = power_table<UnivariatePolynomial>(
      p, bases, UnivariatePolynomial::constant(1),
      [](const UnivariatePolynomial& x, const UnivariatePolynomial& y) { return x * y; });
  UnivariatePolynomial out;
  for (const auto& [m, c] : p.terms()) {
    UnivariatePolynomial term = UnivariatePolynomial::constant(c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m[i]) term = term * powers[i][m[i]];
    }
    out += term;
  }
  return out;
}

UnivariatePolynomial restrict_line(const Polynomial& p, std::span<const Rational> a) {
  check_length(p, a.size(), "restrict_line");
  // Homogeneous components scale by t^k, so no expansion is needed.
  std::vector<Rational> coeffs(std::max(0, p.degree()) + 1);
  std::vector<Rational> bases(a.begin(), a.end());
  auto powers = power_table<Rational>(p, bases, Rational(1),
                                      [](const Rational& x, const Rational& y) { return Rational(x * y); });
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m[i]) term *= powers[i][m[i]];
    }
    coeffs[total_degree(m)] += term;
  }
  return UnivariatePolynomial(std::move(coeffs));
}

Polynomial shift(const Polynomial& p, std::span<const Rational> a) {
  check_length(p, a.size(), "shift");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.size(); ++i) {
    images.push_back(Polynomial::variable(p.vars(), p.vars()[i]) + Polynomial::constant(a[i], p.vars()));
  }
  return compose(p, images, p.vars());
}

Polynomial homogenize(const Polynomial& p, unsigned d, const std::string& newvar) {
  if (p.vars().contains(newvar)) {
    throw PreconditionError("homogenizing variable '" + newvar + "' already in use");
  }
  if (static_cast<int>(d) < p.degree()) {
    throw PreconditionError("homogenization degree " + std::to_string(d) + " below polynomial degree " +
                            std::to_string(p.degree()));
  }
  Polynomial out(p.vars().with(newvar));
  for (const auto& [m, c] : p.terms()) {
    Monomial n = m;
    n.push_back(d - total_degree(m));
    out.add_term(n, c);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var, unsigned order) {
  const auto idx = p.vars().index_of(var);
  if (!idx) throw PreconditionError("derivative variable '" + std::string(var) + "' not in variable set");
  Polynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[*idx] < order) continue;
    Rational factor = c;
    for (unsigned k = 0; k < order; ++k) factor *= m[*idx] - k;
    Monomial n = m;
    n[*idx] -= order;
    out.add_term(n, factor);
  }
  return out;
}

Polynomial multi_affine_part(const Polynomial& p) {
  Polynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (std::all_of(m.begin(), m.end(), [](Exponent e) { return e <= 1; })) out.add_term(m, c);
  }
  return out;
}

Polynomial homogeneous_component(const Polynomial& p, unsigned k) {
  Polynomial out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) == k) out.add_term(m, c);
  }
  return out;
}

Polynomial elementary_symmetric(const VariableSet& vars, unsigned k) {
  const std::size_t n = vars.size();
  if (k > n) {
    throw PreconditionError("e_" + std::to_string(k) + " requested in " + std::to_string(n) + " variables");
  }
  Polynomial out(vars);
  // Walk k-subsets as index combinations in lexicographic order.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Monomial m(n, 0);
    for (auto i : pick) m[i] = 1;
    out.add_term(m, 1);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<std::uint64_t> support(const Polynomial& p) {
  if (!p.is_multi_affine()) throw PreconditionError("support requires a multi-affine polynomial");
  if (p.vars().size() > 64) throw GuardError("support limited to 64 variables");
  std::vector<std::uint64_t> out;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) mask |= std::uint64_t{1} << i;
    }
    out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------- text round trip

std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, coeff] : p.terms()) {
    Rational c = coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = total_degree(m) == 0;
    if (constant) {
      out << to_string(c);
      continue;
    }
    bool need_star = false;
    if (c != 1) {
      out << to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << p.vars()[i];
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse_poly() {
    Polynomial result(vars_);
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    add_term(result, negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      add_term(result, op == '-');
    }
    return result;
  }

 private:
  void add_term(Polynomial& acc, bool negative) {
    skip_ws();
    Rational coeff = 1;
    Monomial m(vars_.size(), 0);
    bool expect_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      skip_ws();
      if (peek() != '*') expect_factor = false;
      else ++pos_;
    }
    while (expect_factor) {
      skip_ws();
      parse_factor(m);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    acc.add_term(m, negative ? Rational(-coeff) : coeff);
  }

  Rational parse_coefficient() {
    Integer num(read_digits());
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      den = Integer(read_digits());
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  void parse_factor(Monomial& m) {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable name");
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto idx = vars_.index_of(name);
    if (!idx) throw InputError("unknown variable '" + std::string(name) + "' at position " + std::to_string(start));
    unsigned long exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::string digits = read_digits();
      exponent = std::stoul(digits);
      if (exponent == 0) fail("exponent must be positive");
    }
    m[*idx] += static_cast<Exponent>(exponent);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  const VariableSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const VariableSet& vars) {
  Parser parser(text, vars);
  return parser.parse_poly();
}

Polynomial parse(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (std::isdigit(ch)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    if (std::isalpha(ch)) {
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(std::move(name));
      continue;
    }
    ++i;
  }
  std::sort(names.begin(), names.end(), natural_less);
  return parse(text, VariableSet(std::move(names)));
}

}  // namespace rza

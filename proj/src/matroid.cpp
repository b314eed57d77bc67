#include "rza/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rza {

namespace {

std::vector<Subset> sorted_unique(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<bool> membership(std::size_t n, const std::vector<Subset>& family) {
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Subset s : family) member[s] = true;
  return member;
}

/// Re-indexes a subset of `from` into `to`; every element must exist in `to`.
Subset translate(Subset s, const GroundSet& from, const GroundSet& to) {
  Subset out = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!(s >> i & 1U)) continue;
    auto j = to.index_of(from[i]);
    if (!j) throw GuardError("translate: label " + from[i] + " missing");
    out |= Subset{1} << *j;
  }
  return out;
}

/// Ground set of the elements of `s`, in the order of `g`.
GroundSet sub_ground(const GroundSet& g, Subset s) { return GroundSet(g.names(s)); }

}  // namespace

// ------------------------------------------------------------------ GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxGround) {
    throw InputError("ground set has " + std::to_string(labels_.size()) + " elements; at most " +
                     std::to_string(kMaxGround) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty ground set label");
    if (!seen.insert(l).second) throw InputError("duplicate ground set label '" + l + "'");
  }
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Subset GroundSet::subset(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw InputError("unknown ground set label '" + l + "'");
    s |= Subset{1} << *i;
  }
  return s;
}

std::vector<std::string> GroundSet::names(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (s >> i & 1U) out.push_back(labels_[i]);
  return out;
}

std::string GroundSet::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : names(s)) {
    out += (first ? "" : ", ") + l;
    first = false;
  }
  return out + "}";
}

// -------------------------------------------------------------------- Matroid

std::optional<BasisExchangeFailure> find_exchange_failure(std::size_t n, const std::vector<Subset>& bases) {
  const auto member = membership(n, bases);
  for (Subset b : bases) {
    for (Subset c : bases) {
      const Subset diff = b & ~c;
      for (std::size_t x = 0; x < n; ++x) {
        if (!(diff >> x & 1U)) continue;
        bool found = false;
        const Subset rest = c & ~b;
        for (std::size_t y = 0; y < n && !found; ++y) {
          if (rest >> y & 1U) found = member[(b & ~(Subset{1} << x)) | (Subset{1} << y)];
        }
        if (!found) return BasisExchangeFailure{b, c, x};
      }
    }
  }
  return std::nullopt;
}

Matroid::Matroid(GroundSet ground, std::vector<Subset> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  is_basis_ = membership(ground_.size(), bases_);
  rank_ = popcount(bases_.front());
}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Subset> bases) {
  if (bases.empty()) throw MatroidAxiomError("matroid needs at least one basis");
  for (Subset b : bases) {
    if (b & ~ground.full()) throw InputError("basis uses elements outside the ground set");
  }
  bases = sorted_unique(std::move(bases));
  const int r = popcount(bases.front());
  for (Subset b : bases) {
    if (popcount(b) != r) {
      throw MatroidAxiomError("bases have unequal cardinalities: " + ground.format(bases.front()) + " and " +
                              ground.format(b));
    }
  }
  if (auto f = find_exchange_failure(ground.size(), bases)) {
    throw MatroidAxiomError("basis exchange fails: B=" + ground.format(f->b) + ", C=" + ground.format(f->c) +
                                ", x=" + ground[f->x] + " has no replacement in C \\ B",
                            f);
  }
  return Matroid(std::move(ground), std::move(bases));
}

Matroid Matroid::from_bases(const std::vector<std::string>& ground,
                            const std::vector<std::vector<std::string>>& bases) {
  GroundSet g(ground);
  std::vector<Subset> masks;
  for (const auto& b : bases) {
    const Subset s = g.subset(b);
    if (static_cast<std::size_t>(popcount(s)) != b.size()) throw InputError("basis lists a label twice");
    masks.push_back(s);
  }
  return from_bases(std::move(g), std::move(masks));
}

Matroid Matroid::uniform(std::size_t rank, const std::vector<std::string>& ground) {
  GroundSet g(ground);
  if (rank > g.size()) throw PreconditionError("uniform matroid rank exceeds ground set size");
  std::vector<Subset> bases;
  for (Subset s = 0; s <= g.full(); ++s)
    if (static_cast<std::size_t>(popcount(s)) == rank) bases.push_back(s);
  return from_bases(std::move(g), std::move(bases));
}

bool Matroid::is_basis(Subset s) const { return s <= ground_.full() && is_basis_[s]; }

int Matroid::rank(Subset a) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, popcount(a & b));
  return best;
}

Subset Matroid::closure(Subset a) const {
  const int r = rank(a);
  Subset cl = a;
  for (std::size_t x = 0; x < ground_.size(); ++x) {
    const Subset bit = Subset{1} << x;
    if (!(a & bit) && rank(a | bit) == r) cl |= bit;
  }
  return cl;
}

std::vector<Subset> Matroid::flats() const {
  std::vector<Subset> out;
  for (Subset s = 0; s <= ground_.full(); ++s)
    if (closure(s) == s) out.push_back(s);
  return out;
}

Subset Matroid::loops() const {
  Subset any = 0;
  for (Subset b : bases_) any |= b;
  return ground_.full() & ~any;
}

Subset Matroid::coloops() const {
  Subset all = ground_.full();
  for (Subset b : bases_) all &= b;
  return all;
}

bool operator==(const Matroid& a, const Matroid& b) {
  if (a.ground_.size() != b.ground_.size()) return false;
  for (const auto& l : a.ground_.labels())
    if (!b.ground_.index_of(l)) return false;
  if (a.bases_.size() != b.bases_.size()) return false;
  for (Subset s : a.bases_)
    if (!b.is_basis(translate(s, a.ground_, b.ground_))) return false;
  return true;
}

Matroid restriction(const Matroid& m, Subset a) {
  const int r = m.rank(a);
  const GroundSet g = sub_ground(m.ground(), a);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if (popcount(b & a) == r) bases.push_back(translate(b & a, m.ground(), g));
  return Matroid::from_bases(g, std::move(bases));
}

Matroid restriction(const Matroid& m, const std::vector<std::string>& labels) {
  return restriction(m, m.ground().subset(labels));
}

Matroid contraction(const Matroid& m, Subset a) {
  const int r = m.rank(a);
  const Subset rest = m.ground().full() & ~a;
  const GroundSet g = sub_ground(m.ground(), rest);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if (popcount(b & a) == r) bases.push_back(translate(b & rest, m.ground(), g));
  return Matroid::from_bases(g, std::move(bases));
}

Matroid contraction(const Matroid& m, const std::vector<std::string>& labels) {
  return contraction(m, m.ground().subset(labels));
}

Polynomial bases_generating_poly(const Matroid& m) {
  const VariableSet vars(m.ground().labels());
  Polynomial p(vars);
  for (Subset b : m.bases()) {
    Monomial mono(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) mono[i] = b >> i & 1U;
    p.add_term(mono, 1);
  }
  return p;
}

bool is_modular(const Matroid& m) {
  const auto fl = m.flats();
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t j = i + 1; j < fl.size(); ++j) {
      if (m.rank(fl[i] & fl[j]) + m.rank(fl[i] | fl[j]) != m.rank(fl[i]) + m.rank(fl[j])) return false;
    }
  return true;
}

Matroid poljak_turzik(PoljakTurzik which) {
  const bool first = which == PoljakTurzik::kM1;
  const std::string extra = first ? "y" : "z";
  const GroundSet g({"x1", "x2", "x3", "x4", "x5", "x6", extra});
  std::vector<std::vector<std::string>> excluded = {{extra, "x1", "x4"}, {extra, "x2", "x5"},
                                                     {"x1", "x2", "x3"}, {"x4", "x5", "x6"}};
  if (first) excluded.push_back({extra, "x3", "x6"});
  std::vector<Subset> skip;
  for (const auto& e : excluded) skip.push_back(g.subset(e));
  std::vector<Subset> bases;
  for (Subset s = 0; s <= g.full(); ++s) {
    if (popcount(s) == 3 && std::find(skip.begin(), skip.end(), s) == skip.end()) bases.push_back(s);
  }
  return Matroid::from_bases(g, std::move(bases));
}

Matroid support_matroid(const Polynomial& p) {
  if (!p.is_homogeneous()) throw PreconditionError("support_matroid needs a homogeneous polynomial");
  const GroundSet g(p.vars().names());
  std::vector<Subset> bases;
  for (auto s : support(p)) bases.push_back(static_cast<Subset>(s));
  return Matroid::from_bases(g, std::move(bases));
}

// ------------------------------------------------------------------- amalgams

bool RankTable::satisfies_axioms() const {
  const std::size_t n = ground.size();
  if (values.size() != (std::size_t{1} << n) || values[0] != 0) return false;
  for (Subset s = 0; s < values.size(); ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      const Subset bx = Subset{1} << x;
      if (s & bx) continue;
      const int d = values[s | bx] - values[s];
      if (d < 0 || d > 1) return false;
      for (std::size_t y = x + 1; y < n; ++y) {
        const Subset by = Subset{1} << y;
        if (s & by) continue;
        if (values[s | bx | by] + values[s] > values[s | bx] + values[s | by]) return false;
      }
    }
  }
  return true;
}

RankTable rank_table(const Matroid& m) {
  if (m.ground().size() > kMaxAmalgamGround) throw GuardError("rank table limited to 10 elements");
  RankTable t{m.ground(), std::vector<int>(std::size_t{1} << m.ground().size())};
  for (Subset s = 0; s < t.values.size(); ++s) t.values[s] = m.rank(s);
  return t;
}

std::string_view to_string(AmalgamResult::Kind k) {
  switch (k) {
    case AmalgamResult::Kind::kAmalgam:
      return "Amalgam";
    case AmalgamResult::Kind::kInfeasible:
      return "Infeasible";
    case AmalgamResult::Kind::kIncompatibleRestrictions:
      return "IncompatibleRestrictions";
  }
  return "?";
}

AmalgamResult amalgam_search(const Matroid& m1, const Matroid& m2, std::uint64_t max_nodes) {
  std::vector<std::string> labels = m1.ground().labels();
  std::vector<std::string> shared;
  for (const auto& l : m2.ground().labels()) {
    if (m1.ground().index_of(l)) shared.push_back(l);
    else labels.push_back(l);
  }
  if (labels.size() > kMaxAmalgamGround) {
    throw GuardError("amalgam search limited to " + std::to_string(kMaxAmalgamGround) + " elements, got " +
                     std::to_string(labels.size()));
  }
  AmalgamResult result;
  const Matroid r1 = restriction(m1, shared);
  const Matroid r2 = restriction(m2, shared);
  if (!(r1 == r2)) {
    result.kind = AmalgamResult::Kind::kIncompatibleRestrictions;
    result.detail = "restrictions to the shared elements differ";
    return result;
  }

  const GroundSet u(labels);
  const std::size_t n = u.size();
  const Subset s1 = u.subset(m1.ground().labels());
  const Subset s2 = u.subset(m2.ground().labels());
  std::vector<int> r(std::size_t{1} << n, -1);
  std::vector<Subset> unknown;
  std::vector<Subset> order(r.size());
  std::iota(order.begin(), order.end(), Subset{0});
  std::stable_sort(order.begin(), order.end(), [](Subset a, Subset b) { return popcount(a) < popcount(b); });
  for (Subset s : order) {
    if ((s & ~s1) == 0) r[s] = m1.rank(translate(s, u, m1.ground()));
    else if ((s & ~s2) == 0) r[s] = m2.rank(translate(s, u, m2.ground()));
    else unknown.push_back(s);
  }

  // Feasible values for r(X) given all proper subsets: unit increase plus the
  // local form of submodularity, which is equivalent to the global one.
  auto bounds = [&](Subset x_set, int& lo, int& hi) {
    lo = 0;
    hi = popcount(x_set);
    for (std::size_t i = 0; i < n; ++i) {
      const Subset bi = Subset{1} << i;
      if (!(x_set & bi)) continue;
      const int ri = r[x_set & ~bi];
      lo = std::max(lo, ri);
      hi = std::min(hi, ri + 1);
      for (std::size_t j = i + 1; j < n; ++j) {
        const Subset bj = Subset{1} << j;
        if (!(x_set & bj)) continue;
        hi = std::min(hi, ri + r[x_set & ~bj] - r[x_set & ~bi & ~bj]);
      }
    }
  };

  std::vector<int> top(unknown.size());
  std::ptrdiff_t k = 0;
  const auto count = static_cast<std::ptrdiff_t>(unknown.size());
  while (k >= 0 && k < count) {
    int lo = 0, hi = 0;
    bounds(unknown[k], lo, hi);
    if (lo <= hi) {
      r[unknown[k]] = lo;
      top[k] = hi;
      ++k;
    } else {
      // Back up to the latest subset that still has an untried value.
      while (--k >= 0) {
        if (r[unknown[k]] < top[k]) {
          ++r[unknown[k]];
          ++k;
          break;
        }
        r[unknown[k]] = -1;
      }
    }
    if (++result.nodes > max_nodes) {
      throw GuardError("amalgam search exceeded " + std::to_string(max_nodes) + " nodes");
    }
  }
  if (k < 0) {
    result.kind = AmalgamResult::Kind::kInfeasible;
    result.detail = "no rank function on " + u.format(u.full()) + " restricts to both matroids";
    return result;
  }

  RankTable table{u, r};
  if (!table.satisfies_axioms()) throw GuardError("amalgam search produced an invalid rank table");
  const int full = r[u.full()];
  std::vector<Subset> bases;
  for (Subset s = 0; s <= u.full(); ++s)
    if (r[s] == full && popcount(s) == full) bases.push_back(s);
  Matroid amalgam = Matroid::from_bases(u, std::move(bases));
  if (!(restriction(amalgam, s1) == m1) || !(restriction(amalgam, s2) == m2)) {
    throw GuardError("amalgam search result does not restrict to the inputs");
  }
  result.kind = AmalgamResult::Kind::kAmalgam;
  result.amalgam = std::move(amalgam);
  return result;
}

// ------------------------------------------------------------- delta-matroids

DeltaMatroid::DeltaMatroid(GroundSet ground, std::vector<Subset> feasible)
    : ground_(std::move(ground)), feasible_(sorted_unique(std::move(feasible))) {
  if (feasible_.empty()) throw InputError("delta-matroid needs at least one feasible set");
  for (Subset f : feasible_) {
    if (f & ~ground_.full()) throw InputError("feasible set uses elements outside the ground set");
  }
  member_ = membership(ground_.size(), feasible_);
}

DeltaMatroid DeltaMatroid::from_sets(const std::vector<std::string>& ground,
                                     const std::vector<std::vector<std::string>>& feasible) {
  GroundSet g(ground);
  std::vector<Subset> masks;
  for (const auto& f : feasible) masks.push_back(g.subset(f));
  return DeltaMatroid(std::move(g), std::move(masks));
}

bool DeltaMatroid::contains(Subset s) const { return s <= ground_.full() && member_[s]; }

bool ExchangeCheck::satisfied() const {
  return std::any_of(candidates.begin(), candidates.end(), [](const ExchangeCandidate& c) { return c.feasible; });
}

ExchangeCheck exchange_check(const DeltaMatroid& d, Subset a, Subset b, std::size_t x) {
  const Subset sym = a ^ b;
  if (x >= d.ground().size() || !(sym >> x & 1U)) {
    throw PreconditionError("exchange check needs x in the symmetric difference");
  }
  ExchangeCheck check{a, b, x, {}};
  for (std::size_t y = 0; y < d.ground().size(); ++y) {
    if (!(sym >> y & 1U)) continue;
    const Subset s = a ^ (Subset{1} << x) ^ (y == x ? 0 : Subset{1} << y);
    check.candidates.push_back({y, s, d.contains(s)});
  }
  return check;
}

namespace {

template <typename Visit>
void for_each_failure(const DeltaMatroid& d, Visit&& visit) {
  const std::size_t n = d.ground().size();
  for (Subset a : d.feasible()) {
    for (Subset b : d.feasible()) {
      const Subset sym = a ^ b;
      for (std::size_t x = 0; x < n; ++x) {
        if (!(sym >> x & 1U)) continue;
        bool ok = false;
        for (std::size_t y = 0; y < n && !ok; ++y) {
          if (sym >> y & 1U) ok = d.contains(a ^ (Subset{1} << x) ^ (y == x ? 0 : Subset{1} << y));
        }
        if (!ok && !visit(a, b, x)) return;
      }
    }
  }
}

}  // namespace

DeltaCheck is_delta_matroid(const DeltaMatroid& d) {
  DeltaCheck out;
  for_each_failure(d, [&](Subset a, Subset b, std::size_t x) {
    if (!out.witness) out.witness = exchange_check(d, a, b, x);
    ++out.failing_triples;
    return true;
  });
  out.ok = out.failing_triples == 0;
  return out;
}

std::vector<ExchangeCheck> exchange_failures(const DeltaMatroid& d) {
  std::vector<ExchangeCheck> out;
  for_each_failure(d, [&](Subset a, Subset b, std::size_t x) {
    out.push_back(exchange_check(d, a, b, x));
    return true;
  });
  return out;
}

namespace {

std::vector<Subset> extremal(const std::vector<Subset>& family, bool minimal) {
  std::vector<Subset> out;
  for (Subset s : family) {
    bool extreme = true;
    for (Subset t : family) {
      if (t == s) continue;
      const bool inside = minimal ? (t & ~s) == 0 : (s & ~t) == 0;
      if (inside) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(s);
  }
  return out;
}

}  // namespace

Matroid lower_matroid(const DeltaMatroid& d) { return Matroid::from_bases(d.ground(), extremal(d.feasible(), true)); }

Matroid upper_matroid(const DeltaMatroid& d) { return Matroid::from_bases(d.ground(), extremal(d.feasible(), false)); }

DeltaMatroid support_family(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("support of the zero polynomial is empty");
  const GroundSet g(p.vars().names());
  std::vector<Subset> masks;
  for (auto s : support(p)) masks.push_back(static_cast<Subset>(s));
  return DeltaMatroid(g, std::move(masks));
}

}  // namespace rza

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rza/error.hpp"
#include "rza/polynomial.hpp"

namespace rza {

/// Subset of a ground set, bit i <=> element i.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxGround = 16;
inline constexpr std::size_t kMaxAmalgamGround = 10;

inline int popcount(Subset s) { return __builtin_popcount(s); }

/// Labelled ground set shared by matroids and delta-matroids.
class GroundSet {
 public:
  GroundSet() = default;
  /// Throws InputError on duplicates or more than kMaxGround labels.
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }
  Subset full() const { return (Subset{1} << size()) - 1; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Throws InputError on an unknown label.
  Subset subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> names(Subset s) const;
  /// "{x1, x4, y}".
  std::string format(Subset s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Failure of the basis exchange axiom: no y in C \ B with B - x + y a basis.
struct BasisExchangeFailure {
  Subset b = 0;
  Subset c = 0;
  std::size_t x = 0;
};

/// Raised by from_bases. `exchange` is set when the exchange axiom fails.
class MatroidAxiomError : public PreconditionError {
 public:
  MatroidAxiomError(const std::string& what, std::optional<BasisExchangeFailure> exchange = std::nullopt)
      : PreconditionError(what), exchange_(exchange) {}
  const std::optional<BasisExchangeFailure>& exchange() const { return exchange_; }

 private:
  std::optional<BasisExchangeFailure> exchange_;
};

/// First exchange failure in canonical order (B, then C by mask, then x by
/// index), or nullopt. Assumes the bases are equinumerous.
std::optional<BasisExchangeFailure> find_exchange_failure(std::size_t n, const std::vector<Subset>& bases);

/// Matroid given by its bases; validated on construction and immutable.
class Matroid {
 public:
  /// Throws MatroidAxiomError for an empty family, unequal sizes or an
  /// exchange failure (with witness).
  static Matroid from_bases(GroundSet ground, std::vector<Subset> bases);
  static Matroid from_bases(const std::vector<std::string>& ground,
                            const std::vector<std::vector<std::string>>& bases);
  static Matroid uniform(std::size_t rank, const std::vector<std::string>& ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const;
  int rank() const { return rank_; }

  int rank(Subset a) const;
  Subset closure(Subset a) const;
  bool is_independent(Subset a) const { return rank(a) == popcount(a); }
  /// All flats in increasing mask order.
  std::vector<Subset> flats() const;
  Subset loops() const;
  Subset coloops() const;

  /// Equal ground sets (as label sets) and equal bases, matched by label.
  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  Matroid(GroundSet ground, std::vector<Subset> bases);

  GroundSet ground_;
  std::vector<Subset> bases_;
  std::vector<bool> is_basis_;
  int rank_ = 0;
};

/// M|A on the elements of A, kept in the order of M's ground set.
Matroid restriction(const Matroid& m, Subset a);
Matroid restriction(const Matroid& m, const std::vector<std::string>& labels);
/// M/A on the complement of A.
Matroid contraction(const Matroid& m, Subset a);
Matroid contraction(const Matroid& m, const std::vector<std::string>& labels);

/// Σ over bases of the product of their labels, over the ground labels.
Polynomial bases_generating_poly(const Matroid& m);

/// r(F ∩ G) + r(F ∪ G) = r(F) + r(G) for every pair of flats.
bool is_modular(const Matroid& m);

enum class PoljakTurzik { kM1, kM2 };
Matroid poljak_turzik(PoljakTurzik which);

/// from_bases(support(p)) for a multi-affine homogeneous p, over p.vars().
Matroid support_matroid(const Polynomial& p);

// ---------------------------------------------------------------- amalgams

/// Rank function on all subsets of a ground set of at most kMaxAmalgamGround elements.
struct RankTable {
  GroundSet ground;
  std::vector<int> values;

  /// r(∅) = 0, unit increase and submodularity on every pair.
  bool satisfies_axioms() const;
};

RankTable rank_table(const Matroid& m);

struct AmalgamResult {
  enum class Kind { kAmalgam, kInfeasible, kIncompatibleRestrictions };
  Kind kind = Kind::kInfeasible;
  std::optional<Matroid> amalgam;
  std::uint64_t nodes = 0;
  std::string detail;
};

std::string_view to_string(AmalgamResult::Kind k);

/// Decides whether some matroid on exactly S1 ∪ S2 restricts to m1 and m2, by
/// backtracking over rank values (subsets in cardinality order, smaller value
/// first). Refuses unions above kMaxAmalgamGround and searches above
/// `max_nodes` with GuardError.
AmalgamResult amalgam_search(const Matroid& m1, const Matroid& m2, std::uint64_t max_nodes = 50'000'000);

// ----------------------------------------------------------- delta-matroids

/// Feasible family on a ground set. Construction does not check the
/// symmetric exchange property; use is_delta_matroid for that.
class DeltaMatroid {
 public:
  /// Raw family; throws InputError only when it is empty.
  DeltaMatroid(GroundSet ground, std::vector<Subset> feasible);
  static DeltaMatroid from_sets(const std::vector<std::string>& ground,
                                const std::vector<std::vector<std::string>>& feasible);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& feasible() const { return feasible_; }
  bool contains(Subset s) const;

 private:
  GroundSet ground_;
  std::vector<Subset> feasible_;
  std::vector<bool> member_;
};

/// A △ {x, y} for one y ∈ A △ B, and whether it is feasible.
struct ExchangeCandidate {
  std::size_t y = 0;
  Subset set = 0;
  bool feasible = false;
};

/// Triple (A, B, x) with x ∈ A △ B together with every candidate exchange.
struct ExchangeCheck {
  Subset a = 0;
  Subset b = 0;
  std::size_t x = 0;
  std::vector<ExchangeCandidate> candidates;
  bool satisfied() const;
};

ExchangeCheck exchange_check(const DeltaMatroid& d, Subset a, Subset b, std::size_t x);

struct DeltaCheck {
  bool ok = true;
  /// First failing triple: A, then B in increasing mask order, then x by index.
  std::optional<ExchangeCheck> witness;
  std::size_t failing_triples = 0;
};

DeltaCheck is_delta_matroid(const DeltaMatroid& d);
/// Every failing triple in canonical order.
std::vector<ExchangeCheck> exchange_failures(const DeltaMatroid& d);

/// Matroids from the inclusion-minimal / inclusion-maximal feasible sets.
/// MatroidAxiomError signals that d was not a delta-matroid.
Matroid lower_matroid(const DeltaMatroid& d);
Matroid upper_matroid(const DeltaMatroid& d);

/// Support family of a multi-affine polynomial, over p.vars().
DeltaMatroid support_family(const Polynomial& p);

}  // namespace rza

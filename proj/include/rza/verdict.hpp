#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rza/rational.hpp"

namespace rza {

/// Ordered so that std::min picks the weakest status:
/// Refuted < Unknown < Probable < Certified.
enum class Status { kRefuted = 0, kUnknown = 1, kProbable = 2, kCertified = 3 };

std::string_view to_string(Status s);
inline Status weakest(Status a, Status b) { return a < b ? a : b; }

struct Witness {
  enum class Kind {
    kOrigin,     // polynomial vanishes at the origin
    kLine,       // p(t·direction + offset) is not real-rooted
    kPoint,      // p(point) < 0
    kZeroLine,   // p(t·direction + offset) is identically zero
    kStructural  // free-form structural reason (see note)
  };
  Kind kind = Kind::kStructural;
  std::vector<Rational> direction;
  std::vector<Rational> offset;
  std::vector<Rational> point;
  std::string note;
};

std::string_view to_string(Witness::Kind k);

/// Outcome of a decision or semidecision, possibly with a tree of sub-verdicts.
struct Verdict {
  Status status = Status::kUnknown;
  std::string label;
  std::optional<Witness> witness;
  std::size_t samples_used = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  std::vector<Verdict> children;

  static Verdict certified(std::string label) { return {Status::kCertified, std::move(label)}; }
  static Verdict refuted(std::string label, Witness w) {
    Verdict v{Status::kRefuted, std::move(label)};
    v.witness = std::move(w);
    return v;
  }
};

std::string describe(const Witness& w);
/// Indented multi-line rendering of a verdict tree, `max_depth` levels deep.
std::string render(const Verdict& v, int max_depth = 3);

}  // namespace rza

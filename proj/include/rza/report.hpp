#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rza/certify.hpp"
#include "rza/matroid.hpp"

namespace rza {

/// Ordered so that the weakest step decides the overall status.
enum class StepStatus { kFail = 0, kProbable = 1, kPass = 2 };

std::string_view to_string(StepStatus s);

struct ReportStep {
  std::string name;
  StepStatus status = StepStatus::kPass;
  std::vector<std::string> details;
  std::optional<std::string> witness;
};

struct ScenarioReport {
  std::string title;
  std::vector<ReportStep> steps;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  StepStatus overall() const;
};

std::string render_text(const ScenarioReport& r);

/// Sum-of-squares certificate for the (x1, x2) Rayleigh polynomial of the
/// bases generating polynomial of the chosen Poljak–Turzík matroid.
SosCertificate pt_rayleigh_certificate(PoljakTurzik which);

/// The bases generating polynomials written out as e3 minus the excluded triples.
Polynomial pt_formula(PoljakTurzik which);

/// Rank argument showing that no matroid amalgam of M1 and M2 exists, replayed
/// as exact assertions on the two matroids.
struct RankReplay {
  std::vector<std::pair<std::string, bool>> assertions;
  /// r({y,z}) forced by submodularity in any amalgam.
  int forced_rank_yz = -1;
  int rank_y_x3_x6 = -1;
  int rank_z_x3_x6 = -1;
  bool contradiction = false;
  bool all_hold() const;
};

RankReplay pt_rank_replay(const Matroid& m1, const Matroid& m2);

/// The counterexample chain end to end: matroids, polynomials, certificates,
/// stability, delta-matroid violation, amalgam infeasibility, rank replay and
/// the shifted real zero polynomials.
ScenarioReport repro_counterexample(const SampleOptions& opts = {});

}  // namespace rza

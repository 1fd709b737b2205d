#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muskat/config.hpp"
#include "muskat/snapshot.hpp"

namespace muskat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

struct ScenarioOutcome {
  int exit_code = kExitOk;
  std::string message;
  std::vector<std::string> files;
};

/// Trajectory CSV: time, min_dz1, chord_arc, rt_min, h4_norm,
/// analyticity_radius, decay_rate. decay_rate is minus the least-squares slope
/// of log max|z2| against time over the rows so far (0 until two rows with
/// nonzero z2 exist).
std::string trajectory_csv(const SpectralGrid& grid, const Trajectory& tr);

/// Runs a named scenario and writes its artifacts into out_dir (created if
/// needed). A snapshot, when given, replaces the initial state and t_start of
/// the dynamic scenarios.
ScenarioOutcome run_scenario(const ScenarioConfig& config, const std::string& out_dir,
                             const std::optional<Snapshot>& resume = std::nullopt);

}  // namespace muskat

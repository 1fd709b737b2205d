#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muskat/muskat.hpp"
#include "muskat/schedules.hpp"

namespace muskat {

enum class Direction { forward, backward };

/// Sign bookkeeping for the rt_sign stop. With sigma_negative_stable a forward
/// run needs sigma < 0 at every node and a backward run needs sigma > 0;
/// sigma_positive_stable swaps the two.
enum class RtConvention { sigma_negative_stable, sigma_positive_stable };

enum class Termination { reached_t_end, chord_arc, rt_sign, blowup, degenerate };

std::string to_string(Direction d);
std::string to_string(RtConvention c);
std::string to_string(Termination t);

struct StopConditions {
  bool chord_arc_floor = true;
  bool rt_sign = false;
  bool blowup_norm = true;
};

struct RunConfig {
  Index n_modes = 256;
  /// Galerkin cutoff; 0 selects N/3.
  Index cutoff = 0;
  /// Step magnitude; the sign comes from direction.
  double dt = 1e-3;
  /// Step-doubling error tolerance per unit time; unset means fixed steps.
  std::optional<double> adaptive_tolerance;
  Direction direction = Direction::forward;
  double t_start = 0.0;
  double t_end = 1.0;
  StopConditions stop;
  double chord_arc_floor = 1e-4;
  /// Largest coefficient magnitude tolerated before the run counts as blown up.
  double blowup_threshold = 1e6;
  RtConvention rt_convention = RtConvention::sigma_negative_stable;
  /// When set, H^4 distances use the lifted contour h(., t) for t in [tau^2, tau].
  std::optional<HeightSchedule> schedule;
  Index record_every = 1;
  double density_jump_over_2pi = 1.0;
  int workers = 0;

  Index effective_cutoff() const { return cutoff > 0 ? cutoff : n_modes / 3; }
  double signed_dt() const { return direction == Direction::forward ? dt : -dt; }
  RhsOptions rhs_options() const;
  /// Throws InvalidArgument or InvalidCutoff naming the offending field.
  void validate() const;
};

struct DiagnosticsRecord {
  double time = 0.0;
  double min_dz1 = 0.0;            // turnover_indicator
  double chord_arc = 0.0;
  double rt_min = 0.0;
  double rt_max = 0.0;
  double h4_norm = 0.0;            // H^4 distance to the reference state
  double analyticity_radius = 0.0; // infinite for trigonometric polynomials
};

struct TrajectoryEntry {
  double time;
  InterfaceState state;
  DiagnosticsRecord diagnostics;
};

struct Trajectory {
  std::vector<TrajectoryEntry> entries;
  Termination reason = Termination::reached_t_end;
  std::string detail;
  Index steps = 0;

  const InterfaceState& final_state() const { return entries.back().state; }
};

/// Analyticity radius of a state: the smaller of the two components'
/// estimates, with components that vanish in the fit band counting as entire.
double state_analyticity_radius(const SpectralGrid& grid, const InterfaceState& state);

DiagnosticsRecord diagnose(const SpectralGrid& grid, const InterfaceState& state, const InterfaceState& reference,
                           const RunConfig& config);

/// Pi_N of the evolution law.
Tendency galerkin_rhs(const SpectralGrid& grid, const InterfaceState& state, Index cutoff,
                      const RhsOptions& options = {});

/// One classical RK4 step of the Galerkin system (dt may be negative). Each
/// stage is projected; the result is projected and symmetrized.
InterfaceState step(const SpectralGrid& grid, const InterfaceState& state, double dt, Index cutoff,
                    const RhsOptions& options = {});

/// Integrates from config.t_start to config.t_end. The initial state is
/// projected to the cutoff first. Stop conditions end the run early and are
/// reported through Trajectory::reason. The reference defaults to the flat state.
Trajectory run(const InterfaceState& initial, const RunConfig& config,
               const std::optional<InterfaceState>& reference = std::nullopt);

struct MonitorSample {
  double time;
  double distance;
};

struct MonitorResult {
  std::vector<MonitorSample> samples;
  /// Most negative (d(t+dt)^2 - d(t)^2) / |dt| over consecutive samples.
  double min_quotient = 0.0;
  Termination reason = Termination::reached_t_end;
  std::string detail;
};

/// Co-evolves two states with identical fixed steps and records their H^4 distance.
MonitorResult two_solution_monitor(const InterfaceState& a0, const InterfaceState& b0, const RunConfig& config);

}  // namespace muskat

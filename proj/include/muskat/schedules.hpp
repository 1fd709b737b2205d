#pragma once

#include <functional>
#include <optional>

#include "muskat/grid.hpp"

namespace muskat {

/// Parameters of the two height functions h and hbar.
struct HeightSchedule {
  double A = 10.0;
  double tau = 0.05;
  double kappa = 1e-6;

  /// Throws InvalidArgument unless A > 1, 0 < tau < 1, A tau^{3/2} < 1 and
  /// 0 <= kappa < tau^2.
  void validate() const;
};

/// h(x,t) = A^-1 (tau^2 - t^2) + (A^-1 - A (tau - t)) sin^2(x/2) + kappa, t in [tau^2, tau].
double h_of(double x, double t, const HeightSchedule& s);
/// dh/dt = -2 A^-1 t + A sin^2(x/2).
double h_t_of(double x, double t, const HeightSchedule& s);
/// hbar(x,t) = (A^-1 tau^2 + A^-1 sin^2(x/2))/4 + A^-2 tau t + A t sin^2(x/2), t in [-tau^2, tau^2].
double hbar_of(double x, double t, const HeightSchedule& s);
/// dhbar/dt = A^-2 tau + A sin^2(x/2).
double hbar_t_of(double x, double t, const HeightSchedule& s);

/// Node heights of h(., t), for building a LiftedContour.
RealVector h_profile(const SpectralGrid& grid, double t, const HeightSchedule& s);

/// sigma(x, t) stand-in used by the RT-coupled margins.
using RtModel = std::function<double(double x, double t)>;

/// c1 t - (c2/2) sin^2(x/2).
RtModel sigma_model(double c1 = 1.0, double c2 = 1.0);

struct MarginOptions {
  /// Constant in |d_t hbar| <= C tau^-1 hbar.
  double hbar_constant = 8.0;
  /// When set, the three RT-coupled margins are evaluated as well.
  std::optional<RtModel> rt;
};

struct ScheduleMargins {
  double h_positive;         // min h
  double h_t_bound;          // min 6 A^2 h - |h_t| over ||x|| >= 10 A^-1 t^{1/2}
  double hbar_below_h;       // min h(x, tau^2) - hbar(x, tau^2)
  double hbar_t_bound;       // min C tau^-1 hbar - |hbar_t|
  std::optional<double> rt_h;          // min sigma + h_t - A^{1/2} h
  std::optional<double> rt_h_core;     // min sigma - |h_t| - A^{1/2} h over ||x|| <= 20 A^-1 t^{1/2}
  std::optional<double> rt_hbar;       // min sigma + hbar_t - A^{1/2} hbar

  bool all_nonnegative() const;
};

/// Minima of the schedule inequalities over the grid nodes and t_samples
/// equispaced times on each time interval (endpoints included).
ScheduleMargins schedule_margins(const HeightSchedule& s, const SpectralGrid& grid, Index t_samples,
                                 const MarginOptions& options = {});

}  // namespace muskat

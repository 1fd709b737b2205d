#include "muskat/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace muskat {

namespace {

double sin2_half(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

void require_h_time(double t, const HeightSchedule& s) {
  if (!(t >= s.tau * s.tau && t <= s.tau)) throw DomainError("h is defined for t in [tau^2, tau]");
}

void require_hbar_time(double t, const HeightSchedule& s) {
  const double t2 = s.tau * s.tau;
  if (!(t >= -t2 && t <= t2)) throw DomainError("hbar is defined for t in [-tau^2, tau^2]");
}

double sample_time(double lo, double hi, Index k, Index count) {
  if (count == 1) return lo;
  return k == count - 1 ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
}

}  // namespace

void HeightSchedule::validate() const {
  if (!(A > 1.0)) throw InvalidArgument("schedule A must exceed 1");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidArgument("schedule tau must lie in (0, 1)");
  if (!(A * std::pow(tau, 1.5) < 1.0)) throw InvalidArgument("schedule needs A tau^{3/2} < 1");
  if (!(kappa >= 0.0 && kappa < tau * tau)) throw InvalidArgument("schedule kappa must lie in [0, tau^2)");
}

double h_of(double x, double t, const HeightSchedule& s) {
  require_h_time(t, s);
  return (s.tau * s.tau - t * t) / s.A + (1.0 / s.A - s.A * (s.tau - t)) * sin2_half(x) + s.kappa;
}

double h_t_of(double x, double t, const HeightSchedule& s) {
  require_h_time(t, s);
  return -2.0 * t / s.A + s.A * sin2_half(x);
}

double hbar_of(double x, double t, const HeightSchedule& s) {
  require_hbar_time(t, s);
  const double q = sin2_half(x);
  return 0.25 * (s.tau * s.tau / s.A + q / s.A) + s.tau * t / (s.A * s.A) + s.A * t * q;
}

double hbar_t_of(double x, double t, const HeightSchedule& s) {
  require_hbar_time(t, s);
  return s.tau / (s.A * s.A) + s.A * sin2_half(x);
}

RealVector h_profile(const SpectralGrid& grid, double t, const HeightSchedule& s) {
  RealVector h(grid.size());
  for (Index j = 0; j < grid.size(); ++j) h[j] = h_of(grid.node(j), t, s);
  return h;
}

RtModel sigma_model(double c1, double c2) {
  return [c1, c2](double x, double t) { return c1 * t - 0.5 * c2 * sin2_half(x); };
}

bool ScheduleMargins::all_nonnegative() const {
  bool ok = h_positive >= 0.0 && h_t_bound >= 0.0 && hbar_below_h >= 0.0 && hbar_t_bound >= 0.0;
  for (const auto& m : {rt_h, rt_h_core, rt_hbar})
    if (m) ok = ok && *m >= 0.0;
  return ok;
}

ScheduleMargins schedule_margins(const HeightSchedule& s, const SpectralGrid& grid, Index t_samples,
                                 const MarginOptions& options) {
  s.validate();
  if (t_samples < 1) throw InvalidArgument("t_samples must be positive");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double t2 = s.tau * s.tau;
  const double root_a = std::sqrt(s.A);
  ScheduleMargins m{inf, inf, inf, inf, std::nullopt, std::nullopt, std::nullopt};
  double rt_h = inf;
  double rt_h_core = inf;
  double rt_hbar = inf;

  for (Index j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    const double dist = std::abs(std::remainder(x, kTwoPi));
    for (Index k = 0; k < t_samples; ++k) {
      const double t = sample_time(t2, s.tau, k, t_samples);
      const double h = h_of(x, t, s);
      const double ht = h_t_of(x, t, s);
      m.h_positive = std::min(m.h_positive, h);
      if (dist >= 10.0 * std::sqrt(t) / s.A) m.h_t_bound = std::min(m.h_t_bound, 6.0 * s.A * s.A * h - std::abs(ht));
      if (options.rt) {
        const double sigma = (*options.rt)(x, t);
        rt_h = std::min(rt_h, sigma + ht - root_a * h);
        if (dist <= 20.0 * std::sqrt(t) / s.A) rt_h_core = std::min(rt_h_core, sigma - std::abs(ht) - root_a * h);
      }

      const double tb = sample_time(-t2, t2, k, t_samples);
      const double hb = hbar_of(x, tb, s);
      const double hbt = hbar_t_of(x, tb, s);
      m.hbar_t_bound = std::min(m.hbar_t_bound, options.hbar_constant / s.tau * hb - std::abs(hbt));
      if (options.rt) rt_hbar = std::min(rt_hbar, (*options.rt)(x, tb) + hbt - root_a * hb);
    }
    m.hbar_below_h = std::min(m.hbar_below_h, h_of(x, t2, s) - hbar_of(x, t2, s));
  }
  if (options.rt) {
    m.rt_h = rt_h;
    m.rt_h_core = rt_h_core;
    m.rt_hbar = rt_hbar;
  }
  return m;
}

}  // namespace muskat

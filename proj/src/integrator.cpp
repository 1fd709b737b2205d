#include "muskat/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "muskat/stability.hpp"

namespace muskat {

std::string to_string(Direction d) { return d == Direction::forward ? "fwd" : "bwd"; }

std::string to_string(RtConvention c) {
  return c == RtConvention::sigma_negative_stable ? "sigma_negative_stable" : "sigma_positive_stable";
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::reached_t_end: return "reached t_end";
    case Termination::chord_arc: return "chord-arc floor";
    case Termination::rt_sign: return "rt sign";
    case Termination::blowup: return "blowup";
    case Termination::degenerate: return "degenerate parametrization";
  }
  return "unknown";
}

RhsOptions RunConfig::rhs_options() const {
  RhsOptions o;
  o.chord_arc_floor = stop.chord_arc_floor ? chord_arc_floor : 0.0;
  o.density_jump_over_2pi = density_jump_over_2pi;
  o.workers = workers;
  return o;
}

void RunConfig::validate() const {
  if (n_modes < 4 || (n_modes & (n_modes - 1)) != 0) throw InvalidArgument("n_modes must be a power of two >= 4");
  if (cutoff < 0) throw InvalidCutoff("cutoff must be non-negative");
  if (effective_cutoff() < 1 || 3 * effective_cutoff() > n_modes) throw InvalidCutoff("cutoff must lie in [1, N/3]");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (adaptive_tolerance && !(*adaptive_tolerance > 0.0)) throw InvalidArgument("adaptive_tolerance must be positive");
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) throw InvalidArgument("t_start and t_end must be finite");
  if (t_end == t_start) throw InvalidArgument("t_end must differ from t_start");
  if ((direction == Direction::forward) != (t_end > t_start))
    throw InvalidArgument("direction disagrees with the order of t_start and t_end");
  if (!(chord_arc_floor >= 0.0)) throw InvalidArgument("chord_arc_floor must be non-negative");
  if (!(blowup_threshold > 0.0)) throw InvalidArgument("blowup_threshold must be positive");
  if (record_every < 1) throw InvalidArgument("record_every must be positive");
  if (schedule) schedule->validate();
}

double state_analyticity_radius(const SpectralGrid& grid, const InterfaceState& state) {
  double r = std::numeric_limits<double>::infinity();
  for (const ComplexVector* c : {&state.p1, &state.p2}) {
    try {
      r = std::min(r, analyticity_radius(grid, GridFunction::spectral(*c)));
    } catch (const UndefinedRadius&) {
    }
  }
  return r;
}

DiagnosticsRecord diagnose(const SpectralGrid& grid, const InterfaceState& state, const InterfaceState& reference,
                           const RunConfig& config) {
  DiagnosticsRecord d;
  d.time = state.time;
  d.min_dz1 = turnover_indicator(grid, state);
  d.chord_arc = chord_arc_constant(grid, state, config.workers);
  const RtProfile rt = rt_unperturbed(grid, state);
  d.rt_min = rt.min();
  d.rt_max = rt.max();
  d.h4_norm = h4_distance(grid, state, reference);
  d.analyticity_radius = state_analyticity_radius(grid, state);
  return d;
}

Tendency galerkin_rhs(const SpectralGrid& grid, const InterfaceState& state, Index cutoff, const RhsOptions& options) {
  Tendency t = rhs(grid, state, options);
  t.d1 = project_coefficients(grid, t.d1, cutoff);
  t.d2 = project_coefficients(grid, t.d2, cutoff);
  return t;
}

InterfaceState step(const SpectralGrid& grid, const InterfaceState& state, double dt, Index cutoff,
                    const RhsOptions& options) {
  auto stage = [&](const Tendency& k, double w) {
    InterfaceState s{project_coefficients(grid, state.p1 + w * k.d1, cutoff),
                     project_coefficients(grid, state.p2 + w * k.d2, cutoff), state.time + w};
    return s;
  };
  const Tendency k1 = galerkin_rhs(grid, state, cutoff, options);
  const Tendency k2 = galerkin_rhs(grid, stage(k1, 0.5 * dt), cutoff, options);
  const Tendency k3 = galerkin_rhs(grid, stage(k2, 0.5 * dt), cutoff, options);
  const Tendency k4 = galerkin_rhs(grid, stage(k3, dt), cutoff, options);
  InterfaceState out;
  out.p1 = state.p1 + (dt / 6.0) * (k1.d1 + 2.0 * k2.d1 + 2.0 * k3.d1 + k4.d1);
  out.p2 = state.p2 + (dt / 6.0) * (k1.d2 + 2.0 * k2.d2 + 2.0 * k3.d2 + k4.d2);
  out.p1 = symmetrize(grid, project_coefficients(grid, out.p1, cutoff));
  out.p2 = symmetrize(grid, project_coefficients(grid, out.p2, cutoff));
  out.time = state.time + dt;
  return out;
}

namespace {

bool blown_up(const InterfaceState& s, double threshold) {
  if (!s.p1.allFinite() || !s.p2.allFinite()) return true;
  return std::max(s.p1.cwiseAbs().maxCoeff(), s.p2.cwiseAbs().maxCoeff()) > threshold;
}

// True when the RT profile has the sign the run direction needs.
bool rt_admissible(const RtProfile& rt, const RunConfig& config) {
  const bool negative_needed =
      (config.direction == Direction::forward) == (config.rt_convention == RtConvention::sigma_negative_stable);
  return negative_needed ? rt.max() < 0.0 : rt.min() > 0.0;
}

InterfaceState prepared(const SpectralGrid& grid, const InterfaceState& s, const RunConfig& config) {
  grid.check_size(s.p1.size());
  grid.check_size(s.p2.size());
  const Index cutoff = config.effective_cutoff();
  return {symmetrize(grid, project_coefficients(grid, s.p1, cutoff)),
          symmetrize(grid, project_coefficients(grid, s.p2, cutoff)), config.t_start};
}

Termination classify(const DegenerateGeometry& e) {
  return e.first() == e.second() ? Termination::degenerate : Termination::chord_arc;
}

double coefficient_error(const InterfaceState& a, const InterfaceState& b) {
  return std::max((a.p1 - b.p1).cwiseAbs().maxCoeff(), (a.p2 - b.p2).cwiseAbs().maxCoeff());
}

// Step-doubling: accepts the two-half-step result once the difference to the
// full step is within tolerance * |h|. h is updated for the next attempt.
InterfaceState adaptive_step(const SpectralGrid& grid, const InterfaceState& y, double& h, double remaining,
                             double tolerance, Index cutoff, const RhsOptions& options) {
  for (;;) {
    const double trial = std::copysign(std::min(std::abs(h), std::abs(remaining)), h);
    const InterfaceState full = step(grid, y, trial, cutoff, options);
    const InterfaceState half = step(grid, step(grid, y, 0.5 * trial, cutoff, options), 0.5 * trial, cutoff, options);
    const double err = coefficient_error(full, half);
    const double allowed = tolerance * std::abs(trial);
    const double factor = err > 0.0 ? 0.9 * std::pow(allowed / err, 0.2) : 2.0;
    if (err <= allowed || std::abs(trial) < 1e-12) {
      if (std::abs(trial) == std::abs(h)) h *= std::clamp(factor, 1.0, 2.0);
      return half;
    }
    h = trial * std::clamp(factor, 0.1, 0.9);
  }
}

// The closing step of a fixed-step run keeps the nominal step when the
// remainder matches it up to rounding, so resumed runs replay the same steps.
double full_or_remainder(double h, double remaining) {
  return std::abs(remaining - h) <= 1e-9 * std::abs(h) ? h : remaining;
}

}  // namespace

Trajectory run(const InterfaceState& initial, const RunConfig& config, const std::optional<InterfaceState>& reference) {
  config.validate();
  const SpectralGrid grid(config.n_modes);
  const Index cutoff = config.effective_cutoff();
  const RhsOptions options = config.rhs_options();
  const InterfaceState ref = reference ? *reference : InterfaceState::flat(grid);
  grid.check_size(ref.p1.size());

  Trajectory tr;
  InterfaceState y = prepared(grid, initial, config);
  tr.entries.push_back({y.time, y, diagnose(grid, y, ref, config)});

  const double span = config.t_end - config.t_start;
  const double h_fixed = config.signed_dt();
  const Index fixed_steps = static_cast<Index>(std::ceil(std::abs(span) / config.dt - 1e-9));
  double h = h_fixed;

  auto stop = [&](Termination reason, std::string detail) {
    tr.reason = reason;
    tr.detail = std::move(detail);
  };

  for (;;) {
    const bool done = config.adaptive_tolerance ? std::abs(config.t_end - y.time) <= 1e-14 * std::max(1.0, std::abs(span))
                                                : tr.steps >= fixed_steps;
    if (done) break;
    if (config.stop.rt_sign && !rt_admissible(rt_unperturbed(grid, y), config)) {
      stop(Termination::rt_sign, "RT function lost the sign required for the run direction");
      break;
    }
    InterfaceState next;
    try {
      if (config.adaptive_tolerance) {
        next = adaptive_step(grid, y, h, config.t_end - y.time, *config.adaptive_tolerance, cutoff, options);
        if (std::abs(config.t_end - next.time) <= 1e-14 * std::max(1.0, std::abs(span))) next.time = config.t_end;
      } else {
        const bool final_step = tr.steps + 1 == fixed_steps;
        next = step(grid, y, final_step ? full_or_remainder(h_fixed, config.t_end - y.time) : h_fixed, cutoff, options);
        next.time = final_step ? config.t_end : config.t_start + static_cast<double>(tr.steps + 1) * h_fixed;
      }
    } catch (const DegenerateGeometry& e) {
      stop(classify(e), e.what());
      break;
    }
    if (config.stop.blowup_norm ? blown_up(next, config.blowup_threshold) : !(next.p1.allFinite() && next.p2.allFinite())) {
      stop(Termination::blowup, "coefficients left the admissible range");
      break;
    }
    y = std::move(next);
    ++tr.steps;
    const bool last = config.adaptive_tolerance ? y.time == config.t_end : tr.steps == fixed_steps;
    if (tr.steps % config.record_every == 0 || last) {
      try {
        tr.entries.push_back({y.time, y, diagnose(grid, y, ref, config)});
      } catch (const DegenerateGeometry& e) {
        stop(classify(e), e.what());
        break;
      }
    }
  }
  return tr;
}

MonitorResult two_solution_monitor(const InterfaceState& a0, const InterfaceState& b0, const RunConfig& config) {
  config.validate();
  const SpectralGrid grid(config.n_modes);
  const Index cutoff = config.effective_cutoff();
  const RhsOptions options = config.rhs_options();
  InterfaceState a = prepared(grid, a0, config);
  InterfaceState b = prepared(grid, b0, config);

  auto distance = [&](double t) {
    if (config.schedule) {
      const HeightSchedule& s = *config.schedule;
      if (t >= s.tau * s.tau && t <= s.tau)
        return h4_distance(grid, a, b, LiftedContour::from_heights(grid, h_profile(grid, t, s)));
    }
    return h4_distance(grid, a, b);
  };

  MonitorResult out;
  out.samples.push_back({a.time, distance(a.time)});
  const Index steps = static_cast<Index>(std::ceil(std::abs(config.t_end - config.t_start) / config.dt - 1e-9));
  const double h = config.signed_dt();
  for (Index n = 1; n <= steps; ++n) {
    const double t_next = n == steps ? config.t_end : config.t_start + static_cast<double>(n) * h;
    const double dt = n == steps ? full_or_remainder(h, config.t_end - a.time) : h;
    try {
      a = step(grid, a, dt, cutoff, options);
      b = step(grid, b, dt, cutoff, options);
    } catch (const DegenerateGeometry& e) {
      out.reason = classify(e);
      out.detail = e.what();
      break;
    }
    a.time = b.time = t_next;
    if (blown_up(a, config.blowup_threshold) || blown_up(b, config.blowup_threshold)) {
      out.reason = Termination::blowup;
      out.detail = "coefficients left the admissible range";
      break;
    }
    if (n % config.record_every == 0 || n == steps) out.samples.push_back({t_next, distance(t_next)});
  }
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    const auto& p = out.samples[i - 1];
    const auto& q = out.samples[i];
    const double quotient = (q.distance * q.distance - p.distance * p.distance) / std::abs(q.time - p.time);
    out.min_quotient = std::min(out.min_quotient, quotient);
  }
  return out;
}

}  // namespace muskat

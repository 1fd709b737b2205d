#include "muskat/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "muskat/initial_data.hpp"
#include "muskat/stability.hpp"

namespace muskat {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

class Writer {
 public:
  explicit Writer(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError(dir_ + ": cannot create output directory");
  }
  void write(const std::string& name, const std::string& content) {
    const std::string path = (std::filesystem::path(dir_) / name).string();
    write_atomic(path, content);
    files.push_back(path);
  }
  std::vector<std::string> files;

 private:
  std::string dir_;
};

InterfaceState cosine_graph(const SpectralGrid& grid, Index mode, double amplitude) {
  InterfaceState s = InterfaceState::flat(grid);
  s.p2[grid.index_of(mode)] = 0.5 * amplitude;
  s.p2[grid.index_of(-mode)] = 0.5 * amplitude;
  return s;
}

InterfaceState pair_base(const SpectralGrid& grid, double amplitude) {
  InterfaceState s = cosine_graph(grid, 1, amplitude);
  // + (amplitude/2) sin 2x
  s.p2[grid.index_of(2)] += Complex(0.0, -0.25 * amplitude);
  s.p2[grid.index_of(-2)] += Complex(0.0, 0.25 * amplitude);
  return s;
}

json plot_data(const SpectralGrid& grid, const Trajectory& tr) {
  json frames = json::array();
  const std::size_t n = tr.entries.size();
  const std::size_t stride = std::max<std::size_t>(1, n / 10);
  for (std::size_t i = 0; i < n; ++i) {
    if (i % stride != 0 && i + 1 != n) continue;
    const auto& e = tr.entries[i];
    const RealVector z1 = e.state.z1_values(grid);
    const RealVector z2 = e.state.z2_values(grid);
    frames.push_back({{"time", e.time},
                      {"z1", std::vector<double>(z1.data(), z1.data() + z1.size())},
                      {"z2", std::vector<double>(z2.data(), z2.data() + z2.size())}});
  }
  const RealVector x = grid.nodes();
  return {{"alpha", std::vector<double>(x.data(), x.data() + x.size())}, {"frames", frames}};
}

ScenarioOutcome dynamic_scenario(const ScenarioConfig& cfg, const InterfaceState& initial, Writer& out,
                                 const std::optional<Snapshot>& resume, json summary) {
  const SpectralGrid grid(cfg.run.n_modes);
  RunConfig run_cfg = cfg.run;
  InterfaceState start = initial;
  if (resume) {
    if (resume->n_modes != run_cfg.n_modes) throw ConfigError("snapshot n_modes differs from grid.n_modes");
    start = resume->state();
    run_cfg.t_start = resume->time;
    run_cfg.validate();
  }
  const std::uint64_t digest = config_digest(cfg);
  const Trajectory tr = run(start, run_cfg);

  out.write("trajectory.csv", trajectory_csv(grid, tr));
  out.write("snapshot_initial.json", snapshot_to_json(make_snapshot(tr.entries.front(), digest)));
  out.write("snapshot_final.json", snapshot_to_json(make_snapshot(tr.entries.back(), digest)));
  out.write("plot_data.json", plot_data(grid, tr).dump(1) + "\n");

  summary["termination"] = to_string(tr.reason);
  summary["detail"] = tr.detail;
  summary["steps"] = tr.steps;
  summary["final_time"] = tr.entries.back().time;
  out.write("summary.json", summary.dump(1) + "\n");

  ScenarioOutcome o;
  o.files = out.files;
  if (tr.reason == Termination::reached_t_end) {
    o.message = "reached t_end = " + num(tr.entries.back().time);
  } else {
    o.exit_code = kExitNumeric;
    o.message = "stopped (" + to_string(tr.reason) + ") after t = " + num(tr.entries.back().time) + ": " + tr.detail;
  }
  return o;
}

ScenarioOutcome perturbed_pair(const ScenarioConfig& cfg, Writer& out) {
  const SpectralGrid grid(cfg.run.n_modes);
  const InterfaceState a0 = pair_base(grid, cfg.param("base_amplitude"));
  const InterfaceState b0 = perturb(grid, a0, cfg.param("lambda"), f_kappa(cfg.param("kappa"), grid));
  const MonitorResult m = two_solution_monitor(a0, b0, cfg.run);

  std::ostringstream csv;
  csv << "time,h4_distance\n";
  for (const auto& s : m.samples) csv << num(s.time) << "," << num(s.distance) << "\n";
  out.write("pair_distance.csv", csv.str());

  double worst = 0.0;
  for (const auto& s : m.samples) worst = std::max(worst, s.distance / m.samples.front().distance);
  json summary{{"scenario", cfg.name},
               {"termination", to_string(m.reason)},
               {"detail", m.detail},
               {"initial_distance", m.samples.front().distance},
               {"final_distance", m.samples.back().distance},
               {"max_distance_ratio", finite_or_string(worst)},
               {"min_quotient", m.min_quotient}};
  out.write("summary.json", summary.dump(1) + "\n");
  ScenarioOutcome o;
  o.files = out.files;
  if (m.reason != Termination::reached_t_end) {
    o.exit_code = kExitNumeric;
    o.message = "stopped (" + to_string(m.reason) + ") after t = " + num(m.samples.back().time) + ": " + m.detail;
  } else {
    o.message = "max distance ratio " + num(worst);
  }
  return o;
}

ScenarioOutcome schedule_check(const ScenarioConfig& cfg, Writer& out) {
  const SpectralGrid grid(cfg.run.n_modes);
  const HeightSchedule s = cfg.run.schedule.value_or(HeightSchedule{});
  MarginOptions opt;
  opt.hbar_constant = cfg.param("hbar_constant");
  opt.rt = sigma_model(cfg.param("rt_c1"), cfg.param("rt_c2"));
  const ScheduleMargins m = schedule_margins(s, grid, static_cast<Index>(cfg.param("t_samples")), opt);

  double pointwise = HUGE_VAL;
  const double t2 = s.tau * s.tau;
  for (Index j = 0; j < grid.size(); ++j)
    pointwise = std::min(pointwise, h_of(grid.node(j), t2, s) - hbar_of(grid.node(j), t2, s));

  json j{{"A", s.A},
         {"tau", s.tau},
         {"kappa", s.kappa},
         {"h_positive", m.h_positive},
         {"h_t_bound", m.h_t_bound},
         {"hbar_below_h", m.hbar_below_h},
         {"hbar_t_bound", m.hbar_t_bound},
         {"rt_h", *m.rt_h},
         {"rt_h_core", *m.rt_h_core},
         {"rt_hbar", *m.rt_hbar},
         {"hbar_le_h_pointwise", pointwise},
         {"all_nonnegative", m.all_nonnegative()}};
  out.write("margins.json", j.dump(1) + "\n");
  ScenarioOutcome o;
  o.files = out.files;
  o.exit_code = m.all_nonnegative() ? kExitOk : kExitNumeric;
  o.message = m.all_nonnegative() ? "all margins non-negative" : "negative schedule margin";
  return o;
}

ScenarioOutcome operator_suite(const ScenarioConfig& cfg, Writer& out) {
  const SpectralGrid grid(cfg.run.n_modes);
  const Index n = grid.size();
  double lambda_err = 0.0;
  for (Index k = 1; k < grid.nyquist(); ++k) {
    ComplexVector c = ComplexVector::Zero(n);
    c[grid.index_of(k)] = 1.0;
    const ComplexVector l = lambda_op(grid, GridFunction::spectral(c)).data;
    lambda_err = std::max(lambda_err, std::abs(l[grid.index_of(k)] - static_cast<double>(k)));
  }
  RealVector f(n);
  for (Index j = 0; j < n; ++j) f[j] = std::exp(std::sin(grid.node(j))) - std::cos(2.0 * grid.node(j));
  const GridFunction g = GridFunction::physical(f);
  const ComplexVector lam = to_physical(grid, lambda_op(grid, g)).data;
  const ComplexVector hd = to_physical(grid, hilbert(grid, derivative(grid, g, 1))).data;
  const ComplexVector pv = pv_cot_integral(grid);
  const Tendency flat = rhs(grid, InterfaceState::flat(grid));

  json j{{"n_modes", n},
         {"lambda_multiplier_error", lambda_err},
         {"lambda_vs_hilbert_derivative", (lam - hd).cwiseAbs().maxCoeff()},
         {"pv_cot_torus", pv.cwiseAbs().maxCoeff()},
         {"flat_rhs", std::max(flat.d1.cwiseAbs().maxCoeff(), flat.d2.cwiseAbs().maxCoeff())}};
  out.write("operator_suite.json", j.dump(1) + "\n");
  return {kExitOk, "operator identities written", out.files};
}

ScenarioOutcome f_kappa_build(const ScenarioConfig& cfg, Writer& out) {
  const SpectralGrid grid(cfg.run.n_modes);
  const double kappa = cfg.param("kappa");
  const GridFunction f = f_kappa(kappa, grid);
  // round trip through samples so the deviation reflects the transform
  const ComplexVector c = grid.forward(to_physical(grid, f).data);
  std::vector<double> cosine;
  double deviation = 0.0;
  for (Index k = 1; k < grid.nyquist(); ++k) {
    const double a = 2.0 * c[grid.index_of(k)].real();
    const double expected = -2.0 * std::exp(-static_cast<double>(k) * kappa) / std::pow(static_cast<double>(k), 5);
    cosine.push_back(a);
    deviation = std::max(deviation, std::abs(a - expected));
  }
  double radius = HUGE_VAL;
  try {
    radius = analyticity_radius(grid, f);
  } catch (const UndefinedRadius&) {
  }
  json j{{"kappa", kappa},
         {"n_modes", grid.size()},
         {"cosine_coefficients", cosine},
         {"max_deviation", deviation},
         {"analyticity_radius", finite_or_string(radius)}};
  out.write("f_kappa.json", j.dump(1) + "\n");
  return {kExitOk, "max deviation " + num(deviation), out.files};
}

}  // namespace

std::string trajectory_csv(const SpectralGrid& grid, const Trajectory& tr) {
  std::ostringstream csv;
  csv << "time,min_dz1,chord_arc,rt_min,h4_norm,analyticity_radius,decay_rate\n";
  double st = 0, sy = 0, stt = 0, sty = 0;
  int m = 0;
  for (const auto& e : tr.entries) {
    const double amp = e.state.z2_values(grid).cwiseAbs().maxCoeff();
    if (amp > 0.0) {
      const double y = std::log(amp);
      st += e.time;
      sy += y;
      stt += e.time * e.time;
      sty += e.time * y;
      ++m;
    }
    double rate = 0.0;
    const double denom = m * stt - st * st;
    if (m >= 2 && denom != 0.0) rate = -(m * sty - st * sy) / denom;
    const auto& d = e.diagnostics;
    csv << num(e.time) << "," << num(d.min_dz1) << "," << num(d.chord_arc) << "," << num(d.rt_min) << ","
        << num(d.h4_norm) << "," << num(d.analyticity_radius) << "," << num(rate) << "\n";
  }
  return csv.str();
}

ScenarioOutcome run_scenario(const ScenarioConfig& cfg, const std::string& out_dir,
                             const std::optional<Snapshot>& resume) {
  Writer out(out_dir);
  out.write("run_config.ini", serialize_config(cfg));
  const SpectralGrid grid(cfg.run.n_modes);
  json summary{{"scenario", cfg.name}};
  for (const auto& [k, v] : cfg.params) summary["params"][k] = v;

  if (cfg.name == "flat") return dynamic_scenario(cfg, InterfaceState::flat(grid), out, resume, summary);
  if (cfg.name == "linear_decay") {
    const auto mode = static_cast<Index>(cfg.param("mode"));
    if (mode < 1 || mode > cfg.run.effective_cutoff()) throw ConfigError("scenario.mode: must lie in [1, cutoff]");
    return dynamic_scenario(cfg, cosine_graph(grid, mode, cfg.param("amplitude")), out, resume, summary);
  }
  if (cfg.name == "turnover") {
    GraphFamilyParams p;
    p.slope_amplitude = cfg.param("slope_amplitude");
    p.steepening_rate = cfg.param("steepening_rate");
    p.mode_count = static_cast<int>(cfg.param("mode_count"));
    p.height_amplitude = cfg.param("height_amplitude");
    InterfaceState s;
    try {
      s = make_turnover_state(p, grid);
    } catch (const InvalidFamily& e) {
      throw ConfigError(std::string("scenario: ") + e.what());
    }
    return dynamic_scenario(cfg, s, out, resume, summary);
  }
  if (cfg.name == "perturbed_pair") return perturbed_pair(cfg, out);
  if (cfg.name == "schedule_check") return schedule_check(cfg, out);
  if (cfg.name == "operator_suite") return operator_suite(cfg, out);
  if (cfg.name == "f_kappa_build") return f_kappa_build(cfg, out);
  throw ConfigError("scenario.name: unknown scenario '" + cfg.name + "'");
}

}  // namespace muskat

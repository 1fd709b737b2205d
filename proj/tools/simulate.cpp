#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "muskat/scenarios.hpp"

using namespace muskat;

int main(int argc, char** argv) {
  CLI::App app{"Muskat interface simulator"};
  std::string scenario;
  std::string config_path;
  std::string out_dir;
  std::optional<Index> modes;
  std::optional<Index> cutoff;
  std::optional<double> dt;
  std::optional<std::string> direction;
  std::optional<std::string> resume;

  app.add_option("scenario", scenario, "Scenario name")->required();
  app.add_option("--config", config_path, "INI configuration file")->required();
  app.add_option("--out", out_dir, "Output directory")->required();
  app.add_option("--modes", modes, "Grid size N (power of two)");
  app.add_option("--cutoff", cutoff, "Galerkin cutoff (<= N/3)");
  app.add_option("--dt", dt, "Time step magnitude");
  app.add_option("--direction", direction, "fwd or bwd")->check(CLI::IsMember({"fwd", "bwd"}));
  app.add_option("--resume", resume, "Continue from a snapshot file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  ScenarioConfig cfg;
  std::optional<Snapshot> snapshot;
  try {
    cfg = load_config(config_path);
    if (cfg.name != scenario)
      throw ConfigError("scenario.name: config selects '" + cfg.name + "' but '" + scenario + "' was requested");
    if (modes) cfg.run.n_modes = *modes;
    if (cutoff) cfg.run.cutoff = *cutoff;
    if (dt) cfg.run.dt = *dt;
    if (direction) {
      const Direction d = *direction == "fwd" ? Direction::forward : Direction::backward;
      if ((d == Direction::forward) != (cfg.run.t_end > cfg.run.t_start)) std::swap(cfg.run.t_start, cfg.run.t_end);
      cfg.run.direction = d;
    }
    cfg.run.validate();
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (resume) snapshot = load_snapshot(*resume);
  } catch (const Error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }

  try {
    const ScenarioOutcome o = run_scenario(cfg, out_dir, snapshot);
    std::cout << cfg.name << ": " << o.message << "\n";
    for (const auto& f : o.files) std::cout << "  wrote " << f << "\n";
    return o.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

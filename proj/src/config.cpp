#include "muskat/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace muskat {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& section_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"scenario", {"name"}},
      {"grid", {"n_modes", "cutoff"}},
      {"time", {"dt", "direction", "t_start", "t_end", "adaptive_tolerance", "record_every"}},
      {"stop", {"on", "chord_arc_floor", "blowup_threshold", "rt_convention"}},
      {"physics", {"density_jump_over_2pi"}},
      {"schedule", {"A", "tau", "kappa"}},
  };
  return keys;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(field + ": expected a number, got '" + text + "'");
  return v;
}

Index to_index(const std::string& field, const std::string& text) {
  const double v = to_double(field, text);
  if (v != std::floor(v) || std::abs(v) > 1e15) throw ConfigError(field + ": expected an integer, got '" + text + "'");
  return static_cast<Index>(v);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double ScenarioConfig::param(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw ConfigError("scenario." + key + ": not a parameter of scenario '" + name + "'");
  return it->second;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"flat",           "linear_decay",   "turnover",     "perturbed_pair",
                                              "schedule_check", "operator_suite", "f_kappa_build"};
  return names;
}

const std::map<std::string, double>& scenario_defaults(const std::string& name) {
  static const std::map<std::string, std::map<std::string, double>> defaults{
      {"flat", {}},
      {"linear_decay", {{"amplitude", 0.01}, {"mode", 1}}},
      {"turnover",
       {{"slope_amplitude", 0.97}, {"steepening_rate", 0.0}, {"mode_count", 3}, {"height_amplitude", 3.0}}},
      {"perturbed_pair", {{"lambda", 1e-5}, {"kappa", 0.2}, {"base_amplitude", 0.1}}},
      {"schedule_check", {{"t_samples", 64}, {"hbar_constant", 8.0}, {"rt_c1", 1.0}, {"rt_c2", 1.0}}},
      {"operator_suite", {}},
      {"f_kappa_build", {{"kappa", 0.1}}},
  };
  const auto it = defaults.find(name);
  if (it == defaults.end()) throw ConfigError("scenario.name: unknown scenario '" + name + "'");
  return it->second;
}

ScenarioConfig parse_config(std::istream& in, const std::string& source) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  for (const auto& [section, body] : tree) {
    const auto known = section_keys().find(section);
    if (body.empty() && !body.data().empty()) throw ConfigError(section + ": key outside any section");
    if (known == section_keys().end()) throw ConfigError(section + ": unknown section");
    for (const auto& [key, value] : body) {
      (void)value;
      if (section == "scenario" && key != "name") continue;
      if (!known->second.count(key)) throw ConfigError(section + "." + key + ": unknown key");
    }
  }

  ScenarioConfig cfg;
  const auto name = tree.get_optional<std::string>("scenario.name");
  if (!name) throw ConfigError("scenario.name: missing");
  cfg.name = trim(*name);
  cfg.params = scenario_defaults(cfg.name);
  if (const auto sc = tree.get_child_optional("scenario")) {
    for (const auto& [key, value] : *sc) {
      if (key == "name") continue;
      if (!cfg.params.count(key)) throw ConfigError("scenario." + key + ": unknown key for scenario '" + cfg.name + "'");
      cfg.params[key] = to_double("scenario." + key, value.data());
    }
  }

  RunConfig& r = cfg.run;
  auto get = [&](const std::string& path) { return tree.get_optional<std::string>(pt::ptree::path_type(path, '.')); };
  if (auto v = get("grid.n_modes")) r.n_modes = to_index("grid.n_modes", *v);
  if (auto v = get("grid.cutoff")) r.cutoff = to_index("grid.cutoff", *v);
  if (auto v = get("time.dt")) r.dt = to_double("time.dt", *v);
  if (auto v = get("time.t_start")) r.t_start = to_double("time.t_start", *v);
  if (auto v = get("time.t_end")) r.t_end = to_double("time.t_end", *v);
  if (auto v = get("time.adaptive_tolerance")) r.adaptive_tolerance = to_double("time.adaptive_tolerance", *v);
  if (auto v = get("time.record_every")) r.record_every = to_index("time.record_every", *v);
  if (auto v = get("time.direction")) {
    const std::string d = trim(*v);
    if (d == "fwd" || d == "forward") r.direction = Direction::forward;
    else if (d == "bwd" || d == "backward") r.direction = Direction::backward;
    else throw ConfigError("time.direction: expected fwd or bwd, got '" + d + "'");
  } else if (r.t_end < r.t_start) {
    r.direction = Direction::backward;
  }
  if (auto v = get("stop.on")) {
    r.stop = StopConditions{false, false, false};
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item == "chord_arc_floor") r.stop.chord_arc_floor = true;
      else if (item == "rt_sign") r.stop.rt_sign = true;
      else if (item == "blowup_norm") r.stop.blowup_norm = true;
      else if (!item.empty()) throw ConfigError("stop.on: unknown stop condition '" + item + "'");
    }
  }
  if (auto v = get("stop.chord_arc_floor")) r.chord_arc_floor = to_double("stop.chord_arc_floor", *v);
  if (auto v = get("stop.blowup_threshold")) r.blowup_threshold = to_double("stop.blowup_threshold", *v);
  if (auto v = get("stop.rt_convention")) {
    const std::string c = trim(*v);
    if (c == "sigma_negative_stable") r.rt_convention = RtConvention::sigma_negative_stable;
    else if (c == "sigma_positive_stable") r.rt_convention = RtConvention::sigma_positive_stable;
    else throw ConfigError("stop.rt_convention: unknown convention '" + c + "'");
  }
  if (auto v = get("physics.density_jump_over_2pi"))
    r.density_jump_over_2pi = to_double("physics.density_jump_over_2pi", *v);
  if (tree.get_child_optional("schedule")) {
    HeightSchedule s;
    if (auto v = get("schedule.A")) s.A = to_double("schedule.A", *v);
    if (auto v = get("schedule.tau")) s.tau = to_double("schedule.tau", *v);
    if (auto v = get("schedule.kappa")) s.kappa = to_double("schedule.kappa", *v);
    r.schedule = s;
  }

  try {
    r.validate();
  } catch (const InvalidCutoff& e) {
    throw ConfigError(std::string("grid.cutoff: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("validation: ") + e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  return parse_config(in, path);
}

std::string serialize_config(const ScenarioConfig& c) {
  const RunConfig& r = c.run;
  std::ostringstream out;
  out << "[scenario]\nname = " << c.name << "\n";
  for (const auto& [k, v] : c.params) out << k << " = " << fmt(v) << "\n";
  out << "\n[grid]\nn_modes = " << r.n_modes << "\ncutoff = " << r.cutoff << "\n";
  out << "\n[time]\ndt = " << fmt(r.dt) << "\ndirection = " << to_string(r.direction) << "\nt_start = " << fmt(r.t_start)
      << "\nt_end = " << fmt(r.t_end) << "\n";
  if (r.adaptive_tolerance) out << "adaptive_tolerance = " << fmt(*r.adaptive_tolerance) << "\n";
  out << "record_every = " << r.record_every << "\n";
  std::vector<std::string> on;
  if (r.stop.chord_arc_floor) on.push_back("chord_arc_floor");
  if (r.stop.rt_sign) on.push_back("rt_sign");
  if (r.stop.blowup_norm) on.push_back("blowup_norm");
  out << "\n[stop]\non = ";
  for (std::size_t i = 0; i < on.size(); ++i) out << (i ? "," : "") << on[i];
  out << "\nchord_arc_floor = " << fmt(r.chord_arc_floor) << "\nblowup_threshold = " << fmt(r.blowup_threshold)
      << "\nrt_convention = " << to_string(r.rt_convention) << "\n";
  out << "\n[physics]\ndensity_jump_over_2pi = " << fmt(r.density_jump_over_2pi) << "\n";
  if (r.schedule)
    out << "\n[schedule]\nA = " << fmt(r.schedule->A) << "\ntau = " << fmt(r.schedule->tau)
        << "\nkappa = " << fmt(r.schedule->kappa) << "\n";
  return out.str();
}

std::uint64_t config_digest(const ScenarioConfig& config) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char ch : serialize_config(config)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
  return serialize_config(a) == serialize_config(b);
}

}  // namespace muskat

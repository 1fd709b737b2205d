#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "muskat/integrator.hpp"

namespace muskat {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Scenario selection plus the run configuration it drives.
struct ScenarioConfig {
  std::string name;
  /// Scenario parameters from the [scenario] section, defaults filled in.
  std::map<std::string, double> params;
  RunConfig run;

  double param(const std::string& key) const;
};

const std::vector<std::string>& scenario_names();

/// Parameters each scenario accepts and their defaults.
const std::map<std::string, double>& scenario_defaults(const std::string& name);

/// Parses the INI text. Errors carry the line number (parse errors) or the
/// offending section.key (validation errors).
ScenarioConfig parse_config(std::istream& in, const std::string& source = "<config>");
ScenarioConfig load_config(const std::string& path);

/// INI text that parse_config maps back to an equal ScenarioConfig.
std::string serialize_config(const ScenarioConfig& config);

/// FNV-1a hash of serialize_config.
std::uint64_t config_digest(const ScenarioConfig& config);

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace muskat

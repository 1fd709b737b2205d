#include "muskat/snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace muskat {

using nlohmann::json;

namespace {

// JSON has no infinities; non-finite diagnostics travel as strings.
json encode(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double decode(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  if (s == "nan") return std::nan("");
  throw SnapshotError("unexpected diagnostic value '" + s + "'");
}

json interleave(const ComplexVector& c) {
  json a = json::array();
  for (Index i = 0; i < c.size(); ++i) {
    a.push_back(c[i].real());
    a.push_back(c[i].imag());
  }
  return a;
}

ComplexVector deinterleave(const json& a, Index n) {
  if (!a.is_array() || static_cast<Index>(a.size()) != 2 * n) throw SnapshotError("coefficient array has wrong length");
  ComplexVector c(n);
  for (Index i = 0; i < n; ++i) c[i] = Complex(a.at(2 * i).get<double>(), a.at(2 * i + 1).get<double>());
  return c;
}

}  // namespace

Snapshot make_snapshot(const TrajectoryEntry& entry, std::uint64_t config_digest) {
  return {entry.time, entry.state.size(), entry.state.p1, entry.state.p2, entry.diagnostics, config_digest};
}

std::string snapshot_to_json(const Snapshot& s) {
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(s.config_digest));
  const DiagnosticsRecord& d = s.diagnostics;
  json j;
  j["format"] = "muskat-snapshot";
  j["version"] = kSnapshotVersion;
  j["time"] = s.time;
  j["n_modes"] = s.n_modes;
  j["config_digest"] = digest;
  j["p1"] = interleave(s.p1);
  j["p2"] = interleave(s.p2);
  j["diagnostics"] = {{"time", encode(d.time)},
                      {"min_dz1", encode(d.min_dz1)},
                      {"chord_arc", encode(d.chord_arc)},
                      {"rt_min", encode(d.rt_min)},
                      {"rt_max", encode(d.rt_max)},
                      {"h4_norm", encode(d.h4_norm)},
                      {"analyticity_radius", encode(d.analyticity_radius)}};
  return j.dump(1) + "\n";
}

Snapshot snapshot_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SnapshotError(std::string("snapshot is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != "muskat-snapshot") throw SnapshotError("not a muskat snapshot");
    const int version = j.at("version").get<int>();
    if (version != kSnapshotVersion)
      throw SnapshotError("snapshot version " + std::to_string(version) + " is not supported");
    Snapshot s;
    s.time = j.at("time").get<double>();
    s.n_modes = j.at("n_modes").get<Index>();
    if (s.n_modes < 1) throw SnapshotError("n_modes must be positive");
    s.config_digest = std::stoull(j.at("config_digest").get<std::string>(), nullptr, 16);
    s.p1 = deinterleave(j.at("p1"), s.n_modes);
    s.p2 = deinterleave(j.at("p2"), s.n_modes);
    const json& d = j.at("diagnostics");
    s.diagnostics = {decode(d.at("time")),    decode(d.at("min_dz1")), decode(d.at("chord_arc")),
                     decode(d.at("rt_min")),  decode(d.at("rt_max")),  decode(d.at("h4_norm")),
                     decode(d.at("analyticity_radius"))};
    return s;
  } catch (const json::exception& e) {
    throw SnapshotError(std::string("malformed snapshot: ") + e.what());
  } catch (const std::logic_error&) {
    throw SnapshotError("malformed config digest");
  }
}

void save_snapshot(const Snapshot& s, const std::string& path) { write_atomic(path, snapshot_to_json(s)); }

Snapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open snapshot");
  std::ostringstream buf;
  buf << in.rdbuf();
  return snapshot_from_json(buf.str());
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(tmp + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw IoError(tmp + ": write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError(path + ": rename failed");
  }
}

}  // namespace muskat

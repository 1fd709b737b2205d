#pragma once

#include <cstdint>
#include <string>

#include "muskat/integrator.hpp"

namespace muskat {

class IoError : public Error {
 public:
  using Error::Error;
};

class SnapshotError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kSnapshotVersion = 1;

struct Snapshot {
  double time = 0.0;
  Index n_modes = 0;
  ComplexVector p1;
  ComplexVector p2;
  DiagnosticsRecord diagnostics;
  std::uint64_t config_digest = 0;

  InterfaceState state() const { return {p1, p2, time}; }
};

Snapshot make_snapshot(const TrajectoryEntry& entry, std::uint64_t config_digest);

std::string snapshot_to_json(const Snapshot& s);
/// Throws SnapshotError on a malformed document or a version mismatch.
Snapshot snapshot_from_json(const std::string& text);

void save_snapshot(const Snapshot& s, const std::string& path);
Snapshot load_snapshot(const std::string& path);

/// Writes to path.tmp and renames over path. Throws IoError.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace muskat

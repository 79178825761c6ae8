#pragma once

#include <string>

#include "dslab/config.hpp"

namespace dslab {

inline constexpr int kSchemaVersion = 1;

/// Everything a command produced. The envelope and payload are byte-stable
/// across reruns and thread counts; only the timing record varies, which is
/// why it rides in its own trailing line.
struct CommandResult {
  int exit_code = 0;
  std::string envelope;  // one JSON line echoing the config
  std::string payload;   // JSON lines, newline-terminated
  std::string csv;       // plot series, may be empty
  std::string timing;    // one JSON line, excluded from determinism
  std::string error;     // human-readable diagnostic for nonzero exits

  std::string deterministic_text() const { return envelope + payload; }
  std::string full_text() const { return envelope + payload + timing; }
};

std::string make_envelope_line(const ExperimentConfig& config);
std::string make_timing_line(double wall_seconds);

/// Inverse of make_envelope_line; used to replay a run from its echo.
ExperimentConfig config_from_envelope_line(const std::string& line);

}  // namespace dslab

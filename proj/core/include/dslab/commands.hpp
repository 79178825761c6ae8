#pragma once

#include "dslab/config.hpp"
#include "dslab/report.hpp"

namespace dslab {

/// Exit codes of the CLI surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitIo = 3;

/// A check command detected a violated invariant (an inequality row, a
/// failed reconciliation, a nonzero disjointness count).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CommandResult cmd_measure(const ExperimentConfig& config);
CommandResult cmd_variance(const ExperimentConfig& config);
CommandResult cmd_montecarlo(const ExperimentConfig& config);
CommandResult cmd_bounds(const ExperimentConfig& config);

/// Validates, dispatches, and maps exceptions onto exit codes. Never throws.
CommandResult run_command(const ExperimentConfig& config);

/// Writes the result to stdout or config.out_path (the CSV goes next to it
/// as <out>.csv). Returns kExitIo on write failure, else result.exit_code.
int write_outputs(const CommandResult& result, const ExperimentConfig& config);

}  // namespace dslab

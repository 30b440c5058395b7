#pragma once

#include "wiglab/cli/config.hpp"

namespace wiglab {

/// Process exit codes; every failure class maps to a distinct value and
/// leaves a machine-readable error.txt in the output directory.
enum class ExitCode : int {
    ok = 0,
    failure = 1,
    config = 2,
    blowup = 3,
    oracle_cap = 4,
    degenerate = 5,
    io = 6,
};

/// Executes the configured pipeline, writing result files and a manifest
/// into config.output_dir.
ExitCode run_experiment(const ExperimentConfig& config);

} // namespace wiglab

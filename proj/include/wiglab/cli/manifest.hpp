#pragma once

#include <string>
#include <vector>

#include "wiglab/cli/config.hpp"

namespace wiglab {

/// Flat key-value record accompanying every experiment: the effective
/// config, the discretization decisions actually in force, warnings, and
/// wall-clock time (the single nondeterministic field).
struct RunManifest {
    ExperimentConfig config;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> warnings;
    double wall_clock_seconds = 0.0;

    void fact(const std::string& key, const std::string& value) {
        facts.emplace_back(key, value);
    }
    void warn(const std::vector<std::string>& ws) {
        warnings.insert(warnings.end(), ws.begin(), ws.end());
    }
};

/// Scheme facts common to every run (boundary treatment, integrators,
/// matricization) plus the collision stability ratio for each eps in use.
void add_scheme_facts(RunManifest& manifest);

std::string manifest_text(const RunManifest& manifest);
void write_manifest(const std::string& path, const RunManifest& manifest);

} // namespace wiglab

#pragma once

#include <stdexcept>
#include <string>

namespace wiglab {

/// Invalid grids, mismatched runs, bad experiment configuration.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A time integration left the stable regime (max-norm growth detector).
struct blowup_error : std::runtime_error {
    explicit blowup_error(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force reference computation was requested beyond its cost cap.
struct oracle_cap_error : std::runtime_error {
    explicit oracle_cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Degenerate linear algebra input (all-zero matrix, rank below request).
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wiglab

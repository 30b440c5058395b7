#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiglab/core/gaussian.hpp"

namespace wiglab {

enum class ExperimentKind {
    forward_wigner,
    forward_liouville,
    forward_schrodinger,
    representative,
    sweep_epsilon,
    svd_study,
    identity_check,
    reconstruct,
};

std::string kind_name(ExperimentKind kind);
std::optional<ExperimentKind> kind_from_name(const std::string& name);

/// Wavepacket parameters for the wave-equation experiments.
struct PacketSpec {
    double amplitude = 1.0;
    double center_x = 0.0;
    double width_x = 1.0;
    double center_k = 0.0;
};

/// Flat key-path configuration of one experiment. Optional members mirror
/// the config blocks; validation reports every missing or inconsistent block
/// for the chosen kind, not just the first.
struct ExperimentConfig {
    std::optional<ExperimentKind> kind;

    // grid block
    std::optional<double> x_min, x_max, k_min, k_max;
    std::optional<int> n_x, n_k;

    // potential block (Gaussian background)
    std::optional<double> pot_amplitude, pot_center, pot_width;

    // data block: phase-space Gaussians for f_I and g_T
    std::optional<GaussianSpec> data_f, data_g;

    // packets block: wavefunctions for the wave-equation experiments
    std::optional<PacketSpec> phi, phi_prime, psi, psi_prime;

    // time block
    std::optional<double> dt, t_final;
    int snapshot_stride = 1;

    // eps block; literals are kept for exact round-tripping
    std::vector<double> eps_values;
    std::vector<std::string> eps_literals;

    // study block (center sets for matrix experiments)
    std::optional<int> study_n_centers;
    std::optional<double> study_center_min, study_center_max;
    std::vector<int> study_angle_ks{1, 3, 7, 10};

    // representative block
    std::optional<std::string> rep_family; // wigner | liouville | schrodinger

    // reconstruct block
    std::optional<double> reconstruct_lambda;
    std::optional<GaussianSpec> reconstruct_truth;
    std::optional<std::string> reconstruct_family;

    // output block
    std::string output_dir = "out";
    bool output_snapshots = false;
};

/// Parses the key-path = value format. Unknown keys, malformed values and
/// per-kind block violations are all collected; the throw message lists every
/// violation. Values accept plain decimals plus the literal forms 2^-n and
/// pi^-1*2^-n.
ExperimentConfig parse_config(const std::string& text);

/// Collects semantic violations for the chosen kind (empty means valid).
std::vector<std::string> validate_config(const ExperimentConfig& config);

/// Canonical serialization; parse_config(print_config(c)) round-trips and
/// shipped presets are stored in exactly this form.
std::string print_config(const ExperimentConfig& config);

/// Merges overrides on top of a base config (set fields win).
ExperimentConfig merge_config(const ExperimentConfig& base,
                              const ExperimentConfig& overrides);

/// Shipped presets: "paper-5.2" (full resolution) and "desk" (coarse,
/// minutes on a laptop). Throws config_error for unknown names.
ExperimentConfig preset_config(const std::string& name);
std::string preset_text(const std::string& name);

/// Number grammar shared by the config and the CLI (throws config_error).
double parse_number(const std::string& text);

} // namespace wiglab

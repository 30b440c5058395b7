#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiglab/core/field.hpp"

namespace wiglab {

/// Parameters of a Gaussian profile. Pure-x Gaussians (potentials, packet
/// envelopes) leave the momentum members unset.
struct GaussianSpec {
    double amplitude = 1.0;
    double center_x = 0.0;
    double width_x = 1.0;
    std::optional<double> center_k;
    std::optional<double> width_k;
};

/// Rescaled Planck constant, dimensionless and positive.
struct Epsilon {
    double value = 1.0;
    explicit Epsilon(double v);
};

/// Samples amplitude*exp(-(x-cx)^2/wx^2 - (k-ck)^2/wk^2) on the grid.
/// Requires both x and k components in the spec.
PhaseField gaussian_phase_field(const GaussianSpec& spec, const PhaseGrid& grid);

/// Semiclassical wavepacket amplitude*exp(-(x-cx)^2/(2 wx^2))*exp(i ck x/eps)
/// sampled on the x-axis. A missing center_k means a real packet.
ComplexField gaussian_packet(const GaussianSpec& spec, const PhaseGrid& grid,
                             Epsilon eps);

/// Boundary-decay diagnostics. The periodic-spectral treatment of both axes
/// assumes data decayed at the domain edges; values above `warn_ratio` of the
/// peak produce one warning string per offending axis. Ratios above
/// `fail_ratio` throw config_error.
std::vector<std::string> boundary_decay_warnings(const PhaseField& f,
                                                 double warn_ratio = 1e-10,
                                                 double fail_ratio = 1e-3);
std::vector<std::string> boundary_decay_warnings(const ComplexField& f,
                                                 double warn_ratio = 1e-10,
                                                 double fail_ratio = 1e-3);

} // namespace wiglab

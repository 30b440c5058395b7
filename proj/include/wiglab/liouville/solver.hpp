#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiglab/core/field.hpp"
#include "wiglab/core/potential.hpp"
#include "wiglab/core/trajectory.hpp"
#include "wiglab/schrodinger/solver.hpp" // Direction

namespace wiglab {

/// Endpoint data for the characteristic solver: a sampled field plus, when
/// the data is a Gaussian profile, an exact off-grid closure that removes
/// interpolation noise from convergence studies. Off-domain points are
/// wrapped periodically to match the spectral solvers.
struct PhaseData {
    PhaseField field;
    std::optional<GaussianSpec> closure;

    static PhaseData from_gaussian(const GaussianSpec& spec, const PhaseGrid& grid);
    static PhaseData from_field(const PhaseField& f);

    /// Value at an arbitrary phase-space point; *wrapped flags x-domain exits.
    double eval(double x, double k, bool* wrapped = nullptr) const;
};

/// Classical-limit evolution df/dt + k df/dx - V'(x) df/dk = 0 computed by
/// tracing grid nodes along Hamiltonian characteristics to the data time.
/// Snapshot m holds time m*dt for both directions.
struct LiouvilleRun {
    Potential potential;
    double dt = 0.0;
    double t_final = 0.0;
    Direction direction = Direction::forward;
    Trajectory<PhaseField> snapshots;
    std::vector<std::string> warnings;
};

/// Forward mode traces each node backward to the initial data; backward mode
/// (the adjoint final-value problem) traces forward to the data at T.
LiouvilleRun solve_liouville(const PhaseData& data, const Potential& potential,
                             double dt, double t_final, Direction direction,
                             int snapshot_stride = 1);

/// Duhamel form of the linearized equation: for each node, trapezoid over the
/// stored times of vtilde'(X(s)) * df_b/dk(s, X(s), K(s)) along the
/// background characteristic through the node at time T. The k-derivative is
/// spectral per snapshot and read off-grid bicubically. Returns the
/// perturbation at time T.
PhaseField solve_liouville_perturbed(const LiouvilleRun& background,
                                     const Potential& vtilde, double dt);

} // namespace wiglab

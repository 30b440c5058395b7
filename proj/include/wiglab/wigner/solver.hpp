#pragma once

#include <string>
#include <vector>

#include "wiglab/core/field.hpp"
#include "wiglab/core/potential.hpp"
#include "wiglab/core/trajectory.hpp"
#include "wiglab/schrodinger/solver.hpp" // Direction

namespace wiglab {

/// Completed phase-space kinetic evolution df/dt + k df/dx = L_V[f].
/// Snapshot m holds the state at time m*dt for either direction; the adjoint
/// (backward) problem has the same generator run in reversed time.
struct WignerRun {
    Epsilon eps;
    Potential potential;
    double dt = 0.0;
    double t_final = 0.0;
    Direction direction = Direction::forward;
    Trajectory<PhaseField> snapshots;
    std::vector<std::string> warnings;
};

/// One SSP-RK3 step of df/dt = -k df/dx + L_V[f]; WENO5 transport per k-row,
/// spectral collision per x-column. Requires dt * max|k| / dx <= 0.9.
PhaseField step_wigner(const PhaseField& f, const Potential& potential, Epsilon eps,
                       double dt);

/// Forward mode integrates initial data over [0, T]; backward mode produces
/// g(t) on [0, T] from final data g_T by integrating the reversed-time
/// equation (velocity and potential signs flipped). Throws blowup_error when
/// max|f| grows by 1e3 over the initial level.
WignerRun solve_wigner(const PhaseField& data, const Potential& potential, Epsilon eps,
                       double dt, double t_final, Direction direction,
                       int snapshot_stride = 1);

/// Linearized solve: df/dt + k df/dx = L_Vb[f] + L_vtilde[f_b] from zero
/// initial data, the source taken from the stored background run. Returns
/// the perturbation at time T.
PhaseField solve_wigner_perturbed(const WignerRun& background, const Potential& vtilde,
                                  Epsilon eps);

} // namespace wiglab

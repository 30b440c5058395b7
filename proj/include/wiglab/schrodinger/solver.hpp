#pragma once

#include <string>
#include <vector>

#include "wiglab/core/field.hpp"
#include "wiglab/core/potential.hpp"
#include "wiglab/core/trajectory.hpp"

namespace wiglab {

enum class Direction { forward, backward };

/// Completed evolution of i*eps*dphi/dt = -(eps^2/2) dxx phi + V phi on the
/// periodic x-axis. Snapshot m holds the state at time m*dt regardless of the
/// direction the run was generated in.
struct SchrodingerRun {
    Epsilon eps;
    Potential potential;
    double dt = 0.0;
    double t_final = 0.0;
    Direction direction = Direction::forward;
    Trajectory<ComplexField> snapshots;
    std::vector<std::string> warnings;
};

/// One Strang step: half potential phase, spectral kinetic step, half
/// potential phase. Exactly norm-preserving; second order in dt. Negative dt
/// applies the exact inverse step.
ComplexField step_strang(const ComplexField& phi, const Potential& potential,
                         Epsilon eps, double dt);

/// Forward mode integrates initial data over [0, T]; backward mode takes the
/// final-time data and fills states on [0, T] by inverse steps. T must be an
/// integer multiple of dt. snapshot_stride thins stored frames.
SchrodingerRun solve_schrodinger(const ComplexField& data, const Potential& potential,
                                 Epsilon eps, double dt, double t_final,
                                 Direction direction, int snapshot_stride = 1);

/// Source-driven linearization: integrates
///   i*eps*dphi/dt = -(eps^2/2) dxx phi + V_b phi + vtilde * phi_b
/// from zero data to T, injecting the source at the midpoint of each step.
/// Requires the background run stored at every step. Returns phi(T).
ComplexField solve_schrodinger_perturbed(const SchrodingerRun& background,
                                         const Potential& vtilde, Epsilon eps);

} // namespace wiglab

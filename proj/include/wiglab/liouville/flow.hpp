#pragma once

#include "wiglab/core/potential.hpp"

namespace wiglab {

/// One point of the Hamiltonian phase flow dx/dt = k, dk/dt = -V'(x).
struct FlowState {
    double x = 0.0;
    double k = 0.0;
};

/// RK4 integration of the flow over t_span (negative spans trace backward).
/// The step count is ceil(|t_span| / dt); energy drift is O(dt^4).
FlowState hamilton_flow(FlowState start, const Potential& potential, double t_span,
                        double dt);

} // namespace wiglab

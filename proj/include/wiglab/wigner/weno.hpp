#pragma once

#include <span>

namespace wiglab {

/// Fifth-order WENO approximation of d/dx (v * f) on one periodic row with
/// constant advection speed v (upwind direction fixed by the sign of v).
/// Smoothness-indicator regularization uses the standard 1e-6 constant.
void weno5_flux_derivative(std::span<const double> f, std::span<double> df,
                           double v, double dx);

} // namespace wiglab

#pragma once

#include "wiglab/core/field.hpp"
#include "wiglab/core/potential.hpp"

namespace wiglab {

/// Nonlocal potential operator of the phase-space transport equation,
/// evaluated pseudo-spectrally per x-column: transform k to its dual y,
/// multiply by i * (1/eps)[V(x + eps y/2) - V(x - eps y/2)], transform back.
/// Anti-self-adjoint for real V; zero k-mean at every x; insensitive to
/// constant shifts of V; exactly eps-independent for quadratic V.
PhaseField apply_collision(const Potential& potential, const PhaseField& f, Epsilon eps);

/// Symmetric k-difference quotient (1/eps)[f(x, k + eps p/2) - f(x, k - eps p/2)]
/// via spectral k-shifts; converges to p * df/dk as eps -> 0.
PhaseField apply_d_eps(const PhaseField& f, double p, Epsilon eps);

} // namespace wiglab

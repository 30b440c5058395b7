#pragma once

#include <utility>
#include <vector>

#include "wiglab/core/field.hpp"
#include "wiglab/core/gaussian.hpp"

namespace wiglab {

/// Phase-space transform of a wavefunction pair,
///   W(x,k) = (1/2pi) Int e^{iky} phi1(x - eps y/2) conj(phi2)(x + eps y/2) dy,
/// computed over the y-lattice dual to the k-grid, with the half-shifts done
/// by Fourier interpolation in x. W[phi,phi] is real up to roundoff.
PhaseField wigner_transform(const ComplexField& phi1, const ComplexField& phi2,
                            Epsilon eps, const PhaseGrid& grid);

/// Zeroth and first k-moments: rho(x) = sum_k f dk, J(x) = sum_k k f dk.
/// Real parts of the sums; the transform of a wavefunction recovers the
/// particle and current densities.
std::pair<std::vector<double>, std::vector<double>> moments(const PhaseField& f);

} // namespace wiglab

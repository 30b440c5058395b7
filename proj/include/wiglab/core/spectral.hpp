#pragma once

#include <span>

#include "wiglab/core/field.hpp"

namespace wiglab {

/// Periodic translation g(u) = f(u - shift) of one complex row sampled on n
/// uniform nodes of a period-L axis, computed by a phase multiply on the
/// spectrum. The Nyquist bin uses the symmetric cos(xi*shift) weight so real
/// rows stay real and integer-node shifts reproduce rolls exactly.
void spectral_shift_row(std::span<cplx> row, double period, double shift);

/// Periodic spectral derivative of one row; Nyquist bin zeroed.
void spectral_derivative_row(std::span<cplx> row, double period);

/// f(x, k - shift) with periodic wraparound in k (Fourier interpolation).
PhaseField spectral_shift_k(const PhaseField& f, double shift);

/// d/dk of the field, spectrally per x-column.
PhaseField spectral_derivative_k(const PhaseField& f);

/// d/dx of the field, spectrally per k-row.
PhaseField spectral_derivative_x(const PhaseField& f);

} // namespace wiglab

#pragma once

#include <complex>
#include <span>

namespace wiglab {

/// In-place power-of-two DFT backed by FFTW. Forward applies the
/// e^{-2*pi*i*j*m/n} kernel without normalization; inverse applies the
/// conjugate kernel and divides by n, so inverse(forward(v)) == v.
/// Plans are cached per length and safe to execute concurrently.
void fft_forward(std::span<std::complex<double>> data);
void fft_inverse(std::span<std::complex<double>> data);

} // namespace wiglab

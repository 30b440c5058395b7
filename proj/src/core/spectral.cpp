#include "wiglab/core/spectral.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "wiglab/core/fft.hpp"
#include "wiglab/core/parallel.hpp"

namespace wiglab {

namespace {

double wrapped_freq(int m, int n, double period) {
    const int mm = (m <= n / 2) ? m : m - n;
    return 2.0 * std::numbers::pi * mm / period;
}

} // namespace

void spectral_shift_row(std::span<cplx> row, double period, double shift) {
    const int n = static_cast<int>(row.size());
    fft_forward(row);
    for (int m = 0; m < n; ++m) {
        const double xi = wrapped_freq(m, n, period);
        if (m == n / 2) {
            row[m] *= std::cos(xi * shift);
        } else {
            row[m] *= std::polar(1.0, -xi * shift);
        }
    }
    fft_inverse(row);
}

void spectral_derivative_row(std::span<cplx> row, double period) {
    const int n = static_cast<int>(row.size());
    fft_forward(row);
    for (int m = 0; m < n; ++m) {
        if (m == n / 2) {
            row[m] = cplx{0.0, 0.0};
        } else {
            row[m] *= cplx{0.0, wrapped_freq(m, n, period)};
        }
    }
    fft_inverse(row);
}

PhaseField spectral_shift_k(const PhaseField& f, double shift) {
    PhaseField out = f;
    const int n_x = f.grid.n_x;
    const int n_k = f.grid.n_k;
    const double period = f.grid.k_length();
    parallel_for(static_cast<size_t>(n_x), [&](size_t i) {
        std::span<cplx> row(out.values.data() + i * n_k, static_cast<size_t>(n_k));
        spectral_shift_row(row, period, shift);
    });
    return out;
}

PhaseField spectral_derivative_k(const PhaseField& f) {
    PhaseField out = f;
    const int n_x = f.grid.n_x;
    const int n_k = f.grid.n_k;
    const double period = f.grid.k_length();
    parallel_for(static_cast<size_t>(n_x), [&](size_t i) {
        std::span<cplx> row(out.values.data() + i * n_k, static_cast<size_t>(n_k));
        spectral_derivative_row(row, period);
    });
    return out;
}

PhaseField spectral_derivative_x(const PhaseField& f) {
    PhaseField out = f;
    const int n_x = f.grid.n_x;
    const int n_k = f.grid.n_k;
    const double period = f.grid.x_length();
    parallel_for(static_cast<size_t>(n_k), [&](size_t j) {
        std::vector<cplx> col(static_cast<size_t>(n_x));
        for (int i = 0; i < n_x; ++i) col[i] = f.at(i, static_cast<int>(j));
        spectral_derivative_row(col, period);
        for (int i = 0; i < n_x; ++i) out.at(i, static_cast<int>(j)) = col[i];
    });
    return out;
}

} // namespace wiglab

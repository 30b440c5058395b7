#pragma once

#include <cmath>
#include <numbers>

namespace wiglab {

/// Shared discretization of phase space: a periodic x-grid crossed with a
/// k-grid that is treated as periodic for spectral operations. Node i of the
/// x-axis sits at x_min + i*dx with the right endpoint excluded; the k-axis
/// is analogous. Counts are powers of two so transforms stay fast.
struct PhaseGrid {
    double x_min = 0.0;
    double x_max = 1.0;
    double k_min = -1.0;
    double k_max = 1.0;
    int n_x = 8;
    int n_k = 8;
    double dx = 0.125;
    double dk = 0.25;
    bool periodic_x = true;

    double x(int i) const { return x_min + i * dx; }
    double k(int j) const { return k_min + j * dk; }
    double x_length() const { return x_max - x_min; }
    double k_length() const { return k_max - k_min; }

    /// Spatial frequency of x-spectrum bin m (signed, wrapped past n_x/2).
    double xi(int m) const {
        const int mm = (m <= n_x / 2) ? m : m - n_x;
        return 2.0 * std::numbers::pi * mm / x_length();
    }

    /// Dual variable of the k-axis for spectrum bin m (signed, wrapped).
    double y(int m) const {
        const int mm = (m <= n_k / 2) ? m : m - n_k;
        return 2.0 * std::numbers::pi * mm / k_length();
    }

    bool operator==(const PhaseGrid&) const = default;
};

/// Builds a validated grid. Throws config_error for inverted bounds or
/// point counts that are not powers of two >= 8.
PhaseGrid make_phase_grid(double x_min, double x_max, int n_x,
                          double k_min, double k_max, int n_k);

} // namespace wiglab

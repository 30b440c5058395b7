#include "wiglab/wigner/weno.hpp"

#include <algorithm>
#include <vector>

namespace wiglab {

namespace {

constexpr double kWenoEps = 1e-6;

// Face value from five samples ordered upwind-to-downwind; the face lies
// between c and d. The regularization carries the squared row scale so the
// weights are invariant under f -> c*f and the reconstruction stays exactly
// homogeneous (the transport operator must commute with scaling).
inline double weno5_face(double a, double b, double c, double d, double e,
                         double eps_scaled) {
    const double q0 = (2.0 * a - 7.0 * b + 11.0 * c) / 6.0;
    const double q1 = (-b + 5.0 * c + 2.0 * d) / 6.0;
    const double q2 = (2.0 * c + 5.0 * d - e) / 6.0;

    const double b0 = 13.0 / 12.0 * (a - 2.0 * b + c) * (a - 2.0 * b + c) +
                      0.25 * (a - 4.0 * b + 3.0 * c) * (a - 4.0 * b + 3.0 * c);
    const double b1 = 13.0 / 12.0 * (b - 2.0 * c + d) * (b - 2.0 * c + d) +
                      0.25 * (b - d) * (b - d);
    const double b2 = 13.0 / 12.0 * (c - 2.0 * d + e) * (c - 2.0 * d + e) +
                      0.25 * (3.0 * c - 4.0 * d + e) * (3.0 * c - 4.0 * d + e);

    const double a0 = 0.1 / ((eps_scaled + b0) * (eps_scaled + b0));
    const double a1 = 0.6 / ((eps_scaled + b1) * (eps_scaled + b1));
    const double a2 = 0.3 / ((eps_scaled + b2) * (eps_scaled + b2));
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

} // namespace

void weno5_flux_derivative(std::span<const double> f, std::span<double> df,
                           double v, double dx) {
    const int n = static_cast<int>(f.size());
    if (v == 0.0) {
        for (int i = 0; i < n; ++i) df[i] = 0.0;
        return;
    }

    // Periodic padding: three ghost cells on each side.
    std::vector<double> p(static_cast<size_t>(n) + 6);
    for (int i = 0; i < n; ++i) p[i + 3] = f[i];
    for (int i = 0; i < 3; ++i) {
        p[i] = f[n - 3 + i];
        p[n + 3 + i] = f[i];
    }

    double scale2 = 0.0;
    for (int i = 0; i < n; ++i) scale2 = std::max(scale2, f[i] * f[i]);
    const double eps_scaled = kWenoEps * scale2 + 1e-300;

    // face[i] reconstructs f at interface i-1/2.
    std::vector<double> face(static_cast<size_t>(n) + 1);
    if (v > 0.0) {
        for (int i = 0; i <= n; ++i) {
            const int c = i + 2; // padded index of the last upwind cell
            face[i] = weno5_face(p[c - 2], p[c - 1], p[c], p[c + 1], p[c + 2],
                                 eps_scaled);
        }
    } else {
        for (int i = 0; i <= n; ++i) {
            const int c = i + 3; // padded index of the first downwind cell
            face[i] = weno5_face(p[c + 2], p[c + 1], p[c], p[c - 1], p[c - 2],
                                 eps_scaled);
        }
    }

    const double scale = v / dx;
    for (int i = 0; i < n; ++i) df[i] = scale * (face[i + 1] - face[i]);
}

} // namespace wiglab

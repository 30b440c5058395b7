#include "wiglab/wigner/transform.hpp"

#include <cmath>
#include <numbers>

#include "wiglab/core/errors.hpp"
#include "wiglab/core/fft.hpp"
#include "wiglab/core/parallel.hpp"

namespace wiglab {

PhaseField wigner_transform(const ComplexField& phi1, const ComplexField& phi2,
                            Epsilon eps, const PhaseGrid& grid) {
    if (!(phi1.grid == grid) || !(phi2.grid == grid)) {
        throw config_error("wigner_transform: wavefunctions must live on the target grid");
    }
    const int n_x = grid.n_x;
    const int n_k = grid.n_k;
    const double period = grid.x_length();

    // x-spectra computed once; each y-node then costs two phase-multiplied
    // inverse transforms.
    std::vector<cplx> s1(phi1.values), s2(phi2.values);
    fft_forward(s1);
    fft_forward(s2);

    // product[m * n_x + i] = phi1(x_i - eps y_m / 2) * conj(phi2)(x_i + eps y_m / 2)
    std::vector<cplx> product(static_cast<size_t>(n_k) * n_x);
    parallel_for(static_cast<size_t>(n_k), [&](size_t m) {
        const double y = grid.y(static_cast<int>(m));
        const double half = 0.5 * eps.value * y;
        std::vector<cplx> a(s1), b(s2);
        for (int q = 0; q < n_x; ++q) {
            const double xi = grid.xi(q);
            if (q == n_x / 2) {
                a[q] *= std::cos(xi * half);
                b[q] *= std::cos(xi * half);
            } else {
                a[q] *= std::polar(1.0, -xi * half);
                b[q] *= std::polar(1.0, xi * half);
            }
        }
        fft_inverse(a);
        fft_inverse(b);
        cplx* slot = product.data() + m * n_x;
        for (int i = 0; i < n_x; ++i) slot[i] = a[i] * std::conj(b[i]);
    });

    PhaseField w = PhaseField::zeros(grid, &phi1 == &phi2 || phi1.values == phi2.values);
    parallel_for(static_cast<size_t>(n_x), [&](size_t i) {
        std::vector<cplx> g(static_cast<size_t>(n_k));
        for (int m = 0; m < n_k; ++m) {
            const double y = grid.y(m);
            g[m] = product[static_cast<size_t>(m) * n_x + i] *
                   std::polar(1.0, grid.k_min * y);
        }
        fft_inverse(g);
        // (dy * n_k / 2pi) = 1/dk folds the quadrature weight into the DFT.
        const double scale = 1.0 / grid.dk;
        for (int j = 0; j < n_k; ++j) w.at(static_cast<int>(i), j) = scale * g[j];
    });
    return w;
}

std::pair<std::vector<double>, std::vector<double>> moments(const PhaseField& f) {
    const int n_x = f.grid.n_x;
    const int n_k = f.grid.n_k;
    std::vector<double> rho(n_x, 0.0), current(n_x, 0.0);
    for (int i = 0; i < n_x; ++i) {
        cplx r{0.0, 0.0}, j1{0.0, 0.0};
        for (int j = 0; j < n_k; ++j) {
            r += f.at(i, j);
            j1 += f.grid.k(j) * f.at(i, j);
        }
        rho[i] = r.real() * f.grid.dk;
        current[i] = j1.real() * f.grid.dk;
    }
    return {std::move(rho), std::move(current)};
}

} // namespace wiglab

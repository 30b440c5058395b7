#include "wiglab/wigner/collision.hpp"

#include "wiglab/core/fft.hpp"
#include "wiglab/core/parallel.hpp"
#include "wiglab/core/spectral.hpp"
#include "wiglab/wigner/collision_table.hpp"

namespace wiglab {

CollisionTable::CollisionTable(const PhaseGrid& grid, const Potential& potential,
                               Epsilon eps)
    : n_x_(grid.n_x), n_k_(grid.n_k) {
    delta_.resize(static_cast<size_t>(n_x_) * n_k_);
    for (int i = 0; i < n_x_; ++i) {
        const double x = grid.x(i);
        for (int m = 0; m < n_k_; ++m) {
            // The unpaired Nyquist bin of an odd multiplier is dropped so
            // real fields map to real fields.
            delta_[static_cast<size_t>(i) * n_k_ + m] =
                (m == n_k_ / 2) ? 0.0 : potential.delta_eps(x, grid.y(m), eps);
        }
    }
}

void CollisionTable::apply(const PhaseField& f, PhaseField& out, double sign) const {
    parallel_for(static_cast<size_t>(n_x_), [&](size_t i) {
        std::vector<cplx> row(f.values.begin() + i * n_k_,
                              f.values.begin() + (i + 1) * n_k_);
        fft_forward(row);
        const double* d = delta_.data() + i * n_k_;
        for (int m = 0; m < n_k_; ++m) {
            row[m] *= cplx{0.0, sign * d[m]};
        }
        fft_inverse(row);
        cplx* slot = out.values.data() + i * n_k_;
        for (int m = 0; m < n_k_; ++m) slot[m] += row[m];
    });
}

PhaseField apply_collision(const Potential& potential, const PhaseField& f,
                           Epsilon eps) {
    CollisionTable table(f.grid, potential, eps);
    PhaseField out = PhaseField::zeros(f.grid, f.hermitian_real);
    table.apply(f, out, 1.0);
    return out;
}

PhaseField apply_d_eps(const PhaseField& f, double p, Epsilon eps) {
    const double half = 0.5 * eps.value * p;
    PhaseField plus = spectral_shift_k(f, -half);  // f(x, k + eps p/2)
    PhaseField minus = spectral_shift_k(f, half);  // f(x, k - eps p/2)
    PhaseField out = PhaseField::zeros(f.grid, f.hermitian_real);
    const double scale = 1.0 / eps.value;
    for (size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = scale * (plus.values[i] - minus.values[i]);
    }
    return out;
}

} // namespace wiglab

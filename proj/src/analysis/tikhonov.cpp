#include "wiglab/analysis/tikhonov.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "wiglab/core/errors.hpp"

namespace wiglab {

TikhonovResult tikhonov_reconstruct(const RepresentativeMatrix& m,
                                    const std::vector<cplx>& data, double lambda) {
    if (lambda < 0.0) throw config_error("tikhonov_reconstruct: lambda must be >= 0");
    const size_t n_pairs = static_cast<size_t>(m.n_i()) * m.n_j();
    if (data.size() != n_pairs) {
        throw config_error("tikhonov_reconstruct: data length must be N_i * N_j");
    }
    const int n_x = m.n_x();
    const double dx = m.entries.front().grid.dx;
    const bool complex_kernels = m.kind == RepKind::schrodinger;

    // Pairing rows: Int vtilde R dx = sum_l vtilde_l R_l dx. Complex kernels
    // split into real and imaginary rows so the unknown stays real.
    const int rows = static_cast<int>(n_pairs) * (complex_kernels ? 2 : 1);
    Eigen::MatrixXd a(rows, n_x);
    Eigen::VectorXd d(rows);
    for (size_t p = 0; p < n_pairs; ++p) {
        const auto& values = m.entries[p].values;
        if (complex_kernels) {
            for (int c = 0; c < n_x; ++c) {
                a(static_cast<int>(2 * p), c) = dx * values[c].real();
                a(static_cast<int>(2 * p + 1), c) = dx * values[c].imag();
            }
            d(static_cast<int>(2 * p)) = data[p].real();
            d(static_cast<int>(2 * p + 1)) = data[p].imag();
        } else {
            for (int c = 0; c < n_x; ++c) {
                a(static_cast<int>(p), c) = dx * values[c].real();
            }
            d(static_cast<int>(p)) = data[p].real();
        }
    }

    TikhonovResult result;
    Eigen::VectorXd v;
    if (lambda > 0.0) {
        // Normal equations with the discrete L2 weight on the penalty.
        Eigen::MatrixXd normal = a.transpose() * a;
        normal.diagonal().array() += lambda * dx;
        v = normal.ldlt().solve(a.transpose() * d);
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& s = svd.singularValues();
        const double tol = 1e-12 * (s.size() > 0 ? s(0) : 0.0);
        if (s.size() == 0 || s(s.size() - 1) <= tol || a.rows() < a.cols()) {
            result.pseudo_inverse = true;
        }
        svd.setThreshold(1e-12);
        v = svd.solve(d); // minimal-norm least squares
    }

    result.vtilde.assign(static_cast<size_t>(n_x), 0.0);
    for (int c = 0; c < n_x; ++c) result.vtilde[c] = v(c);
    return result;
}

} // namespace wiglab

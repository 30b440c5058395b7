#include "wiglab/analysis/convergence.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

#include "wiglab/core/errors.hpp"

namespace wiglab {

namespace {

bool real_kind(RepKind kind) { return kind != RepKind::schrodinger; }

Eigen::MatrixXd flatten_real(const RepresentativeMatrix& m) {
    const int rows = m.n_i() * m.n_j();
    const int cols = m.n_x();
    const double w = std::sqrt(m.entries.front().grid.dx);
    Eigen::MatrixXd a(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& values = m.entries[static_cast<size_t>(r)].values;
        for (int c = 0; c < cols; ++c) a(r, c) = w * values[c].real();
    }
    return a;
}

Eigen::MatrixXcd flatten_complex(const RepresentativeMatrix& m) {
    const int rows = m.n_i() * m.n_j();
    const int cols = m.n_x();
    const double w = std::sqrt(m.entries.front().grid.dx);
    Eigen::MatrixXcd a(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& values = m.entries[static_cast<size_t>(r)].values;
        for (int c = 0; c < cols; ++c) a(r, c) = w * values[c];
    }
    return a;
}

template <class Mat>
std::vector<double> relative_sv(const Mat& a) {
    Eigen::BDCSVD<Mat> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) <= 0.0) {
        throw degenerate_error("relative_singular_values: zero matrix");
    }
    std::vector<double> out(static_cast<size_t>(s.size()));
    for (Eigen::Index i = 0; i < s.size(); ++i) out[i] = s(i) / s(0);
    return out;
}

template <class Mat>
double angle_between(const Mat& limit, const Mat& approx, int k) {
    Eigen::BDCSVD<Mat> svd_l(limit, Eigen::ComputeThinU);
    Eigen::BDCSVD<Mat> svd_a(approx, Eigen::ComputeThinU);
    for (const auto* svd : {&svd_l, &svd_a}) {
        const auto& s = svd->singularValues();
        if (k < 1 || k > s.size() || s(k - 1) < 1e-12 * s(0)) {
            throw degenerate_error("subspace_angle: k exceeds the numerical rank");
        }
    }
    const Mat q_l = svd_l.matrixU().leftCols(k);
    const Mat q_a = svd_a.matrixU().leftCols(k);
    const Mat defect = q_l - q_a * (q_a.adjoint() * q_l);
    Eigen::BDCSVD<Mat> svd_d(defect);
    return svd_d.singularValues()(0);
}

} // namespace

std::vector<double> relative_singular_values(const RepresentativeMatrix& m) {
    if (real_kind(m.kind)) return relative_sv(flatten_real(m));
    return relative_sv(flatten_complex(m));
}

SingularValueErrors singular_value_errors(
    const std::vector<std::pair<double, RepresentativeMatrix>>& sweep,
    const RepresentativeMatrix& limit, std::vector<int> indices) {
    SingularValueErrors out;
    out.indices = std::move(indices);
    const std::vector<double> s_limit = relative_singular_values(limit);

    std::vector<std::vector<double>> s_sweep;
    for (const auto& [eps, matrix] : sweep) {
        if (matrix.n_i() != limit.n_i() || matrix.n_j() != limit.n_j() ||
            matrix.n_x() != limit.n_x()) {
            throw config_error("singular_value_errors: shape mismatch with limit");
        }
        out.eps_values.push_back(eps);
        s_sweep.push_back(relative_singular_values(matrix));
    }

    for (int idx : out.indices) {
        const size_t i = static_cast<size_t>(idx) - 1; // 1-based indices
        if (i >= s_limit.size() || s_limit[i] == 0.0) {
            out.warnings.push_back("singular value index " + std::to_string(idx) +
                                   " skipped: limit value is zero");
            continue;
        }
        std::vector<double> curve;
        for (const auto& s : s_sweep) {
            curve.push_back(std::abs(s[i] - s_limit[i]) / std::abs(s_limit[i]));
        }
        out.errors[idx] = std::move(curve);
    }
    return out;
}

double subspace_angle(const RepresentativeMatrix& limit,
                      const RepresentativeMatrix& approx, int k) {
    if (limit.n_i() != approx.n_i() || limit.n_j() != approx.n_j() ||
        limit.n_x() != approx.n_x()) {
        throw config_error("subspace_angle: shape mismatch");
    }
    if (real_kind(limit.kind) && real_kind(approx.kind)) {
        return angle_between(flatten_real(limit), flatten_real(approx), k);
    }
    return angle_between(flatten_complex(limit), flatten_complex(approx), k);
}

ConvergenceReport err_curve_and_slope(const std::vector<double>& eps_values,
                                      const std::vector<double>& errs) {
    if (eps_values.size() != errs.size() || eps_values.size() < 3) {
        throw config_error("err_curve_and_slope: need at least three matched points");
    }
    for (size_t i = 0; i < eps_values.size(); ++i) {
        if (!(errs[i] > 0.0)) {
            throw config_error("err_curve_and_slope: errors must be positive");
        }
        if (i > 0 && !(eps_values[i] < eps_values[i - 1])) {
            throw config_error("err_curve_and_slope: eps must be strictly decreasing");
        }
    }

    const size_t n = eps_values.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double x = std::log2(eps_values[i]);
        const double y = std::log2(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    ConvergenceReport report;
    report.eps_values = eps_values;
    report.err_values = errs;
    report.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return report;
}

} // namespace wiglab

#include "wiglab/core/gaussian.hpp"

#include <cmath>
#include <sstream>

#include "wiglab/core/errors.hpp"

namespace wiglab {

Epsilon::Epsilon(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw config_error("epsilon must be positive and finite");
    }
}

PhaseField gaussian_phase_field(const GaussianSpec& spec, const PhaseGrid& grid) {
    if (!spec.center_k || !spec.width_k) {
        throw config_error("gaussian_phase_field: spec needs momentum center and width");
    }
    if (!(spec.width_x > 0.0) || !(*spec.width_k > 0.0)) {
        throw config_error("gaussian_phase_field: widths must be positive");
    }
    PhaseField f = PhaseField::zeros(grid, /*hermitian_real=*/true);
    const double ck = *spec.center_k;
    const double wk = *spec.width_k;
    for (int i = 0; i < grid.n_x; ++i) {
        const double ex = (grid.x(i) - spec.center_x) / spec.width_x;
        const double gx = std::exp(-ex * ex);
        for (int j = 0; j < grid.n_k; ++j) {
            const double ek = (grid.k(j) - ck) / wk;
            f.at(i, j) = spec.amplitude * gx * std::exp(-ek * ek);
        }
    }
    return f;
}

ComplexField gaussian_packet(const GaussianSpec& spec, const PhaseGrid& grid,
                             Epsilon eps) {
    if (!(spec.width_x > 0.0)) {
        throw config_error("gaussian_packet: width_x must be positive");
    }
    ComplexField phi = ComplexField::zeros(grid);
    const double k0 = spec.center_k.value_or(0.0);
    for (int i = 0; i < grid.n_x; ++i) {
        const double x = grid.x(i);
        const double e = (x - spec.center_x) / spec.width_x;
        const double env = spec.amplitude * std::exp(-0.5 * e * e);
        phi.values[i] = env * std::polar(1.0, k0 * x / eps.value);
    }
    return phi;
}

namespace {

void check_ratio(double edge, double peak, const char* axis, double warn_ratio,
                 double fail_ratio, std::vector<std::string>& warnings) {
    if (peak <= 0.0) return;
    const double ratio = edge / peak;
    if (ratio > fail_ratio) {
        std::ostringstream os;
        os << "data does not decay at the " << axis << " boundary (ratio " << ratio << ")";
        throw config_error(os.str());
    }
    if (ratio > warn_ratio) {
        std::ostringstream os;
        os << axis << " boundary decay " << ratio << " exceeds " << warn_ratio
           << " of peak";
        warnings.push_back(os.str());
    }
}

} // namespace

std::vector<std::string> boundary_decay_warnings(const PhaseField& f,
                                                 double warn_ratio,
                                                 double fail_ratio) {
    std::vector<std::string> warnings;
    const int n_x = f.grid.n_x;
    const int n_k = f.grid.n_k;
    double peak = 0.0;
    for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
    double edge_x = 0.0;
    for (int j = 0; j < n_k; ++j) {
        edge_x = std::max(edge_x, std::abs(f.at(0, j)));
        edge_x = std::max(edge_x, std::abs(f.at(n_x - 1, j)));
    }
    double edge_k = 0.0;
    for (int i = 0; i < n_x; ++i) {
        edge_k = std::max(edge_k, std::abs(f.at(i, 0)));
        edge_k = std::max(edge_k, std::abs(f.at(i, n_k - 1)));
    }
    check_ratio(edge_x, peak, "x", warn_ratio, fail_ratio, warnings);
    check_ratio(edge_k, peak, "k", warn_ratio, fail_ratio, warnings);
    return warnings;
}

std::vector<std::string> boundary_decay_warnings(const ComplexField& f,
                                                 double warn_ratio,
                                                 double fail_ratio) {
    std::vector<std::string> warnings;
    double peak = 0.0;
    for (const cplx& v : f.values) peak = std::max(peak, std::abs(v));
    const double edge =
        std::max(std::abs(f.values.front()), std::abs(f.values.back()));
    check_ratio(edge, peak, "x", warn_ratio, fail_ratio, warnings);
    return warnings;
}

} // namespace wiglab

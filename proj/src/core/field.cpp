#include "wiglab/core/field.hpp"

#include <algorithm>
#include <cmath>

#include "wiglab/core/errors.hpp"

namespace wiglab {

cplx l2_inner_product(const ComplexField& a, const ComplexField& b) {
    if (!(a.grid == b.grid)) {
        throw config_error("l2_inner_product: fields live on different grids");
    }
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < a.values.size(); ++i) {
        acc += a.values[i] * std::conj(b.values[i]);
    }
    return acc * a.grid.dx;
}

double l2_norm(const ComplexField& a) {
    double acc = 0.0;
    for (const cplx& v : a.values) acc += std::norm(v);
    return std::sqrt(acc * a.grid.dx);
}

cplx phase_inner_product(const PhaseField& f, const PhaseField& g) {
    if (!(f.grid == g.grid)) {
        throw config_error("phase_inner_product: fields live on different grids");
    }
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < f.values.size(); ++i) {
        acc += f.values[i] * std::conj(g.values[i]);
    }
    return acc * (f.grid.dx * f.grid.dk);
}

cplx phase_mass(const PhaseField& f) {
    cplx acc{0.0, 0.0};
    for (const cplx& v : f.values) acc += v;
    return acc * (f.grid.dx * f.grid.dk);
}

double phase_l2_norm(const PhaseField& f) {
    double acc = 0.0;
    for (const cplx& v : f.values) acc += std::norm(v);
    return std::sqrt(acc * f.grid.dx * f.grid.dk);
}

double max_abs(const ComplexField& a) {
    double m = 0.0;
    for (const cplx& v : a.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const PhaseField& f) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_imag(const PhaseField& f) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v.imag()));
    return m;
}

} // namespace wiglab

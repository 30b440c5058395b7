#include "wiglab/core/potential.hpp"

#include <cmath>

namespace wiglab {

double eval_potential(const GaussianSpec& spec, double x) {
    const double e = (x - spec.center_x) / spec.width_x;
    return spec.amplitude * std::exp(-e * e);
}

double grad_potential(const GaussianSpec& spec, double x) {
    const double u = x - spec.center_x;
    const double w2 = spec.width_x * spec.width_x;
    return -2.0 * spec.amplitude * u / w2 * std::exp(-u * u / w2);
}

double delta_eps_potential(const GaussianSpec& spec, double x, double y, Epsilon eps) {
    const double h = 0.5 * eps.value * y;
    return (eval_potential(spec, x + h) - eval_potential(spec, x - h)) / eps.value;
}

double Potential::eval(double x) const {
    double v = poly[0] + x * (poly[1] + x * poly[2]);
    for (const GaussianSpec& g : gaussians) v += eval_potential(g, x);
    return v;
}

double Potential::grad(double x) const {
    double v = poly[1] + 2.0 * poly[2] * x;
    for (const GaussianSpec& g : gaussians) v += grad_potential(g, x);
    return v;
}

double Potential::delta_eps(double x, double y, Epsilon eps) const {
    const double h = 0.5 * eps.value * y;
    // Polynomial part evaluated in closed form: the quadratic contribution
    // reduces to y*(c1 + 2 c2 x) for every eps, the constant drops.
    double v = y * (poly[1] + 2.0 * poly[2] * x);
    for (const GaussianSpec& g : gaussians) {
        v += (eval_potential(g, x + h) - eval_potential(g, x - h)) / eps.value;
    }
    return v;
}

Potential Potential::operator+(const Potential& other) const {
    Potential out = *this;
    out.gaussians.insert(out.gaussians.end(), other.gaussians.begin(),
                         other.gaussians.end());
    for (int i = 0; i < 3; ++i) out.poly[i] += other.poly[i];
    return out;
}

Potential Potential::operator*(double scale) const {
    Potential out = *this;
    for (GaussianSpec& g : out.gaussians) g.amplitude *= scale;
    for (double& c : out.poly) c *= scale;
    return out;
}

} // namespace wiglab

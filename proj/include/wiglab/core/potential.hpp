#pragma once

#include <array>
#include <vector>

#include "wiglab/core/gaussian.hpp"

namespace wiglab {

/// V(x) = A*exp(-(x-a)^2/w^2).
double eval_potential(const GaussianSpec& spec, double x);

/// Analytic derivative -2A(x-a)/w^2 * exp(-(x-a)^2/w^2).
double grad_potential(const GaussianSpec& spec, double x);

/// Symmetric scaled difference (1/eps)[V(x + eps*y/2) - V(x - eps*y/2)].
/// Odd in y; equal to y*V'(x) exactly for polynomials of degree <= 2 and up
/// to O(eps^2) otherwise. Evaluates V at the literal (unwrapped) arguments.
double delta_eps_potential(const GaussianSpec& spec, double x, double y, Epsilon eps);

/// Potential model shipped with the lab: a sum of Gaussian bumps plus a
/// polynomial part c0 + c1 x + c2 x^2. Covers the background potentials,
/// test potentials (free, linear, harmonic), and perturbations.
struct Potential {
    std::vector<GaussianSpec> gaussians;
    std::array<double, 3> poly{0.0, 0.0, 0.0};

    static Potential zero() { return Potential{}; }
    static Potential gaussian(const GaussianSpec& spec) { return Potential{{spec}, {}}; }
    static Potential polynomial(double c0, double c1, double c2) {
        return Potential{{}, {c0, c1, c2}};
    }

    double eval(double x) const;
    double grad(double x) const;
    double delta_eps(double x, double y, Epsilon eps) const;

    Potential operator+(const Potential& other) const;
    Potential operator*(double scale) const;
};

} // namespace wiglab

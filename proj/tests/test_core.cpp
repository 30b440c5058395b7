#include <doctest.h>

#include <numbers>

#include "test_util.hpp"
#include "wiglab/core/errors.hpp"
#include "wiglab/core/potential.hpp"
#include "wiglab/core/spectral.hpp"

using namespace wiglab;
using namespace wiglab::testing;

TEST_CASE("phase grid spacings are exact") {
    const PhaseGrid g = make_phase_grid(0.0, 0.5, 512, -0.375, 0.625, 1024);
    CHECK(g.dx == 0.5 / 512);
    CHECK(g.dx == std::exp2(-10));
    CHECK(g.dk == 1.0 / 1024);
    CHECK(g.x(0) == 0.0);
    CHECK(g.k(0) == -0.375);

    const PhaseGrid small = make_phase_grid(0.0, 1.0, 8, -1.0, 1.0, 8);
    CHECK(small.dx == 0.125);
    CHECK(small.dk == 0.25);
}

TEST_CASE("phase grid rejects bad inputs") {
    CHECK_THROWS_AS(make_phase_grid(0.0, 0.5, 500, -0.375, 0.625, 1024), config_error);
    CHECK_THROWS_AS(make_phase_grid(0.0, 0.5, 4, -0.375, 0.625, 1024), config_error);
    CHECK_THROWS_AS(make_phase_grid(0.5, 0.0, 512, -0.375, 0.625, 1024), config_error);
    CHECK_THROWS_AS(make_phase_grid(0.0, 0.5, 512, 0.625, -0.375, 1024), config_error);
}

TEST_CASE("gaussian potential evaluation") {
    const GaussianSpec vb{1.0, 0.25, 0.125, {}, {}};
    CHECK(eval_potential(vb, 0.25) == 1.0);
    CHECK(eval_potential(vb, 0.25 + 0.125) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(eval_potential(vb, 0.25 + 10 * 0.125) <= std::exp(-100.0));
}

TEST_CASE("gaussian potential gradient matches finite differences") {
    const GaussianSpec vb{1.3, 0.25, 0.125, {}, {}};
    CHECK(grad_potential(vb, 0.25) == 0.0);
    CHECK(grad_potential(vb, 0.375) ==
          doctest::Approx(-2.0 / 0.125 * std::exp(-1.0) * 1.3).epsilon(1e-14));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> xs(0.0, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = xs(rng);
        const double h = 1e-5;
        auto central = [&](double hh) {
            return (eval_potential(vb, x + hh) - eval_potential(vb, x - hh)) / (2 * hh);
        };
        // Richardson-extrapolated central difference is O(h^4) accurate.
        const double fd = (4.0 * central(h / 2) - central(h)) / 3.0;
        CHECK(rel_err(grad_potential(vb, x), fd) < 1e-9);
    }
}

TEST_CASE("scaled potential difference: polynomial exactness and oddness") {
    const Potential quad = Potential::polynomial(0.3, -1.2, 0.5);
    for (double eps_v : {1.0, 0.25, 1.0 / 64.0}) {
        const Epsilon eps(eps_v);
        // deg <= 2 means delta_eps equals y * V'(x) for every eps.
        CHECK(quad.delta_eps(0.3, 2.0, eps) == 2.0 * quad.grad(0.3));
        CHECK(quad.delta_eps(-0.7, 0.5, eps) == 0.5 * quad.grad(-0.7));
    }

    const Potential constant = Potential::polynomial(4.2, 0.0, 0.0);
    CHECK(constant.delta_eps(0.1, 3.0, Epsilon(0.5)) == 0.0);

    const GaussianSpec vb{1.0, 0.25, 0.125, {}, {}};
    for (double y : {0.3, 1.7, 12.0}) {
        const double plus = delta_eps_potential(vb, 0.2, y, Epsilon(0.01));
        const double minus = delta_eps_potential(vb, 0.2, -y, Epsilon(0.01));
        CHECK(plus == -minus); // bitwise odd
    }
}

TEST_CASE("scaled potential difference converges at second order") {
    const GaussianSpec vb{1.0, 0.25, 0.125, {}, {}};
    const double x = 0.21, y = 0.8;
    const double limit = y * grad_potential(vb, x);
    auto residual = [&](double e) {
        return delta_eps_potential(vb, x, y, Epsilon(e)) - limit;
    };
    const double r1 = residual(1.0 / 32.0);
    const double r2 = residual(1.0 / 64.0);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.02)); // halving eps quarters it
}

TEST_CASE("gaussian phase field sampling") {
    const PhaseGrid g = make_phase_grid(0.0, 1.0, 256, -1.0, 1.0, 256);
    const GaussianSpec spec{1.0, 0.5, 0.05, 0.0, 0.05};
    const PhaseField f = gaussian_phase_field(spec, g);
    CHECK(f.hermitian_real);

    // Center lands on a node here, so the peak is exact.
    const int ic = 128, jc = 128;
    CHECK(f.at(ic, jc).real() == doctest::Approx(1.0).epsilon(1e-12));

    // Ten widths out in x the value is below 1e-20 of the peak.
    const int far = ic + static_cast<int>(std::ceil(10 * 0.05 / g.dx));
    CHECK(std::abs(f.at(far, jc)) < 1e-20);

    const double mass = phase_mass(f).real();
    const double exact = std::numbers::pi * 0.05 * 0.05;
    CHECK(rel_err(mass, exact) < 1e-6);
}

TEST_CASE("gaussian packet basics") {
    const PhaseGrid g = make_phase_grid(0.0, 0.5, 128, -0.375, 0.625, 8);
    const Epsilon eps(1.0 / (16.0 * std::numbers::pi));

    GaussianSpec real_spec{1.0, 0.25, 0.03125, {}, {}};
    const ComplexField still = gaussian_packet(real_spec, g, eps);
    for (const cplx& v : still.values) CHECK(v.imag() == 0.0);

    GaussianSpec moving{1.0, 0.25, 0.03125, 0.125, {}};
    const ComplexField a = gaussian_packet(moving, g, eps);
    const ComplexField b = gaussian_packet(moving, g, Epsilon(eps.value / 4));
    for (int i = 0; i < g.n_x; ++i) {
        CHECK(rel_err(std::abs(a.values[i]) + 1e-30, std::abs(b.values[i]) + 1e-30) <
              1e-12); // modulus ignores the phase, so it is eps-independent
    }
}

TEST_CASE("inner product is a weighted sesquilinear pairing") {
    const PhaseGrid g = make_phase_grid(0.0, 1.0, 64, -1.0, 1.0, 8);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexField a = ComplexField::zeros(g), b = ComplexField::zeros(g);
    for (int i = 0; i < g.n_x; ++i) {
        a.values[i] = cplx{u(rng), u(rng)};
        b.values[i] = cplx{u(rng), u(rng)};
    }

    const cplx self = l2_inner_product(a, a);
    CHECK(self.imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(self.real() >= 0.0);
    CHECK(l2_norm(a) == doctest::Approx(std::sqrt(self.real())).epsilon(1e-14));

    const cplx ab = l2_inner_product(a, b);
    const cplx ba = l2_inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);

    const cplx alpha{0.7, -1.1}, beta{-0.4, 0.9};
    ComplexField aa = a, bb = b;
    for (auto& v : aa.values) v *= alpha;
    for (auto& v : bb.values) v *= beta;
    CHECK(std::abs(l2_inner_product(aa, b) - alpha * ab) < 1e-13);
    CHECK(std::abs(l2_inner_product(a, bb) - std::conj(beta) * ab) < 1e-13);

    // Discrete Fourier modes are exactly orthogonal under this quadrature.
    ComplexField m1 = ComplexField::zeros(g), m2 = ComplexField::zeros(g);
    for (int i = 0; i < g.n_x; ++i) {
        m1.values[i] = std::polar(1.0, g.xi(3) * g.x(i));
        m2.values[i] = std::polar(1.0, g.xi(5) * g.x(i));
    }
    CHECK(std::abs(l2_inner_product(m1, m2)) < 1e-12);

    const PhaseGrid other = make_phase_grid(0.0, 2.0, 64, -1.0, 1.0, 8);
    ComplexField c = ComplexField::zeros(other);
    CHECK_THROWS_AS((void)l2_inner_product(a, c), config_error);
}

TEST_CASE("spectral k-shift: identity, integer roll, fractional accuracy") {
    const PhaseGrid g = make_phase_grid(0.0, 1.0, 8, -1.0, 1.0, 128);
    const GaussianSpec spec{1.0, 0.5, 0.2, 0.0, 0.1};
    const PhaseField f = gaussian_phase_field(spec, g);

    const PhaseField same = spectral_shift_k(f, 0.0);
    CHECK(linf_diff(same, f) < 1e-13);

    // One full cell equals an integer roll of the samples.
    const PhaseField rolled = spectral_shift_k(f, g.dk);
    double worst = 0.0;
    for (int i = 0; i < g.n_x; ++i) {
        for (int j = 0; j < g.n_k; ++j) {
            const int src = (j - 1 + g.n_k) % g.n_k;
            worst = std::max(worst, std::abs(rolled.at(i, j) - f.at(i, src)));
        }
    }
    CHECK(worst < 1e-10);

    // Fractional shift against the analytic Gaussian.
    const double shift = 0.3 * g.dk;
    const PhaseField frac = spectral_shift_k(f, shift);
    GaussianSpec shifted = spec;
    shifted.center_k = *spec.center_k + shift;
    const PhaseField expected = gaussian_phase_field(shifted, g);
    CHECK(rel_l2_diff(frac, expected) < 1e-6);

    const PhaseField back = spectral_shift_k(frac, -shift);
    CHECK(rel_l2_diff(back, f) < 1e-10);
}

TEST_CASE("boundary decay diagnostics") {
    const PhaseGrid g = make_phase_grid(0.0, 1.0, 64, -1.0, 1.0, 64);
    const PhaseField tight = gaussian_phase_field({1.0, 0.5, 0.05, 0.0, 0.05}, g);
    CHECK(boundary_decay_warnings(tight).empty());

    const PhaseField loose = gaussian_phase_field({1.0, 0.5, 0.11, 0.0, 0.11}, g);
    CHECK(!boundary_decay_warnings(loose).empty());

    const PhaseField wide = gaussian_phase_field({1.0, 0.5, 0.5, 0.0, 0.5}, g);
    CHECK_THROWS_AS((void)boundary_decay_warnings(wide), config_error);
}

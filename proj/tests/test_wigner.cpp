#include <doctest.h>

#include <numbers>

#include "test_util.hpp"
#include "wiglab/core/errors.hpp"
#include "wiglab/core/spectral.hpp"
#include "wiglab/liouville/solver.hpp"
#include "wiglab/representatives/representative.hpp"
#include "wiglab/wigner/collision.hpp"
#include "wiglab/wigner/solver.hpp"
#include "wiglab/wigner/transform.hpp"

using namespace wiglab;
using namespace wiglab::testing;

namespace {

const double kPi = std::numbers::pi;

PhaseGrid desk_grid() { return make_phase_grid(0.0, 0.5, 128, -0.375, 0.625, 256); }

/// Wide momentum window for wave-to-phase-space tests: packet transforms have
/// k-width eps/width_x, far wider than the transport-scale window.
PhaseGrid wave_grid(int n_x = 128, int n_k = 64) {
    return make_phase_grid(0.0, 0.5, n_x, -2.0, 2.0, n_k);
}

Potential background() { return Potential::gaussian({1.0, 0.25, 0.125, {}, {}}); }

} // namespace

TEST_CASE("wigner transform of zero fields vanishes") {
    const PhaseGrid g = wave_grid();
    const ComplexField zero = ComplexField::zeros(g);
    const PhaseField w = wigner_transform(zero, zero, Epsilon(0.05), g);
    CHECK(max_abs(w) == 0.0);
}

TEST_CASE("wigner transform matches direct quadrature of the defining integral") {
    const PhaseGrid g = wave_grid();
    const Epsilon eps(1.0 / (16.0 * kPi));
    const GaussianSpec spec{1.0, 0.25, 0.03125, {}, {}}; // real packet, no momentum
    const ComplexField phi = gaussian_packet(spec, g, eps);
    const PhaseField w = wigner_transform(phi, phi, eps, g);

    // Oracle: trapezoidal y-quadrature with the wavefunction evaluated
    // analytically at the shifted points (independent of the spectral path).
    // Shift arguments wrap into the periodic cell, matching the transform's
    // domain convention.
    auto packet_at = [&](double x) {
        const double L = g.x_length();
        double u = std::fmod(x - g.x_min, L);
        if (u < 0.0) u += L;
        const double e = (g.x_min + u - spec.center_x) / spec.width_x;
        return std::exp(-0.5 * e * e);
    };
    const double dy = 2.0 * kPi / g.k_length();
    double worst = 0.0;
    const double scale = max_abs(w);
    for (int i = 0; i < g.n_x; i += 7) {
        for (int j = 0; j < g.n_k; j += 5) {
            cplx acc{0.0, 0.0};
            for (int m = 0; m < g.n_k; ++m) {
                const double y = g.y(m);
                acc += std::polar(1.0, g.k(j) * y) *
                       packet_at(g.x(i) - 0.5 * eps.value * y) *
                       packet_at(g.x(i) + 0.5 * eps.value * y);
            }
            acc *= dy / (2.0 * kPi);
            worst = std::max(worst, std::abs(w.at(i, j) - acc));
        }
    }
    CHECK(worst / scale < 1e-8);

    // Self-transform is real.
    CHECK(max_abs_imag(w) <= 1e-10 * max_abs(w));
}

TEST_CASE("packet transform peaks at the packet's phase-space center") {
    const PhaseGrid g = wave_grid(128, 128);
    const Epsilon eps(1.0 / (64.0 * kPi));
    const GaussianSpec spec{1.0, 0.25, 0.03125, 0.125, {}};
    const ComplexField phi = gaussian_packet(spec, g, eps);
    const PhaseField w = wigner_transform(phi, phi, eps, g);

    int best_i = 0, best_j = 0;
    double best = -1.0;
    for (int i = 0; i < g.n_x; ++i) {
        for (int j = 0; j < g.n_k; ++j) {
            if (w.at(i, j).real() > best) {
                best = w.at(i, j).real();
                best_i = i;
                best_j = j;
            }
        }
    }
    CHECK(std::abs(g.x(best_i) - 0.25) <= g.dx);
    CHECK(std::abs(g.k(best_j) - 0.125) <= g.dk);
}

TEST_CASE("moments recover density and current") {
    const PhaseGrid g = wave_grid();
    const Epsilon eps(1.0 / (16.0 * kPi));

    const PhaseField zero = PhaseField::zeros(g, true);
    const auto [rho0, j0] = moments(zero);
    for (double v : rho0) CHECK(v == 0.0);
    for (double v : j0) CHECK(v == 0.0);

    const ComplexField phi = gaussian_packet({1.0, 0.25, 0.03125, 0.125, {}}, g, eps);
    const PhaseField w = wigner_transform(phi, phi, eps, g);
    const auto [rho, current] = moments(w);
    double total = 0.0;
    for (double v : rho) total += v;
    total *= g.dx;
    CHECK(rel_err(total, l2_norm(phi) * l2_norm(phi)) < 1e-8);

    // Symmetric Gaussian data: first moment is center_k times the density.
    const PhaseGrid gd = desk_grid();
    const PhaseField f = gaussian_phase_field({1.0, 0.25, 0.0625, 0.125, 0.125}, gd);
    const auto [rho_g, j_g] = moments(f);
    for (int i = 0; i < gd.n_x; ++i) {
        if (rho_g[i] > 1e-12) CHECK(rel_err(j_g[i], 0.125 * rho_g[i]) < 1e-8);
    }
}

TEST_CASE("collision operator: constant, linear and quadratic potentials") {
    const PhaseGrid g = desk_grid();
    const Epsilon eps(1.0 / (16.0 * kPi));
    const PhaseField f = gaussian_phase_field({1.0, 0.25, 0.0625, 0.125, 0.125}, g);

    const PhaseField none = apply_collision(Potential::polynomial(3.1, 0, 0), f, eps);
    CHECK(max_abs(none) < 1e-12);

    // V = c x acts as c * d/dk for every eps.
    const double c = 0.8;
    const PhaseField lin = apply_collision(Potential::polynomial(0, c, 0), f, eps);
    PhaseField dk = spectral_derivative_k(f);
    for (auto& v : dk.values) v *= c;
    CHECK(rel_l2_diff(lin, dk) < 1e-10);

    // Degree <= 2 multipliers carry no eps dependence at all.
    const Potential quad = Potential::polynomial(0.2, -0.6, 0.5);
    const PhaseField a = apply_collision(quad, f, eps);
    const PhaseField b = apply_collision(quad, f, Epsilon(eps.value / 8));
    CHECK(linf_diff(a, b) == 0.0);

    // Constant shifts of the potential do not change the operator.
    const Potential vb = background();
    const PhaseField va = apply_collision(vb, f, eps);
    const PhaseField vc = apply_collision(vb + Potential::polynomial(2.5, 0, 0), f, eps);
    CHECK(linf_diff(va, vc) == 0.0);
}

TEST_CASE("collision operator: zero mean, anti-self-adjoint, real-preserving") {
    const PhaseGrid g = make_phase_grid(0.0, 0.5, 64, -0.375, 0.625, 64);
    const Epsilon eps(1.0 / (16.0 * kPi));
    const Potential vb = background();

    for (unsigned seed = 1; seed <= 20; ++seed) {
        const PhaseField f1 = random_smooth_field(g, seed);
        const PhaseField f2 = random_smooth_field(g, seed + 1000);
        const PhaseField lf1 = apply_collision(vb, f1, eps);
        const PhaseField lf2 = apply_collision(vb, f2, eps);

        // Sum over k of the output vanishes at every x.
        const double scale = max_abs(f1);
        for (int i = 0; i < g.n_x; ++i) {
            cplx acc{0.0, 0.0};
            for (int j = 0; j < g.n_k; ++j) acc += lf1.at(i, j);
            CHECK(std::abs(acc) * g.dk <= 1e-12 * scale);
        }

        const cplx forward = phase_inner_product(lf1, f2);
        const cplx adjoint = phase_inner_product(f1, lf2);
        CHECK(std::abs(forward + adjoint) <= 1e-10 * std::abs(forward));

        CHECK(max_abs_imag(lf1) <= 1e-12 * std::max(max_abs(lf1), 1e-30));
    }
}

TEST_CASE("k-difference quotient: windowed linear and quadratic profiles") {
    const PhaseGrid g = make_phase_grid(0.0, 1.0, 8, -1.0, 1.0, 512);
    const Epsilon eps(1.0 / (64.0 * kPi));
    const double p = 1.0;
    const double kc = 0.0, r = 0.4, s = 80.0;

    // C-infinity window, flat to ~1e-10 on |k| <= 0.1 and band-limited on
    // this k-grid, so the polynomial identities show through on interior
    // nodes at the 1e-8 level.
    auto window = [&](double u) {
        return 1.0 / (1.0 + std::exp(-s * (u + r))) / (1.0 + std::exp(-s * (r - u)));
    };
    PhaseField lin = PhaseField::zeros(g, true), quad = PhaseField::zeros(g, true);
    for (int i = 0; i < g.n_x; ++i) {
        for (int j = 0; j < g.n_k; ++j) {
            const double u = g.k(j) - kc;
            lin.at(i, j) = u * window(u);
            quad.at(i, j) = u * u * window(u);
        }
    }

    const PhaseField d_lin = apply_d_eps(lin, p, eps);
    const PhaseField d_quad = apply_d_eps(quad, p, eps);
    for (int j = 0; j < g.n_k; ++j) {
        const double u = g.k(j) - kc;
        if (std::abs(u) > 0.1) continue;
        CHECK(std::abs(d_lin.at(0, j).real() - p) < 1e-8);
        CHECK(std::abs(d_quad.at(0, j).real() - 2.0 * u * p) < 1e-8);
    }

    // Smooth Gaussian data: D_eps f - p df/dk shrinks at second order.
    const PhaseGrid gd = desk_grid();
    const PhaseField f = gaussian_phase_field({1.0, 0.25, 0.0625, 0.125, 0.125}, gd);
    PhaseField pdk = spectral_derivative_k(f);
    for (auto& v : pdk.values) v *= p;
    auto residual = [&](double e) {
        const PhaseField d = apply_d_eps(f, p, Epsilon(e));
        double acc = 0.0;
        for (size_t i = 0; i < d.values.size(); ++i) {
            acc += std::norm(d.values[i] - pdk.values[i]);
        }
        return std::sqrt(acc);
    };
    const double r1 = residual(1.0 / (8.0 * kPi));
    const double r2 = residual(1.0 / (16.0 * kPi));
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("transport step: exact advection of a single mode, mass, realness") {
    const PhaseGrid g = desk_grid();
    const Epsilon eps(1.0 / (16.0 * kPi));
    const double dt = std::exp2(-8);

    // Free streaming of e^{i xi x} rows: each k-row picks up e^{-i xi k dt}.
    const double xi = g.xi(2);
    PhaseField mode = PhaseField::zeros(g);
    for (int i = 0; i < g.n_x; ++i) {
        for (int j = 0; j < g.n_k; ++j) {
            mode.at(i, j) = std::polar(1.0, xi * g.x(i));
        }
    }
    const PhaseField moved = step_wigner(mode, Potential::zero(), eps, dt);
    double worst = 0.0;
    for (int i = 0; i < g.n_x; ++i) {
        for (int j = 0; j < g.n_k; ++j) {
            const cplx want = mode.at(i, j) * std::polar(1.0, -xi * g.k(j) * dt);
            worst = std::max(worst, std::abs(moved.at(i, j) - want));
        }
    }
    CHECK(worst < 1e-6);

    const PhaseField zero = PhaseField::zeros(g, true);
    CHECK(max_abs(step_wigner(zero, background(), eps, dt)) == 0.0);

    const PhaseField f = gaussian_phase_field({1.0, 0.25, 0.0625, 0.125, 0.125}, g);
    const PhaseField g1 = step_wigner(f, background(), eps, dt);
    CHECK(std::abs(phase_mass(g1).real() - phase_mass(f).real()) <=
          1e-12 * std::abs(phase_mass(f).real()));
    CHECK(max_abs_imag(g1) <= 1e-10 * max_abs(g1));

    CHECK_THROWS_AS((void)step_wigner(f, background(), eps, 0.1), config_error);
}

TEST_CASE("kinetic solve matches characteristics exactly for quadratic wells") {
    const PhaseGrid g = desk_grid();
    const double dt = std::exp2(-8), T = std::exp2(-6);
    const Potential well = Potential::polynomial(0.0, 0.0, 0.5); // x^2/2
    const GaussianSpec data{1.0, 0.25, 0.0625, 0.125, 0.125};
    const PhaseField f0 = gaussian_phase_field(data, g);

    const LiouvilleRun classical = solve_liouville(PhaseData::from_gaussian(data, g),
                                                   well, dt, T, Direction::forward);
    for (double eps_v : {1.0 / (8.0 * kPi), 1.0 / (32.0 * kPi), 1.0 / (64.0 * kPi)}) {
        const WignerRun quantum =
            solve_wigner(f0, well, Epsilon(eps_v), dt, T, Direction::forward);
        CHECK(rel_l2_diff(quantum.snapshots.back(), classical.snapshots.back()) < 1e-3);
    }
}

TEST_CASE("forward-then-backward kinetic solve recovers the data") {
    const PhaseGrid g = desk_grid();
    const Epsilon eps(1.0 / (16.0 * kPi));
    const double dt = std::exp2(-8), T = std::exp2(-6);
    const PhaseField f0 = gaussian_phase_field({1.0, 0.25, 0.0625, 0.125, 0.125}, g);

    const WignerRun fwd = solve_wigner(f0, background(), eps, dt, T, Direction::forward);
    const WignerRun bwd = solve_wigner(fwd.snapshots.back(), background(), eps, dt, T,
                                       Direction::backward);
    CHECK(rel_l2_diff(bwd.snapshots.front(), f0) < 1e-4);

    // Mass is conserved across the whole horizon.
    const double m0 = phase_mass(f0).real();
    for (const auto& frame : fwd.snapshots.frames) {
        CHECK(rel_err(phase_mass(frame).real(), m0) < 1e-8);
    }
}

TEST_CASE("kinetic solve is consistent with the wave equation") {
    const Epsilon eps(1.0 / (16.0 * kPi));
    const double T = std::exp2(-6);
    const Potential vb = background();
    // The momentum window keeps eps * y_max / 2 inside the packet's decay
    // margin, so the transform is free of periodic-image artifacts.
    const GaussianSpec packet{1.0, 0.22, 0.04, 0.125, {}};

    auto mismatch = [&](int n_x, double dt) {
        const PhaseGrid g = wave_grid(n_x, 32);
        const ComplexField phi0 = gaussian_packet(packet, g, eps);
        const auto wave = solve_schrodinger(phi0, vb, eps, dt, T, Direction::forward);
        const PhaseField w_final =
            wigner_transform(wave.snapshots.back(), wave.snapshots.back(), eps, g);
        const PhaseField w_init = wigner_transform(phi0, phi0, eps, g);
        const auto kinetic = solve_wigner(w_init, vb, eps, dt, T, Direction::forward);
        return rel_l2_diff(kinetic.snapshots.back(), w_final);
    };
    const double coarse = mismatch(64, std::exp2(-10));
    const double fine = mismatch(128, std::exp2(-11));
    CHECK(coarse < 0.05);
    CHECK(fine < 0.7 * coarse);
}

TEST_CASE("unstable collision step is detected") {
    const PhaseGrid g = desk_grid();
    const Epsilon eps(1.0 / (512.0 * kPi)); // far outside the stable dt envelope
    const PhaseField f0 = gaussian_phase_field({1.0, 0.25, 0.0625, 0.125, 0.125}, g);
    CHECK_THROWS_AS((void)solve_wigner(f0, background(), eps, std::exp2(-8),
                                       std::exp2(-3), Direction::forward),
                    blowup_error);
}

TEST_CASE("perturbed kinetic solve: zero source, linearity, pairing identity") {
    const PhaseGrid g = desk_grid();
    const Epsilon eps(1.0 / (16.0 * kPi));
    const double T = std::exp2(-6);
    const Potential vb = background();
    const Potential vt = Potential::gaussian({0.05, 0.3, 0.05, {}, {}});
    const GaussianSpec f_data{1.0, 0.25, 0.0625, 0.125, 0.125};
    const GaussianSpec g_data{1.0, 0.25, 0.0625, 0.125, 0.125};

    const auto bg = solve_wigner(gaussian_phase_field(f_data, g), vb, eps,
                                 std::exp2(-8), T, Direction::forward);

    CHECK(max_abs(solve_wigner_perturbed(bg, Potential::zero(), eps)) == 0.0);

    const PhaseField one = solve_wigner_perturbed(bg, vt, eps);
    const PhaseField two = solve_wigner_perturbed(bg, vt * 2.0, eps);
    double worst = 0.0;
    for (size_t i = 0; i < one.values.size(); ++i) {
        worst = std::max(worst, std::abs(two.values[i] - 2.0 * one.values[i]));
    }
    CHECK(worst <= 1e-10 * max_abs(one));

    // Pairing against the adjoint final data equals the kernel pairing of the
    // same perturbation; the residual shrinks under refinement.
    auto closure_residual = [&](int n_x, int n_k, double dt) {
        const PhaseGrid gg = make_phase_grid(0.0, 0.5, n_x, -0.375, 0.625, n_k);
        const auto bg_r = solve_wigner(gaussian_phase_field(f_data, gg), vb, eps, dt,
                                       T, Direction::forward);
        const auto adj = solve_wigner(gaussian_phase_field(g_data, gg), vb, eps, dt,
                                      T, Direction::backward);
        const PhaseField tilde = solve_wigner_perturbed(bg_r, vt, eps);
        const cplx lhs = phase_inner_product(tilde, adj.snapshots.back());
        const Representative rep = rep_wigner(bg_r, adj, eps);
        const cplx rhs = rep_pair(rep, vt);
        return std::abs(lhs - rhs) / std::abs(lhs);
    };
    const double r1 = closure_residual(128, 256, std::exp2(-8));
    const double r2 = closure_residual(256, 512, std::exp2(-9));
    CHECK(r1 < 1e-2);
    CHECK(r2 < r1);
}

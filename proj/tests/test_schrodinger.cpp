#include <doctest.h>

#include <numbers>

#include "test_util.hpp"
#include "wiglab/core/errors.hpp"
#include "wiglab/schrodinger/solver.hpp"

using namespace wiglab;
using namespace wiglab::testing;

namespace {

const double kEps16 = 1.0 / (16.0 * std::numbers::pi);

PhaseGrid packet_grid() { return make_phase_grid(0.0, 0.5, 128, -0.375, 0.625, 8); }

ComplexField test_packet(const PhaseGrid& g, double eps) {
    return gaussian_packet({1.0, 0.25, 0.03125, 0.125, {}}, g, Epsilon(eps));
}

Potential background() { return Potential::gaussian({1.0, 0.25, 0.125, {}, {}}); }

} // namespace

TEST_CASE("free step acts as the exact Fourier multiplier on a plane wave") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const double dt = 1e-3;
    const double xi = g.xi(5);
    ComplexField mode = ComplexField::zeros(g);
    for (int i = 0; i < g.n_x; ++i) mode.values[i] = std::polar(1.0, xi * g.x(i));

    const ComplexField stepped = step_strang(mode, Potential::zero(), eps, dt);
    const cplx phase = std::polar(1.0, -eps.value * xi * xi * dt / 2.0);
    double worst = 0.0;
    for (int i = 0; i < g.n_x; ++i) {
        worst = std::max(worst, std::abs(stepped.values[i] - mode.values[i] * phase));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("constant potential contributes a global phase only") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const double c = 0.7, dt = 2e-3;
    const ComplexField phi = test_packet(g, eps.value);
    const ComplexField with_c = step_strang(phi, Potential::polynomial(c, 0, 0), eps, dt);
    const ComplexField free_step = step_strang(phi, Potential::zero(), eps, dt);
    const cplx phase = std::polar(1.0, -c * dt / eps.value);
    for (int i = 0; i < g.n_x; ++i) {
        CHECK(std::abs(with_c.values[i] - free_step.values[i] * phase) < 1e-13);
        // the modulus profile is untouched by the potential phase
        CHECK(std::abs(with_c.values[i]) ==
              doctest::Approx(std::abs(free_step.values[i])).epsilon(1e-12));
    }
}

TEST_CASE("splitting error is third order locally") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const ComplexField phi = test_packet(g, eps.value);
    const Potential vb = background();

    auto local_error = [&](double dt) {
        const ComplexField full = step_strang(phi, vb, eps, dt);
        ComplexField halves = step_strang(phi, vb, eps, dt / 2);
        halves = step_strang(halves, vb, eps, dt / 2);
        double acc = 0.0;
        for (int i = 0; i < g.n_x; ++i) acc += std::norm(full.values[i] - halves.values[i]);
        return std::sqrt(acc * g.dx);
    };
    const double e1 = local_error(1e-3);
    const double e2 = local_error(5e-4);
    CHECK(e1 / e2 == doctest::Approx(8.0).epsilon(0.15));
}

TEST_CASE("unitarity, conservation and round-trip over a full horizon") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const double dt = std::exp2(-10), T = std::exp2(-6);
    const Potential vb = background();
    const ComplexField phi0 = test_packet(g, eps.value);

    const SchrodingerRun run =
        solve_schrodinger(phi0, vb, eps, dt, T, Direction::forward);
    CHECK(run.snapshots.size() == 17);

    const double n0 = l2_norm(run.snapshots.front());
    for (const ComplexField& frame : run.snapshots.frames) {
        CHECK(rel_err(l2_norm(frame), n0) < 1e-10);
    }

    // A second co-evolved packet: the pairing is constant in time.
    const ComplexField psi0 = gaussian_packet({0.8, 0.22, 0.03125, 0.25, {}}, g, eps);
    const SchrodingerRun run2 =
        solve_schrodinger(psi0, vb, eps, dt, T, Direction::backward);
    const cplx pair_T = l2_inner_product(run.snapshots.back(), run2.snapshots.back());
    for (size_t m = 0; m < run.snapshots.size(); ++m) {
        const cplx pair =
            l2_inner_product(run.snapshots.frames[m], run2.snapshots.frames[m]);
        CHECK(std::abs(pair - pair_T) / std::abs(pair_T) < 1e-10);
    }

    // Backward solve applied to the forward output recovers the start.
    const SchrodingerRun back = solve_schrodinger(run.snapshots.back(), vb, eps, dt, T,
                                                  Direction::backward);
    CHECK(rel_l2_diff(back.snapshots.front(), phi0) < 1e-9);
}

TEST_CASE("free evolution matches the dispersive Gaussian closed form") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const double dt = std::exp2(-10), T = std::exp2(-6);
    const double a = 1.0, c = 0.25, w = 0.03125, k0 = 0.125;
    const ComplexField phi0 = gaussian_packet({a, c, w, k0, {}}, g, eps);

    const SchrodingerRun run =
        solve_schrodinger(phi0, Potential::zero(), eps, dt, T, Direction::forward);

    // Exact free packet: spreading complex width, drifting center.
    ComplexField exact = ComplexField::zeros(g);
    const cplx s2 = w * w + cplx{0.0, eps.value * T};
    for (int i = 0; i < g.n_x; ++i) {
        const double x = g.x(i);
        const double u = x - c - k0 * T;
        exact.values[i] = a * std::sqrt(w * w / s2) * std::exp(-u * u / (2.0 * s2)) *
                          std::polar(1.0, k0 * x / eps.value -
                                              k0 * k0 * T / (2.0 * eps.value));
    }
    CHECK(rel_l2_diff(run.snapshots.back(), exact) < 1e-4);
}

TEST_CASE("shifting the potential by a constant is a pure gauge phase") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const double dt = std::exp2(-9), T = std::exp2(-6), c = 0.37;
    const ComplexField phi0 = test_packet(g, eps.value);
    const Potential vb = background();

    const auto plain = solve_schrodinger(phi0, vb, eps, dt, T, Direction::forward);
    const auto lifted = solve_schrodinger(phi0, vb + Potential::polynomial(c, 0, 0),
                                          eps, dt, T, Direction::forward);
    const cplx gauge = std::polar(1.0, -c * T / eps.value);
    for (int i = 0; i < g.n_x; ++i) {
        CHECK(std::abs(plain.snapshots.back().values[i] * gauge -
                       lifted.snapshots.back().values[i]) < 1e-10);
    }
}

TEST_CASE("solver validates the step count") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const ComplexField phi0 = test_packet(g, eps.value);
    CHECK_THROWS_AS((void)solve_schrodinger(phi0, background(), eps, 0.003, 0.01,
                                            Direction::forward),
                    config_error);
}

TEST_CASE("perturbed solve: zero source, linearity, pairing identity") {
    const PhaseGrid g = packet_grid();
    const Epsilon eps(kEps16);
    const double T = std::exp2(-6);
    const Potential vb = background();
    const ComplexField phi0 = test_packet(g, eps.value);
    const Potential vt = Potential::gaussian({0.05, 0.3, 0.05, {}, {}});

    const auto bg = solve_schrodinger(phi0, vb, eps, std::exp2(-9), T, Direction::forward);

    const ComplexField none = solve_schrodinger_perturbed(bg, Potential::zero(), eps);
    CHECK(max_abs(none) == 0.0);

    const ComplexField one = solve_schrodinger_perturbed(bg, vt, eps);
    const ComplexField two = solve_schrodinger_perturbed(bg, vt * 2.0, eps);
    for (int i = 0; i < g.n_x; ++i) {
        CHECK(std::abs(two.values[i] - 2.0 * one.values[i]) <=
              1e-10 * std::max(1.0, std::abs(one.values[i])));
    }

    // Pairing identity: <phi_T, psi_T> equals the kernel pairing
    // (1/(i eps)) Int vt * Int phi_b conj(psi) dt dx, with the residual
    // shrinking as dt is halved.
    const ComplexField psi_T = gaussian_packet({1.0, 0.27, 0.03125, 0.1, {}}, g, eps);
    auto closure_residual = [&](double dt) {
        const auto bg_dt = solve_schrodinger(phi0, vb, eps, dt, T, Direction::forward);
        const auto adj = solve_schrodinger(psi_T, vb, eps, dt, T, Direction::backward);
        const ComplexField tilde = solve_schrodinger_perturbed(bg_dt, vt, eps);
        const cplx lhs = l2_inner_product(tilde, psi_T);

        cplx rhs{0.0, 0.0};
        const size_t n = bg_dt.snapshots.size();
        for (size_t m = 0; m < n; ++m) {
            cplx overlap{0.0, 0.0};
            for (int i = 0; i < g.n_x; ++i) {
                overlap += vt.eval(g.x(i)) * bg_dt.snapshots.frames[m].values[i] *
                           std::conj(adj.snapshots.frames[m].values[i]);
            }
            rhs += trapezoid_weight(m, n) * overlap * g.dx * dt;
        }
        rhs /= cplx{0.0, eps.value};
        return std::abs(lhs - rhs) / std::abs(lhs);
    };
    const double r1 = closure_residual(std::exp2(-9));
    const double r2 = closure_residual(std::exp2(-10));
    CHECK(r1 < 1e-2);
    CHECK(r2 < r1);
}

#include "wiglab/wigner/solver.hpp"

#include <cmath>
#include <sstream>

#include "wiglab/core/errors.hpp"
#include "wiglab/core/parallel.hpp"
#include "wiglab/wigner/collision.hpp"
#include "wiglab/wigner/collision_table.hpp"
#include "wiglab/wigner/weno.hpp"

namespace wiglab {

namespace {

double max_speed(const PhaseGrid& grid) {
    return std::max(std::abs(grid.k(0)), std::abs(grid.k(grid.n_k - 1)));
}

void check_cfl(const PhaseGrid& grid, double dt) {
    const double cfl = dt * max_speed(grid) / grid.dx;
    if (cfl > 0.9) {
        std::ostringstream os;
        os << "CFL number " << cfl << " exceeds 0.9; reduce dt";
        throw config_error(os.str());
    }
}

int checked_step_count(double t_final, double dt) {
    if (!(dt > 0.0) || !(t_final > 0.0)) {
        throw config_error("time step and horizon must be positive");
    }
    const double ratio = t_final / dt;
    const int n = static_cast<int>(std::lround(ratio));
    if (n < 1 || std::abs(ratio - n) > 1e-9 * ratio) {
        throw config_error("t_final must be an integer multiple of dt");
    }
    return n;
}

// Semidiscrete right-hand side -c_j df/dx + sign_V * L_V[f] with c_j =
// sign_v * k_j. Backward-in-time runs use sign_v = sign_V = -1, which turns
// the adjoint final-value problem into a forward one.
class WignerRhs {
public:
    WignerRhs(const PhaseGrid& grid, const Potential& potential, Epsilon eps,
              double sign_v, double sign_V)
        : grid_(grid), table_(grid, potential, eps), sign_v_(sign_v), sign_V_(sign_V) {}

    void eval(const PhaseField& f, PhaseField& out) const {
        std::fill(out.values.begin(), out.values.end(), cplx{0.0, 0.0});
        const int n_x = grid_.n_x;
        const int n_k = grid_.n_k;
        parallel_for(static_cast<size_t>(n_k), [&](size_t j) {
            const double v = sign_v_ * grid_.k(static_cast<int>(j));
            if (v == 0.0) return;
            std::vector<double> re(n_x), im(n_x), dre(n_x), dim(n_x);
            for (int i = 0; i < n_x; ++i) {
                const cplx& c = f.values[static_cast<size_t>(i) * n_k + j];
                re[i] = c.real();
                im[i] = c.imag();
            }
            weno5_flux_derivative(re, dre, v, grid_.dx);
            weno5_flux_derivative(im, dim, v, grid_.dx);
            for (int i = 0; i < n_x; ++i) {
                out.values[static_cast<size_t>(i) * n_k + j] = cplx{-dre[i], -dim[i]};
            }
        });
        table_.apply(f, out, sign_V_);
    }

private:
    PhaseGrid grid_;
    CollisionTable table_;
    double sign_v_;
    double sign_V_;
};

void axpy(PhaseField& y, double a, const PhaseField& x) {
    for (size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
}

// Shu-Osher SSP-RK3 stage combination; source terms, when present, are
// sampled at the canonical stage times t, t+dt, t+dt/2.
void ssp_rk3_step(const WignerRhs& rhs, PhaseField& u, double dt,
                  const PhaseField* src_t0, const PhaseField* src_t1,
                  const PhaseField* src_mid) {
    PhaseField k = PhaseField::zeros(u.grid);

    PhaseField u1 = u;
    rhs.eval(u, k);
    axpy(u1, dt, k);
    if (src_t0) axpy(u1, dt, *src_t0);

    PhaseField u2 = u;
    for (size_t i = 0; i < u2.values.size(); ++i) u2.values[i] *= 0.75;
    rhs.eval(u1, k);
    axpy(u1, dt, k);
    if (src_t1) axpy(u1, dt, *src_t1);
    axpy(u2, 0.25, u1);

    for (size_t i = 0; i < u.values.size(); ++i) u.values[i] /= 3.0;
    rhs.eval(u2, k);
    axpy(u2, dt, k);
    if (src_mid) axpy(u2, dt, *src_mid);
    axpy(u, 2.0 / 3.0, u2);
}

void check_blowup(const PhaseField& f, double reference, const char* what) {
    const double m = max_abs(f);
    if (!std::isfinite(m) || m > 1e3 * reference) {
        std::ostringstream os;
        os << what << ": max|f| grew to " << m << " from " << reference
           << "; unstable dt/eps combination";
        throw blowup_error(os.str());
    }
}

} // namespace

PhaseField step_wigner(const PhaseField& f, const Potential& potential, Epsilon eps,
                       double dt) {
    if (!(dt > 0.0)) throw config_error("step_wigner: dt must be positive");
    check_cfl(f.grid, dt);
    WignerRhs rhs(f.grid, potential, eps, 1.0, 1.0);
    PhaseField out = f;
    ssp_rk3_step(rhs, out, dt, nullptr, nullptr, nullptr);
    return out;
}

WignerRun solve_wigner(const PhaseField& data, const Potential& potential, Epsilon eps,
                       double dt, double t_final, Direction direction,
                       int snapshot_stride) {
    check_cfl(data.grid, dt);
    const int n_steps = checked_step_count(t_final, dt);
    if (snapshot_stride < 1 || n_steps % snapshot_stride != 0) {
        throw config_error("snapshot_stride must divide the step count");
    }

    WignerRun run{eps, potential, dt, t_final, direction, {}, {}};
    run.warnings = boundary_decay_warnings(data);
    run.snapshots.dt = dt * snapshot_stride;
    run.snapshots.frames.assign(static_cast<size_t>(n_steps / snapshot_stride) + 1,
                                PhaseField{});

    const double sign = (direction == Direction::forward) ? 1.0 : -1.0;
    WignerRhs rhs(data.grid, potential, eps, sign, sign);

    const double reference = std::max(max_abs(data), 1e-300);
    PhaseField state = data;
    auto frame_slot = [&](int step) {
        const int m = (direction == Direction::forward) ? step : n_steps - step;
        return (m % snapshot_stride == 0) ? m / snapshot_stride : -1;
    };
    if (int slot = frame_slot(0); slot >= 0) run.snapshots.frames[slot] = state;
    for (int s = 1; s <= n_steps; ++s) {
        ssp_rk3_step(rhs, state, dt, nullptr, nullptr, nullptr);
        check_blowup(state, reference, "solve_wigner");
        if (int slot = frame_slot(s); slot >= 0) run.snapshots.frames[slot] = state;
    }
    return run;
}

PhaseField solve_wigner_perturbed(const WignerRun& background, const Potential& vtilde,
                                  Epsilon eps) {
    if (background.snapshots.dt != background.dt) {
        throw config_error("perturbed solve needs the background at every step");
    }
    if (background.direction != Direction::forward) {
        throw config_error("perturbed solve expects a forward background run");
    }
    const auto& frames = background.snapshots.frames;
    const PhaseGrid& grid = frames.front().grid;
    const double dt = background.dt;

    WignerRhs rhs(grid, background.potential, eps, 1.0, 1.0);
    CollisionTable source(grid, vtilde, eps);

    auto source_of = [&](const PhaseField& f) {
        PhaseField s = PhaseField::zeros(grid);
        source.apply(f, s, 1.0);
        return s;
    };

    PhaseField u = PhaseField::zeros(grid, frames.front().hermitian_real);
    PhaseField s_now = source_of(frames.front());
    double reference = 0.0;
    for (size_t m = 0; m + 1 < frames.size(); ++m) {
        PhaseField s_next = source_of(frames[m + 1]);
        PhaseField s_mid = s_now;
        for (size_t i = 0; i < s_mid.values.size(); ++i) {
            s_mid.values[i] = 0.5 * (s_now.values[i] + s_next.values[i]);
        }
        ssp_rk3_step(rhs, u, dt, &s_now, &s_next, &s_mid);
        if (m == 0) reference = std::max(max_abs(u), 1e-300);
        check_blowup(u, reference, "solve_wigner_perturbed");
        s_now = std::move(s_next);
    }
    return u;
}

} // namespace wiglab

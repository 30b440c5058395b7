#include "wiglab/schrodinger/solver.hpp"

#include <cmath>

#include "wiglab/core/errors.hpp"
#include "wiglab/core/fft.hpp"

namespace wiglab {

namespace {

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

// Phase tables for one (grid, potential, eps, dt) combination. Both factors
// are unimodular, so every step preserves the discrete l2 norm exactly.
struct StrangStepper {
    std::vector<cplx> half_potential_phase; // exp(-i V dt / (2 eps))
    std::vector<cplx> kinetic_phase;        // exp(-i eps xi^2 dt / 2)

    StrangStepper(const PhaseGrid& grid, const Potential& potential, Epsilon eps,
                  double dt) {
        half_potential_phase.resize(grid.n_x);
        kinetic_phase.resize(grid.n_x);
        for (int i = 0; i < grid.n_x; ++i) {
            half_potential_phase[i] =
                std::polar(1.0, -potential.eval(grid.x(i)) * dt / (2.0 * eps.value));
        }
        for (int m = 0; m < grid.n_x; ++m) {
            const double xi = grid.xi(m);
            kinetic_phase[m] = std::polar(1.0, -eps.value * xi * xi * dt / 2.0);
        }
    }

    void apply(std::vector<cplx>& values) const {
        const size_t n = values.size();
        for (size_t i = 0; i < n; ++i) values[i] *= half_potential_phase[i];
        fft_forward(values);
        for (size_t m = 0; m < n; ++m) values[m] *= kinetic_phase[m];
        fft_inverse(values);
        for (size_t i = 0; i < n; ++i) values[i] *= half_potential_phase[i];
    }
};

} // namespace

ComplexField step_strang(const ComplexField& phi, const Potential& potential,
                         Epsilon eps, double dt) {
    StrangStepper stepper(phi.grid, potential, eps, dt);
    ComplexField out = phi;
    stepper.apply(out.values);
    return out;
}

SchrodingerRun solve_schrodinger(const ComplexField& data, const Potential& potential,
                                 Epsilon eps, double dt, double t_final,
                                 Direction direction, int snapshot_stride) {
    const int n_steps = checked_step_count(t_final, dt);
    if (snapshot_stride < 1 || n_steps % snapshot_stride != 0) {
        throw config_error("snapshot_stride must divide the step count");
    }

    SchrodingerRun run{eps, potential, dt, t_final, direction, {}, {}};
    run.warnings = boundary_decay_warnings(data);
    run.snapshots.dt = dt * snapshot_stride;
    run.snapshots.frames.assign(static_cast<size_t>(n_steps / snapshot_stride) + 1,
                                ComplexField{});

    // A backward run evolves the final data with inverse steps; frames are
    // stored so that index m always means time m*dt.
    const double step_dt = (direction == Direction::forward) ? dt : -dt;
    StrangStepper stepper(data.grid, potential, eps, step_dt);

    ComplexField state = data;
    auto frame_slot = [&](int step) {
        const int m = (direction == Direction::forward) ? step : n_steps - step;
        return (m % snapshot_stride == 0) ? m / snapshot_stride : -1;
    };
    if (int slot = frame_slot(0); slot >= 0) run.snapshots.frames[slot] = state;
    for (int s = 1; s <= n_steps; ++s) {
        stepper.apply(state.values);
        if (int slot = frame_slot(s); slot >= 0) run.snapshots.frames[slot] = state;
    }

    for (const auto& w : boundary_decay_warnings(run.snapshots.back())) {
        run.warnings.push_back("t=T: " + w);
    }
    return run;
}

ComplexField solve_schrodinger_perturbed(const SchrodingerRun& background,
                                         const Potential& vtilde, Epsilon eps) {
    if (background.snapshots.dt != background.dt) {
        throw config_error("perturbed solve needs the background at every step");
    }
    const auto& frames = background.snapshots.frames;
    const PhaseGrid& grid = frames.front().grid;
    const double dt = background.dt;

    StrangStepper half(grid, background.potential, eps, dt / 2.0);
    std::vector<double> vt(grid.n_x);
    for (int i = 0; i < grid.n_x; ++i) vt[i] = vtilde.eval(grid.x(i));

    ComplexField phi = ComplexField::zeros(grid);
    const cplx source_factor = cplx{0.0, -1.0} / eps.value * dt;
    for (size_t m = 0; m + 1 < frames.size(); ++m) {
        half.apply(phi.values);
        // Midpoint source: -(i/eps) * vtilde * phi_b(t + dt/2), with the
        // background interpolated between stored steps.
        for (int i = 0; i < grid.n_x; ++i) {
            const cplx mid = 0.5 * (frames[m].values[i] + frames[m + 1].values[i]);
            phi.values[i] += source_factor * vt[i] * mid;
        }
        half.apply(phi.values);
    }
    return phi;
}

} // namespace wiglab

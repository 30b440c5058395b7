#include "wiglab/liouville/solver.hpp"

#include <atomic>
#include <cmath>

#include "wiglab/core/errors.hpp"
#include "wiglab/core/parallel.hpp"
#include "wiglab/core/spectral.hpp"
#include "wiglab/liouville/flow.hpp"
#include "wiglab/liouville/interp.hpp"

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

} // namespace

PhaseData PhaseData::from_gaussian(const GaussianSpec& spec, const PhaseGrid& grid) {
    return PhaseData{gaussian_phase_field(spec, grid), spec};
}

PhaseData PhaseData::from_field(const PhaseField& f) { return PhaseData{f, {}}; }

double PhaseData::eval(double x, double k, bool* wrapped) const {
    const PhaseGrid& g = field.grid;
    if (wrapped && (x < g.x_min || x >= g.x_max)) *wrapped = true;
    if (closure) {
        const double xw = periodic_wrap(x, g.x_min, g.x_length());
        const double kw = periodic_wrap(k, g.k_min, g.k_length());
        const double ex = (xw - closure->center_x) / closure->width_x;
        const double ek = (kw - *closure->center_k) / *closure->width_k;
        return closure->amplitude * std::exp(-ex * ex - ek * ek);
    }
    return bicubic_eval(field, x, k);
}

LiouvilleRun solve_liouville(const PhaseData& data, const Potential& potential,
                             double dt, double t_final, Direction direction,
                             int snapshot_stride) {
    const int n_steps = checked_step_count(t_final, dt);
    if (snapshot_stride < 1 || n_steps % snapshot_stride != 0) {
        throw config_error("snapshot_stride must divide the step count");
    }
    const PhaseGrid& grid = data.field.grid;

    LiouvilleRun run{potential, dt, t_final, direction, {}, {}};
    run.warnings = boundary_decay_warnings(data.field);
    run.snapshots.dt = dt * snapshot_stride;
    const int n_frames = n_steps / snapshot_stride + 1;
    run.snapshots.frames.assign(static_cast<size_t>(n_frames), PhaseField{});

    std::atomic<bool> any_wrapped{false};
    for (int fm = 0; fm < n_frames; ++fm) {
        const double t = run.snapshots.time(fm);
        // Forward problem: node value is the initial data at the backward
        // foot point. Adjoint problem: the final data at the forward foot.
        const double span = (direction == Direction::forward) ? -t : t_final - t;
        PhaseField frame = PhaseField::zeros(grid, /*hermitian_real=*/true);
        parallel_for(static_cast<size_t>(grid.n_x), [&](size_t i) {
            bool wrapped = false;
            for (int j = 0; j < grid.n_k; ++j) {
                FlowState foot = hamilton_flow(
                    FlowState{grid.x(static_cast<int>(i)), grid.k(j)}, potential,
                    span, dt);
                frame.at(static_cast<int>(i), j) = data.eval(foot.x, foot.k, &wrapped);
            }
            if (wrapped) any_wrapped.store(true, std::memory_order_relaxed);
        });
        run.snapshots.frames[fm] = std::move(frame);
    }
    if (any_wrapped.load()) {
        run.warnings.push_back("characteristics left the x-domain; data wrapped periodically");
    }
    return run;
}

PhaseField solve_liouville_perturbed(const LiouvilleRun& background,
                                     const Potential& vtilde, double dt) {
    if (background.direction != Direction::forward) {
        throw config_error("perturbed solve expects a forward background run");
    }
    const auto& frames = background.snapshots.frames;
    const PhaseGrid& grid = frames.front().grid;
    const size_t n_frames = frames.size();
    const double frame_dt = background.snapshots.dt;

    std::vector<PhaseField> dfb_dk(n_frames);
    for (size_t m = 0; m < n_frames; ++m) dfb_dk[m] = spectral_derivative_k(frames[m]);

    PhaseField out = PhaseField::zeros(grid, /*hermitian_real=*/true);
    parallel_for(static_cast<size_t>(grid.n_x), [&](size_t i) {
        for (int j = 0; j < grid.n_k; ++j) {
            // Trace the characteristic through the node at time T back to 0,
            // accumulating the trapezoid of the source along the way.
            FlowState state{grid.x(static_cast<int>(i)), grid.k(j)};
            double acc = 0.0;
            for (size_t back = 0; back < n_frames; ++back) {
                const size_t m = n_frames - 1 - back;
                const double w = trapezoid_weight(m, n_frames);
                const double source = vtilde.grad(state.x) *
                                      bicubic_eval(dfb_dk[m], state.x, state.k);
                acc += w * source;
                if (m > 0) {
                    state = hamilton_flow(state, background.potential, -frame_dt, dt);
                }
            }
            out.at(static_cast<int>(i), j) = acc * frame_dt;
        }
    });
    return out;
}

} // namespace wiglab

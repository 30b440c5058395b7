#include "wiglab/analysis/rep_matrix.hpp"

#include <sstream>
#include <variant>

#include "wiglab/core/errors.hpp"
#include "wiglab/core/parallel.hpp"

namespace wiglab {

namespace {

std::string center_id(const char* role, double center) {
    std::ostringstream os;
    os << role << "[center_x=" << center << "]";
    return os.str();
}

GaussianSpec with_center(GaussianSpec spec, double center) {
    spec.center_x = center;
    return spec;
}

template <class Fn>
auto solve_or_rethrow(const char* role, double center, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << role << " solve failed at center " << center << ": " << e.what();
        throw config_error(os.str());
    }
}

} // namespace

RepresentativeMatrix assemble_rep_matrix(const std::vector<double>& centers_i,
                                         const std::vector<double>& centers_j,
                                         const AssemblyConfig& config, RepKind kind,
                                         std::optional<Epsilon> eps) {
    if (centers_i.empty() || centers_j.empty()) {
        throw config_error("assemble_rep_matrix: empty center lists");
    }
    for (double c : centers_i) {
        if (c < config.grid.x_min || c >= config.grid.x_max) {
            throw config_error("assemble_rep_matrix: initial center outside x-domain");
        }
    }
    for (double c : centers_j) {
        if (c < config.grid.x_min || c >= config.grid.x_max) {
            throw config_error("assemble_rep_matrix: final center outside x-domain");
        }
    }
    if (kind != RepKind::liouville && !eps) {
        throw config_error("assemble_rep_matrix: kind requires an eps value");
    }

    RepresentativeMatrix out;
    out.centers_i = centers_i;
    out.centers_j = centers_j;
    out.kind = kind;
    out.eps = eps;
    const size_t n_i = centers_i.size();
    const size_t n_j = centers_j.size();
    out.entries.resize(n_i * n_j);

    auto collect = [&](const std::vector<std::string>& ws, const std::string& tag) {
        for (const auto& w : ws) out.warnings.push_back(tag + ": " + w);
    };

    if (kind == RepKind::schrodinger) {
        std::vector<SchrodingerRun> bg(n_i, SchrodingerRun{*eps, {}, 0, 0, {}, {}, {}});
        std::vector<SchrodingerRun> adj(n_j, SchrodingerRun{*eps, {}, 0, 0, {}, {}, {}});
        parallel_for(n_i, [&](size_t i) {
            bg[i] = solve_or_rethrow("background", centers_i[i], [&] {
                const auto packet = gaussian_packet(
                    with_center(config.f_data, centers_i[i]), config.grid, *eps);
                return solve_schrodinger(packet, config.potential, *eps, config.dt,
                                         config.t_final, Direction::forward,
                                         config.snapshot_stride);
            });
        });
        parallel_for(n_j, [&](size_t j) {
            adj[j] = solve_or_rethrow("adjoint", centers_j[j], [&] {
                const auto packet = gaussian_packet(
                    with_center(config.g_data, centers_j[j]), config.grid, *eps);
                return solve_schrodinger(packet, config.potential, *eps, config.dt,
                                         config.t_final, Direction::backward,
                                         config.snapshot_stride);
            });
        });
        for (size_t i = 0; i < n_i; ++i) collect(bg[i].warnings, center_id("fI", centers_i[i]));
        for (size_t j = 0; j < n_j; ++j) collect(adj[j].warnings, center_id("gT", centers_j[j]));
        parallel_for(n_i * n_j, [&](size_t idx) {
            const size_t i = idx / n_j, j = idx % n_j;
            Representative r = rep_schrodinger(bg[i], adj[j], *eps);
            r.init_id = center_id("phiI", centers_i[i]);
            r.final_id = center_id("psiT", centers_j[j]);
            out.entries[idx] = std::move(r);
        });
        return out;
    }

    if (kind == RepKind::wigner) {
        std::vector<WignerRun> bg(n_i, WignerRun{*eps, {}, 0, 0, {}, {}, {}});
        std::vector<WignerRun> adj(n_j, WignerRun{*eps, {}, 0, 0, {}, {}, {}});
        parallel_for(n_i, [&](size_t i) {
            bg[i] = solve_or_rethrow("background", centers_i[i], [&] {
                const auto data = gaussian_phase_field(
                    with_center(config.f_data, centers_i[i]), config.grid);
                return solve_wigner(data, config.potential, *eps, config.dt,
                                    config.t_final, Direction::forward,
                                    config.snapshot_stride);
            });
        });
        parallel_for(n_j, [&](size_t j) {
            adj[j] = solve_or_rethrow("adjoint", centers_j[j], [&] {
                const auto data = gaussian_phase_field(
                    with_center(config.g_data, centers_j[j]), config.grid);
                return solve_wigner(data, config.potential, *eps, config.dt,
                                    config.t_final, Direction::backward,
                                    config.snapshot_stride);
            });
        });
        for (size_t i = 0; i < n_i; ++i) collect(bg[i].warnings, center_id("fI", centers_i[i]));
        for (size_t j = 0; j < n_j; ++j) collect(adj[j].warnings, center_id("gT", centers_j[j]));
        parallel_for(n_i * n_j, [&](size_t idx) {
            const size_t i = idx / n_j, j = idx % n_j;
            Representative r = rep_wigner(bg[i], adj[j], *eps);
            r.init_id = center_id("fI", centers_i[i]);
            r.final_id = center_id("gT", centers_j[j]);
            out.entries[idx] = std::move(r);
        });
        return out;
    }

    std::vector<LiouvilleRun> bg(n_i), adj(n_j);
    parallel_for(n_i, [&](size_t i) {
        bg[i] = solve_or_rethrow("background", centers_i[i], [&] {
            const auto data = PhaseData::from_gaussian(
                with_center(config.f_data, centers_i[i]), config.grid);
            return solve_liouville(data, config.potential, config.dt, config.t_final,
                                   Direction::forward, config.snapshot_stride);
        });
    });
    parallel_for(n_j, [&](size_t j) {
        adj[j] = solve_or_rethrow("adjoint", centers_j[j], [&] {
            const auto data = PhaseData::from_gaussian(
                with_center(config.g_data, centers_j[j]), config.grid);
            return solve_liouville(data, config.potential, config.dt, config.t_final,
                                   Direction::backward, config.snapshot_stride);
        });
    });
    for (size_t i = 0; i < n_i; ++i) collect(bg[i].warnings, center_id("fI", centers_i[i]));
    for (size_t j = 0; j < n_j; ++j) collect(adj[j].warnings, center_id("gT", centers_j[j]));
    parallel_for(n_i * n_j, [&](size_t idx) {
        const size_t i = idx / n_j, j = idx % n_j;
        Representative r = rep_liouville(bg[i], adj[j]);
        r.init_id = center_id("fI", centers_i[i]);
        r.final_id = center_id("gT", centers_j[j]);
        out.entries[idx] = std::move(r);
    });
    return out;
}

} // namespace wiglab

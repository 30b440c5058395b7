#include "wiglab/cli/experiment.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "wiglab/analysis/convergence.hpp"
#include "wiglab/analysis/rep_matrix.hpp"
#include "wiglab/analysis/tikhonov.hpp"
#include "wiglab/cli/csv.hpp"
#include "wiglab/cli/manifest.hpp"
#include "wiglab/core/errors.hpp"
#include "wiglab/representatives/representative.hpp"

namespace wiglab {

namespace {

namespace fs = std::filesystem;

PhaseGrid grid_of(const ExperimentConfig& cfg) {
    return make_phase_grid(*cfg.x_min, *cfg.x_max, *cfg.n_x, *cfg.k_min, *cfg.k_max,
                           *cfg.n_k);
}

Potential potential_of(const ExperimentConfig& cfg) {
    return Potential::gaussian(
        GaussianSpec{*cfg.pot_amplitude, *cfg.pot_center, *cfg.pot_width, {}, {}});
}

GaussianSpec packet_spec(const PacketSpec& p) {
    return GaussianSpec{p.amplitude, p.center_x, p.width_x, p.center_k, {}};
}

double rep_l2_distance(const Representative& a, const Representative& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) acc += std::norm(a.values[i] - b.values[i]);
    return std::sqrt(acc * a.grid.dx);
}

std::vector<double> study_centers(const ExperimentConfig& cfg) {
    const int n = *cfg.study_n_centers;
    const double lo = *cfg.study_center_min;
    const double hi = *cfg.study_center_max;
    std::vector<double> centers;
    if (n == 1) {
        centers.push_back(lo);
        return centers;
    }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) centers.push_back(lo + i * step);
    return centers;
}

AssemblyConfig assembly_of(const ExperimentConfig& cfg) {
    return AssemblyConfig{grid_of(cfg), potential_of(cfg), *cfg.dt, *cfg.t_final,
                          *cfg.data_f, *cfg.data_g, cfg.snapshot_stride};
}

void write_snapshots(const fs::path& dir, const char* stem,
                     const Trajectory<PhaseField>& frames) {
    for (size_t m = 0; m < frames.size(); ++m) {
        std::ostringstream name;
        name << stem << "_" << m << ".csv";
        write_phase_field_csv((dir / name.str()).string(), frames.frames[m]);
    }
}

void run_forward_wigner(const ExperimentConfig& cfg, const fs::path& dir,
                        RunManifest& manifest) {
    const Epsilon eps(cfg.eps_values.front());
    const auto data = gaussian_phase_field(*cfg.data_f, grid_of(cfg));
    const auto run = solve_wigner(data, potential_of(cfg), eps, *cfg.dt, *cfg.t_final,
                                  Direction::forward, cfg.snapshot_stride);
    manifest.warn(run.warnings);
    const double m0 = phase_mass(run.snapshots.front()).real();
    const double m1 = phase_mass(run.snapshots.back()).real();
    manifest.fact("mass.initial", csv_float(m0));
    manifest.fact("mass.final", csv_float(m1));
    manifest.fact("mass.relative_drift", csv_float(std::abs(m1 - m0) / std::abs(m0)));
    write_phase_field_csv((dir / "field_final.csv").string(), run.snapshots.back());
    if (cfg.output_snapshots) write_snapshots(dir, "field", run.snapshots);
}

void run_forward_liouville(const ExperimentConfig& cfg, const fs::path& dir,
                           RunManifest& manifest) {
    const auto data = PhaseData::from_gaussian(*cfg.data_f, grid_of(cfg));
    const auto run = solve_liouville(data, potential_of(cfg), *cfg.dt, *cfg.t_final,
                                     Direction::forward, cfg.snapshot_stride);
    manifest.warn(run.warnings);
    manifest.fact("max_abs.initial", csv_float(max_abs(run.snapshots.front())));
    manifest.fact("max_abs.final", csv_float(max_abs(run.snapshots.back())));
    write_phase_field_csv((dir / "field_final.csv").string(), run.snapshots.back());
    if (cfg.output_snapshots) write_snapshots(dir, "field", run.snapshots);
}

void run_forward_schrodinger(const ExperimentConfig& cfg, const fs::path& dir,
                             RunManifest& manifest) {
    const Epsilon eps(cfg.eps_values.front());
    const PhaseGrid grid = grid_of(cfg);
    const auto packet = gaussian_packet(packet_spec(*cfg.phi), grid, eps);
    const auto run = solve_schrodinger(packet, potential_of(cfg), eps, *cfg.dt,
                                       *cfg.t_final, Direction::forward,
                                       cfg.snapshot_stride);
    manifest.warn(run.warnings);
    const double n0 = l2_norm(run.snapshots.front());
    const double n1 = l2_norm(run.snapshots.back());
    manifest.fact("norm.initial", csv_float(n0));
    manifest.fact("norm.final", csv_float(n1));
    manifest.fact("norm.relative_drift", csv_float(std::abs(n1 - n0) / n0));
    write_wavefunction_csv((dir / "wavefunction_final.csv").string(),
                           run.snapshots.back());
    if (cfg.output_snapshots) {
        for (size_t m = 0; m < run.snapshots.size(); ++m) {
            std::ostringstream name;
            name << "wavefunction_" << m << ".csv";
            write_wavefunction_csv((dir / name.str()).string(),
                                   run.snapshots.frames[m]);
        }
    }
}

Representative representative_of(const ExperimentConfig& cfg, const std::string& family,
                                 RunManifest& manifest) {
    const PhaseGrid grid = grid_of(cfg);
    const Potential vb = potential_of(cfg);
    if (family == "schrodinger") {
        const Epsilon eps(cfg.eps_values.front());
        const auto bg = solve_schrodinger(gaussian_packet(packet_spec(*cfg.phi), grid, eps),
                                          vb, eps, *cfg.dt, *cfg.t_final,
                                          Direction::forward, cfg.snapshot_stride);
        const auto adj = solve_schrodinger(gaussian_packet(packet_spec(*cfg.psi), grid, eps),
                                           vb, eps, *cfg.dt, *cfg.t_final,
                                           Direction::backward, cfg.snapshot_stride);
        manifest.warn(bg.warnings);
        manifest.warn(adj.warnings);
        return rep_schrodinger(bg, adj, eps);
    }
    if (family == "wigner") {
        const Epsilon eps(cfg.eps_values.front());
        const auto bg = solve_wigner(gaussian_phase_field(*cfg.data_f, grid), vb, eps,
                                     *cfg.dt, *cfg.t_final, Direction::forward,
                                     cfg.snapshot_stride);
        const auto adj = solve_wigner(gaussian_phase_field(*cfg.data_g, grid), vb, eps,
                                      *cfg.dt, *cfg.t_final, Direction::backward,
                                      cfg.snapshot_stride);
        manifest.warn(bg.warnings);
        manifest.warn(adj.warnings);
        return rep_wigner(bg, adj, eps);
    }
    const auto bg = solve_liouville(PhaseData::from_gaussian(*cfg.data_f, grid), vb,
                                    *cfg.dt, *cfg.t_final, Direction::forward,
                                    cfg.snapshot_stride);
    const auto adj = solve_liouville(PhaseData::from_gaussian(*cfg.data_g, grid), vb,
                                     *cfg.dt, *cfg.t_final, Direction::backward,
                                     cfg.snapshot_stride);
    manifest.warn(bg.warnings);
    manifest.warn(adj.warnings);
    return rep_liouville(bg, adj);
}

void run_representative(const ExperimentConfig& cfg, const fs::path& dir,
                        RunManifest& manifest) {
    const Representative rep = representative_of(cfg, *cfg.rep_family, manifest);
    manifest.fact("kernel.l2_norm", csv_float(rep_l2_norm(rep)));
    manifest.fact("kernel.integral_re", csv_float(rep_integral(rep).real()));
    manifest.fact("kernel.integral_im", csv_float(rep_integral(rep).imag()));
    write_kernel_csv((dir / "kernel.csv").string(), rep);
}

void run_sweep_epsilon(const ExperimentConfig& cfg, const fs::path& dir,
                       RunManifest& manifest) {
    const Representative r_l = representative_of(cfg, "liouville", manifest);
    write_kernel_csv((dir / "kernel_liouville.csv").string(), r_l);
    const double l_norm = rep_l2_norm(r_l);

    std::vector<double> errs;
    for (size_t i = 0; i < cfg.eps_values.size(); ++i) {
        ExperimentConfig one = cfg;
        one.eps_values = {cfg.eps_values[i]};
        const Representative r_w = representative_of(one, "wigner", manifest);
        std::ostringstream name;
        name << "kernel_wigner_" << i << ".csv";
        write_kernel_csv((dir / name.str()).string(), r_w);
        errs.push_back(rep_l2_distance(r_w, r_l) / l_norm);
    }
    const ConvergenceReport report = err_curve_and_slope(cfg.eps_values, errs);
    manifest.fact("err_curve.fitted_slope", csv_float(report.fitted_slope));
    write_curve_csv((dir / "err_curve.csv").string(), cfg.eps_values, errs,
                    report.fitted_slope);
}

void run_svd_study(const ExperimentConfig& cfg, const fs::path& dir,
                   RunManifest& manifest) {
    const std::vector<double> centers = study_centers(cfg);
    const AssemblyConfig assembly = assembly_of(cfg);

    const RepresentativeMatrix limit =
        assemble_rep_matrix(centers, centers, assembly, RepKind::liouville, {});
    manifest.warn(limit.warnings);
    write_matrix_csv((dir / "matrix_liouville.csv").string(),
                     (dir / "matrix_liouville_index.csv").string(), limit);

    std::vector<std::pair<double, RepresentativeMatrix>> sweep;
    for (size_t i = 0; i < cfg.eps_values.size(); ++i) {
        const Epsilon eps(cfg.eps_values[i]);
        RepresentativeMatrix m =
            assemble_rep_matrix(centers, centers, assembly, RepKind::wigner, eps);
        std::ostringstream name, idx;
        name << "matrix_wigner_" << i << ".csv";
        idx << "matrix_wigner_" << i << "_index.csv";
        write_matrix_csv((dir / name.str()).string(), (dir / idx.str()).string(), m);
        sweep.emplace_back(cfg.eps_values[i], std::move(m));
    }

    // Relative singular values: one column per matrix.
    const std::vector<double> s_limit = relative_singular_values(limit);
    std::vector<std::vector<double>> s_eps;
    for (const auto& [eps, m] : sweep) s_eps.push_back(relative_singular_values(m));
    {
        std::ostringstream os;
        os << "index,liouville";
        for (size_t i = 0; i < sweep.size(); ++i) os << ",eps_" << i;
        os << '\n';
        for (size_t r = 0; r < s_limit.size(); ++r) {
            os << (r + 1) << ',' << csv_float(s_limit[r]);
            for (const auto& s : s_eps) {
                os << ',' << (r < s.size() ? csv_float(s[r]) : "");
            }
            os << '\n';
        }
        write_text_file((dir / "singular_values.csv").string(), os.str());
    }

    const SingularValueErrors sv = singular_value_errors(sweep, limit);
    manifest.warn(sv.warnings);
    {
        std::ostringstream os;
        os << "eps";
        for (int idx : sv.indices) {
            if (sv.errors.count(idx)) os << ",err_s" << idx;
        }
        os << '\n';
        for (size_t e = 0; e < sv.eps_values.size(); ++e) {
            os << csv_float(sv.eps_values[e]);
            for (int idx : sv.indices) {
                const auto it = sv.errors.find(idx);
                if (it != sv.errors.end()) os << ',' << csv_float(it->second[e]);
            }
            os << '\n';
        }
        write_text_file((dir / "sv_errors.csv").string(), os.str());
    }

    {
        std::ostringstream os;
        std::vector<int> usable_ks;
        for (int k : cfg.study_angle_ks) {
            try {
                subspace_angle(limit, sweep.front().second, k);
                usable_ks.push_back(k);
            } catch (const degenerate_error& e) {
                manifest.warnings.push_back("angle k=" + std::to_string(k) +
                                            " skipped: " + e.what());
            }
        }
        os << "eps";
        for (int k : usable_ks) os << ",angle_k" << k;
        os << '\n';
        for (const auto& [eps, m] : sweep) {
            os << csv_float(eps);
            for (int k : usable_ks) os << ',' << csv_float(subspace_angle(limit, m, k));
            os << '\n';
        }
        write_text_file((dir / "angles.csv").string(), os.str());
    }
}

void run_identity_check(const ExperimentConfig& cfg, const fs::path& dir,
                        RunManifest& manifest) {
    const PhaseGrid grid = grid_of(cfg);
    const Epsilon eps(cfg.eps_values.front());
    const double residual = check_wigner_schrodinger_identity(
        gaussian_packet(packet_spec(*cfg.phi), grid, eps),
        gaussian_packet(packet_spec(*cfg.phi_prime), grid, eps),
        gaussian_packet(packet_spec(*cfg.psi), grid, eps),
        gaussian_packet(packet_spec(*cfg.psi_prime), grid, eps), potential_of(cfg),
        eps, *cfg.dt, *cfg.t_final);
    std::cout << "identity residual = " << csv_float(residual) << "\n";
    manifest.fact("identity.residual", csv_float(residual));
    write_text_file((dir / "identity.csv").string(),
                    "residual\n" + csv_float(residual) + "\n");
}

void run_reconstruct(const ExperimentConfig& cfg, const fs::path& dir,
                     RunManifest& manifest) {
    const std::string family = cfg.reconstruct_family.value_or("liouville");
    const std::vector<double> centers = study_centers(cfg);
    const AssemblyConfig assembly = assembly_of(cfg);
    std::optional<Epsilon> eps;
    if (family == "wigner") eps = Epsilon(cfg.eps_values.front());
    const RepresentativeMatrix m = assemble_rep_matrix(
        centers, centers, assembly,
        family == "wigner" ? RepKind::wigner : RepKind::liouville, eps);
    manifest.warn(m.warnings);

    const Potential truth = Potential::gaussian(*cfg.reconstruct_truth);
    std::vector<cplx> data;
    data.reserve(m.entries.size());
    for (const Representative& rep : m.entries) data.push_back(rep_pair(rep, truth));

    const TikhonovResult result =
        tikhonov_reconstruct(m, data, *cfg.reconstruct_lambda);
    if (result.pseudo_inverse) {
        manifest.warnings.push_back("lambda = 0 with rank-deficient system; "
                                    "minimal-norm solution returned");
    }

    const PhaseGrid grid = grid_of(cfg);
    std::vector<double> truth_sampled(grid.n_x);
    for (int i = 0; i < grid.n_x; ++i) truth_sampled[i] = truth.eval(grid.x(i));
    write_real_profile_csv((dir / "reconstruction.csv").string(), grid,
                           {{"vtilde_reconstructed", result.vtilde},
                            {"vtilde_true", truth_sampled}});
}

ExitCode code_of(const std::exception& e) {
    if (dynamic_cast<const config_error*>(&e)) return ExitCode::config;
    if (dynamic_cast<const blowup_error*>(&e)) return ExitCode::blowup;
    if (dynamic_cast<const oracle_cap_error*>(&e)) return ExitCode::oracle_cap;
    if (dynamic_cast<const degenerate_error*>(&e)) return ExitCode::degenerate;
    if (dynamic_cast<const std::ios_base::failure*>(&e)) return ExitCode::io;
    return ExitCode::failure;
}

const char* code_name(ExitCode code) {
    switch (code) {
        case ExitCode::ok: return "ok";
        case ExitCode::config: return "config";
        case ExitCode::blowup: return "blowup";
        case ExitCode::oracle_cap: return "oracle-cap";
        case ExitCode::degenerate: return "degenerate";
        case ExitCode::io: return "io";
        default: return "failure";
    }
}

} // namespace

ExitCode run_experiment(const ExperimentConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    fs::path dir;
    try {
        if (const auto violations = validate_config(cfg); !violations.empty() || !cfg.kind) {
            std::string msg = "configuration invalid:";
            if (!cfg.kind) msg += "\n  - experiment.kind is not set";
            for (const auto& v : violations) msg += "\n  - " + v;
            throw config_error(msg);
        }
        dir = fs::path(cfg.output_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw std::ios_base::failure("cannot create output directory " +
                                             dir.string());

        RunManifest manifest;
        manifest.config = cfg;
        add_scheme_facts(manifest);

        switch (*cfg.kind) {
            case ExperimentKind::forward_wigner:
                run_forward_wigner(cfg, dir, manifest);
                break;
            case ExperimentKind::forward_liouville:
                run_forward_liouville(cfg, dir, manifest);
                break;
            case ExperimentKind::forward_schrodinger:
                run_forward_schrodinger(cfg, dir, manifest);
                break;
            case ExperimentKind::representative:
                run_representative(cfg, dir, manifest);
                break;
            case ExperimentKind::sweep_epsilon:
                run_sweep_epsilon(cfg, dir, manifest);
                break;
            case ExperimentKind::svd_study:
                run_svd_study(cfg, dir, manifest);
                break;
            case ExperimentKind::identity_check:
                run_identity_check(cfg, dir, manifest);
                break;
            case ExperimentKind::reconstruct:
                run_reconstruct(cfg, dir, manifest);
                break;
        }

        manifest.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                .count();
        write_manifest((dir / "manifest.txt").string(), manifest);
        return ExitCode::ok;
    } catch (const std::exception& e) {
        const ExitCode code = code_of(e);
        std::cerr << "error (" << code_name(code) << "): " << e.what() << "\n";
        if (!dir.empty()) {
            std::ostringstream os;
            os << "exit_code = " << static_cast<int>(code) << "\n"
               << "error_kind = " << code_name(code) << "\n"
               << "message = " << e.what() << "\n";
            try {
                write_text_file((dir / "error.txt").string(), os.str());
            } catch (...) {
                // The error file is best effort; the exit code still reports.
            }
        }
        return code;
    }
}

} // namespace wiglab

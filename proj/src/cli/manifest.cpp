#include "wiglab/cli/manifest.hpp"

#include <sstream>

#include "wiglab/cli/csv.hpp"

namespace wiglab {

void add_scheme_facts(RunManifest& manifest) {
    manifest.fact("version", "0.1.0");
    manifest.fact("scheme.x_boundary", "periodic");
    manifest.fact("scheme.k_boundary", "periodic-spectral");
    manifest.fact("scheme.wave_integrator", "strang-splitting-spectral");
    manifest.fact("scheme.kinetic_integrator", "ssp-rk3");
    manifest.fact("scheme.transport", "weno5-upwind");
    manifest.fact("scheme.weno_epsilon", "1e-6");
    manifest.fact("scheme.collision", "spectral-y-multiplier");
    manifest.fact("scheme.classical_solver", "backward-characteristics-rk4");
    manifest.fact("scheme.time_quadrature", "trapezoid-on-stored-steps");
    manifest.fact("scheme.svd_matricization", "pairs-by-x");

    // Empirical stability envelope of the explicit collision term: the
    // multiplier magnitude saturates near 2*max|V|/eps, and SSP-RK3 holds it
    // on the imaginary axis up to sqrt(3)/dt.
    const ExperimentConfig& cfg = manifest.config;
    if (cfg.dt && cfg.pot_amplitude && !cfg.eps_values.empty()) {
        for (size_t i = 0; i < cfg.eps_values.size(); ++i) {
            const double ratio =
                *cfg.dt * 2.0 * std::abs(*cfg.pot_amplitude) / cfg.eps_values[i];
            manifest.fact("stability.collision_dt_ratio." + std::to_string(i),
                          csv_float(ratio) + " (stable while < 1.732)");
        }
    }
}

std::string manifest_text(const RunManifest& manifest) {
    std::ostringstream os;
    std::istringstream cfg(print_config(manifest.config));
    std::string line;
    while (std::getline(cfg, line)) os << "config." << line << "\n";
    for (const auto& [key, value] : manifest.facts) os << key << " = " << value << "\n";
    for (size_t i = 0; i < manifest.warnings.size(); ++i) {
        os << "warning." << i << " = " << manifest.warnings[i] << "\n";
    }
    os << "wall_clock_seconds = " << csv_float(manifest.wall_clock_seconds) << "\n";
    return os.str();
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
    write_text_file(path, manifest_text(manifest));
}

} // namespace wiglab

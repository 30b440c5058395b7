#include "wiglab/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "wiglab/core/errors.hpp"

namespace wiglab {

namespace {

const std::map<std::string, ExperimentKind> kKindNames = {
    {"forward-wigner", ExperimentKind::forward_wigner},
    {"forward-liouville", ExperimentKind::forward_liouville},
    {"forward-schrodinger", ExperimentKind::forward_schrodinger},
    {"representative", ExperimentKind::representative},
    {"sweep-epsilon", ExperimentKind::sweep_epsilon},
    {"svd-study", ExperimentKind::svd_study},
    {"identity-check", ExperimentKind::identity_check},
    {"reconstruct", ExperimentKind::reconstruct},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

// Builders track which subkeys appeared so incomplete blocks are reported
// rather than silently defaulted.
struct GaussBuilder {
    std::optional<double> amplitude, center_x, width_x, center_k, width_k;
    bool any() const {
        return amplitude || center_x || width_x || center_k || width_k;
    }
};

struct PacketBuilder {
    std::optional<double> amplitude, center_x, width_x, center_k;
    bool any() const { return amplitude || center_x || width_x || center_k; }
};

std::optional<GaussianSpec> finish_phase_gaussian(const GaussBuilder& b,
                                                  const std::string& block,
                                                  std::vector<std::string>& violations) {
    if (!b.any()) return std::nullopt;
    if (!b.amplitude || !b.center_x || !b.width_x || !b.center_k || !b.width_k) {
        violations.push_back("block '" + block +
                             "' is incomplete: needs amplitude, center_x, width_x, "
                             "center_k, width_k");
        return std::nullopt;
    }
    return GaussianSpec{*b.amplitude, *b.center_x, *b.width_x, b.center_k, b.width_k};
}

std::optional<GaussianSpec> finish_x_gaussian(const GaussBuilder& b,
                                              const std::string& block,
                                              std::vector<std::string>& violations) {
    if (!b.any()) return std::nullopt;
    if (!b.amplitude || !b.center_x || !b.width_x) {
        violations.push_back("block '" + block +
                             "' is incomplete: needs amplitude, center, width");
        return std::nullopt;
    }
    return GaussianSpec{*b.amplitude, *b.center_x, *b.width_x, {}, {}};
}

std::optional<PacketSpec> finish_packet(const PacketBuilder& b, const std::string& block,
                                        std::vector<std::string>& violations) {
    if (!b.any()) return std::nullopt;
    if (!b.amplitude || !b.center_x || !b.width_x || !b.center_k) {
        violations.push_back("block '" + block +
                             "' is incomplete: needs amplitude, center_x, width_x, "
                             "center_k");
        return std::nullopt;
    }
    return PacketSpec{*b.amplitude, *b.center_x, *b.width_x, *b.center_k};
}

} // namespace

std::string kind_name(ExperimentKind kind) {
    for (const auto& [name, k] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<ExperimentKind> kind_from_name(const std::string& name) {
    const auto it = kKindNames.find(name);
    if (it == kKindNames.end()) return std::nullopt;
    return it->second;
}

double parse_number(const std::string& text) {
    std::string s = trim(text);
    double factor = 1.0;
    if (s.rfind("pi^-1*", 0) == 0) {
        factor = 1.0 / std::numbers::pi;
        s = s.substr(6);
    } else if (s.rfind("pi*", 0) == 0) {
        factor = std::numbers::pi;
        s = s.substr(3);
    }
    if (s.rfind("2^", 0) == 0) {
        int n = 0;
        const char* begin = s.data() + 2;
        const char* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, n);
        if (ec != std::errc{} || ptr != end) {
            throw config_error("malformed power-of-two literal '" + text + "'");
        }
        return factor * std::exp2(n);
    }
    try {
        size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return factor * v;
    } catch (const std::exception&) {
        throw config_error("malformed number '" + text + "'");
    }
}

ExperimentConfig parse_config(const std::string& text) {
    std::vector<std::string> violations;
    ExperimentConfig cfg;
    GaussBuilder data_f, data_g, truth;
    PacketBuilder phi, phi_prime, psi, psi_prime;

    auto number = [&](const std::string& key, const std::string& value,
                      std::optional<double>& slot) {
        try {
            slot = parse_number(value);
        } catch (const config_error& e) {
            violations.push_back(key + ": " + e.what());
        }
    };
    auto integer = [&](const std::string& key, const std::string& value,
                       std::optional<int>& slot) {
        try {
            const double v = parse_number(value);
            if (v != std::floor(v)) throw config_error("not an integer");
            slot = static_cast<int>(v);
        } catch (const config_error&) {
            violations.push_back(key + ": expected an integer, got '" + value + "'");
        }
    };

    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            violations.push_back("line " + std::to_string(line_no) +
                                 ": expected 'key = value'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "experiment.kind") {
            const auto k = kind_from_name(value);
            if (!k) {
                violations.push_back("experiment.kind: unknown kind '" + value + "'");
            } else {
                cfg.kind = k;
            }
        } else if (key == "grid.x_min") number(key, value, cfg.x_min);
        else if (key == "grid.x_max") number(key, value, cfg.x_max);
        else if (key == "grid.k_min") number(key, value, cfg.k_min);
        else if (key == "grid.k_max") number(key, value, cfg.k_max);
        else if (key == "grid.n_x") integer(key, value, cfg.n_x);
        else if (key == "grid.n_k") integer(key, value, cfg.n_k);
        else if (key == "potential.amplitude") number(key, value, cfg.pot_amplitude);
        else if (key == "potential.center") number(key, value, cfg.pot_center);
        else if (key == "potential.width") number(key, value, cfg.pot_width);
        else if (key == "data.f.amplitude") number(key, value, data_f.amplitude);
        else if (key == "data.f.center_x") number(key, value, data_f.center_x);
        else if (key == "data.f.width_x") number(key, value, data_f.width_x);
        else if (key == "data.f.center_k") number(key, value, data_f.center_k);
        else if (key == "data.f.width_k") number(key, value, data_f.width_k);
        else if (key == "data.g.amplitude") number(key, value, data_g.amplitude);
        else if (key == "data.g.center_x") number(key, value, data_g.center_x);
        else if (key == "data.g.width_x") number(key, value, data_g.width_x);
        else if (key == "data.g.center_k") number(key, value, data_g.center_k);
        else if (key == "data.g.width_k") number(key, value, data_g.width_k);
        else if (key == "packets.phi.amplitude") number(key, value, phi.amplitude);
        else if (key == "packets.phi.center_x") number(key, value, phi.center_x);
        else if (key == "packets.phi.width_x") number(key, value, phi.width_x);
        else if (key == "packets.phi.center_k") number(key, value, phi.center_k);
        else if (key == "packets.phi_prime.amplitude") number(key, value, phi_prime.amplitude);
        else if (key == "packets.phi_prime.center_x") number(key, value, phi_prime.center_x);
        else if (key == "packets.phi_prime.width_x") number(key, value, phi_prime.width_x);
        else if (key == "packets.phi_prime.center_k") number(key, value, phi_prime.center_k);
        else if (key == "packets.psi.amplitude") number(key, value, psi.amplitude);
        else if (key == "packets.psi.center_x") number(key, value, psi.center_x);
        else if (key == "packets.psi.width_x") number(key, value, psi.width_x);
        else if (key == "packets.psi.center_k") number(key, value, psi.center_k);
        else if (key == "packets.psi_prime.amplitude") number(key, value, psi_prime.amplitude);
        else if (key == "packets.psi_prime.center_x") number(key, value, psi_prime.center_x);
        else if (key == "packets.psi_prime.width_x") number(key, value, psi_prime.width_x);
        else if (key == "packets.psi_prime.center_k") number(key, value, psi_prime.center_k);
        else if (key == "time.dt") number(key, value, cfg.dt);
        else if (key == "time.t_final") number(key, value, cfg.t_final);
        else if (key == "time.snapshot_stride") {
            std::optional<int> v;
            integer(key, value, v);
            if (v) cfg.snapshot_stride = *v;
        } else if (key == "eps.values") {
            cfg.eps_values.clear();
            cfg.eps_literals.clear();
            for (const std::string& item : split_list(value)) {
                try {
                    cfg.eps_values.push_back(parse_number(item));
                    cfg.eps_literals.push_back(item);
                } catch (const config_error& e) {
                    violations.push_back("eps.values: " + std::string(e.what()));
                }
            }
        } else if (key == "study.n_centers") integer(key, value, cfg.study_n_centers);
        else if (key == "study.center_min") number(key, value, cfg.study_center_min);
        else if (key == "study.center_max") number(key, value, cfg.study_center_max);
        else if (key == "study.angle_ks") {
            cfg.study_angle_ks.clear();
            for (const std::string& item : split_list(value)) {
                std::optional<int> v;
                integer(key, item, v);
                if (v) cfg.study_angle_ks.push_back(*v);
            }
        } else if (key == "representative.family") cfg.rep_family = value;
        else if (key == "reconstruct.lambda") number(key, value, cfg.reconstruct_lambda);
        else if (key == "reconstruct.family") cfg.reconstruct_family = value;
        else if (key == "reconstruct.truth.amplitude") number(key, value, truth.amplitude);
        else if (key == "reconstruct.truth.center") number(key, value, truth.center_x);
        else if (key == "reconstruct.truth.width") number(key, value, truth.width_x);
        else if (key == "output.dir") cfg.output_dir = value;
        else if (key == "output.snapshots") {
            if (value == "true") cfg.output_snapshots = true;
            else if (value == "false") cfg.output_snapshots = false;
            else violations.push_back("output.snapshots: expected true or false");
        } else {
            violations.push_back("unknown key '" + key + "'");
        }
    }

    cfg.data_f = finish_phase_gaussian(data_f, "data.f", violations);
    cfg.data_g = finish_phase_gaussian(data_g, "data.g", violations);
    cfg.reconstruct_truth = finish_x_gaussian(truth, "reconstruct.truth", violations);
    cfg.phi = finish_packet(phi, "packets.phi", violations);
    cfg.phi_prime = finish_packet(phi_prime, "packets.phi_prime", violations);
    cfg.psi = finish_packet(psi, "packets.psi", violations);
    cfg.psi_prime = finish_packet(psi_prime, "packets.psi_prime", violations);

    for (const std::string& v : validate_config(cfg)) violations.push_back(v);

    if (!violations.empty()) {
        std::string msg = "configuration invalid:";
        for (const std::string& v : violations) msg += "\n  - " + v;
        throw config_error(msg);
    }
    return cfg;
}

std::vector<std::string> validate_config(const ExperimentConfig& cfg) {
    std::vector<std::string> violations;
    if (!cfg.kind) return violations; // kind-free fragments are legal (presets)

    auto require_grid = [&] {
        if (!cfg.x_min || !cfg.x_max || !cfg.n_x || !cfg.k_min || !cfg.k_max || !cfg.n_k) {
            violations.push_back("missing block 'grid' (x_min, x_max, n_x, k_min, "
                                 "k_max, n_k)");
        }
    };
    auto require_potential = [&] {
        if (!cfg.pot_amplitude || !cfg.pot_center || !cfg.pot_width) {
            violations.push_back("missing block 'potential' (amplitude, center, width)");
        }
    };
    auto require_time = [&] {
        if (!cfg.dt || !cfg.t_final) {
            violations.push_back("missing block 'time' (dt, t_final)");
        }
    };
    auto require_eps = [&](size_t at_least) {
        if (cfg.eps_values.size() < at_least) {
            violations.push_back("block 'eps' needs at least " +
                                 std::to_string(at_least) + " value(s)");
        }
    };
    auto require_data = [&](bool g_too) {
        if (!cfg.data_f) violations.push_back("missing block 'data.f'");
        if (g_too && !cfg.data_g) violations.push_back("missing block 'data.g'");
    };
    auto require_study = [&] {
        if (!cfg.study_n_centers || !cfg.study_center_min || !cfg.study_center_max) {
            violations.push_back("missing block 'study' (n_centers, center_min, "
                                 "center_max)");
        } else if (*cfg.study_n_centers < 1 ||
                   !(*cfg.study_center_min <= *cfg.study_center_max)) {
            violations.push_back("block 'study' inconsistent: need n_centers >= 1 and "
                                 "center_min <= center_max");
        }
    };

    require_grid();
    require_potential();
    require_time();

    switch (*cfg.kind) {
        case ExperimentKind::forward_wigner:
            require_data(false);
            require_eps(1);
            break;
        case ExperimentKind::forward_liouville:
            require_data(false);
            break;
        case ExperimentKind::forward_schrodinger:
            if (!cfg.phi) violations.push_back("missing block 'packets.phi'");
            require_eps(1);
            break;
        case ExperimentKind::representative: {
            const std::string family = cfg.rep_family.value_or("");
            if (family == "wigner") {
                require_data(true);
                require_eps(1);
            } else if (family == "liouville") {
                require_data(true);
            } else if (family == "schrodinger") {
                if (!cfg.phi) violations.push_back("missing block 'packets.phi'");
                if (!cfg.psi) violations.push_back("missing block 'packets.psi'");
                require_eps(1);
            } else {
                violations.push_back("representative.family must be wigner, liouville "
                                     "or schrodinger");
            }
            break;
        }
        case ExperimentKind::sweep_epsilon:
            require_data(true);
            require_eps(3);
            break;
        case ExperimentKind::svd_study:
            require_data(true);
            require_eps(1);
            require_study();
            break;
        case ExperimentKind::identity_check:
            if (!cfg.phi) violations.push_back("missing block 'packets.phi'");
            if (!cfg.phi_prime) violations.push_back("missing block 'packets.phi_prime'");
            if (!cfg.psi) violations.push_back("missing block 'packets.psi'");
            if (!cfg.psi_prime) violations.push_back("missing block 'packets.psi_prime'");
            require_eps(1);
            break;
        case ExperimentKind::reconstruct: {
            require_data(true);
            require_study();
            if (!cfg.reconstruct_lambda) {
                violations.push_back("missing key 'reconstruct.lambda'");
            }
            if (!cfg.reconstruct_truth) {
                violations.push_back("missing block 'reconstruct.truth'");
            }
            const std::string family = cfg.reconstruct_family.value_or("liouville");
            if (family == "wigner") {
                require_eps(1);
            } else if (family != "liouville") {
                violations.push_back("reconstruct.family must be wigner or liouville");
            }
            break;
        }
    }
    return violations;
}

std::string print_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) os << key << " = " << format_number(*v) << "\n";
    };
    auto put_int = [&](const char* key, const std::optional<int>& v) {
        if (v) os << key << " = " << *v << "\n";
    };
    auto put_phase_gaussian = [&](const char* block, const std::optional<GaussianSpec>& g) {
        if (!g) return;
        os << block << ".amplitude = " << format_number(g->amplitude) << "\n";
        os << block << ".center_x = " << format_number(g->center_x) << "\n";
        os << block << ".width_x = " << format_number(g->width_x) << "\n";
        if (g->center_k) os << block << ".center_k = " << format_number(*g->center_k) << "\n";
        if (g->width_k) os << block << ".width_k = " << format_number(*g->width_k) << "\n";
    };
    auto put_packet = [&](const char* block, const std::optional<PacketSpec>& p) {
        if (!p) return;
        os << block << ".amplitude = " << format_number(p->amplitude) << "\n";
        os << block << ".center_x = " << format_number(p->center_x) << "\n";
        os << block << ".width_x = " << format_number(p->width_x) << "\n";
        os << block << ".center_k = " << format_number(p->center_k) << "\n";
    };

    if (cfg.kind) os << "experiment.kind = " << kind_name(*cfg.kind) << "\n";
    put("grid.x_min", cfg.x_min);
    put("grid.x_max", cfg.x_max);
    put_int("grid.n_x", cfg.n_x);
    put("grid.k_min", cfg.k_min);
    put("grid.k_max", cfg.k_max);
    put_int("grid.n_k", cfg.n_k);
    put("potential.amplitude", cfg.pot_amplitude);
    put("potential.center", cfg.pot_center);
    put("potential.width", cfg.pot_width);
    put_phase_gaussian("data.f", cfg.data_f);
    put_phase_gaussian("data.g", cfg.data_g);
    put_packet("packets.phi", cfg.phi);
    put_packet("packets.phi_prime", cfg.phi_prime);
    put_packet("packets.psi", cfg.psi);
    put_packet("packets.psi_prime", cfg.psi_prime);
    put("time.dt", cfg.dt);
    put("time.t_final", cfg.t_final);
    if (cfg.snapshot_stride != 1) {
        os << "time.snapshot_stride = " << cfg.snapshot_stride << "\n";
    }
    if (!cfg.eps_literals.empty()) {
        os << "eps.values = ";
        for (size_t i = 0; i < cfg.eps_literals.size(); ++i) {
            if (i) os << ", ";
            os << cfg.eps_literals[i];
        }
        os << "\n";
    }
    put_int("study.n_centers", cfg.study_n_centers);
    put("study.center_min", cfg.study_center_min);
    put("study.center_max", cfg.study_center_max);
    if (cfg.study_angle_ks != std::vector<int>{1, 3, 7, 10}) {
        os << "study.angle_ks = ";
        for (size_t i = 0; i < cfg.study_angle_ks.size(); ++i) {
            if (i) os << ", ";
            os << cfg.study_angle_ks[i];
        }
        os << "\n";
    }
    if (cfg.rep_family) os << "representative.family = " << *cfg.rep_family << "\n";
    put("reconstruct.lambda", cfg.reconstruct_lambda);
    if (cfg.reconstruct_family) {
        os << "reconstruct.family = " << *cfg.reconstruct_family << "\n";
    }
    if (cfg.reconstruct_truth) {
        os << "reconstruct.truth.amplitude = "
           << format_number(cfg.reconstruct_truth->amplitude) << "\n";
        os << "reconstruct.truth.center = "
           << format_number(cfg.reconstruct_truth->center_x) << "\n";
        os << "reconstruct.truth.width = "
           << format_number(cfg.reconstruct_truth->width_x) << "\n";
    }
    if (cfg.output_dir != "out") os << "output.dir = " << cfg.output_dir << "\n";
    if (cfg.output_snapshots) os << "output.snapshots = true\n";
    return os.str();
}

ExperimentConfig merge_config(const ExperimentConfig& base,
                              const ExperimentConfig& overrides) {
    // Later keys win in the parser, so merging is concatenation.
    return parse_config(print_config(base) + print_config(overrides));
}

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig cfg;
    if (name == "paper-5.2") {
        cfg.x_min = 0.0;
        cfg.x_max = 0.5;
        cfg.n_x = 512;
        cfg.k_min = -0.375;
        cfg.k_max = 0.625;
        cfg.n_k = 1024;
        cfg.pot_amplitude = 1.0;
        cfg.pot_center = 0.25;
        cfg.pot_width = 0.125;
        cfg.data_f = GaussianSpec{1.0, 0.25, 0.0625, 0.125, 0.125};
        cfg.data_g = GaussianSpec{1.0, 0.25, 0.0625, 0.125, 0.125};
        cfg.dt = 0.0009765625;
        cfg.t_final = 0.015625;
        cfg.eps_literals = {"pi^-1*2^-4", "pi^-1*2^-5", "pi^-1*2^-6", "pi^-1*2^-7",
                            "pi^-1*2^-8"};
        cfg.study_n_centers = 129;
        cfg.study_center_min = 0.1875;
        cfg.study_center_max = 0.3125;
    } else if (name == "desk") {
        cfg.x_min = 0.0;
        cfg.x_max = 0.5;
        cfg.n_x = 128;
        cfg.k_min = -0.375;
        cfg.k_max = 0.625;
        cfg.n_k = 256;
        cfg.pot_amplitude = 1.0;
        cfg.pot_center = 0.25;
        cfg.pot_width = 0.125;
        cfg.data_f = GaussianSpec{1.0, 0.25, 0.0625, 0.125, 0.125};
        cfg.data_g = GaussianSpec{1.0, 0.25, 0.0625, 0.125, 0.125};
        cfg.dt = 0.00390625;
        cfg.t_final = 0.015625;
        cfg.eps_literals = {"pi^-1*2^-3", "pi^-1*2^-4", "pi^-1*2^-5", "pi^-1*2^-6"};
        cfg.study_n_centers = 9;
        cfg.study_center_min = 0.1875;
        cfg.study_center_max = 0.3125;
        cfg.reconstruct_lambda = 1e-8;
        cfg.reconstruct_truth = GaussianSpec{0.01, 0.26, 0.04, {}, {}};
    } else {
        throw config_error("unknown preset '" + name + "'");
    }
    for (const std::string& lit : cfg.eps_literals) {
        cfg.eps_values.push_back(parse_number(lit));
    }
    return cfg;
}

std::string preset_text(const std::string& name) {
    return print_config(preset_config(name));
}

} // namespace wiglab

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wiglab/cli/config.hpp"
#include "wiglab/cli/experiment.hpp"
#include "wiglab/core/errors.hpp"
#include "wiglab/core/parallel.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot read config file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wiglab - linearized potential inversion for quantum and classical "
                 "phase-space transport"};
    app.require_subcommand(1);

    std::string config_path, preset, out_dir;
    int threads = 0;

    const std::vector<std::string> kinds = {
        "forward-wigner",  "forward-liouville", "forward-schrodinger",
        "representative",  "sweep-epsilon",     "svd-study",
        "identity-check",  "reconstruct",
    };
    for (const std::string& kind : kinds) {
        auto* sub = app.add_subcommand(kind, "run the " + kind + " pipeline");
        sub->add_option("--config", config_path, "experiment config file");
        sub->add_option("--preset", preset, "shipped preset: paper-5.2 or desk");
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        sub->add_option("--threads", threads, "worker threads (0 = all cores)");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string kind = app.get_subcommands().front()->get_name();

    try {
        wiglab::set_thread_count(threads);
        // Later lines override earlier ones, so precedence is
        // preset < config file < command line.
        std::string text;
        if (!preset.empty()) text += wiglab::preset_text(preset);
        if (!config_path.empty()) text += "\n" + read_file(config_path);
        text += "\nexperiment.kind = " + kind + "\n";
        if (!out_dir.empty()) text += "output.dir = " + out_dir + "\n";

        const wiglab::ExperimentConfig config = wiglab::parse_config(text);
        return static_cast<int>(wiglab::run_experiment(config));
    } catch (const wiglab::config_error& e) {
        std::cerr << "error (config): " << e.what() << "\n";
        return static_cast<int>(wiglab::ExitCode::config);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error (io): " << e.what() << "\n";
        return static_cast<int>(wiglab::ExitCode::io);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(wiglab::ExitCode::failure);
    }
}

// a2gsim: tethered-UAV air-to-ground link simulator.
//
// Subcommands sweep LoS probability against elevation angle, received power
// against ground distance (with and without beamforming), and evaluate or
// optimize coverage of a random user field. All tables land in CSV files.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "a2g/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"tethered-UAV air-to-ground link simulator"};
    app.require_subcommand(1);

    a2g::cli::Options opts;
    std::string subcommand;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opts.config_path, "config file path");
        cmd->add_option("--out", opts.out_path, "output CSV path");
        cmd->add_option("--plot", opts.plot_path, "emit a gnuplot script next to the CSV");
        cmd->add_option("--env", opts.envs, "environment name (repeatable)");
        cmd->add_option("--seed", opts.seed, "PRNG seed for user placement");
        cmd->add_flag("--no-beam", opts.no_beam, "disable beamforming");
        cmd->add_option("--m", opts.elements, "array element count");
        cmd->add_option("--phi", opts.phi_deg, "steering angle in degrees");
        cmd->add_option("--kernels", opts.kernels, "kernel backend: auto|scalar|avx2");
        cmd->callback([&subcommand, cmd] { subcommand = cmd->get_name(); });
    };

    add_common(app.add_subcommand("plos-sweep", "LoS probability vs elevation angle"));
    add_common(app.add_subcommand("power-sweep", "received power vs ground distance"));
    add_common(app.add_subcommand("coverage", "per-user link report over a random field"));
    add_common(app.add_subcommand("best-steering", "steering grid search maximizing coverage"));
    add_common(app.add_subcommand("presets", "print the built-in environment presets"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    }

    return a2g::cli::run(subcommand, opts, std::cout, std::cerr);
}

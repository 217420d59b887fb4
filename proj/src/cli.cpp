#include "a2g/cli.hpp"

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "a2g/csv.hpp"
#include "a2g/errors.hpp"
#include "a2g/kernels.hpp"
#include "a2g/scenario.hpp"

namespace a2g::cli {

namespace {

using csv::format_double;

RunConfig effective_config(const Options& opts) {
    RunConfig cfg = opts.config_path.empty() ? RunConfig{} : load_config_file(opts.config_path);
    if (!opts.envs.empty()) {
        cfg.sweep_envs = opts.envs;
        for (const std::string& name : cfg.sweep_envs) {
            resolve_environment(cfg, name);
        }
    }
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.elements) {
        if (*opts.elements == 0) throw ConfigError("--m must be >= 1");
        cfg.array.elements = *opts.elements;
    }
    if (opts.phi_deg) cfg.array.phi_deg = *opts.phi_deg;
    validate(cfg.array);
    if (opts.no_beam) cfg.beam_on_off = false;
    return cfg;
}

std::string resolve_out_path(const Options& opts, const RunConfig& cfg,
                             const std::string& default_name) {
    if (!opts.out_path.empty()) return opts.out_path;
    if (!cfg.output_path.empty()) return cfg.output_path;
    const char* dir = std::getenv("A2GSIM_OUT_DIR");
    if (dir != nullptr && *dir != '\0') {
        return (std::filesystem::path(dir) / default_name).string();
    }
    return default_name;
}

std::vector<Environment> resolve_sweep_envs(const RunConfig& cfg) {
    std::vector<Environment> envs;
    envs.reserve(cfg.sweep_envs.size());
    for (const std::string& name : cfg.sweep_envs) {
        envs.push_back(resolve_environment(cfg, name));
    }
    return envs;
}

// The single environment used by coverage runs: --env (exactly one),
// otherwise the [environment] section.
const Environment& coverage_environment(const RunConfig& cfg, const Options& opts) {
    if (opts.envs.size() > 1) {
        throw ConfigError("coverage runs take exactly one --env");
    }
    if (opts.envs.size() == 1) {
        return resolve_environment(cfg, opts.envs.front());
    }
    return cfg.environment;
}

int run_presets(std::ostream& out) {
    out << "name,a,b,eta_los_db,eta_nlos_db\n";
    for (const Environment& env : environment_presets()) {
        out << env.name << ',' << format_double(env.a) << ',' << format_double(env.b) << ','
            << format_double(env.eta_los_db) << ',' << format_double(env.eta_nlos_db) << '\n';
    }
    return 0;
}

// Plotting stays out of the core: sweeps can emit a small gnuplot script
// that reads the CSV they just wrote.
void write_plot_script(const std::string& plot_path, const std::string& csv_path,
                       const RunConfig& cfg, bool power) {
    std::ostringstream s;
    s << "# gnuplot script generated by a2gsim; reads " << csv_path << "\n"
      << "set datafile separator ','\n"
      << "set key outside\n"
      << "set grid\n";
    if (power) {
        s << "set xlabel 'ground distance [m]'\n"
          << "set ylabel 'received power [dBm]'\n"
          << "plot ";
        bool first = true;
        for (const std::string& env : cfg.sweep_envs) {
            const std::vector<std::pair<int, const char*>> series =
                cfg.beam_on_off
                    ? std::vector<std::pair<int, const char*>>{{4, " no beam"}, {5, " beam"}}
                    : std::vector<std::pair<int, const char*>>{{4, ""}};
            for (const auto& [col, label] : series) {
                if (!first) s << ", \\\n     ";
                s << "'" << csv_path << "' using 1:(strcol(2) eq '" << env << "' ? $" << col
                  << " : 1/0) with linespoints title '" << env << label << "'";
                first = false;
            }
        }
        s << "\n";
    } else {
        s << "set xlabel 'elevation angle [deg]'\n"
          << "set ylabel 'LoS probability'\n"
          << "set yrange [0:1]\n"
          << "plot ";
        bool first = true;
        for (const std::string& env : cfg.sweep_envs) {
            if (!first) s << ", \\\n     ";
            s << "'" << csv_path << "' using 1:(strcol(2) eq '" << env
              << "' ? $3 : 1/0) with linespoints title '" << env << "'";
            first = false;
        }
        s << "\n";
    }
    std::ofstream file(plot_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw DomainError("cannot open plot script file: " + plot_path);
    }
    file << s.str();
}

int run_plos_sweep(const Options& opts, const RunConfig& cfg, std::ostream& out) {
    SweepSpec spec;
    spec.kind = SweepKind::plos_vs_elevation;
    spec.envs = cfg.sweep_envs;
    spec.start = cfg.sweep_start.value_or(0.0);
    spec.stop = cfg.sweep_stop.value_or(90.0);
    spec.step = cfg.sweep_step.value_or(5.0);

    const std::vector<Environment> envs = resolve_sweep_envs(cfg);
    const std::vector<PlosRow> rows = a2g::run_plos_sweep(spec, envs);

    csv::Table table({"theta_deg", "env", "plos"});
    for (const PlosRow& row : rows) {
        table.add_row({format_double(row.theta_deg), row.env, format_double(row.plos)});
    }
    const std::string path = resolve_out_path(opts, cfg, "plos_sweep.csv");
    table.write_file(path);
    out << "wrote " << table.rows() << " rows to " << path << "\n";
    if (!opts.plot_path.empty()) {
        write_plot_script(opts.plot_path, path, cfg, /*power=*/false);
        out << "wrote plot script " << opts.plot_path << "\n";
    }
    return 0;
}

int run_power_sweep(const Options& opts, const RunConfig& cfg, std::ostream& out) {
    SweepSpec spec;
    spec.kind = SweepKind::power_vs_distance;
    spec.envs = cfg.sweep_envs;
    spec.start = cfg.sweep_start.value_or(100.0);
    spec.stop = cfg.sweep_stop.value_or(900.0);
    spec.step = cfg.sweep_step.value_or(100.0);
    spec.fixed_altitude_m = cfg.fixed_altitude_m;
    spec.beam_on_off = cfg.beam_on_off;

    // Without the beam pair the engine runs a unit array, whose gain term
    // is exactly zero, and the beam columns collapse onto the plain ones.
    ArrayConfig array = cfg.array;
    if (!spec.beam_on_off) {
        array.elements = 1;
    }

    const std::vector<Environment> envs = resolve_sweep_envs(cfg);
    const std::vector<PowerRow> rows =
        a2g::run_power_sweep(spec, cfg.link, cfg.pathloss, array, envs);

    csv::Table table(spec.beam_on_off
                         ? std::vector<std::string>{"distance_m", "env", "theta_deg",
                                                    "prx_nobeam_dbm", "prx_beam_dbm",
                                                    "snr_beam_db", "rate_beam_bps"}
                         : std::vector<std::string>{"distance_m", "env", "theta_deg", "prx_dbm",
                                                    "snr_db", "rate_bps"});
    for (const PowerRow& row : rows) {
        if (spec.beam_on_off) {
            table.add_row({format_double(row.distance_m), row.env, format_double(row.theta_deg),
                           format_double(row.prx_nobeam_dbm), format_double(row.prx_beam_dbm),
                           format_double(row.snr_beam_db), format_double(row.rate_beam_bps)});
        } else {
            table.add_row({format_double(row.distance_m), row.env, format_double(row.theta_deg),
                           format_double(row.prx_nobeam_dbm), format_double(row.snr_beam_db),
                           format_double(row.rate_beam_bps)});
        }
    }
    const std::string path = resolve_out_path(opts, cfg, "power_sweep.csv");
    table.write_file(path);
    out << "wrote " << table.rows() << " rows to " << path << "\n";
    if (!opts.plot_path.empty()) {
        write_plot_script(opts.plot_path, path, cfg, /*power=*/true);
        out << "wrote plot script " << opts.plot_path << "\n";
    }
    return 0;
}

UavPose coverage_uav(const RunConfig& cfg) {
    return {cfg.coverage.uav_x_m, cfg.coverage.uav_y_m, cfg.coverage.uav_altitude_m};
}

int run_coverage(const Options& opts, const RunConfig& cfg, std::ostream& out) {
    const Environment& env = coverage_environment(cfg, opts);
    const CoverageEllipse region{cfg.coverage.region_a_m, cfg.coverage.region_b_m};
    const UserField field = place_users(cfg.coverage.users, region, cfg.seed);
    const std::optional<ArrayConfig> beam =
        cfg.beam_on_off ? std::optional<ArrayConfig>(cfg.array) : std::nullopt;

    const CoverageReport report = coverage_report(field, coverage_uav(cfg), cfg.link,
                                                  cfg.pathloss, env, beam,
                                                  cfg.coverage.min_rate_bps);

    csv::Table table({"user", "x_m", "y_m", "distance_m", "theta_deg", "plos", "prx_dbm",
                      "snr_db", "rate_bps", "covered"});
    for (std::size_t i = 0; i < report.per_user.size(); ++i) {
        const LinkResult& r = report.per_user[i];
        table.add_row({std::to_string(i), format_double(field.users[i].x_m),
                       format_double(field.users[i].y_m), format_double(r.distance_m),
                       format_double(r.theta_deg), format_double(r.plos),
                       format_double(r.prx_dbm), format_double(r.snr_db),
                       format_double(r.rate_bps),
                       r.rate_bps >= report.min_rate_bps ? "1" : "0"});
    }
    const std::string path = resolve_out_path(opts, cfg, "coverage.csv");
    table.write_file(path);
    out << "covered " << report.covered_count << "/" << report.total
        << " users at min_rate_bps=" << format_double(report.min_rate_bps) << " in "
        << env.name << "; wrote " << path << "\n";
    return 0;
}

int run_best_steering(const Options& opts, const RunConfig& cfg, std::ostream& out) {
    const Environment& env = coverage_environment(cfg, opts);
    const CoverageEllipse region{cfg.coverage.region_a_m, cfg.coverage.region_b_m};
    const UserField field = place_users(cfg.coverage.users, region, cfg.seed);
    const UavPose uav = coverage_uav(cfg);

    const std::vector<double> phi_grid = sweep_grid(
        cfg.coverage.phi_start_deg, cfg.coverage.phi_stop_deg, cfg.coverage.phi_step_deg);

    csv::Table table({"phi_deg", "covered_count"});
    for (const double phi : phi_grid) {
        ArrayConfig probe = cfg.array;
        probe.phi_deg = phi;
        const CoverageReport report = coverage_report(field, uav, cfg.link, cfg.pathloss, env,
                                                      probe, cfg.coverage.min_rate_bps);
        table.add_row({format_double(phi), std::to_string(report.covered_count)});
    }

    const auto [best_phi, best_report] =
        best_steering(field, uav, cfg.link, cfg.pathloss, env, cfg.array, phi_grid,
                      cfg.coverage.min_rate_bps);

    const std::string path = resolve_out_path(opts, cfg, "best_steering.csv");
    table.write_file(path);
    out << "best phi_deg=" << format_double(best_phi) << " covering "
        << best_report.covered_count << "/" << best_report.total << " users in " << env.name
        << "; wrote " << path << "\n";
    return 0;
}

}  // namespace

int run(const std::string& subcommand, const Options& opts, std::ostream& out,
        std::ostream& err) {
    try {
        if (opts.kernels) {
            kernels::select(*opts.kernels);
        }
        if (subcommand == "presets") {
            return run_presets(out);
        }
        const RunConfig cfg = effective_config(opts);
        if (subcommand == "plos-sweep") return run_plos_sweep(opts, cfg, out);
        if (subcommand == "power-sweep") return run_power_sweep(opts, cfg, out);
        if (subcommand == "coverage") return run_coverage(opts, cfg, out);
        if (subcommand == "best-steering") return run_best_steering(opts, cfg, out);
        throw ConfigError("unknown subcommand '" + subcommand + "'");
    } catch (const ConfigError& e) {
        err << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: runtime: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace a2g::cli

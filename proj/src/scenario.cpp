#include "a2g/scenario.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "a2g/errors.hpp"
#include "a2g/kernels.hpp"

namespace a2g {

const SweepSpec& validate(const SweepSpec& spec) {
    const auto fail = [](const std::string& msg) { throw ConfigError("sweep: " + msg); };
    if (spec.envs.empty()) fail("envs must not be empty");
    if (!(spec.step > 0.0)) fail("step must be > 0");
    if (!(spec.start < spec.stop)) fail("start must be < stop");
    if (spec.kind == SweepKind::plos_vs_elevation) {
        if (spec.start < 0.0 || spec.stop > 90.0) fail("elevation bounds must lie in [0, 90]");
    } else {
        if (!(spec.start > 0.0)) fail("start distance must be > 0");
        if (!(spec.fixed_altitude_m > 0.0)) fail("fixed_altitude_m must be > 0");
    }
    return spec;
}

std::vector<double> sweep_grid(double start, double stop, double step) {
    const auto count =
        static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = start + static_cast<double>(i) * step;
    }
    return grid;
}

std::vector<PlosRow> run_plos_sweep(const SweepSpec& spec, std::span<const Environment> envs) {
    validate(spec);
    if (spec.kind != SweepKind::plos_vs_elevation) {
        throw ConfigError("sweep: kind must be plos_vs_elevation");
    }
    const std::vector<double> grid = sweep_grid(spec.start, spec.stop, spec.step);
    const kernels::Backend& k = kernels::active();

    std::vector<PlosRow> rows;
    rows.reserve(grid.size() * envs.size());
    std::vector<double> plos(grid.size());
    for (const Environment& env : envs) {
        validate(env);
        k.plos(grid.data(), plos.data(), grid.size(), env);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            rows.push_back({env.name, grid[i], plos[i]});
        }
    }
    return rows;
}

std::vector<PowerRow> run_power_sweep(const SweepSpec& spec, const LinkParams& lp,
                                      const PathLossParams& plp, const ArrayConfig& array,
                                      std::span<const Environment> envs) {
    validate(spec);
    if (spec.kind != SweepKind::power_vs_distance) {
        throw ConfigError("sweep: kind must be power_vs_distance");
    }
    validate(lp);
    validate(plp);
    validate(array);

    const std::vector<double> grid = sweep_grid(spec.start, spec.stop, spec.step);
    const std::size_t n = grid.size();
    const kernels::Backend& k = kernels::active();

    // Steering follows each user, so the beam term is the constant boresight
    // gain of the configured model.
    const double m = static_cast<double>(array.elements);
    const double scale = array.gain_model == GainModel::directivity ? m : m * m;
    const double beam_gain_db = 10.0 * std::log10(scale);
    const double base_nobeam = lp.pt_dbm + lp.gt_dbi + lp.gr_dbi + 0.0;
    const double base_beam = lp.pt_dbm + lp.gt_dbi + lp.gr_dbi + beam_gain_db;
    const double noise_dbm = noise_power_dbm(lp);

    const std::vector<double> dy(n, 0.0);
    std::vector<double> dist(n), theta(n), plos(n), loss_db(n), snr_beam(n), rate_beam(n);
    k.slant_elevation(grid.data(), dy.data(), dist.data(), theta.data(), n,
                      spec.fixed_altitude_m);

    std::vector<PowerRow> rows;
    rows.reserve(n * envs.size());
    for (const Environment& env : envs) {
        validate(env);
        k.plos(theta.data(), plos.data(), n, env);
        k.mean_path_loss_db(dist.data(), plos.data(), loss_db.data(), n, plp, env);
        for (std::size_t i = 0; i < n; ++i) {
            snr_beam[i] = (base_beam - loss_db[i]) - noise_dbm;
        }
        k.shannon_rate(snr_beam.data(), rate_beam.data(), n, lp.b_hz);
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back({env.name, grid[i], theta[i], base_nobeam - loss_db[i],
                            base_beam - loss_db[i], snr_beam[i], rate_beam[i]});
        }
    }
    return rows;
}

UserField place_users(std::size_t n, const CoverageEllipse& region, std::uint64_t seed) {
    if (!(region.semi_major_m > 0.0) || !(region.semi_minor_m > 0.0)) {
        throw DomainError("user field region semi-axes must be > 0");
    }
    UserField field;
    field.seed = seed;
    field.region = region;
    field.users.reserve(n);

    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    const double a = region.semi_major_m;
    const double b = region.semi_minor_m;
    while (field.users.size() < n) {
        const double x = a * (2.0 * uniform01() - 1.0);
        const double y = b * (2.0 * uniform01() - 1.0);
        const double u = x / a;
        const double v = y / b;
        if (u * u + v * v <= 1.0) {
            field.users.push_back({x, y, 0.0});
        }
    }
    return field;
}

CoverageReport coverage_report(const UserField& field, const UavPose& uav, const LinkParams& lp,
                               const PathLossParams& plp, const Environment& env,
                               const std::optional<ArrayConfig>& beam, double min_rate_bps) {
    const std::size_t n = field.users.size();
    const kernels::Backend& k = kernels::active();

    std::vector<double> dx(n), dy(n), dist(n), theta(n), plos(n), loss_db(n);
    for (std::size_t i = 0; i < n; ++i) {
        dx[i] = field.users[i].x_m - uav.x_m;
        dy[i] = field.users[i].y_m - uav.y_m;
    }
    k.slant_elevation(dx.data(), dy.data(), dist.data(), theta.data(), n, uav.altitude_m);
    k.plos(theta.data(), plos.data(), n, env);
    k.mean_path_loss_db(dist.data(), plos.data(), loss_db.data(), n, plp, env);

    std::vector<double> af(n, 1.0);
    double beam_scale = 1.0;
    if (beam) {
        k.array_factor(theta.data(), af.data(), n, *beam);
        const double m = static_cast<double>(beam->elements);
        beam_scale = beam->gain_model == GainModel::directivity ? m : m * m;
    }

    std::vector<double> snr(n), rate(n);
    const double base = lp.pt_dbm + lp.gt_dbi + lp.gr_dbi;
    const double noise_dbm = noise_power_dbm(lp);
    std::vector<double> prx(n);
    for (std::size_t i = 0; i < n; ++i) {
        double beam_gain_db = 0.0;
        if (beam) {
            beam_gain_db = af[i] == 0.0
                               ? -std::numeric_limits<double>::infinity()
                               : 10.0 * std::log10(beam_scale * af[i]);
        }
        prx[i] = base + beam_gain_db - loss_db[i];
        snr[i] = prx[i] - noise_dbm;
    }
    k.shannon_rate(snr.data(), rate.data(), n, lp.b_hz);

    CoverageReport report;
    report.total = n;
    report.min_rate_bps = min_rate_bps;
    report.per_user.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.per_user.push_back({prx[i], snr[i], rate[i], plos[i], dist[i], theta[i]});
        if (rate[i] >= min_rate_bps) {
            ++report.covered_count;
        }
    }
    return report;
}

std::pair<double, CoverageReport> best_steering(const UserField& field, const UavPose& uav,
                                                const LinkParams& lp, const PathLossParams& plp,
                                                const Environment& env,
                                                const ArrayConfig& array_base,
                                                std::span<const double> phi_grid_deg,
                                                double min_rate_bps) {
    if (phi_grid_deg.empty()) {
        throw ConfigError("steering grid must not be empty");
    }
    bool have_best = false;
    double best_phi = 0.0;
    CoverageReport best_report;
    for (const double phi : phi_grid_deg) {
        ArrayConfig cfg = array_base;
        cfg.phi_deg = phi;
        validate(cfg);
        CoverageReport report =
            coverage_report(field, uav, lp, plp, env, cfg, min_rate_bps);
        const bool better =
            !have_best || report.covered_count > best_report.covered_count ||
            (report.covered_count == best_report.covered_count &&
             (std::abs(phi) < std::abs(best_phi) ||
              (std::abs(phi) == std::abs(best_phi) && phi < best_phi)));
        if (better) {
            have_best = true;
            best_phi = phi;
            best_report = std::move(report);
        }
    }
    return {best_phi, std::move(best_report)};
}

}  // namespace a2g

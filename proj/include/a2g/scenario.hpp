#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "a2g/beamforming.hpp"
#include "a2g/channel.hpp"
#include "a2g/environment.hpp"
#include "a2g/geometry.hpp"
#include "a2g/linkbudget.hpp"

namespace a2g {

enum class SweepKind { plos_vs_elevation, power_vs_distance };

// Sweep request. For elevation sweeps the grid variable is the elevation
// angle in degrees; for power sweeps it is the ground (planar) distance in
// meters from the UAV nadir, so the elevation angle varies along the sweep
// as it does under a hovering tethered UAV.
struct SweepSpec {
    SweepKind kind = SweepKind::plos_vs_elevation;
    std::vector<std::string> envs;
    double start = 0.0;
    double stop = 90.0;
    double step = 5.0;
    double fixed_altitude_m = 100.0;  // power sweeps
    bool beam_on_off = true;          // power sweeps: emit the with/without pair
};

// Throws ConfigError naming the offending field.
const SweepSpec& validate(const SweepSpec& spec);

// Inclusive grid start, start+step, ..., up to stop.
std::vector<double> sweep_grid(double start, double stop, double step);

struct PlosRow {
    std::string env;
    double theta_deg = 0.0;
    double plos = 0.0;
};

struct PowerRow {
    std::string env;
    double distance_m = 0.0;  // ground distance from nadir
    double theta_deg = 0.0;
    double prx_nobeam_dbm = 0.0;
    double prx_beam_dbm = 0.0;
    double snr_beam_db = 0.0;
    double rate_beam_bps = 0.0;
};

// One row per (environment, grid angle), environment-major in the order
// given, angles ascending. Values equal channel::p_los pointwise.
std::vector<PlosRow> run_plos_sweep(const SweepSpec& spec, std::span<const Environment> envs);

// One row per (environment, ground distance); the beam column steers the
// array to each user's elevation angle (boresight), so under the
// directivity model it exceeds the no-beam column by exactly 10 log10(M).
std::vector<PowerRow> run_power_sweep(const SweepSpec& spec, const LinkParams& lp,
                                      const PathLossParams& plp, const ArrayConfig& array,
                                      std::span<const Environment> envs);

// Reproducible random user field inside an ellipse centered at the origin.
struct UserField {
    std::vector<GroundPoint> users;
    std::uint64_t seed = 0;
    CoverageEllipse region;
};

// Uniform placement by rejection sampling from the bounding rectangle.
// The generator is MT19937-64 seeded with `seed`; uniform doubles are the
// top 53 bits of each draw scaled by 2^-53. Same seed, same field,
// bit-identical.
UserField place_users(std::size_t n, const CoverageEllipse& region, std::uint64_t seed);

struct CoverageReport {
    std::size_t covered_count = 0;
    std::size_t total = 0;
    double min_rate_bps = 0.0;
    std::vector<LinkResult> per_user;
};

// Evaluates every user's link and counts those with rate >= min_rate_bps.
CoverageReport coverage_report(const UserField& field, const UavPose& uav, const LinkParams& lp,
                               const PathLossParams& plp, const Environment& env,
                               const std::optional<ArrayConfig>& beam, double min_rate_bps);

// Exhaustive steering grid search maximizing covered_count. Ties break to
// the smallest |phi|, then the smallest phi. The array's phi_deg is taken
// from the grid; element count and gain model come from array_base.
std::pair<double, CoverageReport> best_steering(const UserField& field, const UavPose& uav,
                                                const LinkParams& lp, const PathLossParams& plp,
                                                const Environment& env,
                                                const ArrayConfig& array_base,
                                                std::span<const double> phi_grid_deg,
                                                double min_rate_bps);

}  // namespace a2g

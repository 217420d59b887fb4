#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "a2g/beamforming.hpp"
#include "a2g/channel.hpp"
#include "a2g/environment.hpp"
#include "a2g/linkbudget.hpp"
#include "a2g/scenario.hpp"

namespace a2g {

// Coverage and steering-search knobs. Defaults: 100 users uniformly over a
// 500 m circular region, 1 Mbps rate threshold, UAV hovering at 100 m over
// the region center, steering grid -90..90 deg in 1 deg steps.
struct CoverageConfig {
    std::size_t users = 100;
    double min_rate_bps = 1e6;
    double region_a_m = 500.0;
    double region_b_m = 500.0;
    double uav_x_m = 0.0;
    double uav_y_m = 0.0;
    double uav_altitude_m = 100.0;
    double phi_start_deg = -90.0;
    double phi_stop_deg = 90.0;
    double phi_step_deg = 1.0;
};

// Parsed and fully validated run configuration. Defaults reproduce the
// standard setup: urban environment, 20 dBm / 10 dBi / 10 dBi radios at
// 2.4 GHz over 10 MHz with NF 5 dB, alpha 2, fspl model, linear averaging,
// 8-element directivity array.
struct RunConfig {
    Environment environment = environment_preset("urban");
    LinkParams link;
    PathLossParams pathloss;
    ArrayConfig array;

    std::vector<std::string> sweep_envs = {"urban", "suburban", "dense-urban",
                                           "highrise-urban"};
    std::optional<double> sweep_start;
    std::optional<double> sweep_stop;
    std::optional<double> sweep_step;
    std::optional<SweepKind> sweep_kind;
    double fixed_altitude_m = 100.0;
    bool beam_on_off = true;

    CoverageConfig coverage;

    std::string output_path;  // empty: per-subcommand default file name
    std::uint64_t seed = 1;

    bool has_custom_environment = false;
};

// Strict parser for the INI-style config document: '#'/';' comments,
// [section] headers, key = value pairs. Unknown sections or keys are fatal
// (with the nearest valid key suggested), as are duplicate keys, malformed
// values and any module-invariant violation. An empty document yields the
// defaults above. pathloss.f_hz mirrors link.f_hz after parsing.
RunConfig parse_config(const std::string& text);

// parse_config applied to a file's contents.
RunConfig load_config_file(const std::string& path);

// Environment lookup for CLI/config names: the custom environment defined
// in the config (if any), otherwise a preset.
const Environment& resolve_environment(const RunConfig& cfg, const std::string& name);

}  // namespace a2g

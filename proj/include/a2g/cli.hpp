#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "a2g/config.hpp"

namespace a2g::cli {

// Command-line overrides; precedence is flags > config file > defaults.
struct Options {
    std::string config_path;
    std::string out_path;
    std::string plot_path;  // sweeps only: also emit a gnuplot script
    std::vector<std::string> envs;
    std::optional<std::uint64_t> seed;
    bool no_beam = false;
    std::optional<unsigned> elements;
    std::optional<double> phi_deg;
    std::optional<std::string> kernels;
};

// Runs one subcommand (plos-sweep | power-sweep | coverage | best-steering |
// presets), writing tables to the resolved output path and summaries to
// `out`. Returns the process exit code: 0 success, 2 config error,
// 3 runtime/domain error; errors are reported as a single line on `err`.
int run(const std::string& subcommand, const Options& opts, std::ostream& out,
        std::ostream& err);

}  // namespace a2g::cli

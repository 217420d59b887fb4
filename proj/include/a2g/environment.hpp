#pragma once

#include <array>
#include <string>
#include <string_view>

namespace a2g {

// Propagation environment: the sigmoid parameters of the LoS-probability
// curve plus the excess losses applied on top of the distance-dependent
// path loss. The built-in presets are used as given at the 2.4 GHz default
// carrier.
struct Environment {
    std::string name;
    double a = 0.0;           // sigmoid offset, dimensionless
    double b = 0.0;           // sigmoid slope, 1/degree
    double eta_los_db = 0.0;  // excess loss on LoS links
    double eta_nlos_db = 0.0; // excess loss on NLoS links
};

// Built-in presets in canonical emission order:
// urban, suburban, dense-urban, highrise-urban.
const std::array<Environment, 4>& environment_presets();

// Preset lookup by name. Throws ConfigError for unknown names, listing the
// valid ones.
const Environment& environment_preset(std::string_view name);

// Checks a > 0, b > 0 and eta_nlos_db >= eta_los_db >= 0, returning the
// value unchanged. Throws ConfigError naming the offending field and value.
const Environment& validate(const Environment& env);

}  // namespace a2g

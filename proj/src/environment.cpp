#include "a2g/environment.hpp"

#include <sstream>

#include "a2g/errors.hpp"

namespace a2g {

const std::array<Environment, 4>& environment_presets() {
    static const std::array<Environment, 4> presets = {{
        {"urban", 9.61, 0.16, 1.0, 20.0},
        {"suburban", 4.88, 0.43, 1.0, 21.0},
        {"dense-urban", 12.08, 0.11, 1.6, 23.0},
        {"highrise-urban", 15.05, 0.08, 2.3, 34.0},
    }};
    return presets;
}

const Environment& environment_preset(std::string_view name) {
    for (const Environment& env : environment_presets()) {
        if (env.name == name) {
            return env;
        }
    }
    std::ostringstream msg;
    msg << "unknown environment '" << name << "'; valid names:";
    for (const Environment& env : environment_presets()) {
        msg << " " << env.name;
    }
    throw ConfigError(msg.str());
}

const Environment& validate(const Environment& env) {
    const auto fail = [&](const std::string& what, double value) {
        std::ostringstream msg;
        msg << "environment '" << env.name << "': " << what << " (got " << value << ")";
        throw ConfigError(msg.str());
    };
    if (!(env.a > 0.0)) fail("a must be > 0", env.a);
    if (!(env.b > 0.0)) fail("b must be > 0", env.b);
    if (!(env.eta_los_db >= 0.0)) fail("eta_los_db must be >= 0", env.eta_los_db);
    if (!(env.eta_nlos_db >= env.eta_los_db)) fail("eta_nlos_db < eta_los_db", env.eta_nlos_db);
    return env;
}

}  // namespace a2g

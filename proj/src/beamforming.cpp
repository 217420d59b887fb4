#include "a2g/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "a2g/errors.hpp"

namespace a2g {

namespace {

constexpr double kSingularWindow = 1e-12;

double check_angle(double angle_deg, const char* what) {
    if (!(angle_deg >= -90.0 && angle_deg <= 90.0)) {
        std::ostringstream msg;
        msg << what << " out of range [-90, 90]: " << angle_deg;
        throw DomainError(msg.str());
    }
    return angle_deg;
}

double sin_deg(double angle_deg) {
    return std::sin(angle_deg * std::numbers::pi / 180.0);
}

}  // namespace

const ArrayConfig& validate(const ArrayConfig& cfg) {
    if (cfg.elements < 1) {
        throw ConfigError("array element count m must be >= 1");
    }
    if (!(cfg.phi_deg >= -90.0 && cfg.phi_deg <= 90.0)) {
        std::ostringstream msg;
        msg << "steering angle phi_deg out of range [-90, 90]: " << cfg.phi_deg;
        throw ConfigError(msg.str());
    }
    return cfg;
}

double array_factor(double theta_deg, const ArrayConfig& cfg) {
    check_angle(theta_deg, "observation angle");
    check_angle(cfg.phi_deg, "steering angle");
    const double m = static_cast<double>(cfg.elements);
    const double delta = sin_deg(theta_deg) - sin_deg(cfg.phi_deg);

    // Main/grating lobe: delta at an even integer makes both sines vanish
    // with limit 1. Within [-2, 2] that is delta in {-2, 0, 2}.
    const double lobe = 2.0 * std::round(delta / 2.0);
    if (std::abs(delta - lobe) < kSingularWindow) {
        return 1.0;
    }
    // Pattern null: M*delta/2 integral while delta/2 is not. A k that is a
    // multiple of M belongs to a lobe, not a null.
    const double k = std::round(m * delta / 2.0);
    if (k != 0.0 && std::fmod(k, m) != 0.0 &&
        std::abs(m * delta / 2.0 - k) < kSingularWindow) {
        return 0.0;
    }

    const double u = 0.5 * std::numbers::pi * delta;
    const double ratio = std::sin(m * u) / (m * std::sin(u));
    return std::clamp(ratio * ratio, 0.0, 1.0);
}

double array_factor_oracle(double theta_deg, const ArrayConfig& cfg) {
    check_angle(theta_deg, "observation angle");
    check_angle(cfg.phi_deg, "steering angle");
    // Element k of the steering vector carries phase k*pi*sin(angle) for
    // half-wavelength spacing; the array gain is |a(theta)^H w(phi)|^2 / M^2.
    const double phase_step =
        std::numbers::pi * (sin_deg(theta_deg) - sin_deg(cfg.phi_deg));
    std::complex<double> acc(0.0, 0.0);
    for (unsigned k = 0; k < cfg.elements; ++k) {
        acc += std::polar(1.0, phase_step * static_cast<double>(k));
    }
    const double m = static_cast<double>(cfg.elements);
    return std::norm(acc) / (m * m);
}

double beamforming_gain_db(double theta_deg, const ArrayConfig& cfg) {
    const double af = array_factor(theta_deg, cfg);
    if (af == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    const double m = static_cast<double>(cfg.elements);
    const double scale = cfg.gain_model == GainModel::directivity ? m : m * m;
    return 10.0 * std::log10(scale * af);
}

}  // namespace a2g

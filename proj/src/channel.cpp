#include "a2g/channel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "a2g/errors.hpp"

namespace a2g {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

double distance_gain(double distance_m, const PathLossParams& p) {
    if (p.model == PathLossModel::exponent) {
        return std::pow(distance_m, -p.alpha);
    }
    const double amp = kSpeedOfLight / (4.0 * std::numbers::pi * p.f_hz * distance_m);
    return amp * amp;
}

double check_distance(double distance_m) {
    if (!(distance_m > 0.0)) {
        std::ostringstream msg;
        msg << "nonpositive distance: " << distance_m;
        throw DomainError(msg.str());
    }
    return distance_m;
}

}  // namespace

const PathLossParams& validate(const PathLossParams& p) {
    if (!(p.alpha >= 1.0)) {
        std::ostringstream msg;
        msg << "alpha must be >= 1 (got " << p.alpha << ")";
        throw ConfigError(msg.str());
    }
    if (!(p.f_hz > 0.0)) {
        std::ostringstream msg;
        msg << "f_hz must be > 0 (got " << p.f_hz << ")";
        throw ConfigError(msg.str());
    }
    return p;
}

double p_los(double theta_deg, const Environment& env) {
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0)) {
        std::ostringstream msg;
        msg << "elevation angle out of range [0, 90]: " << theta_deg;
        throw DomainError(msg.str());
    }
    return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_deg - env.a)));
}

double p_nlos(double theta_deg, const Environment& env) {
    return 1.0 - p_los(theta_deg, env);
}

double gain_los(double distance_m, const PathLossParams& p, const Environment& env) {
    check_distance(distance_m);
    return distance_gain(distance_m, p) * std::pow(10.0, -env.eta_los_db / 10.0);
}

double gain_nlos(double distance_m, const PathLossParams& p, const Environment& env) {
    check_distance(distance_m);
    return distance_gain(distance_m, p) * std::pow(10.0, -env.eta_nlos_db / 10.0);
}

double mean_gain_at(double distance_m, double plos, const PathLossParams& p,
                    const Environment& env) {
    const double g_los = gain_los(distance_m, p, env);
    const double g_nlos = gain_nlos(distance_m, p, env);
    if (p.averaging == GainAveraging::linear) {
        return plos * g_los + (1.0 - plos) * g_nlos;
    }
    const double db = plos * 10.0 * std::log10(g_los) + (1.0 - plos) * 10.0 * std::log10(g_nlos);
    return std::pow(10.0, db / 10.0);
}

double mean_gain(const UavPose& uav, const GroundPoint& user, const PathLossParams& p,
                 const Environment& env) {
    const double d = slant_distance(uav, user);
    const double plos = p_los(elevation_angle_deg(uav, user), env);
    return mean_gain_at(d, plos, p, env);
}

double mean_path_loss_db(const UavPose& uav, const GroundPoint& user,
                         const PathLossParams& p, const Environment& env) {
    return -10.0 * std::log10(mean_gain(uav, user, p, env));
}

}  // namespace a2g

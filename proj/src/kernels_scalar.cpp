#include <cmath>

#include "a2g/geometry.hpp"
#include "a2g/kernels.hpp"
#include "a2g/linkbudget.hpp"

namespace a2g::kernels {

namespace {

void plos_scalar(const double* theta_deg, double* out, std::size_t n, const Environment& env) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = p_los(theta_deg[i], env);
    }
}

void slant_elevation_scalar(const double* dx_m, const double* dy_m, double* dist_m,
                            double* theta_deg, std::size_t n, double altitude_m) {
    const UavPose uav{0.0, 0.0, altitude_m};
    for (std::size_t i = 0; i < n; ++i) {
        const GroundPoint user{dx_m[i], dy_m[i], 0.0};
        dist_m[i] = slant_distance(uav, user);
        theta_deg[i] = elevation_angle_deg(uav, user);
    }
}

void mean_path_loss_db_scalar(const double* dist_m, const double* plos, double* out_db,
                              std::size_t n, const PathLossParams& p, const Environment& env) {
    for (std::size_t i = 0; i < n; ++i) {
        out_db[i] = -10.0 * std::log10(mean_gain_at(dist_m[i], plos[i], p, env));
    }
}

void array_factor_scalar(const double* theta_deg, double* out, std::size_t n,
                         const ArrayConfig& cfg) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = array_factor(theta_deg[i], cfg);
    }
}

void shannon_rate_scalar(const double* snr_db, double* out_bps, std::size_t n,
                         double bandwidth_hz) {
    for (std::size_t i = 0; i < n; ++i) {
        out_bps[i] = shannon_rate_bps(snr_db[i], bandwidth_hz);
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",
        plos_scalar,
        slant_elevation_scalar,
        mean_path_loss_db_scalar,
        array_factor_scalar,
        shannon_rate_scalar,
    };
    return backend;
}

}  // namespace a2g::kernels

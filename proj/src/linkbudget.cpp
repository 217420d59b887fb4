#include "a2g/linkbudget.hpp"

#include <cmath>
#include <sstream>

#include "a2g/errors.hpp"

namespace a2g {

const LinkParams& validate(const LinkParams& lp) {
    const auto fail = [](const char* what, double value) {
        std::ostringstream msg;
        msg << what << " (got " << value << ")";
        throw ConfigError(msg.str());
    };
    if (!(lp.f_hz > 0.0)) fail("f_hz must be > 0", lp.f_hz);
    if (!(lp.b_hz > 0.0)) fail("b_hz must be > 0", lp.b_hz);
    if (!(lp.nf_db >= 0.0)) fail("nf_db must be >= 0", lp.nf_db);
    return lp;
}

double noise_power_dbm(const LinkParams& lp) {
    return -174.0 + 10.0 * std::log10(lp.b_hz) + lp.nf_db;
}

double received_power_dbm(const UavPose& uav, const GroundPoint& user, const LinkParams& lp,
                          const PathLossParams& plp, const Environment& env,
                          const std::optional<ArrayConfig>& beam) {
    double beam_gain_db = 0.0;
    if (beam) {
        beam_gain_db = beamforming_gain_db(elevation_angle_deg(uav, user), *beam);
    }
    return lp.pt_dbm + lp.gt_dbi + lp.gr_dbi + beam_gain_db -
           mean_path_loss_db(uav, user, plp, env);
}

double snr_db(double prx_dbm, const LinkParams& lp) {
    return prx_dbm - noise_power_dbm(lp);
}

double shannon_rate_bps(double snr_db, double bandwidth_hz) {
    // 10^(-inf/10) = 0, so a null marker falls out as rate 0.
    return bandwidth_hz * std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double rate_bps(double snr_db, const LinkParams& lp) {
    return shannon_rate_bps(snr_db, lp.b_hz);
}

LinkResult evaluate_link(const UavPose& uav, const GroundPoint& user, const LinkParams& lp,
                         const PathLossParams& plp, const Environment& env,
                         const std::optional<ArrayConfig>& beam) {
    LinkResult r;
    r.distance_m = slant_distance(uav, user);
    r.theta_deg = elevation_angle_deg(uav, user);
    r.plos = p_los(r.theta_deg, env);
    r.prx_dbm = received_power_dbm(uav, user, lp, plp, env, beam);
    r.snr_db = snr_db(r.prx_dbm, lp);
    r.rate_bps = rate_bps(r.snr_db, lp);
    return r;
}

}  // namespace a2g

#pragma once

#include <optional>

#include "a2g/beamforming.hpp"
#include "a2g/channel.hpp"
#include "a2g/environment.hpp"
#include "a2g/geometry.hpp"

namespace a2g {

// Radio parameters of the downlink budget.
struct LinkParams {
    double pt_dbm = 20.0;  // UAV transmit power
    double gt_dbi = 10.0;  // transmit antenna gain
    double gr_dbi = 10.0;  // receive antenna gain
    double f_hz = 2.4e9;   // carrier frequency
    double b_hz = 10e6;    // bandwidth
    double nf_db = 5.0;    // receiver noise figure
};

// Throws ConfigError unless f_hz > 0, b_hz > 0 and nf_db >= 0.
const LinkParams& validate(const LinkParams& lp);

// Per-user link evaluation record.
struct LinkResult {
    double prx_dbm = 0.0;   // -inf when the user sits in an exact pattern null
    double snr_db = 0.0;
    double rate_bps = 0.0;
    double plos = 0.0;
    double distance_m = 0.0;
    double theta_deg = 0.0;
};

// Thermal noise floor -174 dBm/Hz + 10 log10(B) + NF.
double noise_power_dbm(const LinkParams& lp);

// pt + gt + gr + beam gain (at the user's elevation angle, when a beam is
// configured) - mean path loss. A user in an exact pattern null yields
// -infinity, the null marker.
double received_power_dbm(const UavPose& uav, const GroundPoint& user, const LinkParams& lp,
                          const PathLossParams& plp, const Environment& env,
                          const std::optional<ArrayConfig>& beam = std::nullopt);

double snr_db(double prx_dbm, const LinkParams& lp);

// Shannon rate B log2(1 + snr); the -inf null marker maps to rate 0.
double shannon_rate_bps(double snr_db, double bandwidth_hz);
double rate_bps(double snr_db, const LinkParams& lp);

// Full per-user record: geometry, LoS probability, power, SNR and rate.
LinkResult evaluate_link(const UavPose& uav, const GroundPoint& user, const LinkParams& lp,
                         const PathLossParams& plp, const Environment& env,
                         const std::optional<ArrayConfig>& beam = std::nullopt);

}  // namespace a2g

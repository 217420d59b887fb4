#pragma once

#include "a2g/environment.hpp"
#include "a2g/geometry.hpp"

namespace a2g {

// Distance term of the channel gain.
//   exponent: gain = d^(-alpha), unit reference gain at 1 m.
//   fspl:     gain = (c / (4 pi f d))^2, frequency-scaled free space.
enum class PathLossModel { exponent, fspl };

// How the LoS/NLoS branches are combined into the average gain.
//   linear: probability-weighted mean of the linear gains.
//   db:     gain whose dB value is the probability-weighted mean of the
//           branch dB values.
enum class GainAveraging { linear, db };

struct PathLossParams {
    double alpha = 2.0;
    PathLossModel model = PathLossModel::fspl;
    GainAveraging averaging = GainAveraging::linear;
    double f_hz = 2.4e9;  // carrier for the fspl model, mirrored from the link section
};

// Throws ConfigError unless alpha >= 1 and f_hz > 0.
const PathLossParams& validate(const PathLossParams& p);

// LoS probability 1 / (1 + a exp(-b (theta - a))).
// theta_deg must lie in [0, 90]; out-of-range angles indicate upstream
// geometry bugs and are rejected, not clamped.
double p_los(double theta_deg, const Environment& env);

// Complement 1 - p_los.
double p_nlos(double theta_deg, const Environment& env);

// Linear channel gain of the LoS branch at distance d. Throws DomainError
// for d <= 0.
double gain_los(double distance_m, const PathLossParams& p, const Environment& env);

// NLoS branch: same distance term with the NLoS excess loss.
double gain_nlos(double distance_m, const PathLossParams& p, const Environment& env);

// Probability-averaged gain with plos supplied by the caller. Shared by
// mean_gain() and the batch kernels so both follow the same arithmetic.
double mean_gain_at(double distance_m, double plos, const PathLossParams& p,
                    const Environment& env);

// Average gain at the link geometry: branches evaluated at the slant
// distance, weighted by p_los at the user's elevation angle.
double mean_gain(const UavPose& uav, const GroundPoint& user, const PathLossParams& p,
                 const Environment& env);

// -10 log10(mean_gain).
double mean_path_loss_db(const UavPose& uav, const GroundPoint& user,
                         const PathLossParams& p, const Environment& env);

}  // namespace a2g

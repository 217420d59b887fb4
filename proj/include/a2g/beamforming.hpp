#pragma once

namespace a2g {

// Power scale applied on top of the normalized array factor.
//   directivity: boresight gain M, total radiated power conserved.
//   coherent:    boresight gain M^2, per-element-power coherent combining.
enum class GainModel { directivity, coherent };

// Half-wavelength-spaced uniform linear array. Spacing is fixed by the
// array-factor form and is not configurable.
struct ArrayConfig {
    unsigned elements = 8;   // M
    double phi_deg = 0.0;    // steering angle in [-90, 90]
    GainModel gain_model = GainModel::directivity;
};

// Throws ConfigError unless elements >= 1 and |phi_deg| <= 90.
const ArrayConfig& validate(const ArrayConfig& cfg);

// Normalized power pattern |sin(M u) / (M sin u)|^2 with
// u = (pi/2)(sin theta - sin phi), always in [0, 1].
//
// Two windows resolve the removable singularities of the closed form:
// when sin(theta) - sin(phi) is within 1e-12 of an even integer (main or
// grating lobe) the analytic limit 1 is returned exactly, and when
// M*(sin theta - sin phi)/2 is within 1e-12 of a nonzero integer (pattern
// null) exactly 0 is returned. theta_deg must lie in [-90, 90].
double array_factor(double theta_deg, const ArrayConfig& cfg);

// Same quantity via the explicit M-term complex inner product of steering
// and weight vectors with half-wavelength phase increments, normalized by
// M^2. Validates the closed form; kept deliberately independent of it.
double array_factor_oracle(double theta_deg, const ArrayConfig& cfg);

// Beam power gain in dB under the configured gain model. An exact pattern
// null is reported as -infinity rather than a finite dB value.
double beamforming_gain_db(double theta_deg, const ArrayConfig& cfg);

}  // namespace a2g

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "a2g/errors.hpp"
#include "a2g/linkbudget.hpp"

using namespace a2g;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 50-digit references (tests/make_reference_values.py)
constexpr double kPrxFspl1000 = -60.052008056115494;
constexpr double kSnrFspl1000 = 38.947991943884506;
constexpr double kRateAtSnr3895 = 1.2939093645546337e8;
constexpr double kNoise20MHz = -95.989700043360188;
constexpr double kBeamDelta8 = 9.0308998699194359;

// Excess losses zeroed so both branches coincide and the LoS weighting
// cannot matter; geometry picked so the slant distance is exactly 1000 m.
const Environment kLossless{"lossless", 9.61, 0.16, 0.0, 0.0};
const UavPose kUav{0.0, 0.0, 600.0};
const GroundPoint kUser{800.0, 0.0, 0.0};

PathLossParams fspl24() {
    PathLossParams p;
    p.model = PathLossModel::fspl;
    p.f_hz = 2.4e9;
    return p;
}

}  // namespace

TEST_CASE("noise floor composition") {
    CHECK(noise_power_dbm(LinkParams{}) == -99.0);
    CHECK(noise_power_dbm({20.0, 10.0, 10.0, 2.4e9, 1.0, 0.0}) == -174.0);
    CHECK(std::abs(noise_power_dbm({20.0, 10.0, 10.0, 2.4e9, 20e6, 5.0}) - kNoise20MHz) <
          1e-9);
}

TEST_CASE("received power at 1 km, 2.4 GHz, published radio parameters") {
    CHECK(slant_distance(kUav, kUser) == 1000.0);
    const double prx = received_power_dbm(kUav, kUser, LinkParams{}, fspl24(), kLossless);
    CHECK(std::abs(prx - kPrxFspl1000) < 1e-9);
    CHECK(std::abs(snr_db(prx, LinkParams{}) - kSnrFspl1000) < 1e-9);
}

TEST_CASE("a boresight directivity beam adds exactly 10 log10 M") {
    const double theta = elevation_angle_deg(kUav, kUser);
    const ArrayConfig beam{8, theta, GainModel::directivity};
    const double with_beam =
        received_power_dbm(kUav, kUser, LinkParams{}, fspl24(), kLossless, beam);
    const double without =
        received_power_dbm(kUav, kUser, LinkParams{}, fspl24(), kLossless);
    CHECK(std::abs((with_beam - without) - kBeamDelta8) < 1e-12);
}

TEST_CASE("no beam and a unit array are indistinguishable") {
    for (const double phi : {-45.0, 0.0, 30.0}) {
        const ArrayConfig unit{1, phi, GainModel::directivity};
        CHECK(received_power_dbm(kUav, kUser, LinkParams{}, fspl24(), kLossless, unit) ==
              received_power_dbm(kUav, kUser, LinkParams{}, fspl24(), kLossless));
    }
}

TEST_CASE("Shannon rate composition") {
    CHECK(std::abs(rate_bps(38.95, LinkParams{}) - kRateAtSnr3895) < 1.0);
    CHECK(rate_bps(0.0, LinkParams{}) == 10e6);  // log2(2) = 1
    CHECK(rate_bps(-kInf, LinkParams{}) == 0.0);
    CHECK(shannon_rate_bps(0.0, 20e6) == 20e6);

    double prev = 0.0;
    for (double snr = -40.0; snr <= 60.0; snr += 0.5) {
        const double r = rate_bps(snr, LinkParams{});
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("a user in an exact pattern null gets the null marker and zero rate") {
    // sin(theta) = 1/4 is the first null of an 8-element broadside array
    const double offset = 100.0 * std::sqrt(15.0);  // h=100 -> slant 400, sin = 1/4
    const UavPose uav{0.0, 0.0, 100.0};
    const GroundPoint user{offset, 0.0, 0.0};
    const ArrayConfig beam{8, 0.0, GainModel::directivity};

    const LinkResult r = evaluate_link(uav, user, LinkParams{}, fspl24(), kLossless, beam);
    CHECK(r.prx_dbm == -kInf);
    CHECK(r.snr_db == -kInf);
    CHECK(r.rate_bps == 0.0);
}

TEST_CASE("evaluate_link mirrors the piecewise composition") {
    const Environment env{"urban", 9.61, 0.16, 1.0, 20.0};
    const UavPose uav{-25.0, 40.0, 120.0};
    const GroundPoint user{300.0, -80.0, 0.0};
    const LinkParams lp{};
    const ArrayConfig beam{8, 10.0, GainModel::directivity};

    const LinkResult r = evaluate_link(uav, user, lp, fspl24(), env, beam);
    CHECK(r.distance_m == slant_distance(uav, user));
    CHECK(r.theta_deg == elevation_angle_deg(uav, user));
    CHECK(r.plos == p_los(r.theta_deg, env));
    CHECK(r.prx_dbm == received_power_dbm(uav, user, lp, fspl24(), env, beam));
    CHECK(r.snr_db == snr_db(r.prx_dbm, lp));
    CHECK(r.rate_bps == rate_bps(r.snr_db, lp));
    CHECK(r.plos > 0.0);
    CHECK(r.plos < 1.0);
    CHECK(r.rate_bps >= 0.0);
}

TEST_CASE("link params validation") {
    LinkParams lp;
    lp.b_hz = 0.0;
    CHECK_THROWS_AS(validate(lp), ConfigError);
    lp = LinkParams{};
    lp.f_hz = -1.0;
    CHECK_THROWS_AS(validate(lp), ConfigError);
    lp = LinkParams{};
    lp.nf_db = -0.1;
    CHECK_THROWS_AS(validate(lp), ConfigError);
    CHECK_NOTHROW(validate(LinkParams{}));
}

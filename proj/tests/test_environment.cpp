#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "a2g/environment.hpp"
#include "a2g/errors.hpp"

using namespace a2g;

namespace {

template <typename E, typename Fn>
std::string message_of(Fn&& fn) {
    try {
        fn();
    } catch (const E& e) {
        return e.what();
    }
    FAIL("expected exception was not thrown");
    return {};
}

}  // namespace

TEST_CASE("presets carry the published values") {
    const Environment& urban = environment_preset("urban");
    CHECK(urban.a == 9.61);
    CHECK(urban.b == 0.16);
    CHECK(urban.eta_los_db == 1.0);
    CHECK(urban.eta_nlos_db == 20.0);

    const Environment& suburban = environment_preset("suburban");
    CHECK(suburban.a == 4.88);
    CHECK(suburban.b == 0.43);
    CHECK(suburban.eta_los_db == 1.0);
    CHECK(suburban.eta_nlos_db == 21.0);

    const Environment& dense = environment_preset("dense-urban");
    CHECK(dense.a == 12.08);
    CHECK(dense.b == 0.11);
    CHECK(dense.eta_los_db == 1.6);
    CHECK(dense.eta_nlos_db == 23.0);

    const Environment& highrise = environment_preset("highrise-urban");
    CHECK(highrise.a == 15.05);
    CHECK(highrise.b == 0.08);
    CHECK(highrise.eta_los_db == 2.3);
    CHECK(highrise.eta_nlos_db == 34.0);
}

TEST_CASE("presets are stable constants") {
    // Same object and same bits on every lookup.
    CHECK(&environment_preset("urban") == &environment_preset("urban"));
    CHECK(environment_presets().size() == 4);
    CHECK(environment_presets()[0].name == "urban");
    CHECK(environment_presets()[1].name == "suburban");
    CHECK(environment_presets()[2].name == "dense-urban");
    CHECK(environment_presets()[3].name == "highrise-urban");
}

TEST_CASE("all presets pass validation unchanged") {
    for (const Environment& env : environment_presets()) {
        const Environment& out = validate(env);
        CHECK(&out == &env);
    }
}

TEST_CASE("unknown preset name lists the valid ones") {
    const std::string msg =
        message_of<ConfigError>([] { environment_preset("metropolis"); });
    CHECK(msg.find("unknown environment") != std::string::npos);
    CHECK(msg.find("metropolis") != std::string::npos);
    CHECK(msg.find("urban") != std::string::npos);
    CHECK(msg.find("suburban") != std::string::npos);
    CHECK(msg.find("dense-urban") != std::string::npos);
    CHECK(msg.find("highrise-urban") != std::string::npos);
}

TEST_CASE("validation rejects each broken invariant with the field name") {
    Environment env = environment_preset("urban");

    env.b = 0.0;
    CHECK(message_of<ConfigError>([&] { validate(env); }).find("b must be > 0") !=
          std::string::npos);

    env = environment_preset("urban");
    env.a = -1.0;
    CHECK(message_of<ConfigError>([&] { validate(env); }).find("a must be > 0") !=
          std::string::npos);

    env = environment_preset("urban");
    env.eta_los_db = -0.5;
    CHECK(message_of<ConfigError>([&] { validate(env); }).find("eta_los_db must be >= 0") !=
          std::string::npos);

    env = environment_preset("urban");
    env.eta_los_db = 1.0;
    env.eta_nlos_db = 0.5;
    CHECK(message_of<ConfigError>([&] { validate(env); }).find("eta_nlos_db < eta_los_db") !=
          std::string::npos);
}

TEST_CASE("zero excess losses are a valid environment") {
    Environment env{"lossless", 1.0, 1.0, 0.0, 0.0};
    CHECK_NOTHROW(validate(env));
}

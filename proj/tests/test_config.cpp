#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "a2g/config.hpp"
#include "a2g/errors.hpp"

using namespace a2g;

namespace {

template <typename Fn>
std::string config_error_of(Fn&& fn) {
    try {
        fn();
    } catch (const ConfigError& e) {
        return e.what();
    }
    FAIL("expected ConfigError was not thrown");
    return {};
}

}  // namespace

TEST_CASE("empty document yields the documented defaults") {
    const RunConfig cfg = parse_config("");
    CHECK(cfg.environment.name == "urban");
    CHECK(cfg.environment.a == 9.61);
    CHECK(cfg.link.pt_dbm == 20.0);
    CHECK(cfg.link.gt_dbi == 10.0);
    CHECK(cfg.link.gr_dbi == 10.0);
    CHECK(cfg.link.f_hz == 2.4e9);
    CHECK(cfg.link.b_hz == 10e6);
    CHECK(cfg.link.nf_db == 5.0);
    CHECK(cfg.pathloss.alpha == 2.0);
    CHECK(cfg.pathloss.model == PathLossModel::fspl);
    CHECK(cfg.pathloss.averaging == GainAveraging::linear);
    CHECK(cfg.pathloss.f_hz == 2.4e9);
    CHECK(cfg.array.elements == 8);
    CHECK(cfg.array.phi_deg == 0.0);
    CHECK(cfg.array.gain_model == GainModel::directivity);
    REQUIRE(cfg.sweep_envs.size() == 4);
    CHECK(cfg.sweep_envs[0] == "urban");
    CHECK(cfg.sweep_envs[3] == "highrise-urban");
    CHECK_FALSE(cfg.sweep_start.has_value());
    CHECK(cfg.seed == 1);
    CHECK(cfg.coverage.users == 100);
    CHECK(cfg.coverage.min_rate_bps == 1e6);
    CHECK(cfg.coverage.phi_step_deg == 1.0);
    CHECK(cfg.output_path.empty());
}

TEST_CASE("comments, blank lines and whitespace are tolerated") {
    const RunConfig cfg = parse_config(
        "# leading comment\n"
        "\n"
        "seed = 77\n"
        "; another comment style\n"
        "[link]\n"
        "  pt_dbm   =   23.5  \n");
    CHECK(cfg.seed == 77);
    CHECK(cfg.link.pt_dbm == 23.5);
}

TEST_CASE("unknown keys are fatal and suggest the nearest valid key") {
    const std::string msg = config_error_of([] {
        parse_config("[link]\nbandwith = 5e6\n");
    });
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("unknown key 'bandwith'") != std::string::npos);
    CHECK(msg.find("nearest valid key") != std::string::npos);

    const std::string seed_msg = config_error_of([] { parse_config("seeed = 3\n"); });
    CHECK(seed_msg.find("'seed'") != std::string::npos);
}

TEST_CASE("unknown sections and malformed lines carry line numbers") {
    CHECK(config_error_of([] { parse_config("[lnk]\n"); }).find("line 1") !=
          std::string::npos);
    CHECK(config_error_of([] {
              parse_config("[link]\npt_dbm\n");
          }).find("line 2") != std::string::npos);
    CHECK(config_error_of([] { parse_config("[link"); }).find("unterminated") !=
          std::string::npos);
    CHECK(config_error_of([] { parse_config("[link]\npt_dbm =\n"); }).find("empty value") !=
          std::string::npos);
}

TEST_CASE("duplicate keys are rejected") {
    const std::string msg = config_error_of([] {
        parse_config("[link]\npt_dbm = 20\npt_dbm = 21\n");
    });
    CHECK(msg.find("duplicate key 'pt_dbm'") != std::string::npos);
}

TEST_CASE("values are type-checked with messages naming the key") {
    CHECK(config_error_of([] { parse_config("[link]\nb_hz = abc\n"); })
              .find("not a number") != std::string::npos);
    CHECK(config_error_of([] { parse_config("seed = -4\n"); })
              .find("non-negative integer") != std::string::npos);
    CHECK(config_error_of([] { parse_config("[sweep]\nbeam_on_off = maybe\n"); })
              .find("expected true or false") != std::string::npos);
}

TEST_CASE("module invariants are enforced after parsing") {
    CHECK(config_error_of([] { parse_config("[link]\nb_hz = -1\n"); })
              .find("b_hz must be > 0") != std::string::npos);
    CHECK(config_error_of([] { parse_config("[pathloss]\nalpha = 0.3\n"); })
              .find("alpha must be >= 1") != std::string::npos);
    CHECK_THROWS_AS(parse_config("[array]\nm = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[coverage]\nregion_a_m = -5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[coverage]\nphi_start_deg = 50\nphi_stop_deg = 40\n"),
                    ConfigError);
}

TEST_CASE("enums accept only the documented spellings") {
    CHECK(parse_config("[pathloss]\nmodel = exponent\n").pathloss.model ==
          PathLossModel::exponent);
    CHECK(parse_config("[pathloss]\naveraging = db\n").pathloss.averaging ==
          GainAveraging::db);
    CHECK(parse_config("[array]\ngain_model = coherent\n").array.gain_model ==
          GainModel::coherent);
    const std::string msg = config_error_of([] {
        parse_config("[pathloss]\nmodel = freespace\n");
    });
    CHECK(msg.find("invalid value 'freespace'") != std::string::npos);
    CHECK(msg.find("exponent") != std::string::npos);
    CHECK(msg.find("fspl") != std::string::npos);
}

TEST_CASE("preset selection by name") {
    const RunConfig cfg = parse_config("[environment]\nname = highrise-urban\n");
    CHECK(cfg.environment.name == "highrise-urban");
    CHECK(cfg.environment.a == 15.05);
    CHECK_FALSE(cfg.has_custom_environment);
    CHECK_THROWS_AS(parse_config("[environment]\nname = nowhere\n"), ConfigError);
}

TEST_CASE("custom environments demand all five fields") {
    const RunConfig cfg = parse_config(
        "[environment]\n"
        "name = campus\n"
        "a = 5.5\n"
        "b = 0.3\n"
        "eta_los_db = 0.8\n"
        "eta_nlos_db = 15\n");
    CHECK(cfg.has_custom_environment);
    CHECK(cfg.environment.name == "campus");
    CHECK(cfg.environment.b == 0.3);

    const std::string msg = config_error_of([] {
        parse_config("[environment]\nname = campus\na = 5.5\n");
    });
    CHECK(msg.find("all five fields") != std::string::npos);

    // preset names cannot be redefined
    CHECK_THROWS_AS(parse_config("[environment]\nname = urban\na = 9.61\nb = 0.2\n"
                                 "eta_los_db = 1\neta_nlos_db = 20\n"),
                    ConfigError);

    // invariants still apply
    CHECK(config_error_of([] {
              parse_config("[environment]\nname = campus\na = 5.5\nb = 0\n"
                           "eta_los_db = 0.8\neta_nlos_db = 15\n");
          }).find("b must be > 0") != std::string::npos);
}

TEST_CASE("custom environment names are visible to sweeps") {
    const RunConfig cfg = parse_config(
        "[environment]\n"
        "name = campus\n"
        "a = 5.5\n"
        "b = 0.3\n"
        "eta_los_db = 0.8\n"
        "eta_nlos_db = 15\n"
        "[sweep]\n"
        "envs = campus, urban\n");
    CHECK(resolve_environment(cfg, "campus").b == 0.3);
    CHECK(resolve_environment(cfg, "urban").a == 9.61);
    CHECK_THROWS_AS(resolve_environment(cfg, "downtown"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sweep]\nenvs = urban, downtown\n"), ConfigError);
}

TEST_CASE("sweep and top-level keys land in the config") {
    const RunConfig cfg = parse_config(
        "output_path = somewhere.csv\n"
        "seed = 123\n"
        "[sweep]\n"
        "kind = power_vs_distance\n"
        "start = 50\n"
        "stop = 1500\n"
        "step = 50\n"
        "fixed_altitude_m = 150\n"
        "beam_on_off = false\n");
    CHECK(cfg.output_path == "somewhere.csv");
    CHECK(cfg.seed == 123);
    REQUIRE(cfg.sweep_kind.has_value());
    CHECK(*cfg.sweep_kind == SweepKind::power_vs_distance);
    CHECK(cfg.sweep_start == 50.0);
    CHECK(cfg.sweep_stop == 1500.0);
    CHECK(cfg.sweep_step == 50.0);
    CHECK(cfg.fixed_altitude_m == 150.0);
    CHECK_FALSE(cfg.beam_on_off);
}

TEST_CASE("pathloss carrier mirrors the link carrier") {
    const RunConfig cfg = parse_config("[link]\nf_hz = 5.8e9\n");
    CHECK(cfg.pathloss.f_hz == 5.8e9);
}

TEST_CASE("missing config file is a config error") {
    CHECK_THROWS_AS(load_config_file("/definitely/not/here.ini"), ConfigError);
}

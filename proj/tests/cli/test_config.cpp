#include <doctest.h>

#include <cmath>
#include <numbers>

#include "transmon_cli/config.hpp"

using namespace transmon;
using namespace transmon::cli;

TEST_SUITE("cli_config") {
  TEST_CASE("empty config resolves to the transmon defaults") {
    const auto cfg = parse_config("");
    CHECK(cfg.mode == UnitMode::dimensionless);
    CHECK(cfg.model().a() == 50.0);
    CHECK(cfg.model().b() == 98.5);
    CHECK(cfg.model().anharmonicity() == 1.5);
    CHECK(cfg.coupling().l2 == 6.0);
    CHECK(cfg.coupling().l1 == 0.0);
    CHECK(cfg.resolved_regime() == Regime::stable_second_level);
  }

  TEST_CASE("V1 on defaults L1 to two thirds of L2 and the full regime") {
    const auto cfg = parse_config("[coupling]\nl2 = 6\nv1_enabled = true\n");
    CHECK(cfg.coupling().l1 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(cfg.resolved_regime() == Regime::full_coupling);
    const auto explicit_l1 = parse_config("[coupling]\nl2 = 6\nl1 = 1\nv1_enabled = yes\n");
    CHECK(explicit_l1.coupling().l1 == 1.0);
    const auto weak = parse_config("[coupling]\nl2 = 0.1\nv1_enabled = on\nregime = weak\n");
    CHECK(weak.resolved_regime() == Regime::weak_coupling);
  }

  TEST_CASE("alpha_d determines b when b is absent") {
    const auto cfg = parse_config("[model]\na = 40\nalpha_d = 2\n");
    CHECK(cfg.model().b() == 78.0);
    CHECK_THROWS_AS(parse_config("[model]\na = 40\nb = 79\nalpha_d = 2\n"), ConfigError);
    CHECK_NOTHROW(parse_config("[model]\na = 40\nb = 78\nalpha_d = 2\n"));
  }

  TEST_CASE("physical parameters map to a and b by ratio") {
    const auto cfg =
        parse_config("[physical]\ne_e_ghz = 5\ne_f_ghz = 9.85\ndelta_mhz = 100\n");
    CHECK(cfg.mode == UnitMode::physical);
    CHECK(cfg.model().a() == 50.0);
    CHECK(cfg.model().b() == 98.5);
    CHECK(cfg.delta_rad_s() == doctest::Approx(2.0 * std::numbers::pi * 1e8));
  }

  TEST_CASE("exactly one parameter family") {
    CHECK_THROWS_AS(parse_config("[model]\na = 50\n[physical]\ndelta_mhz = 100\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[run]\nmode = physical\n[model]\na = 50\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[run]\nmode = dimensionless\n[physical]\ndelta_mhz = 100\n"),
                    ConfigError);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_config("[model]\nfoo = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[nosuch]\na = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("a = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model\na = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model]\na\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model]\na = fifty\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model]\na = 50x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[coupling]\nv1_enabled = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[coupling]\nregime = strong\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[sweep]\nsteps = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[oracle]\nspacings = 0.1,,0.2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[quadrature]\ntail_cutoff = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[model]\na = 5\nb = 9\n"), ConfigError);
  }

  TEST_CASE("regime must agree with the V1 switch") {
    CHECK_THROWS_AS(parse_config("[coupling]\nregime = full\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[coupling]\nv1_enabled = true\nregime = stable\n"), ConfigError);
  }

  TEST_CASE("comments and whitespace") {
    const auto cfg = parse_config("# header\n  [coupling]   \n l2 = 2.5 ; trailing\n\n");
    CHECK(cfg.coupling().l2 == 2.5);
  }

  TEST_CASE("overrides replay on top of the file and validate together") {
    auto cfg = parse_config("[coupling]\nl2 = 1\n");
    apply_overrides(cfg, {"model.a=15", "model.b=28"});
    CHECK(cfg.model().a() == 15.0);
    CHECK(cfg.model().b() == 28.0);
    CHECK(cfg.coupling().l2 == 1.0);
    CHECK_THROWS_AS(apply_overrides(cfg, {"coupling.l2"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(cfg, {"physical.delta_mhz=100"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(cfg, {"nosection=1"}), ConfigError);
  }

  TEST_CASE("resolved config echoes every section") {
    const auto j = parse_config("").to_json();
    for (const char* key : {"run", "model", "coupling", "grid", "quadrature", "resonances", "sweep",
                            "time", "oracle"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["coupling"]["l1"] == 0.0);
    CHECK(j["coupling"]["regime"] == "stable");
    CHECK(j["oracle"]["spacings"].size() == 4);
  }

  TEST_CASE("load_config reads files and reports missing ones") {
    const auto cfg = load_config(std::string(TRANSMON_CLI_CONFIG_DIR) + "/stable_weak.ini");
    CHECK(cfg.coupling().l2 == 0.1);
    CHECK_THROWS_AS(load_config(std::string(TRANSMON_CLI_CONFIG_DIR) + "/absent.ini"),
                    ConfigError);
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "transmon/decay_spectrum.hpp"
#include "transmon/discrete_oracle.hpp"
#include "transmon/error.hpp"
#include "transmon/self_energy.hpp"

using namespace transmon;

namespace {

const auto kModel = DimensionlessModel::transmon_default();
const double kB = kModel.b();
const std::vector<double> kEnergies{kB - 2.0, kB - 1.0, kB, kB + 0.5, kB + 1.5};

}  // namespace

TEST_SUITE("discrete_oracle") {
  TEST_CASE("discrete Delta1 matches the continuum at spacing 0.01") {
    const auto c = CouplingConfig::transmon(1.0, true);
    auto spec = DiscretizationSpec::for_spacing(kModel, 0.01);
    spec.pole_offset = 0.005;
    const double pts[5][2] = {{98.5, 48.5}, {98.5, 47.9}, {99.2, 48.7}, {97.0, 49.4}, {100.1, 48.1}};
    for (const auto& p : pts) {
      const auto d = discrete_self_energy_1(p[0], p[1], spec, kModel, c);
      CAPTURE(p[0]);
      CAPTURE(p[1]);
      CHECK(std::fabs(d.total.shift - delta1(p[0], p[1], kModel, c)) < 1e-2);
      CHECK(d.total.width >= 0.0);
    }
  }

  TEST_CASE("self term scales with the mode spacing") {
    const auto c = CouplingConfig::transmon(1.0, true);
    const double y = 98.5;
    const double w = 48.7;
    const auto coarse =
        discrete_self_energy_1(y, w, DiscretizationSpec::for_spacing(kModel, 0.02), kModel, c);
    const auto fine =
        discrete_self_energy_1(y, w, DiscretizationSpec::for_spacing(kModel, 0.01), kModel, c);
    CHECK(coarse.self_term.shift / fine.self_term.shift == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::fabs(fine.self_term.shift) < 1e-2);
  }

  TEST_CASE("default spacings converge monotonically at first order") {
    const auto c = CouplingConfig::transmon(1.0, true);
    const auto rep = convergence_report(kEnergies, {0.05, 0.02, 0.01, 0.005}, kModel, c);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.monotone);
    CHECK(rep.rows.back().max_error() < 0.02);
    const double ratio = rep.rows[3].max_error() / rep.rows[2].max_error();
    CHECK(ratio > 0.35);
    CHECK(ratio < 0.65);
  }

  TEST_CASE("discrete widths are non-negative and roughly symmetric about b") {
    const auto c = CouplingConfig::transmon(1.0, true);
    const auto spec = DiscretizationSpec::for_spacing(kModel, 0.01);
    const FullSelfEnergy exact(kModel, c, {});
    for (double x : {0.5, 1.5}) {
      const auto up = discrete_self_energy_2(kB + x, spec, kModel, c);
      const auto dn = discrete_self_energy_2(kB - x, spec, kModel, c);
      CHECK(up.width >= 0.0);
      CHECK(dn.width >= 0.0);
      const double scale = std::hypot(exact.delta2(kB + x), 0.5 * exact.gamma2(kB + x));
      CHECK(std::fabs(up.shift + dn.shift) < 0.05 * scale);
      CHECK(std::fabs(up.width - dn.width) < 0.05 * scale);
    }
  }

  TEST_CASE("stable limit tends to the Gaussian width") {
    const auto c = CouplingConfig::transmon(1.0, false);
    double previous = 1e300;
    for (double dw : {0.02, 0.01, 0.005}) {
      const auto d = discrete_self_energy_2(kB + 0.5, DiscretizationSpec::for_spacing(kModel, dw),
                                            kModel, c);
      const double err = std::fabs(d.width - gamma2_stable(kB + 0.5, kModel, c));
      CHECK(err < previous);
      previous = err;
    }
    CHECK(previous < 0.05 * gamma2_stable(kB + 0.5, kModel, c));
  }

  TEST_CASE("convergence report edge cases") {
    const auto c = CouplingConfig::transmon(1.0, true);
    const auto one = convergence_report(kEnergies, {0.05}, kModel, c);
    CHECK(one.rows.size() == 1);
    CHECK(one.monotone);
    CHECK_THROWS_AS(convergence_report(kEnergies, {}, kModel, c), InvalidArgument);
    CHECK_THROWS_AS(convergence_report(kEnergies, {0.01, 0.02}, kModel, c), InvalidArgument);
    ConvergenceOptions bad;
    bad.pole_offset_ratio = 0.0;
    CHECK_THROWS_AS(convergence_report(kEnergies, {0.05}, kModel, c, bad), PoleCollision);
  }

  TEST_CASE("spec validation") {
    auto spec = DiscretizationSpec::for_spacing(kModel, 0.01);
    CHECK(spec.band_lo <= kModel.center(Transition::fe) - 10.0);
    CHECK(spec.band_hi >= kModel.center(Transition::eg) + 10.0);
    spec.pole_offset = 0.0;
    CHECK_THROWS_AS(spec.validate(), PoleCollision);
    spec = DiscretizationSpec::for_spacing(kModel, 0.01);
    spec.mode_spacing = -1.0;
    CHECK_THROWS_AS(spec.validate(), InvalidArgument);
  }
}

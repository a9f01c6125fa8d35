#include <doctest.h>

#include <cmath>
#include <numbers>

#include "transmon/dawson.hpp"
#include "transmon/decay_spectrum.hpp"
#include "transmon/error.hpp"
#include "transmon/quadrature.hpp"

using namespace transmon;

namespace {

const auto kModel = DimensionlessModel::transmon_default();
const double kB = kModel.b();
const double kSqrtPiValue = std::sqrt(std::numbers::pi);

}  // namespace

TEST_SUITE("decay_spectrum") {
  TEST_CASE("delta2_stable reference values and oddness") {
    const auto c1 = CouplingConfig::transmon(1.0, false);
    CHECK(delta2_stable(kB, kModel, c1) == 0.0);
    CHECK(delta2_stable(kB + 1.0, kModel, c1) == doctest::Approx(2.1523180).epsilon(1e-7));
    for (double x : {0.3, 1.1, 4.0, 9.0}) {
      CHECK(delta2_stable(kB + x, kModel, c1) == -delta2_stable(kB - x, kModel, c1));
    }
  }

  TEST_CASE("gamma2_stable reference values") {
    const auto c6 = CouplingConfig::transmon(6.0, false);
    CHECK(gamma2_stable(kB, kModel, c6) == doctest::Approx(24.0 * kSqrtPiValue));
    CHECK(gamma2_stable(kB, kModel, c6) == doctest::Approx(42.5389).epsilon(1e-5));
    CHECK(gamma2_stable(kB + 3.34, kModel, c6) == doctest::Approx(6.07e-4).epsilon(1e-2));
    CHECK(gamma2_stable(kB + 10.0, kModel, c6) < 1e-41);
    CHECK(gamma2_stable(kB - 10.0, kModel, c6) < 1e-41);
  }

  TEST_CASE("delta2_stable agrees with PV quadrature of the mode integral") {
    const auto c = CouplingConfig::transmon(1.0, false);
    const double c2 = kModel.center(Transition::fe);
    for (int i = 0; i < 10; ++i) {
      const double y = kB - 4.1 + 0.89 * i;
      // Delta_2 = PV int g_2^2(w) / (y - a - w) dw.
      const double pole = y - kModel.a();
      const auto r = pv_integrate(
          [&](double w) { return coupling_sq(kModel, c, Transition::fe, w) / (pole - w); }, pole,
          Domain::real_line(c2, 1.0), QuadratureSettings{});
      CAPTURE(y);
      CHECK(std::fabs(r.value - delta2_stable(y, kModel, c)) < 1e-8);
    }
  }

  TEST_CASE("full regime shift vanishes at b and is odd about it") {
    const QuadratureSettings s;
    for (double l2 : {0.3, 1.0, 6.0}) {
      const auto c = CouplingConfig::transmon(l2, true);
      const FullSelfEnergy full(kModel, c, s);
      CAPTURE(l2);
      CHECK(std::fabs(full.delta2(kB)) < s.abs_tol);
      for (double x : {0.5, 1.0, 3.0}) {
        CAPTURE(x);
        CHECK(std::fabs(full.delta2(kB + x) + full.delta2(kB - x)) < 2.0 * s.abs_tol);
        const double gp = full.gamma2(kB + x);
        const double gm = full.gamma2(kB - x);
        CHECK(gp > 0.0);
        CHECK(std::fabs(gp - gm) <= 2.0 * s.rel_tol * gp + s.abs_tol);
      }
    }
  }

  TEST_CASE("full regime reduces to the stable one as L1 -> 0") {
    const QuadratureSettings s;
    const auto tiny = CouplingConfig::make(1e-6, 1.0, true);
    const auto stable = CouplingConfig::transmon(1.0, false);
    for (double y : {kB - 2.0, kB - 0.4, kB + 0.7, kB + 2.5}) {
      CHECK(std::fabs(delta2_full(y, kModel, tiny, s) - delta2_stable(y, kModel, stable)) < 1e-4);
    }
    const auto small = CouplingConfig::make(1e-4, 1.0, true);
    for (double y = kB - 3.0; y <= kB + 3.0; y += 0.5) {
      const double gs = gamma2_stable(y, kModel, stable);
      if (gs <= 1e-6) continue;
      CAPTURE(y);
      CHECK(std::fabs(gamma2_full(y, kModel, small, s) - gs) <= 1e-2 * gs);
    }
  }

  TEST_CASE("full regime at L2 = 6, L1 = 4: order-one width at b") {
    const auto c = CouplingConfig::transmon(6.0, true);
    const QuadratureSettings s;
    const double g = gamma2_full(kB, kModel, c, s);
    CHECK(g > 0.5);
    CHECK(g < 5.0);
    const DecaySpectrum spec(kModel, c, Regime::full_coupling, s);
    CHECK(spec.spectral_function(kB) == doctest::Approx(2.0 / (std::numbers::pi * g)));
    CHECK(spec.spectral_function(kB) == doctest::Approx(0.394).epsilon(0.1));
  }

  TEST_CASE("weak regime evaluates the full integrals at b") {
    const QuadratureSettings s;
    const auto c = CouplingConfig::transmon(0.1, true);
    const auto sw = shift_width_weak(kModel, c, s);
    CHECK(std::fabs(sw.shift) < s.abs_tol);
    CHECK(sw.width == gamma2_full(kB, kModel, c, s));
    const DecaySpectrum weak(kModel, c, Regime::weak_coupling, s);
    CHECK(weak.self_energy(kB + 1.3).width == sw.width);
    const auto nearly_off = CouplingConfig::make(1e-7, 0.1, true);
    CHECK(shift_width_weak(kModel, nearly_off, s).width ==
          doctest::Approx(4.0 * kSqrtPiValue * 0.1).epsilon(1e-5));
  }

  TEST_CASE("spectral function values") {
    const QuadratureSettings s;
    const DecaySpectrum weak(kModel, CouplingConfig::transmon(0.1, false),
                             Regime::stable_second_level, s);
    CHECK(weak.spectral_function(kB) == doctest::Approx(0.8979).epsilon(1e-4));
    const auto c = CouplingConfig::transmon(0.1, false);
    const double g = gamma2_stable(kB, kModel, c);
    CHECK(weak.spectral_function(kB) == doctest::Approx(2.0 / (std::numbers::pi * g)));
    CHECK(spectral_function(kB, kModel, c, Regime::stable_second_level, s) ==
          weak.spectral_function(kB));
  }

  TEST_CASE("spectral function is symmetric about b in every regime") {
    const QuadratureSettings s;
    for (Regime r : {Regime::stable_second_level, Regime::weak_coupling, Regime::full_coupling}) {
      const auto c = CouplingConfig::transmon(1.0, r != Regime::stable_second_level);
      const DecaySpectrum spec(kModel, c, r, s);
      for (double x : {0.5, 1.0, 3.0}) {
        const double up = spec.spectral_function(kB + x);
        const double dn = spec.spectral_function(kB - x);
        CAPTURE(x);
        CHECK(std::fabs(up - dn) <= 1e-8 * std::max(up, 1e-300) + 1e-12);
      }
    }
  }

  TEST_CASE("degenerate point raises instead of returning infinity") {
    CHECK_THROWS_AS(lorentz_form(0.0, {0.0, 0.0}), DegeneratePoint);
    CHECK(lorentz_form(1.0, {0.0, 0.0}) == 0.0);
  }

  TEST_CASE("regime names and coupling checks") {
    for (Regime r : {Regime::stable_second_level, Regime::weak_coupling, Regime::full_coupling}) {
      CHECK(parse_regime(to_string(r)) == r);
    }
    CHECK_THROWS_AS(parse_regime("strong"), InvalidArgument);
    CHECK_THROWS_AS(check_regime(Regime::stable_second_level, CouplingConfig::transmon(1.0, true)),
                    InvalidArgument);
    CHECK_THROWS_AS(check_regime(Regime::full_coupling, CouplingConfig::make(0.0, 1.0, true)),
                    InvalidArgument);
  }
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "transmon/decay_spectrum.hpp"
#include "transmon/resonance.hpp"
#include "transmon/spectral_grid.hpp"

using namespace transmon;

namespace {

const auto kModel = DimensionlessModel::transmon_default();
const double kB = kModel.b();

std::vector<std::size_t> interior_maxima(const SpectralGrid& g, double min_fraction) {
  const double top = *std::max_element(g.u_ff.begin(), g.u_ff.end());
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    if (g.u_ff[i] > g.u_ff[i - 1] && g.u_ff[i] >= g.u_ff[i + 1] &&
        g.u_ff[i] >= min_fraction * top) {
      idx.push_back(i);
    }
  }
  return idx;
}

void check_invariants(const SpectralGrid& g) {
  REQUIRE(g.size() > 2);
  for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(g.energies[i] > g.energies[i - 1]);
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(g.u_ff[i] >= 0.0);
    REQUIRE(g.gamma2[i] >= 0.0);
  }
}

}  // namespace

TEST_SUITE("spectral_grid") {
  TEST_CASE("weak stable coupling: one maximum at b, unit weight") {
    const DecaySpectrum spec(kModel, CouplingConfig::transmon(0.1, false),
                             Regime::stable_second_level, {});
    const auto g = build_grid(spec);
    check_invariants(g);
    CHECK(g.complete);
    const auto peaks = interior_maxima(g, 0.05);
    REQUIRE(peaks.size() == 1);
    CHECK(std::fabs(g.energies[peaks[0]] - kB) < 1e-2);
    CHECK(g.integral() == doctest::Approx(1.0).epsilon(1e-3));
  }

  TEST_CASE("ultra-strong stable coupling: two symmetric maxima, resolved") {
    const DecaySpectrum spec(kModel, CouplingConfig::transmon(6.0, false),
                             Regime::stable_second_level, {});
    const GridOptions opt;
    const auto g = build_grid(spec, opt);
    check_invariants(g);
    CHECK(g.complete);
    const auto peaks = interior_maxima(g, 0.05);
    REQUIRE(peaks.size() == 2);
    const double left = g.energies[peaks[0]] - kB;
    const double right = g.energies[peaks[1]] - kB;
    CHECK(std::fabs(left + right) < 1e-5);
    CHECK(g.u_ff[peaks[0]] == doctest::Approx(g.u_ff[peaks[1]]).epsilon(1e-2));
    CHECK(g.integral() == doctest::Approx(1.0).epsilon(1e-3));

    // At least points_per_fwhm samples across each side peak.
    ResonanceRecord rec;
    rec.y_r = g.energies[peaks[1]];
    rec.height = g.u_ff[peaks[1]];
    const double w = fwhm(rec, spec).width;
    const auto lo = std::lower_bound(g.energies.begin(), g.energies.end(), rec.y_r - 0.5 * w);
    const auto hi = std::upper_bound(g.energies.begin(), g.energies.end(), rec.y_r + 0.5 * w);
    CHECK(hi - lo >= opt.points_per_fwhm);
    CHECK(*std::max_element(g.refinement_level.begin(), g.refinement_level.end()) > 0);
  }

  TEST_CASE("full coupling L2 = 6: three maxima with the middle at b") {
    const DecaySpectrum spec(kModel, CouplingConfig::transmon(6.0, true), Regime::full_coupling,
                             {});
    const auto g = build_grid(spec);
    check_invariants(g);
    const auto peaks = interior_maxima(g, 0.05);
    REQUIRE(peaks.size() == 3);
    CHECK(std::fabs(g.energies[peaks[1]] - kB) < 1e-2);
    CHECK(std::fabs((g.energies[peaks[0]] - kB) + (g.energies[peaks[2]] - kB)) < 1e-2);
    CHECK(g.integral() == doctest::Approx(1.0).epsilon(1e-3));
  }

  TEST_CASE("exhausted refinement budget is flagged") {
    const DecaySpectrum spec(kModel, CouplingConfig::transmon(6.0, false),
                             Regime::stable_second_level, {});
    GridOptions opt;
    opt.max_passes = 0;
    const auto g = build_grid(spec, opt);
    CHECK_FALSE(g.complete);
  }

  TEST_CASE("arbitrary spectral functions refine the same way") {
    const double gamma = 1e-3;
    auto lorentz = [gamma](double y) {
      const double x = y - 10.0;
      return gamma / (2.0 * std::numbers::pi * (x * x + 0.25 * gamma * gamma));
    };
    const auto g = build_grid(lorentz, 10.0);
    check_invariants(g);
    CHECK(g.complete);
    const auto lo = std::lower_bound(g.energies.begin(), g.energies.end(), 10.0 - 0.5 * gamma);
    const auto hi = std::upper_bound(g.energies.begin(), g.energies.end(), 10.0 + 0.5 * gamma);
    CHECK(hi - lo >= GridOptions{}.points_per_fwhm);
  }
}

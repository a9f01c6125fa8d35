#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "transmon/dawson.hpp"
#include "transmon/error.hpp"
#include "transmon/quadrature.hpp"

using namespace transmon;

namespace {

const double kSqrtPiValue = std::sqrt(std::numbers::pi);

// D(x) = int_0^x exp(t^2 - x^2) dt, integrated directly.
double dawson_by_quadrature(double x) {
  QuadratureSettings s;
  s.abs_tol = 1e-14;
  s.rel_tol = 1e-13;
  return integrate_adaptive([x](double t) { return std::exp((t - x) * (t + x)); },
                            Domain::finite(0.0, x), s)
      .value;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("dawson reference values") {
    CHECK(dawson(0.0) == 0.0);
    // Values from an extended-precision series.
    CHECK(std::fabs(dawson(1.0) - 0.5380795069127684) < 1e-12);
    CHECK(std::fabs(dawson(2.0) - 0.30134038892379195) < 1e-12);
    CHECK(std::fabs(dawson(5.0) - 0.10213407442427684) < 1e-12);
    CHECK(std::fabs(dawson(6.0) - 0.08454268897454385) < 1e-12);
  }

  TEST_CASE("dawson matches direct integration across the series/asymptotic switch") {
    for (double x : {0.05, 0.5, 1.5, 3.0, 4.0, 5.5, 5.99, 6.0, 6.01, 8.0, 12.0}) {
      CAPTURE(x);
      CHECK(std::fabs(dawson(x) - dawson_by_quadrature(x)) < 1e-12);
    }
  }

  TEST_CASE("dawson is odd bit for bit") {
    for (double x : {1e-8, 0.3, 1.0, 4.2, 6.0, 17.0}) {
      CHECK(dawson(-x) == -dawson(x));
    }
  }

  TEST_CASE("dawson asymptotic envelope") {
    for (double x = 5.0; x <= 50.0; x += 0.75) {
      const double lead = 1.0 / (2.0 * x) * (1.0 + 1.0 / (2.0 * x * x));
      CAPTURE(x);
      CHECK(std::fabs(dawson(x) - lead) <= 1.1 * 3.0 / (4.0 * std::pow(x, 5)));
    }
    CHECK(dawson(1e6) == doctest::Approx(0.5e-6).epsilon(1e-12));
  }

  TEST_CASE("dawson fixed point") {
    CHECK_FALSE(dawson_fixed_point(1.0).has_value());
    CHECK_FALSE(dawson_fixed_point(0.5).has_value());
    const auto x = dawson_fixed_point(24.0);
    REQUIRE(x.has_value());
    CHECK(std::fabs(*x - 24.0 * dawson(*x)) < 1e-12);
    CHECK(*x > 3.5);
    CHECK(*x < 3.6);
  }

  TEST_CASE("hilbert_gaussian closed form") {
    CHECK(hilbert_gaussian(0.0) == 0.0);
    CHECK(std::fabs(hilbert_gaussian(1.0) - 2.0 * kSqrtPiValue * 0.5380795069127684) < 1e-12);
  }

  TEST_CASE("hilbert_gaussian agrees with generic PV quadrature") {
    const QuadratureSettings s;
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const auto pv = pv_integrate([x](double t) { return std::exp(-t * t) / (x - t); }, x,
                                   Domain::real_line(), s);
      CAPTURE(x);
      CHECK(std::fabs(pv.value - hilbert_gaussian(x)) < std::max(1e-9, s.rel_tol));
    }
  }

  TEST_CASE("pv of a bare pole on a symmetric interval vanishes") {
    const double x = 0.7;
    const double h = 0.3;
    const auto r = pv_integrate([x](double t) { return 1.0 / (x - t); }, x,
                                Domain::finite(x - h, x + h), QuadratureSettings{});
    CHECK(std::fabs(r.value) < 1e-14);
  }

  TEST_CASE("pv of t/(x - t) with pole at 0 on (-1, 1)") {
    const auto r = pv_integrate([](double t) { return t / (0.0 - t); }, 0.0,
                                Domain::finite(-1.0, 1.0), QuadratureSettings{});
    CHECK(r.value == doctest::Approx(-2.0).epsilon(1e-12));
  }

  TEST_CASE("pv rejects a pole outside the domain") {
    CHECK_THROWS_AS(pv_integrate([](double t) { return 1.0 / (3.0 - t); }, 3.0,
                                 Domain::finite(-1.0, 1.0), QuadratureSettings{}),
                    InvalidArgument);
  }

  TEST_CASE("gaussian over the real line") {
    const auto r = integrate_adaptive([](double t) { return std::exp(-t * t); }, Domain::real_line(),
                                      QuadratureSettings{});
    CHECK(std::fabs(r.value - kSqrtPiValue) < 1e-10);
    CHECK(r.error < 1e-10);
  }

  TEST_CASE("lorentzian against its arctangent antiderivative") {
    const QuadratureSettings s;
    for (double gamma : {1e-3, 0.05, 1.0}) {
      const double c = 0.37;
      const double half = 20.0;
      const auto r = integrate_adaptive(
          [&](double t) { return gamma / ((t - c) * (t - c) + gamma * gamma); },
          Domain::finite(c - half, c + half), s, std::array<double, 1>{c});
      const double exact = 2.0 * std::atan(half / gamma);
      CAPTURE(gamma);
      CHECK(std::fabs(r.value - exact) <= s.rel_tol * exact);
    }
  }

  TEST_CASE("integration is linear") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const QuadratureSettings s;
    for (int trial = 0; trial < 10; ++trial) {
      const double c1 = u(rng), c2 = u(rng), w1 = 1.0 + std::fabs(u(rng));
      const double alpha = u(rng), beta = u(rng);
      auto f = [&](double t) { return std::exp(-(t - c1) * (t - c1)) * std::cos(w1 * t); };
      auto g = [&](double t) { return std::exp(-(t - c2) * (t - c2) / 2.0) * (1.0 + t * t); };
      const auto dom = Domain::real_line(0.0, 2.0);
      const auto If = integrate_adaptive(f, dom, s);
      const auto Ig = integrate_adaptive(g, dom, s);
      const auto Ih = integrate_adaptive([&](double t) { return alpha * f(t) + beta * g(t); }, dom, s);
      const double expected = alpha * If.value + beta * Ig.value;
      const double tol = 2.0 * std::max(s.abs_tol, s.rel_tol * std::fabs(expected)) +
                         std::fabs(alpha) * If.error + std::fabs(beta) * Ig.error;
      CHECK(std::fabs(Ih.value - expected) <= tol);
    }
  }

  TEST_CASE("subdivision budget exhaustion reports the achieved estimate") {
    QuadratureSettings s;
    s.max_subdivisions = 50;
    s.abs_tol = 1e-14;
    s.rel_tol = 1e-14;
    try {
      (void)integrate_adaptive([](double t) { return std::cos(t * t); }, Domain::finite(0.0, 300.0),
                               s);
      FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
      CHECK(e.error_estimate() > 0.0);
      CHECK(std::isfinite(e.estimate()));
    }
  }

  TEST_CASE("settings validation") {
    QuadratureSettings s;
    CHECK_NOTHROW(s.validate());
    s.tail_cutoff = 5.0;
    CHECK_THROWS_AS(s.validate(), InvalidArgument);
    s = {};
    s.max_subdivisions = 10;
    CHECK_THROWS_AS(s.validate(), InvalidArgument);
    s = {};
    s.abs_tol = 0.0;
    CHECK_THROWS_AS(s.validate(), InvalidArgument);
  }
}

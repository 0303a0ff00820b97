#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "blochrad/distortion.hpp"
#include "blochrad/error.hpp"
#include "oracles.hpp"

using namespace blochrad;
using namespace blochrad::distortion;
namespace fz = oracle::frozen;

TEST_CASE("center") {
  CHECK(center(0.0) == 1.0);
  CHECK(std::abs(center(0.517387) - fz::kCenterAtExpRadius) < 1e-12);
  CHECK(std::abs(center_extended(kStarlikeRadius) - 1.5) < 1e-15);
  CHECK_THROWS_AS(center(kStarlikeRadius), DomainError);
  CHECK_THROWS_AS(center(-0.1), DomainError);
  CHECK_THROWS_AS(center(std::nan("")), DomainError);
  CHECK_THROWS_AS(center_extended(kExtendedLimit), DomainError);
}

TEST_CASE("rho") {
  CHECK(rho(0.0) == 0.0);
  CHECK(std::abs(rho(0.25) - fz::kRhoAtQuarter) < 1e-14);
  CHECK(std::abs(rho((2 * kSqrt3 - std::sqrt(6.0)) / 2) - 1.0) < 1e-12);
  CHECK(std::abs(rho_extended(kStarlikeRadius) - 1.5) < 1e-14);
  CHECK_THROWS_AS(rho(0.6), DomainError);
}

TEST_CASE("gap") {
  CHECK(std::abs(gap(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(gap_extended(kStarlikeRadius)) < 1e-15);
  CHECK(std::abs(gap(fz::kExpRadius) - 1.0 / oracle::kE) < 1e-12);
  CHECK(std::abs(gap(fz::kCardioidRadius) - 1.0 / 3.0) < 1e-12);
  CHECK_THROWS_AS(gap(1.0), DomainError);
}

TEST_CASE("gap equals center minus rho") {
  for (int i = 0; i < 1000; ++i) {
    const double r = kStarlikeRadius * i / 1000.0;
    CHECK(std::abs(gap(r) - (center(r) - rho(r))) < 1e-12);
  }
}

TEST_CASE("monotonicity over a 10^4 grid") {
  constexpr int n = 10000;
  double prev_c = center(0.0), prev_rho = rho(0.0), prev_gap = gap(0.0);
  int violations = 0;
  for (int i = 1; i < n; ++i) {
    const double r = kStarlikeRadius * i / n;
    const double c = center(r), p = rho(r), g = gap(r);
    if (!(c > prev_c) || !(p > prev_rho) || !(g < prev_gap)) ++violations;
    prev_c = c;
    prev_rho = p;
    prev_gap = g;
  }
  CHECK(violations == 0);
}

TEST_CASE("DistortionDisc") {
  const DistortionDisc d = DistortionDisc::at(0.3);
  CHECK(d.center == center(0.3));
  CHECK(d.radius == rho(0.3));
  CHECK(std::abs(d.gap() - gap(0.3)) < 1e-15);
  CHECK(std::abs(d.point(oracle::kPi).real() - d.gap()) < 1e-15);
  CHECK_THROWS_AS(DistortionDisc::at(0.58), DomainError);
  CHECK_NOTHROW(DistortionDisc::at_extended(0.58));
}

TEST_CASE("extremal ratio") {
  CHECK(extremal_ratio(0.0) == Complex(1.0, 0.0));
  CHECK(std::abs(extremal_ratio(fz::kExpRadius) - 1.0 / oracle::kE) < 1e-12);
  CHECK(std::abs(extremal_ratio(fz::kCardioidRadius) - 1.0 / 3.0) < 1e-12);
  CHECK_THROWS_AS(extremal_ratio(Complex(INFINITY, 0.0)), EvaluationError);
  CHECK_THROWS_AS(extremal_function(Complex(NAN, 0.0)), EvaluationError);

  SUBCASE("matches z f0'/f0") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.55, 0.55);
    for (int i = 0; i < 200; ++i) {
      const Complex z(u(rng), u(rng));
      if (std::abs(z) < 1e-3) continue;
      const Complex direct = z * extremal_derivative(z) / extremal_function(z);
      CHECK(std::abs(direct - extremal_ratio(z)) < 1e-11);
    }
  }
  SUBCASE("equals the gap on the positive axis") {
    for (int i = 0; i < 100; ++i) {
      const double r = kStarlikeRadius * i / 100.0;
      CHECK(std::abs(extremal_ratio(r).real() - gap(r)) < 1e-13);
    }
  }
}

TEST_CASE("disc bound for w0 on |z| = r") {
  for (double r : {0.1, 0.3, 0.5, 0.55}) {
    double defect = -1.0;
    for (int j = 0; j < 2048; ++j) {
      const Complex z = std::polar(r, 2.0 * oracle::kPi * j / 2048);
      defect = std::max(defect, std::abs(extremal_ratio(z) - center(r)) - rho(r));
    }
    CHECK(defect <= 1e-9);
  }
}

TEST_CASE("disc bound on random points") {
  std::mt19937_64 rng(20261017);
  std::uniform_real_distribution<double> radius(0.0, kStarlikeRadius);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * oracle::kPi);
  for (int i = 0; i < 5000; ++i) {
    const double r = radius(rng);
    const Complex z = std::polar(r, angle(rng));
    REQUIRE(std::abs(extremal_ratio(z) - center(r)) <= rho(r) + 1e-9);
  }
}

TEST_CASE("Bloch supremum") {
  CHECK(bloch_sup([](Complex z) { return z; }, 256) == doctest::Approx(1.0));
  CHECK(bloch_sup([](Complex z) { return 2.0 * z; }, 128) == doctest::Approx(2.0));
  const double analytic = bloch_sup(extremal_function, 512, ComplexMap(extremal_derivative));
  const double numeric = bloch_sup(extremal_function, 512);
  CHECK(analytic <= 1.0 + 1e-6);
  CHECK(numeric <= 1.0 + 1e-6);
  CHECK(analytic > 0.99);
  CHECK(std::abs(extremal_derivative(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(extremal_function(0.0)) == 0.0);
  CHECK_THROWS_AS(bloch_sup([](Complex z) { return z; }, 32), DomainError);
}

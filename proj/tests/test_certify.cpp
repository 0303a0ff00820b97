#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "blochrad/distortion.hpp"
#include "blochrad/certify.hpp"
#include "blochrad/error.hpp"
#include "oracles.hpp"

using namespace blochrad;
using oracle::kE;
using oracle::kSqrt2;
using oracle::kSqrt3;

TEST_CASE("sharpness residuals") {
  for (RegionId id : {RegionId::exp, RegionId::cardioid, RegionId::lune, RegionId::rational}) {
    INFO(to_string(id));
    REQUIRE(sharpness_claimed(id));
    CHECK(check_sharpness(id) < 1e-9);
  }
  for (RegionId id : {RegionId::halfplane, RegionId::lemniscate, RegionId::sine,
                      RegionId::nephroid, RegionId::sigmoid}) {
    CHECK_FALSE(sharpness_claimed(id));
    CHECK_THROWS_AS(check_sharpness(id), UnsupportedError);
  }
}

TEST_CASE("lune touch point is the lune radius") {
  const double zs = lune_touch_point();
  CHECK(std::abs(zs - (2 * kSqrt3 - std::sqrt(6.0)) / 2) < 1e-15);
  CHECK(std::abs(zs - oracle::frozen::kLuneRadius) < 1e-10);
  // Computed here rather than through check_sharpness.
  const double w = (3 * kSqrt3 - 9 * zs) / (2 * kSqrt3 * zs * zs - 9 * zs + 3 * kSqrt3);
  CHECK(std::abs(std::abs(w * w - 1.0) - 2.0 * std::abs(w)) < 1e-9);
}

TEST_CASE("boundary flip") {
  CHECK(boundary_flip(RegionId::exp, 0.517387));
  CHECK(boundary_flip(RegionId::halfplane, 0.577350));
  CHECK_FALSE(boundary_flip(RegionId::exp, 0.40));
  CHECK_FALSE(boundary_flip(RegionId::sine, 0.45));
  for (RegionId id : kAllRegions) {
    INFO(to_string(id));
    CHECK(boundary_flip(id, *reported_radius(id)));
  }
}

TEST_CASE("exact radii") {
  CHECK(*exact_radius(RegionId::halfplane) == distortion::kStarlikeRadius);
  CHECK(std::abs(*exact_radius(RegionId::nephroid) - kSqrt3 / 5) < 1e-16);
  CHECK(std::abs(*exact_radius(RegionId::sigmoid) - kSqrt3 * (kE - 1) / (4 * kE)) < 1e-16);
  CHECK_FALSE(exact_radius(RegionId::cardioid));
}

TEST_CASE("core invariants") {
  for (const CheckResult& c : core_invariant_checks()) {
    INFO(c.name << " value=" << c.value << " tol=" << c.tolerance);
    CHECK(c.passed);
  }
}

TEST_CASE("region invariants") {
  for (RegionId id : kAllRegions) {
    for (const CheckResult& c : region_invariant_checks(id)) {
      INFO(to_string(id) << ' ' << c.name << " value=" << c.value);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("halfplane-only run") {
  const std::vector<RegionId> only = {RegionId::halfplane};
  const CertReport report = cross_validate(only);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.overall);
  CHECK(std::abs(report.entries[0].certified_radius - 0.577350) < 5e-7);
  CHECK_FALSE(report.entries[0].sharpness);
}

TEST_CASE("unreachable oracle tolerance fails the report") {
  const std::vector<RegionId> only = {RegionId::exp};
  CertOptions options;
  options.oracle_tolerance = 1e-15;
  options.include_core_checks = false;
  const CertReport report = cross_validate(only, options);
  REQUIRE(report.entries.size() == 1);
  CHECK_FALSE(report.overall);
  CHECK_FALSE(report.entries[0].oracle);
  CHECK_FALSE(report.entries[0].errors.empty());
  // The other methods still ran.
  CHECK(report.entries[0].closed_form);
  CHECK(report.entries[0].branch);
}

TEST_CASE("report keeps catalog order for the requested subset") {
  const std::vector<RegionId> some = {RegionId::lemniscate, RegionId::lune};
  CertOptions options;
  options.include_core_checks = false;
  const CertReport report = cross_validate(some, options);
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].region == RegionId::lemniscate);
  CHECK(report.entries[1].region == RegionId::lune);
  CHECK(report.core_checks.empty());
  CHECK(report.overall);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "blochrad/distortion.hpp"
#include "blochrad/error.hpp"
#include "blochrad/polynomial.hpp"
#include "blochrad/solver.hpp"
#include "oracles.hpp"

using namespace blochrad;
namespace fz = oracle::frozen;
using oracle::kE;
using oracle::kSqrt2;
using oracle::kSqrt3;

namespace {

struct Expected {
  RegionId id;
  double frozen;
};

constexpr Expected kRadii[] = {
    {RegionId::halfplane, 0.57735026918962576},
    {RegionId::exp, fz::kExpRadius},
    {RegionId::cardioid, fz::kCardioidRadius},
    {RegionId::lune, fz::kLuneRadius},
    {RegionId::rational, fz::kRationalRadius},
    {RegionId::lemniscate, fz::kLemniscateRadius},
    {RegionId::sine, fz::kSineRadius},
    {RegionId::nephroid, fz::kNephroidRadius},
    {RegionId::sigmoid, fz::kSigmoidRadius},
};

}  // namespace

TEST_CASE("method names") {
  CHECK(parse_method("closed") == Method::closed_form);
  CHECK(parse_method("closed_form") == Method::closed_form);
  CHECK(parse_method("oracle") == Method::oracle);
  CHECK_FALSE(parse_method("newton"));
  for (Method m : kAllMethods) CHECK(parse_method(to_string(m)) == m);
}

TEST_CASE("closed-form radii") {
  CHECK(std::abs(solve_closed_form(RegionId::exp).value - 0.517387) < 5e-6);
  CHECK(std::abs(solve_closed_form(RegionId::cardioid).value - 0.524423) < 5e-6);
  CHECK(std::abs(solve_closed_form(RegionId::lune).value - 0.507306) < 5e-6);
  CHECK(std::abs(solve_closed_form(RegionId::rational).value - 0.349865) < 5e-6);
  CHECK(solve_closed_form(RegionId::halfplane).value == distortion::kStarlikeRadius);

  for (const auto& e : kRadii) {
    if (!has_closed_form(e.id)) {
      CHECK_THROWS_AS(solve_closed_form(e.id), UnsupportedError);
      CHECK_THROWS_AS(radius_polynomial(e.id), UnsupportedError);
      continue;
    }
    const RadiusResult r = solve_closed_form(e.id);
    INFO(to_string(e.id));
    CHECK(r.method == Method::closed_form);
    CHECK(std::abs(r.value - e.frozen) < 1e-13);
    CHECK(r.residual < 1e-10);
  }
}

TEST_CASE("closed-form root is the smallest positive root") {
  for (RegionId id : {RegionId::exp, RegionId::cardioid, RegionId::lune, RegionId::rational}) {
    const auto [a, b, c] = radius_polynomial(id);
    const auto q = poly::real_quadratic_roots(a, b, c);
    REQUIRE(q.count == 2);
    double smallest = INFINITY;
    for (double x : q.roots) if (x > 0) smallest = std::min(smallest, x);
    CHECK(std::abs(solve_closed_form(id).value - smallest) < 1e-15);
    CHECK(std::abs(poly::evaluate_quadratic(a, b, c, smallest)) < 1e-13);
  }
}

TEST_CASE("exp radius matches its surd form") {
  // 2R^2 + 3 sqrt(3)(e - 1)R + 3(1 - e) = 0
  const double b = 3.0 * kSqrt3 * (kE - 1.0);
  const double disc = b * b - 24.0 * (1.0 - kE);
  const double surd = (-b + std::sqrt(disc)) / 4.0;
  CHECK(std::abs(solve_closed_form(RegionId::exp).value - surd) < 1e-12);
}

TEST_CASE("cardioid polynomial equals the gap condition h(R) = 1/3") {
  // Independent route: bisection on the reduced gap formula.
  const double root = oracle::bisect(
      [](double r) {
        return (3.0 - 3.0 * kSqrt3 * r) / ((kSqrt3 - r) * (kSqrt3 - 2.0 * r)) - 1.0 / 3.0;
      },
      0.0, 1.0 / kSqrt3);
  CHECK(std::abs(solve_closed_form(RegionId::cardioid).value - root) < 1e-13);
}

TEST_CASE("branch radii") {
  for (const auto& e : kRadii) {
    const RadiusResult r = solve_branch(e.id);
    INFO(to_string(e.id));
    CHECK(r.method == Method::branch);
    CHECK(std::abs(r.value - e.frozen) < 1e-9);
    CHECK(r.residual < 1e-10);
    CHECK(r.value > 0.0);
    CHECK(r.value <= distortion::kStarlikeRadius + 1e-12);
  }
  CHECK(std::abs(solve_branch(RegionId::lemniscate).value -
                 (2 * kSqrt3 - std::sqrt(6.0)) / 4) < 1e-9);
  CHECK(std::abs(solve_branch(RegionId::sine).value -
                 kSqrt3 * std::sin(1.0) / (2 + 2 * std::sin(1.0))) < 1e-9);
  CHECK(std::abs(solve_branch(RegionId::nephroid).value - kSqrt3 / 5) < 1e-9);
  CHECK(std::abs(solve_branch(RegionId::sigmoid).value - kSqrt3 * (kE - 1) / (4 * kE)) < 1e-9);
  CHECK_THROWS_AS(solve_branch(RegionId::exp, 0.0), DomainError);
}

TEST_CASE("branch agrees with closed form") {
  for (RegionId id : {RegionId::exp, RegionId::cardioid, RegionId::lune, RegionId::rational}) {
    CHECK(std::abs(solve_branch(id).value - solve_closed_form(id).value) < 1e-10);
  }
}

TEST_CASE("right-extreme identity C + rho = sqrt(3)/(sqrt(3) - 2r)") {
  for (int i = 0; i < 100; ++i) {
    const double r = distortion::kStarlikeRadius * i / 100.0;
    CHECK(std::abs(distortion::center(r) + distortion::rho(r) - kSqrt3 / (kSqrt3 - 2.0 * r)) < 1e-12);
  }
}

TEST_CASE("algebraic anchors") {
  const double lune = solve_closed_form(RegionId::lune).value;
  CHECK(std::abs(distortion::center(lune) - kSqrt2) < 1e-10);
  CHECK(std::abs(distortion::rho(lune) - 1.0) < 1e-10);
  const double neph = solve_branch(RegionId::nephroid).value;
  CHECK(std::abs(distortion::center(neph) - 1.25) < 1e-10);
  CHECK(std::abs(distortion::rho(neph) - 5.0 / 12.0) < 1e-10);
}

TEST_CASE("branch equation on a synthetic inscribed-radius function") {
  const Interval wide{0.5, 3.0, false};
  const auto found = solve_branch_equation([](double c) { return 2.0 - c; }, wide, 1e-13);
  // rho(r) = 2 - C(r)  <=>  C + rho = 2  <=>  sqrt(3)/(sqrt(3) - 2r) = 2
  CHECK(std::abs(found.root - kSqrt3 / 4.0) < 1e-12);

  const Interval narrow{0.5, 1.1, false};
  CHECK_THROWS_AS(solve_branch_equation([](double c) { return 1.6 - c; }, narrow, 1e-12),
                  IntervalError);
  CHECK_THROWS_AS(solve_branch_equation([](double) { return 5.0; }, wide, 1e-12),
                  ConvergenceError);
}

TEST_CASE("distance to complement") {
  CHECK(std::abs(distance_to_complement(RegionId::halfplane, 1.0) - 1.0) < 1e-8);
  CHECK(std::abs(distance_to_complement(RegionId::lemniscate, 1.171573) -
                 fz::kLemniscateDistance) < 1e-8);
  CHECK(std::abs(distance_to_complement(RegionId::exp, 1.0) - fz::kExpDistanceAtOne) < 1e-8);
  CHECK_THROWS_AS(distance_to_complement(RegionId::exp, 0.2), DomainError);
  CHECK_THROWS_AS(distance_to_complement(RegionId::exp, 1.0, 100), DomainError);
}

TEST_CASE("distance oracle matches inscribed radius inside each interval") {
  for (const auto& e : kRadii) {
    if (e.id == RegionId::halfplane) continue;
    const Interval& iv = region_spec(e.id).c_interval;
    for (int i = 1; i < 6; ++i) {
      const double c = iv.lower + (iv.upper - iv.lower) * i / 6.0;
      INFO(to_string(e.id) << " c=" << c);
      CHECK(std::abs(distance_to_complement(e.id, c) - inscribed_radius(e.id, c)) < 1e-6);
    }
  }
}

TEST_CASE("oracle radii") {
  CHECK(std::abs(solve_oracle(RegionId::exp).value - 0.517387) < 5e-4);
  CHECK(std::abs(solve_oracle(RegionId::cardioid).value - 0.524423) < 5e-4);
  CHECK(std::abs(solve_oracle(RegionId::halfplane).value - 0.577350) < 5e-4);
  CHECK_THROWS_AS(solve_oracle(RegionId::exp, 1e-15), ConvergenceError);
}

TEST_CASE("solve dispatches on method") {
  CHECK(solve(RegionId::exp, Method::closed_form).method == Method::closed_form);
  CHECK(solve(RegionId::sine, Method::branch).method == Method::branch);
  CHECK_THROWS_AS(solve(RegionId::sine, Method::closed_form), UnsupportedError);
}

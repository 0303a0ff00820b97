#pragma once

// Bloch starlikeness radius for each target region, computed three ways:
//
//  closed_form  root of the quadratic that each sharp radius satisfies,
//  branch       root of rho(r) = r_c(C(r)) using the inscribed-disc formula,
//  oracle       bisection on r of "the distortion disc fits inside the region",
//               with containment decided by ray casting against `level`.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "blochrad/regions.hpp"

namespace blochrad {

enum class Method { closed_form, branch, oracle };

inline constexpr std::array<Method, 3> kAllMethods = {
    Method::closed_form, Method::branch, Method::oracle};

std::string_view to_string(Method m);
// Accepts "closed_form", "closed", "branch" and "oracle".
std::optional<Method> parse_method(std::string_view name);

struct RadiusResult {
  RegionId region;
  Method method;
  double value = 0.0;
  // |defining equation| at `value`; for the oracle, the final bracket width
  double residual = 0.0;
  int iterations = 0;
};

struct QuadraticCoefficients {
  double a;
  double b;
  double c;
};

inline constexpr double kDefaultBranchTolerance = 1e-12;
inline constexpr double kDefaultOracleTolerance = 1e-6;
inline constexpr int kDefaultOracleRays = 2048;
// Rays are searched out to this length; all nine regions fit inside |w| < 4.
inline constexpr double kRayCap = 4.0;

// True for the regions whose radius is the root of a known quadratic
// (exp, cardioid, lune, rational) and for the half-plane (1/sqrt(3)).
bool has_closed_form(RegionId id);

// Coefficients of the quadratic whose root in (0, 1/sqrt(3)) is the radius.
// Throws UnsupportedError for regions without one (including halfplane).
QuadraticCoefficients radius_polynomial(RegionId id);

// Smallest positive root of radius_polynomial(id), by the stable quadratic
// formula, cross-checked against a sign-change scan refined by bisection.
RadiusResult solve_closed_form(RegionId id);

// Root of rho(r) - r_c(C(r)) on (0, 1/sqrt(3)]: scan from 0 in steps of 1e-3,
// then bisect to `tol`. Throws IntervalError if C(r) leaves the inscribed-disc
// interval during the scan, ConvergenceError after 200 bisection steps.
RadiusResult solve_branch(RegionId id, double tol = kDefaultBranchTolerance);

// The scan-and-bisect core of solve_branch for an arbitrary inscribed-disc
// function valid on `centers`. Returns {root, |g(root)|, halvings}.
struct BranchRoot {
  double root;
  double residual;
  int iterations;
};
BranchRoot solve_branch_equation(const std::function<double(double)>& inscribed,
                                 const Interval& centers, double tol);

// Shortest distance from c to the complement of the region, as the minimum
// over `angles` equally spaced rays of the first exit length. Each ray is
// marched in steps of kRayCap/256 and the exit bracket bisected to 1e-10.
// Throws DomainError if c is not strictly inside or angles < 256.
double distance_to_complement(RegionId id, double c,
                              int angles = kDefaultOracleRays);

// Largest r whose distortion disc fits in the region, by bisection on r until the
// bracket is narrower than `tol`. Throws ConvergenceError if that needs more
// than 30 halvings of [0, 1/sqrt(3)].
RadiusResult solve_oracle(RegionId id, double tol = kDefaultOracleTolerance,
                          int rays = kDefaultOracleRays);

RadiusResult solve(RegionId id, Method method);

}  // namespace blochrad

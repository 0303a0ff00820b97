#include "blochrad/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "blochrad/distortion.hpp"
#include "blochrad/error.hpp"
#include "blochrad/polynomial.hpp"

namespace blochrad {

namespace {

using std::numbers::e;
using std::numbers::sqrt2;
using std::numbers::sqrt3;

constexpr double kScanStep = 1e-3;
constexpr int kMaxBisections = 200;
constexpr int kMaxOracleHalvings = 30;
constexpr int kRayMarchSteps = 256;
constexpr double kRayTolerance = 1e-10;

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

// First sign change of f scanning [0, limit] in steps of kScanStep. The last
// point is `limit` itself; a value within `end_slack` of zero there counts as
// a root.
template <typename F>
std::optional<Bracket> scan_for_sign_change(F&& f, double limit,
                                            double end_slack = 0.0) {
  double x0 = 0.0;
  double f0 = f(x0);
  for (int k = 1;; ++k) {
    const double x1 = std::min(k * kScanStep, limit);
    double f1 = f(x1);
    if (x1 == limit && std::abs(f1) <= end_slack) f1 = 0.0;
    if (f0 == 0.0) return Bracket{x0, x0, f0, f0};
    if ((f0 < 0.0) != (f1 < 0.0) || f1 == 0.0) return Bracket{x0, x1, f0, f1};
    if (x1 >= limit) return std::nullopt;
    x0 = x1;
    f0 = f1;
  }
}

// Bisect a sign-change bracket until its width is at most tol. Returns the
// midpoint of the final bracket and the number of halvings.
template <typename F>
std::pair<double, int> bisect(F&& f, Bracket b, double tol, int max_steps) {
  if (b.f_lo == 0.0) return {b.lo, 0};
  if (b.f_hi == 0.0) return {b.hi, 0};
  int steps = 0;
  while (b.hi - b.lo > tol) {
    if (steps == max_steps) {
      throw ConvergenceError("bisection did not reach tolerance");
    }
    const double mid = 0.5 * (b.lo + b.hi);
    if (mid <= b.lo || mid >= b.hi) break;  // bracket at double resolution
    const double fm = f(mid);
    ++steps;
    if (fm == 0.0) return {mid, steps};
    if ((fm < 0.0) == (b.f_lo < 0.0)) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  return {0.5 * (b.lo + b.hi), steps};
}

std::string region_message(RegionId id, std::string_view what) {
  std::ostringstream msg;
  msg << what << " (" << to_string(id) << ")";
  return msg.str();
}

// First exit of the ray c + s e^{i theta}, s in (0, kRayCap].
double first_exit(RegionId id, Complex origin, Complex direction) {
  const double step = kRayCap / kRayMarchSteps;
  double inside = 0.0;
  for (int k = 1; k <= kRayMarchSteps; ++k) {
    const double s = k * step;
    if (level(id, origin + s * direction) > 0.0) {
      double outside = s;
      while (outside - inside > kRayTolerance) {
        const double mid = 0.5 * (inside + outside);
        if (level(id, origin + mid * direction) > 0.0) {
          outside = mid;
        } else {
          inside = mid;
        }
      }
      return 0.5 * (inside + outside);
    }
    inside = s;
  }
  return kRayCap;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::branch: return "branch";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "closed_form" || name == "closed") return Method::closed_form;
  if (name == "branch") return Method::branch;
  if (name == "oracle") return Method::oracle;
  return std::nullopt;
}

bool has_closed_form(RegionId id) {
  switch (id) {
    case RegionId::halfplane:
    case RegionId::exp:
    case RegionId::cardioid:
    case RegionId::lune:
    case RegionId::rational:
      return true;
    default:
      return false;
  }
}

QuadraticCoefficients radius_polynomial(RegionId id) {
  switch (id) {
    case RegionId::exp:
      // 2R^2 + 3 sqrt(3)(e - 1) R + 3(1 - e)
      return {2.0, 3.0 * sqrt3 * (e - 1.0), 3.0 * (1.0 - e)};
    case RegionId::cardioid:
      // R^2 + 3 sqrt(3) R - 3
      return {1.0, 3.0 * sqrt3, -3.0};
    case RegionId::lune:
      // (2 - 2 sqrt(2)) R^2 + sqrt(3)(3 sqrt(2) - 6) R + 3(2 - sqrt(2))
      return {2.0 - 2.0 * sqrt2, sqrt3 * (3.0 * sqrt2 - 6.0),
              3.0 * (2.0 - sqrt2)};
    case RegionId::rational:
      // 4(1 - sqrt(2)) R^2 + 3 sqrt(3)(2 sqrt(2) - 3) R + 3(3 - 2 sqrt(2))
      return {4.0 * (1.0 - sqrt2), 3.0 * sqrt3 * (2.0 * sqrt2 - 3.0),
              3.0 * (3.0 - 2.0 * sqrt2)};
    default:
      throw UnsupportedError(
          region_message(id, "no radius polynomial for this region"));
  }
}

RadiusResult solve_closed_form(RegionId id) {
  if (!has_closed_form(id)) {
    throw UnsupportedError(region_message(
        id, "closed form not available; use the branch solver"));
  }
  if (id == RegionId::halfplane) {
    return {id, Method::closed_form, distortion::kStarlikeRadius, 0.0, 0};
  }

  const auto [a, b, c] = radius_polynomial(id);
  const auto p = [&](double x) { return poly::evaluate_quadratic(a, b, c, x); };
  const double limit = distortion::kStarlikeRadius;

  std::optional<double> formula_root;
  const auto roots = poly::real_quadratic_roots(a, b, c);
  for (int i = 0; i < roots.count; ++i) {
    const double x = roots.roots[i];
    if (x > 0.0 && x <= limit + 1e-12) {
      formula_root = x;
      break;
    }
  }
  if (!formula_root) {
    throw EvaluationError(region_message(id, "no quadratic root in (0, 1/sqrt(3)]"));
  }

  const auto bracket = scan_for_sign_change(p, limit);
  if (!bracket) {
    throw EvaluationError(region_message(id, "sign-change scan found no root"));
  }
  const auto [scanned, steps] = bisect(p, *bracket, 1e-15, kMaxBisections);
  if (std::abs(scanned - *formula_root) > 1e-9) {
    throw EvaluationError(
        region_message(id, "quadratic formula and scan disagree"));
  }
  return {id, Method::closed_form, *formula_root, std::abs(p(*formula_root)),
          steps};
}

BranchRoot solve_branch_equation(const std::function<double(double)>& inscribed,
                                 const Interval& centers, double tol) {
  if (!(tol > 0.0)) throw DomainError("solve_branch: tolerance must be positive");
  const auto g = [&](double r) {
    const double c = distortion::center_extended(r);
    if (!centers.contains(c)) {
      std::ostringstream msg;
      msg << "center C(" << r << ") = " << c
          << " left the inscribed-disc interval";
      throw IntervalError(msg.str());
    }
    return distortion::rho_extended(r) - inscribed(c);
  };

  // g(1/sqrt(3)) is zero for the half-plane up to rounding
  const auto bracket = scan_for_sign_change(g, distortion::kStarlikeRadius, 1e-14);
  if (!bracket) {
    throw ConvergenceError("no root of the branch equation below 1/sqrt(3)");
  }
  const auto [root, steps] = bisect(g, *bracket, tol, kMaxBisections);
  return {root, std::abs(g(root)), steps};
}

RadiusResult solve_branch(RegionId id, double tol) {
  const RegionSpec& spec = region_spec(id);
  try {
    const BranchRoot found = solve_branch_equation(
        [id](double c) { return inscribed_radius(id, c); }, spec.c_interval, tol);
    return {id, Method::branch, found.root, found.residual, found.iterations};
  } catch (const IntervalError& ex) {
    throw IntervalError(region_message(id, ex.what()));
  } catch (const ConvergenceError& ex) {
    throw ConvergenceError(region_message(id, ex.what()));
  }
}

double distance_to_complement(RegionId id, double c, int angles) {
  if (angles < 256) {
    throw DomainError("distance_to_complement: need at least 256 rays");
  }
  if (membership(id, Complex(c, 0.0)) != Membership::inside) {
    throw DomainError(
        region_message(id, "distance_to_complement: center is not interior"));
  }
  const Complex origin(c, 0.0);
  double best = kRayCap;
  for (int j = 0; j < angles; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / angles;
    best = std::min(best, first_exit(id, origin, std::polar(1.0, theta)));
  }
  return best;
}

RadiusResult solve_oracle(RegionId id, double tol, int rays) {
  if (!(tol > 0.0)) throw DomainError("solve_oracle: tolerance must be positive");
  const auto fits = [&](double r) {
    const double c = distortion::center_extended(r);
    if (membership(id, Complex(c, 0.0)) != Membership::inside) return false;
    return distance_to_complement(id, c, rays) >= distortion::rho_extended(r);
  };

  double lo = 0.0;
  double hi = distortion::kStarlikeRadius;
  if (fits(hi)) return {id, Method::oracle, hi, 0.0, 1};
  int iterations = 1;
  while (hi - lo > tol) {
    if (iterations > kMaxOracleHalvings) {
      throw ConvergenceError(
          region_message(id, "oracle bisection did not reach tolerance"));
    }
    const double mid = 0.5 * (lo + hi);
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  return {id, Method::oracle, lo, hi - lo, iterations};
}

RadiusResult solve(RegionId id, Method method) {
  switch (method) {
    case Method::closed_form: return solve_closed_form(id);
    case Method::branch: return solve_branch(id);
    case Method::oracle: return solve_oracle(id);
  }
  throw DomainError("solve: invalid method");
}

}  // namespace blochrad

#pragma once

// Test-only reference implementations. Nothing here calls into the library,
// so agreement with it is evidence rather than tautology.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace oracle {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

// Values frozen from a 50-digit mpmath evaluation of the defining formulas.
namespace frozen {
inline constexpr double kExpRadius = 0.517387062943349;
inline constexpr double kCardioidRadius = 0.524422787845883;
inline constexpr double kLuneRadius = 0.507305936177288;
inline constexpr double kRationalRadius = 0.349864655644133;
inline constexpr double kLemniscateRadius = 0.253652968088644;
inline constexpr double kSineRadius = 0.395735395997657;
inline constexpr double kNephroidRadius = 0.346410161513775;
inline constexpr double kSigmoidRadius = 0.273716231099973;
inline constexpr double kCenterAtExpRadius = 1.42595078306938;
inline constexpr double kRhoAtQuarter = 0.237142244445733;
inline constexpr double kLemniscateDistance = 0.242640562373095;  // c = 1.171573
inline constexpr double kExpDistanceAtOne = 0.632120558828558;
}  // namespace frozen

// Boundary parametrizations t -> phi(e^{it}), written out independently of
// the library. Name must be one of the nine region ids except halfplane.
inline std::function<Complex(double)> boundary_map(const std::string& name) {
  const double k = kSqrt2 + 1.0;
  if (name == "exp") return [](double t) { return std::exp(std::polar(1.0, t)); };
  if (name == "cardioid") {
    return [](double t) {
      const Complex z = std::polar(1.0, t);
      return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0;
    };
  }
  if (name == "rational") {
    return [k](double t) {
      const Complex z = std::polar(1.0, t);
      return 1.0 + z * (k + z) / (k * (k - z));
    };
  }
  if (name == "sine") return [](double t) { return 1.0 + std::sin(std::polar(1.0, t)); };
  if (name == "nephroid") {
    return [](double t) {
      const Complex z = std::polar(1.0, t);
      return 1.0 + z - z * z * z / 3.0;
    };
  }
  if (name == "sigmoid") {
    return [](double t) { return 2.0 / (1.0 + std::exp(-std::polar(1.0, t))); };
  }
  if (name == "lemniscate") {
    // Right loop of r^2 = 2 cos(2 theta), theta in [-pi/4, pi/4].
    return [](double t) {
      const double theta = (t / (2.0 * kPi) - 0.5) * kPi / 2.0;
      return std::polar(std::sqrt(std::max(0.0, 2.0 * std::cos(2.0 * theta))), theta);
    };
  }
  if (name == "lune") {
    // Outer arc of |w - 1| = sqrt 2 for t < pi, inner arc of |w + 1| = sqrt 2
    // after. Both arcs meet at +-i.
    return [](double t) {
      if (t <= kPi) {
        const double s = (t / kPi) * 2.0 * (3.0 * kPi / 4.0) - 3.0 * kPi / 4.0;
        return 1.0 + std::polar(kSqrt2, s);
      }
      const double s = ((t - kPi) / kPi) * 2.0 * (kPi / 4.0) - kPi / 4.0;
      return -1.0 + std::polar(kSqrt2, -s);
    };
  }
  return {};
}

// min over t of |c - curve(t)|: dense scan then golden-section refinement
// around the best sample.
inline double distance_to_curve(const std::function<Complex(double)>& curve,
                                Complex c, int samples = 100000) {
  auto dist = [&](double t) { return std::abs(curve(t) - c); };
  const double h = 2.0 * kPi / samples;
  double best_t = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= samples; ++j) {
    const double t = j * h;
    const double d = dist(t);
    if (d < best) {
      best = d;
      best_t = t;
    }
  }
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(0.0, best_t - h);
  double b = std::min(2.0 * kPi, best_t + h);
  for (int it = 0; it < 100; ++it) {
    const double x1 = b - phi * (b - a);
    const double x2 = a + phi * (b - a);
    if (dist(x1) < dist(x2)) b = x2; else a = x1;
  }
  return std::min(best, dist(0.5 * (a + b)));
}

// Bisection on a sign change in [lo, hi]; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-15) {
  double flo = f(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle

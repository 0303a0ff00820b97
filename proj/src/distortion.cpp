#include "blochrad/distortion.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "blochrad/error.hpp"

namespace blochrad::distortion {

namespace {

constexpr double kSingularThreshold = 1e-300;

Complex finite_or_throw(Complex value, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw EvaluationError(std::string(what) + ": non-finite result");
  }
  return value;
}

void require_checked(double r, const char* what) {
  if (!(r >= 0.0 && r < kStarlikeRadius)) {
    std::ostringstream msg;
    msg << what << ": r = " << r << " outside [0, 1/sqrt(3))";
    throw DomainError(msg.str());
  }
}

void require_extended(double r, const char* what) {
  if (!(r >= 0.0 && r < kExtendedLimit)) {
    std::ostringstream msg;
    msg << what << ": r = " << r << " outside [0, sqrt(3)/2)";
    throw DomainError(msg.str());
  }
}

}  // namespace

double center_extended(double r) {
  require_extended(r, "center");
  return kSqrt3 / (kSqrt3 - r);
}

double rho_extended(double r) {
  require_extended(r, "rho");
  return kSqrt3 * r / ((kSqrt3 - r) * (kSqrt3 - 2.0 * r));
}

double gap_extended(double r) {
  require_extended(r, "gap");
  return (3.0 - 3.0 * kSqrt3 * r) / ((kSqrt3 - r) * (kSqrt3 - 2.0 * r));
}

double center(double r) {
  require_checked(r, "center");
  return center_extended(r);
}

double rho(double r) {
  require_checked(r, "rho");
  return rho_extended(r);
}

double gap(double r) {
  require_checked(r, "gap");
  return gap_extended(r);
}

DistortionDisc DistortionDisc::at(double r) {
  require_checked(r, "DistortionDisc");
  return at_extended(r);
}

DistortionDisc DistortionDisc::at_extended(double r) {
  return DistortionDisc{r, center_extended(r), rho_extended(r)};
}

Complex DistortionDisc::point(double theta) const {
  return Complex(center, 0.0) + std::polar(radius, theta);
}

Complex extremal_function(Complex z) {
  const Complex den = 3.0 - kSqrt3 * z;
  if (std::abs(den) < kSingularThreshold) {
    throw EvaluationError("extremal_function: pole at z = sqrt(3)");
  }
  return finite_or_throw(3.0 * z * (3.0 - 2.0 * kSqrt3 * z) / (den * den),
                         "extremal_function");
}

Complex extremal_derivative(Complex z) {
  const Complex den = 3.0 - kSqrt3 * z;
  if (std::abs(den) < kSingularThreshold) {
    throw EvaluationError("extremal_derivative: pole at z = sqrt(3)");
  }
  return finite_or_throw(27.0 * (1.0 - kSqrt3 * z) / (den * den * den),
                         "extremal_derivative");
}

Complex extremal_ratio(Complex z) {
  const Complex den = 2.0 * kSqrt3 * z * z - 9.0 * z + 3.0 * kSqrt3;
  if (std::abs(den) < kSingularThreshold) {
    throw EvaluationError("extremal_ratio: denominator vanishes");
  }
  return finite_or_throw((3.0 * kSqrt3 - 9.0 * z) / den, "extremal_ratio");
}

double bloch_sup(const ComplexMap& f, int density,
                 const std::optional<ComplexMap>& derivative) {
  if (density < 64) {
    throw DomainError("bloch_sup: grid density must be at least 64");
  }
  constexpr double kStep = 1e-6;
  auto slope = [&](Complex z) -> Complex {
    if (derivative) return (*derivative)(z);
    return (f(z + kStep) - f(z - kStep)) / (2.0 * kStep);
  };

  double best = 0.0;
  for (int i = 0; i < density; ++i) {
    const double radius = static_cast<double>(i) / density;
    const int angles = (i == 0) ? 1 : density;
    for (int j = 0; j < angles; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / density;
      const Complex z = std::polar(radius, theta);
      const double value = (1.0 - radius * radius) * std::abs(slope(z));
      if (value > best) best = value;
    }
  }
  return best;
}

}  // namespace blochrad::distortion

#pragma once

#include <array>
#include <complex>
#include <optional>

namespace blochrad::poly {

struct RealQuadraticRoots {
  int count = 0;  // 0, 1 (linear or double root) or 2
  std::array<double, 2> roots{};
};

// Real roots of a x^2 + b x + c. The larger-magnitude root comes from
// q = -(b + sign(b) sqrt(b^2 - 4ac)) / 2, the other from c / q, so neither
// suffers cancellation. Roots are returned in ascending order.
RealQuadraticRoots real_quadratic_roots(double a, double b, double c);

inline double evaluate_quadratic(double a, double b, double c, double x) {
  return (a * x + b) * x + c;
}

// Both roots of a z^2 + b z + c (a != 0) with the same cancellation-safe
// pairing as the real version.
std::array<std::complex<double>, 2> complex_quadratic_roots(
    std::complex<double> a, std::complex<double> b, std::complex<double> c);

// Roots of z^3 + p z + q via Cardano, each polished by two Newton steps.
std::array<std::complex<double>, 3> depressed_cubic_roots(
    std::complex<double> p, std::complex<double> q);

}  // namespace blochrad::poly

#include "blochrad/polynomial.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace blochrad::poly {

using Complex = std::complex<double>;

RealQuadraticRoots real_quadratic_roots(double a, double b, double c) {
  RealQuadraticRoots out;
  if (a == 0.0) {
    if (b != 0.0) {
      out.count = 1;
      out.roots[0] = -c / b;
    }
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return out;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) {
    // b == 0 and c == 0
    out.count = 1;
    out.roots[0] = 0.0;
    return out;
  }
  double x1 = q / a;
  double x2 = c / q;
  if (x1 > x2) std::swap(x1, x2);
  out.count = (disc == 0.0) ? 1 : 2;
  out.roots = {x1, x2};
  return out;
}

std::array<Complex, 2> complex_quadratic_roots(Complex a, Complex b,
                                               Complex c) {
  const Complex s = std::sqrt(b * b - 4.0 * a * c);
  // pick the sign that maximizes |b + s|
  const Complex q =
      (std::norm(b + s) >= std::norm(b - s)) ? -0.5 * (b + s) : -0.5 * (b - s);
  if (q == Complex(0.0, 0.0)) return {Complex(0.0), Complex(0.0)};
  return {q / a, c / q};
}

std::array<Complex, 3> depressed_cubic_roots(Complex p, Complex q) {
  std::array<Complex, 3> roots;
  if (p == Complex(0.0, 0.0)) {
    const Complex base = std::pow(-q, 1.0 / 3.0);
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    roots = {base, base * omega, base * omega * omega};
  } else {
    const Complex s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const Complex plus = -q / 2.0 + s;
    const Complex minus = -q / 2.0 - s;
    // |u^3| is the larger of the two candidates, so u is bounded away from 0
    const Complex u3 = (std::norm(plus) >= std::norm(minus)) ? plus : minus;
    const Complex u = std::polar(std::cbrt(std::abs(u3)), std::arg(u3) / 3.0);
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex omega2 = std::conj(omega);
    const Complex v = -p / (3.0 * u);  // uv = -p/3
    roots = {u + v, u * omega + v * omega2, u * omega2 + v * omega};
  }
  for (auto& z : roots) {
    for (int step = 0; step < 2; ++step) {
      const Complex f = (z * z + p) * z + q;
      const Complex df = 3.0 * z * z + p;
      if (std::norm(df) == 0.0) break;
      const Complex next = z - f / df;
      // near a double root the step can overshoot; keep it only if it helps
      if (std::norm((next * next + p) * next + q) >= std::norm(f)) break;
      z = next;
    }
  }
  return roots;
}

}  // namespace blochrad::poly

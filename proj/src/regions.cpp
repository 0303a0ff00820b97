#include "blochrad/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <sstream>

#include "blochrad/error.hpp"
#include "blochrad/polynomial.hpp"

namespace blochrad {

namespace {

using std::numbers::e;
using std::numbers::pi;
using std::numbers::sqrt2;

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSin1 = std::sin(1.0);
const double kSigmoidHalfWidth = (e - 1.0) / (e + 1.0);

std::array<RegionSpec, 9> build_catalog() {
  return {{
      {RegionId::halfplane, 0.0, kInf, std::nullopt, {0.0, kInf}, {0.0, 4.0}},
      {RegionId::exp, 1.0 / e, e, (e + 1.0 / e) / 2.0, {1.0 / e, e},
       {1.0 / e, e}},
      {RegionId::cardioid, 1.0 / 3.0, 3.0, 5.0 / 3.0, {1.0 / 3.0, 3.0},
       {1.0 / 3.0, 3.0}},
      {RegionId::lune, sqrt2 - 1.0, sqrt2 + 1.0, sqrt2,
       {sqrt2 - 1.0, sqrt2 + 1.0}, {sqrt2 - 1.0, sqrt2 + 1.0}},
      {RegionId::rational, 2.0 * sqrt2 - 2.0, 2.0, sqrt2,
       {2.0 * sqrt2 - 2.0, 2.0}, {2.0 * sqrt2 - 2.0, 2.0}},
      {RegionId::lemniscate, 0.0, sqrt2, std::nullopt,
       {2.0 * sqrt2 / 3.0, sqrt2, true}, {2.0 * sqrt2 / 3.0, sqrt2, true}},
      {RegionId::sine, 1.0 - kSin1, 1.0 + kSin1, 1.0,
       {1.0 - kSin1, 1.0 + kSin1}, {1.0 - kSin1, 1.0 + kSin1}},
      {RegionId::nephroid, 1.0 / 3.0, 5.0 / 3.0, 1.0, {1.0 / 3.0, 5.0 / 3.0},
       {1.0 / 3.0, 5.0 / 3.0}},
      {RegionId::sigmoid, 1.0 - kSigmoidHalfWidth, 1.0 + kSigmoidHalfWidth, 1.0,
       {1.0 - kSigmoidHalfWidth, 1.0 + kSigmoidHalfWidth},
       {1.0 - kSigmoidHalfWidth, 1.0 + kSigmoidHalfWidth}},
  }};
}

double min_modulus_minus_one(std::span<const Complex> roots) {
  double best = kInf;
  for (const auto& z : roots) best = std::min(best, std::norm(z));
  return std::sqrt(best) - 1.0;
}

// (9x^2 + 9y^2 - 18x + 5)^2 - 16(9x^2 + 9y^2 - 6x + 1)
double cardioid_quartic(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = 9.0 * (x * x + y * y);
  const double u = s - 18.0 * x + 5.0;
  return u * u - 16.0 * (s - 6.0 * x + 1.0);
}

// ((x - 1)^2 + y^2 - 4/9)^3 - (4/3) y^2
double nephroid_sextic(Complex w) {
  const double x = w.real() - 1.0;
  const double y = w.imag();
  const double s = x * x + y * y - 4.0 / 9.0;
  return s * s * s - 4.0 / 3.0 * y * y;
}

}  // namespace

std::string_view to_string(RegionId id) {
  switch (id) {
    case RegionId::halfplane: return "halfplane";
    case RegionId::exp: return "exp";
    case RegionId::cardioid: return "cardioid";
    case RegionId::lune: return "lune";
    case RegionId::rational: return "rational";
    case RegionId::lemniscate: return "lemniscate";
    case RegionId::sine: return "sine";
    case RegionId::nephroid: return "nephroid";
    case RegionId::sigmoid: return "sigmoid";
  }
  return "unknown";
}

std::optional<RegionId> parse_region(std::string_view name) {
  for (RegionId id : kAllRegions) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "unknown";
}

const RegionSpec& region_spec(RegionId id) {
  static const std::array<RegionSpec, 9> catalog = build_catalog();
  const auto index = static_cast<std::size_t>(id);
  if (index >= catalog.size()) throw DomainError("invalid region id");
  return catalog[index];
}

Complex generator(RegionId id, Complex z) {
  switch (id) {
    case RegionId::halfplane: return (1.0 + z) / (1.0 - z);
    case RegionId::exp: return std::exp(z);
    case RegionId::cardioid: return 1.0 + 4.0 / 3.0 * z + 2.0 / 3.0 * z * z;
    case RegionId::lune: return z + std::sqrt(1.0 + z * z);
    case RegionId::rational:
      return 1.0 + (z * z + kRationalK * z) /
                       (kRationalK * kRationalK - kRationalK * z);
    case RegionId::lemniscate: return std::sqrt(1.0 + z);
    case RegionId::sine: return 1.0 + std::sin(z);
    case RegionId::nephroid: return 1.0 + z - z * z * z / 3.0;
    case RegionId::sigmoid: return 2.0 / (1.0 + std::exp(-z));
  }
  throw DomainError("generator: invalid region id");
}

double level(RegionId id, Complex w) {
  switch (id) {
    case RegionId::halfplane:
      return -w.real();
    case RegionId::exp:
      if (w.real() <= 0.0) return kInf;
      return std::abs(std::log(w)) - 1.0;
    case RegionId::cardioid: {
      // 2z^2 + 4z + 3(1 - w) = 0  =>  z = -1 +- sqrt((3w - 1)/2)
      const Complex s = std::sqrt((3.0 * w - 1.0) / 2.0);
      const std::array<Complex, 2> roots = {-1.0 + s, -1.0 - s};
      return min_modulus_minus_one(roots);
    }
    case RegionId::lune:
      // z = (w^2 - 1) / (2w); the left lune around -1 is excluded
      if (w.real() <= 0.0) return kInf;
      return std::abs(w * w - 1.0) / (2.0 * std::abs(w)) - 1.0;
    case RegionId::rational: {
      // z^2 + k w z - k^2 (w - 1) = 0
      // psi'(-1) = 0, so |z| - 1 grows like sqrt(dw) at the left extreme.
      // Scaling by |psi'(z)| (up to a constant) restores a linear defect.
      const auto roots = poly::complex_quadratic_roots(
          1.0, kRationalK * w, -kRationalK * kRationalK * (w - 1.0));
      const Complex z =
          std::norm(roots[0]) <= std::norm(roots[1]) ? roots[0] : roots[1];
      const Complex km = kRationalK - z;
      const double slope =
          std::abs(kRationalK * kRationalK + 2.0 * kRationalK * z - z * z) /
          std::norm(km);
      return (std::abs(z) - 1.0) * slope;
    }
    case RegionId::lemniscate:
      if (w.real() < 0.0) return kInf;
      return std::abs(w * w - 1.0) - 1.0;
    case RegionId::sine:
      // sin is injective on |Re z| < pi/2, which contains the unit disc
      return std::abs(std::asin(w - 1.0)) - 1.0;
    case RegionId::nephroid: {
      // z^3 - 3z + 3(w - 1) = 0
      const auto roots = poly::depressed_cubic_roots(-3.0, 3.0 * (w - 1.0));
      return min_modulus_minus_one(roots);
    }
    case RegionId::sigmoid:
      if (w.real() <= 0.0 || w.real() >= 2.0) return kInf;
      return std::abs(std::log(w / (2.0 - w))) - 1.0;
  }
  throw DomainError("level: invalid region id");
}

Membership membership(RegionId id, Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("membership: w must be finite");
  }
  const double defect = level(id, w);
  if (std::isnan(defect)) {
    throw EvaluationError("membership: level evaluated to NaN");
  }
  if (std::abs(defect) <= kBoundaryBand) return Membership::boundary;
  return defect < 0.0 ? Membership::inside : Membership::outside;
}

std::optional<bool> implicit_inside(RegionId id, Complex w) {
  switch (id) {
    case RegionId::halfplane:
      return w.real() > 0.0;
    case RegionId::exp:
      return w.real() > 0.0 && std::abs(std::log(w)) < 1.0;
    case RegionId::cardioid:
      // sign fixed by the probe w = 1 (value -48); bounded component only
      return cardioid_quartic(w) < 0.0 && std::abs(w - 1.0) < 2.1;
    case RegionId::lune:
      return w.real() > 0.0 && std::abs(w * w - 1.0) < 2.0 * std::abs(w);
    case RegionId::lemniscate:
      return w.real() > 0.0 && std::abs(w * w - 1.0) < 1.0;
    case RegionId::nephroid:
      return nephroid_sextic(w) < 0.0;
    case RegionId::sigmoid:
      return w.real() > 0.0 && w.real() < 2.0 &&
             std::abs(std::log(w / (2.0 - w))) < 1.0;
    case RegionId::rational:
    case RegionId::sine:
      return std::nullopt;
  }
  throw DomainError("implicit_inside: invalid region id");
}

BoundaryCurve boundary(RegionId id, std::size_t n) {
  if (n < 3) throw DomainError("boundary: need at least 3 samples");
  BoundaryCurve curve;
  curve.params.reserve(n);
  curve.points.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    Complex w;
    if (id == RegionId::halfplane) {
      if (t < pi) {
        w = std::polar(kHalfplaneClip, t - pi / 2.0);
      } else {
        w = Complex(0.0, kHalfplaneClip * (1.0 - 2.0 * (t - pi) / pi));
      }
    } else {
      w = generator(id, std::polar(1.0, t));
    }
    curve.params.push_back(t);
    curve.points.push_back(w);
  }
  return curve;
}

int winding_number(const BoundaryCurve& curve, Complex w) {
  const auto& pts = curve.points;
  if (pts.size() < 3) throw DomainError("winding_number: curve too short");
  for (const auto& p : pts) {
    if (std::norm(p - w) < 1e-24) {
      throw DomainError("winding_number: point lies on the curve");
    }
  }
  // Signed crossings of the horizontal ray from w to the right.
  int winding = 0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Complex a = pts[j] - w;
    const Complex b = pts[(j + 1) % pts.size()] - w;
    const double side = a.real() * b.imag() - b.real() * a.imag();
    if (a.imag() <= 0.0) {
      if (b.imag() > 0.0 && side > 0.0) ++winding;
    } else if (b.imag() <= 0.0 && side < 0.0) {
      --winding;
    }
  }
  return winding;
}

double inscribed_radius(RegionId id, double c) {
  const RegionSpec& spec = region_spec(id);
  if (!spec.c_interval.contains(c)) {
    std::ostringstream msg;
    msg << "inscribed_radius(" << to_string(id) << "): c = " << c
        << " outside the validity interval";
    throw DomainError(msg.str());
  }
  switch (id) {
    case RegionId::halfplane:
      return c;
    case RegionId::exp:
      return c <= (e + 1.0 / e) / 2.0 ? c - 1.0 / e : e - c;
    case RegionId::cardioid:
      return c <= 5.0 / 3.0 ? (3.0 * c - 1.0) / 3.0 : 3.0 - c;
    case RegionId::lune:
      return 1.0 - std::abs(sqrt2 - c);
    case RegionId::rational:
      return c <= sqrt2 ? c - 2.0 * (sqrt2 - 1.0) : 2.0 - c;
    case RegionId::lemniscate:
      return sqrt2 - c;
    case RegionId::sine:
      return kSin1 - std::abs(c - 1.0);
    case RegionId::nephroid:
      return c <= 1.0 ? c - 1.0 / 3.0 : 5.0 / 3.0 - c;
    case RegionId::sigmoid:
      return kSigmoidHalfWidth - std::abs(c - 1.0);
  }
  throw DomainError("inscribed_radius: invalid region id");
}

}  // namespace blochrad

#pragma once

// Disc geometry for the logarithmic derivative zf'(z)/f(z) of a normalized
// Bloch function on |z| = r, and the extremal function that attains it.
//
// For |z| = r < 1/sqrt(3) every Bloch function satisfies
//
//     | zf'/f - C(r) | <= rho(r),
//     C(r)   = sqrt(3) / (sqrt(3) - r),
//     rho(r) = sqrt(3) r / ((sqrt(3) - r)(sqrt(3) - 2r)).

#include <complex>
#include <functional>
#include <numbers>
#include <optional>

namespace blochrad {

using Complex = std::complex<double>;

namespace distortion {

inline constexpr double kSqrt3 = std::numbers::sqrt3;
// Radius of starlikeness (and univalence) of the Bloch class.
inline constexpr double kStarlikeRadius = 1.0 / std::numbers::sqrt3;
// Pole of C(r); the closed-form expressions stay finite below this.
inline constexpr double kExtendedLimit = std::numbers::sqrt3 / 2.0;

// Checked evaluators: throw DomainError unless 0 <= r < 1/sqrt(3).
double center(double r);
double rho(double r);
// h(r) = C(r) - rho(r), evaluated from its reduced form
// (3 - 3 sqrt(3) r) / ((sqrt(3) - r)(sqrt(3) - 2r)).
double gap(double r);

// Same formulas on the extended range 0 <= r < sqrt(3)/2. Used for closure
// values at r = 1/sqrt(3) and for probing discs just past the starlikeness
// radius.
double center_extended(double r);
double rho_extended(double r);
double gap_extended(double r);

struct DistortionDisc {
  double r = 0.0;
  double center = 1.0;
  double radius = 0.0;

  // Checked construction on [0, 1/sqrt(3)).
  static DistortionDisc at(double r);
  // Construction on [0, sqrt(3)/2).
  static DistortionDisc at_extended(double r);

  double gap() const { return center - radius; }
  Complex point(double theta) const;
};

// f0(z) = 3z(3 - 2 sqrt(3) z) / (3 - sqrt(3) z)^2
Complex extremal_function(Complex z);
// f0'(z) = 27 (1 - sqrt(3) z) / (3 - sqrt(3) z)^3
Complex extremal_derivative(Complex z);
// w0(z) = z f0'(z) / f0(z) = (3 sqrt(3) - 9z) / (2 sqrt(3) z^2 - 9z + 3 sqrt(3)).
// Throws EvaluationError if the denominator magnitude is below 1e-300 or the
// result is not finite.
Complex extremal_ratio(Complex z);

using ComplexMap = std::function<Complex(Complex)>;

// Max of (1 - |z|^2)|f'(z)| over a polar grid with `density` radii in [0, 1)
// and `density` angles. Without `derivative`, f' is approximated by a centered
// difference with step 1e-6. Throws DomainError if density < 64.
double bloch_sup(const ComplexMap& f, int density,
                 const std::optional<ComplexMap>& derivative = std::nullopt);

}  // namespace distortion
}  // namespace blochrad

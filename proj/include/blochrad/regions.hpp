#pragma once

// Catalog of the nine target regions for zf'(z)/f(z): membership tests,
// boundary curves and the radius of the largest disc centered at a real point
// that still fits inside the region.

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace blochrad {

using Complex = std::complex<double>;

enum class RegionId {
  halfplane,
  exp,
  cardioid,
  lune,
  rational,
  lemniscate,
  sine,
  nephroid,
  sigmoid,
};

inline constexpr std::array<RegionId, 9> kAllRegions = {
    RegionId::halfplane, RegionId::exp,        RegionId::cardioid,
    RegionId::lune,      RegionId::rational,   RegionId::lemniscate,
    RegionId::sine,      RegionId::nephroid,   RegionId::sigmoid,
};

std::string_view to_string(RegionId id);
std::optional<RegionId> parse_region(std::string_view name);

enum class Membership { inside, boundary, outside };

std::string_view to_string(Membership m);

// Absolute band on the level function inside which a point counts as boundary.
inline constexpr double kBoundaryBand = 1e-9;
// k in the rational generator 1 + (z^2 + kz)/(k^2 - kz).
inline constexpr double kRationalK = std::numbers::sqrt2 + 1.0;
// The half-plane boundary is sampled as the segment [-4i, 4i] closed by the
// right half of |w| = 4.
inline constexpr double kHalfplaneClip = 4.0;

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_closed = false;

  bool contains(double x) const {
    return (lower_closed ? x >= lower : x > lower) && x < upper;
  }
};

struct RegionSpec {
  RegionId id;
  // phi(-1) and phi(1): where the real axis leaves the region
  double left_extreme;
  double right_extreme;
  // c at which the inscribed-disc formula switches branch
  std::optional<double> branch_point;
  // centers for which inscribed_radius is defined
  Interval c_interval;
  // finite sub-range of c_interval used when sampling interior centers
  Interval sample_interval;
};

const RegionSpec& region_spec(RegionId id);

// Conformal generator phi of the region (phi(0) = 1). The half-plane uses
// (1 + z)/(1 - z).
Complex generator(RegionId id, Complex z);

// Signed level function: negative inside, zero on the boundary, positive
// outside. For every region except the half-plane this is |phi^{-1}(w)| - 1,
// which stays proportional to distance near cusps where the algebraic
// equations of the boundary vanish to higher order. The half-plane uses -Re w.
double level(RegionId id, Complex w);

// Tri-state classification of w with the boundary band kBoundaryBand.
Membership membership(RegionId id, Complex w);

// Algebraic description of the region where one exists (every region but
// rational and sine). Independent of `level`; used for cross-checks.
std::optional<bool> implicit_inside(RegionId id, Complex w);

struct BoundaryCurve {
  std::vector<double> params;
  std::vector<Complex> points;

  std::size_t size() const { return points.size(); }
};

// n samples t_j = 2 pi j / n of the boundary, traversed once counterclockwise.
// Throws DomainError if n < 3.
BoundaryCurve boundary(RegionId id, std::size_t n);

// Winding number of the closed polyline through `curve.points` about w.
// Throws DomainError if w lies within 1e-12 of a sample.
int winding_number(const BoundaryCurve& curve, Complex w);

// Radius of the largest disc centered at c contained in the region, by the
// region's branch formula. Throws DomainError if c is outside c_interval.
double inscribed_radius(RegionId id, double c);

}  // namespace blochrad

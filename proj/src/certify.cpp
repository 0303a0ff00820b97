#include "blochrad/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blochrad/distortion.hpp"
#include "blochrad/error.hpp"

namespace blochrad {

namespace {

using std::numbers::e;
using std::numbers::pi;
using std::numbers::sqrt2;
using std::numbers::sqrt3;

constexpr double kResidualTolerance = 1e-10;
constexpr double kExactTolerance = 1e-9;
constexpr double kReportedTolerance = 5e-6;
constexpr double kAnchorTolerance = 1e-10;

CheckResult at_most(std::string name, double value, double tolerance) {
  return {std::move(name), value <= tolerance, value, tolerance};
}

CheckResult below(std::string name, double value, double tolerance) {
  return {std::move(name), value < tolerance, value, tolerance};
}

CheckResult flag(std::string name, bool ok) {
  return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0};
}

// Centers c_j = a + (b - a)(j + 1)/51, j = 0..49, strictly inside (a, b).
std::vector<double> interior_centers(const Interval& interval) {
  std::vector<double> centers;
  centers.reserve(50);
  for (int j = 0; j < 50; ++j) {
    centers.push_back(interval.lower +
                      (interval.upper - interval.lower) * (j + 1) / 51.0);
  }
  return centers;
}

bool disc_in_closed_region(RegionId id, double r) {
  const distortion::DistortionDisc disc = distortion::DistortionDisc::at_extended(r);
  for (int j = 0; j < kFlipAngles; ++j) {
    const double theta = 2.0 * pi * j / kFlipAngles;
    if (membership(id, disc.point(theta)) == Membership::outside) return false;
  }
  return true;
}

}  // namespace

double lune_touch_point() { return (2.0 * sqrt3 - std::sqrt(6.0)) / 2.0; }

std::optional<double> reported_radius(RegionId id) {
  switch (id) {
    case RegionId::halfplane: return 0.57735;
    case RegionId::exp: return 0.517387;
    case RegionId::cardioid: return 0.524423;
    case RegionId::lune: return 0.507306;
    case RegionId::rational: return 0.349865;
    case RegionId::lemniscate: return 0.253653;
    case RegionId::sine: return 0.395735;
    case RegionId::nephroid: return 0.34641;
    case RegionId::sigmoid: return 0.273716;
  }
  return std::nullopt;
}

std::optional<double> exact_radius(RegionId id) {
  const double sin1 = std::sin(1.0);
  switch (id) {
    case RegionId::halfplane:
      return 1.0 / sqrt3;
    case RegionId::exp:
      return sqrt3 / 4.0 *
             (3.0 - 3.0 * e + std::sqrt(1.0 - 10.0 * e + 9.0 * e * e));
    case RegionId::lemniscate:
      return (2.0 * sqrt3 - std::sqrt(6.0)) / 4.0;
    case RegionId::sine:
      return sqrt3 * sin1 / (2.0 + 2.0 * sin1);
    case RegionId::nephroid:
      return sqrt3 / 5.0;
    case RegionId::sigmoid:
      return sqrt3 * (e - 1.0) / (4.0 * e);
    default:
      return std::nullopt;
  }
}

bool sharpness_claimed(RegionId id) {
  switch (id) {
    case RegionId::exp:
    case RegionId::cardioid:
    case RegionId::lune:
    case RegionId::rational:
      return true;
    default:
      return false;
  }
}

double check_sharpness(RegionId id) {
  if (!sharpness_claimed(id)) {
    throw UnsupportedError("sharpness is not claimed for region " +
                           std::string(to_string(id)));
  }
  if (id == RegionId::lune) {
    const Complex w = distortion::extremal_ratio(lune_touch_point());
    return std::abs(std::abs(w * w - 1.0) - 2.0 * std::abs(w));
  }
  const double radius = solve_closed_form(id).value;
  const Complex w = distortion::extremal_ratio(radius);
  switch (id) {
    case RegionId::exp:
      return std::abs(std::abs(std::log(w)) - 1.0);
    case RegionId::cardioid:
      return std::abs(w - 1.0 / 3.0);
    case RegionId::rational:
      return std::abs(w - (2.0 * sqrt2 - 2.0));
    default:
      break;
  }
  throw UnsupportedError("sharpness check missing for region");
}

bool boundary_flip(RegionId id, double radius) {
  try {
    const double lower = std::max(0.0, radius - kFlipEpsilon);
    const double upper = radius + kFlipEpsilon;
    return disc_in_closed_region(id, lower) &&
           !disc_in_closed_region(id, upper);
  } catch (const Error&) {
    return false;
  }
}

std::vector<CheckResult> core_invariant_checks() {
  std::vector<CheckResult> checks;
  const double limit = distortion::kStarlikeRadius - 1e-9;
  constexpr int kGrid = 10000;

  double identity = 0.0;
  int gap_violations = 0;
  int center_violations = 0;
  int rho_violations = 0;
  double identity_map_excess = -1.0;
  double prev_gap = 0.0, prev_center = 0.0, prev_rho = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double r = limit * i / (kGrid - 1);
    const double c = distortion::center(r);
    const double p = distortion::rho(r);
    const double h = distortion::gap(r);
    identity = std::max(identity, std::abs(c - p - h));
    identity_map_excess = std::max(identity_map_excess, std::abs(1.0 - c) - p);
    if (i > 0) {
      gap_violations += (h >= prev_gap);
      center_violations += (c <= prev_center);
      rho_violations += (p <= prev_rho);
    }
    prev_gap = h;
    prev_center = c;
    prev_rho = p;
  }
  checks.push_back(below("gap_identity", identity, 1e-12));
  checks.push_back(at_most("gap_decreasing", gap_violations, 0.0));
  checks.push_back(at_most("center_increasing", center_violations, 0.0));
  checks.push_back(at_most("rho_increasing", rho_violations, 0.0));
  checks.push_back(at_most("identity_map_disc_bound", identity_map_excess, 0.0));

  double disc_excess = -1.0;
  for (double r : {0.1, 0.3, 0.5, 0.55}) {
    const distortion::DistortionDisc disc = distortion::DistortionDisc::at(r);
    for (int j = 0; j < 2048; ++j) {
      const Complex z = std::polar(r, 2.0 * pi * j / 2048);
      const double excess =
          std::abs(distortion::extremal_ratio(z) - disc.center) - disc.radius;
      disc_excess = std::max(disc_excess, excess);
    }
  }
  checks.push_back(at_most("extremal_disc_bound", disc_excess, 1e-9));

  const double sup = distortion::bloch_sup(distortion::extremal_function, 512,
                                     distortion::ComplexMap(distortion::extremal_derivative));
  checks.push_back(at_most("extremal_bloch_sup", sup - 1.0, 1e-6));

  const double normalization =
      std::max({std::abs(distortion::extremal_function(0.0)),
                std::abs(distortion::extremal_derivative(0.0) - 1.0),
                std::abs(distortion::extremal_ratio(0.0) - 1.0)});
  checks.push_back(below("extremal_normalization", normalization, 1e-15));

  const double zs = lune_touch_point();
  checks.push_back(
      below("anchor_center_sqrt2", std::abs(distortion::center(zs) - sqrt2), 1e-12));
  checks.push_back(
      below("anchor_rho_one", std::abs(distortion::rho(zs) - 1.0), 1e-12));
  return checks;
}

std::vector<CheckResult> region_invariant_checks(RegionId id) {
  std::vector<CheckResult> checks;
  const RegionSpec& spec = region_spec(id);

  if (spec.branch_point) {
    constexpr double eps = 1e-8;
    const double bp = *spec.branch_point;
    const double jump =
        std::abs(inscribed_radius(id, bp - eps) - inscribed_radius(id, bp + eps));
    checks.push_back(below("branch_continuity", jump, 2.0 * eps));
  }

  int unsound = 0;
  int loose = 0;
  for (double c : interior_centers(spec.sample_interval)) {
    const double rc = inscribed_radius(id, c);
    bool escapes = false;
    for (int j = 0; j < 256; ++j) {
      const Complex dir = std::polar(1.0, 2.0 * pi * j / 256);
      if (membership(id, c + 0.999 * rc * dir) == Membership::outside) ++unsound;
      if (membership(id, c + 1.01 * rc * dir) == Membership::outside) {
        escapes = true;
      }
    }
    if (!escapes) ++loose;
  }
  checks.push_back(at_most("inclusion_soundness", unsound, 0.0));
  checks.push_back(at_most("inclusion_tightness", loose, 0.0));

  const int winding = winding_number(boundary(id, 4096), Complex(1.0, 0.0));
  checks.push_back(flag("winding_about_one", winding == 1));
  return checks;
}

bool CertEntry::passed() const {
  if (!errors.empty()) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

CertEntry certify_region(RegionId id, const CertOptions& options) {
  CertEntry entry;
  entry.region = id;
  auto attempt = [&](auto&& fn) {
    try {
      fn();
    } catch (const std::exception& ex) {
      entry.errors.emplace_back(ex.what());
    }
  };

  if (has_closed_form(id)) {
    attempt([&] { entry.closed_form = solve_closed_form(id); });
  }
  attempt([&] { entry.branch = solve_branch(id, options.branch_tolerance); });
  attempt([&] {
    entry.oracle =
        solve_oracle(id, options.oracle_tolerance, options.oracle_rays);
  });

  const std::optional<RadiusResult>& primary =
      entry.closed_form ? entry.closed_form : entry.branch;
  if (!primary) {
    entry.errors.emplace_back("no certified radius");
    return entry;
  }
  const double radius = primary->value;
  entry.certified_radius = radius;
  auto& checks = entry.checks;

  if (entry.closed_form && entry.branch) {
    checks.push_back(below("closed_vs_branch",
                           std::abs(entry.closed_form->value - entry.branch->value),
                           1e-9));
  }
  if (entry.oracle) {
    checks.push_back(below("oracle_agreement",
                           std::abs(entry.oracle->value - radius),
                           kOracleAgreement));
  }
  for (const auto* result : {&entry.closed_form, &entry.branch}) {
    if (*result) {
      checks.push_back(below("residual_" + std::string(to_string((*result)->method)),
                             (*result)->residual, kResidualTolerance));
    }
  }
  if (const auto reported = reported_radius(id)) {
    checks.push_back(
        below("reported_value", std::abs(radius - *reported), kReportedTolerance));
  }
  if (const auto exact = exact_radius(id)) {
    checks.push_back(
        below("exact_value", std::abs(radius - *exact), kExactTolerance));
  }
  checks.push_back(
      at_most("below_starlike_radius", radius - distortion::kStarlikeRadius, 1e-12));

  if (id == RegionId::exp) {
    // 9e^2 - 10e + 1 = 9(e - 1)^2 + 8(e - 1)
    const double lhs = 9.0 * e * e - 10.0 * e + 1.0;
    const double rhs = 9.0 * (e - 1.0) * (e - 1.0) + 8.0 * (e - 1.0);
    checks.push_back(below("discriminant_identity", std::abs(lhs - rhs), 1e-12));
  }
  if (entry.branch) {
    const double rb = entry.branch->value;
    const double c = distortion::center_extended(rb);
    const double p = distortion::rho_extended(rb);
    if (id == RegionId::lune) {
      checks.push_back(below("anchor_center", std::abs(c - sqrt2), kAnchorTolerance));
      checks.push_back(below("anchor_rho", std::abs(p - 1.0), kAnchorTolerance));
      checks.push_back(below("touch_point_equals_radius",
                             std::abs(lune_touch_point() - radius),
                             kAnchorTolerance));
    }
    if (id == RegionId::nephroid) {
      checks.push_back(
          below("anchor_center", std::abs(c - 5.0 / 4.0), kAnchorTolerance));
      checks.push_back(
          below("anchor_rho", std::abs(p - 5.0 / 12.0), kAnchorTolerance));
    }
    if (id == RegionId::lemniscate || id == RegionId::sine ||
        id == RegionId::nephroid || id == RegionId::sigmoid) {
      checks.push_back(below("right_extreme_identity",
                             std::abs(c + p - region_spec(id).right_extreme),
                             1e-9));
    }
  }

  if (sharpness_claimed(id)) {
    attempt([&] {
      entry.sharpness = check_sharpness(id);
      checks.push_back(below("sharpness", *entry.sharpness, kSharpnessTolerance));
    });
  }
  entry.flip = boundary_flip(id, radius);
  checks.push_back(flag("boundary_flip", entry.flip));

  for (auto& check : region_invariant_checks(id)) checks.push_back(std::move(check));
  return entry;
}

CertReport cross_validate(std::span<const RegionId> regions,
                          const CertOptions& options) {
  CertReport report;
  if (options.include_core_checks) report.core_checks = core_invariant_checks();
  for (RegionId id : regions) report.entries.push_back(certify_region(id, options));
  report.overall =
      std::all_of(report.core_checks.begin(), report.core_checks.end(),
                  [](const CheckResult& c) { return c.passed; }) &&
      std::all_of(report.entries.begin(), report.entries.end(),
                  [](const CertEntry& e) { return e.passed(); });
  return report;
}

}  // namespace blochrad

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blochrad/regions.hpp"
#include "blochrad/solver.hpp"

namespace blochrad {

inline constexpr double kFlipEpsilon = 1e-6;
inline constexpr int kFlipAngles = 4096;
inline constexpr double kSharpnessTolerance = 1e-9;
inline constexpr double kOracleAgreement = 5e-4;

// Point on the positive real axis at which the extremal ratio touches the
// lune boundary: (2 sqrt(3) - sqrt(6)) / 2.
double lune_touch_point();

// Published six-decimal radius for the regions that have one.
std::optional<double> reported_radius(RegionId id);
// Exact closed-form radius where one is known in surd form (half-plane,
// lemniscate, sine, nephroid, sigmoid, exp).
std::optional<double> exact_radius(RegionId id);

// Sharpness is only asserted for exp, cardioid, lune and rational.
bool sharpness_claimed(RegionId id);

// Defect of the extremal ratio w0 against the region boundary at the closed
// form radius (at lune_touch_point() for the lune). Throws UnsupportedError
// for regions without a sharpness claim.
double check_sharpness(RegionId id);

// True iff the distortion disc at R - 1e-6 stays in the closed region and the one
// at R + 1e-6 has a sampled point (4096 angles) strictly outside it.
bool boundary_flip(RegionId id, double radius);

struct CheckResult {
  std::string name;
  bool passed = false;
  // measured defect or count; compared against `tolerance`
  double value = 0.0;
  double tolerance = 0.0;
};

// Disc geometry and extremal-function properties that do not depend on a
// region: C - rho = h, monotonicity, the disc bound on w0, Bloch membership
// of f0, exact anchors.
std::vector<CheckResult> core_invariant_checks();

// Region catalog properties: branch continuity, inclusion soundness and
// tightness on a 50-center grid, winding of the boundary about 1.
std::vector<CheckResult> region_invariant_checks(RegionId id);

struct CertOptions {
  double branch_tolerance = kDefaultBranchTolerance;
  double oracle_tolerance = kDefaultOracleTolerance;
  int oracle_rays = kDefaultOracleRays;
  bool include_core_checks = true;
};

struct CertEntry {
  RegionId region;
  std::optional<RadiusResult> closed_form;
  std::optional<RadiusResult> branch;
  std::optional<RadiusResult> oracle;
  // nullopt when sharpness is not claimed for the region
  std::optional<double> sharpness;
  double certified_radius = 0.0;
  bool flip = false;
  std::vector<CheckResult> checks;
  // messages from solvers that threw
  std::vector<std::string> errors;

  bool passed() const;
};

struct CertReport {
  std::vector<CertEntry> entries;
  std::vector<CheckResult> core_checks;
  bool overall = false;
};

CertEntry certify_region(RegionId id, const CertOptions& options = {});

// Runs every solver, sharpness and invariant check for `regions`, in the
// order given. Failures are recorded, never thrown.
CertReport cross_validate(std::span<const RegionId> regions,
                          const CertOptions& options = {});

}  // namespace blochrad

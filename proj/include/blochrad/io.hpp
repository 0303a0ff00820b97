#pragma once

// Plot data and report serialization.
//
// CSV: header row, comma separated, LF line endings, reals printed with 17
// significant digits. Curves are written as columns t,re,im with the first
// sample repeated at t = 2 pi so the polyline closes; reports as
// region,method,radius,residual,sharpness,flip with one row per solver result.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "blochrad/certify.hpp"
#include "blochrad/regions.hpp"

namespace blochrad::io {

// %.17g
std::string format_real(double value);

// Circle |w - C(r)| = rho(r) sampled at n angles. Throws DomainError unless
// 0 < r < 1/sqrt(3) and n >= 3.
BoundaryCurve disc_curve(double r, std::size_t n);

// Image of |z| = r under the extremal ratio w0. Same preconditions.
BoundaryCurve extremal_curve(double r, std::size_t n);

void write_curve_csv(const BoundaryCurve& curve, std::ostream& out);
void write_report_csv(const CertReport& report, std::ostream& out);

// Aligned human-readable summary: one row per region with the three radii,
// sharpness and flip, followed by any failing checks and solver errors.
std::string format_report(const CertReport& report, int digits);

// Standalone SVG with the region boundary, the distortion disc at `radius` and the
// extremal image curve at `radius`. The viewBox is the boundary's bounding
// box padded by 10% on each side.
std::string render_svg(RegionId id, double radius);

// Writes `contents` to `path`; throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace blochrad::io

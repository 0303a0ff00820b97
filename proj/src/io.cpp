#include "blochrad/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "blochrad/distortion.hpp"
#include "blochrad/error.hpp"

namespace blochrad::io {

namespace {

using std::numbers::pi;

void require_plot_radius(double r, std::size_t n) {
  if (!(r > 0.0 && r < distortion::kStarlikeRadius)) {
    throw DomainError("curve radius must satisfy 0 < r < 1/sqrt(3)");
  }
  if (n < 3) throw DomainError("need at least 3 samples");
}

BoundaryCurve sample(std::size_t n, auto&& point_at) {
  BoundaryCurve curve;
  curve.params.reserve(n);
  curve.points.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    curve.params.push_back(t);
    curve.points.push_back(point_at(t));
  }
  return curve;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string format_short(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string polyline(const BoundaryCurve& curve, const char* color,
                     double stroke) {
  std::ostringstream out;
  out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
      << format_short(stroke) << "\" points=\"";
  for (std::size_t j = 0; j <= curve.size(); ++j) {
    const Complex& w = curve.points[j % curve.size()];
    if (j > 0) out << ' ';
    out << format_short(w.real()) << ',' << format_short(-w.imag());
  }
  out << "\"/>\n";
  return out.str();
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

BoundaryCurve disc_curve(double r, std::size_t n) {
  require_plot_radius(r, n);
  const distortion::DistortionDisc disc = distortion::DistortionDisc::at(r);
  return sample(n, [&](double t) { return disc.point(t); });
}

BoundaryCurve extremal_curve(double r, std::size_t n) {
  require_plot_radius(r, n);
  return sample(n, [&](double t) { return distortion::extremal_ratio(std::polar(r, t)); });
}

void write_curve_csv(const BoundaryCurve& curve, std::ostream& out) {
  out << "t,re,im\n";
  if (curve.points.empty()) return;
  for (std::size_t j = 0; j < curve.size(); ++j) {
    out << format_real(curve.params[j]) << ',' << format_real(curve.points[j].real())
        << ',' << format_real(curve.points[j].imag()) << '\n';
  }
  out << format_real(2.0 * pi) << ',' << format_real(curve.points.front().real())
      << ',' << format_real(curve.points.front().imag()) << '\n';
}

void write_report_csv(const CertReport& report, std::ostream& out) {
  out << "region,method,radius,residual,sharpness,flip\n";
  for (const CertEntry& entry : report.entries) {
    const std::string sharpness =
        entry.sharpness ? format_real(*entry.sharpness) : "not_claimed";
    for (const auto* result : {&entry.closed_form, &entry.branch, &entry.oracle}) {
      if (!*result) continue;
      out << to_string(entry.region) << ',' << to_string((*result)->method) << ','
          << format_real((*result)->value) << ','
          << format_real((*result)->residual) << ',' << sharpness << ','
          << (entry.flip ? "true" : "false") << '\n';
    }
  }
}

std::string format_report(const CertReport& report, int digits) {
  std::ostringstream out;
  const int width = std::max(12, digits + 5);
  auto cell = [&](const std::optional<RadiusResult>& r) {
    std::string s = r ? format_fixed(r->value, digits) : "-";
    s.resize(static_cast<std::size_t>(width), ' ');
    return s;
  };
  char line[256];
  std::snprintf(line, sizeof line, "%-12s%-*s%-*s%-*s%-12s%-6s%s\n", "region",
                width, "closed_form", width, "branch", width, "oracle",
                "sharpness", "flip", "status");
  out << line;
  for (const CertEntry& entry : report.entries) {
    const std::string sharp = entry.sharpness ? [&] {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1e", *entry.sharpness);
      return std::string(buf);
    }() : std::string("-");
    std::snprintf(line, sizeof line, "%-12s%s%s%s%-12s%-6s%s\n",
                  std::string(to_string(entry.region)).c_str(),
                  cell(entry.closed_form).c_str(), cell(entry.branch).c_str(),
                  cell(entry.oracle).c_str(), sharp.c_str(),
                  entry.flip ? "yes" : "no", entry.passed() ? "pass" : "FAIL");
    out << line;
  }
  for (const CheckResult& check : report.core_checks) {
    if (!check.passed) {
      out << "core check failed: " << check.name << " (value "
          << format_short(check.value) << ", tolerance "
          << format_short(check.tolerance) << ")\n";
    }
  }
  for (const CertEntry& entry : report.entries) {
    for (const CheckResult& check : entry.checks) {
      if (!check.passed) {
        out << to_string(entry.region) << ": check failed: " << check.name
            << " (value " << format_short(check.value) << ", tolerance "
            << format_short(check.tolerance) << ")\n";
      }
    }
    for (const std::string& error : entry.errors) {
      out << to_string(entry.region) << ": error: " << error << '\n';
    }
  }
  out << "overall: " << (report.overall ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::string render_svg(RegionId id, double radius) {
  if (!(radius > 0.0 && radius <= distortion::kStarlikeRadius)) {
    throw DomainError("render_svg: radius must satisfy 0 < R <= 1/sqrt(3)");
  }
  constexpr std::size_t kSamples = 720;
  const BoundaryCurve region = boundary(id, kSamples);
  const distortion::DistortionDisc disc = distortion::DistortionDisc::at_extended(radius);
  const BoundaryCurve disc_line =
      sample(kSamples, [&](double t) { return disc.point(t); });
  const BoundaryCurve image = sample(kSamples, [&](double t) {
    return distortion::extremal_ratio(std::polar(radius, t));
  });

  double xmin = region.points.front().real(), xmax = xmin;
  double ymin = region.points.front().imag(), ymax = ymin;
  for (const Complex& w : region.points) {
    xmin = std::min(xmin, w.real());
    xmax = std::max(xmax, w.real());
    ymin = std::min(ymin, w.imag());
    ymax = std::max(ymax, w.imag());
  }
  const double mx = 0.1 * (xmax - xmin);
  const double my = 0.1 * (ymax - ymin);
  const double vx = xmin - mx;
  const double vy = -ymax - my;  // SVG y axis points down
  const double vw = xmax - xmin + 2.0 * mx;
  const double vh = ymax - ymin + 2.0 * my;
  const double stroke = 0.004 * std::max(vw, vh);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_short(vx)
      << ' ' << format_short(vy) << ' ' << format_short(vw) << ' '
      << format_short(vh) << "\" width=\"800\" height=\""
      << static_cast<int>(std::lround(800.0 * vh / vw)) << "\">\n"
      << "  <title>" << to_string(id) << " region, R = " << format_short(radius)
      << "</title>\n"
      << polyline(region, "#1f77b4", stroke)
      << polyline(disc_line, "#d62728", stroke)
      << polyline(image, "#2ca02c", stroke) << "</svg>\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << contents;
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace blochrad::io

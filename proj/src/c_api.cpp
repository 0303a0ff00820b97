#include "blochrad/blochrad.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "blochrad/distortion.hpp"
#include "blochrad/certify.hpp"
#include "blochrad/error.hpp"
#include "blochrad/io.hpp"
#include "blochrad/regions.hpp"
#include "blochrad/solver.hpp"

struct br_curve {
  blochrad::BoundaryCurve curve;
};

struct br_report {
  blochrad::CertReport report;
};

namespace {

using namespace blochrad;

thread_local std::string g_last_error;

br_status fail(br_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
br_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return BR_OK;
  } catch (const DomainError& e) {
    return fail(BR_ERR_DOMAIN, e.what());
  } catch (const EvaluationError& e) {
    return fail(BR_ERR_EVALUATION, e.what());
  } catch (const ConvergenceError& e) {
    return fail(BR_ERR_CONVERGENCE, e.what());
  } catch (const IntervalError& e) {
    return fail(BR_ERR_INTERVAL, e.what());
  } catch (const UnsupportedError& e) {
    return fail(BR_ERR_UNSUPPORTED, e.what());
  } catch (const IoError& e) {
    return fail(BR_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BR_ERR_INTERNAL, "unknown error");
  }
}

bool valid_region(br_region region) {
  return static_cast<int>(region) >= 0 &&
         static_cast<int>(region) < BR_REGION_COUNT;
}

bool valid_method(br_method method) {
  return method == BR_METHOD_CLOSED_FORM || method == BR_METHOD_BRANCH ||
         method == BR_METHOD_ORACLE;
}

RegionId to_region(br_region region) { return static_cast<RegionId>(region); }

br_status invalid(const char* what) {
  return fail(BR_ERR_INVALID_ARGUMENT, what);
}

br_status copy_out(const std::string& text, char* buffer, std::size_t capacity,
                   std::size_t* needed) {
  if (needed) *needed = text.size() + 1;
  if (buffer == nullptr) return BR_OK;
  if (capacity < text.size() + 1) {
    if (capacity > 0) buffer[0] = '\0';
    return fail(BR_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return BR_OK;
}

br_status make_curve(br_curve** out, auto&& build) {
  if (out == nullptr) return invalid("null output pointer");
  *out = nullptr;
  return guarded([&] { *out = new br_curve{build()}; });
}

}  // namespace

extern "C" {

const char* br_version(void) { return "1.0.0"; }

const char* br_last_error(void) { return g_last_error.c_str(); }

const char* br_region_name(br_region region) {
  if (!valid_region(region)) return "unknown";
  // to_string returns views of string literals
  return to_string(to_region(region)).data();
}

br_status br_region_parse(const char* name, br_region* out) {
  if (name == nullptr || out == nullptr) return invalid("null argument");
  const auto id = parse_region(name);
  if (!id) return invalid((std::string("unknown region: ") + name).c_str());
  *out = static_cast<br_region>(*id);
  return BR_OK;
}

const char* br_method_name(br_method method) {
  if (!valid_method(method)) return "unknown";
  return to_string(static_cast<Method>(method)).data();
}

br_status br_method_parse(const char* name, br_method* out) {
  if (name == nullptr || out == nullptr) return invalid("null argument");
  const auto m = parse_method(name);
  if (!m) return invalid((std::string("unknown method: ") + name).c_str());
  *out = static_cast<br_method>(*m);
  return BR_OK;
}

br_status br_center(double r, double* out) {
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] { *out = distortion::center(r); });
}

br_status br_rho(double r, double* out) {
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] { *out = distortion::rho(r); });
}

br_status br_gap(double r, double* out) {
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] { *out = distortion::gap(r); });
}

br_status br_extremal_ratio(double re, double im, double* out_re,
                            double* out_im) {
  if (out_re == nullptr || out_im == nullptr) return invalid("null output pointer");
  return guarded([&] {
    const Complex w = distortion::extremal_ratio(Complex(re, im));
    *out_re = w.real();
    *out_im = w.imag();
  });
}

br_status br_extremal_bloch_sup(int density, double* out) {
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] {
    *out = distortion::bloch_sup(distortion::extremal_function, density,
                           distortion::ComplexMap(distortion::extremal_derivative));
  });
}

br_status br_membership_of(br_region region, double re, double im,
                           br_membership* out) {
  if (!valid_region(region)) return invalid("invalid region");
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] {
    *out = static_cast<br_membership>(membership(to_region(region), Complex(re, im)));
  });
}

br_status br_inscribed_radius(br_region region, double c, double* out) {
  if (!valid_region(region)) return invalid("invalid region");
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] { *out = inscribed_radius(to_region(region), c); });
}

int br_has_closed_form(br_region region) {
  return valid_region(region) && has_closed_form(to_region(region));
}

br_status br_solve(br_region region, br_method method, double tol,
                   br_radius_result* out) {
  if (!valid_region(region)) return invalid("invalid region");
  if (!valid_method(method)) return invalid("invalid method");
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] {
    const RegionId id = to_region(region);
    RadiusResult result;
    switch (method) {
      case BR_METHOD_CLOSED_FORM:
        result = solve_closed_form(id);
        break;
      case BR_METHOD_BRANCH:
        result = solve_branch(id, tol > 0.0 ? tol : kDefaultBranchTolerance);
        break;
      case BR_METHOD_ORACLE:
        result = solve_oracle(id, tol > 0.0 ? tol : kDefaultOracleTolerance);
        break;
    }
    *out = br_radius_result{region, method, result.value, result.residual,
                            result.iterations};
  });
}

br_status br_distance_to_complement(br_region region, double c, int angles,
                                    double* out) {
  if (!valid_region(region)) return invalid("invalid region");
  if (out == nullptr) return invalid("null output pointer");
  return guarded(
      [&] { *out = distance_to_complement(to_region(region), c, angles); });
}

int br_sharpness_claimed(br_region region) {
  return valid_region(region) && sharpness_claimed(to_region(region));
}

br_status br_check_sharpness(br_region region, double* out) {
  if (!valid_region(region)) return invalid("invalid region");
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] { *out = check_sharpness(to_region(region)); });
}

br_status br_boundary_flip(br_region region, double radius, int* out) {
  if (!valid_region(region)) return invalid("invalid region");
  if (out == nullptr) return invalid("null output pointer");
  return guarded([&] { *out = boundary_flip(to_region(region), radius) ? 1 : 0; });
}

br_status br_curve_boundary(br_region region, size_t n, br_curve** out) {
  if (!valid_region(region)) return invalid("invalid region");
  return make_curve(out, [&] { return boundary(to_region(region), n); });
}

br_status br_curve_disc(double r, size_t n, br_curve** out) {
  return make_curve(out, [&] { return io::disc_curve(r, n); });
}

br_status br_curve_extremal(double r, size_t n, br_curve** out) {
  return make_curve(out, [&] { return io::extremal_curve(r, n); });
}

size_t br_curve_size(const br_curve* curve) {
  return curve ? curve->curve.size() : 0;
}

br_status br_curve_point(const br_curve* curve, size_t index, double* t,
                         double* re, double* im) {
  if (curve == nullptr) return invalid("null curve");
  if (index >= curve->curve.size()) return invalid("curve index out of range");
  if (t) *t = curve->curve.params[index];
  if (re) *re = curve->curve.points[index].real();
  if (im) *im = curve->curve.points[index].imag();
  return BR_OK;
}

br_status br_curve_winding_number(const br_curve* curve, double re, double im,
                                  int* out) {
  if (curve == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = winding_number(curve->curve, Complex(re, im)); });
}

br_status br_curve_write_csv(const br_curve* curve, const char* path) {
  if (curve == nullptr || path == nullptr) return invalid("null argument");
  return guarded([&] {
    std::ostringstream out;
    io::write_curve_csv(curve->curve, out);
    io::write_file(path, out.str());
  });
}

void br_curve_free(br_curve* curve) { delete curve; }

void br_cert_options_default(br_cert_options* options) {
  if (options == nullptr) return;
  options->branch_tolerance = kDefaultBranchTolerance;
  options->oracle_tolerance = kDefaultOracleTolerance;
  options->oracle_rays = kDefaultOracleRays;
}

br_status br_cross_validate(const br_region* regions, size_t count,
                            const br_cert_options* options, br_report** out) {
  if (out == nullptr) return invalid("null output pointer");
  *out = nullptr;
  if (regions == nullptr && count > 0) return invalid("null region list");
  std::vector<RegionId> ids;
  for (size_t i = 0; i < count; ++i) {
    if (!valid_region(regions[i])) return invalid("invalid region");
    ids.push_back(to_region(regions[i]));
  }
  CertOptions cert;
  if (options) {
    cert.branch_tolerance = options->branch_tolerance;
    cert.oracle_tolerance = options->oracle_tolerance;
    cert.oracle_rays = options->oracle_rays;
  }
  return guarded([&] { *out = new br_report{cross_validate(ids, cert)}; });
}

int br_report_overall(const br_report* report) {
  return report && report->report.overall ? 1 : 0;
}

size_t br_report_size(const br_report* report) {
  return report ? report->report.entries.size() : 0;
}

br_status br_report_entry_at(const br_report* report, size_t index,
                             br_report_entry* out) {
  if (report == nullptr || out == nullptr) return invalid("null argument");
  if (index >= report->report.entries.size()) {
    return invalid("report index out of range");
  }
  const CertEntry& e = report->report.entries[index];
  br_report_entry entry{};
  entry.region = static_cast<br_region>(e.region);
  entry.has_closed_form = e.closed_form.has_value();
  entry.has_branch = e.branch.has_value();
  entry.has_oracle = e.oracle.has_value();
  entry.closed_form = e.closed_form ? e.closed_form->value : 0.0;
  entry.branch = e.branch ? e.branch->value : 0.0;
  entry.oracle = e.oracle ? e.oracle->value : 0.0;
  entry.certified_radius = e.certified_radius;
  entry.sharpness_claimed = e.sharpness.has_value();
  entry.sharpness = e.sharpness.value_or(0.0);
  entry.flip = e.flip;
  entry.passed = e.passed();
  for (const auto& check : e.checks) entry.failed_checks += !check.passed;
  entry.error_count = e.errors.size();
  *out = entry;
  return BR_OK;
}

br_status br_report_write_csv(const br_report* report, const char* path) {
  if (report == nullptr || path == nullptr) return invalid("null argument");
  return guarded([&] {
    std::ostringstream out;
    io::write_report_csv(report->report, out);
    io::write_file(path, out.str());
  });
}

br_status br_report_csv(const br_report* report, char* buffer, size_t capacity,
                        size_t* needed) {
  if (report == nullptr) return invalid("null report");
  std::string text;
  const br_status status = guarded([&] {
    std::ostringstream out;
    io::write_report_csv(report->report, out);
    text = out.str();
  });
  if (status != BR_OK) return status;
  return copy_out(text, buffer, capacity, needed);
}

br_status br_report_format(const br_report* report, int digits, char* buffer,
                           size_t capacity, size_t* needed) {
  if (report == nullptr) return invalid("null report");
  if (digits < 0 || digits > 15) return invalid("digits must be in [0, 15]");
  std::string text;
  const br_status status =
      guarded([&] { text = io::format_report(report->report, digits); });
  if (status != BR_OK) return status;
  return copy_out(text, buffer, capacity, needed);
}

void br_report_free(br_report* report) { delete report; }

br_status br_write_svg(br_region region, double radius, const char* path) {
  if (!valid_region(region)) return invalid("invalid region");
  if (path == nullptr) return invalid("null path");
  return guarded(
      [&] { io::write_file(path, io::render_svg(to_region(region), radius)); });
}

}  // extern "C"

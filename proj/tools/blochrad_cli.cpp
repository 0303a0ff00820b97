// blochrad: command-line front end over the C API.
//
//   blochrad radius   --region <id|all> [--method closed|branch|oracle]
//   blochrad verify   [--region <id|all>] [--output report.csv]
//   blochrad table    [--output table.csv]
//   blochrad boundary --region <id> [--samples n] [--output curve.csv]
//   blochrad curve    --r <r> [--samples n] [--output curve.csv]
//   blochrad disc     --r <r> [--samples n] [--output curve.csv]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical non-convergence or I/O failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blochrad/blochrad.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError {
  std::string message;
};

int exit_code_for(br_status status) {
  switch (status) {
    case BR_OK:
      return kExitOk;
    case BR_ERR_INVALID_ARGUMENT:
    case BR_ERR_DOMAIN:
    case BR_ERR_UNSUPPORTED:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

// Throws the status through to main() as an exit code.
struct StatusError {
  br_status status;
};

void check(br_status status) {
  if (status != BR_OK) throw StatusError{status};
}

std::vector<br_region> parse_regions(const std::string& name) {
  if (name == "all") {
    std::vector<br_region> all;
    for (int i = 0; i < BR_REGION_COUNT; ++i) all.push_back(static_cast<br_region>(i));
    return all;
  }
  br_region region;
  if (br_region_parse(name.c_str(), &region) != BR_OK) {
    throw UsageError{"unknown region '" + name + "'"};
  }
  return {region};
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

struct Report {
  br_report* handle = nullptr;
  ~Report() { br_report_free(handle); }
};

struct Curve {
  br_curve* handle = nullptr;
  ~Curve() { br_curve_free(handle); }
};

std::string report_text(const br_report* report, int digits) {
  std::size_t needed = 0;
  check(br_report_format(report, digits, nullptr, 0, &needed));
  std::string text(needed, '\0');
  check(br_report_format(report, digits, text.data(), text.size(), &needed));
  text.resize(needed - 1);
  return text;
}

void print_curve(const br_curve* curve, int digits) {
  std::printf("%-*s %-*s %s\n", digits + 6, "t", digits + 6, "re", "im");
  const std::size_t n = br_curve_size(curve);
  for (std::size_t j = 0; j < n; ++j) {
    double t = 0, re = 0, im = 0;
    check(br_curve_point(curve, j, &t, &re, &im));
    std::printf("%*.*f %*.*f %*.*f\n", digits + 6, digits, t, digits + 6, digits,
                re, digits + 6, digits, im);
  }
}

int emit_curve(br_status made, Curve& curve, const std::string& output,
               int digits) {
  check(made);
  if (!output.empty()) {
    check(br_curve_write_csv(curve.handle, output.c_str()));
  } else {
    print_curve(curve.handle, digits);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radii of starlikeness for the Bloch class"};
  app.require_subcommand(1);

  std::string region_name;
  std::string method_name;
  std::string output;
  std::string svg_path;
  double tol = 0.0;
  double r = 0.0;
  int samples = 256;
  int digits = 6;

  auto add_digits = [&](CLI::App* cmd) {
    cmd->add_option("--digits", digits, "Decimals to print (0-15)")
        ->check(CLI::Range(0, 15));
  };

  auto* radius = app.add_subcommand("radius", "Compute a radius");
  radius->add_option("--region", region_name, "Region id or 'all'")->required();
  radius->add_option("--method", method_name, "closed, branch or oracle");
  radius->add_option("--tol", tol, "Solver tolerance (default per method)");
  radius->add_option("--svg", svg_path, "Write a figure at the computed radius");
  add_digits(radius);

  auto* verify = app.add_subcommand("verify", "Certify radii against all checks");
  verify->add_option("--region", region_name, "Region id or 'all'")
      ->default_val("all");
  verify->add_option("--tol", tol, "Oracle tolerance");
  verify->add_option("--output", output, "Write the report as CSV");
  add_digits(verify);

  auto* table = app.add_subcommand("table", "Radii of every region by every method");
  table->add_option("--output", output, "Write the table as CSV");
  add_digits(table);

  auto* bnd = app.add_subcommand("boundary", "Sample a region boundary");
  bnd->add_option("--region", region_name, "Region id")->required();
  bnd->add_option("--samples", samples, "Number of samples")->check(CLI::Range(3, 1 << 24));
  bnd->add_option("--output", output, "Write CSV instead of printing");
  add_digits(bnd);

  auto* curve = app.add_subcommand("curve", "Image of |z| = r under zf0'/f0");
  curve->add_option("--r", r, "Radius in (0, 1/sqrt(3))")->required();
  curve->add_option("--samples", samples, "Number of samples")->check(CLI::Range(3, 1 << 24));
  curve->add_option("--output", output, "Write CSV instead of printing");
  add_digits(curve);

  auto* disc = app.add_subcommand("disc", "distortion disc |w - C(r)| = rho(r)");
  disc->add_option("--r", r, "Radius in (0, 1/sqrt(3))")->required();
  disc->add_option("--samples", samples, "Number of samples")->check(CLI::Range(3, 1 << 24));
  disc->add_option("--output", output, "Write CSV instead of printing");
  add_digits(disc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (radius->parsed()) {
      const auto regions = parse_regions(region_name);
      std::optional<br_method> forced;
      if (!method_name.empty()) {
        br_method m;
        if (br_method_parse(method_name.c_str(), &m) != BR_OK) {
          throw UsageError{"unknown method '" + method_name + "'"};
        }
        forced = m;
      }
      for (br_region region : regions) {
        const br_method method = forced.value_or(
            br_has_closed_form(region) ? BR_METHOD_CLOSED_FORM : BR_METHOD_BRANCH);
        br_radius_result result;
        check(br_solve(region, method, tol, &result));
        if (regions.size() == 1) {
          std::printf("%s\n", fixed(result.value, digits).c_str());
        } else {
          std::printf("%-12s%-13s%s\n", br_region_name(region),
                      br_method_name(method), fixed(result.value, digits).c_str());
        }
        if (!svg_path.empty() && regions.size() == 1) {
          check(br_write_svg(region, result.value, svg_path.c_str()));
        }
      }
      return kExitOk;
    }

    if (verify->parsed() || table->parsed()) {
      const auto regions = parse_regions(verify->parsed() ? region_name : "all");
      br_cert_options options;
      br_cert_options_default(&options);
      if (tol > 0.0) options.oracle_tolerance = tol;
      Report report;
      check(br_cross_validate(regions.data(), regions.size(), &options,
                              &report.handle));
      std::fputs(report_text(report.handle, digits).c_str(), stdout);
      if (!output.empty()) {
        check(br_report_write_csv(report.handle, output.c_str()));
      }
      if (verify->parsed() && !br_report_overall(report.handle)) {
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    Curve handle;
    if (bnd->parsed()) {
      const auto regions = parse_regions(region_name);
      if (regions.size() != 1) throw UsageError{"boundary needs a single region"};
      return emit_curve(br_curve_boundary(regions.front(),
                                          static_cast<size_t>(samples),
                                          &handle.handle),
                        handle, output, digits);
    }
    if (curve->parsed()) {
      return emit_curve(br_curve_extremal(r, static_cast<size_t>(samples),
                                          &handle.handle),
                        handle, output, digits);
    }
    if (disc->parsed()) {
      return emit_curve(
          br_curve_disc(r, static_cast<size_t>(samples), &handle.handle),
          handle, output, digits);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n\n" << app.help();
    return kExitUsage;
  } catch (const StatusError& e) {
    std::cerr << "error: " << br_last_error() << '\n';
    if (exit_code_for(e.status) == kExitUsage) std::cerr << '\n' << app.help();
    return exit_code_for(e.status);
  }
  return kExitUsage;
}

/*
 * C interface to the Bloch starlikeness-radius library.
 *
 * Every fallible call returns a br_status; on failure a description of the
 * most recent error on the calling thread is available from br_last_error().
 * Curves and reports are opaque handles owned by the caller and released with
 * the matching *_free function.
 */
#ifndef BLOCHRAD_H
#define BLOCHRAD_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BLOCHRAD_BUILDING)
#    define BLOCHRAD_API __declspec(dllexport)
#  else
#    define BLOCHRAD_API __declspec(dllimport)
#  endif
#else
#  define BLOCHRAD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
  BR_OK = 0,
  BR_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value or name */
  BR_ERR_DOMAIN = 2,           /* argument outside a formula's domain */
  BR_ERR_EVALUATION = 3,       /* singular or non-finite evaluation */
  BR_ERR_CONVERGENCE = 4,      /* solver did not reach its tolerance */
  BR_ERR_INTERVAL = 5,         /* disc center left the inscribed-disc interval */
  BR_ERR_UNSUPPORTED = 6,      /* operation not defined for the region */
  BR_ERR_IO = 7,
  BR_ERR_BUFFER_TOO_SMALL = 8,
  BR_ERR_INTERNAL = 9
} br_status;

typedef enum br_region {
  BR_REGION_HALFPLANE = 0,
  BR_REGION_EXP = 1,
  BR_REGION_CARDIOID = 2,
  BR_REGION_LUNE = 3,
  BR_REGION_RATIONAL = 4,
  BR_REGION_LEMNISCATE = 5,
  BR_REGION_SINE = 6,
  BR_REGION_NEPHROID = 7,
  BR_REGION_SIGMOID = 8
} br_region;

#define BR_REGION_COUNT 9

typedef enum br_method {
  BR_METHOD_CLOSED_FORM = 0,
  BR_METHOD_BRANCH = 1,
  BR_METHOD_ORACLE = 2
} br_method;

typedef enum br_membership {
  BR_INSIDE = 0,
  BR_BOUNDARY = 1,
  BR_OUTSIDE = 2
} br_membership;

typedef struct br_radius_result {
  br_region region;
  br_method method;
  double value;
  double residual;
  int iterations;
} br_radius_result;

typedef struct br_cert_options {
  double branch_tolerance;
  double oracle_tolerance;
  int oracle_rays;
} br_cert_options;

typedef struct br_report_entry {
  br_region region;
  int has_closed_form;
  int has_branch;
  int has_oracle;
  double closed_form;
  double branch;
  double oracle;
  double certified_radius;
  int sharpness_claimed;
  double sharpness; /* meaningful only when sharpness_claimed */
  int flip;
  int passed;
  size_t failed_checks;
  size_t error_count;
} br_report_entry;

typedef struct br_curve br_curve;
typedef struct br_report br_report;

BLOCHRAD_API const char* br_version(void);
/* Message for the last failing call on this thread; "" if none. */
BLOCHRAD_API const char* br_last_error(void);

/* Names: halfplane exp cardioid lune rational lemniscate sine nephroid sigmoid */
BLOCHRAD_API const char* br_region_name(br_region region);
BLOCHRAD_API br_status br_region_parse(const char* name, br_region* out);
/* Names: closed_form (alias closed), branch, oracle */
BLOCHRAD_API const char* br_method_name(br_method method);
BLOCHRAD_API br_status br_method_parse(const char* name, br_method* out);

/* Disc geometry on 0 <= r < 1/sqrt(3). */
BLOCHRAD_API br_status br_center(double r, double* out);
BLOCHRAD_API br_status br_rho(double r, double* out);
BLOCHRAD_API br_status br_gap(double r, double* out);
BLOCHRAD_API br_status br_extremal_ratio(double re, double im, double* out_re,
                                         double* out_im);
BLOCHRAD_API br_status br_extremal_bloch_sup(int density, double* out);

BLOCHRAD_API br_status br_membership_of(br_region region, double re, double im,
                                        br_membership* out);
BLOCHRAD_API br_status br_inscribed_radius(br_region region, double c,
                                           double* out);

BLOCHRAD_API int br_has_closed_form(br_region region);
/* tol <= 0 selects the method's default tolerance. */
BLOCHRAD_API br_status br_solve(br_region region, br_method method, double tol,
                                br_radius_result* out);
BLOCHRAD_API br_status br_distance_to_complement(br_region region, double c,
                                                 int angles, double* out);

BLOCHRAD_API int br_sharpness_claimed(br_region region);
BLOCHRAD_API br_status br_check_sharpness(br_region region, double* out);
BLOCHRAD_API br_status br_boundary_flip(br_region region, double radius,
                                        int* out);

/* Curves sampled at t_j = 2 pi j / n. */
BLOCHRAD_API br_status br_curve_boundary(br_region region, size_t n,
                                         br_curve** out);
BLOCHRAD_API br_status br_curve_disc(double r, size_t n, br_curve** out);
BLOCHRAD_API br_status br_curve_extremal(double r, size_t n, br_curve** out);
BLOCHRAD_API size_t br_curve_size(const br_curve* curve);
BLOCHRAD_API br_status br_curve_point(const br_curve* curve, size_t index,
                                      double* t, double* re, double* im);
BLOCHRAD_API br_status br_curve_winding_number(const br_curve* curve, double re,
                                               double im, int* out);
BLOCHRAD_API br_status br_curve_write_csv(const br_curve* curve,
                                          const char* path);
BLOCHRAD_API void br_curve_free(br_curve* curve);

BLOCHRAD_API void br_cert_options_default(br_cert_options* options);
/* options may be NULL for defaults. */
BLOCHRAD_API br_status br_cross_validate(const br_region* regions, size_t count,
                                         const br_cert_options* options,
                                         br_report** out);
BLOCHRAD_API int br_report_overall(const br_report* report);
BLOCHRAD_API size_t br_report_size(const br_report* report);
BLOCHRAD_API br_status br_report_entry_at(const br_report* report, size_t index,
                                          br_report_entry* out);
BLOCHRAD_API br_status br_report_write_csv(const br_report* report,
                                           const char* path);
/* Copies the CSV (or the aligned text table) into buffer, NUL terminated.
   *needed receives the required capacity including the terminator; with
   buffer == NULL only *needed is set. */
BLOCHRAD_API br_status br_report_csv(const br_report* report, char* buffer,
                                     size_t capacity, size_t* needed);
BLOCHRAD_API br_status br_report_format(const br_report* report, int digits,
                                        char* buffer, size_t capacity,
                                        size_t* needed);
BLOCHRAD_API void br_report_free(br_report* report);

/* Region boundary, distortion disc at radius and extremal image curve. */
BLOCHRAD_API br_status br_write_svg(br_region region, double radius,
                                    const char* path);

#ifdef __cplusplus
}
#endif

#endif /* BLOCHRAD_H */

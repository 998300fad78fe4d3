#ifndef NILORBIT_H
#define NILORBIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NilorbitStatus {
  NILORBIT_STATUS_OK = 0,
  NILORBIT_STATUS_NULL_ARGUMENT = 1,
  NILORBIT_STATUS_INVALID_UTF8 = 2,
  // Malformed or invalid input; the error pointer locates the fault.
  NILORBIT_STATUS_INVALID_INPUT = 3,
  // Input is valid but no verdict was reached.
  NILORBIT_STATUS_INCONCLUSIVE = 4,
  // A selftest check failed; the result JSON is still returned.
  NILORBIT_STATUS_CHECK_FAILED = 5,
  NILORBIT_STATUS_PANIC = 6,
} NilorbitStatus;

// A parsed and validated problem file.
typedef struct NilorbitProblem NilorbitProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a problem file. On success `*out` receives a handle owned by the caller.
//
// # Safety
// `json` must be a NUL-terminated string and `out` valid for a pointer write.
enum NilorbitStatus nilorbit_problem_parse(const char *json, struct NilorbitProblem **out);

// # Safety
// `problem` must be null or a handle from `nilorbit_problem_parse` not yet freed.
void nilorbit_problem_free(struct NilorbitProblem *problem);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void nilorbit_string_free(char *s);

// The last error on this thread as JSON, or null. Valid until the next call on the thread.
const char *nilorbit_last_error(void);

// Library version as a static string.
const char *nilorbit_version(void);

// Weight spaces, real form, blocks and the `dE + dν` split.
//
// # Safety
// `problem` must be a live handle and `out_json` valid for a pointer write.
enum NilorbitStatus nilorbit_decompose(const struct NilorbitProblem *problem, char **out_json);

// Regularity of `point`, or of the problem's own points when `point` is null.
// `point` is `(a, b, …)` or a JSON array of field elements.
//
// # Safety
// `problem` must be a live handle, `point` null or NUL-terminated, `out_json` writable.
enum NilorbitStatus nilorbit_regular(const struct NilorbitProblem *problem,
                                     const char *point,
                                     char **out_json);

// # Safety
// `problem` must be a live handle and `out_json` valid for a pointer write.
enum NilorbitStatus nilorbit_dichotomy(const struct NilorbitProblem *problem,
                                       size_t samples,
                                       uint64_t seed,
                                       int64_t coordinate_bound,
                                       char **out_json);

// Type I / antiliminary classification from a matrix or spectrum problem.
//
// # Safety
// `problem` must be a live handle and `out_json` valid for a pointer write.
enum NilorbitStatus nilorbit_axb(const struct NilorbitProblem *problem, char **out_json);

// Float recurrence score along `x_1`, with a grid of `steps` orbit samples of the given radius.
//
// # Safety
// `problem` must be a live handle, `point` NUL-terminated, `out_json` writable.
enum NilorbitStatus nilorbit_orbit_sample(const struct NilorbitProblem *problem,
                                          const char *point,
                                          double radius,
                                          size_t steps,
                                          double t_min,
                                          double t_max,
                                          double epsilon,
                                          char **out_json);

// Runs the bundled fixtures. Returns `CheckFailed` with the full result when a check fails.
//
// # Safety
// `out_json` must be valid for a pointer write.
enum NilorbitStatus nilorbit_selftest(uint64_t seed, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NILORBIT_H */

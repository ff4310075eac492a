#ifndef DGIN_H
#define DGIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DginStatus {
  DGIN_STATUS_OK = 0,
  DGIN_STATUS_PARSE = 1,
  DGIN_STATUS_DIMENSION = 2,
  DGIN_STATUS_UNDEFINED_MIN = 3,
  DGIN_STATUS_ADMISSIBILITY = 4,
  DGIN_STATUS_RESOURCE = 5,
  DGIN_STATUS_UNSUPPORTED = 6,
  DGIN_STATUS_PRECONDITION = 7,
  DGIN_STATUS_GENERICITY = 8,
  DGIN_STATUS_PARAMETER = 9,
  DGIN_STATUS_NOT_STABILIZED = 10,
  DGIN_STATUS_NULL_POINTER = 11,
  DGIN_STATUS_INVALID_UTF8 = 12,
  DGIN_STATUS_OUT_OF_RANGE = 13,
  DGIN_STATUS_PANIC = 14,
} DginStatus;

typedef enum DginVerdict {
  DGIN_VERDICT_LESS = 0,
  DGIN_VERDICT_GREATER = 1,
  DGIN_VERDICT_EQUAL = 2,
  DGIN_VERDICT_INCOMPARABLE = 3,
} DginVerdict;

// Opaque census of saturated Borel ideals with its `≺≺`-maximal members.
typedef struct DginCensus DginCensus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failing call on this thread. Empty if none; owned by the library.
const char *dgin_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void dgin_string_free(char *s);

// Gotzmann number of the Hilbert polynomial `poly`, e.g. `"7t-5"`.
//
// # Safety
// `poly` must be a NUL-terminated string; `out_number` must be writable.
enum DginStatus dgin_gotzmann_number(const char *poly, uintptr_t *out_number);

// Enumerates the census of `poly` in `n`-dimensional projective space and compares its
// terms under `order` (`lex`, `deglex`, `degrevlex` or `weight:w0,…,wn`).
//
// # Safety
// `poly` and `order` must be NUL-terminated strings; `out_census` must be writable.
enum DginStatus dgin_census_new(const char *poly,
                                uintptr_t n,
                                const char *order,
                                struct DginCensus **out_census);

// # Safety
// `c` must be null or a handle from [`dgin_census_new`], not yet freed.
void dgin_census_free(struct DginCensus *c);

// Number of census members; 0 for a null handle.
//
// # Safety
// `c` must be null or a live handle.
uintptr_t dgin_census_count(const struct DginCensus *c);

// Gotzmann number of the census polynomial; 0 for a null handle.
//
// # Safety
// `c` must be null or a live handle.
uint32_t dgin_census_degree(const struct DginCensus *c);

// Minimal generators of member `index`, comma separated. Free with [`dgin_string_free`].
//
// # Safety
// `c` must be a live handle; `out_text` must be writable.
enum DginStatus dgin_census_generators(const struct DginCensus *c,
                                       uintptr_t index,
                                       char **out_text);

// Number of `≺≺`-maximal members; 0 for a null handle.
//
// # Safety
// `c` must be null or a live handle.
uintptr_t dgin_census_maximal_count(const struct DginCensus *c);

// Census index of the `k`-th maximal member.
//
// # Safety
// `c` must be a live handle; `out_index` must be writable.
enum DginStatus dgin_census_maximal(const struct DginCensus *c, uintptr_t k, uintptr_t *out_index);

// Lower bounds on the number of components. `out_refined` is set to 0 when the refined
// bound does not apply.
//
// # Safety
// `c` must be a live handle; both outputs must be writable.
enum DginStatus dgin_census_bounds(const struct DginCensus *c,
                                   uintptr_t *out_basic,
                                   uintptr_t *out_refined);

// Compares two degree slices, e.g. `"[x2^2, x1*x2]"`, in `n`-dimensional projective
// space under `order`.
//
// # Safety
// All strings must be NUL-terminated; `out_verdict` must be writable.
enum DginStatus dgin_compare(uintptr_t n,
                             const char *order,
                             const char *a,
                             const char *b,
                             enum DginVerdict *out_verdict);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DGIN_H */

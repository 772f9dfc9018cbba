#ifndef SP6_ORBITS_H
#define SP6_ORBITS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Sp6Status {
  SP6_STATUS_OK = 0,
  SP6_STATUS_INTERNAL = 1,
  SP6_STATUS_INVALID_INPUT = 2,
  SP6_STATUS_NOT_IN_X = 3,
  SP6_STATUS_UNSUPPORTED = 4,
  SP6_STATUS_SEARCH_EXHAUSTED = 5,
  SP6_STATUS_NULL_POINTER = 6,
} Sp6Status;

typedef enum Sp6Stratum {
  SP6_STRATUM_ZERO = 0,
  SP6_STRATUM_X0 = 1,
  SP6_STRATUM_X1 = 2,
  SP6_STRATUM_X2 = 3,
  SP6_STRATUM_X3 = 4,
} Sp6Stratum;

typedef enum Sp6Mode {
  SP6_MODE_SP6 = 0,
  SP6_MODE_SP6_GL1 = 1,
  SP6_MODE_GSP6_GL1 = 2,
} Sp6Mode;

/**
 * A ground field, `Q` or `F:p`.
 */
typedef struct Sp6Field Sp6Field;

/**
 * A point of X over a fixed field.
 */
typedef struct Sp6Vector Sp6Vector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a field from `"Q"` or `"F:p"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum Sp6Status sp6_field_new(const char *name, struct Sp6Field **out);

/**
 * # Safety
 * `f` must come from [`sp6_field_new`] and not be used afterwards.
 */
void sp6_field_free(struct Sp6Field *f);

/**
 * Parses a point (`wedge`, `terms` or tuple encoding) and checks it lies in X.
 *
 * # Safety
 * `f` must be a live field handle, `json` a NUL-terminated string and
 * `out` a valid pointer.
 */
enum Sp6Status sp6_vector_from_json(const struct Sp6Field *f,
                                    const char *json,
                                    struct Sp6Vector **out);

/**
 * # Safety
 * `v` must come from this library and not be used afterwards.
 */
void sp6_vector_free(struct Sp6Vector *v);

/**
 * J, grad J, covariant rank and stratum as JSON.
 *
 * # Safety
 * Handles must be live and `out` valid.
 */
enum Sp6Status sp6_j_json(const struct Sp6Field *f, const struct Sp6Vector *v, char **out);

/**
 * # Safety
 * Handles must be live and `out` valid.
 */
enum Sp6Status sp6_stratum(const struct Sp6Field *f,
                           const struct Sp6Vector *v,
                           enum Sp6Stratum *out);

/**
 * Orbit invariant and witness as JSON.
 *
 * # Safety
 * Handles must be live and `out` valid.
 */
enum Sp6Status sp6_classify_json(const struct Sp6Field *f,
                                 const struct Sp6Vector *v,
                                 enum Sp6Mode mode,
                                 uint64_t seed,
                                 char **out);

/**
 * Reduction word and canonical tuple as JSON.
 *
 * # Safety
 * Handles must be live and `out` valid.
 */
enum Sp6Status sp6_reduce_json(const struct Sp6Field *f,
                               const struct Sp6Vector *v,
                               uint64_t seed,
                               char **out);

/**
 * Applies `{"g": matrix}` or `{"word": [...]}` to `v`, producing a new vector.
 *
 * # Safety
 * Handles must be live, `g_json` NUL-terminated and `out` valid.
 */
enum Sp6Status sp6_act(const struct Sp6Field *f,
                       const struct Sp6Vector *v,
                       const char *g_json,
                       struct Sp6Vector **out);

/**
 * Census over `F_p`: full enumeration when `full` (p = 3 only), otherwise
 * `samples` random vectors.
 *
 * # Safety
 * `out` must be valid.
 */
enum Sp6Status sp6_census_json(uint64_t p,
                               bool full,
                               uint64_t samples,
                               size_t jobs,
                               uint64_t seed,
                               char **out);

/**
 * Message for the last failed call on this thread; empty after success.
 * Valid until the next call into the library on the same thread.
 */
const char *sp6_last_error_message(void);

/**
 * # Safety
 * `s` must be a string returned by this library and not yet freed.
 */
void sp6_string_free(char *s);

/**
 * Library version, a static string.
 */
const char *sp6_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SP6_ORBITS_H */

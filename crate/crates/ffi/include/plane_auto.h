#ifndef PLANE_AUTO_H
#define PLANE_AUTO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes. Values 1 to 12 match the error codes of the library and
 * the command-line tool.
 */
typedef enum PaStatus {
  PA_STATUS_OK = 0,
  PA_STATUS_DIVISION_BY_ZERO = 1,
  PA_STATUS_DEGREE_CAP_EXCEEDED = 2,
  PA_STATUS_NOT_UNIMODULAR = 3,
  PA_STATUS_NOT_AN_AUTOMORPHISM = 4,
  PA_STATUS_IN_U = 5,
  PA_STATUS_NOT_IN_FACTOR = 6,
  PA_STATUS_NOT_HENON = 7,
  PA_STATUS_NO_HENON_FORM = 8,
  PA_STATUS_SYNTAX = 9,
  PA_STATUS_SEMANTIC = 10,
  PA_STATUS_BAD_LITERAL = 11,
  PA_STATUS_INVALID_WORD = 12,
  PA_STATUS_NULL_POINTER = 100,
  PA_STATUS_INVALID_UTF8 = 101,
  PA_STATUS_PANIC = 102,
} PaStatus;

typedef enum PaVerdict {
  PA_VERDICT_ELEMENTARY = 0,
  PA_VERDICT_HENON = 1,
} PaVerdict;

/**
 * Opaque handle to a polynomial map.
 */
typedef struct PaMap PaMap;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses and evaluates an expression such as `"(x + y^2, y) * (y, -x)"`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum PaStatus pa_map_parse(const char *text, uint32_t degree_cap, struct PaMap **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `m` must be null or a handle not yet freed.
 */
void pa_map_free(struct PaMap *m);

/**
 * Canonical text form, which parses back to the same map.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_map_to_string(const struct PaMap *m, char **out);

/**
 * Diagrammatic product: the result applies `g` first. A `degree_cap` of 0
 * selects the default cap.
 *
 * # Safety
 * `g`, `h` must be live handles and `out` a valid pointer.
 */
enum PaStatus pa_map_compose(const struct PaMap *g,
                             const struct PaMap *h,
                             uint32_t degree_cap,
                             struct PaMap **out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_map_invert(const struct PaMap *g, uint32_t degree_cap, struct PaMap **out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_map_power(const struct PaMap *g,
                           int64_t n,
                           uint32_t degree_cap,
                           struct PaMap **out);

/**
 * Algebraic length.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_map_length(const struct PaMap *g, uintptr_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_map_classify(const struct PaMap *g, enum PaVerdict *out);

/**
 * Normal form as JSON `{"head": …, "reps": […]}`.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_map_normal_form_json(const struct PaMap *g, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum PaStatus pa_map_equal(const struct PaMap *a, const struct PaMap *b, bool *out);

/**
 * Runs every verification check. `samples` of 0 keeps each check's
 * default. Writes the JSON report and whether all checks passed.
 *
 * # Safety
 * `out` and `pass` must be valid pointers.
 */
enum PaStatus pa_verify_all_json(uint64_t seed, uintptr_t samples, char **out, bool *pass);

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *pa_last_error_message(void);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void pa_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PLANE_AUTO_H */

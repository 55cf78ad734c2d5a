#ifndef SCHUBERT_FFI_H
#define SCHUBERT_FFI_H

/* Generated by cbindgen from schubert-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum SchubertStatus {
  // The call succeeded and all output parameters are populated.
  SCHUBERT_STATUS_OK = 0,
  // A required pointer argument was null.
  SCHUBERT_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  SCHUBERT_STATUS_INVALID_UTF8 = 2,
  // The engine rejected the input; see `schubert_last_error_message`.
  SCHUBERT_STATUS_DOMAIN_ERROR = 3,
  // An internal invariant failed; see `schubert_last_error_message`.
  SCHUBERT_STATUS_INTERNAL_ERROR = 4,
} SchubertStatus;

// Output encoding for rendered values.
typedef enum SchubertFormat {
  SCHUBERT_FORMAT_TEXT = 0,
  SCHUBERT_FORMAT_JSON = 1,
  SCHUBERT_FORMAT_CSV = 2,
} SchubertFormat;

// Opaque handle to an integer-coefficient polynomial.
typedef struct SchubertPoly SchubertPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the most recent failing call on this thread. The pointer
// stays valid until the next failing call; never free it.
const char *schubert_last_error_message(void);

// Parses a polynomial from the CLI grammar, e.g. `"x1^3*x2^2 - 2*x3"`.
//
// # Safety
// `text` must be a valid C string and `out` a valid pointer.
enum SchubertStatus schubert_poly_parse(const char *text, struct SchubertPoly **out);

// The Schubert polynomial of a permutation given in one-line notation
// (`"4312"`, `"10,2,..."`) or as a word (`"w:2,1,3,2,1"`).
//
// # Safety
// `w` must be a valid C string and `out` a valid pointer.
enum SchubertStatus schubert_poly_schubert(const char *w, struct SchubertPoly **out);

// Applies the skew divided difference operator `d_{w/v}` to `f`.
//
// # Safety
// `w` and `v` must be valid C strings; `f` a live handle; `out` valid.
enum SchubertStatus schubert_skew_apply(const char *w,
                                        const char *v,
                                        const struct SchubertPoly *f,
                                        struct SchubertPoly **out);

// The skew Schubert polynomial `S_{w/v}` in `n` variables.
//
// # Safety
// `w` and `v` must be valid C strings and `out` a valid pointer.
enum SchubertStatus schubert_skew_schubert(const char *w,
                                           const char *v,
                                           size_t n,
                                           struct SchubertPoly **out);

// The key polynomial of a composition (`"c:0,2,1"` or `"0,2,1"`); with a
// non-null `v` the skew key polynomial `k_{alpha/v}`.
//
// # Safety
// `alpha` must be a valid C string, `v` null or a valid C string, `out`
// a valid pointer.
enum SchubertStatus schubert_key(const char *alpha, const char *v, struct SchubertPoly **out);

// Reduces `f` modulo the ideal of positive-degree symmetric polynomials
// in `n` variables.
//
// # Safety
// `f` must be a live handle and `out` a valid pointer.
enum SchubertStatus schubert_reduce(const struct SchubertPoly *f,
                                    size_t n,
                                    struct SchubertPoly **out);

// Renders `f` in the requested format. The returned string must be
// released with `schubert_string_free`.
//
// # Safety
// `f` must be a live handle and `out` a valid pointer.
enum SchubertStatus schubert_poly_render(const struct SchubertPoly *f,
                                         enum SchubertFormat format,
                                         char **out);

// The structure-constant table of `S_u * S_v` in `n` variables as a JSON
// array of `{window, coefficient}` records. Release the string with
// `schubert_string_free`.
//
// # Safety
// `u` and `v` must be valid C strings and `out` a valid pointer.
enum SchubertStatus schubert_constants_json(const char *u, const char *v, size_t n, char **out);

// Exact equality of two polynomials. Returns 1, 0, or -1 when a handle
// is null.
//
// # Safety
// `a` and `b` must be live handles or null.
int32_t schubert_poly_equal(const struct SchubertPoly *a, const struct SchubertPoly *b);

// Releases a polynomial handle. Null is a no-op.
//
// # Safety
// `p` must be a handle returned by this library, released at most once.
void schubert_poly_free(struct SchubertPoly *p);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be a string returned by this library, released at most once.
void schubert_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUBERT_FFI_H */

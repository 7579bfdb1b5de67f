#ifndef SYLVAN3_H
#define SYLVAN3_H

/* Generated by cbindgen from the sylvan3-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every function in this library.
typedef enum Sylvan3Status {
  SYLVAN3_STATUS_OK = 0,
  SYLVAN3_STATUS_NULL_POINTER = 1,
  SYLVAN3_STATUS_INVALID_UTF8 = 2,
  SYLVAN3_STATUS_PARSE_ERROR = 3,
  SYLVAN3_STATUS_INVALID_ARGUMENT = 4,
  SYLVAN3_STATUS_COMPUTE_ERROR = 5,
} Sylvan3Status;

// Opaque handle to a monomial ideal in three variables.
typedef struct Sylvan3Ideal Sylvan3Ideal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parse a generator list ("x^3*z, xyz" or one monomial per line) into an
// ideal handle.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be a valid
// pointer.  The returned handle must be freed with [`sylvan3_ideal_free`].
enum Sylvan3Status sylvan3_ideal_parse(const char *text, struct Sylvan3Ideal **out);

// Release an ideal handle.  Passing NULL is a no-op.
//
// # Safety
// `ideal` must be a handle from [`sylvan3_ideal_parse`], not yet freed.
void sylvan3_ideal_free(struct Sylvan3Ideal *ideal);

// Number of minimal generators.
//
// # Safety
// `ideal` must be a live handle; `out` must be valid.
enum Sylvan3Status sylvan3_ideal_generator_count(const struct Sylvan3Ideal *ideal, uintptr_t *out);

// Write the minimal generators as exponent triples into `buf`
// (3·generator_count u32 values, x,y,z per generator).
//
// # Safety
// `buf` must point to at least `len` writable u32 values.
enum Sylvan3Status sylvan3_ideal_generators(const struct Sylvan3Ideal *ideal,
                                            uint32_t *buf,
                                            uintptr_t len);

// Canonical generator list, e.g. "z, y^3, x*y".
//
// # Safety
// `out` receives a string owned by the caller; free it with
// [`sylvan3_string_free`].
enum Sylvan3Status sylvan3_ideal_render(const struct Sylvan3Ideal *ideal, char **out);

// Free summand degrees and ranks as a JSON document.
//
// # Safety
// As for [`sylvan3_ideal_render`].
enum Sylvan3Status sylvan3_betti_json(const struct Sylvan3Ideal *ideal, char **out);

// One differential block between degrees `a` (target) and `b` (source), as
// JSON.  `hom` is 0 or 1; `method` is 0 = fence sum, 1 = closed form,
// 2 = both (and compare).
//
// # Safety
// `a` and `b` must each point to three u32 exponents.
enum Sylvan3Status sylvan3_matrix_json(const struct Sylvan3Ideal *ideal,
                                       const uint32_t *a,
                                       const uint32_t *b,
                                       uint8_t hom,
                                       uint8_t method,
                                       char **out);

// The full resolution (summands and blocks) as JSON.
//
// # Safety
// As for [`sylvan3_betti_json`].
enum Sylvan3Status sylvan3_resolve_json(const struct Sylvan3Ideal *ideal,
                                        uint8_t method,
                                        char **out);

// Build the resolution and verify it (complex, degreewise exactness,
// Betti ranks, unimodularity).  Writes 1 into `out_ok` on success, 0 on a
// verification failure.
//
// # Safety
// `out_ok` must be a valid pointer.
enum Sylvan3Status sylvan3_verify(const struct Sylvan3Ideal *ideal,
                                  uint8_t method,
                                  uint8_t *out_ok);

// Compare the fence sum and the closed form on every summand block.
// Writes 1 into `out_equal` when all blocks agree.
//
// # Safety
// `out_equal` must be a valid pointer.
enum Sylvan3Status sylvan3_crosscheck(const struct Sylvan3Ideal *ideal, uint8_t *out_equal);

// Release a string returned by this library.  Passing NULL is a no-op.
//
// # Safety
// `s` must originate from this library and not have been freed.
void sylvan3_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYLVAN3_H */

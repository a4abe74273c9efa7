#ifndef SE3SYM_H
#define SE3SYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Se3ScrewKind {
  SE3_SCREW_KIND_SCREW = 0,
  SE3_SCREW_KIND_TRANSLATION = 1,
} Se3ScrewKind;

typedef enum Se3Status {
  SE3_STATUS_OK = 0,
  SE3_STATUS_NULL_POINTER = 1,
  SE3_STATUS_INVALID_ARGUMENT = 2,
  SE3_STATUS_GENERATOR_INDEX = 3,
  SE3_STATUS_NON_FINITE = 4,
  SE3_STATUS_ZERO_ELEMENT = 5,
  SE3_STATUS_OUTSIDE_DOMAIN = 6,
  SE3_STATUS_INTERNAL = 7,
  SE3_STATUS_PANIC = 8,
} Se3Status;

// Opaque result of the one-dimensional classifier.
typedef struct Se3Classification Se3Classification;

// Opaque element of se(3) with `f64` coefficients in the basis X1..X6.
typedef struct Se3Element Se3Element;

// Opaque sequence of adjoint factors `Ad(exp(s X_i))`, applied in order.
typedef struct Se3Word Se3Word;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Owned by the
// library and valid until the next call on the same thread.
const char *se3_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, freed at most once.
void se3_string_free(char *s);

// # Safety
// `coeffs` must point to 6 doubles; `out` must be writable.
enum Se3Status se3_element_new(const double *coeffs, struct Se3Element **out_elem);

// # Safety
// `elem` must be null or a handle from this library, freed at most once.
void se3_element_free(struct Se3Element *elem);

// # Safety
// `elem` must be a live handle; `coeffs` must point to 6 writable doubles.
enum Se3Status se3_element_coeffs(const struct Se3Element *elem, double *coeffs);

// `[a, b]` as a new handle.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum Se3Status se3_bracket(const struct Se3Element *a,
                           const struct Se3Element *b,
                           struct Se3Element **out_elem);

// Builds a word from parallel arrays of generator indices (1..=6) and parameters.
//
// # Safety
// `generators` and `params` must each point to `len` values (or be null when
// `len` is 0); `out` must be writable.
enum Se3Status se3_word_new(const uint32_t *generators,
                            const double *params,
                            size_t len,
                            struct Se3Word **out_word);

// # Safety
// `word` must be null or a handle from this library, freed at most once.
void se3_word_free(struct Se3Word *word);

// # Safety
// `word` and `elem` must be live handles; `out` must be writable.
enum Se3Status se3_apply_word(const struct Se3Word *word,
                              const struct Se3Element *elem,
                              struct Se3Element **out_elem);

// Writes the 36 entries of `Ad(exp(s X_i))` in row-major order.
//
// # Safety
// `matrix` must point to 36 writable doubles.
enum Se3Status se3_adjoint_matrix(uint32_t generator, double s, double *matrix);

// # Safety
// `elem` must be a live handle; `kind`, `pitch` and `scale` must be writable.
// `pitch` is set to NaN for pure translations.
enum Se3Status se3_canonicalize_screw(const struct Se3Element *elem,
                                      enum Se3ScrewKind *kind,
                                      double *pitch,
                                      double *scale);

// # Safety
// `elem` must be a live handle; `out` must be writable.
enum Se3Status se3_classify(const struct Se3Element *elem, struct Se3Classification **out_cls);

// # Safety
// `cls` must be null or a handle from this library, freed at most once.
void se3_classification_free(struct Se3Classification *cls);

// Case label such as `"A13"`; release with [`se3_string_free`].
//
// # Safety
// `cls` must be a live handle; `out` must be writable.
enum Se3Status se3_classification_case(const struct Se3Classification *cls, char **out_str);

// # Safety
// `cls` must be a live handle; `coeffs` must point to 6 writable doubles.
enum Se3Status se3_classification_representative(const struct Se3Classification *cls,
                                                 double *coeffs);

// Full classifier output as JSON; release with [`se3_string_free`].
//
// # Safety
// `cls` must be a live handle; `out` must be writable.
enum Se3Status se3_classification_json(const struct Se3Classification *cls, char **out_str);

// Claims report as JSON; release with [`se3_string_free`].
//
// # Safety
// `out` must be writable.
enum Se3Status se3_claims_report_json(size_t samples, uint64_t seed, char **out_str);

// Largest finite-difference residual of the Poisson equation for the field
// family `name` transformed by `exp(s X_k)`, over `samples` random points.
//
// # Safety
// `name` must be a nul-terminated string; `max_residual` must be writable.
enum Se3Status se3_verify_invariance(const char *name,
                                     uint32_t generator,
                                     double s,
                                     size_t samples,
                                     uint64_t seed,
                                     double *max_residual);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SE3SYM_H */

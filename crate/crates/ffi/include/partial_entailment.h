#ifndef PARTIAL_ENTAILMENT_H
#define PARTIAL_ENTAILMENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum PeStatus {
  PE_STATUS_OK = 0,
  PE_STATUS_NULL_POINTER = 1,
  PE_STATUS_INVALID_UTF8 = 2,
  PE_STATUS_PARSE_ERROR = 3,
  PE_STATUS_TOO_MANY_ATOMS = 4,
  PE_STATUS_INVALID_ARGUMENT = 5,
  PE_STATUS_INDEX_OUT_OF_RANGE = 6,
  // A Rust panic was caught at the boundary; this is a library bug.
  PE_STATUS_INTERNAL = 7,
} PeStatus;

typedef enum PeReason {
  PE_REASON_OK = 0,
  // `P` is inconsistent with the theory.
  PE_REASON_EMPTY_PI = 1,
  // Some prime implicant of `P` has no partner; see the refuter.
  PE_REASON_NO_PARTNER = 2,
} PeReason;

// Values accepted for the `kind` argument of [`pe_partially_entails`].
typedef enum PeKind {
  PE_KIND_WEAK = 0,
  PE_KIND_PLAIN = 1,
  PE_KIND_STRONG = 2,
} PeKind;

typedef struct PeFormula PeFormula;

typedef struct PePrimeImplicants PePrimeImplicants;

typedef struct PeTheory PeTheory;

// Outcome of a partial entailment query.
typedef struct PeVerdict {
  bool holds;
  enum PeReason reason;
} PeVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failed call on this thread, or `NULL` if the
// last call succeeded. Valid until the next call on the same thread.
const char *pe_last_error_message(void);

// Library version as a static string.
const char *pe_version(void);

// # Safety
// `s` must be `NULL` or a string returned by this library, not yet freed.
void pe_string_free(char *s);

// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum PeStatus pe_formula_parse(const char *text, struct PeFormula **out);

// Canonical printed form.
//
// # Safety
// `f` must be a live formula handle; `out` must be writable.
enum PeStatus pe_formula_to_string(const struct PeFormula *f, char **out);

// # Safety
// `f` must be `NULL` or a handle from [`pe_formula_parse`], not yet freed.
void pe_formula_free(struct PeFormula *f);

// A new, empty theory.
struct PeTheory *pe_theory_new(void);

// Parses one formula per line; `#` starts a comment.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum PeStatus pe_theory_parse(const char *text, struct PeTheory **out);

// Appends a copy of `f`.
//
// # Safety
// Both handles must be live; `t` must not be used concurrently.
enum PeStatus pe_theory_add(struct PeTheory *t, const struct PeFormula *f);

// Number of formulas, or 0 for `NULL`.
//
// # Safety
// `t` must be `NULL` or a live theory handle.
size_t pe_theory_len(const struct PeTheory *t);

// # Safety
// `t` must be `NULL` or a theory handle not yet freed.
void pe_theory_free(struct PeTheory *t);

// Prime implicants of `p` relative to `t`, in canonical order.
//
// # Safety
// `t` must be `NULL` or live, `p` live, `out` writable.
enum PeStatus pe_prime_implicants(const struct PeTheory *t,
                                  const struct PeFormula *p,
                                  struct PePrimeImplicants **out);

// # Safety
// `s` must be `NULL` or a live handle.
size_t pe_prime_implicants_count(const struct PePrimeImplicants *s);

// Printed form of the `index`-th implicant, such as `{x, !y}`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum PeStatus pe_prime_implicants_get(const struct PePrimeImplicants *s, size_t index, char **out);

// # Safety
// `s` must be `NULL` or a handle not yet freed.
void pe_prime_implicants_free(struct PePrimeImplicants *s);

// Decides whether `p` partially entails `q` under `t`. `kind` is a
// [`PeKind`] value. When `refuter` is not `NULL` it receives the printed
// refuting implicant, or `NULL` when there is none.
//
// # Safety
// `t` must be `NULL` or live; `p`, `q` live; `out` writable; `refuter`
// `NULL` or writable.
enum PeStatus pe_partially_entails(uint32_t kind,
                                   const struct PeTheory *t,
                                   const struct PeFormula *p,
                                   const struct PeFormula *q,
                                   struct PeVerdict *out,
                                   char **refuter);

// Whether `p` is trivial (inconsistent with or entailed by `t`).
//
// # Safety
// `t` must be `NULL` or live; `p` live; `out` writable.
enum PeStatus pe_is_trivial(const struct PeTheory *t, const struct PeFormula *p, bool *out);

// Classical entailment `t ⊨ p`.
//
// # Safety
// `t` must be `NULL` or live; `p` live; `out` writable.
enum PeStatus pe_entails(const struct PeTheory *t, const struct PeFormula *p, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARTIAL_ENTAILMENT_H */

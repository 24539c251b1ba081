#ifndef ARTIN_CONVEX_H
#define ARTIN_CONVEX_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes. The non-zero values below 10 match the CLI exit codes.
typedef enum AcStatus {
  AC_STATUS_OK = 0,
  AC_STATUS_PARSE = 2,
  AC_STATUS_PRECONDITION = 3,
  AC_STATUS_BOUND = 4,
  AC_STATUS_NULL_POINTER = 10,
  AC_STATUS_INVALID_UTF8 = 11,
  AC_STATUS_BUFFER_TOO_SMALL = 12,
  AC_STATUS_PANIC = 13,
} AcStatus;

// A parsed Coxeter graph together with its group.
typedef struct AcSystem AcSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a success.
// The pointer stays valid until the next call on the same thread.
const char *ac_last_error(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void ac_string_free(char *s);

// Parses a graph in the `gens:` / `edge:` text format. Finite groups up to
// the default element bound get a multiplication table.
//
// # Safety
// `graph_text` must be a NUL-terminated string and `out` writable.
enum AcStatus ac_system_new(const char *graph_text, struct AcSystem **out);

// # Safety
// `sys` must come from [`ac_system_new`] and not have been freed. NULL is ignored.
void ac_system_free(struct AcSystem *sys);

// Number of generators, or 0 for NULL.
//
// # Safety
// `sys` must be NULL or a live handle.
size_t ac_system_rank(const struct AcSystem *sys);

// ShortLex normal form of a Coxeter word, space separated, `1` for the identity.
//
// # Safety
// Pointers must be valid; `*out` receives a string to free with [`ac_string_free`].
enum AcStatus ac_reduce(const struct AcSystem *sys, const char *word, char **out);

// Projects an Artin word onto the parabolic subgroup on `target`
// (comma or space separated generator names).
//
// # Safety
// Pointers must be valid; `*out` receives a string to free with [`ac_string_free`].
enum AcStatus ac_project(const struct AcSystem *sys,
                         const char *word,
                         const char *target,
                         char **out);

// Runs every available convexity check on `word` and stores whether all passed.
//
// # Safety
// Pointers must be valid.
enum AcStatus ac_check_convexity(const struct AcSystem *sys,
                                 const char *word,
                                 const char *target,
                                 bool *passes);

// Cell counts of the Salvetti complex by dimension. A negative `radius`
// means the whole complex, which needs a finite group.
//
// `*len` receives the number of dimensions. If it exceeds `cap`, nothing is
// written to `cells` and the call returns `BufferTooSmall`.
//
// # Safety
// `cells` must hold `cap` entries; `len` and `euler` must be writable.
enum AcStatus ac_salvetti_census(const struct AcSystem *sys,
                                 int64_t radius,
                                 size_t *cells,
                                 size_t cap,
                                 size_t *len,
                                 int64_t *euler);

// Garside left normal form of a braid word such as `s1 s2^-1`.
//
// # Safety
// Pointers must be valid; `*out` receives a string to free with [`ac_string_free`].
enum AcStatus ac_braid_normal_form(size_t strands, const char *word, char **out);

// Decides whether two braid words are the same braid.
//
// # Safety
// Pointers must be valid.
enum AcStatus ac_braid_equal(size_t strands, const char *a, const char *b, bool *equal);

// Deletes every strand not listed in `keep` (1-based). The kept strands must
// return to kept positions.
//
// # Safety
// `keep` must hold `keep_len` entries; `*out` receives a string to free with [`ac_string_free`].
enum AcStatus ac_braid_delete(size_t strands,
                              const char *word,
                              const size_t *keep,
                              size_t keep_len,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARTIN_CONVEX_H */

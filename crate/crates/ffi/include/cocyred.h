#ifndef COCYRED_H
#define COCYRED_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum CocyredStatus {
  COCYRED_STATUS_OK = 0,
  COCYRED_STATUS_NULL_POINTER = 1,
  COCYRED_STATUS_INVALID_ARGUMENT = 2,
  COCYRED_STATUS_MODEL_NOT_PROVIDED = 3,
  COCYRED_STATUS_SPAN_TOO_LARGE = 4,
  COCYRED_STATUS_BUFFER_TOO_SMALL = 5,
  COCYRED_STATUS_INTERNAL = 6,
  COCYRED_STATUS_PANIC = 7,
} CocyredStatus;

typedef enum CocyredMode {
  // Normalized for degree 2, all generators otherwise.
  COCYRED_MODE_DEFAULT = 0,
  COCYRED_MODE_ALL = 1,
  COCYRED_MODE_NORMALIZED = 2,
} CocyredMode;

typedef enum CocyredPredicate {
  COCYRED_PREDICATE_IMPROPER = 0,
  COCYRED_PREDICATE_PROPER = 1,
  COCYRED_PREDICATE_HADAMARD2D = 2,
} CocyredPredicate;

// Opaque reduced basis: representatives followed by coboundaries.
typedef struct CocyredBasis CocyredBasis;

// Opaque finite group.
typedef struct CocyredGroup CocyredGroup;

typedef struct CocyredSearchResult {
  uint64_t examined;
  uint64_t hits;
} CocyredSearchResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or an empty string.
// The pointer stays valid until the next call on this thread.
const char *cocyred_last_error(void);

// Builds the group named by `spec` (for example `"g1:2"`).
//
// # Safety
// `spec` must be a NUL-terminated string and `out` a valid pointer.
enum CocyredStatus cocyred_group_new(const char *spec, struct CocyredGroup **out);

// # Safety
// `group` must come from [`cocyred_group_new`] or be null.
void cocyred_group_free(struct CocyredGroup *group);

// # Safety
// `group` and `out` must be valid pointers.
enum CocyredStatus cocyred_group_order(const struct CocyredGroup *group, size_t *out);

// Product of the 1-based elements `i` and `j`, as a 1-based index.
//
// # Safety
// `group` and `out` must be valid pointers.
enum CocyredStatus cocyred_group_multiply(const struct CocyredGroup *group,
                                          size_t i,
                                          size_t j,
                                          size_t *out);

// Reduces the built-in model of `spec` in `degree`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` a valid pointer.
enum CocyredStatus cocyred_basis_new(const char *spec,
                                     size_t degree,
                                     enum CocyredMode mode,
                                     struct CocyredBasis **out);

// # Safety
// `basis` must come from [`cocyred_basis_new`] or be null.
void cocyred_basis_free(struct CocyredBasis *basis);

// Dimension of the cohomology group.
//
// # Safety
// `basis` and `out` must be valid pointers.
enum CocyredStatus cocyred_basis_hdim(const struct CocyredBasis *basis, size_t *out);

// Number of basis elements, representatives and coboundaries together.
//
// # Safety
// `basis` and `out` must be valid pointers.
enum CocyredStatus cocyred_basis_len(const struct CocyredBasis *basis, size_t *out);

// Number of entries of each tensor, `|G|^n`.
//
// # Safety
// `basis` and `out` must be valid pointers.
enum CocyredStatus cocyred_basis_tensor_len(const struct CocyredBasis *basis, size_t *out);

// Writes the NUL-terminated label of element `index` (0-based) into `buf`.
//
// # Safety
// `basis` must be valid and `buf` must hold `len` bytes.
enum CocyredStatus cocyred_basis_label(const struct CocyredBasis *basis,
                                       size_t index,
                                       char *buf,
                                       size_t len);

// Writes the ±1 entries of element `index` (0-based) in row-major order.
//
// # Safety
// `basis` must be valid and `buf` must hold `len` entries.
enum CocyredStatus cocyred_basis_element(const struct CocyredBasis *basis,
                                         size_t index,
                                         int8_t *buf,
                                         size_t len);

// Writes the pointwise product of the elements selected by `mask`, one byte
// per basis element, nonzero meaning selected.
//
// # Safety
// `basis` must be valid, `mask` must hold `mask_len` bytes and `buf` `len` entries.
enum CocyredStatus cocyred_basis_combination(const struct CocyredBasis *basis,
                                             const uint8_t *mask,
                                             size_t mask_len,
                                             int8_t *buf,
                                             size_t len);

// Exhaustively counts combinations of the basis satisfying `predicate`.
// Fails with `SpanTooLarge` when the span exceeds `limit` combinations.
//
// # Safety
// `basis` and `out` must be valid pointers.
enum CocyredStatus cocyred_basis_search(const struct CocyredBasis *basis,
                                        enum CocyredPredicate predicate,
                                        size_t workers,
                                        uint64_t limit,
                                        struct CocyredSearchResult *out);

// Tests a ±1 tensor of `side^arity` entries given in row-major order.
//
// # Safety
// `signs` must hold `side^arity` entries and `out` must be valid.
enum CocyredStatus cocyred_tensor_test(const int8_t *signs,
                                       size_t side,
                                       size_t arity,
                                       enum CocyredPredicate predicate,
                                       bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COCYRED_H */

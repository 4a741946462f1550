#ifndef QUASIPROLONG_H
#define QUASIPROLONG_H

/* Generated by cbindgen from crates/ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QpStatus {
  QP_STATUS_OK = 0,
  QP_STATUS_NULL_POINTER,
  QP_STATUS_PARSE_ERROR,
  QP_STATUS_NOT_LATIN,
  QP_STATUS_ORDER_MISMATCH,
  QP_STATUS_UNSUPPORTED_ORDER,
  QP_STATUS_INVALID_PERMUTATION,
  QP_STATUS_NOT_COMPLETE,
  QP_STATUS_NOT_QUASICOMPLETE,
  QP_STATUS_OUT_OF_RANGE,
  QP_STATUS_BUFFER_TOO_SMALL,
  QP_STATUS_INVALID_UTF8,
  QP_STATUS_BRUALDI_COUNTEREXAMPLE,
  QP_STATUS_INTERNAL,
} QpStatus;

typedef enum QpViolationKind {
  QP_VIOLATION_KIND_NONE = 0,
  QP_VIOLATION_KIND_ROW_DUPLICATE,
  QP_VIOLATION_KIND_COLUMN_DUPLICATE,
  QP_VIOLATION_KIND_OUT_OF_RANGE,
} QpViolationKind;

typedef enum QpMappingKind {
  QP_MAPPING_KIND_COMPLETE = 0,
  QP_MAPPING_KIND_QUASICOMPLETE,
  QP_MAPPING_KIND_NEITHER,
} QpMappingKind;

typedef enum QpMethod {
  QP_METHOD_CLASSICAL = 0,
  QP_METHOD_BELYAVSKAYA,
  QP_METHOD_DERIYENKO_DUDEK,
} QpMethod;

/**
 * Opaque list of permutations.
 */
typedef struct QpMappingList QpMappingList;

/**
 * Opaque Latin square handle.
 */
typedef struct QpSquare QpSquare;

/**
 * First violation of the Latin property, row-major.
 */
typedef struct QpViolation {
  enum QpViolationKind kind;
  uint32_t row;
  uint32_t col;
  uint32_t symbol;
} QpViolation;

/**
 * Result of classifying a mapping. `defect`, `special`, `x1`, `x2` are set
 * only for quasicomplete mappings and 0 otherwise; `defect_size` is always set.
 */
typedef struct QpClassification {
  enum QpMappingKind kind;
  uint32_t defect_size;
  uint32_t defect;
  uint32_t special;
  uint32_t x1;
  uint32_t x2;
} QpClassification;

typedef struct QpScanReport {
  uint32_t order;
  uint64_t squares_scanned;
  uint32_t min_max_transversal;
  uint64_t witnesses;
} QpScanReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Never null; owned by the
 * library and valid until the next call.
 */
const char *qp_last_error(void);

/**
 * Parses the text format from a NUL-terminated string.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be writable.
 */
enum QpStatus qp_square_parse(const char *text, struct QpSquare **out);

/**
 * Builds a square from `order * order` row-major 1-based cells.
 *
 * # Safety
 * `cells` must point to `order * order` values; `out` must be writable.
 */
enum QpStatus qp_square_from_cells(const uint32_t *cells, size_t order, struct QpSquare **out);

/**
 * Checks `order * order` row-major cells. Returns `QP_STATUS_NOT_LATIN` and
 * fills `violation` (when non-null) if the array is not a Latin square.
 *
 * # Safety
 * `cells` must point to `order * order` values; `violation` may be null.
 */
enum QpStatus qp_validate_cells(const uint32_t *cells, size_t order, struct QpViolation *violation);

/**
 * Addition table of ℤ_n on symbols 1..n.
 *
 * # Safety
 * `out` must be writable.
 */
enum QpStatus qp_square_cyclic(size_t order, struct QpSquare **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum QpStatus qp_square_klein(struct QpSquare **out);

/**
 * Releases a square. Null is ignored.
 *
 * # Safety
 * `sq` must come from this library and not be used afterwards.
 */
void qp_square_free(struct QpSquare *sq);

/**
 * Order of the square, or 0 for null.
 *
 * # Safety
 * `sq` must be a live handle or null.
 */
size_t qp_square_order(const struct QpSquare *sq);

/**
 * The product `row · col`, 1-based.
 *
 * # Safety
 * `sq` must be a live handle; `out` must be writable.
 */
enum QpStatus qp_square_cell(const struct QpSquare *sq, size_t row, size_t col, uint32_t *out);

/**
 * Serializes to the text format. Free the result with [`qp_string_free`].
 * Returns null for a null handle.
 *
 * # Safety
 * `sq` must be a live handle or null.
 */
char *qp_square_to_text(const struct QpSquare *sq);

/**
 * # Safety
 * `s` must come from [`qp_square_to_text`] and not be used afterwards.
 */
void qp_string_free(char *s);

/**
 * Classifies the mapping with 1-based `images[0..len]`.
 *
 * # Safety
 * `sq` must be a live handle, `images` must hold `len` values, `out` writable.
 */
enum QpStatus qp_classify(const struct QpSquare *sq,
                          const uint32_t *images,
                          size_t len,
                          struct QpClassification *out);

/**
 * Complete or quasicomplete mappings in lexicographic order. `kind` is a
 * [`QpMappingKind`] other than `Neither`; `limit` 0 means no limit.
 *
 * # Safety
 * `sq` must be a live handle; `out` must be writable.
 */
enum QpStatus qp_find_mappings(const struct QpSquare *sq,
                               uint32_t kind,
                               size_t limit,
                               struct QpMappingList **out);

/**
 * # Safety
 * `list` must be a live handle or null.
 */
size_t qp_mapping_list_len(const struct QpMappingList *list);

/**
 * Copies the `index`-th mapping's 1-based images into `out[0..cap]`.
 *
 * # Safety
 * `list` must be a live handle; `out` must have room for `cap` values.
 */
enum QpStatus qp_mapping_list_get(const struct QpMappingList *list,
                                  size_t index,
                                  uint32_t *out,
                                  size_t cap);

/**
 * # Safety
 * `list` must come from [`qp_find_mappings`] and not be used afterwards.
 */
void qp_mapping_list_free(struct QpMappingList *list);

/**
 * Writes a maximum partial transversal as parallel 1-based `rows`/`cols`
 * arrays (each with room for `cap` values) and its length to `len`.
 *
 * # Safety
 * `sq` must be a live handle; `rows`, `cols` must hold `cap` values; `len` writable.
 */
enum QpStatus qp_max_partial_transversal(const struct QpSquare *sq,
                                         uint32_t *rows,
                                         uint32_t *cols,
                                         size_t cap,
                                         size_t *len);

/**
 * Prolongs `sq` with the mapping `images[0..len]`. `method` is a
 * [`QpMethod`]; `param` is Belyavskaya's
 * `a` or the special preimage `x1`, and is ignored by the classical method.
 *
 * # Safety
 * `sq` must be a live handle, `images` must hold `len` values, `out` writable.
 */
enum QpStatus qp_prolong(const struct QpSquare *sq,
                         uint32_t method,
                         const uint32_t *images,
                         size_t len,
                         uint32_t param,
                         struct QpSquare **out);

/**
 * Prolongs via a maximum partial transversal.
 *
 * # Safety
 * `sq` must be a live handle; `out` must be writable.
 */
enum QpStatus qp_prolong_any(const struct QpSquare *sq, struct QpSquare **out);

/**
 * Decides isotopy. On a positive verdict the witness is written to
 * `alpha`, `beta`, `gamma` (each with room for `order` values) when non-null.
 *
 * # Safety
 * `first`, `second` must be live handles; `isotopic` writable; witness
 * buffers null or sized for the order.
 */
enum QpStatus qp_are_isotopic(const struct QpSquare *first,
                              const struct QpSquare *second,
                              bool *isotopic,
                              uint32_t *alpha,
                              uint32_t *beta,
                              uint32_t *gamma);

/**
 * Scans all reduced squares of `order` (1..6). `threads` 0 uses the default pool.
 *
 * # Safety
 * `out` must be writable.
 */
enum QpStatus qp_brualdi_scan(size_t order, size_t threads, struct QpScanReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUASIPROLONG_H */

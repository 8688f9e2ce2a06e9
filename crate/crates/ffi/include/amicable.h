/* C interface for the amicable lattice parallelogram library. */

#ifndef AMICABLE_H
#define AMICABLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum AmStatus {
  /**
   * Operation completed; any out-pointers are filled.
   */
  AmStatus_Ok = 0,
  /**
   * A required pointer was null.
   */
  AmStatus_NullPointer = 1,
  /**
   * An argument was outside its documented range.
   */
  AmStatus_InvalidArgument = 2,
  /**
   * The queried sides do not form an amicable pair (not an error state;
   * out-values are untouched).
   */
  AmStatus_NotAmicable = 3,
  /**
   * An index was past the end of a result set.
   */
  AmStatus_OutOfRange = 4,
  /**
   * An internal invariant failed; indicates a bug.
   */
  AmStatus_Internal = 5,
} AmStatus;

/**
 * Opaque search result handle; release with [`am_report_free`].
 */
typedef struct AmSearchReport AmSearchReport;

/**
 * Opaque solution list handle; release with [`am_solution_list_free`].
 */
typedef struct AmSolutionList AmSolutionList;

/**
 * One solution of a rhombus equation. `family` is 0 for the even-k equation
 * (`k` holds κ, `m` holds m) and 1 for the odd-k equation (`k` holds k,
 * `m` holds μ).
 */
typedef struct AmSolution {
  uint8_t family;
  int64_t k;
  int64_t m;
  int64_t n;
  int64_t s;
} AmSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Complete solution set of the even-family rhombus equation.
 *
 * # Safety
 * `out` must be null or a valid pointer to a handle slot.
 */
enum AmStatus am_solve_star(struct AmSolutionList **out);

/**
 * Complete solution set of the odd-family rhombus equation.
 *
 * # Safety
 * `out` must be null or a valid pointer to a handle slot.
 */
enum AmStatus am_solve_star_star(struct AmSolutionList **out);

/**
 * Number of solutions in the list; 0 for a null handle.
 *
 * # Safety
 * `list` must be null or a handle from `am_solve_star`/`am_solve_star_star`.
 */
size_t am_solution_count(const struct AmSolutionList *list);

/**
 * Copies the solution at `index` into `out`.
 *
 * # Safety
 * `list` must be null or a live handle; `out` must be null or valid for a
 * single [`AmSolution`] write.
 */
enum AmStatus am_solution_get(const struct AmSolutionList *list,
                              size_t index,
                              struct AmSolution *out);

/**
 * Releases a solution list. Null is ignored.
 *
 * # Safety
 * `list` must be null or a pointer previously returned through
 * [`am_solve_star`] or [`am_solve_star_star`] and not yet freed.
 */
void am_solution_list_free(struct AmSolutionList *list);

/**
 * Brute-force rhombus scan up to `bound` (1 ..= 5·10⁴). Hits are quadruples
 * (x, x, a, a).
 *
 * # Safety
 * `out` must be null or a valid pointer to a handle slot.
 */
enum AmStatus am_search_rhombus(int64_t bound, struct AmSearchReport **out);

/**
 * Brute-force parallelogram scan up to `bound` (1 ..= 300).
 *
 * # Safety
 * `out` must be null or a valid pointer to a handle slot.
 */
enum AmStatus am_search_parallelograms(int64_t bound, struct AmSearchReport **out);

/**
 * Exhaustive amicable-rectangle search; trivial self-pairs are included as
 * hits with (x, y) = (a, b).
 *
 * # Safety
 * `out` must be null or a valid pointer to a handle slot.
 */
enum AmStatus am_search_rectangles(struct AmSearchReport **out);

/**
 * Number of hits in the report; 0 for a null handle.
 *
 * # Safety
 * `report` must be null or a live handle from an `am_search_*` call.
 */
size_t am_report_hit_count(const struct AmSearchReport *report);

/**
 * Copies hit `index` into `out_quad`, which must point at four writable
 * int64 slots receiving (x, y, a, b).
 *
 * # Safety
 * `report` must be null or a live handle; `out_quad` must be null or valid
 * for four int64 writes.
 */
enum AmStatus am_report_hit(const struct AmSearchReport *report, size_t index, int64_t *out_quad);

/**
 * Whether the report's search space was provably exhausted.
 *
 * # Safety
 * `report` must be null or a live handle from an `am_search_*` call.
 */
bool am_report_complete(const struct AmSearchReport *report);

/**
 * Releases a search report. Null is ignored.
 *
 * # Safety
 * `report` must be null or a pointer previously returned through one of
 * the `am_search_*` calls and not yet freed.
 */
void am_report_free(struct AmSearchReport *report);

/**
 * Decides the pair condition for sides (x, y) and (a, b), each in
 * [1, 10⁹]. On success the certificate roots are written to `out_s1` and
 * `out_s2` when those pointers are non-null.
 *
 * # Safety
 * `out_s1` and `out_s2` must each be null or valid for an int64 write.
 */
enum AmStatus am_verify_pair(int64_t x,
                             int64_t y,
                             int64_t a,
                             int64_t b,
                             int64_t *out_s1,
                             int64_t *out_s2);

/**
 * Verifies the pair and realizes both members on the lattice. Each output
 * buffer must hold eight int64 values and receives the four vertices of one
 * parallelogram as x0, y0, x1, y1, x2, y2, x3, y3. Sides are limited to
 * [1, 10⁴].
 *
 * # Safety
 * `out_first` and `out_second` must be null or valid for eight int64
 * writes each.
 */
enum AmStatus am_embed_pair(int64_t x,
                            int64_t y,
                            int64_t a,
                            int64_t b,
                            int64_t *out_first,
                            int64_t *out_second);

/**
 * Diffs the solver route against the oracle route up to `bound`
 * (1 ..= 5·10⁴) and lattice-embeds every hit. Writes true to `out_pass` when
 * the routes agree and every embedding verifies.
 *
 * # Safety
 * `out_pass` must be null or valid for a bool write.
 */
enum AmStatus am_cross_check(int64_t bound, bool *out_pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AMICABLE_H */

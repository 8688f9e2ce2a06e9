//! C ABI for the amicable lattice parallelogram library.
//!
//! The interface follows the usual C conventions: opaque handles for
//! variable-length results, caller-provided out-pointers for fixed-size
//! ones, and an [`AmStatus`] error code from every fallible call. The
//! matching header is generated into `include/amicable.h` at build time.
//!
//! All values cross the boundary as `int64_t`. The library computes with
//! 128-bit integers internally; the argument ceilings enforced here keep
//! every result representable.
//!
//! Every function taking a pointer is `unsafe`: callers must pass either
//! null or valid, properly aligned pointers. Null is tolerated everywhere
//! and reported as [`AmStatus::NullPointer`] where an output is required.

use std::panic::{catch_unwind, AssertUnwindSafe};

use amicable::cli::cross_check;
use amicable::lattice::realize_amicable_pair;
use amicable::oracle::{brute_parallelogram, brute_rectangles, brute_rhombus, SearchReport};
use amicable::parallelogram::amicable_condition;
use amicable::rhombus::{solve_star, solve_star_star, StarSolution};
use amicable::Int;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmStatus {
    /// Operation completed; any out-pointers are filled.
    Ok = 0,
    /// A required pointer was null.
    NullPointer = 1,
    /// An argument was outside its documented range.
    InvalidArgument = 2,
    /// The queried sides do not form an amicable pair (not an error state;
    /// out-values are untouched).
    NotAmicable = 3,
    /// An index was past the end of a result set.
    OutOfRange = 4,
    /// An internal invariant failed; indicates a bug.
    Internal = 5,
}

/// One solution of a rhombus equation. `family` is 0 for the even-k equation
/// (`k` holds κ, `m` holds m) and 1 for the odd-k equation (`k` holds k,
/// `m` holds μ).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmSolution {
    pub family: u8,
    pub k: i64,
    pub m: i64,
    pub n: i64,
    pub s: i64,
}

/// Opaque search result handle; release with [`am_report_free`].
pub struct AmSearchReport {
    inner: SearchReport,
}

/// Opaque solution list handle; release with [`am_solution_list_free`].
pub struct AmSolutionList {
    inner: Vec<StarSolution>,
}

const MAX_SEARCH_BOUND: i64 = 50_000;
const MAX_PARALLELOGRAM_BOUND: i64 = 300;
const MAX_VERIFY_SIDE: i64 = 1_000_000_000;
const MAX_EMBED_SIDE: i64 = 10_000;

fn guarded(body: impl FnOnce() -> AmStatus) -> AmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => AmStatus::Internal,
    }
}

unsafe fn solution_list_out(
    out: *mut *mut AmSolutionList,
    solve: impl FnOnce() -> Vec<StarSolution>,
) -> AmStatus {
    if out.is_null() {
        return AmStatus::NullPointer;
    }
    guarded(|| {
        let list = Box::new(AmSolutionList { inner: solve() });
        unsafe { *out = Box::into_raw(list) };
        AmStatus::Ok
    })
}

/// Complete solution set of the even-family rhombus equation.
///
/// # Safety
/// `out` must be null or a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn am_solve_star(out: *mut *mut AmSolutionList) -> AmStatus {
    unsafe { solution_list_out(out, solve_star) }
}

/// Complete solution set of the odd-family rhombus equation.
///
/// # Safety
/// `out` must be null or a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn am_solve_star_star(out: *mut *mut AmSolutionList) -> AmStatus {
    unsafe { solution_list_out(out, solve_star_star) }
}

/// Number of solutions in the list; 0 for a null handle.
///
/// # Safety
/// `list` must be null or a handle from `am_solve_star`/`am_solve_star_star`.
#[no_mangle]
pub unsafe extern "C" fn am_solution_count(list: *const AmSolutionList) -> usize {
    if list.is_null() {
        return 0;
    }
    unsafe { &*list }.inner.len()
}

/// Copies the solution at `index` into `out`.
///
/// # Safety
/// `list` must be null or a live handle; `out` must be null or valid for a
/// single [`AmSolution`] write.
#[no_mangle]
pub unsafe extern "C" fn am_solution_get(
    list: *const AmSolutionList,
    index: usize,
    out: *mut AmSolution,
) -> AmStatus {
    if list.is_null() || out.is_null() {
        return AmStatus::NullPointer;
    }
    let list = unsafe { &*list };
    let Some(sol) = list.inner.get(index) else {
        return AmStatus::OutOfRange;
    };
    let value = match *sol {
        StarSolution::Star { kappa, m, n, s } => AmSolution {
            family: 0,
            k: kappa as i64,
            m: m as i64,
            n: n as i64,
            s: s as i64,
        },
        StarSolution::StarStar { k, mu, n, s } => AmSolution {
            family: 1,
            k: k as i64,
            m: mu as i64,
            n: n as i64,
            s: s as i64,
        },
    };
    unsafe { *out = value };
    AmStatus::Ok
}

/// Releases a solution list. Null is ignored.
///
/// # Safety
/// `list` must be null or a pointer previously returned through
/// [`am_solve_star`] or [`am_solve_star_star`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn am_solution_list_free(list: *mut AmSolutionList) {
    if !list.is_null() {
        drop(unsafe { Box::from_raw(list) });
    }
}

unsafe fn report_out(
    out: *mut *mut AmSearchReport,
    search: impl FnOnce() -> SearchReport,
) -> AmStatus {
    if out.is_null() {
        return AmStatus::NullPointer;
    }
    guarded(|| {
        let report = Box::new(AmSearchReport { inner: search() });
        unsafe { *out = Box::into_raw(report) };
        AmStatus::Ok
    })
}

/// Brute-force rhombus scan up to `bound` (1 ..= 5·10⁴). Hits are quadruples
/// (x, x, a, a).
///
/// # Safety
/// `out` must be null or a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn am_search_rhombus(
    bound: i64,
    out: *mut *mut AmSearchReport,
) -> AmStatus {
    if !(1..=MAX_SEARCH_BOUND).contains(&bound) {
        return AmStatus::InvalidArgument;
    }
    unsafe { report_out(out, || brute_rhombus(bound as Int)) }
}

/// Brute-force parallelogram scan up to `bound` (1 ..= 300).
///
/// # Safety
/// `out` must be null or a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn am_search_parallelograms(
    bound: i64,
    out: *mut *mut AmSearchReport,
) -> AmStatus {
    if !(1..=MAX_PARALLELOGRAM_BOUND).contains(&bound) {
        return AmStatus::InvalidArgument;
    }
    unsafe { report_out(out, || brute_parallelogram(bound as Int)) }
}

/// Exhaustive amicable-rectangle search; trivial self-pairs are included as
/// hits with (x, y) = (a, b).
///
/// # Safety
/// `out` must be null or a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn am_search_rectangles(out: *mut *mut AmSearchReport) -> AmStatus {
    unsafe { report_out(out, || brute_rectangles().report) }
}

/// Number of hits in the report; 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle from an `am_search_*` call.
#[no_mangle]
pub unsafe extern "C" fn am_report_hit_count(report: *const AmSearchReport) -> usize {
    if report.is_null() {
        return 0;
    }
    unsafe { &*report }.inner.hits.len()
}

/// Copies hit `index` into `out_quad`, which must point at four writable
/// int64 slots receiving (x, y, a, b).
///
/// # Safety
/// `report` must be null or a live handle; `out_quad` must be null or valid
/// for four int64 writes.
#[no_mangle]
pub unsafe extern "C" fn am_report_hit(
    report: *const AmSearchReport,
    index: usize,
    out_quad: *mut i64,
) -> AmStatus {
    if report.is_null() || out_quad.is_null() {
        return AmStatus::NullPointer;
    }
    let report = unsafe { &*report };
    let Some(&(x, y, a, b)) = report.inner.hits.get(index) else {
        return AmStatus::OutOfRange;
    };
    let quad = [x as i64, y as i64, a as i64, b as i64];
    unsafe { std::ptr::copy_nonoverlapping(quad.as_ptr(), out_quad, 4) };
    AmStatus::Ok
}

/// Whether the report's search space was provably exhausted.
///
/// # Safety
/// `report` must be null or a live handle from an `am_search_*` call.
#[no_mangle]
pub unsafe extern "C" fn am_report_complete(report: *const AmSearchReport) -> bool {
    if report.is_null() {
        return false;
    }
    unsafe { &*report }.inner.complete
}

/// Releases a search report. Null is ignored.
///
/// # Safety
/// `report` must be null or a pointer previously returned through one of
/// the `am_search_*` calls and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn am_report_free(report: *mut AmSearchReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// Decides the pair condition for sides (x, y) and (a, b), each in
/// [1, 10⁹]. On success the certificate roots are written to `out_s1` and
/// `out_s2` when those pointers are non-null.
///
/// # Safety
/// `out_s1` and `out_s2` must each be null or valid for an int64 write.
#[no_mangle]
pub unsafe extern "C" fn am_verify_pair(
    x: i64,
    y: i64,
    a: i64,
    b: i64,
    out_s1: *mut i64,
    out_s2: *mut i64,
) -> AmStatus {
    for v in [x, y, a, b] {
        if !(1..=MAX_VERIFY_SIDE).contains(&v) {
            return AmStatus::InvalidArgument;
        }
    }
    guarded(|| {
        match amicable_condition(x as Int, y as Int, a as Int, b as Int) {
            Some(pair) => {
                if !out_s1.is_null() {
                    unsafe { *out_s1 = pair.s1 as i64 };
                }
                if !out_s2.is_null() {
                    unsafe { *out_s2 = pair.s2 as i64 };
                }
                AmStatus::Ok
            }
            None => AmStatus::NotAmicable,
        }
    })
}

/// Verifies the pair and realizes both members on the lattice. Each output
/// buffer must hold eight int64 values and receives the four vertices of one
/// parallelogram as x0, y0, x1, y1, x2, y2, x3, y3. Sides are limited to
/// [1, 10⁴].
///
/// # Safety
/// `out_first` and `out_second` must be null or valid for eight int64
/// writes each.
#[no_mangle]
pub unsafe extern "C" fn am_embed_pair(
    x: i64,
    y: i64,
    a: i64,
    b: i64,
    out_first: *mut i64,
    out_second: *mut i64,
) -> AmStatus {
    for v in [x, y, a, b] {
        if !(1..=MAX_EMBED_SIDE).contains(&v) {
            return AmStatus::InvalidArgument;
        }
    }
    if out_first.is_null() || out_second.is_null() {
        return AmStatus::NullPointer;
    }
    guarded(|| {
        let Some(pair) = amicable_condition(x as Int, y as Int, a as Int, b as Int) else {
            return AmStatus::NotAmicable;
        };
        let Ok((e1, e2)) = realize_amicable_pair(&pair) else {
            return AmStatus::Internal;
        };
        if !e1.verify() || !e2.verify() {
            return AmStatus::Internal;
        }
        for (embedding, out) in [(&e1, out_first), (&e2, out_second)] {
            let mut flat = [0i64; 8];
            for (i, v) in embedding.vertices.iter().enumerate() {
                flat[2 * i] = v.x as i64;
                flat[2 * i + 1] = v.y as i64;
            }
            unsafe { std::ptr::copy_nonoverlapping(flat.as_ptr(), out, 8) };
        }
        AmStatus::Ok
    })
}

/// Diffs the solver route against the oracle route up to `bound`
/// (1 ..= 5·10⁴) and lattice-embeds every hit. Writes true to `out_pass` when
/// the routes agree and every embedding verifies.
///
/// # Safety
/// `out_pass` must be null or valid for a bool write.
#[no_mangle]
pub unsafe extern "C" fn am_cross_check(bound: i64, out_pass: *mut bool) -> AmStatus {
    if !(1..=MAX_SEARCH_BOUND).contains(&bound) {
        return AmStatus::InvalidArgument;
    }
    if out_pass.is_null() {
        return AmStatus::NullPointer;
    }
    guarded(|| match cross_check(bound as Int) {
        Ok(outcome) => {
            unsafe { *out_pass = outcome.passed() };
            AmStatus::Ok
        }
        Err(_) => AmStatus::Internal,
    })
}

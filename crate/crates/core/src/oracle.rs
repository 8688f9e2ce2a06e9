//! Definition-level brute-force searches. These re-derive every
//! classification claim by direct scan of the defining conditions and act as
//! ground truth for the bounded solver route.

use rayon::prelude::*;
use std::time::Instant;

use crate::exact::is_perfect_square;
use crate::Int;

/// Canonical hit quadruple (x, y, a, b) with x ≤ y and (x, y) ≤ (a, b).
pub type Quad = (Int, Int, Int, Int);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchKind {
    Rhombus,
    Rectangle,
    Parallelogram,
}

/// Deterministic, sorted enumeration result. `complete` is true only when
/// the search space is provably exhausted (rectangles); bounded scans report
/// false regardless of how far they ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub kind: SearchKind,
    pub bound: Int,
    pub hits: Vec<Quad>,
    pub elapsed_ms: u64,
    pub complete: bool,
}

/// All rhombus pairs (x, a) with 1 ≤ x ≤ a ≤ bound such that x⁴ − 16a² and
/// a⁴ − 16x² are both nonnegative perfect squares, reported as quadruples
/// (x, x, a, a). Nonnegativity prunes to x² ≥ 4a and a² ≥ 4x before any
/// square test runs.
pub fn brute_rhombus(bound: Int) -> SearchReport {
    let start = Instant::now();
    let top = u64::try_from(bound.max(0)).unwrap_or(u64::MAX);
    let mut hits: Vec<Quad> = (1..=top)
        .into_par_iter()
        .flat_map_iter(|x| {
            let x = x as Int;
            // x² ≥ 4a caps the partner side directly
            (x..=bound.min(x * x / 4)).filter_map(move |a| {
                if a * a < 4 * x {
                    return None;
                }
                is_perfect_square(x * x * x * x - 16 * a * a)?;
                is_perfect_square(a * a * a * a - 16 * x * x)?;
                Some((x, x, a, a))
            })
        })
        .collect();
    hits.sort_unstable();
    hits.dedup();
    SearchReport {
        kind: SearchKind::Rhombus,
        bound,
        hits,
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete: false,
    }
}

/// All quadruples (x, y, a, b) with sides ≤ bound, canonically ordered,
/// where both parallelogram residuals are nonnegative perfect squares.
pub fn brute_parallelogram(bound: Int) -> SearchReport {
    let start = Instant::now();
    let mut side_pairs = Vec::new();
    for x in 1..=bound {
        for y in x..=bound {
            side_pairs.push((x, y));
        }
    }
    let mut hits: Vec<Quad> = side_pairs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &(x, y))| {
            // the list is sorted with `a` nondecreasing, and 2(a+b) ≥ 4a must
            // stay within xy, so the tail past 4a > xy is all prunable
            side_pairs[i..]
                .iter()
                .take_while(move |&&(a, _)| 4 * a <= x * y)
                .filter_map(move |&(a, b)| {
                    if x * y < 2 * (a + b) || a * b < 2 * (x + y) {
                        return None;
                    }
                    is_perfect_square(x * x * y * y - 4 * (a + b) * (a + b))?;
                    is_perfect_square(a * a * b * b - 4 * (x + y) * (x + y))?;
                    Some((x, y, a, b))
                })
        })
        .collect();
    hits.sort_unstable();
    hits.dedup();
    SearchReport {
        kind: SearchKind::Parallelogram,
        bound,
        hits,
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete: false,
    }
}

/// Rectangle search result: the equable rectangles and the amicable pairs.
/// Totals are reported both with and without trivial self-pairs, since either
/// convention is defensible and downstream checks pick the one they need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangleSearch {
    pub equables: Vec<(Int, Int)>,
    pub report: SearchReport,
    pub total_with_trivial: usize,
    pub total_nontrivial: usize,
}

/// Side cap that provably exhausts the rectangle search. With x ≤ y and
/// a ≤ b, the pair conditions xy = 2(a+b) and ab = 2(x+y) give xy ≤ 4b and
/// ab ≤ 4y, hence (ax)(by) ≤ 16by and ax ≤ 16; eliminating b then yields
/// y(ax − 4) = 2a² + 4x, whose maximum over ax ≤ 16 is y = 54. Sides are
/// scanned to 64 for margin.
pub const RECTANGLE_SIDE_CAP: Int = 64;

/// Exhaustive rectangle search at the derived cap; `complete` is true.
pub fn brute_rectangles() -> RectangleSearch {
    brute_rectangles_with_cap(RECTANGLE_SIDE_CAP)
}

/// The same scan to an explicit cap. Doubling the cap must reproduce the
/// default hits exactly; a test holds the scan to that.
pub fn brute_rectangles_with_cap(cap: Int) -> RectangleSearch {
    let start = Instant::now();
    let mut equables = Vec::new();
    for x in 1..=cap {
        for y in x..=cap {
            if x * y == 2 * (x + y) {
                equables.push((x, y));
            }
        }
    }

    let mut hits: Vec<Quad> = Vec::new();
    for x in 1..=cap {
        for y in x..=cap {
            for a in 1..=cap {
                for b in a..=cap {
                    if (x, y) > (a, b) {
                        continue;
                    }
                    if x * y == 2 * (a + b) && a * b == 2 * (x + y) {
                        assert!(a * x <= 16, "exhaustion bound violated at {:?}", (x, y, a, b));
                        hits.push((x, y, a, b));
                    }
                }
            }
        }
    }
    hits.sort_unstable();
    hits.dedup();
    let trivial = hits.iter().filter(|&&(x, y, a, b)| (x, y) == (a, b)).count();
    let total = hits.len();
    RectangleSearch {
        equables,
        report: SearchReport {
            kind: SearchKind::Rectangle,
            bound: cap,
            hits,
            elapsed_ms: start.elapsed().as_millis() as u64,
            complete: cap >= RECTANGLE_SIDE_CAP,
        },
        total_with_trivial: total,
        total_nontrivial: total - trivial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallelogram::amicable_condition;

    #[test]
    fn rhombus_scan_examples() {
        assert!(brute_rhombus(3).hits.is_empty());
        assert_eq!(brute_rhombus(4).hits, vec![(4, 4, 4, 4)]);
        assert_eq!(
            brute_rhombus(100).hits,
            vec![(4, 4, 4, 4), (5, 5, 5, 5)]
        );
        assert!(!brute_rhombus(100).complete);
    }

    #[test]
    fn rhombus_scan_is_monotone_and_filter_stable() {
        let full = brute_rhombus(500).hits;
        for n in [1, 3, 4, 5, 10, 50, 100, 500] {
            let direct = brute_rhombus(n).hits;
            let filtered: Vec<Quad> = full
                .iter()
                .copied()
                .filter(|&(_, _, a, _)| a <= n)
                .collect();
            assert_eq!(direct, filtered, "bound {n}");
        }
    }

    #[test]
    fn rectangle_counts() {
        let r = brute_rectangles();
        assert_eq!(r.equables, vec![(3, 6), (4, 4)]);
        assert_eq!(r.total_nontrivial, 5);
        assert_eq!(r.total_with_trivial, 7);
        assert!(r.report.complete);
        assert_eq!(
            r.report.hits,
            vec![
                (1, 34, 7, 10),
                (1, 38, 6, 13),
                (1, 54, 5, 22),
                (2, 10, 4, 6),
                (2, 13, 3, 10),
                (3, 6, 3, 6),
                (4, 4, 4, 4),
            ]
        );
    }

    #[test]
    fn rectangle_scan_is_saturated_at_its_cap() {
        let base = brute_rectangles();
        let doubled = brute_rectangles_with_cap(2 * RECTANGLE_SIDE_CAP);
        assert_eq!(base.report.hits, doubled.report.hits);
        assert_eq!(base.equables, doubled.equables);
    }

    #[test]
    fn parallelogram_scan_examples() {
        assert!(brute_parallelogram(1).hits.is_empty());
        let hits = brute_parallelogram(5).hits;
        assert!(hits.contains(&(4, 4, 4, 4)));
        assert!(hits.contains(&(5, 5, 5, 5)));
    }

    #[test]
    fn parallelogram_hits_certify_and_swap_symmetrically() {
        for (x, y, a, b) in brute_parallelogram(40).hits {
            assert!(amicable_condition(x, y, a, b).is_some());
            assert!(amicable_condition(a, b, x, y).is_some());
        }
    }
}

//! Acceptance suite: the release-gating checks, one test per criterion.
//! Each prints a single PASS line with its measured evidence (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::process::Command;
use std::time::{Duration, Instant};

use amicable::cli::cross_check;
use amicable::elliptic::{on_curve, star_to_curve};
use amicable::exact::{gcd, is_perfect_square, TripleCase, TripleParam};
use amicable::lattice::realize_amicable_pair;
use amicable::oracle::{brute_parallelogram, brute_rectangles, brute_rhombus};
use amicable::parallelogram::amicable_condition;
use amicable::rhombus::{
    even_lemma_identity, little_lemma_bound, odd_lemma_identity, reduce_case_b, solve_star,
    solve_star_star, star_residual, star_star_residual, StarSolution, STAR_STAR_FACTOR_BOUND,
};
use amicable::Int;

fn pass(line: &str) {
    println!("acceptance: {line} ... PASS");
}

#[test]
fn criterion_1_even_family_solution_set() {
    let started = Instant::now();
    let solutions = solve_star();
    let elapsed = started.elapsed();
    assert_eq!(
        solutions,
        vec![StarSolution::Star { kappa: 4, m: 1, n: 1, s: 0 }],
        "even-family solution set"
    );
    assert!(elapsed < Duration::from_secs(1), "solve_star took {elapsed:?}");
    pass(&format!(
        "criterion 1: solve_star == {{(kappa=4, m=1, n=1)}} in {elapsed:?}"
    ));
}

#[test]
fn criterion_2_odd_family_solution_set() {
    let started = Instant::now();
    let solutions = solve_star_star();
    let elapsed = started.elapsed();
    assert_eq!(
        solutions,
        vec![StarSolution::StarStar { k: 5, mu: 1, n: 1, s: 15 }],
        "odd-family solution set"
    );
    assert!(elapsed < Duration::from_secs(1), "solve_star_star took {elapsed:?}");
    pass(&format!(
        "criterion 2: solve_star_star == {{(k=5, mu=1, n=1)}} in {elapsed:?}"
    ));
}

#[test]
fn criterion_3_rhombus_classification_cross_checked_to_500() {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    let started = Instant::now();
    let (report, outcome) = pool.install(|| {
        let report = brute_rhombus(500);
        let outcome = cross_check(500).expect("cross-check runs");
        (report, outcome)
    });
    let elapsed = started.elapsed();
    assert_eq!(report.hits, vec![(4, 4, 4, 4), (5, 5, 5, 5)]);
    assert_eq!(outcome.solver_hits, outcome.oracle_hits);
    assert!(outcome.passed(), "cross-check failed: {outcome:?}");
    assert!(
        elapsed < Duration::from_secs(30),
        "single-threaded classification took {elapsed:?}"
    );
    pass(&format!(
        "criterion 3: brute_rhombus(500) == {{(4,4), (5,5)}}, cross-check PASS, single-threaded in {elapsed:?}"
    ));
}

#[test]
fn criterion_4_rectangle_counts() {
    let search = brute_rectangles();
    assert_eq!(search.equables, vec![(3, 6), (4, 4)], "equable rectangles");
    assert_eq!(search.total_nontrivial, 5, "amicable pair count excluding trivial");
    assert!(search.report.complete);
    pass(&format!(
        "criterion 4: 2 equable rectangles {:?}; amicable pairs = {} excluding trivial \
         self-pairs ({} including them); the count matching 5 is the nontrivial one",
        search.equables, search.total_nontrivial, search.total_with_trivial
    ));
}

#[test]
fn criterion_5_every_parallelogram_hit_embeds() {
    let report = brute_parallelogram(60);
    assert!(!report.hits.is_empty());
    let mut embedded = 0;
    for &(x, y, a, b) in &report.hits {
        let pair = amicable_condition(x, y, a, b)
            .unwrap_or_else(|| panic!("hit {:?} lost its certificate", (x, y, a, b)));
        let (e1, e2) = realize_amicable_pair(&pair)
            .unwrap_or_else(|e| panic!("embedding failed for {:?}: {e}", (x, y, a, b)));
        let (sx, sy) = pair.p1.sides();
        let (sa, sb) = pair.p2.sides();
        assert!(e1.verify(), "first embedding of {:?}", (x, y, a, b));
        assert!(e2.verify(), "second embedding of {:?}", (x, y, a, b));
        assert_eq!(e1.target_sq_sides, vec![sx * sx, sy * sy, sx * sx, sy * sy]);
        assert_eq!(e1.target_area2, 4 * (sa + sb));
        assert_eq!(e2.target_sq_sides, vec![sa * sa, sb * sb, sa * sa, sb * sb]);
        assert_eq!(e2.target_area2, 4 * (sx + sy));
        embedded += 1;
    }
    pass(&format!(
        "criterion 5: all {embedded} hits of brute_parallelogram(60) embedded and verified, zero failures"
    ));
}

#[test]
fn criterion_6_lemma_identity_suites() {
    // Quoted square-gap instances, exact.
    assert_eq!(little_lemma_bound(2, 4), 13);
    assert_eq!(little_lemma_bound(16, 32), 321);
    assert_eq!(little_lemma_bound(32, 16), 1105);
    assert_eq!(STAR_STAR_FACTOR_BOUND, 189);

    // Even-family identity over the whole box.
    let mut even_cases = 0;
    for kappa in 1..=30 {
        for m in 1..=30 {
            for n in 1..=30 {
                let r = star_residual(kappa, m, n).unwrap();
                let Some(s) = is_perfect_square(r) else { continue };
                let beta = (kappa * kappa * m * m * n * n - s) / 2;
                assert!(
                    even_lemma_identity(kappa, m, n, beta).unwrap(),
                    "even identity failed at ({kappa}, {m}, {n})"
                );
                even_cases += 1;
            }
        }
    }

    // Odd-family identity with the parity constraints applied.
    let mut odd_cases = 0;
    for k in (1..=30).step_by(2) {
        for mu in 1..=30 {
            for n in (1..=30).step_by(2) {
                let r = star_star_residual(k, mu, n).unwrap();
                let Some(s) = is_perfect_square(r) else { continue };
                let beta = (k * k * mu * mu * n * n - s) / 2;
                assert!(
                    odd_lemma_identity(k, mu, n, beta).unwrap(),
                    "odd identity failed at ({k}, {mu}, {n})"
                );
                odd_cases += 1;
            }
        }
    }

    // Square-gap bound, exhaustive on [1, 200]³.
    let mut bound_cases = 0u64;
    for a in 1..=200 {
        for c in 1..=200 {
            for d in 1..=200 {
                let residual = a * a - 2 * c * a - d;
                if residual < 0 || is_perfect_square(residual).is_none() {
                    continue;
                }
                assert!(
                    2 * a <= little_lemma_bound(c, d),
                    "square-gap bound failed at ({a}, {c}, {d})"
                );
                bound_cases += 1;
            }
        }
    }
    assert!(even_cases > 0 && odd_cases > 0 && bound_cases > 0);
    pass(&format!(
        "criterion 6: identities on {even_cases} even / {odd_cases} odd instances, square-gap \
         bound on {bound_cases} instances, quoted values 13/321/1105/189 exact"
    ));
}

#[test]
fn criterion_7_elliptic_map() {
    let pt = star_to_curve(4, 1, 1).expect("the even-family solution maps");
    assert_eq!((pt.x, pt.y, pt.p, pt.q, pt.s), (1152, 41472, 0, 191_102_976, 0));
    assert!(on_curve(&pt));

    // Intermediate cubic identity, recomputed from scratch.
    let (alpha, s): (Int, Int) = (4, 0);
    let z = is_perfect_square(32 * 32 + 4 * alpha * alpha * (32 * alpha + s * s)).unwrap();
    let (v, u) = (32 * alpha, 16 * z);
    assert_eq!((v, u), (128, 1536));
    assert_eq!(u * u, v * v * v + s * s * v * v + (1 << 18));

    pass("criterion 7: star_to_curve(4,1,1) -> (X=1152, Y=41472, p=0, q=191102976) on curve; u² = v³ + s²v² + 2¹⁸ exact");
}

#[test]
fn criterion_8_case_b_reduction_preserves_pairs() {
    let mut checked = 0;
    let mut k = 2;
    while k * 5 <= 10_000 {
        for m in 1.. {
            if k * (m * m + (m + 1) * (m + 1)) > 10_000 {
                break;
            }
            for n in m + 1.. {
                let x_sq = k * (m * m + n * n);
                if x_sq > 10_000 {
                    break;
                }
                if gcd(m, n) != 1 {
                    continue;
                }
                let original = TripleParam { k, m, n, case: TripleCase::B };
                let reduced = reduce_case_b(k, m, n)
                    .unwrap_or_else(|e| panic!("reduction failed at ({k}, {m}, {n}): {e}"));
                assert_eq!(reduced.case, TripleCase::A);
                assert_eq!(reduced.x_squared(), original.x_squared());
                assert_eq!(reduced.four_a(), original.four_a());
                assert_eq!(gcd(reduced.m, reduced.n), 1);
                checked += 1;
            }
        }
        k += 2;
    }
    assert!(checked > 1000);
    pass(&format!(
        "criterion 8: reduce_case_b preserved (x², 4a) and case-A invariants on all {checked} valid case-B triples with k(m²+n²) ≤ 10⁴"
    ));
}

#[test]
fn criterion_9_reports_are_byte_identical_across_jobs() {
    let bin = env!("CARGO_BIN_EXE_amicable");
    let configs: &[&[&str]] = &[
        &["solve-star", "--format", "json"],
        &["solve-starstar", "--format", "json"],
        &["search-rhombus", "--bound", "500", "--format", "json"],
        &["search-rhombus", "--bound", "500", "--format", "csv"],
        &["search-rectangles", "--format", "json"],
        &["search-parallelograms", "--bound", "60", "--format", "json"],
        &["search-parallelograms", "--bound", "60", "--format", "text"],
        &["cross-check", "--bound", "500", "--format", "json"],
    ];
    for args in configs {
        let run = |jobs: &str| {
            let out = Command::new(bin)
                .args(*args)
                .args(["--jobs", jobs])
                .output()
                .expect("binary runs");
            (out.stdout, out.status.code())
        };
        let (stdout_1, code_1) = run("1");
        let (stdout_8, code_8) = run("8");
        assert_eq!(code_1, Some(0), "exit code for {args:?}");
        assert_eq!(code_1, code_8);
        assert_eq!(
            stdout_1, stdout_8,
            "stdout differs between --jobs 1 and --jobs 8 for {args:?}"
        );
        assert!(!stdout_1.is_empty());
    }
    pass(&format!(
        "criterion 9: {} report configurations byte-identical across --jobs 1 and --jobs 8",
        configs.len()
    ));
}

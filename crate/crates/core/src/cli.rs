//! Command execution behind the `amicable` binary.
//!
//! Report payloads go to stdout (or `--output`) and are byte-identical
//! across runs and worker counts for the same configuration; diagnostics
//! such as timing go to stderr. Exit codes: 0 success (a negative answer is
//! a successful run), 1 verification mismatch, 2 usage error.

use std::path::PathBuf;
use std::time::Instant;

use crate::lattice::realize_amicable_pair;
use crate::oracle::{brute_parallelogram, brute_rectangles, brute_rhombus};
use crate::parallelogram::amicable_condition;
use crate::report::{self, Format};
use crate::rhombus::{solve_star, solve_star_star, to_rhombus};
use crate::{elliptic, Error, Int, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    SolveStar,
    SolveStarStar,
    SearchRhombus { bound: Int },
    SearchRectangles,
    SearchParallelograms { bound: Int },
    VerifyPair { x: Int, y: Int, a: Int, b: Int },
    EmbedPair { x: Int, y: Int, a: Int, b: Int },
    Elliptic { kappa: Int, m: Int, n: Int },
    CrossCheck { bound: Int },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub jobs: usize,
    pub output_path: Option<PathBuf>,
}

/// Input ceilings, enforced as usage errors. They keep every computation
/// comfortably inside 128 bits and every scan inside desk-scale time.
const MAX_SEARCH_BOUND: Int = 50_000;
const MAX_PARALLELOGRAM_BOUND: Int = 300;
const MAX_VERIFY_SIDE: Int = 1_000_000_000;
const MAX_EMBED_SIDE: Int = 10_000;
const MAX_ELLIPTIC_PRODUCT: Int = 500;

/// Runs one configured command and returns the process exit code.
pub fn run(config: &RunConfig) -> i32 {
    if let Err(msg) = validate(config) {
        eprintln!("error: {msg}");
        return 2;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: could not build worker pool: {e}");
            return 2;
        }
    };
    let started = Instant::now();
    let outcome = pool.install(|| execute(&config.command, config.format));
    let (payload, code) = match outcome {
        Ok(result) => result,
        Err(Error::Internal(msg)) => {
            eprintln!("error: {msg}");
            return 1;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    match &config.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &payload) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{payload}"),
    }
    code
}

fn validate(config: &RunConfig) -> std::result::Result<(), String> {
    if config.jobs < 1 {
        return Err("--jobs must be at least 1".into());
    }
    let check_bound = |bound: Int, min: Int, max: Int| {
        if bound < min || bound > max {
            Err(format!("--bound must be in [{min}, {max}], got {bound}"))
        } else {
            Ok(())
        }
    };
    let check_sides = |sides: [Int; 4], max: Int| {
        for v in sides {
            if v < 1 || v > max {
                return Err(format!("side lengths must be in [1, {max}], got {v}"));
            }
        }
        Ok(())
    };
    match config.command {
        Command::SearchRhombus { bound } => check_bound(bound, 1, MAX_SEARCH_BOUND),
        Command::SearchParallelograms { bound } => {
            check_bound(bound, 1, MAX_PARALLELOGRAM_BOUND)
        }
        Command::CrossCheck { bound } => check_bound(bound, 1, MAX_SEARCH_BOUND),
        Command::VerifyPair { x, y, a, b } => check_sides([x, y, a, b], MAX_VERIFY_SIDE),
        Command::EmbedPair { x, y, a, b } => check_sides([x, y, a, b], MAX_EMBED_SIDE),
        Command::Elliptic { kappa, m, n } => {
            if kappa < 1 || m < 1 || n < 1 {
                return Err("elliptic parameters must be positive".into());
            }
            if kappa * m * n > MAX_ELLIPTIC_PRODUCT {
                return Err(format!(
                    "elliptic parameter product must be at most {MAX_ELLIPTIC_PRODUCT}"
                ));
            }
            Ok(())
        }
        Command::SolveStar | Command::SolveStarStar | Command::SearchRectangles => Ok(()),
    }
}

fn execute(command: &Command, format: Format) -> Result<(String, i32)> {
    match *command {
        Command::SolveStar => {
            Ok((report::solutions("solve-star", &solve_star(), format), 0))
        }
        Command::SolveStarStar => {
            Ok((report::solutions("solve-starstar", &solve_star_star(), format), 0))
        }
        Command::SearchRhombus { bound } => {
            Ok((report::rhombus_search(&brute_rhombus(bound), format), 0))
        }
        Command::SearchRectangles => {
            Ok((report::rectangle_search(&brute_rectangles(), format), 0))
        }
        Command::SearchParallelograms { bound } => {
            Ok((report::parallelogram_search(&brute_parallelogram(bound), format), 0))
        }
        Command::VerifyPair { x, y, a, b } => {
            let pair = amicable_condition(x, y, a, b);
            Ok((report::verify_pair((x, y, a, b), pair.as_ref(), format), 0))
        }
        Command::EmbedPair { x, y, a, b } => {
            let pair = amicable_condition(x, y, a, b);
            let embeddings = match &pair {
                Some(p) => Some(realize_amicable_pair(p)?),
                None => None,
            };
            Ok((
                report::embed_pair((x, y, a, b), pair.as_ref(), embeddings.as_ref(), format),
                0,
            ))
        }
        Command::Elliptic { kappa, m, n } => match elliptic::star_to_curve(kappa, m, n) {
            Ok(point) => Ok((
                report::elliptic((kappa, m, n), Some(&point), None, format),
                0,
            )),
            Err(Error::Domain(msg)) => Ok((
                report::elliptic((kappa, m, n), None, Some(&msg), format),
                0,
            )),
            Err(e) => Err(e),
        },
        Command::CrossCheck { bound } => {
            let outcome = cross_check(bound)?;
            let code = if outcome.passed() { 0 } else { 1 };
            Ok((report::cross_check(&outcome, format), code))
        }
    }
}

/// Result of diffing the solver route against the oracle route and lattice-
/// embedding every hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckOutcome {
    pub bound: Int,
    pub solver_hits: Vec<(Int, Int)>,
    pub oracle_hits: Vec<(Int, Int)>,
    pub routes_agree: bool,
    pub embeddings_verified: usize,
    pub embedding_failures: Vec<(Int, Int)>,
}

impl CrossCheckOutcome {
    pub fn passed(&self) -> bool {
        self.routes_agree && self.embedding_failures.is_empty()
    }
}

/// Exact agreement between the two routes. Split out so fault injection in
/// tests can diff doctored hit lists through the same code path.
pub fn routes_match(solver: &[(Int, Int)], oracle: &[(Int, Int)]) -> bool {
    solver == oracle
}

/// Runs both classification routes for rhombuses up to `bound`, diffs them,
/// and realizes every oracle hit on the lattice. Bounds below 5 are legal
/// but see only part of the solution set.
pub fn cross_check(bound: Int) -> Result<CrossCheckOutcome> {
    if bound < 1 {
        return Err(Error::Domain(format!(
            "cross-check bound must be positive, got {bound}"
        )));
    }

    let mut solver_hits = Vec::new();
    for sol in solve_star().iter().chain(solve_star_star().iter()) {
        let r = to_rhombus(sol)?;
        let (x, a) = (r.x.min(r.a), r.x.max(r.a));
        if a <= bound {
            solver_hits.push((x, a));
        }
    }
    solver_hits.sort_unstable();
    solver_hits.dedup();

    let oracle_hits: Vec<(Int, Int)> = brute_rhombus(bound)
        .hits
        .iter()
        .map(|&(x, _, a, _)| (x, a))
        .collect();

    let routes_agree = routes_match(&solver_hits, &oracle_hits);
    let mut embeddings_verified = 0;
    let mut embedding_failures = Vec::new();
    for &(x, a) in &oracle_hits {
        let ok = amicable_condition(x, x, a, a)
            .and_then(|pair| realize_amicable_pair(&pair).ok())
            .map(|(e1, e2)| e1.verify() && e2.verify())
            .unwrap_or(false);
        if ok {
            embeddings_verified += 1;
        } else {
            embedding_failures.push((x, a));
        }
    }

    Ok(CrossCheckOutcome {
        bound,
        solver_hits,
        oracle_hits,
        routes_agree,
        embeddings_verified,
        embedding_failures,
    })
}

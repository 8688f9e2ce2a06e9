//! Complete solution of the rhombus case.
//!
//! Setting x = y and a = b in the parallelogram criterion, an amicable pair
//! of rhombuses with sides (x, a) exists iff x⁴ − 16a² and a⁴ − 16x² are both
//! squares. Writing the first condition as a Pythagorean parametrization
//! x² = k(m² + n²), 4a = 2kmn and splitting on the parity of k turns the
//! second condition into one of two quartic Diophantine equations:
//!
//! - even k = 2κ (so a = κmn):      κ⁴m⁴n⁴ − 32κ(m² + n²) = s²
//! - odd k (so m = 2μ, a = kμn):    k⁴μ⁴n⁴ − 16k(4μ² + n²) = s²
//!
//! [`solve_star`] and [`solve_star_star`] enumerate the complete solution
//! sets of the two equations. Finiteness comes from a factor identity
//! ([`even_lemma_identity`], [`odd_lemma_identity`]): writing the gap
//! κ²m²n² − s as 2β forces β³ + 64 to factor through the parameters, and
//! eliminating the small gaps 2β ∈ {2, 4, 6} (resp. {2, 4, 6, 8}) by direct
//! finite checks yields the global bounds
//!
//!   (κm² − 2)(κn² − 2) ≤ 8      and      (5kμ² − 4)(5kn² − 16) ≤ 189.
//!
//! The parameter lines those bounds leave open (a factor that is zero or
//! negative) are capped by the square-gap bound of [`little_lemma_bound`],
//! leaving a finite candidate list that is tested exhaustively.

use std::collections::BTreeSet;

use crate::exact::{divisors, gcd, is_perfect_square, isqrt, TripleCase, TripleParam};
use crate::{Error, Int, Result};

/// Every solution of the even-family equation satisfies
/// (κm² − 2)(κn² − 2) ≤ 8: the gap eliminations force 2β ≥ 8, and the factor
/// identity at β = 4 gives (4κm² − 8)(4κn² − 8) ≤ 4³ + 64 = 128.
pub const STAR_FACTOR_BOUND: Int = (4 * 4 * 4 + 64) / 16;

/// Odd-family analogue: 2β ≥ 10 and the identity at β = 5 give
/// (5kμ² − 4)(5kn² − 16) ≤ 5³ + 64 = 189.
pub const STAR_STAR_FACTOR_BOUND: Int = 5 * 5 * 5 + 64;

/// A solution of one of the two quartic equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StarSolution {
    /// κ⁴m⁴n⁴ − 32κ(m² + n²) = s², with gcd(m, n) = 1.
    Star { kappa: Int, m: Int, n: Int, s: Int },
    /// k⁴μ⁴n⁴ − 16k(4μ² + n²) = s², with k odd, n odd, gcd(2μ, n) = 1.
    StarStar { k: Int, mu: Int, n: Int, s: Int },
}

/// Rhombus side pair realized by a solution: x² = k(m² + n²), 2a = kmn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RhombusResult {
    pub x: Int,
    pub a: Int,
    pub source: StarSolution,
}

/// κ⁴m⁴n⁴ − 32κ(m² + n²); may be negative.
pub fn star_residual(kappa: Int, m: Int, n: Int) -> Result<Int> {
    if kappa < 1 || m < 1 || n < 1 {
        return Err(Error::Domain("parameters must be positive".into()));
    }
    Ok(pow4(kappa * m * n) - 32 * kappa * (m * m + n * n))
}

/// k⁴μ⁴n⁴ − 16k(4μ² + n²); requires k and n odd.
pub fn star_star_residual(k: Int, mu: Int, n: Int) -> Result<Int> {
    if k < 1 || mu < 1 || n < 1 {
        return Err(Error::Domain("parameters must be positive".into()));
    }
    if k % 2 == 0 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "odd-family residual needs odd k and odd n, got k = {k}, n = {n}"
        )));
    }
    Ok(pow4(k * mu * n) - 16 * k * (4 * mu * mu + n * n))
}

fn pow4(v: Int) -> Int {
    let sq = v * v;
    sq * sq
}

/// Square-gap bound: if A² − 2cA − d is a nonnegative perfect square for
/// positive integers A, c, d, then 2A ≤ (c+1)² + d. Returns (c+1)² + d.
pub fn little_lemma_bound(c: Int, d: Int) -> Int {
    debug_assert!(c >= 1 && d >= 1);
    (c + 1) * (c + 1) + d
}

/// True iff β³ + 64 = (βκm² − 8)(βκn² − 8) and κ | β². Defined only when the
/// even-family residual of (κ, m, n) is a nonnegative perfect square.
pub fn even_lemma_identity(kappa: Int, m: Int, n: Int, beta: Int) -> Result<bool> {
    if beta < 1 {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let r = star_residual(kappa, m, n)?;
    if is_perfect_square(r).is_none() {
        return Err(Error::Domain(format!(
            "residual {r} of ({kappa}, {m}, {n}) is not a perfect square"
        )));
    }
    let lhs = beta * beta * beta + 64;
    let rhs = (beta * kappa * m * m - 8) * (beta * kappa * n * n - 8);
    Ok(lhs == rhs && (beta * beta) % kappa == 0)
}

/// Odd-family analogue: β³ + 64 = (βkμ² − 4)(βkn² − 16) and k | β².
pub fn odd_lemma_identity(k: Int, mu: Int, n: Int, beta: Int) -> Result<bool> {
    if beta < 1 {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let r = star_star_residual(k, mu, n)?;
    if is_perfect_square(r).is_none() {
        return Err(Error::Domain(format!(
            "residual {r} of ({k}, {mu}, {n}) is not a perfect square"
        )));
    }
    let lhs = beta * beta * beta + 64;
    let rhs = (beta * k * mu * mu - 4) * (beta * k * n * n - 16);
    Ok(lhs == rhs && (beta * beta) % k == 0)
}

/// Rewrites a case-B parametrization as case A. With k = 2κ (k odd is
/// impossible for a genuine case-B pair), u = m + n and v = n − m give
/// x² = κ(u² + v²) and 4a = 2κuv; when gcd(u, v) = 2 the halved pair with
/// 4κ works instead. Output is reported with m ≤ n.
pub fn reduce_case_b(k: Int, m: Int, n: Int) -> Result<TripleParam> {
    if k < 1 || m < 1 || n < 1 {
        return Err(Error::Domain("parameters must be positive".into()));
    }
    if n <= m {
        return Err(Error::Domain(format!("case B requires n > m, got ({m}, {n})")));
    }
    if gcd(m, n) != 1 {
        return Err(Error::Domain(format!("m and n must be coprime, got ({m}, {n})")));
    }
    if k % 2 != 0 {
        return Err(Error::Contract(format!(
            "case B forces an even k, got {k}"
        )));
    }
    let kappa = k / 2;
    let u = m + n;
    let v = n - m;
    // gcd(m, n) = 1 makes gcd(u, v) either 1 or 2.
    let (k2, a2, b2) = if gcd(u, v) == 2 {
        (4 * kappa, u / 2, v / 2)
    } else {
        (kappa, u, v)
    };
    let (m2, n2) = if a2 <= b2 { (a2, b2) } else { (b2, a2) };
    Ok(TripleParam { k: k2, m: m2, n: n2, case: TripleCase::A })
}

fn try_star(kappa: Int, m: Int, n: Int) -> Option<StarSolution> {
    if gcd(m, n) != 1 {
        return None;
    }
    let s = is_perfect_square(star_residual(kappa, m, n).ok()?)?;
    Some(StarSolution::Star { kappa, m, n, s })
}

fn try_star_star(k: Int, mu: Int, n: Int) -> Option<StarSolution> {
    if k % 2 == 0 || n % 2 == 0 || gcd(2 * mu, n) != 1 {
        return None;
    }
    let s = is_perfect_square(star_star_residual(k, mu, n).ok()?)?;
    Some(StarSolution::StarStar { k, mu, n, s })
}

fn signed_divisors(t: Int) -> Vec<Int> {
    let mut out = divisors(t.abs()).expect("|t| >= 1");
    out.extend(out.clone().into_iter().map(|d| -d));
    out
}

/// All (κ, m, n) satisfying the even-family factor identity for gap 2β.
/// Any solution with that gap must appear here; the small gaps admit no
/// parameters at all, which is what establishes the main bound.
pub(crate) fn star_gap_candidates(beta: Int) -> Vec<(Int, Int, Int)> {
    let target = beta * beta * beta + 64;
    let mut out = Vec::new();
    for kappa in divisors(beta * beta).expect("beta² >= 1") {
        for d1 in signed_divisors(target) {
            let d2 = target / d1;
            let den = beta * kappa;
            let (num_m, num_n) = (d1 + 8, d2 + 8);
            if num_m < den || num_n < den || num_m % den != 0 || num_n % den != 0 {
                continue;
            }
            let (Some(m), Some(n)) =
                (is_perfect_square(num_m / den), is_perfect_square(num_n / den))
            else {
                continue;
            };
            if gcd(m, n) == 1 {
                out.push((kappa, m, n));
            }
        }
    }
    out
}

/// Odd-family analogue with factors (βkμ² − 4)(βkn² − 16) and odd k | β².
pub(crate) fn star_star_gap_candidates(beta: Int) -> Vec<(Int, Int, Int)> {
    let target = beta * beta * beta + 64;
    let mut out = Vec::new();
    for k in divisors(beta * beta).expect("beta² >= 1") {
        if k % 2 == 0 {
            continue;
        }
        for d1 in signed_divisors(target) {
            let d2 = target / d1;
            let den = beta * k;
            let (num_mu, num_n) = (d1 + 4, d2 + 16);
            if num_mu < den || num_n < den || num_mu % den != 0 || num_n % den != 0 {
                continue;
            }
            let (Some(mu), Some(n)) =
                (is_perfect_square(num_mu / den), is_perfect_square(num_n / den))
            else {
                continue;
            };
            if n % 2 == 1 && gcd(2 * mu, n) == 1 {
                out.push((k, mu, n));
            }
        }
    }
    out
}

/// The complete solution set of κ⁴m⁴n⁴ − 32κ(m² + n²) = s², which is exactly
/// {(κ, m, n) = (4, 1, 1), s = 0}. Candidates come from four exhaustive
/// sources and every candidate is tested against the equation itself.
pub fn solve_star() -> Vec<StarSolution> {
    let mut candidates: BTreeSet<(Int, Int, Int)> = BTreeSet::new();

    // Gaps 2β ∈ {2, 4, 6}: solutions with a small gap must satisfy the
    // factor identity, so they would surface here.
    for beta in 1..=3 {
        candidates.extend(star_gap_candidates(beta));
    }

    // Remaining solutions obey (κm² − 2)(κn² − 2) ≤ 8; split on factor sign.
    //
    // Zero factor: κm² = 2 forces (κ, m) = (2, 1), where the equation
    // collapses to n⁴ − 4n² − 4 = t², capped by the square-gap bound.
    let cap = isqrt(little_lemma_bound(2, 4) / 2).expect("nonnegative");
    for n in 1..=cap {
        candidates.insert((2, 1, n));
        candidates.insert((2, n, 1));
    }

    // Negative factor: κm² = 1 forces κ = m = 1, where the equation becomes
    // n⁴ − 32n² − 32 = s².
    let cap = isqrt(little_lemma_bound(16, 32) / 2).expect("nonnegative");
    for n in 1..=cap {
        candidates.insert((1, 1, n));
        candidates.insert((1, n, 1));
    }

    // Both factors positive: each factor is at most the whole bound, which
    // boxes the parameters to κm² ≤ 10 and κn² ≤ 10.
    let kappa_cap = STAR_FACTOR_BOUND + 2;
    let mn_cap = isqrt(kappa_cap).expect("nonnegative");
    for kappa in 1..=kappa_cap {
        for m in 1..=mn_cap {
            for n in 1..=mn_cap {
                let f1 = kappa * m * m - 2;
                let f2 = kappa * n * n - 2;
                if f1 >= 1 && f2 >= 1 && f1 * f2 <= STAR_FACTOR_BOUND {
                    candidates.insert((kappa, m, n));
                }
            }
        }
    }

    let mut found: Vec<StarSolution> = candidates
        .into_iter()
        .filter_map(|(kappa, m, n)| try_star(kappa, m, n))
        .collect();
    found.sort();
    found.dedup();
    found
}

/// The complete solution set of k⁴μ⁴n⁴ − 16k(4μ² + n²) = s², which is exactly
/// {(k, μ, n) = (5, 1, 1), s = 15}.
pub fn solve_star_star() -> Vec<StarSolution> {
    let mut candidates: BTreeSet<(Int, Int, Int)> = BTreeSet::new();

    // Gaps 2β ∈ {2, 4, 6, 8}.
    for beta in 1..=4 {
        candidates.extend(star_star_gap_candidates(beta));
    }

    // The factor 5kn² − 16 is negative only for kn² ≤ 3, i.e. (k, n) = (1, 1)
    // or (3, 1); on those lines the product bound says nothing and a direct
    // square-gap cap applies instead.
    //
    // k = 1, n = 1: the equation is μ⁴ − 64μ² − 16 = s².
    let cap = isqrt(little_lemma_bound(32, 16) / 2).expect("nonnegative");
    for mu in 1..=cap {
        candidates.insert((1, mu, 1));
    }

    // k = 3, n = 1: 81μ⁴ − 192μ² − 48 = s². The generic square-gap bound does
    // not apply (2·81 does not divide 192), but s² < (9μ² − 10)² forces
    // s ≤ 9μ² − 11 and comparing the two expressions gives 6μ² ≤ 169.
    let cap = isqrt(169 / 6).expect("nonnegative");
    for mu in 1..=cap {
        candidates.insert((3, mu, 1));
    }

    // k = 1, μ = 1: n⁴ − 16n² − 64 = s² factors as
    // (n² − 8 + s)(n² − 8 − s) = 128, so every factorization of 128 yields
    // the possible n² values.
    for f2 in signed_divisors(128) {
        let f1 = 128 / f2;
        if (f1 + f2) % 2 != 0 || f1 < f2 {
            continue;
        }
        let n_sq = (f1 + f2) / 2 + 8;
        if n_sq < 1 {
            continue;
        }
        if let Some(n) = is_perfect_square(n_sq) {
            candidates.insert((1, 1, n));
        }
    }

    // Both factors positive: (5kμ² − 4)(5kn² − 16) ≤ 189 boxes everything
    // else, since each factor is at most the whole bound.
    let k_cap = (STAR_STAR_FACTOR_BOUND + 16) / 5;
    let mu_cap = isqrt((STAR_STAR_FACTOR_BOUND + 4) / 5).expect("nonnegative");
    let n_cap = isqrt(k_cap).expect("nonnegative");
    for k in (1..=k_cap).step_by(2) {
        for mu in 1..=mu_cap {
            for n in (1..=n_cap).step_by(2) {
                let f1 = 5 * k * mu * mu - 4;
                let f2 = 5 * k * n * n - 16;
                if f1 >= 1 && f2 >= 1 && f1 * f2 <= STAR_STAR_FACTOR_BOUND {
                    candidates.insert((k, mu, n));
                }
            }
        }
    }

    let mut found: Vec<StarSolution> = candidates
        .into_iter()
        .filter_map(|(k, mu, n)| try_star_star(k, mu, n))
        .collect();
    found.sort();
    found.dedup();
    found
}

/// Converts a solution to the rhombus sides it certifies. Fails when
/// k(m² + n²) is not a perfect square, which cannot happen for genuine
/// solutions of either equation.
pub fn to_rhombus(sol: &StarSolution) -> Result<RhombusResult> {
    let (x_sq, a) = match *sol {
        StarSolution::Star { kappa, m, n, .. } => {
            (2 * kappa * (m * m + n * n), kappa * m * n)
        }
        StarSolution::StarStar { k, mu, n, .. } => {
            (k * (4 * mu * mu + n * n), k * mu * n)
        }
    };
    let x = is_perfect_square(x_sq).ok_or_else(|| {
        Error::Contract(format!("k(m² + n²) = {x_sq} is not a perfect square"))
    })?;
    Ok(RhombusResult { x, a, source: *sol })
}

//! Change of variables carrying solutions of the even-family equation onto
//! an elliptic curve in Weierstrass form, verified exactly.
//!
//! With α = κm² and β = κn² the equation κ⁴m⁴n⁴ − 32κ(m² + n²) = s² reads
//! α²β² − 32(α + β) = s². Viewed as a quadratic in β with integer roots, its
//! discriminant 32² + 4α²(32α + s²) must be a square z². Scaling by 2⁸ gives
//!
//!   u² = v³ + s²v² + 2¹⁸   with   v = 2⁵α, u = 2⁴z,
//!
//! and the depressed-cubic substitution X = 9v + 3s², Y = 27u clears the
//! quadratic term, landing on Y² = X³ + pX + q with p = −27s⁴ and
//! q = 54s⁶ + 729·2¹⁸: one curve for each value of s.

use crate::exact::is_perfect_square;
use crate::rhombus::star_residual;
use crate::{Error, Int, Result};

/// A point (X, Y) on the Weierstrass curve Y² = X³ + pX + q belonging to the
/// family member with parameter s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurvePoint {
    pub x: Int,
    pub y: Int,
    pub p: Int,
    pub q: Int,
    pub s: Int,
}

/// Maps a solution (κ, m, n) of the even-family equation to a curve point.
/// Fails with a domain error when the residual is not a nonnegative perfect
/// square; internal-consistency failures past that point cannot occur for
/// genuine solutions.
pub fn star_to_curve(kappa: Int, m: Int, n: Int) -> Result<CurvePoint> {
    let residual = star_residual(kappa, m, n)?;
    let s = is_perfect_square(residual).ok_or_else(|| {
        Error::Domain(format!(
            "residual {residual} of ({kappa}, {m}, {n}) is not a perfect square"
        ))
    })?;
    let alpha = kappa * m * m;
    let beta = kappa * n * n;
    if alpha * alpha * beta * beta - 32 * (alpha + beta) != s * s {
        return Err(Error::Internal("quadratic form of the equation failed".into()));
    }

    let disc = 32 * 32 + 4 * alpha * alpha * (32 * alpha + s * s);
    let z = is_perfect_square(disc).ok_or_else(|| {
        Error::Internal(format!("discriminant {disc} is not a perfect square"))
    })?;

    let v = 32 * alpha;
    let u = 16 * z;
    if u * u != v * v * v + s * s * v * v + (1 << 18) {
        return Err(Error::Internal("cubic form of the equation failed".into()));
    }

    let s2 = s * s;
    let point = CurvePoint {
        x: 9 * v + 3 * s2,
        y: 27 * u,
        p: -27 * s2 * s2,
        q: 54 * s2 * s2 * s2 + 729 * (1 << 18),
        s,
    };
    if !on_curve(&point) {
        return Err(Error::Internal("affine map left the curve".into()));
    }
    Ok(point)
}

/// Exact test of Y² = X³ + pX + q.
pub fn on_curve(pt: &CurvePoint) -> bool {
    pt.y * pt.y == pt.x * pt.x * pt.x + pt.p * pt.x + pt.q
}

/// Integer roots β of the quadratic α²β² − 32β − (32α + s²) = 0. For a
/// genuine solution the original β = κn² is among them.
pub fn beta_roots(alpha: Int, s: Int) -> Result<Vec<Int>> {
    if alpha < 1 {
        return Err(Error::Domain("alpha must be positive".into()));
    }
    let disc = 32 * 32 + 4 * alpha * alpha * (32 * alpha + s * s);
    let z = is_perfect_square(disc).ok_or_else(|| {
        Error::Domain(format!("discriminant {disc} is not a perfect square"))
    })?;
    let den = 2 * alpha * alpha;
    let mut roots = Vec::new();
    for num in [32 + z, 32 - z] {
        if num % den == 0 {
            roots.push(num / den);
        }
    }
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

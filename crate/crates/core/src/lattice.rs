//! Constructive realization of certified pairs on the integer lattice, with
//! exact verification of every embedding. No floating point anywhere.
//!
//! A triangle whose squared sides and area are all integers can be placed
//! with its vertices on Z². The placement here is a line–circle intersection:
//! enumerate lattice vectors U on the circle |U|² = x², then solve the linear
//! constraint 2·U·P = x² + y² − d² (an integer by construction) against
//! |P|² = y² for the third vertex. Doubling the triangle yields the
//! parallelogram.

use crate::parallelogram::AmicablePair;
use crate::exact::{is_perfect_square, isqrt};
use crate::{Error, Int, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: Int,
    pub y: Int,
}

impl LatticePoint {
    pub fn new(x: Int, y: Int) -> Self {
        Self { x, y }
    }
}

/// A polygon on Z² together with the squared side lengths and twice-area it
/// is supposed to realize. [`LatticeEmbedding::verify`] checks the targets
/// against the vertices with nothing but integer arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEmbedding {
    pub vertices: Vec<LatticePoint>,
    pub target_sq_sides: Vec<Int>,
    pub target_area2: Int,
}

impl LatticeEmbedding {
    /// Consecutive squared edge lengths match, |shoelace| matches, and for
    /// quadrilaterals the opposite edge vectors agree.
    pub fn verify(&self) -> bool {
        let k = self.vertices.len();
        if k < 3 || self.target_sq_sides.len() != k {
            return false;
        }
        for i in 0..k {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % k];
            let (dx, dy) = (q.x - p.x, q.y - p.y);
            if dx * dx + dy * dy != self.target_sq_sides[i] {
                return false;
            }
        }
        let Ok(area2) = shoelace_area2(&self.vertices) else {
            return false;
        };
        if area2.abs() != self.target_area2 {
            return false;
        }
        if k == 4 {
            let v = &self.vertices;
            if (v[3].x - v[2].x, v[3].y - v[2].y) != (v[0].x - v[1].x, v[0].y - v[1].y) {
                return false;
            }
        }
        true
    }
}

/// Twice the signed polygon area. Callers take the absolute value.
pub fn shoelace_area2(points: &[LatticePoint]) -> Result<Int> {
    if points.len() < 3 {
        return Err(Error::Domain(format!(
            "shoelace needs at least 3 points, got {}",
            points.len()
        )));
    }
    let mut acc = 0;
    for i in 0..points.len() {
        let p = points[i];
        let q = points[(i + 1) % points.len()];
        acc += p.x * q.y - q.x * p.y;
    }
    Ok(acc)
}

/// Places a triangle with squared sides (x2, y2, d2) and the given area on
/// Z². The inputs must be Heron-consistent: 16·area² = 4·x2·y2 − (x2+y2−d2)².
///
/// The output is canonical: first vertex at the origin, second vertex in the
/// half-plane px > 0 or (px = 0, py > 0), positive shoelace orientation, and
/// the lexicographically smallest such candidate.
pub fn embed_triangle(x2: Int, y2: Int, d2: Int, area: Int) -> Result<LatticeEmbedding> {
    if x2 < 1 || y2 < 1 || d2 < 1 || area < 1 {
        return Err(Error::Domain("squared sides and area must be positive".into()));
    }
    let w = x2 + y2 - d2; // equals 2·U·P for the target shape
    if 4 * x2 * y2 - w * w != 16 * area * area {
        return Err(Error::Domain(format!(
            "Heron inconsistency: 4·{x2}·{y2} − ({w})² ≠ 16·{area}²"
        )));
    }

    let ru = isqrt(x2)?;
    let rp = isqrt(y2)?;
    let mut best: Option<(Int, Int, Int, Int)> = None;
    let mut consider = |u1: Int, u2: Int, p1: Int, p2: Int| {
        if p1 * p1 + p2 * p2 != y2 {
            return;
        }
        if u1 * p2 - u2 * p1 != 2 * area {
            return;
        }
        let cand = (u1, u2, p1, p2);
        if best.is_none() || cand < best.unwrap() {
            best = Some(cand);
        }
    };

    for u1 in -ru..=ru {
        let Some(r) = is_perfect_square(x2 - u1 * u1) else {
            continue;
        };
        for u2 in if r == 0 { vec![0] } else { vec![r, -r] } {
            if !(u1 > 0 || (u1 == 0 && u2 > 0)) {
                continue;
            }
            for p1 in -rp..=rp {
                if u2 != 0 {
                    let num = w - 2 * u1 * p1;
                    let den = 2 * u2;
                    if num % den == 0 {
                        consider(u1, u2, p1, num / den);
                    }
                } else if 2 * u1 * p1 == w {
                    if let Some(r2) = is_perfect_square(y2 - p1 * p1) {
                        consider(u1, u2, p1, r2);
                        if r2 != 0 {
                            consider(u1, u2, p1, -r2);
                        }
                    }
                }
            }
        }
    }

    // TODO: switch the circle scan to a sum-of-two-squares decomposition if
    // side bounds ever grow past ~10^4.
    match best {
        Some((u1, u2, p1, p2)) => Ok(LatticeEmbedding {
            vertices: vec![
                LatticePoint::new(0, 0),
                LatticePoint::new(u1, u2),
                LatticePoint::new(p1, p2),
            ],
            target_sq_sides: vec![x2, d2, y2],
            target_area2: 2 * area,
        }),
        None => Err(Error::Internal(format!(
            "no lattice embedding found for squared sides ({x2}, {y2}, {d2}), area {area}"
        ))),
    }
}

/// Doubles a triangle (O, U, P) into the parallelogram (O, U, U+P−O, P).
pub fn assemble_parallelogram(tri: &LatticeEmbedding) -> Result<LatticeEmbedding> {
    if tri.vertices.len() != 3 {
        return Err(Error::Domain(format!(
            "expected a 3-vertex embedding, got {} vertices",
            tri.vertices.len()
        )));
    }
    let (o, u, p) = (tri.vertices[0], tri.vertices[1], tri.vertices[2]);
    let tri_area2 = shoelace_area2(&tri.vertices)?;
    if tri_area2 == 0 {
        return Err(Error::Domain("degenerate (collinear) triangle".into()));
    }
    let su = {
        let (dx, dy) = (u.x - o.x, u.y - o.y);
        dx * dx + dy * dy
    };
    let sp = {
        let (dx, dy) = (p.x - o.x, p.y - o.y);
        dx * dx + dy * dy
    };
    Ok(LatticeEmbedding {
        vertices: vec![o, u, LatticePoint::new(u.x + p.x - o.x, u.y + p.y - o.y), p],
        target_sq_sides: vec![su, sp, su, sp],
        target_area2: 2 * tri_area2.abs(),
    })
}

/// Realizes both members of a certified pair. The first embedding has sides
/// (x, y) and twice-area 4(a+b); the second has sides (a, b) and twice-area
/// 4(x+y).
pub fn realize_amicable_pair(
    pair: &AmicablePair,
) -> Result<(LatticeEmbedding, LatticeEmbedding)> {
    let first = realize_member(pair.p1.sides(), pair.p2.sides(), pair.s1)?;
    let second = realize_member(pair.p2.sides(), pair.p1.sides(), pair.s2)?;
    Ok((first, second))
}

fn realize_member(
    (x, y): (Int, Int),
    (a, b): (Int, Int),
    root: Int,
) -> Result<LatticeEmbedding> {
    let d2 = x * x + y * y + 2 * root;
    let tri = embed_triangle(x * x, y * y, d2, a + b)?;
    assemble_parallelogram(&tri)
}

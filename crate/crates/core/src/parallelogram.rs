//! The squareness criterion deciding when two side-length pairs admit an
//! amicable pair of lattice parallelograms, plus the exact diagonal, angle,
//! and classification data attached to every certified pair.
//!
//! A pair of side lengths determines everything else: if the parallelogram
//! with sides (x, y) must have area 2(a + b), its angle satisfies
//! sin θ = 2(a+b)/(xy) exactly, and the pair exists on the lattice precisely
//! when x²y² − 4(a+b)² and a²b² − 4(x+y)² are both perfect squares. The
//! square roots of those residuals are carried around as certificates.

use crate::exact::{gcd, is_perfect_square};
use crate::{Error, Int, Result};

/// Side lengths of a candidate parallelogram, stored with x ≤ y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParallelogramSpec {
    x: Int,
    y: Int,
}

impl ParallelogramSpec {
    pub fn new(x: Int, y: Int) -> Result<Self> {
        if x < 1 || y < 1 {
            return Err(Error::Domain(format!(
                "side lengths must be positive, got ({x}, {y})"
            )));
        }
        Ok(if x <= y { Self { x, y } } else { Self { x: y, y: x } })
    }

    pub fn x(&self) -> Int {
        self.x
    }

    pub fn y(&self) -> Int {
        self.y
    }

    pub fn sides(&self) -> (Int, Int) {
        (self.x, self.y)
    }
}

/// A certified amicable pair. s1² = x²y² − 4(a+b)² and s2² = a²b² − 4(x+y)²
/// hold exactly, with (x, y) the sides of `p1` and (a, b) the sides of `p2`.
/// `trivial` marks an equable parallelogram paired with itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmicablePair {
    pub p1: ParallelogramSpec,
    pub p2: ParallelogramSpec,
    pub s1: Int,
    pub s2: Int,
    pub trivial: bool,
}

/// sin θ as an exact reduced fraction. Never a float; [`RationalSine::approx`]
/// exists for display only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalSine {
    num: Int,
    den: Int,
}

impl RationalSine {
    pub fn numerator(&self) -> Int {
        self.num
    }

    pub fn denominator(&self) -> Int {
        self.den
    }

    /// Lossy rendering for humans; 12 significant digits is plenty for a
    /// value in [0, 1].
    pub fn approx(&self) -> String {
        format!("{:.12}", self.num as f64 / self.den as f64)
    }
}

/// Decides the pair condition for sides (x, y) and (a, b). Returns the
/// certified pair when both residuals are perfect squares, `None` otherwise;
/// a negative answer is not an error. The returned pair is canonical: sides
/// sorted within each spec and the lexicographically smaller spec first.
pub fn amicable_condition(x: Int, y: Int, a: Int, b: Int) -> Option<AmicablePair> {
    if x < 1 || y < 1 || a < 1 || b < 1 {
        return None;
    }
    let s1 = is_perfect_square(x * x * y * y - 4 * (a + b) * (a + b))?;
    let s2 = is_perfect_square(a * a * b * b - 4 * (x + y) * (x + y))?;
    let p1 = ParallelogramSpec::new(x, y).expect("validated positive");
    let p2 = ParallelogramSpec::new(a, b).expect("validated positive");
    let (p1, p2, s1, s2) = if p2 < p1 { (p2, p1, s2, s1) } else { (p1, p2, s1, s2) };
    Some(AmicablePair { p1, p2, s1, s2, trivial: p1 == p2 })
}

/// Squared long diagonal d² = x² + y² + 2·√(x²y² − 4(a+b)²) of the
/// parallelogram with sides (x, y) whose partner has sides (a, b).
/// Satisfies x² + y² ≤ d² < (x + y)² whenever defined.
pub fn diagonal_squared(x: Int, y: Int, a: Int, b: Int) -> Result<Int> {
    if x < 1 || y < 1 || a < 1 || b < 1 {
        return Err(Error::Domain("all side lengths must be positive".into()));
    }
    let residual = x * x * y * y - 4 * (a + b) * (a + b);
    let root = is_perfect_square(residual).ok_or_else(|| {
        Error::Domain(format!(
            "x²y² − 4(a+b)² = {residual} is not a perfect square"
        ))
    })?;
    Ok(x * x + y * y + 2 * root)
}

/// sin θ = 2(a+b)/(xy) in lowest terms, where (a, b) are the partner's sides.
pub fn sine_of_angle(x: Int, y: Int, partner_a: Int, partner_b: Int) -> Result<RationalSine> {
    if x < 1 || y < 1 || partner_a < 1 || partner_b < 1 {
        return Err(Error::Domain("all side lengths must be positive".into()));
    }
    let num = 2 * (partner_a + partner_b);
    let den = x * y;
    if num > den {
        return Err(Error::Domain(format!(
            "impossible angle: 2(a+b) = {num} exceeds xy = {den}"
        )));
    }
    let g = gcd(num, den);
    Ok(RationalSine { num: num / g, den: den / g })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// The pair is an equable parallelogram with itself.
    EquableTrivial,
    /// Two genuinely distinct parallelograms.
    AmicableNontrivial,
}

/// Classification of a certified pair. `rectangle_degenerate` is set when a
/// residual vanishes: a zero root means the corresponding member has a right
/// angle, i.e. is a rectangle. The flag can accompany either kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub kind: PairKind,
    pub rectangle_degenerate: bool,
}

pub fn classify(pair: &AmicablePair) -> Classification {
    Classification {
        kind: if pair.trivial {
            PairKind::EquableTrivial
        } else {
            PairKind::AmicableNontrivial
        },
        rectangle_degenerate: pair.s1 == 0 || pair.s2 == 0,
    }
}

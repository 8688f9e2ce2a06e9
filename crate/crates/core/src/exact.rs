//! Exact integer primitives: integer square root, perfect-square detection,
//! divisor enumeration, and the Pythagorean parametrization x² = k(m² + n²)
//! that underlies the rhombus equations.

use crate::{Error, Int, Result};

/// Floor of the square root: the unique r ≥ 0 with r² ≤ n < (r+1)².
pub fn isqrt(n: Int) -> Result<Int> {
    if n < 0 {
        return Err(Error::Domain(format!("isqrt of negative value {n}")));
    }
    Ok((n as u128).isqrt() as Int)
}

const fn square_residue_mask(modulus: u32) -> u128 {
    let mut mask = 0u128;
    let mut r = 0;
    while r < modulus {
        mask |= 1 << ((r * r) % modulus);
        r += 1;
    }
    mask
}

const SQUARES_MOD_64: u128 = square_residue_mask(64);
const SQUARES_MOD_63: u128 = square_residue_mask(63);
const SQUARES_MOD_65: u128 = square_residue_mask(65);

/// The square root of n when n is a perfect square (0 counts), `None`
/// otherwise. Negative inputs are never squares. Residue filters mod 64,
/// 63, and 65 reject almost all non-squares before the root is taken.
pub fn is_perfect_square(n: Int) -> Option<Int> {
    if n < 0 {
        return None;
    }
    let reduced = (n as u128 % (63 * 64 * 65)) as u32;
    if SQUARES_MOD_64 & (1 << (reduced % 64)) == 0
        || SQUARES_MOD_63 & (1 << (reduced % 63)) == 0
        || SQUARES_MOD_65 & (1 << (reduced % 65)) == 0
    {
        return None;
    }
    let r = (n as u128).isqrt() as Int;
    (r * r == n).then_some(r)
}

/// All positive divisors of n, ascending. Trial division up to √n; every
/// input in this crate is desk-scale.
pub fn divisors(n: Int) -> Result<Vec<Int>> {
    if n < 1 {
        return Err(Error::Domain(format!("divisors of non-positive value {n}")));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Nonnegative greatest common divisor.
pub fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Which leg of the triple (s, 4a, x²) the quantity 4a occupies.
///
/// Case A: 4a = 2kmn (the even leg). Case B: 4a = k(n² − m²) with n > m.
/// Both share the hypotenuse relation x² = k(m² + n²) and gcd(m, n) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleCase {
    A,
    B,
}

/// One Pythagorean parametrization of a pair (x, a).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleParam {
    pub k: Int,
    pub m: Int,
    pub n: Int,
    pub case: TripleCase,
}

impl TripleParam {
    /// Reconstructs x² = k(m² + n²).
    pub fn x_squared(&self) -> Int {
        self.k * (self.m * self.m + self.n * self.n)
    }

    /// Reconstructs 4a from the case equations.
    pub fn four_a(&self) -> Int {
        match self.case {
            TripleCase::A => 2 * self.k * self.m * self.n,
            TripleCase::B => self.k * (self.n * self.n - self.m * self.m),
        }
    }
}

/// Result of [`parametrize_triples`]. `precondition_ok` is false when
/// x⁴ − 16a² is negative or not a perfect square; search callers probe
/// freely, so that is a soft diagnostic rather than an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametrization {
    pub triples: Vec<TripleParam>,
    pub precondition_ok: bool,
}

/// Every (k, m, n, case) with gcd(m, n) = 1 satisfying x² = k(m² + n²) and
/// the case equation for 4a. Case A entries are reported with m ≥ n (the
/// pair is unordered there); case B requires n > m. Output is sorted.
pub fn parametrize_triples(x: Int, a: Int) -> Parametrization {
    let fail = Parametrization { triples: Vec::new(), precondition_ok: false };
    if x < 1 || a < 1 {
        return fail;
    }
    let x2 = x * x;
    let four_a = 4 * a;
    let residual = x2 * x2 - four_a * four_a;
    if residual < 0 || is_perfect_square(residual).is_none() {
        return fail;
    }

    let mut triples = Vec::new();
    for k in divisors(x2).expect("x2 >= 1") {
        let sum_sq = x2 / k; // m² + n²

        // Case A: mn = 4a / (2k); recover the pair from
        // (m+n)² = S + 2P and (m−n)² = S − 2P.
        if four_a % (2 * k) == 0 {
            let prod = four_a / (2 * k);
            let diff = sum_sq - 2 * prod;
            if diff >= 0 {
                if let (Some(u), Some(v)) =
                    (is_perfect_square(sum_sq + 2 * prod), is_perfect_square(diff))
                {
                    if (u + v) % 2 == 0 {
                        let m = (u + v) / 2;
                        let n = (u - v) / 2;
                        if n >= 1 && m * n == prod && gcd(m, n) == 1 {
                            triples.push(TripleParam { k, m, n, case: TripleCase::A });
                        }
                    }
                }
            }
        }

        // Case B: n² − m² = 4a / k, so n² = (S+D)/2 and m² = (S−D)/2.
        if four_a % k == 0 {
            let diff = four_a / k;
            let (n2_twice, m2_twice) = (sum_sq + diff, sum_sq - diff);
            if m2_twice >= 2 && m2_twice % 2 == 0 && n2_twice % 2 == 0 {
                if let (Some(n), Some(m)) =
                    (is_perfect_square(n2_twice / 2), is_perfect_square(m2_twice / 2))
                {
                    if m >= 1 && n > m && gcd(m, n) == 1 {
                        triples.push(TripleParam { k, m, n, case: TripleCase::B });
                    }
                }
            }
        }
    }
    triples.sort();
    triples.dedup();
    Parametrization { triples, precondition_ok: true }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0).unwrap(), 0);
        assert_eq!(isqrt(225).unwrap(), 15);
        assert_eq!(isqrt(224).unwrap(), 14);
        assert!(isqrt(-1).is_err());
    }

    #[test]
    fn isqrt_contract_exhaustive_to_a_million() {
        for n in 0..=1_000_000 {
            let r = isqrt(n).unwrap();
            assert!(r * r <= n, "floor failed at {n}");
            assert!((r + 1) * (r + 1) > n, "ceiling failed at {n}");
        }
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(0), Some(0));
        assert_eq!(is_perfect_square(225), Some(15));
        assert_eq!(is_perfect_square(-111), None);
    }

    #[test]
    fn perfect_square_exhaustive_to_a_million() {
        let mut squares = std::collections::HashSet::new();
        let mut r = 0;
        while r * r <= 1_000_000 {
            squares.insert(r * r);
            r += 1;
        }
        for n in 0..=1_000_000 {
            assert_eq!(is_perfect_square(n).is_some(), squares.contains(&n), "at {n}");
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(18).unwrap(), vec![1, 2, 3, 6, 9, 18]);
        assert_eq!(divisors(91).unwrap(), vec![1, 7, 13, 91]);
        assert!(divisors(0).is_err());
        assert!(divisors(-4).is_err());
    }

    #[test]
    fn parametrize_square_side_four() {
        let p = parametrize_triples(4, 4);
        assert!(p.precondition_ok);
        assert_eq!(
            p.triples,
            vec![TripleParam { k: 8, m: 1, n: 1, case: TripleCase::A }]
        );
    }

    #[test]
    fn parametrize_rhombus_side_five() {
        let p = parametrize_triples(5, 5);
        assert!(p.precondition_ok);
        assert_eq!(
            p.triples,
            vec![TripleParam { k: 5, m: 2, n: 1, case: TripleCase::A }]
        );
    }

    #[test]
    fn parametrize_soft_failure() {
        // 81 − 16 = 65 is not a perfect square
        let p = parametrize_triples(3, 1);
        assert!(!p.precondition_ok);
        assert!(p.triples.is_empty());
    }

    /// Brute re-enumeration of every (k, m, n, case): k runs over all values
    /// up to x² via the divisibility k(m² + n²) = x², m and n up to x.
    fn brute_triples(x: Int, a: Int) -> Vec<TripleParam> {
        let x2 = x * x;
        let four_a = 4 * a;
        let mut out = Vec::new();
        for m in 1..=x {
            for n in 1..=x {
                let sum_sq = m * m + n * n;
                if sum_sq > x2 || x2 % sum_sq != 0 || gcd(m, n) != 1 {
                    continue;
                }
                let k = x2 / sum_sq;
                if m >= n && 2 * k * m * n == four_a {
                    out.push(TripleParam { k, m, n, case: TripleCase::A });
                }
                if n > m && k * (n * n - m * m) == four_a {
                    out.push(TripleParam { k, m, n, case: TripleCase::B });
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn parametrization_complete_at_desk_scale() {
        // Every Pythagorean triple (s, 4a, x²) met by the searches admits at
        // least one parametrization, and the fast enumeration agrees with the
        // brute one exactly.
        let mut seen_nonempty = 0;
        for x in 1..=60 {
            for a in 1..=60 {
                let p = parametrize_triples(x, a);
                let brute = brute_triples(x, a);
                if p.precondition_ok {
                    assert_eq!(p.triples, brute, "mismatch at ({x}, {a})");
                    assert!(!p.triples.is_empty(), "no parametrization for ({x}, {a})");
                    seen_nonempty += 1;
                } else {
                    assert!(brute.is_empty(), "brute found triples despite failed precondition at ({x}, {a})");
                }
            }
        }
        assert!(seen_nonempty > 2, "search range never hit the precondition");
    }
}

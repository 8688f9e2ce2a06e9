//! Exact-integer classification of amicable and equable lattice parallelograms.
//!
//! Two polygons form an *amicable pair* when the area of each equals the
//! perimeter of the other; an *equable* polygon paired with itself is the
//! trivial case. For lattice parallelograms with integer sides (x, y) and
//! (a, b) the pair condition is purely arithmetic: both x²y² − 4(a+b)² and
//! a²b² − 4(x+y)² must be perfect squares. Everything in this crate is built
//! on that criterion with exact 128-bit integers; no floating point takes
//! part in any correctness decision.
//!
//! The rhombus classification is derived twice, by independent routes, and
//! the two routes are diffed:
//!
//! - [`rhombus`] solves the two quartic Diophantine equations governing the
//!   rhombus case by a bounded search whose completeness rests on explicit
//!   factor identities and square-gap bounds.
//! - [`oracle`] re-derives the same answer (and the rectangle counts) by
//!   definition-level brute force.
//!
//! [`lattice`] turns every certified pair into actual vertices on Z² and
//! verifies them exactly, [`elliptic`] maps solutions of the even-family
//! equation onto a Weierstrass curve as a further consistency check, and
//! [`cli`] backs the `amicable` binary with text, JSON, and CSV reports.

#![forbid(unsafe_code)]

pub mod cli;
pub mod elliptic;
pub mod exact;
pub mod lattice;
pub mod oracle;
pub mod parallelogram;
pub mod report;
pub mod rhombus;

/// Scalar type for every exact quantity in the crate. Signed 128-bit with
/// overflow checks enabled in all build profiles, so arithmetic past 2¹²⁷
/// aborts instead of wrapping.
pub type Int = i128;

/// Error type shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A caller-side contract was violated (e.g. an odd k where the
    /// reduction proves k must be even).
    #[error("contract violation: {0}")]
    Contract(String),
    /// An identity that holds for every genuine input failed; indicates a
    /// bug, not bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

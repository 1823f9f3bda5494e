//! Exact coefficient arithmetic.
//!
//! All symbolic quantities live in `Q(v, z1, .., zm)` with `q = v^2`. The
//! factor `|2|^{1/2}` is the monomial `v^{-e}` where `e = val(2)` is passed in
//! by the caller. Variable 0 is always `v`; variables `1..` are the
//! unramified-character coordinates.

mod json;
pub mod linalg;
mod laurent;
mod ratfrac;
mod reconstruct;
mod series;

pub use json::{q_to_string, FracJson, PolyJson, TermJson};
pub use laurent::LaurentPoly;
pub use ratfrac::{rf_arith, ArithOp, RatFrac};
pub use reconstruct::{rf_reconstruct, rf_reconstruct_upoly, UPoly};
pub use series::{cauchy_product, rf_series};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Exact rational numbers.
pub type Q = BigRational;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes after binding {binding}")]
    VanishingDenominator { binding: String },
    #[error("variable index {0} is not declared")]
    UnknownVariable(usize),
    #[error("pole at {var} = 0")]
    PoleAtZero { var: String },
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sample points are not distinct")]
    RepeatedPoint,
    #[error("no rational function with degree bound ({0}, {1}) fits the samples")]
    InconsistentSamples(usize, usize),
    #[error("malformed encoding: {0}")]
    Parse(String),
}

/// Builds the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Integer power of a rational; negative exponents invert.
pub fn q_pow(x: &Q, k: i64) -> Q {
    let mut acc = <Q as One>::one();
    let base = if k < 0 { x.recip() } else { x.clone() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Name of variable `i` in a ring with `nvars` variables.
///
/// Variable 0 is `v`. With a single character variable it is `z`, otherwise
/// `z1, z2, ..`.
pub fn var_name(i: usize, nvars: usize) -> String {
    match (i, nvars) {
        (0, _) => "v".to_string(),
        (1, 2) => "z".to_string(),
        (i, _) => format!("z{i}"),
    }
}

/// Coefficient rings usable in Hecke algebras and modules.
pub trait Scalar: Clone + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inv(&self) -> Option<Self>;
    fn from_q(x: &Q) -> Self;
    /// Value equality (cross-multiplication for fractions).
    fn eq_val(&self, o: &Self) -> bool;

    fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}

impl Scalar for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn eq_val(&self, o: &Self) -> bool {
        self == o
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `n` or `n/d`.
pub fn parse_q(s: &str) -> Result<Q, AlgError> {
    let s = s.trim();
    let bad = || AlgError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Q::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AlgError::DivisionByZero);
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Absolute value helper kept here so callers need not import `Signed`.
pub fn q_abs(x: &Q) -> Q {
    x.abs()
}

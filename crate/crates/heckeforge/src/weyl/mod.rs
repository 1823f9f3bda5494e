//! Affine Weyl groups of type C.
//!
//! Elements are affine maps `x -> trans + u x` of `Z^n` with `u` a signed
//! permutation. Every simple system (`s`, `s'`, `t`, `t'` and Levi
//! subsystems) is a set of generators inside this one group, so reduced
//! words are derived data and elements compare by their canonical form.

mod affine;
mod parabolic;
mod signed_perm;
mod system;
mod words;

pub use affine::{dot, is_long, type_c_roots, AffineElt, AffineEltJson, AffineRoot, Order, RootClass};
pub use parabolic::{
    min_coset_reps, poincare_poly, separating_reduced_roots, shared_reduced_roots, LeviData, Parabolic,
};
pub use signed_perm::{SignedPerm, SignedPermJson};
pub use system::{
    AffineSystem, Generator, Levels, SystemKind, WeightProfile, ELL, ELL0, ELL2, ELL_PRIME,
};
pub use words::{embed_prime, embed_prime_word, flip_count, occurrence_count, parse_word};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("generator {label} does not exist in system {system}")]
    InvalidIndex { label: usize, system: &'static str },
    #[error("element is not in the group of system {system}")]
    NotInSubgroup { system: &'static str },
    #[error("generator {label} occurs {} and {} times in two reduced words", counts.0, counts.1)]
    InconsistentOccurrence { label: usize, counts: (usize, usize) },
    #[error("subgroup exceeds {cap} elements")]
    InfiniteSubgroup { cap: usize },
    #[error("parabolics have different Levi factors")]
    MismatchedLevi,
    #[error("parse error: {0}")]
    Parse(String),
}

/// JSON word `{system, indices}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub system: String,
    pub indices: Vec<usize>,
}

/// Coordinate reversal `e_i -> e_{n+1-i}`; it carries the backward base to
/// the forward one and `t_i` to `s_{n+1-i}`.
pub fn reversal(n: usize) -> SignedPerm {
    SignedPerm::new((0..n).rev().collect(), vec![1; n])
}

/// `pi u pi^{-1}` for the coordinate reversal `pi`.
pub fn reverse_conjugate(u: &SignedPerm) -> SignedPerm {
    let p = reversal(u.n());
    p.mul(u).mul(&p)
}

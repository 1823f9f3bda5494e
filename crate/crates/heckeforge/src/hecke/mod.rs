//! Iwahori-Hecke algebras of the affine type C family.
//!
//! The split (`+`) algebra lives on `s_0..s_n` with `p_0 = 1` and
//! `p_i = q`; the non-split (`-`) algebra lives on `s'_1..s'_n` with
//! `p'_1 = q^2` and `p'_i = q`. Both are generic in the coefficient ring.

mod algebra;
mod character;
mod element;
mod idempotent;
mod levi;

pub use algebra::HeckeAlgebra;
pub use character::{
    bond_order, braid_holds, character_value, check_character, index_character, quadratic_defect, sign_character,
};
pub use element::{HeckeElt, HeckeEltJson, TermJson};
pub use idempotent::{poincare_value, spherical_idempotent, spherical_labels, spherical_poincare, spherical_sum};
pub use levi::{
    central_direction, coweight_order, dominant_split, is_dominant, modulus, modulus_exponent, theta, theta_dominant, theta_with,
    tnor, tnor_basis, tnor_basis_with, translation_part, Levi,
};

use crate::exactalg::AlgError;
use crate::weyl::WeylError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "+" | "plus" => Some(Sign::Plus),
            "-" | "minus" => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// Which weighted length the trace form uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Grading {
    Orthogonal,
    Metaplectic,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("theta depends on the dominant decomposition")]
    ThetaInconsistent,
    #[error("no central element makes the input positive within the search radius")]
    NoCentralElement,
    #[error("normalized spherical sum is not idempotent")]
    NotIdempotent,
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
}

//! Finite-dimensional modules over the Hecke algebras with `v` specialized
//! to a rational number: principal series by saturation, spherical vectors,
//! intertwiners, c-functions, Jacquet restriction and Aubert duality.

mod aubert;
mod cfun;
mod induce;
mod module;
mod scan;

pub use aubert::{aubert_dual, jacquet_restrict, probe_set, restrict_lattice, VirtualChar};
pub use cfun::{
    c_closed, c_direct_numeric, c_minus_at, c_minus_rank1, c_numeric, c_rank1_numeric, char_monomial, cocycle_closed, default_v,
    eval_point, matched_d_function, rank1_factor, s_word_of_t_word, CMinusRank1, Calibration,
};
pub use induce::{generic_char, induce, induce_rep, InduceOptions, LatticeRep};
pub use module::{endomorphism_dim, intertwiner_space, intertwiner_space_generic, FinModule, ModuleJson};
pub use scan::{is_reducible, reducibility_scan, scan_grid, ScanPoint};

use crate::exactalg::{AlgError, Q};
use crate::hecke::HeckeError;
use crate::weyl::{SignedPerm, WeylError};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PsError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("saturation did not stabilize up to radius {0}")]
    NoStabilization(usize),
    #[error("relation failure: {0}")]
    RelationFailure(String),
    #[error("spherical projector has rank {0}, expected 1")]
    ProjectorRank(usize),
    #[error("module has no T_e basis label")]
    NoIdentityLabel,
    #[error("no value given for generator {0}")]
    MissingValue(usize),
    #[error("intertwiner space has dimension {0}, expected 1")]
    IntertwinerDim(usize),
    #[error("rank-one factor has a pole at this character")]
    Pole,
    #[error("normalization functional vanishes on the intertwiner")]
    Degenerate,
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
}

/// Unramified character, `z[i] = chi(theta_{e_i})`; unused coordinates hold 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramChar {
    pub z: Vec<Q>,
}

impl UnramChar {
    pub fn new(z: Vec<Q>) -> Result<Self, PsError> {
        if z.iter().any(|x| x.is_zero()) {
            return Err(PsError::Pole);
        }
        Ok(UnramChar { z })
    }

    /// `chi(theta_lambda)`.
    pub fn eval(&self, lambda: &[i64]) -> Q {
        let mut r = Q::one();
        for (z, &c) in self.z.iter().zip(lambda) {
            let b = if c >= 0 { z.clone() } else { z.recip() };
            for _ in 0..c.unsigned_abs() {
                r *= &b;
            }
        }
        r
    }

    /// `(u chi)(lambda) = chi(u^{-1} lambda)`.
    pub fn act(&self, u: &SignedPerm) -> Self {
        let n = self.z.len();
        let ui = u.inverse();
        let z = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                self.eval(&ui.apply(&e))
            })
            .collect();
        UnramChar { z }
    }
}

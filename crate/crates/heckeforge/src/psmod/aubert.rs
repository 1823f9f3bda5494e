use super::induce::{induce_rep, InduceOptions, LatticeRep};
use super::module::FinModule;
use super::PsError;
use crate::exactalg::Q;
use crate::hecke::{theta, HeckeAlgebra};
use crate::weyl::AffineElt;
use num_traits::Zero;

/// Restriction to the translation subalgebra: the matrices of `theta_{e_i}`.
pub fn restrict_lattice(m: &FinModule) -> Result<LatticeRep, PsError> {
    let n = m.alg.n();
    let theta_mats = m
        .alg
        .sys
        .coords
        .iter()
        .map(|&i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            m.act(&theta(&m.alg, &e)?)
        })
        .collect::<Result<Vec<_>, PsError>>()?;
    Ok(LatticeRep { theta: theta_mats })
}

/// `i_B r_B M`.
pub fn jacquet_restrict(m: &FinModule) -> Result<FinModule, PsError> {
    induce_rep(&m.alg, &restrict_lattice(m)?, InduceOptions::default())
}

/// Integer combination of modules, compared through traces.
#[derive(Clone, Debug, Default)]
pub struct VirtualChar {
    pub terms: Vec<(i64, FinModule)>,
}

impl VirtualChar {
    pub fn of(m: FinModule) -> Self {
        VirtualChar { terms: vec![(1, m)] }
    }

    pub fn trace(&self, x: &AffineElt) -> Result<Q, PsError> {
        let mut t = Q::zero();
        for (c, m) in &self.terms {
            t += m.trace(x)? * Q::from_integer((*c).into());
        }
        Ok(t)
    }

    /// Virtual dimension.
    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(c, m)| c * m.dim() as i64).sum()
    }

    /// Trace differences on the probes vanish.
    pub fn agrees_on(&self, o: &Self, probes: &[AffineElt]) -> Result<bool, PsError> {
        for x in probes {
            if self.trace(x)? != o.trace(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `D[M] = [i_B r_B M] - [M]`, extended linearly; defined for rank-one lattices.
pub fn aubert_dual(v: &VirtualChar) -> Result<VirtualChar, PsError> {
    let mut out = Vec::new();
    for (c, m) in &v.terms {
        if m.alg.sys.coords.len() != 1 {
            return Err(PsError::Unsupported("duality is implemented for rank-one lattices".into()));
        }
        out.push((*c, jacquet_restrict(m)?));
        out.push((-c, m.clone()));
    }
    Ok(VirtualChar { terms: out })
}

/// `{T_x : l(x) <= r}`.
pub fn probe_set(alg: &HeckeAlgebra<Q>, r: usize) -> Vec<AffineElt> {
    alg.sys.ball(r)
}

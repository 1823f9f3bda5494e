use super::algebra::HeckeAlgebra;
use super::element::HeckeElt;
use super::HeckeError;
use crate::exactalg::{LaurentPoly, Scalar};
use crate::weyl::poincare_poly;

/// Labels of the spherical subgroup: the level-zero generators.
pub fn spherical_labels<C: Scalar>(g: &HeckeAlgebra<C>) -> Vec<usize> {
    g.sys.finite_labels()
}

/// Poincare polynomial of the spherical subgroup in `v`, orthogonal grading.
pub fn spherical_poincare<C: Scalar>(g: &HeckeAlgebra<C>) -> Result<LaurentPoly, HeckeError> {
    Ok(poincare_poly(&g.sys, &g.orth, &spherical_labels(g))?)
}

/// `sum_{w in W_0} T_w`, the unnormalized spherical element.
pub fn spherical_sum<C: Scalar>(g: &HeckeAlgebra<C>) -> Result<HeckeElt<C>, HeckeError> {
    let group = g.sys.subgroup(&spherical_labels(g), 1 << 20)?;
    let mut e = HeckeElt::zero();
    for w in group {
        e.add_term(w, C::one());
    }
    Ok(e)
}

/// `W(q)^{-1} sum_{w in W_0} T_w`.
///
/// The normalization is checked: `E E = W E` for the unnormalized sum.
pub fn spherical_idempotent<C: Scalar>(g: &HeckeAlgebra<C>) -> Result<HeckeElt<C>, HeckeError> {
    let sum = spherical_sum(g)?;
    let w = poincare_value(g)?;
    if !g.mul(&sum, &sum).eq_val(&sum.scale(&w)) {
        return Err(HeckeError::NotIdempotent);
    }
    Ok(sum.scale(&w.inv().ok_or(HeckeError::NotIdempotent)?))
}

/// `W(q)` evaluated in the coefficient ring.
pub fn poincare_value<C: Scalar>(g: &HeckeAlgebra<C>) -> Result<C, HeckeError> {
    let group = g.sys.subgroup(&spherical_labels(g), 1 << 20)?;
    let mut acc = C::zero();
    for w in &group {
        acc = acc.add(&g.q_pow(g.orth_length(w)));
    }
    Ok(acc)
}

use crate::exactalg::{FracJson, RatFrac, Scalar};
use crate::weyl::{AffineElt, AffineEltJson};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Finite sum `sum c_w T_w`; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct HeckeElt<C: Scalar> {
    terms: BTreeMap<AffineElt, C>,
}

impl<C: Scalar> Default for HeckeElt<C> {
    fn default() -> Self {
        HeckeElt { terms: BTreeMap::new() }
    }
}

impl<C: Scalar> HeckeElt<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c T_x`.
    pub fn term(x: AffineElt, c: C) -> Self {
        let mut h = Self::zero();
        h.add_term(x, c);
        h
    }

    pub fn basis(x: AffineElt) -> Self {
        Self::term(x, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElt, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &AffineElt> {
        self.terms.keys()
    }

    pub fn coeff(&self, x: &AffineElt) -> C {
        self.terms.get(x).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, x: AffineElt, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(y) => {
                let s = y.add(&c);
                if s.is_zero() {
                    self.terms.remove(&x);
                } else {
                    *y = s;
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (x, c) in &o.terms {
            r.add_term(x.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        HeckeElt {
            terms: self.terms.iter().map(|(x, c)| (x.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut r = Self::zero();
        for (x, c) in &self.terms {
            r.add_term(x.clone(), c.mul(k));
        }
        r
    }

    /// Coefficientwise value equality.
    pub fn eq_val(&self, o: &Self) -> bool {
        self.sub(o).terms.values().all(|c| c.is_zero())
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> HeckeElt<D> {
        let mut r = HeckeElt::zero();
        for (x, c) in &self.terms {
            r.add_term(x.clone(), f(c));
        }
        r
    }
}

/// JSON term `{elt, coeff}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub elt: AffineEltJson,
    pub coeff: FracJson,
}

/// JSON element `{algebra_id, terms}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeEltJson {
    pub algebra_id: String,
    pub terms: Vec<TermJson>,
}

impl HeckeElt<RatFrac> {
    pub fn to_json(&self, algebra_id: &str) -> HeckeEltJson {
        HeckeEltJson {
            algebra_id: algebra_id.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(x, c)| TermJson {
                    elt: x.to_json(),
                    coeff: c.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &HeckeEltJson) -> Option<Self> {
        let mut h = Self::zero();
        for t in &j.terms {
            h.add_term(AffineElt::from_json(&t.elt)?, RatFrac::from_json(&t.coeff).ok()?);
        }
        Some(h)
    }
}

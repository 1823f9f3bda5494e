use super::element::HeckeElt;
use super::{Grading, HeckeError, Sign};
use crate::exactalg::{RatFrac, Scalar, Q};
use crate::weyl::{AffineElt, AffineSystem, WeightProfile, ELL, ELL0, ELL2, ELL_PRIME};

/// Iwahori-Hecke algebra of a reflection system in the `T_w` basis.
///
/// Parameters are `p_s = q^{L_orth(s)}` with `q = v^2`; the quadratic
/// relation is `(T_s - p_s)(T_s + 1) = 0`. The metaplectic and orthogonal
/// algebras share this presentation, so the correspondence between them is
/// the choice of `grading`, which only affects the trace form.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<C: Scalar> {
    pub sys: AffineSystem,
    pub sign: Sign,
    pub orth: WeightProfile,
    pub meta: WeightProfile,
    pub grading: Grading,
    v: C,
    vinv: C,
    params: Vec<C>,
    pinv: Vec<C>,
}

impl<C: Scalar> HeckeAlgebra<C> {
    /// Algebra on `sys` with the weight profiles of `sign`, `v` taking the given value.
    pub fn with_system(sys: AffineSystem, sign: Sign, v: C) -> Self {
        let (orth, meta) = match sign {
            Sign::Plus => (ELL0, ELL),
            Sign::Minus => (ELL2, ELL_PRIME),
        };
        let vinv = v.inv().expect("v must be invertible");
        let params: Vec<C> = sys
            .gens
            .iter()
            .map(|g| v.pow(2 * orth.weight(g.root.class())).unwrap())
            .collect();
        let pinv = params.iter().map(|p| p.inv().unwrap()).collect();
        HeckeAlgebra {
            sys,
            sign,
            orth,
            meta,
            grading: Grading::Orthogonal,
            v,
            vinv,
            params,
            pinv,
        }
    }

    /// The split-case algebra on `s_0..s_n`.
    pub fn plus(n: usize, v: C) -> Self {
        Self::with_system(AffineSystem::s(n), Sign::Plus, v)
    }

    /// The non-split algebra on `s'_1..s'_n`.
    pub fn minus(n: usize, v: C) -> Self {
        Self::with_system(AffineSystem::sprime(n), Sign::Minus, v)
    }

    pub fn new(n: usize, sign: Sign, v: C) -> Self {
        match sign {
            Sign::Plus => Self::plus(n, v),
            Sign::Minus => Self::minus(n, v),
        }
    }

    /// Same algebra with another active grading.
    pub fn with_grading(mut self, g: Grading) -> Self {
        self.grading = g;
        self
    }

    pub fn n(&self) -> usize {
        self.sys.n
    }

    pub fn v(&self) -> &C {
        &self.v
    }

    /// `v^k`.
    pub fn v_pow(&self, k: i64) -> C {
        if k >= 0 {
            self.v.pow(k).unwrap()
        } else {
            self.vinv.pow(-k).unwrap()
        }
    }

    pub fn q_pow(&self, k: i64) -> C {
        self.v_pow(2 * k)
    }

    /// Parameter `p_s` of the generator at position `idx`.
    pub fn param(&self, idx: usize) -> &C {
        &self.params[idx]
    }

    pub fn param_of(&self, label: usize) -> Result<&C, HeckeError> {
        let idx = self.gen_index(label)?;
        Ok(&self.params[idx])
    }

    pub fn gen_index(&self, label: usize) -> Result<usize, HeckeError> {
        self.sys
            .gens
            .iter()
            .position(|g| g.label == label)
            .ok_or(HeckeError::Weyl(crate::weyl::WeylError::InvalidIndex {
                label,
                system: self.sys.kind.name(),
            }))
    }

    pub fn active_profile(&self) -> WeightProfile {
        match self.grading {
            Grading::Orthogonal => self.orth,
            Grading::Metaplectic => self.meta,
        }
    }

    pub fn one(&self) -> HeckeElt<C> {
        HeckeElt::basis(self.sys.identity())
    }

    /// `T_x`; fails outside the algebra's group.
    pub fn basis_elt(&self, x: &AffineElt) -> Result<HeckeElt<C>, HeckeError> {
        self.check_member(x)?;
        Ok(HeckeElt::basis(x.clone()))
    }

    /// `T_s` for the generator with the given label.
    pub fn gen(&self, label: usize) -> Result<HeckeElt<C>, HeckeError> {
        let idx = self.gen_index(label)?;
        Ok(HeckeElt::basis(self.sys.gens[idx].elt.clone()))
    }

    fn check_member(&self, x: &AffineElt) -> Result<(), HeckeError> {
        let (omega, _) = self.sys.decompose(x);
        if omega.is_identity() || self.sys.kind == crate::weyl::SystemKind::Levi {
            Ok(())
        } else {
            Err(HeckeError::Weyl(crate::weyl::WeylError::NotInSubgroup {
                system: self.sys.kind.name(),
            }))
        }
    }

    /// `T_s h` for the generator at position `idx`.
    pub fn left_mul_gen(&self, idx: usize, h: &HeckeElt<C>) -> HeckeElt<C> {
        let g = &self.sys.gens[idx];
        let p = &self.params[idx];
        let pm1 = p.sub(&C::one());
        let mut r = HeckeElt::zero();
        for (w, c) in h.terms() {
            let sw = g.elt.mul(w);
            if self.sys.is_left_descent(w, g) {
                r.add_term(sw, c.mul(p));
                r.add_term(w.clone(), c.mul(&pm1));
            } else {
                r.add_term(sw, c.clone());
            }
        }
        r
    }

    /// `h T_s` for the generator at position `idx`.
    pub fn right_mul_gen(&self, h: &HeckeElt<C>, idx: usize) -> HeckeElt<C> {
        let g = &self.sys.gens[idx];
        let p = &self.params[idx];
        let pm1 = p.sub(&C::one());
        let mut r = HeckeElt::zero();
        for (w, c) in h.terms() {
            let ws = w.mul(&g.elt);
            if self.sys.is_right_descent(w, g) {
                r.add_term(ws, c.mul(p));
                r.add_term(w.clone(), c.mul(&pm1));
            } else {
                r.add_term(ws, c.clone());
            }
        }
        r
    }

    fn label_index(&self, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&l| self.gen_index(l).unwrap()).collect()
    }

    /// `T_x h`, using `T_x = T_omega T_{s_1} .. T_{s_m}`.
    pub fn left_mul_basis(&self, x: &AffineElt, h: &HeckeElt<C>) -> HeckeElt<C> {
        let (omega, word) = self.sys.decompose(x);
        let mut r = h.clone();
        for &i in self.label_index(&word).iter().rev() {
            r = self.left_mul_gen(i, &r);
        }
        if omega.is_identity() {
            return r;
        }
        let mut out = HeckeElt::zero();
        for (w, c) in r.terms() {
            out.add_term(omega.mul(w), c.clone());
        }
        out
    }

    /// `h T_y`.
    pub fn right_mul_basis(&self, h: &HeckeElt<C>, y: &AffineElt) -> HeckeElt<C> {
        let (omega, word) = self.sys.decompose(y);
        let mut r = if omega.is_identity() {
            h.clone()
        } else {
            let mut t = HeckeElt::zero();
            for (w, c) in h.terms() {
                t.add_term(w.mul(&omega), c.clone());
            }
            t
        };
        for i in self.label_index(&word) {
            r = self.right_mul_gen(&r, i);
        }
        r
    }

    pub fn mul(&self, a: &HeckeElt<C>, b: &HeckeElt<C>) -> HeckeElt<C> {
        let mut out = HeckeElt::zero();
        if a.len() <= b.len() {
            for (x, c) in a.terms() {
                out = out.add(&self.left_mul_basis(x, b).scale(c));
            }
        } else {
            for (y, c) in b.terms() {
                out = out.add(&self.right_mul_basis(a, y).scale(c));
            }
        }
        out
    }

    /// `T_x^{-1}` from `T_s^{-1} = p_s^{-1} T_s + (p_s^{-1} - 1)`.
    pub fn invert_basis(&self, x: &AffineElt) -> HeckeElt<C> {
        let (omega, word) = self.sys.decompose(x);
        let mut r = HeckeElt::basis(omega.inverse());
        for i in self.label_index(&word) {
            let pi = &self.pinv[i];
            let t = self.left_mul_gen(i, &r).scale(pi);
            r = t.add(&r.scale(&pi.sub(&C::one())));
        }
        r
    }

    /// `T_w -> T_{w^{-1}}`.
    pub fn star(&self, a: &HeckeElt<C>) -> HeckeElt<C> {
        let mut r = HeckeElt::zero();
        for (x, c) in a.terms() {
            r.add_term(x.inverse(), c.clone());
        }
        r
    }

    /// Coefficient of `T_e`.
    pub fn te_coeff(&self, a: &HeckeElt<C>) -> C {
        a.coeff(&self.sys.identity())
    }

    /// `sum_w a_w b_w q^{L(w)}` with `L` the active grading.
    pub fn trace_form(&self, a: &HeckeElt<C>, b: &HeckeElt<C>) -> C {
        let p = self.active_profile();
        let mut acc = C::zero();
        for (x, c) in a.terms() {
            let d = b.coeff(x);
            if !d.is_zero() {
                acc = acc.add(&c.mul(&d).mul(&self.q_pow(self.sys.weighted_length(x, &p))));
            }
        }
        acc
    }

    /// Weighted length in the active grading.
    pub fn grading_length(&self, x: &AffineElt) -> i64 {
        self.sys.weighted_length(x, &self.active_profile())
    }

    /// Orthogonal weighted length (the exponent of `p`).
    pub fn orth_length(&self, x: &AffineElt) -> i64 {
        self.sys.weighted_length(x, &self.orth)
    }
}

impl HeckeAlgebra<RatFrac> {
    /// Algebra over `Q(v)` with symbolic `v`.
    pub fn symbolic(n: usize, sign: Sign) -> Self {
        Self::new(n, sign, RatFrac::v_pow(1))
    }
}

impl HeckeAlgebra<Q> {
    /// Algebra over `Q` with `v` specialized.
    pub fn specialized(n: usize, sign: Sign, v: Q) -> Self {
        Self::new(n, sign, v)
    }
}

use super::induce::induce;
use super::module::{intertwiner_space, FinModule};
use super::{PsError, UnramChar};
use crate::exactalg::linalg::Mat;
use crate::exactalg::{q, qi, rf_reconstruct_upoly, LaurentPoly, RatFrac, Q};
use crate::hecke::{HeckeAlgebra, Sign};
use crate::weyl::{AffineSystem, SignedPerm};
use num_traits::{One, Zero};

/// Maps a word in the `t` (resp. `t'`) generators to the `s` (resp. `s'`)
/// generators under the coordinate reversal: `t_i -> s_{n+1-i}` and
/// `t'_i -> s'_{n+2-i}`.
pub fn s_word_of_t_word(sign: Sign, n: usize, t_word: &[usize]) -> Vec<usize> {
    let shift = match sign {
        Sign::Plus => n + 1,
        Sign::Minus => n + 2,
    };
    t_word.iter().map(|&i| shift - i).collect()
}

fn system(n: usize, sign: Sign) -> AffineSystem {
    match sign {
        Sign::Plus => AffineSystem::s(n),
        Sign::Minus => AffineSystem::sprime(n),
    }
}

/// Coroot of a finite generator and whether its root is long.
fn coroot(sys: &AffineSystem, label: usize) -> Result<(Vec<i64>, bool), PsError> {
    let g = sys.gen(label)?;
    if g.root.k != 0 {
        return Err(PsError::Unsupported(format!("generator {label} is not in the spherical group")));
    }
    let a = &g.root.alpha;
    let long = g.root.is_long();
    let c = if long { a.iter().map(|x| x / 2).collect() } else { a.clone() };
    Ok((c, long))
}

/// Finite part of a word in the spherical generators.
fn finite_part(sys: &AffineSystem, word: &[usize]) -> Result<SignedPerm, PsError> {
    Ok(sys.word_to_elt(word)?.fin)
}

/// `prod_j Z_j^{beta_j}` in `Q(v, Z_1, .., Z_n)`, `Z_j = chi(theta_{-e_j})`.
pub fn char_monomial(beta: &[i64]) -> RatFrac {
    let n = beta.len();
    let mut e = vec![0i32; n + 1];
    for (j, &b) in beta.iter().enumerate() {
        e[j + 1] = b as i32;
    }
    RatFrac::from_poly(LaurentPoly::monomial(Q::one(), e))
}

/// Substitutes `z -> m` in a fraction of `Q(v, z)`.
fn subst_z(f: &RatFrac, m: &RatFrac, nvars: usize) -> RatFrac {
    let part = |p: &LaurentPoly| {
        let (shift, coeffs) = p.padded(2).by_var(1);
        let mut acc = RatFrac::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let cv = RatFrac::from_poly(c.padded(2).specialize_keep_v(nvars));
            acc = acc.add(&cv.mul(&m.pow(shift as i64 + k as i64).unwrap()));
        }
        acc
    };
    part(f.num()).div(&part(f.den())).expect("denominator of a rank-one factor is nonzero")
}

trait KeepV {
    fn specialize_keep_v(&self, nvars: usize) -> LaurentPoly;
}

impl KeepV for LaurentPoly {
    /// Re-embeds a polynomial in `v` alone into `nvars` variables.
    fn specialize_keep_v(&self, nvars: usize) -> LaurentPoly {
        LaurentPoly::from_terms(
            nvars,
            self.sorted_terms().into_iter().map(|(e, c)| {
                let mut f = vec![0; nvars];
                f[0] = e[0];
                (f, c.clone())
            }),
        )
    }
}

/// Rank-one factor at `z`.
///
/// Long roots of the split algebra give `(1 - q^{-1} z^2)/(1 - z^2)`, short
/// roots `(1 - q^{-1} z)/(1 - z)`; long roots of the non-split algebra use
/// the reconstructed `c'`.
pub fn rank1_factor(sign: Sign, long: bool, z: &RatFrac, cprime: Option<&RatFrac>) -> Result<RatFrac, PsError> {
    let one = RatFrac::one();
    let qinv = RatFrac::q_pow(-1);
    if !long {
        return Ok(one.sub(&qinv.mul(z)).div(&one.sub(z))?);
    }
    match sign {
        Sign::Plus => {
            let z2 = z.mul(z);
            Ok(one.sub(&qinv.mul(&z2)).div(&one.sub(&z2))?)
        }
        Sign::Minus => {
            let c = cprime.ok_or_else(|| PsError::Unsupported("long factor of the non-split algebra needs c'".into()))?;
            let nv = z.nvars().max(2);
            Ok(subst_z(c, z, nv))
        }
    }
}

/// Closed-form `c(w, chi)` in `Q(v, Z_1..Z_n)` from the cocycle law along
/// a reduced word in the spherical generators.
pub fn c_closed(n: usize, sign: Sign, s_word: &[usize], cprime: Option<&RatFrac>) -> Result<RatFrac, PsError> {
    let sys = system(n, sign);
    let x = sys.word_to_elt(s_word)?;
    if sys.length(&x) != s_word.len() as i64 {
        return Err(PsError::Unsupported("word is not reduced".into()));
    }
    let mut c = RatFrac::from_poly(LaurentPoly::one(n + 1));
    for k in 0..s_word.len() {
        let u = finite_part(&sys, &s_word[k + 1..])?;
        let (cr, long) = coroot(&sys, s_word[k])?;
        let beta = u.inverse().apply(&cr);
        c = c.mul(&rank1_factor(sign, long, &char_monomial(&beta), cprime)?);
    }
    Ok(c)
}

/// `c(w, chi)` as a product of closed rank-one factors in cocycle order.
pub fn cocycle_closed(n: usize, sign: Sign, s_word: &[usize], cprime: Option<&RatFrac>) -> Result<RatFrac, PsError> {
    c_closed(n, sign, s_word, cprime)
}

/// Evaluation point `(v, Z_1, .., Z_n)` of a character.
pub fn eval_point(v: &Q, chi: &UnramChar) -> Vec<Q> {
    let mut p = vec![v.clone()];
    p.extend(chi.z.iter().map(|z| z.recip()));
    p
}

/// Spherical eigenvalue of `L: M1 -> M2` normalized by `(L [T_x])_{T_e} = 1`.
fn normalized_eigenvalue(m1: &FinModule, m2: &FinModule, l: &Mat, x: &crate::weyl::AffineElt) -> Result<Q, PsError> {
    let i0 = m2.identity_index().ok_or(PsError::NoIdentityLabel)?;
    let ix = m1.basis.iter().position(|(w, j)| w == x && *j == 0).ok_or(PsError::NoIdentityLabel)?;
    let a = l[(i0, ix)].clone();
    if a.is_zero() {
        return Err(PsError::Degenerate);
    }
    let sv1 = m1.spherical_vector()?;
    let sv2 = m2.spherical_vector()?;
    let img = l.mul_vec(&sv1);
    let lam = &img[i0] / &a;
    let scaled: Vec<Q> = img.iter().map(|y| y / &a).collect();
    if scaled.iter().zip(&sv2).any(|(y, s)| *y != &lam * s) {
        return Err(PsError::RelationFailure("intertwiner does not preserve spherical lines".into()));
    }
    Ok(lam)
}

/// Rank-one calibration of the numeric intertwiners.
///
/// The raw eigenvalue is `kappa` times the closed form with
/// `z = chi(theta_{-alpha^vee})`; `kappa` is fixed on the split rank-one
/// algebra at two characters and must agree at both.
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    pub kappa: Q,
}

impl Calibration {
    pub fn derive(v: &Q) -> Result<Self, PsError> {
        let g = HeckeAlgebra::specialized(1, Sign::Plus, v.clone());
        let mut ratios = Vec::new();
        for z in [q(3, 17), q(19, 23)] {
            let chi = UnramChar::new(vec![z])?;
            let raw = raw_rank1(&g, 1, &chi)?;
            let closed = c_closed(1, Sign::Plus, &[1], None)?.eval(&eval_point(v, &chi))?;
            if closed.is_zero() {
                return Err(PsError::Pole);
            }
            ratios.push(raw / closed);
        }
        if ratios[0] != ratios[1] {
            return Err(PsError::Degenerate);
        }
        Ok(Calibration { kappa: ratios.remove(0) })
    }
}

fn raw_rank1(alg: &HeckeAlgebra<Q>, label: usize, chi: &UnramChar) -> Result<Q, PsError> {
    let s = alg.sys.gen(label)?.elt.clone();
    let m1 = induce(alg, chi)?;
    let m2 = induce(alg, &chi.act(&s.fin))?;
    let hom = intertwiner_space(&m1, &m2);
    if hom.len() != 1 {
        return Err(PsError::IntertwinerDim(hom.len()));
    }
    normalized_eigenvalue(&m1, &m2, &hom[0], &s)
}

/// Calibrated spherical eigenvalue of the rank-one intertwiner
/// `M(chi) -> M(s chi)`.
pub fn c_rank1_numeric(alg: &HeckeAlgebra<Q>, cal: &Calibration, label: usize, chi: &UnramChar) -> Result<Q, PsError> {
    Ok(raw_rank1(alg, label, chi)? / &cal.kappa)
}

/// Numeric `c(w, chi)`: the chain `J_{i_1} .. J_{i_l}` of calibrated rank-one
/// intertwiners applied to the spherical vector.
pub fn c_numeric(alg: &HeckeAlgebra<Q>, cal: &Calibration, s_word: &[usize], chi: &UnramChar) -> Result<Q, PsError> {
    let mut cur = chi.clone();
    let mut acc = Q::one();
    for &l in s_word.iter().rev() {
        acc *= c_rank1_numeric(alg, cal, l, &cur)?;
        cur = cur.act(&alg.sys.gen(l)?.elt.fin);
    }
    Ok(acc)
}

/// Numeric `c(w, chi)` from the single intertwiner `M(chi) -> M(w chi)`,
/// normalized by `(L [T_w])_{T_e} = kappa^{l(w)}`.
pub fn c_direct_numeric(alg: &HeckeAlgebra<Q>, cal: &Calibration, s_word: &[usize], chi: &UnramChar) -> Result<Q, PsError> {
    let w = alg.sys.word_to_elt(s_word)?;
    let m1 = induce(alg, chi)?;
    let m2 = induce(alg, &chi.act(&w.fin))?;
    let hom = intertwiner_space(&m1, &m2);
    if hom.len() != 1 {
        return Err(PsError::IntertwinerDim(hom.len()));
    }
    let lam = normalized_eigenvalue(&m1, &m2, &hom[0], &w)?;
    let mut k = Q::one();
    for _ in 0..s_word.len() {
        k *= &cal.kappa;
    }
    Ok(lam / k)
}

/// `d(w, chi) = |2|^{t(w)/2} c(w, chi) = v^{-e t(w)} c(w, chi)`; with
/// `alternate`, the extra constant `(-q^{-1})^{t(w)}` is included.
pub fn matched_d_function(
    n: usize,
    sign: Sign,
    s_word: &[usize],
    e: i64,
    alternate: bool,
    cprime: Option<&RatFrac>,
) -> Result<RatFrac, PsError> {
    let sys = system(n, sign);
    let t = finite_part(&sys, s_word)?.flip_count() as i64;
    let c = c_closed(n, sign, s_word, cprime)?;
    let mut k = RatFrac::v_pow((-e * t) as i32);
    if alternate {
        k = k.mul(&RatFrac::q_pow(-1).neg().pow(t)?);
    }
    Ok(c.mul(&k))
}

/// Reconstructed rank-one `c'` of the non-split algebra at `n = 2`.
#[derive(Clone, Debug)]
pub struct CMinusRank1 {
    /// `c'` in `Q(v, z)`, `z = chi(theta_{-e_2})`.
    pub c: RatFrac,
    /// Constant term before normalization, per sampled `v`.
    pub raw_constant_terms: Vec<(Q, Q)>,
    /// Per-`v` reconstructions as `(num, den)` coefficient lists in `z`.
    pub per_v: Vec<(Q, Vec<Q>, Vec<Q>)>,
}

/// Sample points for `z`; avoids `z = +-1` and small powers of `v`.
fn z_samples() -> Vec<Q> {
    [(2, 7), (3, 11), (5, 13), (7, 17), (11, 19), (13, 23), (4, 9), (9, 5), (17, 29), (19, 31)]
        .iter()
        .map(|&(a, b)| q(a, b))
        .collect()
}

fn v_samples() -> Vec<Q> {
    [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (7, 3), (5, 3), (7, 4), (9, 4)]
        .iter()
        .map(|&(a, b)| q(a, b))
        .collect()
}

/// `c'` at one value of `v` from numeric eigenvalues at rational `z`.
pub fn c_minus_at(v: &Q) -> Result<(Vec<Q>, Vec<Q>, Q), PsError> {
    let g = HeckeAlgebra::specialized(2, Sign::Minus, v.clone());
    let cal = Calibration::derive(v)?;
    let samples: Vec<(Q, Q)> = crate::par::map(&z_samples(), |z| {
        let chi = UnramChar { z: vec![Q::one(), z.recip()] };
        c_rank1_numeric(&g, &cal, 2, &chi).map(|c| (z.clone(), c))
    })
    .into_iter()
    .collect::<Result<_, _>>()?;
    let (num, den) = rf_reconstruct_upoly(&samples, (3, 3))?;
    let c0 = &num.0[0] / &den.0[0];
    let num: Vec<Q> = num.0.iter().map(|x| x / &c0 / &den.0[0]).collect();
    let den: Vec<Q> = den.0.iter().map(|x| x / &den.0[0]).collect();
    Ok((num, den, c0))
}

/// Fits `c(v)` as a Laurent polynomial in `v` of span `[-k, k]`.
fn lift_coefficient(vals: &[(Q, Q)], k: i32) -> Result<LaurentPoly, PsError> {
    let shifted: Vec<(Q, Q)> = vals
        .iter()
        .map(|(v, c)| {
            let mut p = c.clone();
            for _ in 0..k {
                p *= v;
            }
            (v.clone(), p)
        })
        .collect();
    let (num, den) = rf_reconstruct_upoly(&shifted, (2 * k as usize, 0))?;
    let d0 = den.0[0].clone();
    Ok(LaurentPoly::from_terms(
        2,
        num.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i as i32 - k, 0], c / &d0)),
    ))
}

/// Reconstructs `c'(z)` symbolically in `v` and `z`.
pub fn c_minus_rank1() -> Result<CMinusRank1, PsError> {
    let vs = v_samples();
    let per: Vec<(Vec<Q>, Vec<Q>, Q)> = vs.iter().map(c_minus_at).collect::<Result<_, _>>()?;
    let len_n = per.iter().map(|p| p.0.len()).max().unwrap_or(0);
    let len_d = per.iter().map(|p| p.1.len()).max().unwrap_or(0);
    let coeff_poly = |which: usize, len: usize| -> Result<LaurentPoly, PsError> {
        let mut acc = LaurentPoly::zero(2);
        for i in 0..len {
            let vals: Vec<(Q, Q)> = vs
                .iter()
                .zip(&per)
                .map(|(v, p)| {
                    let list = if which == 0 { &p.0 } else { &p.1 };
                    (v.clone(), list.get(i).cloned().unwrap_or_else(Q::zero))
                })
                .collect();
            let c = lift_coefficient(&vals, 4)?;
            acc = acc.add(&c.mul_monomial(&[0, i as i32], &Q::one()));
        }
        Ok(acc)
    };
    let num = coeff_poly(0, len_n)?;
    let den = coeff_poly(1, len_d)?;
    let c = RatFrac::new(num, den)?;
    Ok(CMinusRank1 {
        c,
        raw_constant_terms: vs.iter().zip(&per).map(|(v, p)| (v.clone(), p.2.clone())).collect(),
        per_v: vs.into_iter().zip(per).map(|(v, p)| (v, p.0, p.1)).collect(),
    })
}

/// Default specialization of `v` used by module computations.
pub fn default_v() -> Q {
    qi(3)
}

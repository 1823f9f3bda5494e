use super::algebra::HeckeAlgebra;
use super::element::HeckeElt;
use super::HeckeError;
use crate::exactalg::Scalar;
use crate::weyl::{dot, AffineElt, LeviData};

/// A standard Levi of a Hecke algebra together with its own Hecke algebra.
#[derive(Clone, Debug)]
pub struct Levi<C: Scalar> {
    pub data: LeviData,
    pub alg: HeckeAlgebra<C>,
    /// Search radius (in multiples of the central element) for `tnor`.
    pub radius: i64,
}

impl<C: Scalar> Levi<C> {
    /// Levi spanned by the finite simple roots with labels `j`.
    pub fn standard(g: &HeckeAlgebra<C>, j: &[usize]) -> Result<Self, HeckeError> {
        let data = LeviData::standard(&g.sys, j)?;
        let sys = data.levi_system(&g.sys);
        let alg = HeckeAlgebra::with_system(sys, g.sign, g.v().clone());
        Ok(Levi { data, alg, radius: 16 })
    }

    /// The minimal Levi: translations only.
    pub fn minimal(g: &HeckeAlgebra<C>) -> Self {
        Self::standard(g, &[]).expect("empty Levi is always valid")
    }
}

/// System coordinates ordered so that every partial sum
/// `e_{i_1} + .. + e_{i_k}` is dominant (the fundamental coweights).
pub fn coweight_order(g: &HeckeAlgebra<impl Scalar>) -> Vec<usize> {
    let n = g.n();
    let dominant_prefixes = |coords: &[usize]| {
        (1..=coords.len()).all(|k| {
            let mut w = vec![0; n];
            for &i in &coords[..k] {
                w[i] = 1;
            }
            is_dominant(g, &w)
        })
    };
    let fwd = g.sys.coords.clone();
    if dominant_prefixes(&fwd) {
        fwd
    } else {
        fwd.into_iter().rev().collect()
    }
}

/// Whether `lambda` is dominant for the ambient system.
pub fn is_dominant(g: &HeckeAlgebra<impl Scalar>, lambda: &[i64]) -> bool {
    g.sys.positive_finite_roots().iter().all(|a| dot(a, lambda) >= 0)
}

/// Splits `lambda = plus - minus` with both parts dominant.
///
/// The minimal split comes from the coordinates of `lambda` in the basis of
/// fundamental coweights; `extra` adds that many copies of the first one to
/// both parts.
pub fn dominant_split(g: &HeckeAlgebra<impl Scalar>, lambda: &[i64], extra: i64) -> (Vec<i64>, Vec<i64>) {
    let order = coweight_order(g);
    let n = g.n();
    let mut plus = vec![0; n];
    let mut minus = vec![0; n];
    for k in 0..order.len() {
        let next = order.get(k + 1).map_or(0, |&j| lambda[j]);
        let c = lambda[order[k]] - next;
        let part = if c > 0 { &mut plus } else { &mut minus };
        for &i in &order[..=k] {
            part[i] += c.abs();
        }
    }
    plus[order[0]] += extra;
    minus[order[0]] += extra;
    (plus, minus)
}

/// `d(mu) = L(t_mu) - L^M(t_mu)` in the orthogonal grading.
fn index_gap<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, mu: &[i64]) -> i64 {
    let t = AffineElt::t(mu);
    g.orth_length(&t) - levi.alg.orth_length(&t)
}

/// `log_q delta_P(t_lambda)^{-1}`, extended additively from dominant `lambda`.
pub fn modulus_exponent<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, lambda: &[i64]) -> i64 {
    let (plus, minus) = dominant_split(g, lambda, 0);
    index_gap(g, levi, &plus) - index_gap(g, levi, &minus)
}

/// `delta_P(t_lambda)` as `q^{-D}`.
pub fn modulus<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, lambda: &[i64]) -> C {
    g.q_pow(-modulus_exponent(g, levi, lambda))
}

/// `theta_lambda` for the minimal Levi.
///
/// `theta_lambda = v^{d(minus) - d(plus)} T_{t_plus} T_{t_minus}^{-1}`; a second
/// decomposition is computed and compared.
pub fn theta<C: Scalar>(g: &HeckeAlgebra<C>, lambda: &[i64]) -> Result<HeckeElt<C>, HeckeError> {
    let off_lattice = (0..g.n()).any(|i| lambda[i] != 0 && !g.sys.coords.contains(&i));
    if off_lattice {
        return Err(HeckeError::Weyl(crate::weyl::WeylError::NotInSubgroup { system: g.sys.kind.name() }));
    }
    let levi = Levi::minimal(g);
    let a = theta_with(g, &levi, lambda, 0);
    let b = theta_with(g, &levi, lambda, 1);
    if !a.eq_val(&b) {
        return Err(HeckeError::ThetaInconsistent);
    }
    Ok(a)
}

/// `theta_lambda` from the split with `extra` additional copies of `rho`.
pub fn theta_with<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, lambda: &[i64], extra: i64) -> HeckeElt<C> {
    let (plus, minus) = dominant_split(g, lambda, extra);
    let tp = AffineElt::t(&plus);
    let tm = AffineElt::t(&minus);
    let k = index_gap(g, levi, &minus) - index_gap(g, levi, &plus);
    let inv = g.invert_basis(&tm);
    g.mul(&HeckeElt::term(tp, g.v_pow(k)), &inv)
}

/// `theta_lambda` for dominant `lambda`: the single term `v^{-d} T_{t_lambda}`.
pub fn theta_dominant<C: Scalar>(g: &HeckeAlgebra<C>, lambda: &[i64]) -> HeckeElt<C> {
    let levi = Levi::minimal(g);
    let k = index_gap(g, &levi, lambda);
    HeckeElt::term(AffineElt::t(lambda), g.v_pow(-k))
}

/// Normalized embedding of the Levi algebra.
///
/// A P-positive `m` maps to `delta^{1/2}(m) T_m`. Otherwise a central
/// P-dominant translation `z` with `z m` positive is found and
/// `t_nor(m) = t_nor(z)^{-1} t_nor(z m)`.
pub fn tnor_basis<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, m: &AffineElt) -> Result<HeckeElt<C>, HeckeError> {
    tnor_basis_with(g, levi, m, 0)
}

/// As [`tnor_basis`], skipping the first `skip` admissible central elements.
pub fn tnor_basis_with<C: Scalar>(
    g: &HeckeAlgebra<C>,
    levi: &Levi<C>,
    m: &AffineElt,
    skip: usize,
) -> Result<HeckeElt<C>, HeckeError> {
    if skip == 0 && levi.data.is_positive(m) {
        return Ok(positive_image(g, levi, m));
    }
    let z0 = central_direction(levi).ok_or(HeckeError::NoCentralElement)?;
    let mut found = 0;
    for c in 1..=levi.radius {
        let z: Vec<i64> = z0.iter().map(|x| x * c).collect();
        let tz = AffineElt::t(&z);
        let zm = tz.mul(m);
        if !levi.data.is_positive(&zm) {
            continue;
        }
        if found < skip {
            found += 1;
            continue;
        }
        let k = modulus_exponent(g, levi, &z);
        let inv_z = g.invert_basis(&tz).scale(&g.v_pow(k));
        return Ok(g.mul(&inv_z, &positive_image(g, levi, &zm)));
    }
    Err(HeckeError::NoCentralElement)
}

fn positive_image<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, m: &AffineElt) -> HeckeElt<C> {
    let lambda: Vec<i64> = translation_part(m);
    let k = modulus_exponent(g, levi, &lambda);
    HeckeElt::term(m.clone(), g.v_pow(-k))
}

/// Cocharacter `lambda` with `m = t_lambda u`.
pub fn translation_part(m: &AffineElt) -> Vec<i64> {
    m.trans.iter().map(|x| -x).collect()
}

/// Smallest strictly P-dominant cocharacter orthogonal to the Levi.
pub fn central_direction<C: Scalar>(levi: &Levi<C>) -> Option<Vec<i64>> {
    let n = levi.data.n;
    let coords = &levi.data.coords;
    let bound = n as i64 + 1;
    let mut best: Option<(i64, Vec<i64>)> = None;
    let total = (bound + 1).pow(coords.len() as u32);
    for code in 0..total {
        let mut z = vec![0i64; n];
        let mut c = code;
        for &i in coords {
            z[i] = c % (bound + 1);
            c /= bound + 1;
        }
        if levi.data.is_strictly_central_dominant(&z) {
            let s: i64 = z.iter().sum();
            if best.as_ref().is_none_or(|(bs, bz)| (s, &z) < (*bs, bz)) {
                best = Some((s, z));
            }
        }
    }
    best.map(|(_, z)| z)
}

/// Image of a Levi-algebra element.
pub fn tnor<C: Scalar>(g: &HeckeAlgebra<C>, levi: &Levi<C>, h: &HeckeElt<C>) -> Result<HeckeElt<C>, HeckeError> {
    let mut out = HeckeElt::zero();
    for (m, c) in h.terms() {
        out = out.add(&tnor_basis(g, levi, m)?.scale(c));
    }
    Ok(out)
}

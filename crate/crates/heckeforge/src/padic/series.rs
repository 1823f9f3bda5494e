use super::character::AdditiveCharacter;
use super::gamma::weil_gamma;
use super::model::FiniteWeilModel;
use super::number::{e_of, max_precision, ppow, PadicNum};
use super::PadicError;
use crate::exactalg::{rf_series, LaurentPoly, RatFrac};
use num_complex::Complex64;
use num_traits::ToPrimitive;

const NONZERO_TOL: f64 = 1e-9;

/// Float evaluation of a fraction at real points.
pub fn eval_f64(f: &RatFrac, point: &[f64]) -> f64 {
    let ev = |p: &LaurentPoly| -> f64 {
        p.sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.to_f64().unwrap_or(f64::NAN), |acc, (&k, &x)| acc * x.powi(k))
            })
            .sum()
    };
    ev(f.num()) / ev(f.den())
}

/// Model `p^-r o / p^s o` holding `phi` on `o / 2o`.
fn embedded(psi: AdditiveCharacter, r: u32, phi: &[Complex64]) -> Result<FiniteWeilModel, PadicError> {
    let s = FiniteWeilModel::balanced_s(&psi, r);
    FiniteWeilModel::embed(psi, r, s, phi)
}

/// Coefficients `r_0..r_kmax` of the rank-one intertwining series, from
///
/// `int_o lower(t) phi (0) dt = r_0 (w phi)(0)` and
/// `|p|^k int_{p^-k o^x} gamma(-2t) [w upper(1/t) phi](0) dt = r_k (w phi)(0)`,
///
/// with `phi` a function on `o / 2o` placed inside the model of radius `r`.
pub fn rank1_series(p: u64, kmax: usize, phi: &[Complex64], r: u32) -> Result<Vec<Complex64>, PadicError> {
    let prec = max_precision(p);
    let psi = AdditiveCharacter::standard(p, prec);
    let e = e_of(p);
    if phi.len() as u128 != ppow(p, e as u32) {
        return Err(PadicError::Precondition(format!("phi must have {} entries", ppow(p, e as u32))));
    }
    let m0 = embedded(psi, r, phi)?;
    let w0 = m0.fourier()?.at_zero();
    if w0.norm() < NONZERO_TOL {
        return Err(PadicError::Precondition("Fourier transform of phi vanishes at 0".into()));
    }
    let mut out = Vec::with_capacity(kmax + 1);
    // t in o acts through t mod p^c
    let nt = ppow(p, psi.c as u32);
    let mut acc = Complex64::new(0.0, 0.0);
    for t in 0..nt {
        let t = if t == 0 { PadicNum::zero(p, prec) } else { PadicNum::from_i64(p, t as i64, prec)? };
        acc += m0.lower(&t)?.at_zero();
    }
    out.push(acc / nt as f64 / w0);
    // t = p^-k a, a a unit modulo p^(2e + 1)
    let mexp = (2 * e + 1) as u32;
    let pm = ppow(p, mexp);
    let minus_two = PadicNum::from_i64(p, -2, prec)?;
    for k in 1..=kmax as i64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in (1..pm).filter(|a| a % p as u128 != 0) {
            let t = PadicNum::new(p, -k, a, prec)?;
            let g = weil_gamma(&psi, &minus_two.mul(&t))?;
            acc += g * m0.upper(&t.inv()?)?.fourier()?.at_zero();
        }
        out.push(acc / pm as f64 / w0);
    }
    Ok(out)
}

/// Series of `v^-e (1 - q^-1 z^2)/(1 - z^2)` at `v = sqrt(p)`.
pub fn expected_rank1_series(p: u64, kmax: usize) -> Result<Vec<f64>, PadicError> {
    let z = RatFrac::from_poly(LaurentPoly::var(1, 2));
    let one = RatFrac::one();
    let z2 = z.mul(&z);
    let f = RatFrac::v_pow(-(e_of(p) as i32))
        .mul(&one.sub(&RatFrac::q_pow(-1).mul(&z2)))
        .div(&one.sub(&z2))
        .map_err(|e| PadicError::Precondition(e.to_string()))?;
    let coeffs = rf_series(&f, 1, kmax).map_err(|e| PadicError::Precondition(e.to_string()))?;
    let v = (p as f64).sqrt();
    Ok(coeffs.iter().map(|c| eval_f64(c, &[v, 0.0])).collect())
}

/// Outcome of comparing the two sides of the rank-one Iwasawa identity.
#[derive(Clone, Debug)]
pub struct ZetaCheck {
    pub zeta: Complex64,
    pub gamma: Complex64,
    pub abs_err: f64,
    /// Largest deviation of `lhs - zeta * rhs` over the model.
    pub residual: f64,
    pub pass: bool,
}

/// Applies both sides of
/// `x_-(t) = zeta x_+(1/t) s(diag(1/t, t)) w s(-1) x_+(1/t)` to the
/// indicator of `2o` on a model of radius `r`, and compares `zeta` with
/// `gamma_psi(-2t)`.
pub fn iwasawa_zeta_check(t: &PadicNum, r: u32, tol: f64) -> Result<ZetaCheck, PadicError> {
    let p = t.p;
    let vt = t.val.ok_or(PadicError::Zero)?;
    if vt >= 0 {
        return Err(PadicError::Precondition("val(t) must be negative".into()));
    }
    let psi = AdditiveCharacter::standard(p, t.prec);
    let s = FiniteWeilModel::balanced_s(&psi, r);
    let phi = FiniteWeilModel::indicator(psi, r, s, e_of(p));
    let ti = t.inv()?;
    let lhs = phi.lower(t)?;
    let rhs = phi.upper(&ti)?.parity().fourier()?.torus(&ti)?.upper(&ti)?;
    let d = rhs.at_zero();
    if d.norm() < NONZERO_TOL {
        return Err(PadicError::ModelTooSmall("right side vanishes at 0".into()));
    }
    let zeta = lhs.at_zero() / d;
    let residual = lhs.max_diff(&rhs.scale(zeta));
    let minus_two = PadicNum::from_i64(p, -2, t.prec)?;
    let gamma = weil_gamma(&psi, &minus_two.mul(t))?;
    let abs_err = (zeta - gamma).norm();
    Ok(ZetaCheck { zeta, gamma, abs_err, residual, pass: abs_err < tol && residual < tol })
}

/// Coefficients of the GL(2) rank-one series: `c_0 = mes(o) = 1` and
/// `c_k = |p|^k mes(p^-k o^x)`, the measure counted on `p^-k o / o`.
pub fn gl2_gk_numeric(p: u64, kmax: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for k in 1..=kmax as u32 {
        let n = ppow(p, k);
        let exact = (0..n).filter(|i| i % p as u128 != 0).count() as f64;
        out.push(exact / n as f64);
    }
    out
}

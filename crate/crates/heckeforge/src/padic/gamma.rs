use super::character::AdditiveCharacter;
use super::number::{e_of, ppow, PadicNum};
use super::PadicError;
use crate::par;
use num_complex::Complex64;

const STABLE_TOL: f64 = 1e-12;
const MAX_RADIUS: u32 = 12;

/// `int_{p^-r o} psi(a x^2 / 2) dx` with `mes(o) = 1`.
fn truncated_integral(psi: &AdditiveCharacter, a: &PadicNum, r: u32) -> Result<Complex64, PadicError> {
    let p = psi.p;
    let e = e_of(p);
    let va = a.val.ok_or(PadicError::Zero)?;
    let m = a.modulus();
    let half = if p == 2 { 1 } else { super::number::mod_inv(2, m).expect("2 is a unit") };
    let u = a.unit * half % m;
    // x = p^-r y: a x^2 / 2 = u y^2 p^-k
    let k = 2 * r as i64 + e - va;
    let depth = k + psi.c;
    if depth <= 0 {
        // psi is trivial on the whole ball
        return Ok(Complex64::new((p as f64).powi(r as i32), 0.0));
    }
    let s = (depth - e).max((depth + 1) / 2).max(0) as u32;
    let n = ppow(p, s) as usize;
    let d = ppow(p, depth as u32);
    if depth as u32 > a.prec.min(psi.prec) {
        return Err(PadicError::InsufficientPrecision { needed: depth as u32, have: a.prec.min(psi.prec) });
    }
    let uu = u % d;
    let sum = par::tree_sum(n, |y| {
        let y = y as u128 % d;
        psi.eval_scaled(uu * (y * y % d) % d, k).expect("depth checked")
    });
    Ok(sum * (p as f64).powi(r as i32 - s as i32))
}

/// Weil constant `gamma_psi(a)`: principal value of
/// `int psi(a x^2/2) d mu_{a/2}(x)`, the radius increased until two
/// consecutive truncations agree.
pub fn weil_gamma(psi: &AdditiveCharacter, a: &PadicNum) -> Result<Complex64, PadicError> {
    let va = a.val.ok_or(PadicError::Zero)?;
    let p = psi.p as f64;
    // mu_{a/2} is self-dual for the kernel psi(a x y), conductor c - val(a)
    let mu = p.powf((psi.c - va) as f64 / 2.0);
    // below this radius psi(a x^2/2) is trivial on the whole ball
    let start = ((va - psi.c - e_of(psi.p)).max(0) as u32).div_ceil(2);
    let mut prev: Option<Complex64> = None;
    for r in start..=start + MAX_RADIUS {
        let cur = truncated_integral(psi, a, r)? * mu;
        if let Some(pv) = prev {
            if (cur - pv).norm() < STABLE_TOL {
                return Ok(cur);
            }
        }
        prev = Some(cur);
    }
    Err(PadicError::NotConverged((start + MAX_RADIUS) as usize))
}

/// `int_{o^x} gamma_psi(2 p^-k a) da` with `mes(o) = 1`, as an average over
/// `(o / p^m)^x`, `m = 2e + 1`; gamma is constant on `a (1 + p^m o)`.
pub fn unit_integral(psi: &AdditiveCharacter, k: i64) -> Result<Complex64, PadicError> {
    let p = psi.p;
    let e = e_of(p);
    let m = (2 * e + 1) as u32;
    let pm = ppow(p, m);
    let two = PadicNum::from_i64(p, 2, psi.prec)?;
    let units: Vec<u128> = (1..pm).filter(|a| a % p as u128 != 0).collect();
    let value = |a: u128| -> Result<Complex64, PadicError> {
        let x = PadicNum::new(p, 0, a, psi.prec)?;
        weil_gamma(psi, &two.mul(&x).shift(-k))
    };
    let vals: Vec<Complex64> = par::map(&units, |&a| value(a)).into_iter().collect::<Result<_, _>>()?;
    // coset-constancy: a and a (1 + p^m) give the same constant
    for (&a, v) in units.iter().zip(&vals).take(3) {
        let moved = value(a * (1 + pm) % ppow(p, psi.prec))?;
        if (moved - v).norm() > 1e-9 {
            return Err(PadicError::CosetCheck);
        }
    }
    let total: Complex64 = vals.iter().sum();
    Ok(total / pm as f64)
}

/// `(1 - q^-1)|2|^{1/2}` for even `k`, `0` for odd `k`.
pub fn unit_integral_expected(p: u64, k: i64) -> f64 {
    if k % 2 != 0 {
        return 0.0;
    }
    let q = p as f64;
    (1.0 - 1.0 / q) * q.powf(-(e_of(p) as f64) / 2.0)
}

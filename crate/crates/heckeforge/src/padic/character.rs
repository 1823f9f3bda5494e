use super::number::{e_of, ppow, PadicNum};
use super::PadicError;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// `psi(x) = psi_0(u x / p^c)`, `psi_0(x) = exp(2 pi i {x}_p)`: trivial on
/// `p^c o` and nontrivial on `p^(c-1) o`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdditiveCharacter {
    pub p: u64,
    pub c: i64,
    /// Unit twist, known modulo `p^prec`.
    pub u: u128,
    pub prec: u32,
}

impl AdditiveCharacter {
    /// The normalization trivial on `4 o` and nontrivial on `4 p^-1 o`.
    pub fn standard(p: u64, prec: u32) -> Self {
        AdditiveCharacter { p, c: 2 * e_of(p), u: 1, prec }
    }

    /// `x -> psi(b x)`.
    pub fn twist(&self, b: &PadicNum) -> Result<Self, PadicError> {
        let v = b.val.ok_or(PadicError::Zero)?;
        let prec = self.prec.min(b.prec);
        let m = ppow(self.p, prec);
        Ok(AdditiveCharacter { p: self.p, c: self.c - v, u: (self.u % m) * (b.unit % m) % m, prec })
    }

    /// `psi(X p^-k)` for an integer `X`; `k` may be negative.
    pub fn eval_scaled(&self, x: u128, k: i64) -> Result<Complex64, PadicError> {
        let depth = k + self.c;
        if depth <= 0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        let depth = depth as u32;
        if depth > self.prec {
            return Err(PadicError::InsufficientPrecision { needed: depth, have: self.prec });
        }
        let m = ppow(self.p, depth);
        // X p^-k / p^c = X / p^(k+c), for either sign of k
        let r = (x % m) * (self.u % m) % m;
        Ok(Complex64::from_polar(1.0, TAU * r as f64 / m as f64))
    }

    /// Phase table `psi(j p^-k)` for `j` modulo `p^(k+c)`.
    pub fn phase_table(&self, k: i64) -> Result<(u128, Vec<Complex64>), PadicError> {
        let depth = (k + self.c).max(0) as u32;
        let m = ppow(self.p, depth);
        let table = (0..m).map(|j| self.eval_scaled(j, k)).collect::<Result<Vec<_>, _>>()?;
        Ok((m, table))
    }

    pub fn eval(&self, x: &PadicNum) -> Result<Complex64, PadicError> {
        match x.val {
            None => Ok(Complex64::new(1.0, 0.0)),
            Some(v) => {
                let depth = (self.c - v).max(0) as u32;
                if depth > x.prec.min(self.prec) {
                    return Err(PadicError::InsufficientPrecision { needed: depth, have: x.prec.min(self.prec) });
                }
                self.eval_scaled(x.unit, -v)
            }
        }
    }
}

/// `mu(o)` for the measure self-dual under `f -> int f(y) psi(2xy) dy`:
/// the kernel `y -> psi(2y)` has conductor exponent `c - e`, so
/// `mu(o) = q^((c - e)/2)`.
pub fn selfdual_measure(psi: &AdditiveCharacter) -> f64 {
    let cp = psi.c - e_of(psi.p);
    (psi.p as f64).powf(cp as f64 / 2.0)
}

/// `mu(o)` recovered from the finite Fourier transform: with the measure
/// `mes(o) = 1` on `o / p^s`, the square of the transform is `lambda` times
/// parity; the self-dual scale is `lambda^{-1/2}`.
pub fn selfdual_measure_numeric(psi: &AdditiveCharacter) -> Result<f64, PadicError> {
    let p = psi.p;
    let cp = (psi.c - e_of(p)).max(0) as u32;
    // functions on p^-r o / p^s o with s = r + c'
    let r = 1u32;
    let s = r + cp;
    let n = ppow(p, r + s) as usize;
    let (m, table) = psi.phase_table(2 * r as i64)?;
    let cell = (p as f64).powi(-(s as i32));
    let ft = |f: &[Complex64]| -> Vec<Complex64> {
        (0..n)
            .map(|j| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (i, fi) in f.iter().enumerate() {
                    acc += table[((2 * i as u128 * j as u128) % m) as usize] * fi;
                }
                acc * cell
            })
            .collect()
    };
    let mut delta = vec![Complex64::new(0.0, 0.0); n];
    delta[0] = Complex64::new(1.0, 0.0);
    let twice = ft(&ft(&delta));
    let lambda = twice[0].re;
    if lambda <= 0.0 {
        return Err(PadicError::NotConverged(r as usize));
    }
    Ok(lambda.powf(-0.5))
}

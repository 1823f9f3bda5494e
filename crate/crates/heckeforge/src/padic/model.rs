use super::character::{selfdual_measure, AdditiveCharacter};
use super::number::{e_of, ppow, PadicNum};
use super::PadicError;
use crate::par;
use num_complex::Complex64;

const SUPPORT_TOL: f64 = 1e-12;

/// Functions on `p^-r o / p^s o`; entry `i` is the value at `y = i p^-r`.
#[derive(Clone, Debug)]
pub struct FiniteWeilModel {
    pub psi: AdditiveCharacter,
    pub r: u32,
    pub s: u32,
    pub values: Vec<Complex64>,
}

impl FiniteWeilModel {
    pub fn zeros(psi: AdditiveCharacter, r: u32, s: u32) -> Self {
        FiniteWeilModel { psi, r, s, values: vec![Complex64::new(0.0, 0.0); ppow(psi.p, r + s) as usize] }
    }

    /// `s` making the Fourier transform preserve the model.
    pub fn balanced_s(psi: &AdditiveCharacter, r: u32) -> u32 {
        (r as i64 + psi.c - e_of(psi.p)).max(0) as u32
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn p(&self) -> u64 {
        self.psi.p
    }

    /// Indicator of `p^j o`, `-r <= j <= s`.
    pub fn indicator(psi: AdditiveCharacter, r: u32, s: u32, j: i64) -> Self {
        let mut m = Self::zeros(psi, r, s);
        let step = ppow(psi.p, (j + r as i64).clamp(0, (r + s) as i64) as u32) as usize;
        for i in (0..m.len()).step_by(step) {
            m.values[i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Embeds a function on `o / p^w o` (`w <= s`), zero off `o`.
    pub fn embed(psi: AdditiveCharacter, r: u32, s: u32, phi: &[Complex64]) -> Result<Self, PadicError> {
        let p = psi.p;
        let w = phi.len() as u128;
        if w == 0 || !ppow(p, s).is_multiple_of(w) {
            return Err(PadicError::ModelTooSmall("source quotient does not divide the model".into()));
        }
        let mut m = Self::zeros(psi, r, s);
        let pr = ppow(p, r) as usize;
        for i in (0..m.len()).step_by(pr) {
            m.values[i] = phi[((i / pr) as u128 % w) as usize];
        }
        Ok(m)
    }

    pub fn at_zero(&self) -> Complex64 {
        self.values[0]
    }

    /// Smallest valuation of a point in the support, or `None` if zero.
    pub fn support_val(&self) -> Option<i64> {
        let p = self.p() as usize;
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.norm() > SUPPORT_TOL)
            .map(|(i, _)| {
                if i == 0 {
                    return self.s as i64;
                }
                let mut i = i;
                let mut v = -(self.r as i64);
                while i % p == 0 {
                    i /= p;
                    v += 1;
                }
                v
            })
            .min()
    }

    /// `phi -> psi(t y^2) phi`.
    pub fn upper(&self, t: &PadicNum) -> Result<Self, PadicError> {
        let Some(vt) = t.val else {
            return Ok(self.clone());
        };
        let Some(rho) = self.support_val() else {
            return Ok(self.clone());
        };
        let (c, e) = (self.psi.c, e_of(self.p()));
        // (y + d)^2 - y^2 = 2 y d + d^2 must be killed by t on the support
        let s = self.s as i64;
        if vt + e + rho + s < c || vt + 2 * s < c {
            return Err(PadicError::ModelTooSmall(format!("upper({t}) on support of valuation {rho}")));
        }
        let k = 2 * self.r as i64 - vt;
        let depth = (k + c).max(0) as u32;
        if depth > t.prec {
            return Err(PadicError::InsufficientPrecision { needed: depth, have: t.prec });
        }
        let d = ppow(self.p(), depth).max(1);
        let u = t.unit % d;
        let mut out = self.clone();
        for (i, v) in out.values.iter_mut().enumerate() {
            if v.norm() > SUPPORT_TOL {
                let ii = i as u128 % d;
                *v *= self.psi.eval_scaled(u * (ii * ii % d) % d, k)?;
            }
        }
        Ok(out)
    }

    /// `phi -> |a|^{1/2} phi(a y)`.
    pub fn torus(&self, a: &PadicNum) -> Result<Self, PadicError> {
        let va = a.val.ok_or(PadicError::Zero)?;
        let p = self.p();
        let n = self.len() as u128;
        let total = self.r + self.s;
        let scale = a.abs().sqrt();
        let ua = a.unit % n.max(1);
        let mut out = Self::zeros(self.psi, self.r, self.s);
        if va >= 0 {
            let shift = ppow(p, (va as u32).min(total));
            for i in 0..self.len() {
                let j = (ua * (i as u128) % n) * shift % n;
                out.values[i] = self.values[j as usize] * scale;
            }
            return Ok(out);
        }
        // a y leaves the lattice unless p^|va| divides the index; the source
        // must be periodic modulo p^(s + va) for the result to be well defined
        let g = ppow(p, (-va) as u32);
        if (-va) as u32 > self.s {
            return Err(PadicError::ModelTooSmall(format!("torus({a})")));
        }
        let period = (n / g) as usize;
        for i in 0..self.len() {
            if self.values[i].norm() > SUPPORT_TOL && (self.values[(i + period) % self.len()] - self.values[i]).norm() > SUPPORT_TOL {
                return Err(PadicError::ModelTooSmall(format!("torus({a}) needs a coarser period")));
            }
        }
        for i in 0..self.len() {
            if (i as u128).is_multiple_of(g) {
                let j = ua * (i as u128 / g) % n;
                out.values[i] = self.values[j as usize] * scale;
            }
        }
        Ok(out)
    }

    /// `phi -> phi(-y)`.
    pub fn parity(&self) -> Self {
        let n = self.len();
        let mut out = self.clone();
        for i in 0..n {
            out.values[i] = self.values[(n - i) % n];
        }
        out
    }

    /// Unitary Fourier transform `int phi(y) psi(2xy) d mu(y)`, `mu`
    /// self-dual; requires `s = r + c - e`.
    pub fn fourier(&self) -> Result<Self, PadicError> {
        if self.s != Self::balanced_s(&self.psi, self.r) {
            return Err(PadicError::ModelTooSmall(format!("fourier needs s = r + c - e, got r = {}, s = {}", self.r, self.s)));
        }
        let (m, table) = self.psi.phase_table(2 * self.r as i64)?;
        let m = m.max(1);
        let n = self.len();
        let w = selfdual_measure(&self.psi) * (self.p() as f64).powi(-(self.s as i32));
        let support: Vec<(u128, Complex64)> =
            self.values.iter().enumerate().filter(|(_, v)| v.norm() > SUPPORT_TOL).map(|(i, v)| (i as u128, *v)).collect();
        let values = par::map_range(n, |j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(i, v) in &support {
                acc += table[((2 * i % m) * (j as u128 % m) % m) as usize] * v;
            }
            acc * w
        });
        Ok(FiniteWeilModel { values, ..*self })
    }

    pub fn fourier_inv(&self) -> Result<Self, PadicError> {
        Ok(self.fourier()?.parity())
    }

    /// `fourier^-1 . upper(-t) . fourier`.
    pub fn lower(&self, t: &PadicNum) -> Result<Self, PadicError> {
        self.fourier()?.upper(&t.neg())?.fourier_inv()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        FiniteWeilModel { values: self.values.iter().map(|v| v * c).collect(), ..*self }
    }

    pub fn max_diff(&self, o: &Self) -> f64 {
        self.values.iter().zip(&o.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

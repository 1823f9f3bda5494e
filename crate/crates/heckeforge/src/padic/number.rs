use super::PadicError;
use crate::exactalg::Q;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

/// `p^k` as `u128`; callers keep `p^k < 2^63` so products of residues fit.
pub fn ppow(p: u64, k: u32) -> u128 {
    (p as u128).pow(k)
}

/// Largest working precision with `p^N < 2^62`.
pub fn max_precision(p: u64) -> u32 {
    let mut n = 0;
    while ppow(p, n + 1) < (1u128 << 62) {
        n += 1;
    }
    n
}

pub(crate) fn mod_inv(a: u128, m: u128) -> Option<u128> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u128)
}

/// Element of `Q_p` as `p^val * unit`, the unit known modulo `p^prec`.
///
/// Invariant: `unit` is prime to `p` unless the number is zero (`val = None`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicNum {
    pub p: u64,
    pub val: Option<i64>,
    pub unit: u128,
    pub prec: u32,
}

impl PadicNum {
    pub fn zero(p: u64, prec: u32) -> Self {
        PadicNum { p, val: None, unit: 0, prec }
    }

    /// `p^val * unit`; `unit` must be prime to `p`.
    pub fn new(p: u64, val: i64, unit: u128, prec: u32) -> Result<Self, PadicError> {
        if prec == 0 || prec > max_precision(p) {
            return Err(PadicError::InsufficientPrecision { needed: prec, have: max_precision(p) });
        }
        let m = ppow(p, prec);
        let unit = unit % m;
        if unit.is_multiple_of(p as u128) {
            return Err(PadicError::Precondition("unit part divisible by p".into()));
        }
        Ok(PadicNum { p, val: Some(val), unit, prec })
    }

    pub fn from_i64(p: u64, x: i64, prec: u32) -> Result<Self, PadicError> {
        Self::from_q(p, &Q::from_integer(x.into()), prec)
    }

    pub fn from_q(p: u64, x: &Q, prec: u32) -> Result<Self, PadicError> {
        if x.is_zero() {
            return Ok(Self::zero(p, prec));
        }
        let pb = BigInt::from(p);
        let strip = |mut a: BigInt| {
            let mut v = 0i64;
            while (&a % &pb).is_zero() {
                a /= &pb;
                v += 1;
            }
            (a, v)
        };
        let (nu, vn) = strip(x.numer().clone());
        let (de, vd) = strip(x.denom().clone());
        let m = BigInt::from(ppow(p, prec));
        let nu = nu.mod_floor(&m).to_u128().expect("residue fits");
        let de = de.abs().mod_floor(&m).to_u128().expect("residue fits");
        let mm = ppow(p, prec);
        let inv = mod_inv(de, mm).expect("denominator prime to p");
        Self::new(p, vn - vd, nu * inv % mm, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.val.is_none()
    }

    pub fn modulus(&self) -> u128 {
        ppow(self.p, self.prec)
    }

    /// `|x|_p` as a float.
    pub fn abs(&self) -> f64 {
        match self.val {
            None => 0.0,
            Some(v) => (self.p as f64).powi(-v as i32),
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        PadicNum { unit: self.modulus() - self.unit, ..*self }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        match (self.val, o.val) {
            (Some(a), Some(b)) => {
                let m = ppow(self.p, prec);
                PadicNum { p: self.p, val: Some(a + b), unit: (self.unit % m) * (o.unit % m) % m, prec }
            }
            _ => Self::zero(self.p, prec),
        }
    }

    pub fn inv(&self) -> Result<Self, PadicError> {
        let v = self.val.ok_or(PadicError::Zero)?;
        let m = self.modulus();
        Ok(PadicNum { val: Some(-v), unit: mod_inv(self.unit, m).expect("unit is invertible"), ..*self })
    }

    /// Sum; cancellation of `j` leading digits costs `j` digits of precision.
    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = match (self.val, o.val) {
            (None, _) => return *o,
            (_, None) => return *self,
            (Some(a), Some(b)) => (a, b),
        };
        let (lo, hi, vl, vh) = if a <= b { (self, o, a, b) } else { (o, self, b, a) };
        let gap = (vh - vl) as u32;
        let prec = lo.prec.min(hi.prec.saturating_add(gap));
        if gap >= prec {
            return PadicNum { prec, unit: lo.unit % ppow(lo.p, prec), ..*lo };
        }
        let m = ppow(lo.p, prec);
        let mut s = (lo.unit % m + (hi.unit % m) * ppow(lo.p, gap) % m) % m;
        if s == 0 {
            return Self::zero(lo.p, prec);
        }
        let mut j = 0;
        while s.is_multiple_of(lo.p as u128) {
            s /= lo.p as u128;
            j += 1;
        }
        let prec = prec - j;
        PadicNum { p: lo.p, val: Some(vl + j as i64), unit: s % ppow(lo.p, prec), prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn div(&self, o: &Self) -> Result<Self, PadicError> {
        Ok(self.mul(&o.inv()?))
    }

    /// `p^k x`.
    pub fn shift(&self, k: i64) -> Self {
        PadicNum { val: self.val.map(|v| v + k), ..*self }
    }

    /// Fractional part `{x}_p` as `(numerator, p-power exponent)`, i.e.
    /// `x = numerator / p^k mod Z_p`.
    pub fn frac(&self) -> Result<(u128, u32), PadicError> {
        match self.val {
            Some(v) if v < 0 => {
                let k = (-v) as u32;
                if k > self.prec {
                    return Err(PadicError::InsufficientPrecision { needed: k, have: self.prec });
                }
                Ok((self.unit % ppow(self.p, k), k))
            }
            _ => Ok((0, 0)),
        }
    }
}

impl fmt::Display for PadicNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.val {
            None => write!(f, "0"),
            Some(v) => write!(f, "{}^{} * {} (mod {}^{})", self.p, v, self.unit, self.p, self.prec),
        }
    }
}

/// `val_p(2)`.
pub fn e_of(p: u64) -> i64 {
    i64::from(p == 2)
}

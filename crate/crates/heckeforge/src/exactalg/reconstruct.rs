use super::linalg::Mat;
use super::{AlgError, LaurentPoly, RatFrac, Q};
use num_traits::{One, Zero};
use std::collections::HashSet;

/// Dense univariate polynomial over `Q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(pub Vec<Q>);

impl UPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Q) -> Self {
        UPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        if r.len() <= dd {
            return (UPoly(vec![]), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        let inv = d.lead().recip();
        for k in (0..quo.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    r[k + i] -= &c * di;
                }
            }
            quo[k] = c;
        }
        (UPoly::new(quo), UPoly::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let l = a.lead().recip();
        a.scale(&l)
    }

    /// Embeds as a polynomial in variable `var` of a ring with `nvars` variables.
    pub fn to_laurent(&self, var: usize, nvars: usize) -> LaurentPoly {
        LaurentPoly::from_terms(
            nvars,
            self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[var] = k as i32;
                (e, c.clone())
            }),
        )
    }
}

/// Reconstructs a univariate rational function from samples.
///
/// Denominator degrees are tried from `0` up to `bounds.1`; the first
/// solution that interpolates every sample is reduced by the polynomial gcd
/// and normalized so that `den(0) = 1` (or `den` monic when `den(0) = 0`).
/// This makes the answer independent of sample order.
pub fn rf_reconstruct_upoly(
    samples: &[(Q, Q)],
    bounds: (usize, usize),
) -> Result<(UPoly, UPoly), AlgError> {
    let (dn, dd) = bounds;
    let needed = dn + dd + 2;
    if samples.len() < needed {
        return Err(AlgError::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    let mut seen = HashSet::new();
    for (x, _) in samples {
        if !seen.insert(x.clone()) {
            return Err(AlgError::RepeatedPoint);
        }
    }
    for d in 0..=dd {
        let cols = dn + 1 + d + 1;
        let rows: Vec<Vec<Q>> = samples
            .iter()
            .map(|(x, y)| {
                let mut row = Vec::with_capacity(cols);
                let mut p = Q::one();
                for _ in 0..=dn {
                    row.push(p.clone());
                    p *= x;
                }
                let mut p = Q::one();
                for _ in 0..=d {
                    row.push(-(y * &p));
                    p *= x;
                }
                row
            })
            .collect();
        let ns = Mat::from_rows(rows).nullspace();
        let Some(sol) = ns.iter().find(|s| s[dn + 1..].iter().any(|c| !c.is_zero())) else {
            continue;
        };
        let num = UPoly::new(sol[..=dn].to_vec());
        let den = UPoly::new(sol[dn + 1..].to_vec());
        let (num, den) = reduce_pair(num, den);
        if samples.iter().all(|(x, y)| {
            let dv = den.eval(x);
            !dv.is_zero() && num.eval(x) / dv == *y
        }) {
            return Ok((num, den));
        }
    }
    Err(AlgError::InconsistentSamples(dn, dd))
}

fn reduce_pair(num: UPoly, den: UPoly) -> (UPoly, UPoly) {
    let g = num.gcd(&den);
    let (num, den) = if g.degree() > 0 {
        (num.divrem(&g).0, den.divrem(&g).0)
    } else {
        (num, den)
    };
    let k = match den.0.first() {
        Some(c) if !c.is_zero() => c.recip(),
        _ => den.lead().recip(),
    };
    (num.scale(&k), den.scale(&k))
}

/// Reconstructs `num(z)/den(z)` as a [`RatFrac`] in the single character
/// variable `z` (ring `Q(v, z)` with `v` absent).
pub fn rf_reconstruct(samples: &[(Q, Q)], bounds: (usize, usize)) -> Result<RatFrac, AlgError> {
    let (n, d) = rf_reconstruct_upoly(samples, bounds)?;
    RatFrac::new(n.to_laurent(1, 2), d.to_laurent(1, 2))
}

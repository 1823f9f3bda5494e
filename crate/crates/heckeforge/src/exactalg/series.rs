use super::{var_name, AlgError, RatFrac};

/// Power-series coefficients `c_0..c_order` of `a` in variable `var`.
///
/// The remaining variables stay symbolic. The denominator, after removing its
/// power of `var`, must have an invertible lowest coefficient; a net negative
/// power of `var` is a pole.
pub fn rf_series(a: &RatFrac, var: usize, order: usize) -> Result<Vec<RatFrac>, AlgError> {
    let n = a.nvars().max(var + 1);
    if a.is_zero() {
        return Ok(vec![RatFrac::zero(); order + 1]);
    }
    let num = a.num().padded(n);
    let den = a.den().padded(n);
    let (ns, nc) = num.by_var(var);
    let (ds, dc) = den.by_var(var);
    let shift = ns - ds;
    if shift < 0 {
        return Err(AlgError::PoleAtZero { var: var_name(var, n) });
    }
    let d0 = RatFrac::from_poly(dc[0].clone());
    let d0_inv = d0.inv()?;
    let mut out = vec![RatFrac::zero(); order + 1];
    let shift = shift as usize;
    let needed = (order + 1).saturating_sub(shift);
    let mut c: Vec<RatFrac> = Vec::with_capacity(needed);
    for j in 0..needed {
        let mut acc = nc.get(j).cloned().map(RatFrac::from_poly).unwrap_or_else(RatFrac::zero);
        for (i, ci) in c.iter().enumerate() {
            if let Some(d) = dc.get(j - i) {
                if j - i >= 1 && !d.is_zero() {
                    acc = acc.sub(&ci.mul(&RatFrac::from_poly(d.clone())));
                }
            }
        }
        c.push(acc.mul(&d0_inv));
    }
    for (j, cj) in c.into_iter().enumerate() {
        out[j + shift] = cj;
    }
    Ok(out)
}

/// Cauchy product of two truncated series.
pub fn cauchy_product(a: &[RatFrac], b: &[RatFrac]) -> Vec<RatFrac> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|k| {
            (0..=k).fold(RatFrac::zero(), |acc, i| acc.add(&a[i].mul(&b[k - i])))
        })
        .collect()
}

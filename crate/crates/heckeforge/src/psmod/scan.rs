use super::module::{endomorphism_dim, FinModule};
use super::{induce, PsError, UnramChar};
use crate::exactalg::linalg::Mat;
use crate::exactalg::{q, Q};
use crate::hecke::HeckeAlgebra;
use num_traits::{One, Zero};

/// Outcome of the reducibility test at one rank-one character.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanPoint {
    /// `z = chi(theta_{-e_c})` on the single lattice coordinate `c`.
    pub z: Q,
    pub reducible: bool,
    /// Dimension of a proper invariant subspace found, if any.
    pub witness: Option<usize>,
    pub end_dim: usize,
}

/// Smallest invariant subspace containing `x`, as a spanning list.
fn cyclic_span(gens: &[Mat], x: Vec<Q>) -> usize {
    let mut basis: Vec<Vec<Q>> = Vec::new();
    let mut queue = vec![x];
    while let Some(y) = queue.pop() {
        let mut trial = basis.clone();
        trial.push(y.clone());
        if Mat::from_rows(trial.clone()).rank() > basis.len() {
            basis = trial;
            for g in gens {
                queue.push(g.mul_vec(&y));
            }
        }
    }
    basis.len()
}

/// Dimension of a proper submodule generated by an eigenvector of some
/// `T_s`, if one exists. Every proper submodule of a module whose
/// generators act semisimply on it meets such an eigenline.
fn proper_submodule(gens: &[Mat], params: &[Q]) -> Option<usize> {
    let d = gens.first().map_or(0, |m| m.rows);
    let id = Mat::identity(d);
    for (a, p) in gens.iter().zip(params) {
        for ev in [p.clone(), -Q::one()] {
            for x in a.sub(&id.scale(&ev)).nullspace() {
                let k = cyclic_span(gens, x);
                if k < d {
                    return Some(k);
                }
            }
        }
    }
    None
}

/// Whether the module has a proper submodule or quotient, or is decomposable.
pub fn is_reducible(m: &FinModule) -> (bool, Option<usize>, usize) {
    let params: Vec<Q> = (0..m.gens.len()).map(|i| m.alg.param(i).clone()).collect();
    let sub = proper_submodule(&m.gens, &params).or_else(|| {
        let t: Vec<Mat> = m.gens.iter().map(Mat::transpose).collect();
        proper_submodule(&t, &params).map(|k| m.dim() - k)
    });
    let e = endomorphism_dim(m);
    (sub.is_some() || e > 1, sub, e)
}

/// Grid of `z` values: `+-v^k`, `0 < |k| <= 3`, and eight generic rationals.
pub fn scan_grid(v: &Q) -> Vec<Q> {
    let mut out = Vec::new();
    for k in [-3i32, -2, -1, 1, 2, 3] {
        let mut p = Q::one();
        for _ in 0..k.unsigned_abs() {
            p *= v;
        }
        let p = if k < 0 { p.recip() } else { p };
        out.push(p.clone());
        out.push(-p);
    }
    for (a, b) in [(2, 7), (5, 11), (-3, 13), (7, 4), (-9, 5), (13, 17), (-19, 23), (29, 6)] {
        out.push(q(a, b));
    }
    out
}

/// Reducibility of `M(chi)` over a rank-one lattice, `chi(theta_{-e_c}) = z`.
pub fn reducibility_scan(alg: &HeckeAlgebra<Q>, grid: &[Q]) -> Result<Vec<ScanPoint>, PsError> {
    let [c] = alg.sys.coords[..] else {
        return Err(PsError::Unsupported("reducibility scan needs a rank-one lattice".into()));
    };
    let n = alg.n();
    let pts: Vec<Result<ScanPoint, PsError>> = crate::par::map(grid, |z| {
        if z.is_zero() {
            return Err(PsError::Pole);
        }
        let mut zs = vec![Q::one(); n];
        zs[c] = z.recip();
        let m = induce(alg, &UnramChar::new(zs)?)?;
        let (reducible, witness, end_dim) = is_reducible(&m);
        Ok(ScanPoint { z: z.clone(), reducible, witness, end_dim })
    });
    pts.into_iter().collect()
}

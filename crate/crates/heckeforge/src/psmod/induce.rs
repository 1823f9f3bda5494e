use super::module::FinModule;
use super::{PsError, UnramChar};
use crate::exactalg::linalg::{Echelon, Mat, SparseVec};
use crate::exactalg::Q;
use crate::hecke::{coweight_order, spherical_labels, theta, theta_dominant, HeckeAlgebra, HeckeElt};
use crate::par;
use crate::weyl::AffineElt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Module of the translation subalgebra: commuting invertible matrices
/// `theta[k]` for `theta_{e_i}`, `i` running over the system coordinates.
#[derive(Clone, Debug)]
pub struct LatticeRep {
    pub theta: Vec<Mat>,
}

impl LatticeRep {
    /// One-dimensional representation from an unramified character.
    pub fn from_char(alg: &HeckeAlgebra<Q>, chi: &UnramChar) -> Self {
        LatticeRep {
            theta: alg.sys.coords.iter().map(|&i| Mat::scalar(1, &chi.z[i])).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.theta.first().map_or(1, |m| m.rows)
    }

    /// Matrix of `theta_lambda`.
    pub fn eval(&self, alg: &HeckeAlgebra<Q>, lambda: &[i64]) -> Mat {
        let mut m = Mat::identity(self.dim());
        for (k, &i) in alg.sys.coords.iter().enumerate() {
            let c = lambda[i];
            let base = if c >= 0 {
                self.theta[k].clone()
            } else {
                self.theta[k].inverse().expect("lattice action must be invertible")
            };
            m = m.mul(&base.pow(c.unsigned_abs() as u32));
        }
        m
    }
}

/// Saturation options.
#[derive(Clone, Copy, Debug)]
pub struct InduceOptions {
    pub start: usize,
    pub cap: usize,
}

impl Default for InduceOptions {
    fn default() -> Self {
        InduceOptions { start: 2, cap: 24 }
    }
}

/// Principal series `H / H (theta_lambda - chi(lambda))`.
pub fn induce(alg: &HeckeAlgebra<Q>, chi: &UnramChar) -> Result<FinModule, PsError> {
    let mut m = induce_rep(alg, &LatticeRep::from_char(alg, chi), InduceOptions::default())?;
    m.chi = Some(chi.clone());
    Ok(m)
}

/// `H (x)_A sigma` for a representation `sigma` of the translation subalgebra.
///
/// The quotient of the span of `T_x (x) e_j`, `l(x) <= R + c`, by the relations
/// `T_y (theta_lambda (x) 1 - 1 (x) sigma(lambda))`, `l(y) <= R`, with
/// `lambda = +-omega_k`. Columns of the spherical group come first, so
/// every pivot lands elsewhere and `T_w (x) e_j`, `w` spherical, stay a basis.
/// The action is read off once `T_s T_w` reduces into that basis; the
/// matrices at `R` and `R + 1` must agree.
pub fn induce_rep(alg: &HeckeAlgebra<Q>, sigma: &LatticeRep, opts: InduceOptions) -> Result<FinModule, PsError> {
    let ctx = Context::new(alg, sigma)?;
    let mut prev: Option<Vec<Mat>> = None;
    for r in opts.start..=opts.cap {
        match ctx.attempt(r) {
            Some(gens) => {
                if prev.as_ref().is_some_and(|p| same(p, &gens)) {
                    let m = FinModule {
                        alg: alg.clone(),
                        gens,
                        basis: ctx.basis.clone(),
                        chi: None,
                        radius: r - 1,
                    };
                    m.check_relations()?;
                    return Ok(m);
                }
                prev = Some(gens);
            }
            None => prev = None,
        }
    }
    Err(PsError::NoStabilization(opts.cap))
}

fn same(a: &[Mat], b: &[Mat]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_rows() == y.to_rows())
}

struct Context<'a> {
    alg: &'a HeckeAlgebra<Q>,
    d: usize,
    basis: Vec<(AffineElt, usize)>,
    /// `(theta_lambda, sigma(lambda))` for `lambda = +-omega_k`.
    rels: Vec<(HeckeElt<Q>, Mat)>,
}

impl<'a> Context<'a> {
    fn new(alg: &'a HeckeAlgebra<Q>, sigma: &LatticeRep) -> Result<Self, PsError> {
        let d = sigma.dim();
        let spherical = alg.sys.subgroup(&spherical_labels(alg), 1 << 16)?;
        let basis = spherical.iter().flat_map(|w| (0..d).map(move |j| (w.clone(), j))).collect();
        let order = coweight_order(alg);
        let n = alg.n();
        let mut rels = Vec::new();
        for k in 1..=order.len() {
            let mut om = vec![0i64; n];
            for &i in &order[..k] {
                om[i] = 1;
            }
            let neg: Vec<i64> = om.iter().map(|x| -x).collect();
            let s_pos = sigma.eval(alg, &om);
            let s_neg = sigma.eval(alg, &neg);
            rels.push((theta_dominant(alg, &om), s_pos));
            rels.push((theta(alg, &neg)?, s_neg));
        }
        Ok(Context { alg, d, basis, rels })
    }

    /// Relation vectors from `T_y`, keyed by `(x, j)`.
    fn relations_of(&self, y: &AffineElt) -> Vec<BTreeMap<(AffineElt, usize), Q>> {
        let mut out = Vec::new();
        let ty = HeckeElt::basis(y.clone());
        for (th, s) in &self.rels {
            let prod = self.alg.mul(&ty, th);
            for j in 0..self.d {
                let mut v: BTreeMap<(AffineElt, usize), Q> = BTreeMap::new();
                for (x, c) in prod.terms() {
                    *v.entry((x.clone(), j)).or_insert_with(Q::zero) += c;
                }
                for k in 0..self.d {
                    let c = &s[(k, j)];
                    if !c.is_zero() {
                        *v.entry((y.clone(), k)).or_insert_with(Q::zero) -= c;
                    }
                }
                v.retain(|_, c| !c.is_zero());
                if !v.is_empty() {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Generator matrices at radius `r`, or `None` if the action does not close.
    fn attempt(&self, r: usize) -> Option<Vec<Mat>> {
        let ys = self.alg.sys.ball(r);
        let rel_lists = par::map(&ys, |y| self.relations_of(y));
        let nb = self.basis.len();
        let mut index: HashMap<(AffineElt, usize), usize> =
            self.basis.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let mut others: Vec<(i64, AffineElt, usize)> = Vec::new();
        for v in rel_lists.iter().flatten() {
            for (x, j) in v.keys() {
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry((x.clone(), *j)) {
                    e.insert(usize::MAX);
                    others.push((self.alg.sys.length(x), x.clone(), *j));
                }
            }
        }
        others.sort();
        for (i, (_, x, j)) in others.into_iter().enumerate() {
            index.insert((x, j), nb + i);
        }
        let mut ech = Echelon::new();
        for v in rel_lists.into_iter().flatten() {
            let sv: SparseVec = v.into_iter().map(|(k, c)| (index[&k], c)).collect();
            ech.insert(sv);
        }
        if (0..nb).any(|c| ech.is_pivot(c)) {
            return None;
        }
        let mut gens = Vec::new();
        for gi in 0..self.alg.sys.gens.len() {
            let mut m = Mat::zeros(nb, nb);
            for (col, (w, j)) in self.basis.iter().enumerate() {
                let img = self.alg.left_mul_gen(gi, &HeckeElt::basis(w.clone()));
                let mut sv = SparseVec::new();
                for (x, c) in img.terms() {
                    let &idx = index.get(&(x.clone(), *j))?;
                    *sv.entry(idx).or_insert_with(Q::zero) += c;
                }
                let red = ech.reduce(sv);
                for (row, c) in red {
                    if row >= nb {
                        return None;
                    }
                    m[(row, col)] = c;
                }
            }
            gens.push(m);
        }
        Some(gens)
    }
}

/// A generic rational character: `z_i` drawn from a fixed pool of
/// rationals unlikely to hit reducibility or saturation degeneracies.
pub fn generic_char<R: rand::Rng>(alg: &HeckeAlgebra<Q>, rng: &mut R) -> UnramChar {
    let n = alg.n();
    let mut z = vec![Q::one(); n];
    for &i in &alg.sys.coords {
        let num = rng.gen_range(2..40i64);
        let den = rng.gen_range(2..40i64);
        let x = Q::new(num.into(), den.into());
        z[i] = if x.is_one() { Q::new(37.into(), 11.into()) } else { x };
    }
    UnramChar { z }
}

use super::affine::{dot, AffineElt, AffineRoot, Order};
use super::signed_perm::SignedPerm;
use super::system::{AffineSystem, WeightProfile};
use super::WeylError;
use crate::exactalg::LaurentPoly;
use num_traits::One;
use std::collections::BTreeSet;

/// Levi decomposition `P = M U` of a system: `phi_m` is the root system of
/// `M` (closed under negation) and `phi_u` the positive roots outside it.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub n: usize,
    pub order: Order,
    pub phi_m: Vec<Vec<i64>>,
    pub phi_u: Vec<Vec<i64>>,
    /// Coordinates carrying the lattice of the ambient system.
    pub coords: Vec<usize>,
}

impl LeviData {
    /// Levi spanned by the finite simple roots with the given labels.
    pub fn standard(sys: &AffineSystem, j: &[usize]) -> Result<Self, WeylError> {
        let simple: Vec<Vec<i64>> = j
            .iter()
            .map(|&l| {
                let g = sys.gen(l)?;
                if g.root.k != 0 {
                    return Err(WeylError::InvalidIndex { label: l, system: "finite part" });
                }
                Ok(g.root.alpha.clone())
            })
            .collect::<Result<_, _>>()?;
        let phi_m: Vec<Vec<i64>> = sys
            .finite_roots
            .iter()
            .filter(|a| in_span(a, &simple))
            .cloned()
            .collect();
        let phi_u = sys
            .positive_finite_roots()
            .into_iter()
            .filter(|a| !phi_m.contains(a))
            .collect();
        Ok(LeviData {
            n: sys.n,
            order: sys.order,
            phi_m,
            phi_u,
            coords: sys.coords.clone(),
        })
    }

    pub fn levi_system(&self, parent: &AffineSystem) -> AffineSystem {
        AffineSystem::levi(parent, self.phi_m.clone())
    }

    /// `z I_U z^{-1} in I_U` and the opposite containment for `z^{-1}`,
    /// checked on the minimal levels `0` (on `U`) and `1` (on `U-bar`).
    pub fn is_positive(&self, x: &AffineElt) -> bool {
        let xi = x.inverse();
        let in_u = |b: &Vec<i64>| self.phi_u.contains(b);
        let in_ubar = |b: &Vec<i64>| {
            let nb: Vec<i64> = b.iter().map(|v| -v).collect();
            self.phi_u.contains(&nb)
        };
        for beta in &self.phi_u {
            let img = x.apply_root(&AffineRoot::new(beta.clone(), 0));
            if !in_u(&img.alpha) || img.k < 0 {
                return false;
            }
            let nb: Vec<i64> = beta.iter().map(|v| -v).collect();
            let img = xi.apply_root(&AffineRoot::new(nb, 1));
            if !in_ubar(&img.alpha) || img.k < 1 {
                return false;
            }
        }
        true
    }

    /// Whether `lambda` pairs nonnegatively with every root of `U`.
    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        self.phi_u.iter().all(|b| dot(b, lambda) >= 0)
    }

    /// Whether `lambda` is orthogonal to `M` and strictly positive on `U`.
    pub fn is_strictly_central_dominant(&self, lambda: &[i64]) -> bool {
        self.phi_m.iter().all(|a| dot(a, lambda) == 0) && self.phi_u.iter().all(|b| dot(b, lambda) > 0)
    }
}

fn in_span(a: &[i64], basis: &[Vec<i64>]) -> bool {
    if basis.is_empty() {
        return false;
    }
    let rows: Vec<Vec<crate::exactalg::Q>> = basis
        .iter()
        .map(|b| b.iter().map(|&x| crate::exactalg::qi(x)).collect())
        .collect();
    let m = crate::exactalg::linalg::Mat::from_rows(rows.clone());
    let mut ext = rows;
    ext.push(a.iter().map(|&x| crate::exactalg::qi(x)).collect());
    crate::exactalg::linalg::Mat::from_rows(ext).rank() == m.rank()
}

/// Minimal representatives `w` of the cosets `w W_J` of the finite group of
/// `sys`, characterized by `w(alpha_j) > 0` for the simple roots in `J`.
pub fn min_coset_reps(sys: &AffineSystem, j: &[usize]) -> Result<Vec<SignedPerm>, WeylError> {
    let roots: Vec<AffineRoot> = j.iter().map(|&l| sys.gen(l).map(|g| g.root.clone())).collect::<Result<_, _>>()?;
    let group = sys.subgroup(&sys.finite_labels(), 1 << 20)?;
    Ok(group
        .into_iter()
        .filter(|w| roots.iter().all(|a| sys.is_positive(&w.apply_root(a))))
        .map(|w| w.fin)
        .collect())
}

/// `sum_{w in <J>} q^{L(w)}` as a polynomial in `v` (`q = v^2`).
pub fn poincare_poly(sys: &AffineSystem, profile: &WeightProfile, j: &[usize]) -> Result<LaurentPoly, WeylError> {
    let group = sys.subgroup(j, 1 << 20)?;
    let mut p = LaurentPoly::zero(1);
    for w in &group {
        let l = sys.weighted_length(w, profile);
        p = p.add(&LaurentPoly::monomial(crate::exactalg::Q::one(), vec![2 * l as i32]));
    }
    Ok(p)
}

/// Unipotent radical of a parabolic with a fixed Levi, as its set of
/// reduced roots. Long roots `2e_i` stand for the reduced `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    pub roots: BTreeSet<Vec<i64>>,
}

impl Parabolic {
    pub fn new(roots: impl IntoIterator<Item = Vec<i64>>) -> Self {
        Parabolic {
            roots: roots.into_iter().map(reduce_root).collect(),
        }
    }

    /// `^w P`.
    pub fn conjugate(&self, w: &SignedPerm) -> Self {
        Parabolic {
            roots: self.roots.iter().map(|r| w.apply(r)).collect(),
        }
    }

    pub fn opposite(&self) -> Self {
        Parabolic {
            roots: self.roots.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
        }
    }

    fn levi_key(&self) -> BTreeSet<Vec<i64>> {
        let mut s = self.roots.clone();
        s.extend(self.opposite().roots);
        s
    }
}

fn reduce_root(r: Vec<i64>) -> Vec<i64> {
    if super::affine::is_long(&r) {
        r.into_iter().map(|x| x / 2).collect()
    } else {
        r
    }
}

/// `|Sigma_P cap Sigma_Q|`, the number of shared reduced roots.
pub fn shared_reduced_roots(p: &Parabolic, q: &Parabolic) -> Result<usize, WeylError> {
    if p.levi_key() != q.levi_key() {
        return Err(WeylError::MismatchedLevi);
    }
    Ok(p.roots.intersection(&q.roots).count())
}

/// `|Sigma_P cap Sigma_{Q-bar}|`, the number of reduced roots separating the two.
pub fn separating_reduced_roots(p: &Parabolic, q: &Parabolic) -> Result<usize, WeylError> {
    shared_reduced_roots(p, &q.opposite())
}

use super::signed_perm::{SignedPerm, SignedPermJson};
use serde::{Deserialize, Serialize};

/// Affine map `x -> trans + fin(x)` on `R^n`.
///
/// Group law `(l, u)(m, w) = (l + u m, u w)`. The translation `t_lambda`
/// attached to a cocharacter `lambda` is `(-lambda, id)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElt {
    pub trans: Vec<i64>,
    pub fin: SignedPerm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineEltJson {
    pub trans: Vec<i64>,
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl AffineElt {
    pub fn new(trans: Vec<i64>, fin: SignedPerm) -> Self {
        assert_eq!(trans.len(), fin.n(), "rank mismatch");
        AffineElt { trans, fin }
    }

    pub fn identity(n: usize) -> Self {
        AffineElt {
            trans: vec![0; n],
            fin: SignedPerm::identity(n),
        }
    }

    pub fn finite(u: SignedPerm) -> Self {
        AffineElt {
            trans: vec![0; u.n()],
            fin: u,
        }
    }

    /// `t_lambda`, the image of the cocharacter `lambda`.
    pub fn t(lambda: &[i64]) -> Self {
        AffineElt {
            trans: lambda.iter().map(|x| -x).collect(),
            fin: SignedPerm::identity(lambda.len()),
        }
    }

    pub fn n(&self) -> usize {
        self.trans.len()
    }

    pub fn is_identity(&self) -> bool {
        self.trans.iter().all(|&x| x == 0) && self.fin.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.fin.is_identity()
    }

    /// The cocharacter `lambda` when `self = t_lambda`.
    pub fn cocharacter(&self) -> Option<Vec<i64>> {
        self.is_translation().then(|| self.trans.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let um = self.fin.apply(&o.trans);
        AffineElt {
            trans: self.trans.iter().zip(&um).map(|(a, b)| a + b).collect(),
            fin: self.fin.mul(&o.fin),
        }
    }

    pub fn inverse(&self) -> Self {
        let ui = self.fin.inverse();
        let t = ui.apply(&self.trans);
        AffineElt {
            trans: t.iter().map(|x| -x).collect(),
            fin: ui,
        }
    }

    /// `g (alpha, k) = (u alpha, k - <u alpha, trans>)`.
    pub fn apply_root(&self, a: &AffineRoot) -> AffineRoot {
        let beta = self.fin.apply(&a.alpha);
        let m: i64 = beta.iter().zip(&self.trans).map(|(x, y)| x * y).sum();
        AffineRoot { alpha: beta, k: a.k - m }
    }

    pub fn to_json(&self) -> AffineEltJson {
        let f = self.fin.to_json();
        AffineEltJson {
            trans: self.trans.clone(),
            perm: f.perm,
            signs: f.signs,
        }
    }

    pub fn from_json(j: &AffineEltJson) -> Option<Self> {
        let fin = SignedPerm::from_json(&SignedPermJson {
            perm: j.perm.clone(),
            signs: j.signs.clone(),
        })?;
        (fin.n() == j.trans.len()).then(|| AffineElt {
            trans: j.trans.clone(),
            fin,
        })
    }
}

/// Affine root `x -> <alpha, x> + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub alpha: Vec<i64>,
    pub k: i64,
}

/// Which coordinate decides the sign of a finite root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// First nonzero coordinate positive.
    Forward,
    /// Last nonzero coordinate positive.
    Backward,
}

impl Order {
    pub fn is_positive(self, alpha: &[i64]) -> bool {
        let lead = match self {
            Order::Forward => alpha.iter().find(|&&x| x != 0),
            Order::Backward => alpha.iter().rev().find(|&&x| x != 0),
        };
        lead.is_some_and(|&x| x > 0)
    }
}

/// Conjugacy class of an affine reflection in type C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootClass {
    Short,
    /// Long root at even level, conjugate to the finite long node.
    LongEven,
    /// Long root at odd level, conjugate to the affine node.
    LongOdd,
}

impl AffineRoot {
    pub fn new(alpha: Vec<i64>, k: i64) -> Self {
        AffineRoot { alpha, k }
    }

    pub fn neg(&self) -> Self {
        AffineRoot {
            alpha: self.alpha.iter().map(|x| -x).collect(),
            k: -self.k,
        }
    }

    pub fn is_long(&self) -> bool {
        is_long(&self.alpha)
    }

    pub fn class(&self) -> RootClass {
        if !self.is_long() {
            RootClass::Short
        } else if self.k.rem_euclid(2) == 0 {
            RootClass::LongEven
        } else {
            RootClass::LongOdd
        }
    }

    pub fn is_positive(&self, order: Order) -> bool {
        self.k > 0 || (self.k == 0 && order.is_positive(&self.alpha))
    }

    /// The reflection `x -> x - (<alpha, x> + k) alpha_check`.
    pub fn reflection(&self) -> AffineElt {
        let n = self.alpha.len();
        let norm: i64 = self.alpha.iter().map(|x| x * x).sum();
        let coroot: Vec<i64> = self.alpha.iter().map(|x| 2 * x / norm).collect();
        let mut u = SignedPerm::identity(n);
        let nz: Vec<usize> = (0..n).filter(|&i| self.alpha[i] != 0).collect();
        if nz.len() == 1 {
            u = SignedPerm::flip(n, nz[0]);
        } else {
            let (i, j) = (nz[0], nz[1]);
            if self.alpha[i] == self.alpha[j] {
                u = SignedPerm::swap(n, i, j).mul(&SignedPerm::flip(n, i)).mul(&SignedPerm::flip(n, j));
            } else {
                u = u.mul(&SignedPerm::swap(n, i, j));
            }
        }
        AffineElt {
            trans: coroot.iter().map(|c| -self.k * c).collect(),
            fin: u,
        }
    }
}

pub fn is_long(alpha: &[i64]) -> bool {
    alpha.iter().filter(|&&x| x != 0).count() == 1
}

/// Pairing of integer vectors.
pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All roots of type `C` supported on the given 0-based coordinates.
pub fn type_c_roots(n: usize, coords: &[usize]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (a, &i) in coords.iter().enumerate() {
        for s in [2, -2] {
            let mut r = vec![0; n];
            r[i] = s;
            out.push(r);
        }
        for &j in &coords[a + 1..] {
            for (si, sj) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                let mut r = vec![0; n];
                r[i] = si;
                r[j] = sj;
                out.push(r);
            }
        }
    }
    out
}

use serde::{Deserialize, Serialize};

/// Signed permutation `e_i -> signs[i] e_{perm[i]}` (0-based storage).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

/// 1-based JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedPermJson {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    /// Builds from 0-based images and signs; panics unless `perm` is a bijection.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        assert_eq!(perm.len(), signs.len(), "length mismatch");
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        assert!(signs.iter().all(|&s| s == 1 || s == -1), "signs must be +-1");
        SignedPerm { perm, signs }
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// `-id`.
    pub fn minus_identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            signs: vec![-1; n],
        }
    }

    /// Sign change at 0-based coordinate `i`.
    pub fn flip(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.signs[i] = -1;
        s
    }

    /// Transposition of 0-based coordinates `i, j`.
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut s = Self::identity(n);
        s.perm.swap(i, j);
        s
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `(self * o)(x) = self(o(x))`.
    pub fn mul(&self, o: &Self) -> Self {
        let perm = o.perm.iter().map(|&j| self.perm[j]).collect();
        let signs = o.perm.iter().zip(&o.signs).map(|(&j, &s)| s * self.signs[j]).collect();
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPerm { perm, signs }
    }

    /// Action on a coordinate vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut y = vec![0; x.len()];
        for i in 0..x.len() {
            y[self.perm[i]] = self.signs[i] as i64 * x[i];
        }
        y
    }

    /// Number of sign changes, the flip count `t(w)`.
    pub fn flip_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }

    /// All `2^n n!` signed permutations in a fixed order.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..(1u32 << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPerm { perm: p.clone(), signs });
            }
        }
        out
    }

    pub fn to_json(&self) -> SignedPermJson {
        SignedPermJson {
            perm: self.perm.iter().map(|p| p + 1).collect(),
            signs: self.signs.clone(),
        }
    }

    pub fn from_json(j: &SignedPermJson) -> Option<Self> {
        if j.perm.len() != j.signs.len() || j.perm.iter().any(|&p| p == 0 || p > j.perm.len()) {
            return None;
        }
        let perm: Vec<usize> = j.perm.iter().map(|p| p - 1).collect();
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if seen[p] {
                return None;
            }
            seen[p] = true;
        }
        if j.signs.iter().any(|&s| s != 1 && s != -1) {
            return None;
        }
        Some(SignedPerm {
            perm,
            signs: j.signs.clone(),
        })
    }
}

fn permutations(a: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == a.len() {
        out.push(a.clone());
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, out);
        a.swap(k, i);
    }
}

use super::affine::{dot, type_c_roots, AffineElt, AffineRoot, Order, RootClass};
use super::signed_perm::SignedPerm;
use super::WeylError;
use rand::Rng;
use std::collections::{BTreeSet, HashSet, VecDeque};

/// Weights of the three reflection classes; a weighted length sums them
/// over inverted positive affine roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightProfile {
    pub name: &'static str,
    pub short: i64,
    pub long_even: i64,
    pub long_odd: i64,
}

impl WeightProfile {
    pub fn weight(&self, c: RootClass) -> i64 {
        match c {
            RootClass::Short => self.short,
            RootClass::LongEven => self.long_even,
            RootClass::LongOdd => self.long_odd,
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        [ELL, ELL0, ELL2, ELL_PRIME].into_iter().find(|p| p.name == name)
    }
}

/// Coxeter length.
pub const ELL: WeightProfile = WeightProfile {
    name: "l",
    short: 1,
    long_even: 1,
    long_odd: 1,
};
/// Orthogonal grading of the split case: the affine node has weight 0.
pub const ELL0: WeightProfile = WeightProfile {
    name: "l0",
    short: 1,
    long_even: 1,
    long_odd: 0,
};
/// Orthogonal grading of the non-split case: the affine node has weight 2.
pub const ELL2: WeightProfile = WeightProfile {
    name: "l2",
    short: 1,
    long_even: 1,
    long_odd: 2,
};
/// Metaplectic grading of the odd case: the affine node has weight 3.
pub const ELL_PRIME: WeightProfile = WeightProfile {
    name: "lprime",
    short: 1,
    long_even: 1,
    long_odd: 3,
};

/// Name of a simple system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// `s_0..s_n`, affine type C in the forward base.
    S,
    /// `s'_1..s'_n`, embedded via `s'_1 = s_1 s_0 s_1`.
    SPrime,
    /// `t_1..t_n`, the finite group in the backward base.
    T,
    /// `t'_2..t'_n`, the stabilizer of coordinate 1 in the backward base.
    TPrime,
    /// Levi subsystem of a parent system.
    Levi,
}

impl SystemKind {
    pub fn name(self) -> &'static str {
        match self {
            SystemKind::S => "s",
            SystemKind::SPrime => "sprime",
            SystemKind::T => "t",
            SystemKind::TPrime => "tprime",
            SystemKind::Levi => "levi",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "s" => Some(SystemKind::S),
            "sprime" => Some(SystemKind::SPrime),
            "t" => Some(SystemKind::T),
            "tprime" => Some(SystemKind::TPrime),
            _ => None,
        }
    }
}

/// Which affine levels of the finite roots belong to the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Levels {
    /// Every level: an affine Weyl group (possibly extended).
    All,
    /// Level zero only: a finite reflection group.
    Zero,
    /// An explicit finite list of positive affine roots.
    Explicit(Vec<AffineRoot>),
}

/// Simple reflection with its label and simple affine root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: usize,
    pub elt: AffineElt,
    pub root: AffineRoot,
}

/// A reflection group inside the extended affine Weyl group of type `C_n`.
///
/// The root set is `finite_roots` at the levels allowed by `levels`;
/// positivity follows `order`. Lengths are counts of inverted positive
/// roots, so they are defined for every element normalizing the root set,
/// including length-zero elements of extended groups.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    pub n: usize,
    pub kind: SystemKind,
    pub order: Order,
    pub finite_roots: Vec<Vec<i64>>,
    pub levels: Levels,
    pub gens: Vec<Generator>,
    /// Coordinates the group may move; the rest are fixed pointwise.
    pub coords: Vec<usize>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

fn root_vec(n: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut r = vec![0; n];
    for &(i, x) in entries {
        r[i] = x;
    }
    r
}

impl AffineSystem {
    /// `s_0..s_n` with simple roots `1 - 2e_1`, `e_i - e_{i+1}`, `2e_n`.
    pub fn s(n: usize) -> Self {
        assert!(n >= 1);
        let mut gens = vec![Generator {
            label: 0,
            elt: AffineElt::new(unit(n, 0), SignedPerm::flip(n, 0)),
            root: AffineRoot::new(root_vec(n, &[(0, -2)]), 1),
        }];
        for i in 1..n {
            gens.push(Generator {
                label: i,
                elt: AffineElt::finite(SignedPerm::swap(n, i - 1, i)),
                root: AffineRoot::new(root_vec(n, &[(i - 1, 1), (i, -1)]), 0),
            });
        }
        gens.push(Generator {
            label: n,
            elt: AffineElt::finite(SignedPerm::flip(n, n - 1)),
            root: AffineRoot::new(root_vec(n, &[(n - 1, 2)]), 0),
        });
        let coords: Vec<usize> = (0..n).collect();
        AffineSystem {
            n,
            kind: SystemKind::S,
            order: Order::Forward,
            finite_roots: type_c_roots(n, &coords),
            levels: Levels::All,
            gens,
            coords,
        }
    }

    /// `s'_1..s'_n` with `s'_1 = s_1 s_0 s_1` and `s'_i = s_i`.
    ///
    /// For `n >= 2` this is affine type `C_{n-1}` on coordinates `2..n`. For
    /// `n = 1` it is the group of order 2 generated by `x -> -1 - x`.
    pub fn sprime(n: usize) -> Self {
        assert!(n >= 1);
        if n == 1 {
            let root = AffineRoot::new(vec![2], 1);
            return AffineSystem {
                n,
                kind: SystemKind::SPrime,
                order: Order::Forward,
                finite_roots: vec![vec![2], vec![-2]],
                levels: Levels::Explicit(vec![root.clone()]),
                gens: vec![Generator {
                    label: 1,
                    elt: root.reflection(),
                    root,
                }],
                coords: vec![0],
            };
        }
        let s = Self::s(n);
        let mut gens = vec![Generator {
            label: 1,
            elt: AffineElt::new(unit(n, 1), SignedPerm::flip(n, 1)),
            root: AffineRoot::new(root_vec(n, &[(1, -2)]), 1),
        }];
        gens.extend(s.gens.into_iter().filter(|g| g.label >= 2));
        let coords: Vec<usize> = (1..n).collect();
        AffineSystem {
            n,
            kind: SystemKind::SPrime,
            order: Order::Forward,
            finite_roots: type_c_roots(n, &coords),
            levels: Levels::All,
            gens,
            coords,
        }
    }

    /// `t_1..t_n`: `t_1` flips coordinate 1, `t_i` swaps `i-1, i`.
    pub fn t(n: usize) -> Self {
        assert!(n >= 1);
        let mut gens = vec![Generator {
            label: 1,
            elt: AffineElt::finite(SignedPerm::flip(n, 0)),
            root: AffineRoot::new(root_vec(n, &[(0, 2)]), 0),
        }];
        for i in 2..=n {
            gens.push(Generator {
                label: i,
                elt: AffineElt::finite(SignedPerm::swap(n, i - 2, i - 1)),
                root: AffineRoot::new(root_vec(n, &[(i - 2, -1), (i - 1, 1)]), 0),
            });
        }
        let coords: Vec<usize> = (0..n).collect();
        AffineSystem {
            n,
            kind: SystemKind::T,
            order: Order::Backward,
            finite_roots: type_c_roots(n, &coords),
            levels: Levels::Zero,
            gens,
            coords,
        }
    }

    /// `t'_2..t'_n`: `t'_2` flips coordinate 2, `t'_i = t_i` for `i > 2`.
    pub fn tprime(n: usize) -> Self {
        assert!(n >= 1);
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Generator {
                label: 2,
                elt: AffineElt::finite(SignedPerm::flip(n, 1)),
                root: AffineRoot::new(root_vec(n, &[(1, 2)]), 0),
            });
        }
        gens.extend(Self::t(n).gens.into_iter().filter(|g| g.label >= 3));
        let coords: Vec<usize> = (1..n).collect();
        AffineSystem {
            n,
            kind: SystemKind::TPrime,
            order: Order::Backward,
            finite_roots: type_c_roots(n, &coords),
            levels: Levels::Zero,
            gens,
            coords,
        }
    }

    pub fn by_kind(kind: SystemKind, n: usize) -> Self {
        match kind {
            SystemKind::S => Self::s(n),
            SystemKind::SPrime => Self::sprime(n),
            SystemKind::T => Self::t(n),
            SystemKind::TPrime => Self::tprime(n),
            SystemKind::Levi => panic!("Levi systems are built from a parent"),
        }
    }

    /// Levi subsystem with finite roots `phi_m` and the parent's order,
    /// acting on the parent's coordinates at all levels. Simple reflections
    /// are the reflections of length one; the group also contains every
    /// translation of the parent lattice, so length-zero elements occur.
    pub fn levi(parent: &AffineSystem, phi_m: Vec<Vec<i64>>) -> Self {
        let mut sys = AffineSystem {
            n: parent.n,
            kind: SystemKind::Levi,
            order: parent.order,
            finite_roots: phi_m,
            levels: Levels::All,
            gens: Vec::new(),
            coords: parent.coords.clone(),
        };
        let mut gens = Vec::new();
        for alpha in &sys.finite_roots {
            for k in 0..=1 {
                let a = AffineRoot::new(alpha.clone(), k);
                if !a.is_positive(sys.order) {
                    continue;
                }
                let r = a.reflection();
                if sys.length(&r) == 1 {
                    gens.push(a);
                }
            }
        }
        gens.sort();
        sys.gens = gens
            .into_iter()
            .enumerate()
            .map(|(i, root)| Generator {
                label: i,
                elt: root.reflection(),
                root,
            })
            .collect();
        sys
    }

    pub fn labels(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.label).collect()
    }

    pub fn gen(&self, label: usize) -> Result<&Generator, WeylError> {
        self.gens
            .iter()
            .find(|g| g.label == label)
            .ok_or(WeylError::InvalidIndex { label, system: self.kind.name() })
    }

    pub fn identity(&self) -> AffineElt {
        AffineElt::identity(self.n)
    }

    pub fn is_positive(&self, a: &AffineRoot) -> bool {
        a.is_positive(self.order)
    }

    /// Product of the generators named by `word`, left to right.
    pub fn word_to_elt(&self, word: &[usize]) -> Result<AffineElt, WeylError> {
        let mut x = self.identity();
        for &l in word {
            x = x.mul(&self.gen(l)?.elt);
        }
        Ok(x)
    }

    /// Inverted positive roots of `x`, counted by class.
    pub fn inversion_counts(&self, x: &AffineElt) -> [i64; 3] {
        let mut c = [0i64; 3];
        let mut add = |class: RootClass, k: i64| {
            let idx = match class {
                RootClass::Short => 0,
                RootClass::LongEven => 1,
                RootClass::LongOdd => 2,
            };
            c[idx] += k;
        };
        match &self.levels {
            Levels::All => {
                for alpha in &self.finite_roots {
                    let beta = x.fin.apply(alpha);
                    let m = dot(&beta, &x.trans);
                    let k_min = if self.order.is_positive(alpha) { 0 } else { 1 };
                    let k_max = m - 1 + i64::from(!self.order.is_positive(&beta));
                    if k_max < k_min {
                        continue;
                    }
                    if super::affine::is_long(alpha) {
                        let evens = count_even(k_min, k_max);
                        add(RootClass::LongEven, evens);
                        add(RootClass::LongOdd, k_max - k_min + 1 - evens);
                    } else {
                        add(RootClass::Short, k_max - k_min + 1);
                    }
                }
            }
            Levels::Zero => {
                for alpha in &self.finite_roots {
                    let a = AffineRoot::new(alpha.clone(), 0);
                    if self.is_positive(&a) && !self.is_positive(&x.apply_root(&a)) {
                        add(a.class(), 1);
                    }
                }
            }
            Levels::Explicit(roots) => {
                for a in roots {
                    if !self.is_positive(&x.apply_root(a)) {
                        add(a.class(), 1);
                    }
                }
            }
        }
        c
    }

    /// Weighted length by root counting.
    pub fn weighted_length(&self, x: &AffineElt, p: &WeightProfile) -> i64 {
        let c = self.inversion_counts(x);
        c[0] * p.short + c[1] * p.long_even + c[2] * p.long_odd
    }

    /// Coxeter length by root counting.
    pub fn length(&self, x: &AffineElt) -> i64 {
        self.inversion_counts(x).iter().sum()
    }

    /// Whether `x s < x` for the generator `s`.
    pub fn is_right_descent(&self, x: &AffineElt, g: &Generator) -> bool {
        !self.is_positive(&x.apply_root(&g.root))
    }

    /// Whether `s x < x` for the generator `s`.
    pub fn is_left_descent(&self, x: &AffineElt, g: &Generator) -> bool {
        !self.is_positive(&x.inverse().apply_root(&g.root))
    }

    /// Splits `x = omega * word` with `word` reduced and `omega` free of
    /// right descents. The smallest descending label is taken at each step.
    pub fn decompose(&self, x: &AffineElt) -> (AffineElt, Vec<usize>) {
        self.decompose_with(x, |ds| ds[0])
    }

    fn decompose_with(
        &self,
        x: &AffineElt,
        mut pick: impl FnMut(&[usize]) -> usize,
    ) -> (AffineElt, Vec<usize>) {
        let mut cur = x.clone();
        let mut rev = Vec::new();
        loop {
            let ds: Vec<usize> = self
                .gens
                .iter()
                .enumerate()
                .filter(|(_, g)| self.is_right_descent(&cur, g))
                .map(|(i, _)| i)
                .collect();
            if ds.is_empty() {
                rev.reverse();
                return (cur, rev);
            }
            let g = &self.gens[pick(&ds)];
            cur = cur.mul(&g.elt);
            rev.push(g.label);
        }
    }

    /// Reduced word of `x`; fails when `x` is outside the Coxeter group.
    pub fn reduced_word(&self, x: &AffineElt) -> Result<Vec<usize>, WeylError> {
        self.check_support(x)?;
        let (omega, w) = self.decompose(x);
        if !omega.is_identity() {
            return Err(WeylError::NotInSubgroup { system: self.kind.name() });
        }
        Ok(w)
    }

    /// Reduced word chosen by random descents.
    pub fn random_reduced_word<R: Rng>(&self, x: &AffineElt, rng: &mut R) -> Result<Vec<usize>, WeylError> {
        self.check_support(x)?;
        let (omega, w) = self.decompose_with(x, |ds| ds[rng.gen_range(0..ds.len())]);
        if !omega.is_identity() {
            return Err(WeylError::NotInSubgroup { system: self.kind.name() });
        }
        Ok(w)
    }

    /// Rejects elements moving coordinates outside the system, and
    /// translations in finite systems.
    fn check_support(&self, x: &AffineElt) -> Result<(), WeylError> {
        let err = WeylError::NotInSubgroup { system: self.kind.name() };
        for i in 0..self.n {
            if !self.coords.contains(&i) && (x.trans[i] != 0 || x.fin.perm()[i] != i || x.fin.signs()[i] != 1) {
                return Err(err);
            }
        }
        if self.levels == Levels::Zero && x.trans.iter().any(|&t| t != 0) {
            return Err(err);
        }
        Ok(())
    }

    pub fn contains(&self, x: &AffineElt) -> bool {
        self.reduced_word(x).is_ok()
    }

    /// All elements of length at most `r` (Coxeter part only), by BFS.
    pub fn ball(&self, r: usize) -> Vec<AffineElt> {
        let mut seen: HashSet<AffineElt> = HashSet::new();
        let mut out = Vec::new();
        let mut q = VecDeque::new();
        let e = self.identity();
        seen.insert(e.clone());
        q.push_back((e, 0usize));
        while let Some((x, d)) = q.pop_front() {
            out.push(x.clone());
            if d == r {
                continue;
            }
            for g in &self.gens {
                let y = x.mul(&g.elt);
                if seen.insert(y.clone()) {
                    q.push_back((y, d + 1));
                }
            }
        }
        out
    }

    /// Elements of the subgroup generated by `labels`; errors past `cap`.
    pub fn subgroup(&self, labels: &[usize], cap: usize) -> Result<Vec<AffineElt>, WeylError> {
        let gens: Vec<&Generator> = labels.iter().map(|&l| self.gen(l)).collect::<Result<_, _>>()?;
        let mut seen: BTreeSet<AffineElt> = BTreeSet::new();
        let mut q = VecDeque::new();
        let e = self.identity();
        seen.insert(e.clone());
        q.push_back(e);
        while let Some(x) = q.pop_front() {
            for g in &gens {
                let y = x.mul(&g.elt);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(WeylError::InfiniteSubgroup { cap });
                    }
                    q.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Finite simple generators (level 0 simple roots).
    pub fn finite_labels(&self) -> Vec<usize> {
        self.gens.iter().filter(|g| g.root.k == 0).map(|g| g.label).collect()
    }

    /// Positive finite roots of the system.
    pub fn positive_finite_roots(&self) -> Vec<Vec<i64>> {
        self.finite_roots.iter().filter(|a| self.order.is_positive(a)).cloned().collect()
    }
}

fn count_even(lo: i64, hi: i64) -> i64 {
    if hi < lo {
        return 0;
    }
    hi.div_euclid(2) - (lo - 1).div_euclid(2)
}

use super::{fmt_q, q_pow, var_name, AlgError, Q};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Sparse Laurent polynomial in `v, z1, .., zm` over `Q`.
///
/// Exponent vectors have length `nvars`; no zero coefficient is stored.
/// Operands of different arity are padded with zero exponents, so constants
/// built with `nvars = 0` combine with anything.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: HashMap<Vec<i32>, Q>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, o: &Self) -> bool {
        if self.nvars == o.nvars {
            return self.terms == o.terms;
        }
        let n = self.nvars.max(o.nvars);
        self.padded(n).terms == o.padded(n).terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn constant(c: Q, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Q::one(), nvars)
    }

    /// `c * prod x_i^{exps_i}`.
    pub fn monomial(c: Q, exps: Vec<i32>) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Q::one(), e)
    }

    /// `v^k` with `nvars` variables (`q^j = v^{2j}`).
    pub fn v_pow(k: i32, nvars: usize) -> Self {
        let mut e = vec![0; nvars.max(1)];
        e[0] = k;
        Self::monomial(Q::one(), e)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32, nvars: usize) -> Self {
        Self::v_pow(2 * k, nvars)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i32>, &Q)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| a.0.cmp(b.0));
        t
    }

    pub fn coeff(&self, exps: &[i32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    /// Returns `(exps, coeff)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(Vec<i32>, Q)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((e.clone(), c.clone()))
        } else {
            None
        }
    }

    /// Returns the value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.is_zero() {
            return Some(Q::zero());
        }
        match self.as_monomial() {
            Some((e, c)) if e.iter().all(|&x| x == 0) => Some(c),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn padded(&self, n: usize) -> Self {
        if n == self.nvars {
            return self.clone();
        }
        assert!(n > self.nvars, "cannot shrink arity");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.resize(n, 0);
                (e2, c.clone())
            })
            .collect();
        LaurentPoly { nvars: n, terms }
    }

    fn add_term(&mut self, e: Vec<i32>, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn align(&self, o: &Self) -> (Self, Self) {
        let n = self.nvars.max(o.nvars);
        (self.padded(n), o.padded(n))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.nvars != o.nvars {
            let (a, b) = self.align(o);
            return a.add(&b);
        }
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut r = big.clone();
        for (e, c) in &small.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.nvars != o.nvars {
            let (a, b) = self.align(o);
            return a.mul(&b);
        }
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// Multiplies by the monomial `c * x^exps`.
    pub fn mul_monomial(&self, exps: &[i32], c: &Q) -> Self {
        let n = self.nvars.max(exps.len());
        let p = self.padded(n);
        let mut ex = exps.to_vec();
        ex.resize(n, 0);
        LaurentPoly {
            nvars: n,
            terms: p
                .terms
                .iter()
                .map(|(e, k)| (e.iter().zip(&ex).map(|(a, b)| a + b).collect(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Smallest exponent of variable `i` (0 for the zero polynomial).
    pub fn min_exp(&self, i: usize) -> i32 {
        self.terms.keys().map(|e| e.get(i).copied().unwrap_or(0)).min().unwrap_or(0)
    }

    /// Largest exponent of variable `i` (0 for the zero polynomial).
    pub fn max_exp(&self, i: usize) -> i32 {
        self.terms.keys().map(|e| e.get(i).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// Substitutes rational values for some variables; arity is preserved and
    /// substituted variables get exponent 0.
    pub fn specialize(&self, bindings: &[(usize, Q)]) -> Result<Self, AlgError> {
        for (i, x) in bindings {
            if *i >= self.nvars {
                return Err(AlgError::UnknownVariable(*i));
            }
            if x.is_zero() && self.min_exp(*i) < 0 {
                return Err(AlgError::DivisionByZero);
            }
        }
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut k = c.clone();
            for (i, x) in bindings {
                k *= q_pow(x, e[*i] as i64);
                e2[*i] = 0;
            }
            r.add_term(e2, k);
        }
        Ok(r)
    }

    /// Evaluates at a full point `(v, z1, ..)`.
    pub fn eval(&self, point: &[Q]) -> Result<Q, AlgError> {
        let bindings: Vec<(usize, Q)> =
            (0..self.nvars).map(|i| (i, point.get(i).cloned().unwrap_or_else(Q::zero))).collect();
        Ok(self.specialize(&bindings)?.constant_term())
    }

    /// Coefficients of `x_var^k` as polynomials in the other variables,
    /// after shifting so that the smallest exponent is zero. Returns
    /// `(shift, coefficients)` with `self = x^shift * sum_k c_k x^k`.
    pub fn by_var(&self, var: usize) -> (i32, Vec<LaurentPoly>) {
        let lo = self.min_exp(var);
        let hi = self.max_exp(var);
        let len = if self.is_zero() { 0 } else { (hi - lo + 1) as usize };
        let mut out = vec![Self::zero(self.nvars); len];
        for (e, c) in &self.terms {
            let k = (e[var] - lo) as usize;
            let mut e2 = e.clone();
            e2[var] = 0;
            out[k].add_term(e2, c.clone());
        }
        (lo, out)
    }

    /// Human-readable form such as `1 - q^-1 z^2`; `v^{2k}` prints as `q^k`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let nvars = self.nvars;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let za: i32 = a.0.iter().skip(1).sum();
            let zb: i32 = b.0.iter().skip(1).sum();
            za.cmp(&zb)
                .then_with(|| a.0[1..].cmp(&b.0[1..]))
                .then_with(|| b.0.first().cmp(&a.0.first()))
        });
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let (name, k) = if i == 0 && k % 2 == 0 {
                    ("q".to_string(), k / 2)
                } else {
                    (var_name(i, nvars), k)
                };
                factors.push(if k == 1 { name } else { format!("{name}^{k}") });
            }
            if !mag.is_one() || factors.is_empty() {
                factors.insert(0, fmt_q(&mag));
            }
            out.push_str(&factors.join(" "));
        }
        out
    }
}

impl super::Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero(0)
    }
    fn one() -> Self {
        LaurentPoly::one(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LaurentPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        Some(LaurentPoly::monomial(c.recip(), e.iter().map(|x| -x).collect()))
    }
    fn from_q(x: &Q) -> Self {
        LaurentPoly::constant(x.clone(), 0)
    }
    fn eq_val(&self, o: &Self) -> bool {
        self == o
    }
}

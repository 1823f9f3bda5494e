use super::{var_name, AlgError, LaurentPoly, Q};
use num_traits::{One, Zero};
use std::fmt;

/// Fraction `num / den` of Laurent polynomials.
///
/// Representatives are not reduced; equality is cross-multiplication.
/// Construction normalizes cheaply: a monomial denominator is absorbed into
/// the numerator, and otherwise both parts are divided by the denominator
/// term of least `z`-degree so that this term becomes `1`.
#[derive(Clone, Debug)]
pub struct RatFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Binary field operation selector for [`rf_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with an explicit division-by-zero error.
pub fn rf_arith(a: &RatFrac, b: &RatFrac, op: ArithOp) -> Result<RatFrac, AlgError> {
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

impl RatFrac {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        RatFrac {
            num: p,
            den: LaurentPoly::one(n),
        }
    }

    pub fn from_q(x: Q) -> Self {
        Self::from_poly(LaurentPoly::constant(x, 0))
    }

    pub fn zero() -> Self {
        Self::from_q(Q::zero())
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::from_poly(LaurentPoly::v_pow(k, 1))
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars().max(self.den.nvars())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the polynomial when the denominator is `1`.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Q> {
        let d = self.den.as_constant()?;
        Some(self.num.as_constant()? / d)
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        let n = num.nvars().max(den.nvars());
        if num.is_zero() {
            return RatFrac {
                num: LaurentPoly::zero(n),
                den: LaurentPoly::one(n),
            };
        }
        if num == den {
            return RatFrac {
                num: LaurentPoly::one(n),
                den: LaurentPoly::one(n),
            };
        }
        let (exps, c) = lowest_term(&den);
        let inv_exps: Vec<i32> = exps.iter().map(|x| -x).collect();
        let k = c.recip();
        if exps.iter().all(|&x| x == 0) && c.is_one() {
            return RatFrac { num, den };
        }
        RatFrac {
            num: num.mul_monomial(&inv_exps, &k),
            den: den.mul_monomial(&inv_exps, &k),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        if o.den.is_one() {
            return Self::normalized(self.num.add(&o.num.mul(&self.den)), self.den.clone());
        }
        if self.den.is_one() {
            return Self::normalized(o.num.add(&self.num.mul(&o.den)), o.den.clone());
        }
        Self::normalized(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (mut n1, mut d1) = (self.num.clone(), self.den.clone());
        let (mut n2, mut d2) = (o.num.clone(), o.den.clone());
        let n = self.nvars().max(o.nvars());
        if n1 == d2 {
            n1 = LaurentPoly::one(n);
            d2 = LaurentPoly::one(n);
        }
        if n2 == d1 {
            n2 = LaurentPoly::one(n);
            d1 = LaurentPoly::one(n);
        }
        let num = mul_fast(&n1, &n2);
        let den = mul_fast(&d1, &d2);
        Self::normalized(num, den)
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self::normalized(self.num.scale(k), self.den.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Self, AlgError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Value equality by cross-multiplication.
    pub fn eq_val(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Substitutes rational values for some variables. Arity is implicit, so
    /// binding a variable beyond it is a no-op.
    pub fn specialize(&self, bindings: &[(usize, Q)]) -> Result<Self, AlgError> {
        let n = bindings.iter().map(|(i, _)| i + 1).fold(self.nvars(), usize::max);
        let me = self.padded(n);
        let num = me.num.specialize(bindings)?;
        let den = me.den.specialize(bindings).map_err(|_| vanishing(bindings, n))?;
        if den.is_zero() {
            return Err(vanishing(bindings, n));
        }
        Ok(Self::normalized(num, den))
    }

    /// Evaluates at a full point `(v, z1, ..)`.
    pub fn eval(&self, point: &[Q]) -> Result<Q, AlgError> {
        let n = self.nvars();
        let bindings: Vec<(usize, Q)> =
            (0..n).map(|i| (i, point.get(i).cloned().unwrap_or_else(Q::zero))).collect();
        self.specialize(&bindings)?
            .as_constant()
            .ok_or(AlgError::DivisionByZero)
    }

    /// Pads both parts to `n` variables.
    pub fn padded(&self, n: usize) -> Self {
        RatFrac {
            num: self.num.padded(n.max(self.num.nvars())),
            den: self.den.padded(n.max(self.den.nvars())),
        }
    }

    /// Human-readable form `(num)/(den)`, or just `num` when `den = 1`.
    pub fn display(&self) -> String {
        if self.den.is_one() {
            return self.num.display();
        }
        let n = self.nvars();
        let num = self.num.padded(n.max(self.num.nvars()));
        let den = self.den.padded(n.max(self.den.nvars()));
        format!("({})/({})", num.display(), den.display())
    }
}

fn mul_fast(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else {
        a.mul(b)
    }
}

fn vanishing(bindings: &[(usize, Q)], nvars: usize) -> AlgError {
    let binding = bindings
        .iter()
        .map(|(i, x)| format!("{}={}", var_name(*i, nvars.max(i + 1)), super::fmt_q(x)))
        .collect::<Vec<_>>()
        .join(", ");
    AlgError::VanishingDenominator { binding }
}

/// Term of least total `z`-degree, ties broken by the exponent vector.
fn lowest_term(p: &LaurentPoly) -> (Vec<i32>, Q) {
    let t = p.sorted_terms();
    let (e, c) = t
        .into_iter()
        .min_by(|a, b| {
            let za: i32 = a.0.iter().skip(1).sum();
            let zb: i32 = b.0.iter().skip(1).sum();
            za.cmp(&zb).then_with(|| a.0[1.min(a.0.len())..].cmp(&b.0[1.min(b.0.len())..])).then_with(|| a.0.cmp(b.0))
        })
        .expect("nonzero polynomial");
    (e.clone(), c.clone())
}

impl PartialEq for RatFrac {
    fn eq(&self, o: &Self) -> bool {
        self.eq_val(o)
    }
}

impl fmt::Display for RatFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl From<LaurentPoly> for RatFrac {
    fn from(p: LaurentPoly) -> Self {
        RatFrac::from_poly(p)
    }
}

impl super::Scalar for RatFrac {
    fn zero() -> Self {
        RatFrac::zero()
    }
    fn one() -> Self {
        RatFrac::one()
    }
    fn is_zero(&self) -> bool {
        RatFrac::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFrac::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFrac::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFrac::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFrac::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFrac::inv(self).ok()
    }
    fn from_q(x: &Q) -> Self {
        RatFrac::from_q(x.clone())
    }
    fn eq_val(&self, o: &Self) -> bool {
        RatFrac::eq_val(self, o)
    }
}

use super::{fmt_q, parse_q, AlgError, LaurentPoly, RatFrac, Q};
use serde::{Deserialize, Serialize};

/// One term `num/den * x^exps`; integers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<i32>,
    pub num: String,
    pub den: String,
}

/// Polynomial as a list of terms in canonical exponent order.
pub type PolyJson = Vec<TermJson>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl LaurentPoly {
    pub fn to_json(&self) -> PolyJson {
        self.sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                exps: e.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    /// Decodes terms; `nvars` is taken from the terms, or used for an empty list.
    pub fn from_json(p: &PolyJson, nvars: usize) -> Result<Self, AlgError> {
        let n = p.first().map_or(nvars, |t| t.exps.len());
        let mut terms = Vec::with_capacity(p.len());
        for t in p {
            if t.exps.len() != n {
                return Err(AlgError::Parse("exponent arity mismatch".into()));
            }
            let c: Q = parse_q(&t.num)? / parse_q(&t.den)?;
            terms.push((t.exps.clone(), c));
        }
        Ok(LaurentPoly::from_terms(n, terms))
    }
}

impl RatFrac {
    /// Numerator and denominator share one exponent arity.
    pub fn to_json(&self) -> FracJson {
        let n = self.num().nvars().max(self.den().nvars());
        FracJson {
            num: self.num().padded(n).to_json(),
            den: self.den().padded(n).to_json(),
        }
    }

    pub fn from_json(f: &FracJson) -> Result<Self, AlgError> {
        let num = LaurentPoly::from_json(&f.num, 0)?;
        let den = LaurentPoly::from_json(&f.den, 0)?;
        RatFrac::new(num, den)
    }
}

/// Exact rational as `"n"` or `"n/d"`.
pub fn q_to_string(x: &Q) -> String {
    fmt_q(x)
}

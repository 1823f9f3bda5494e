//! One-shot computations, each producing a single JSON document.

use heckeforge::exactalg::{parse_q, q_to_string, RatFrac, Q};
use heckeforge::hecke::{
    spherical_idempotent, theta, tnor_basis, HeckeAlgebra, HeckeElt, HeckeEltJson, Levi, Sign,
};
use heckeforge::padic::{
    e_of, expected_rank1_series, iwasawa_zeta_check, ppow, rank1_series, unit_integral, unit_integral_expected,
    weil_gamma, AdditiveCharacter, PadicNum,
};
use heckeforge::psmod::{
    aubert_dual, c_closed, c_minus_rank1, default_v, induce, matched_d_function, probe_set, reducibility_scan,
    s_word_of_t_word, scan_grid, UnramChar, VirtualChar,
};
use heckeforge::weyl::{parse_word, AffineSystem, SystemKind};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    /// Malformed input; exit status 2.
    #[error("usage: {0}")]
    Usage(String),
    /// A well-formed request the library rejected; exit status 1.
    #[error("{code}: {message}")]
    Domain { code: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Usage(m) => json!({"error": {"code": "usage", "message": m}}),
            CliError::Domain { code, message } => json!({"error": {"code": code, "message": message}}),
        }
    }
}

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

fn domain(code: &'static str) -> impl Fn(&dyn std::fmt::Display) -> CliError {
    move |e| CliError::Domain { code, message: e.to_string() }
}

macro_rules! dom {
    ($code:literal) => {
        |e| domain($code)(&e)
    };
}

pub fn parse_sign(s: &str) -> Result<Sign, CliError> {
    Sign::parse(s).ok_or_else(|| usage(format!("sign must be plus or minus, got {s:?}")))
}

pub fn word(s: &str) -> Result<Vec<usize>, CliError> {
    parse_word(s).map_err(|e| usage(e.to_string()))
}

/// Comma-separated integers; the position of a bad entry is reported.
pub fn ints(s: &str) -> Result<Vec<i64>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, t)| t.trim().parse::<i64>().map_err(|_| usage(format!("entry {} ({t:?}) is not an integer", i + 1))))
        .collect()
}

pub fn rationals(s: &str) -> Result<Vec<Q>, CliError> {
    s.split(',')
        .enumerate()
        .map(|(i, t)| parse_q(t.trim()).map_err(|_| usage(format!("entry {} ({t:?}) is not a rational", i + 1))))
        .collect()
}

// ---------------------------------------------------------------- weyl

pub fn system(kind: &str, n: usize) -> Result<AffineSystem, CliError> {
    let k = SystemKind::parse(kind).ok_or_else(|| usage(format!("unknown system {kind:?}")))?;
    Ok(AffineSystem::by_kind(k, n))
}

pub fn weyl_reduce(sys: &AffineSystem, w: &[usize]) -> Result<Value, CliError> {
    let x = sys.word_to_elt(w).map_err(dom!("weyl"))?;
    let r = sys.reduced_word(&x).map_err(dom!("weyl"))?;
    Ok(json!({"length": r.len(), "word": r}))
}

pub fn weyl_flips(sys: &AffineSystem, w: &[usize]) -> Result<Value, CliError> {
    let x = sys.word_to_elt(w).map_err(dom!("weyl"))?;
    Ok(json!({"flips": x.fin.flip_count(), "length": sys.length(&x)}))
}

// ---------------------------------------------------------------- hecke

pub fn algebra_id(n: usize, sign: Sign) -> String {
    format!("H{}_{n}", sign.symbol())
}

/// A `T_w` word or an element in JSON form.
pub fn hecke_elt(g: &HeckeAlgebra<RatFrac>, s: &str) -> Result<HeckeElt<RatFrac>, CliError> {
    let t = s.trim();
    if t.starts_with('{') {
        let j: HeckeEltJson = serde_json::from_str(t).map_err(|e| usage(format!("element JSON: {e}")))?;
        return HeckeElt::from_json(&j).ok_or_else(|| usage("element JSON has invalid terms"));
    }
    let x = g.sys.word_to_elt(&word(t)?).map_err(dom!("weyl"))?;
    Ok(HeckeElt::basis(x))
}

fn elt_json(h: &HeckeElt<RatFrac>, id: &str) -> Value {
    serde_json::to_value(h.to_json(id)).expect("element serializes")
}

pub fn hecke_mul(n: usize, sign: Sign, a: &str, b: &str) -> Result<Value, CliError> {
    let g = HeckeAlgebra::symbolic(n, sign);
    let prod = g.mul(&hecke_elt(&g, a)?, &hecke_elt(&g, b)?);
    Ok(elt_json(&prod, &algebra_id(n, sign)))
}

pub fn hecke_invert(n: usize, sign: Sign, a: &str) -> Result<Value, CliError> {
    let g = HeckeAlgebra::symbolic(n, sign);
    let x = g.sys.word_to_elt(&word(a)?).map_err(dom!("weyl"))?;
    Ok(elt_json(&g.invert_basis(&x), &algebra_id(n, sign)))
}

pub fn hecke_idempotent(n: usize, sign: Sign) -> Result<Value, CliError> {
    let g = HeckeAlgebra::symbolic(n, sign);
    let e = spherical_idempotent(&g).map_err(dom!("hecke"))?;
    Ok(elt_json(&e, &algebra_id(n, sign)))
}

pub fn hecke_theta(n: usize, sign: Sign, lambda: &[i64]) -> Result<Value, CliError> {
    if lambda.len() != n {
        return Err(usage(format!("lambda needs {n} entries")));
    }
    let g = HeckeAlgebra::symbolic(n, sign);
    let t = theta(&g, lambda).map_err(dom!("hecke"))?;
    Ok(elt_json(&t, &algebra_id(n, sign)))
}

/// `t_nor` of a basis element `T_w` of the standard Levi with finite labels `levi`.
pub fn hecke_tnor(n: usize, sign: Sign, levi: &[usize], w: &[usize]) -> Result<Value, CliError> {
    let g = HeckeAlgebra::symbolic(n, sign);
    let l = Levi::standard(&g, levi).map_err(dom!("hecke"))?;
    let x = g.sys.word_to_elt(w).map_err(dom!("weyl"))?;
    let t = tnor_basis(&g, &l, &x).map_err(dom!("hecke"))?;
    Ok(elt_json(&t, &algebra_id(n, sign)))
}

// ---------------------------------------------------------------- psmod

/// `t1,t2` is a word in the backward generators; bare labels are `s` labels.
pub fn cfun_word(sign: Sign, n: usize, s: &str) -> Result<Vec<usize>, CliError> {
    let t = s.trim();
    if t.contains('t') {
        let labels = t
            .split(',')
            .enumerate()
            .map(|(i, x)| {
                x.trim()
                    .strip_prefix('t')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| usage(format!("entry {} ({x:?}) is not of the form tK", i + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(s_word_of_t_word(sign, n, &labels));
    }
    word(t)
}

fn cprime(sign: Sign) -> Result<Option<RatFrac>, CliError> {
    match sign {
        Sign::Plus => Ok(None),
        Sign::Minus => Ok(Some(c_minus_rank1().map_err(dom!("psmod"))?.c)),
    }
}

pub fn psmod_cfun(n: usize, sign: Sign, w: &str) -> Result<Value, CliError> {
    let s = cfun_word(sign, n, w)?;
    let cp = cprime(sign)?;
    let c = c_closed(n, sign, &s, cp.as_ref()).map_err(dom!("psmod"))?;
    Ok(json!({"c": c.to_string()}))
}

pub fn psmod_dfun(n: usize, sign: Sign, w: &str, e: i64, alternate: bool) -> Result<Value, CliError> {
    let s = cfun_word(sign, n, w)?;
    let cp = cprime(sign)?;
    let d = matched_d_function(n, sign, &s, e, alternate, cp.as_ref()).map_err(dom!("psmod"))?;
    Ok(json!({"d": d.to_string()}))
}

fn module_alg(n: usize, sign: Sign) -> Result<HeckeAlgebra<Q>, CliError> {
    if sign == Sign::Minus && n < 2 {
        return Err(usage("module operations for the odd algebra need n >= 2"));
    }
    Ok(HeckeAlgebra::specialized(n, sign, default_v()))
}

fn chi_of(g: &HeckeAlgebra<Q>, chi: &[Q]) -> Result<UnramChar, CliError> {
    let mut z = vec![Q::from_integer(1.into()); g.n()];
    if chi.len() != g.sys.coords.len() {
        return Err(usage(format!("chi needs {} entries", g.sys.coords.len())));
    }
    for (&c, x) in g.sys.coords.iter().zip(chi) {
        z[c] = x.clone();
    }
    UnramChar::new(z).map_err(dom!("psmod"))
}

pub fn psmod_induce(n: usize, sign: Sign, chi: &[Q]) -> Result<Value, CliError> {
    let g = module_alg(n, sign)?;
    let m = induce(&g, &chi_of(&g, chi)?).map_err(dom!("psmod"))?;
    Ok(serde_json::to_value(m.to_json(&algebra_id(n, sign))).expect("module serializes"))
}

pub fn psmod_aubert(n: usize, sign: Sign, chi: &[Q]) -> Result<Value, CliError> {
    let g = module_alg(n, sign)?;
    let m = induce(&g, &chi_of(&g, chi)?).map_err(dom!("psmod"))?;
    let v = VirtualChar::of(m);
    let d = aubert_dual(&v).map_err(dom!("psmod"))?;
    let dd = aubert_dual(&d).map_err(dom!("psmod"))?;
    let probes = probe_set(&g, 6);
    let inv = dd.agrees_on(&v, &probes).map_err(dom!("psmod"))?;
    let terms: Vec<Value> = d.terms.iter().map(|(k, m)| json!({"coeff": k, "dim": m.dim()})).collect();
    Ok(json!({"degree": d.degree(), "terms": terms, "probes": probes.len(), "involution": inv}))
}

#[derive(Serialize)]
struct ScanPointJson {
    z: String,
    dims: ScanDims,
    reducible: bool,
}

/// `submodule` is the dimension of a proper invariant subspace, if found.
#[derive(Serialize)]
struct ScanDims {
    module: usize,
    submodule: Option<usize>,
    endomorphisms: usize,
}

pub fn psmod_scan(n: usize, sign: Sign) -> Result<Value, CliError> {
    let g = module_alg(n, sign)?;
    if g.sys.coords.len() != 1 {
        return Err(usage("scan runs on rank-one families (n = 1 plus, n = 2 minus)"));
    }
    let pts = reducibility_scan(&g, &scan_grid(&default_v())).map_err(dom!("psmod"))?;
    let dim = g.sys.subgroup(&g.sys.finite_labels(), 1 << 12).map_err(dom!("weyl"))?.len();
    let points: Vec<ScanPointJson> = pts
        .iter()
        .map(|p| ScanPointJson {
            z: q_to_string(&p.z),
            dims: ScanDims { module: dim, submodule: p.witness, endomorphisms: p.end_dim },
            reducible: p.reducible,
        })
        .collect();
    Ok(json!({"family": format!("{} q={}", algebra_id(n, sign), q_to_string(&(default_v() * default_v()))), "points": points}))
}

// ---------------------------------------------------------------- padic

#[derive(Serialize)]
pub struct Complexj {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Complexj {
    fn from(z: Complex64) -> Self {
        Complexj { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
pub struct PadicReport {
    pub p: u64,
    pub op: String,
    pub inputs: Value,
    pub value: Complexj,
    pub expected: Value,
    pub abs_err: f64,
    pub pass: bool,
}

fn padic_num(p: u64, s: &str, prec: u32) -> Result<PadicNum, CliError> {
    let x = parse_q(s.trim()).map_err(|_| usage(format!("{s:?} is not a rational")))?;
    PadicNum::from_q(p, &x, prec).map_err(dom!("padic"))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

pub fn padic_gamma(p: u64, prec: u32, a: &str) -> Result<Value, CliError> {
    let psi = AdditiveCharacter::standard(p, prec);
    let x = padic_num(p, a, prec)?;
    let g = weil_gamma(&psi, &x).map_err(dom!("padic"))?;
    let err = (g.norm() - 1.0).abs().max((g.powi(8) - 1.0).norm());
    Ok(to_value(&PadicReport {
        p,
        op: "gamma".into(),
        inputs: json!({"a": a, "precision": prec}),
        value: g.into(),
        expected: json!("eighth root of unity"),
        abs_err: err,
        pass: err < 1e-8,
    }))
}

pub fn padic_unit_integral(p: u64, prec: u32, k: i64) -> Result<Value, CliError> {
    let psi = AdditiveCharacter::standard(p, prec);
    let z = unit_integral(&psi, k).map_err(dom!("padic"))?;
    let e = unit_integral_expected(p, k);
    let err = (z - Complex64::new(e, 0.0)).norm();
    Ok(to_value(&PadicReport {
        p,
        op: "unit-integral".into(),
        inputs: json!({"k": k, "precision": prec}),
        value: z.into(),
        expected: json!(e),
        abs_err: err,
        pass: err < 1e-9,
    }))
}

/// One report per coefficient `r_0..r_kmax`, with `phi = 1` on `o / 2o`.
pub fn padic_rank1(p: u64, kmax: usize) -> Result<Value, CliError> {
    let phi = vec![Complex64::new(1.0, 0.0); ppow(p, e_of(p) as u32) as usize];
    let got = rank1_series(p, kmax, &phi, 1).map_err(dom!("padic"))?;
    let exp = expected_rank1_series(p, kmax).map_err(dom!("padic"))?;
    let reports: Vec<Value> = got
        .iter()
        .zip(&exp)
        .enumerate()
        .map(|(k, (g, e))| {
            let err = (g - Complex64::new(*e, 0.0)).norm();
            to_value(&PadicReport {
                p,
                op: "rank1".into(),
                inputs: json!({"k": k, "kmax": kmax}),
                value: (*g).into(),
                expected: json!(e),
                abs_err: err,
                pass: err < 1e-8,
            })
        })
        .collect();
    Ok(Value::Array(reports))
}

pub fn padic_zeta(p: u64, prec: u32, t: &str) -> Result<Value, CliError> {
    let x = padic_num(p, t, prec)?;
    let r = match x.val {
        Some(v) if v < 0 => (-v) as u32 + 1,
        _ => return Err(usage("t must have negative valuation")),
    };
    let z = iwasawa_zeta_check(&x, r, 1e-6).map_err(dom!("padic"))?;
    Ok(to_value(&PadicReport {
        p,
        op: "zeta".into(),
        inputs: json!({"t": t, "precision": prec}),
        value: z.zeta.into(),
        expected: to_value(&Complexj::from(z.gamma)),
        abs_err: z.abs_err,
        pass: z.pass,
    }))
}

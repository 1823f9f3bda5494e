use heckeforge::hecke::Sign;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "json" => Some(Format::Json),
            "text" => Some(Format::Text),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub sign: Sign,
    pub p: u64,
    /// Working p-adic precision `N`.
    pub precision: u32,
    /// `val_p(2)`; derived from `p` unless given.
    pub e: Option<i64>,
    pub seed: u64,
    pub suite: String,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 1,
            sign: Sign::Plus,
            p: 3,
            precision: 20,
            e: None,
            seed: 0,
            suite: "all".into(),
            out: None,
            format: Format::Json,
        }
    }
}

pub const SUITES: [&str; 6] = ["all", "coxeter", "hecke", "psmod", "padic", "acceptance"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid {key}: {msg}")]
    Invalid { key: String, msg: String },
    #[error("cannot read {0}")]
    Io(String),
}

fn invalid(key: &str, msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid { key: key.into(), msg: msg.into() }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_kv(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(ConfigError::Syntax { line: i + 1, msg: format!("expected key = value, got {line:?}") });
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

impl RunConfig {
    /// Applies one setting; used for both the file and the flags, flags last.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let num = |v: &str| v.parse::<u64>().map_err(|_| invalid(key, format!("not a number: {v:?}")));
        match key {
            "n" => self.n = num(value)? as usize,
            "sign" => self.sign = Sign::parse(value).ok_or_else(|| invalid(key, "expected plus or minus"))?,
            "p" => self.p = num(value)?,
            "precision" => self.precision = num(value)? as u32,
            "e" => self.e = Some(num(value)? as i64),
            "seed" => self.seed = num(value)?,
            "suite" => self.suite = value.to_string(),
            "out" => self.out = Some(PathBuf::from(value)),
            "format" => self.format = Format::parse(value).ok_or_else(|| invalid(key, "expected json or text"))?,
            _ => return Err(invalid(key, "unknown key")),
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|_| ConfigError::Io(path.display().to_string()))?;
        for (k, v) in parse_kv(&text)? {
            self.set(&k, &v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(1..=3).contains(&self.n) {
            return Err(invalid("n", "supported ranks are 1..=3"));
        }
        if !is_prime(self.p) {
            return Err(invalid("p", format!("{} is not prime", self.p)));
        }
        if self.precision < 8 {
            return Err(invalid("precision", "N must be at least 8"));
        }
        let max = heckeforge::padic::max_precision(self.p);
        if self.precision > max {
            return Err(invalid("precision", format!("at most {max} for p = {}", self.p)));
        }
        if let Some(e) = self.e {
            if e != heckeforge::padic::e_of(self.p) {
                return Err(invalid("e", format!("val_{}(2) is {}", self.p, heckeforge::padic::e_of(self.p))));
            }
        }
        if !SUITES.contains(&self.suite.as_str()) {
            return Err(invalid("suite", format!("expected one of {}", SUITES.join(", "))));
        }
        Ok(())
    }

    /// Module computations for the odd algebra need `n >= 2`.
    pub fn module_rank(&self) -> usize {
        if self.sign == Sign::Minus {
            self.n.max(2)
        } else {
            self.n
        }
    }
}

use clap::{Args, Parser, Subcommand};
use heckeforge_cli::compute::{self, CliError};
use heckeforge_cli::{run_suite, Format, RunConfig};
use serde_json::Value;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "heckeforge", version, about = "Affine Hecke algebras of type C, principal series and a p-adic oracle")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and write a report.
    Run(RunArgs),
    /// Affine Weyl group words.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Hecke algebra elements.
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Principal-series modules and c-functions.
    #[command(subcommand)]
    Psmod(PsmodCmd),
    /// p-adic numeric oracle.
    #[command(subcommand)]
    Padic(PadicCmd),
}

#[derive(Args)]
struct RunArgs {
    /// key = value file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    sign: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    precision: Option<u32>,
    #[arg(long)]
    e: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    /// all, coxeter, hecke, psmod, padic or acceptance.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or text.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct Alg {
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value = "plus")]
    sign: String,
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Reduced word of the product of a word.
    Reduce {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// s, sprime, t or tprime.
        #[arg(long, default_value = "s")]
        system: String,
    },
    /// Flip count and length.
    Flips {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value = "t")]
        system: String,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Product of two elements (words or element JSON).
    Mul {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// File holding a JSON array of two elements.
        #[arg(long)]
        json_in: Option<PathBuf>,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Inverse of a basis element.
    Invert {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// The spherical idempotent.
    Idempotent {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Bernstein-type element of a cocharacter.
    Theta {
        #[command(flatten)]
        alg: Alg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Normalized Levi embedding of a basis element.
    Tnor {
        #[command(flatten)]
        alg: Alg,
        /// Finite labels spanning the Levi.
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PsmodCmd {
    /// Principal-series module of a character.
    Induce {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        chi: String,
    },
    /// Closed-form c-function of a word (`t1,t2` or `s` labels).
    Cfun {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        w: String,
    },
    /// Matched d-function.
    Dfun {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        w: String,
        #[arg(long, default_value_t = 0)]
        e: i64,
        #[arg(long)]
        alternate: bool,
    },
    /// Aubert dual of a principal series and the involution check.
    Aubert {
        #[command(flatten)]
        alg: Alg,
        #[arg(long)]
        chi: String,
    },
    /// Reducibility scan of a rank-one family.
    Scan {
        #[command(flatten)]
        alg: Alg,
    },
}

#[derive(Args)]
struct PadicArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 20)]
    precision: u32,
    /// Accepted for symmetry; output is always JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum PadicCmd {
    Gamma {
        #[command(flatten)]
        pa: PadicArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    UnitIntegral {
        #[command(flatten)]
        pa: PadicArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    Rank1 {
        #[command(flatten)]
        pa: PadicArgs,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    Zeta {
        #[command(flatten)]
        pa: PadicArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

fn config(a: &RunArgs) -> Result<RunConfig, CliError> {
    let bad = |e: heckeforge_cli::config::ConfigError| CliError::Usage(e.to_string());
    let mut cfg = RunConfig::default();
    if let Some(path) = &a.config {
        cfg.load_file(path).map_err(bad)?;
    }
    let flags = [
        ("n", a.n.map(|x| x.to_string())),
        ("sign", a.sign.clone()),
        ("p", a.p.map(|x| x.to_string())),
        ("precision", a.precision.map(|x| x.to_string())),
        ("e", a.e.map(|x| x.to_string())),
        ("seed", a.seed.map(|x| x.to_string())),
        ("suite", a.suite.clone()),
        ("format", a.format.clone()),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, &v).map_err(bad)?;
        }
    }
    if let Some(out) = &a.out {
        cfg.out = Some(out.clone());
    }
    cfg.validate().map_err(bad)?;
    Ok(cfg)
}

fn run(a: &RunArgs) -> Result<bool, CliError> {
    let cfg = config(a)?;
    let report = run_suite(&cfg);
    let body = match cfg.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &cfg.out {
        Some(path) => {
            let io = |e: std::io::Error| CliError::Domain { code: "io", message: e.to_string() };
            std::fs::write(path, report.to_json()).map_err(io)?;
            std::fs::write(path.with_extension("txt"), report.to_text()).map_err(io)?;
            print!("{body}");
        }
        None => print!("{body}"),
    }
    Ok(report.ok())
}

fn write_out(v: &Value, path: &Option<PathBuf>) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, serde_json::to_string_pretty(v).expect("json")).map_err(|e| CliError::Domain { code: "io", message: e.to_string() })?;
    }
    Ok(())
}

fn hecke_pair(a: &Option<String>, b: &Option<String>, json_in: &Option<PathBuf>) -> Result<(String, String), CliError> {
    if let Some(path) = json_in {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let v: Vec<Value> = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("json-in: {e}")))?;
        if v.len() != 2 {
            return Err(CliError::Usage("json-in must hold exactly two elements".into()));
        }
        return Ok((v[0].to_string(), v[1].to_string()));
    }
    match (a, b) {
        (Some(a), Some(b)) => Ok((a.clone(), b.clone())),
        _ => Err(CliError::Usage("give --a and --b, or --json-in".into())),
    }
}

fn compute(cmd: &Cmd) -> Result<Value, CliError> {
    use compute::*;
    Ok(match cmd {
        Cmd::Run(_) => unreachable!("handled by run"),
        Cmd::Weyl(WeylCmd::Reduce { word: w, n, system: s }) => weyl_reduce(&system(s, *n)?, &word(w)?)?,
        Cmd::Weyl(WeylCmd::Flips { word: w, n, system: s }) => weyl_flips(&system(s, *n)?, &word(w)?)?,
        Cmd::Hecke(h) => {
            let (v, out) = match h {
                HeckeCmd::Mul { alg, a, b, json_in, json_out } => {
                    let (a, b) = hecke_pair(a, b, json_in)?;
                    (hecke_mul(alg.n, parse_sign(&alg.sign)?, &a, &b)?, json_out)
                }
                HeckeCmd::Invert { alg, a, json_out } => (hecke_invert(alg.n, parse_sign(&alg.sign)?, a)?, json_out),
                HeckeCmd::Idempotent { alg, json_out } => (hecke_idempotent(alg.n, parse_sign(&alg.sign)?)?, json_out),
                HeckeCmd::Theta { alg, lambda, json_out } => (hecke_theta(alg.n, parse_sign(&alg.sign)?, &ints(lambda)?)?, json_out),
                HeckeCmd::Tnor { alg, levi, word: w, json_out } => {
                    (hecke_tnor(alg.n, parse_sign(&alg.sign)?, &word(levi)?, &word(w)?)?, json_out)
                }
            };
            write_out(&v, out)?;
            v
        }
        Cmd::Psmod(PsmodCmd::Induce { alg, chi }) => psmod_induce(alg.n, parse_sign(&alg.sign)?, &rationals(chi)?)?,
        Cmd::Psmod(PsmodCmd::Cfun { alg, w }) => psmod_cfun(alg.n, parse_sign(&alg.sign)?, w)?,
        Cmd::Psmod(PsmodCmd::Dfun { alg, w, e, alternate }) => psmod_dfun(alg.n, parse_sign(&alg.sign)?, w, *e, *alternate)?,
        Cmd::Psmod(PsmodCmd::Aubert { alg, chi }) => psmod_aubert(alg.n, parse_sign(&alg.sign)?, &rationals(chi)?)?,
        Cmd::Psmod(PsmodCmd::Scan { alg }) => psmod_scan(alg.n, parse_sign(&alg.sign)?)?,
        Cmd::Padic(pc) => {
            let pa = match pc {
                PadicCmd::Gamma { pa, .. } | PadicCmd::UnitIntegral { pa, .. } | PadicCmd::Rank1 { pa, .. } | PadicCmd::Zeta { pa, .. } => pa,
            };
            let mut cfg = RunConfig { p: pa.p, precision: pa.precision, ..RunConfig::default() };
            cfg.suite = "padic".into();
            cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            match pc {
                PadicCmd::Gamma { a, .. } => padic_gamma(pa.p, pa.precision, a)?,
                PadicCmd::UnitIntegral { k, .. } => padic_unit_integral(pa.p, pa.precision, *k)?,
                PadicCmd::Rank1 { kmax, .. } => padic_rank1(pa.p, *kmax)?,
                PadicCmd::Zeta { t, .. } => padic_zeta(pa.p, pa.precision, t)?,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::Run(a) = &cli.cmd {
        return match run(a) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("{}", e.to_json());
                ExitCode::from(e.exit_code() as u8)
            }
        };
    }
    match compute(&cli.cmd) {
        Ok(v) => {
            let failed = matches!(&v, Value::Object(m) if m.get("pass") == Some(&Value::Bool(false)))
                || matches!(&v, Value::Array(a) if a.iter().any(|r| r.get("pass") == Some(&Value::Bool(false))));
            println!("{v}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

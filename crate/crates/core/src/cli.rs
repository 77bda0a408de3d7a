//! The `enritch` command line: file ingestion, dispatch and JSON reports.
//!
//! Every command prints one [`RunReport`] to stdout and maps its outcome to
//! an exit code: 0 pass, 1 check failed, 2 schema error, 3 precondition
//! error, 4 bound refusal.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{de::DeserializeOwned, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::diagonal::DiagonalQuantaloid;
use crate::error::{Error, Result};
use crate::hull::{run_suite, Suite, Typing};
use crate::parmet::{
    dense_isometry_check, family_inadmissible_pair, hyperconvex_family_check, sigma, tight_defect, tighten_sweep,
    HyperfamilyFile, ParMetSpace, RadiusFile, SpaceFile,
};
use crate::qcat::FunctorFile;
use crate::quantale::{builtin, check_quantale_laws, FiniteQuantale, QuantaleFile, QuantaleTables, BUILTIN_NAMES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "enritch", version, about = "Tight spans and injective hulls of enriched categories")]
pub struct Cli {
    /// Add wall-clock milliseconds to the report (makes it run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite quantale tables.
    #[command(subcommand)]
    Quantale(QuantaleCmd),
    /// Partial metric tight spans.
    #[command(subcommand)]
    Hull(HullCmd),
    /// Exhaustive checks over all small symmetric categories.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum QuantaleCmd {
    /// Checks every law exhaustively.
    Check { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum HullCmd {
    /// Is the radius function tight?
    Member {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        radius: PathBuf,
    },
    /// Tightens an ambient radius function.
    Tighten {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        radius: PathBuf,
        /// Sweep order as comma-separated point names.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        /// Where to write the tightened radius function.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance between two tight functions.
    Sigma {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        mu: PathBuf,
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Is an isometric map dense?
    Dense {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        codomain: PathBuf,
        /// `{"map": {name: name}}`.
        #[arg(long)]
        map: PathBuf,
    },
    /// Looks for a common point of a family of balls.
    Hyperfamily {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        family: PathBuf,
        /// Require the witness to have self-distance `r`.
        #[arg(long)]
        strict_typing: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteName {
    T36,
    L43,
    T44,
    T54,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: SuiteName,
    /// A quantale file or a bundled name such as `boolean`.
    #[arg(long)]
    pub quantale: String,
    #[arg(long)]
    pub bound: usize,
    /// Witness objects must match the column type (the default).
    #[arg(long, conflicts_with = "lax_typing")]
    pub strict_typing: bool,
    /// Compare columns elementwise without matching types.
    #[arg(long)]
    pub lax_typing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub witnesses: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// A finished command: its report and exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: RunReport,
    pub code: i32,
}

struct Inputs(Vec<InputDigest>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let hex = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
        self.0.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex,
        });
        String::from_utf8(bytes).map_err(|_| Error::Schema(format!("{} is not UTF-8", path.display())))
    }

    fn json<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T> {
        let text = self.read(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {}", path.display(), Error::from(e))))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Schema(_) | Error::Io(_) => EXIT_SCHEMA,
        Error::BoundExceeded(_) => EXIT_BOUND,
        Error::Invariant(_) => EXIT_FAIL,
        Error::Precondition(_)
        | Error::Unsupported(_)
        | Error::ObjectMismatch(_)
        | Error::ShapeMismatch(_)
        | Error::InstanceMismatch => EXIT_PRECONDITION,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Schema(_) => "schema",
        Error::Io(_) => "io",
        Error::BoundExceeded(_) => "bound",
        Error::Invariant(_) => "invariant",
        _ => "precondition",
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut inputs = Inputs(Vec::new());
    let name = command_name(&cli.command);
    let (result, witnesses, code) = match dispatch(&cli.command, &mut inputs) {
        Ok(r) => r,
        Err(e) => (
            json!({"status": "error", "kind": error_kind(&e), "message": e.to_string()}),
            Value::Null,
            exit_code(&e),
        ),
    };
    Outcome {
        report: RunReport {
            command: name,
            inputs: inputs.0,
            result,
            witnesses,
            timing_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
        },
        code,
    }
}

/// Parses `args`, runs, prints the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_SCHEMA } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let out = run(&cli);
    let text = serde_json::to_string_pretty(&out.report).expect("report serializes");
    // a closed stdout is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    out.code
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Quantale(QuantaleCmd::Check { .. }) => "quantale check".into(),
        Command::Hull(h) => format!(
            "hull {}",
            match h {
                HullCmd::Member { .. } => "member",
                HullCmd::Tighten { .. } => "tighten",
                HullCmd::Sigma { .. } => "sigma",
                HullCmd::Dense { .. } => "dense",
                HullCmd::Hyperfamily { .. } => "hyperfamily",
            }
        ),
        Command::Verify(v) => format!("verify {}", suite_of(v.suite).name()),
    }
}

fn suite_of(s: SuiteName) -> Suite {
    match s {
        SuiteName::T36 => Suite::Injectivity,
        SuiteName::L43 => Suite::TightSpanHypercomplete,
        SuiteName::T44 => Suite::InjectiveHull,
        SuiteName::T54 => Suite::DenseEssential,
    }
}

fn verdict(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

type Dispatched = (Value, Value, i32);

fn dispatch(c: &Command, inputs: &mut Inputs) -> Result<Dispatched> {
    match c {
        Command::Quantale(QuantaleCmd::Check { file }) => quantale_check(file, inputs),
        Command::Hull(h) => hull(h, inputs),
        Command::Verify(v) => verify(v, inputs),
    }
}

fn quantale_check(file: &Path, inputs: &mut Inputs) -> Result<Dispatched> {
    let qf: QuantaleFile = inputs.json(file)?;
    let tables = QuantaleTables::from_file(&qf)?;
    let report = check_quantale_laws(&tables);
    let pass = report.all_passed();
    let failing: Vec<_> = report.laws.iter().filter(|l| l.witness.is_some()).collect();
    Ok((
        json!({"status": status(pass), "elements": tables.len(), "laws": report.laws}),
        if failing.is_empty() { Value::Null } else { serde_json::to_value(failing)? },
        verdict(pass),
    ))
}

fn load_quantale(source: &str, inputs: &mut Inputs) -> Result<FiniteQuantale> {
    let path = Path::new(source);
    if path.exists() {
        let qf: QuantaleFile = inputs.json(path)?;
        FiniteQuantale::from_file(&qf)
    } else if BUILTIN_NAMES.contains(&source) || source.starts_with("lukasiewicz") || source.starts_with("nilpotent-minimum") {
        builtin(source)
    } else {
        Err(Error::Io(format!("{source}: no such file or bundled quantale")))
    }
}

fn workers() -> Result<usize> {
    match std::env::var("ENRITCH_WORKERS") {
        Err(_) => Ok(1),
        Ok(s) => s
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Schema(format!("ENRITCH_WORKERS must be a positive integer, got {s:?}"))),
    }
}

fn verify(v: &VerifyArgs, inputs: &mut Inputs) -> Result<Dispatched> {
    let q = load_quantale(&v.quantale, inputs)?;
    let typing = if v.lax_typing { Typing::Lax } else { Typing::Strict };
    let d = DiagonalQuantaloid::new(q);
    let out = run_suite(&d, suite_of(v.suite), v.bound, typing, workers()?)?;
    let pass = out.passed();
    let witness = out.first_counterexample.clone().unwrap_or(Value::Null);
    let mut result = serde_json::to_value(&out)?;
    if let Value::Object(m) = &mut result {
        m.remove("first_counterexample");
        m.insert("status".into(), json!(status(pass)));
    }
    Ok((result, witness, verdict(pass)))
}

fn space(path: &Path, inputs: &mut Inputs) -> Result<ParMetSpace> {
    inputs.json::<SpaceFile>(path)?.load()
}

fn hull(h: &HullCmd, inputs: &mut Inputs) -> Result<Dispatched> {
    match h {
        HullCmd::Member { space: s, radius } => {
            let m = space(s, inputs)?;
            let mu = inputs.json::<RadiusFile>(radius)?.load(&m)?;
            let defect = tight_defect(&m, &mu)?;
            let witness = defect.map_or(Value::Null, |x| json!({"point": m.points()[x], "value": mu.values[x]}));
            Ok((json!({"status": status(defect.is_none()), "tight": defect.is_none()}), witness, verdict(defect.is_none())))
        }
        HullCmd::Tighten {
            space: s,
            radius,
            order,
            out,
        } => {
            let m = space(s, inputs)?;
            let mu = inputs.json::<RadiusFile>(radius)?.load(&m)?;
            let perm: Vec<usize> = match order {
                None => (0..m.len()).collect(),
                Some(names) => names
                    .iter()
                    .map(|n| m.index_of(n).ok_or_else(|| Error::Schema(format!("unknown point {n:?} in order"))))
                    .collect::<Result<_>>()?,
            };
            let sweep_space = m.reorder(&perm)?;
            let permuted = crate::parmet::RadiusFunction::new(
                mu.r.clone(),
                perm.iter().map(|&i| mu.values[i].clone()).collect(),
            );
            let t = tighten_sweep(&sweep_space, &permuted)?;
            let file = RadiusFile::store(&sweep_space, &t.function);
            if let Some(out) = out {
                let text = serde_json::to_string_pretty(&file)? + "\n";
                std::fs::write(out, text).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            }
            let order: Vec<&String> = perm.iter().map(|&i| &m.points()[i]).collect();
            Ok((
                json!({"status": "pass", "order": order, "sweeps": t.sweeps, "tightened": file}),
                Value::Null,
                EXIT_PASS,
            ))
        }
        HullCmd::Sigma { space: s, mu, lambda } => {
            let m = space(s, inputs)?;
            let a = inputs.json::<RadiusFile>(mu)?.load(&m)?;
            let b = inputs.json::<RadiusFile>(lambda)?.load(&m)?;
            let v = sigma(&m, &a, &b)?;
            Ok((json!({"status": "pass", "sigma": v}), Value::Null, EXIT_PASS))
        }
        HullCmd::Dense { domain, codomain, map } => {
            let x = space(domain, inputs)?;
            let y = space(codomain, inputs)?;
            let mf: FunctorFile = inputs.json(map)?;
            let f = mf.load(&x.to_category(), &y.to_category())?;
            let c = dense_isometry_check(&f, &x, &y)?;
            let witness = c.witness.as_ref().map_or(Value::Null, |(s, t)| json!({"y": s, "y'": t}));
            Ok((json!({"status": status(c.dense), "dense": c.dense}), witness, verdict(c.dense)))
        }
        HullCmd::Hyperfamily {
            space: s,
            family,
            strict_typing,
        } => {
            let m = space(s, inputs)?;
            let (r, fam) = inputs.json::<HyperfamilyFile>(family)?.load(&m)?;
            if let Some((i, j)) = family_inadmissible_pair(&m, &r, &fam)? {
                let (a, b) = (&m.points()[fam[i].0], &m.points()[fam[j].0]);
                return Ok((
                    json!({"status": "error", "kind": "precondition", "message": "family is not admissible"}),
                    json!({"pair": [a, b], "distance": m.alpha(fam[i].0, fam[j].0), "radii": [&fam[i].1, &fam[j].1]}),
                    EXIT_PRECONDITION,
                ));
            }
            let z = hyperconvex_family_check(&m, &r, &fam, *strict_typing)?;
            let witness = z.map_or(Value::Null, |z| json!({"point": m.points()[z]}));
            Ok((
                json!({"status": status(z.is_some()), "strict_typing": strict_typing, "found": z.is_some()}),
                witness,
                verdict(z.is_some()),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_command_lines() {
        for line in [
            "enritch quantale check q.json",
            "enritch hull member --space s.json --radius r.json",
            "enritch hull tighten --space s.json --radius r.json --order b,a --out o.json",
            "enritch hull sigma --space s.json --mu a.json --lambda b.json",
            "enritch hull dense --domain x.json --codomain y.json --map f.json",
            "enritch hull hyperfamily --space s.json --family f.json --strict-typing",
            "enritch verify t36 --quantale boolean --bound 3",
            "enritch verify t54 --quantale q.json --bound 2 --strict-typing",
        ] {
            Cli::try_parse_from(line.split(' ')).unwrap_or_else(|e| panic!("{line}: {e}"));
        }
        assert!(Cli::try_parse_from("enritch verify t99 --quantale boolean --bound 1".split(' ')).is_err());
        assert!(Cli::try_parse_from(
            "enritch verify t36 --quantale boolean --bound 1 --strict-typing --lax-typing".split(' ')
        )
        .is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::Schema(String::new())), EXIT_SCHEMA);
        assert_eq!(exit_code(&Error::Precondition(String::new())), EXIT_PRECONDITION);
        assert_eq!(exit_code(&Error::BoundExceeded(String::new())), EXIT_BOUND);
    }

    #[test]
    fn verify_builtin_without_files() {
        let cli = Cli::try_parse_from("enritch verify l43 --quantale lukasiewicz3 --bound 2".split(' ')).unwrap();
        let out = run(&cli);
        assert_eq!(out.code, EXIT_PASS);
        assert!(out.report.inputs.is_empty());
        assert_eq!(out.report.result["categories"], json!(18));
    }
}

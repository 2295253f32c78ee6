use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use superlie::algebra::block::MatrixRealization;
use superlie::algebra::serial::{from_json, to_json};
use superlie::decomp::{inputs, structure_report};
use superlie::exact::rank;
use superlie::families::square::square_identity;
use superlie::families::{build, FamilySpec, KTag};
use superlie::fock::spin::number_operator;
use superlie::fock::{
    check_car, check_unitary_representation, number_spectrum, spin_representation, tilde_tangent_representation,
    FockSpace, Representation, SpinVariant,
};
use superlie::unitar::unitarity_report;
use superlie::{Error, Parity, SuperAlgebra};

const VERSION: &str = env!("CARGO_PKG_VERSION");
const SQUARE_SAMPLES: usize = 200;

#[derive(Parser)]
#[command(name = "superdecomp", version, about = "Exact tools for compact and unitary Lie superalgebras")]
struct Cli {
    /// Seed for every pseudorandom choice.
    #[arg(long, global = true, env = "SUPERDECOMP_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member, verify it and write it as JSON.
    Construct {
        #[arg(long, required_unless_present = "named")]
        family: Option<String>,
        #[arg(long, default_value = "")]
        params: String,
        /// One of the composite inputs instead of a family.
        #[arg(long, conflicts_with = "family")]
        named: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one check on an algebra file.
    Check {
        kind: CheckKind,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose into ideals.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The five necessary conditions for unitarity.
    Unitarity {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Fock representation of the real spin algebra.
    Spinrep {
        #[arg(long)]
        dim: usize,
        /// Use the extension by the number operator.
        #[arg(long)]
        hat: bool,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Fock representation of the extended tangent algebra.
    TangentRep {
        #[arg(long)]
        k: String,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Jacobi,
    Killing,
    Center,
    EqSquare,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidParameters(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

/// JSON written, and whether every check in it held.
struct Outcome {
    value: Value,
    ok: bool,
}

fn with_header<T: Serialize>(t: &T, seed: u64) -> Value {
    let mut v = serde_json::to_value(t).expect("reports serialize");
    if let Value::Object(m) = &mut v {
        m.insert("version".into(), json!(VERSION));
        m.insert("seed".into(), json!(seed));
    }
    v
}

fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| Failure::Usage(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp", name.to_string_lossy()));
    let io = |e: std::io::Error| Failure::Usage(format!("{}: {e}", path.display()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("json") + "\n";
    match out {
        Some(p) => write_atomic(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<(SuperAlgebra, Option<MatrixRealization>), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn construct(
    family: Option<String>,
    params: &str,
    named: Option<String>,
    out: &Path,
    seed: u64,
) -> Result<Outcome, Failure> {
    let (g, real, source) = match named {
        Some(name) => (inputs::named(&name)?, None, json!({"named": name})),
        None => {
            let tag = family.expect("clap requires --family or --named");
            let spec = FamilySpec::parse(&tag, params)?;
            let built = build(spec)?;
            (built.algebra, built.realization, json!({"family": tag, "params": params}))
        }
    };
    g.verify()?;
    write_atomic(out, &(to_json(&g, real.as_ref()) + "\n"))?;
    let value = with_header(
        &json!({
            "algebra": g.name(),
            "source": source,
            "dims": [g.d0(), g.d1()],
            "verified": true,
            "out": out.display().to_string(),
        }),
        seed,
    );
    Ok(Outcome { value, ok: true })
}

fn check(kind: CheckKind, file: &Path, seed: u64) -> Result<Outcome, Failure> {
    let (g, real) = load(file)?;
    let (body, ok) = match kind {
        CheckKind::Jacobi => match g.verify() {
            Ok(()) => (json!({"check": "jacobi", "ok": true}), true),
            Err(e) => (json!({"check": "jacobi", "ok": false, "violation": e.to_string()}), false),
        },
        CheckKind::Killing => {
            let r = rank(&g.killing_form());
            (
                json!({"check": "killing", "dim": g.dim(), "rank": r, "vanishes": r == 0, "nondegenerate": r == g.dim()}),
                true,
            )
        }
        CheckKind::Center => {
            let z = g.center();
            let odd = z.homogeneous_part(&g, Parity::Odd).dim();
            (
                json!({
                    "check": "center",
                    "center_dim": z.dim(),
                    "odd_center_dim": odd,
                    "even_part_center_dim": g.even_center().dim(),
                }),
                true,
            )
        }
        CheckKind::EqSquare => {
            let real = real.ok_or_else(|| Failure::Usage(format!("{}: no matrix realization", file.display())))?;
            let r = square_identity(&g, &real, SQUARE_SAMPLES, seed)?;
            let ok = r.ok();
            let mut v = serde_json::to_value(&r).expect("json");
            v["check"] = json!("eq-square");
            v["ok"] = json!(ok);
            (v, ok)
        }
    };
    let mut value = with_header(&body, seed);
    value["algebra"] = json!(g.name());
    Ok(Outcome { value, ok })
}

fn decompose(file: &Path, seed: u64) -> Result<Outcome, Failure> {
    let (g, _) = load(file)?;
    let d = structure_report(&g, seed)?;
    Ok(Outcome { value: with_header(&d.report, seed), ok: true })
}

fn unitarity(file: &Path, seed: u64) -> Result<Outcome, Failure> {
    let (g, _) = load(file)?;
    Ok(Outcome { value: with_header(&unitarity_report(&g, seed), seed), ok: true })
}

fn representation_checks(g: &SuperAlgebra, rho: &Representation) -> (Value, bool) {
    let c = check_unitary_representation(g, rho);
    let ok = c.ok() && c.faithful;
    (serde_json::to_value(&c).expect("json"), ok)
}

fn spinrep(n: usize, hat: bool, check: bool, seed: u64) -> Result<Outcome, Failure> {
    let variant = if hat { SpinVariant::HHat } else { SpinVariant::H };
    let (g, rho) = spin_representation(n, variant)?;
    if !check {
        return Ok(Outcome { value: with_header(&rho.export(), seed), ok: true });
    }
    let fs = FockSpace::new(n);
    let (car, car_ok) = match check_car(&fs, seed)? {
        Ok(r) => (json!({"ok": true, "pairs_checked": r.pairs_checked}), true),
        Err(v) => (json!({"ok": false, "violation": v}), false),
    };
    let spectrum = number_spectrum(&number_operator(&fs))?;
    let spectrum: Vec<Value> =
        spectrum.iter().map(|(e, m)| json!({"eigenvalue": e.to_string(), "multiplicity": m})).collect();
    let (rep, rep_ok) = representation_checks(&g, &rho);
    let value = with_header(
        &json!({
            "algebra": g.name(),
            "fock_dim": rho.dim(),
            "car": car,
            "number_spectrum": spectrum,
            "representation": rep,
        }),
        seed,
    );
    Ok(Outcome { value, ok: car_ok && rep_ok })
}

fn tangent_rep(k: &str, check: bool, seed: u64) -> Result<Outcome, Failure> {
    let (g, rho) = tilde_tangent_representation(KTag::parse(k)?)?;
    if !check {
        return Ok(Outcome { value: with_header(&rho.export(), seed), ok: true });
    }
    let (rep, ok) = representation_checks(&g, &rho);
    let value = with_header(&json!({"algebra": g.name(), "fock_dim": rho.dim(), "representation": rep}), seed);
    Ok(Outcome { value, ok })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let seed = cli.seed;
    let (outcome, out) = match cli.command {
        Command::Construct { family, params, named, out } => (construct(family, &params, named, &out, seed)?, None),
        Command::Check { kind, file, out } => (check(kind, &file, seed)?, out),
        Command::Decompose { file, report } => (decompose(&file, seed)?, report),
        Command::Unitarity { file, out } => (unitarity(&file, seed)?, out),
        Command::Spinrep { dim, hat, check, out } => (spinrep(dim, hat, check, seed)?, out),
        Command::TangentRep { k, check, out } => (tangent_rep(&k, check, seed)?, out),
    };
    emit(&outcome.value, out.as_deref())?;
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

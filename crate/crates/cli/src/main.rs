//! `braidop`: checks operad presentations, unit actions and the braided Hopf
//! structure on free algebras from the command line.
//!
//! Exit codes: 0 pass, 1 check failure, 2 input error, 3 braiding fails YBE.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidop::braid::{check_involutive, check_yang_baxter, BraidedSpace};
use braidop::coherence::{
    check_coherence, check_containment, lambda_space, solve_coherence, verify_star_units,
    LambdaCase, SolutionSet, UnitAction,
};
use braidop::hopf::{
    check_twisted_cocommutativity, verify_axioms, CheckStatus, FreeAlgebra, HopfOptions,
};
use braidop::io::{parse_braiding, parse_operad, OperadFile};
use braidop::linalg::{format_rational, format_vector, parse_rational, Rational};
use braidop::operad::{star_tower, OperadComponents, OperadError, OperadPresentation};
use braidop::presets;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "braidop",
    version,
    about = "Exact checks for quadratic operads and braided Hopf algebras"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Operad presentation file.
    file: Option<PathBuf>,
    /// Use an embedded presentation instead of a file.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Component dimensions and the star tower.
    CheckOperad {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// Coherence equations C1–C5 for the unit action.
    Coherence {
        #[command(subcommand)]
        mode: CoherenceMode,
    },
    /// Containment of the relations in Λ′ and Λ″.
    Classify {
        #[command(flatten)]
        source: Source,
        /// Ordered basis p₁, p₂, …: generator names or sums such as `prec+2*mid`.
        #[arg(long, value_delimiter = ',', required = true)]
        basis: Vec<String>,
        #[arg(long, value_enum)]
        case: Option<CaseArg>,
    },
    /// Hopf axioms on the truncated free algebra.
    Hopf {
        #[command(flatten)]
        source: Source,
        /// Braiding file.
        #[arg(long, required_unless_present = "flip", conflicts_with = "flip")]
        braiding: Option<PathBuf>,
        /// Use the flip braiding on a space of dimension `--dim`.
        #[arg(long)]
        flip: bool,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Also build the antipode and check it.
        #[arg(long)]
        antipode: bool,
        /// Also check whether σ_A is a morphism and Δ is σ_A-cocommutative.
        #[arg(long)]
        twisted: bool,
    },
    /// Yang–Baxter equation for a braiding file.
    Ybe {
        #[arg(long)]
        braiding: PathBuf,
    },
    /// Embedded presentations.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand)]
enum CoherenceMode {
    /// Check the unit action stored in the file.
    Verify {
        #[command(flatten)]
        source: Source,
    },
    /// Solve for all unit actions.
    Solve {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    List,
    /// Print a preset file verbatim.
    Emit {
        name: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Prime,
    Double,
}

enum Failure {
    Input(String),
    Ybe(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Outcome {
    pass: bool,
    text: String,
    json: Value,
}

type Run = Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::CheckOperad { source, degree } => check_operad(&source, degree),
        Command::Coherence { mode } => match mode {
            CoherenceMode::Verify { source } => coherence_verify(&source),
            CoherenceMode::Solve { source } => coherence_solve(&source),
        },
        Command::Classify {
            source,
            basis,
            case,
        } => classify(&source, &basis, case),
        Command::Hopf {
            source,
            braiding,
            flip,
            dim,
            degree,
            antipode,
            twisted,
        } => hopf(
            &source,
            braiding.as_deref(),
            flip,
            dim,
            degree,
            antipode,
            twisted,
        ),
        Command::Ybe { braiding } => ybe(&braiding),
        Command::Presets { action } => match action {
            PresetAction::List => list_presets(),
            PresetAction::Emit { name } => match presets::source(&name) {
                Some(text) => {
                    emit(text);
                    return ExitCode::SUCCESS;
                }
                None => Err(Failure::Input(format!("unknown preset {name:?}"))),
            },
        },
    };
    match result {
        Ok(out) => {
            if cli.json {
                emit(&json_text(&out.json));
            } else {
                emit(&out.text);
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            report_error(cli.json, "input", &msg);
            ExitCode::from(2)
        }
        Err(Failure::Ybe(msg)) => {
            report_error(cli.json, "ybe", &msg);
            ExitCode::from(3)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn report_error(as_json: bool, kind: &str, msg: &str) {
    if as_json {
        emit(&json_text(&json!({"error": kind, "message": msg})));
    }
    eprintln!("error: {msg}");
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(source: &Source) -> Result<OperadFile, Failure> {
    match (&source.file, &source.preset) {
        (Some(path), _) => Ok(parse_operad(&read(path)?)?),
        (None, Some(name)) => {
            let text = presets::source(name)
                .ok_or_else(|| Failure::Input(format!("unknown preset {name:?}")))?;
            Ok(parse_operad(text)?)
        }
        (None, None) => Err(Failure::Input("no operad given".into())),
    }
}

fn require_unit_action(file: &OperadFile) -> Result<UnitAction, Failure> {
    file.unit_action
        .clone()
        .ok_or_else(|| Failure::Input(format!("{} has no unit_action", file.presentation.name())))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn unit_action_json(ua: &UnitAction) -> Value {
    json!({"alpha": strings(ua.alpha()), "beta": strings(ua.beta())})
}

fn header(p: &OperadPresentation) -> String {
    format!("operad {} ({})\n", p.name(), p.generator_names().join(", "))
}

fn check_operad(source: &Source, degree: usize) -> Run {
    let file = load(source)?;
    let p = &file.presentation;
    let c = OperadComponents::build(p, degree)?;
    let dims = c.dims();
    let mut text = header(p);
    let _ = writeln!(
        text,
        "dims {}",
        dims.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    for w in c.warnings() {
        let _ = writeln!(text, "warning: {w}");
    }
    let mut pass = true;
    let mut tower_json = Value::Null;
    let mut associative = Value::Null;
    match star_tower(&c) {
        Ok(tower) => {
            associative = json!(true);
            let _ = writeln!(text, "associative: yes");
            for s in tower.splits.iter().filter(|s| !s.holds) {
                let _ = writeln!(text, "γ(⋆; ⋆_{}, ⋆_{}) ≠ ⋆_{}", s.i, s.n - s.i, s.n);
            }
            let held = tower.splits.iter().filter(|s| s.holds).count();
            let _ = writeln!(
                text,
                "star tower: {held}/{} identities hold",
                tower.splits.len()
            );
            pass = tower.all_hold();
            tower_json = json!(tower
                .splits
                .iter()
                .map(|s| json!({"n": s.n, "i": s.i, "holds": s.holds}))
                .collect::<Vec<_>>());
        }
        Err(OperadError::NotAssociative { difference }) => {
            associative = json!(false);
            pass = false;
            let _ = writeln!(
                text,
                "associative: no (γ(⋆; ⋆, I) - γ(⋆; I, ⋆) = {} in P_3)",
                format_vector(&difference)
            );
        }
        Err(OperadError::ArityOverflow { .. }) => {
            let _ = writeln!(text, "associativity needs degree ≥ 3; not checked");
        }
        Err(e) => return Err(e.into()),
    }
    let mut units_json = Value::Null;
    if let Some(ua) = &file.unit_action {
        let checks = verify_star_units(&c, ua)?;
        let bad: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
        for b in &bad {
            let _ = writeln!(text, "unit identity fails: n = {}, slot {}", b.n, b.slot);
        }
        let _ = writeln!(
            text,
            "unit identities: {}/{} hold",
            checks.len() - bad.len(),
            checks.len()
        );
        pass &= bad.is_empty();
        units_json = json!(checks
            .iter()
            .map(|c| json!({"n": c.n, "slot": c.slot, "holds": c.holds}))
            .collect::<Vec<_>>());
    }
    let _ = writeln!(text, "{}", verdict(pass));
    Ok(Outcome {
        pass,
        text,
        json: json!({
            "operad": p.name(),
            "generators": p.generator_names(),
            "degree": degree,
            "dims": dims,
            "associative": associative,
            "star_tower": tower_json,
            "unit_identities": units_json,
            "warnings": c.warnings(),
            "pass": pass,
        }),
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn coherence_verify(source: &Source) -> Run {
    let file = load(source)?;
    let p = &file.presentation;
    let ua = require_unit_action(&file)?;
    let report = check_coherence(p, &ua)?;
    let mut text = header(p);
    let _ = writeln!(text, "{ua}");
    for e in report.failures() {
        let _ = writeln!(
            text,
            "relation {}, {}: fails (left - right = {})",
            e.relation,
            e.equation,
            format_vector(&e.difference)
        );
    }
    let passed = report.entries.iter().filter(|e| e.pass).count();
    let _ = writeln!(text, "{passed}/{} equations hold", report.entries.len());
    let _ = writeln!(text, "{}", verdict(report.pass()));
    Ok(Outcome {
        pass: report.pass(),
        text,
        json: json!({
            "operad": p.name(),
            "unit_action": unit_action_json(&ua),
            "entries": report.to_json(),
            "pass": report.pass(),
        }),
    })
}

fn coherence_solve(source: &Source) -> Run {
    let file = load(source)?;
    let p = &file.presentation;
    let sol = solve_coherence(p)?;
    let mut text = header(p);
    let _ = writeln!(
        text,
        "C1–C3 and normalization leave {} free parameter(s)",
        sol.linear.param_count()
    );
    let set_json = match &sol.set {
        SolutionSet::Family { base, directions } => {
            let _ = writeln!(text, "family through {base}");
            for d in directions {
                let _ = writeln!(text, "  direction {}", format_vector(d));
            }
            json!({
                "kind": "family",
                "base": unit_action_json(base),
                "directions": directions.iter().map(|d| strings(d)).collect::<Vec<_>>(),
            })
        }
        SolutionSet::Points(points) => {
            if points.is_empty() {
                let _ = writeln!(text, "no solutions");
            }
            for pt in points {
                let _ = writeln!(text, "solution {pt}");
            }
            json!({"kind": "points", "points": points.iter().map(unit_action_json).collect::<Vec<_>>()})
        }
        SolutionSet::Residual { points, system } => {
            for pt in points {
                let _ = writeln!(text, "solution {pt}");
            }
            let rendered: Vec<String> = system
                .polynomials
                .iter()
                .map(|q| q.render(&system.variables))
                .collect();
            for r in &rendered {
                let _ = writeln!(text, "unresolved: {r} = 0");
            }
            json!({
                "kind": "residual",
                "points": points.iter().map(unit_action_json).collect::<Vec<_>>(),
                "variables": system.variables,
                "unresolved": rendered,
            })
        }
    };
    let pass = !sol.is_empty();
    let _ = writeln!(text, "{}", verdict(pass));
    Ok(Outcome {
        pass,
        text,
        json: json!({"operad": p.name(), "solutions": set_json, "pass": pass}),
    })
}

/// Parses `name`, `c*name` or a `+`-separated sum of those into generator
/// coordinates.
fn parse_combination(p: &OperadPresentation, s: &str) -> Result<Vec<Rational>, Failure> {
    let mut v = vec![Rational::from_integer(0.into()); p.generator_count()];
    for term in s.split('+') {
        let term = term.trim();
        let (coeff, name) = match term.split_once('*') {
            Some((c, n)) => (parse_rational(c.trim())?, n.trim()),
            None => (Rational::from_integer(1.into()), term),
        };
        let g = p
            .generator_index(name)
            .ok_or_else(|| Failure::Input(format!("unknown generator {name:?}")))?;
        v[g] += coeff;
    }
    Ok(v)
}

fn classify(source: &Source, basis: &[String], case: Option<CaseArg>) -> Run {
    let file = load(source)?;
    let p = &file.presentation;
    let ops = basis
        .iter()
        .map(|b| parse_combination(p, b))
        .collect::<Result<Vec<_>, _>>()?;
    let cases: Vec<LambdaCase> = match case {
        Some(CaseArg::Prime) => vec![LambdaCase::Prime],
        Some(CaseArg::Double) => vec![LambdaCase::DoublePrime],
        None if ops.len() >= 2 => vec![LambdaCase::Prime, LambdaCase::DoublePrime],
        None => vec![LambdaCase::DoublePrime],
    };
    let mut text = header(p);
    let names: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| format!("p{} = {b}", i + 1))
        .collect();
    let _ = writeln!(text, "basis {}", names.join(", "));
    let mut results = Vec::new();
    let mut any = false;
    for case in cases {
        let ls = lambda_space(p.star(), &ops, case)?;
        let report = check_containment(p, &ls);
        let label = match case {
            LambdaCase::Prime => "Λ′",
            LambdaCase::DoublePrime => "Λ″",
        };
        let matched: Vec<String> = report
            .matches
            .iter()
            .enumerate()
            .filter_map(|(r, m)| m.map(|g| format!("relation {} = generator {}", r + 1, g + 1)))
            .collect();
        if report.contained {
            let _ = write!(text, "{label}: contained");
            if !matched.is_empty() {
                let _ = write!(text, " ({})", matched.join(", "));
            }
            let _ = writeln!(text);
        } else {
            let _ = writeln!(
                text,
                "{label}: not contained (relation {} lies outside)",
                report.offending.unwrap_or(0)
            );
        }
        any |= report.contained;
        results.push(json!({
            "case": case,
            "generators": ls.generators.len(),
            "dimension": ls.dimension(),
            "contained": report.contained,
            "offending_relation": report.offending,
            "matches": report.matches.iter().map(|m| m.map(|g| g + 1)).collect::<Vec<_>>(),
        }));
    }
    let _ = writeln!(text, "{}", verdict(any));
    Ok(Outcome {
        pass: any,
        text,
        json: json!({"operad": p.name(), "basis": basis, "results": results, "pass": any}),
    })
}

fn ybe_precondition(space: &BraidedSpace) -> Result<(), Failure> {
    let v = check_yang_baxter(space);
    if v.holds {
        return Ok(());
    }
    let w = v.witness.unwrap_or_default();
    Err(Failure::Ybe(format!(
        "braiding fails the Yang–Baxter equation on {}",
        render_word(&w)
    )))
}

fn render_word(w: &[usize]) -> String {
    w.iter()
        .map(|a| format!("e{a}"))
        .collect::<Vec<_>>()
        .join("⊗")
}

#[allow(clippy::too_many_arguments)]
fn hopf(
    source: &Source,
    braiding: Option<&Path>,
    flip: bool,
    dim: usize,
    degree: usize,
    antipode: bool,
    twisted: bool,
) -> Run {
    let file = load(source)?;
    let ua = require_unit_action(&file)?;
    let (space, braiding_name) = match braiding {
        Some(path) => (parse_braiding(&read(path)?)?, path.display().to_string()),
        None => {
            debug_assert!(flip);
            if dim == 0 {
                return Err(Failure::Input("--dim must be at least 1".into()));
            }
            (BraidedSpace::flip(dim), "flip".to_string())
        }
    };
    ybe_precondition(&space)?;
    let c = OperadComponents::build(&file.presentation, degree)?;
    let alg = FreeAlgebra::new(c, ua, space)?;
    let report = verify_axioms(&alg, HopfOptions { antipode });
    let p = &file.presentation;
    let mut text = header(p);
    let _ = writeln!(
        text,
        "braiding {braiding_name}, dim V = {}, degree ≤ {degree}",
        alg.space().dim()
    );
    for w in alg.warnings() {
        let _ = writeln!(text, "warning: {w}");
    }
    for item in &report.items {
        let status = match item.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "inconclusive",
            CheckStatus::Skipped => "skipped",
        };
        let _ = write!(
            text,
            "{:<32} {status:<12} {} checked",
            item.name, item.checked
        );
        if item.inconclusive > 0 {
            let _ = write!(text, ", {} inconclusive", item.inconclusive);
        }
        if item.skipped > 0 {
            let _ = write!(text, ", {} skipped", item.skipped);
        }
        let _ = writeln!(text);
        if let Some(w) = &item.witness {
            let _ = writeln!(text, "    witness: {w}");
        }
    }
    let mut twisted_json = Value::Null;
    if twisted {
        let t = check_twisted_cocommutativity(&alg);
        let _ = writeln!(text, "σ invertible: {}", yes_no(t.invertible));
        let _ = writeln!(text, "σ_A is a morphism: {}", yes_no(t.morphism_holds));
        let _ = writeln!(text, "σ_A Δ = Δ: {}", yes_no(t.cocomm_holds));
        twisted_json = serde_json::to_value(&t).expect("serializable");
    }
    let _ = writeln!(text, "{}", verdict(report.pass));
    let mut j = report.to_json();
    j["operad"] = json!(p.name());
    j["braiding"] = json!(braiding_name);
    j["dim"] = json!(alg.space().dim());
    j["degree"] = json!(degree);
    j["warnings"] = json!(alg.warnings());
    j["twisted"] = twisted_json;
    Ok(Outcome {
        pass: report.pass,
        text,
        json: j,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ybe(path: &Path) -> Run {
    let space = parse_braiding(&read(path)?)?;
    ybe_precondition(&space)?;
    let involutive = check_involutive(&space);
    let invertible = space.is_invertible();
    let text = format!(
        "Yang–Baxter equation holds (dim V = {})\ninvolutive: {}\ninvertible: {}\nPASS\n",
        space.dim(),
        yes_no(involutive),
        yes_no(invertible)
    );
    Ok(Outcome {
        pass: true,
        text,
        json: json!({
            "dim": space.dim(),
            "ybe": true,
            "involutive": involutive,
            "invertible": invertible,
            "pass": true,
        }),
    })
}

fn list_presets() -> Run {
    let mut text = String::new();
    for name in presets::NAMES {
        let _ = writeln!(text, "{name}");
    }
    Ok(Outcome {
        pass: true,
        text,
        json: json!(presets::NAMES),
    })
}

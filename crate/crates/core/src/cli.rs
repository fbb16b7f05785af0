//! The `cocyred` command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cohmodel::CohModel;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::reduction::{full_cocycle_basis, CoboundaryMode, Label, ReductionOutput};
use crate::search::{enumerate_span, Predicate, SearchOptions, SearchReport, SearchSpace};
use crate::tensor::SignTensor;
use crate::verify::{verify_model, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cocyred", version, about = "Cohomological reduction of cocyclic Hadamard searches over Z2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the model dimensions, ranks and dim H^n.
    Cohomology(Target),
    /// Emit representative cocycles followed by coboundaries.
    Basis {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the tensor of a product of basis elements.
    Tensor {
        #[command(flatten)]
        target: Target,
        /// Comma-separated labels such as `r1,c4,c7`.
        #[arg(long, value_delimiter = ',')]
        combo: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Count Hadamard tensors in the span of the basis.
    Search(SearchArgs),
    /// Run the invariant suite.
    Verify(Target),
}

#[derive(Args, Debug)]
struct Target {
    /// Group spec: g1:t, g2:t, d4t:t or cyclic:t.
    #[arg(long, required_unless_present = "model")]
    group: Option<GroupSpec>,
    /// Cohomological degree n.
    #[arg(long, required_unless_present = "model")]
    degree: Option<usize>,
    /// Load the model from a JSON file instead of the built-in tables.
    #[arg(long, conflicts_with = "group")]
    model: Option<PathBuf>,
    /// Coboundary generators: all tuples or only normalized ones.
    #[arg(long)]
    mode: Option<CoboundaryMode>,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Test {
    Improper,
    Proper,
    Hadamard2d,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum)]
    test: Test,
    #[arg(long, env = "COCYRED_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Sample this many random combinations instead of enumerating all.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0, requires = "sample")]
    seed: u64,
    /// Largest span size accepted by exhaustive mode.
    #[arg(long, default_value_t = 1 << 32)]
    limit: u64,
    #[arg(long, default_value_t = 1024)]
    max_witnesses: usize,
    /// Write the witnesses as JSON to this file.
    #[arg(long)]
    dump: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Error(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY,
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::SpanTooLarge { .. } => EXIT_INFEASIBLE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Cohomology(target) => {
            let (model, label) = load(&target)?;
            let n = model.degree();
            let red = reduce(&model, &target)?;
            let [q, r, s] = model.dims();
            writeln!(out, "group: {label}")?;
            writeln!(out, "degree: {n}")?;
            writeln!(out, "q: {q}\nr: {r}\ns: {s}")?;
            writeln!(out, "l: {}\nk: {}", red.snf[0].rank, red.snf[1].rank)?;
            writeln!(out, "dim H^{n} = {}", red.hdim)?;
        }
        Command::Basis { target, output } => {
            let (model, label) = load(&target)?;
            let red = reduce(&model, &target)?;
            let text = match output.format {
                Format::Text => basis_text(&red),
                Format::Json => pretty(&basis_json(&label, &red))?,
            };
            emit(out, output.out.as_deref(), &text)?;
        }
        Command::Tensor { target, combo, output } => {
            let (model, _) = load(&target)?;
            let red = reduce(&model, &target)?;
            let space = SearchSpace::from_reduction(&red)?;
            let labels = combo
                .iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<Label>())
                .collect::<Result<Vec<_>>>()?;
            let t = space.tensor_of_combination(&labels)?;
            let text = match output.format {
                Format::Text => t.to_text(),
                Format::Json => pretty(&serde_json::to_value(t.to_json()).map_err(Error::from)?)?,
            };
            emit(out, output.out.as_deref(), &text)?;
        }
        Command::Search(args) => search(args, out)?,
        Command::Verify(target) => {
            let (model, label) = load(&target)?;
            let report: VerifyReport = verify_model(&model, target.mode, target.model.is_none());
            writeln!(out, "verify {label} degree {}", model.degree())?;
            writeln!(out, "{report}")?;
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn load(target: &Target) -> Result<(CohModel, String)> {
    if let Some(path) = &target.model {
        let model = CohModel::load(path)?;
        let label = match model.group().spec() {
            Some(spec) => spec.to_string(),
            None => path.display().to_string(),
        };
        if let Some(n) = target.degree.filter(|&n| n != model.degree()) {
            return Err(Error::DegreeMismatch { expected: model.degree(), actual: n });
        }
        return Ok((model, label));
    }
    let spec = target.group.expect("required by the parser");
    let degree = target.degree.expect("required by the parser");
    Ok((CohModel::builtin(spec, degree)?, spec.to_string()))
}

fn reduce(model: &CohModel, target: &Target) -> Result<ReductionOutput> {
    let n = model.degree();
    full_cocycle_basis(model, n, target.mode.unwrap_or_else(|| CoboundaryMode::default_for(n)))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn basis_text(red: &ReductionOutput) -> String {
    red.basis()
        .map(|(label, c)| format!("# {label}\n{}", SignTensor::from_cochain(c).to_text()))
        .collect::<Vec<_>>()
        .join("\n\n")
}

fn basis_json(group: &str, red: &ReductionOutput) -> serde_json::Value {
    let elements: Vec<_> = red
        .basis()
        .map(|(label, c)| {
            let t = SignTensor::from_cochain(c).to_json();
            json!({ "label": label.to_string(), "v": t.v, "n": t.n, "entries": t.entries })
        })
        .collect();
    json!({
        "group": group,
        "degree": red.degree(),
        "mode": red.mode.to_string(),
        "hdim": red.hdim,
        "reps": red.reps.len(),
        "cobs": red.cobs.len(),
        "elements": elements,
    })
}

fn search(args: SearchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (model, label) = load(&args.target)?;
    let red = reduce(&model, &args.target)?;
    let space = SearchSpace::from_reduction(&red)?;
    let preds: Vec<Predicate> = match args.test {
        Test::Improper => vec![Predicate::Improper, Predicate::Proper],
        Test::Proper => vec![Predicate::Proper],
        Test::Hadamard2d => vec![Predicate::Hadamard2d],
    };
    let options = SearchOptions {
        limit: args.limit,
        sample: args.sample,
        seed: args.seed,
        workers: args.workers,
        max_witnesses: args.max_witnesses,
    };
    let report = enumerate_span(&space, &preds, &options)?;
    let headline = match args.test {
        Test::Improper => format!(
            "improper: {}, proper-among-hits: {}",
            report.hits_for(Predicate::Improper).unwrap_or(0),
            report.joint
        ),
        _ => format!("{}: {}", preds[0], report.hits[0].1),
    };
    match args.format {
        Format::Text => {
            writeln!(out, "group: {label}")?;
            writeln!(out, "degree: {}", model.degree())?;
            writeln!(out, "mode: {}", mode_name(&report))?;
            writeln!(out, "dim: {}", report.dim)?;
            writeln!(out, "examined: {}", report.examined)?;
            writeln!(out, "{headline}")?;
            writeln!(out, "witnesses: {}", report.witnesses.len())?;
        }
        Format::Json => {
            let mut v = summary_json(&label, &report);
            v["headline"] = json!(headline);
            writeln!(out, "{}", pretty(&v)?)?;
        }
    }
    if let Some(path) = &args.dump {
        let mut v = summary_json(&label, &report);
        v["witnesses"] = report
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "labels": space.labels_of(&w.combo).iter().map(Label::to_string).collect::<Vec<_>>(),
                    "passed": w.passed.iter().map(|p| p.name()).collect::<Vec<_>>(),
                })
            })
            .collect();
        std::fs::write(path, pretty(&v)? + "\n")?;
    }
    Ok(())
}

fn mode_name(report: &SearchReport) -> &'static str {
    match report.mode {
        crate::search::SearchMode::Exhaustive => "exhaustive",
        crate::search::SearchMode::Sampled => "sampled",
    }
}

/// Elapsed time is left out so that output is reproducible byte for byte.
fn summary_json(group: &str, report: &SearchReport) -> serde_json::Value {
    let hits: serde_json::Map<String, serde_json::Value> =
        report.hits.iter().map(|(p, n)| (p.name().to_string(), json!(n))).collect();
    json!({
        "group": group,
        "mode": mode_name(report),
        "dim": report.dim,
        "examined": report.examined,
        "hits": hits,
        "joint": report.joint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cocyred").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cohomology_prints_dimension() {
        let (code, out, _) = call(&["cohomology", "--group", "g2:3", "--degree", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim H^2 = 3"), "{out}");
        assert!(out.contains("l: 1\nk: 2"), "{out}");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["cohomology", "--group", "g9:1", "--degree", "2"]).0, 1);
        assert_eq!(call(&["cohomology", "--group", "g1:1"]).0, 1);
        assert_eq!(call(&["basis", "--group", "g1:1", "--degree", "2", "--bogus"]).0, 1);
        let (code, _, err) = call(&["basis", "--group", "d4t:2", "--degree", "3"]);
        assert_eq!(code, 1);
        assert!(err.contains("model not provided by paper"), "{err}");
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn tensor_combo_accepts_short_labels() {
        let (code, out, err) = call(&["tensor", "--group", "cyclic:2", "--degree", "3", "--combo", "c4,c7,c8,c9"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out.lines().next(), Some("1 1 1 1"));
        let (code, _, err) = call(&["tensor", "--group", "cyclic:2", "--degree", "3", "--combo", "c999"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown basis label"), "{err}");
    }
}

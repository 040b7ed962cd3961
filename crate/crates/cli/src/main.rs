//! `superheis`: run verification suites, one-shot computations and the
//! super Stone–von Neumann test from the command line.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::Value;

use superheis_core::compute::ComputeRegistry;
use superheis_core::linalg::RatMatrix;
use superheis_core::superfunctions::pfaffian;
use superheis_core::unitary::FormJson;
use superheis_core::verify::report::Verdict;
use superheis_core::verify::suites::{SuiteContext, SuiteRegistry};

#[derive(Parser)]
#[command(name = "superheis", version, about = "Exact checks for the super-Heisenberg group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report every identity it checks.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Restrict dimension-indexed checks to this m (1..=4).
        #[arg(long)]
        m: Option<usize>,
        /// Matrix file: {"m":2,"G":[["0","1"],["-1","0"]]} or a bare row array.
        #[arg(long = "G", value_name = "FILE")]
        g: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
        /// Suppress the text summary.
        #[arg(long)]
        quiet: bool,
    },
    /// Run one computation kind on a JSON input file (`-` for stdin).
    Compute {
        kind: String,
        #[arg(long, value_name = "FILE", default_value = "-")]
        input: PathBuf,
    },
    /// Print the Pfaffian of an antisymmetric matrix file.
    Pfaffian {
        #[arg(long = "G", value_name = "FILE")]
        g: PathBuf,
    },
    /// Decide existence of a unitary representation for a supersymplectic form.
    Svn {
        #[arg(long, value_name = "FILE")]
        form: PathBuf,
    },
}

/// Bad flags or inputs: exit 2.
struct Usage(anyhow::Error);

enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u.0)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn read_input(path: &Path) -> Result<String, Usage> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Usage(anyhow!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Usage(anyhow!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Usage> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| Usage(anyhow!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<RatMatrix, Usage> {
    let v = read_json(path)?;
    let rows = v.get("G").cloned().unwrap_or(v);
    let rows: Vec<Vec<String>> =
        serde_json::from_value(rows).map_err(|e| Usage(anyhow!("{}: G: {e}", path.display())))?;
    RatMatrix::from_strings(&rows).map_err(|e| Usage(anyhow!("{}: {e}", path.display())))
}

fn emit(json: &str, target: &Path) -> anyhow::Result<()> {
    if target == Path::new("-") {
        println!("{json}");
        Ok(())
    } else {
        fs::write(target, format!("{json}\n")).with_context(|| format!("writing {}", target.display()))
    }
}

fn verify(suite: &str, m: Option<usize>, g: Option<&Path>, seed: u64, json: Option<&Path>, quiet: bool) -> Result<ExitCode, Failure> {
    let registry = SuiteRegistry::default();
    if !registry.names().contains(&suite) {
        return Err(Usage(anyhow!("unknown suite `{suite}` (expected one of {})", registry.names().join(", "))).into());
    }
    let g = g.map(read_matrix).transpose()?;
    let ctx = SuiteContext::new(m, g, seed).map_err(|e| Usage(e.into()))?;
    let report = registry.run(suite, &ctx).map_err(anyhow::Error::from)?;
    if let Some(target) = json {
        emit(&report.to_json(), target)?;
    }
    if !quiet {
        let to_stderr = json == Some(Path::new("-"));
        let mut lines = Vec::new();
        for c in &report.checks {
            let tag = match c.verdict {
                Verdict::Pass => "pass".to_string(),
                Verdict::ExactDiscrepancy => match &c.discrepancy_factor {
                    Some(d) => format!("exact-discrepancy ({:?}: {})", d.kind, d.value).to_lowercase(),
                    None => "exact-discrepancy".into(),
                },
                Verdict::Error => format!("error: {}", c.lhs),
            };
            lines.push(format!("{:<48} {tag}", c.name));
        }
        let s = &report.summary;
        lines.push(format!("{} checks: {} pass, {} exact-discrepancy, {} error", s.total, s.pass, s.exact_discrepancy, s.error));
        for l in lines {
            if to_stderr {
                eprintln!("{l}");
            } else {
                println!("{l}");
            }
        }
    }
    Ok(if report.has_errors() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn compute(kind: &str, input: &Path) -> Result<ExitCode, Failure> {
    let registry = ComputeRegistry::default();
    let Some(k) = registry.get(kind) else {
        return Err(Usage(anyhow!("unknown compute kind `{kind}` (expected one of {})", registry.names().join(", "))).into());
    };
    let value = read_json(input)?;
    let out = k.compute(&value).map_err(|e| Usage(anyhow!("{kind}: {e}\ninput shape: {}", k.input_hint())))?;
    println!("{}", serde_json::to_string_pretty(&out).map_err(anyhow::Error::from)?);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Verify { suite, m, g, seed, json, quiet } => verify(&suite, m, g.as_deref(), seed, json.as_deref(), quiet),
        Command::Compute { kind, input } => compute(&kind, &input),
        Command::Pfaffian { g } => {
            let g = read_matrix(&g)?;
            let pf = pfaffian(&g).map_err(|e| Usage(e.into()))?;
            println!("{pf}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Svn { form } => {
            let text = read_input(&form)?;
            let parsed: FormJson = serde_json::from_str(&text).map_err(|e| Usage(anyhow!("{}: {e}", form.display())))?;
            let verdict = parsed.to_form().and_then(|f| f.verdict()).map_err(|e| Usage(e.into()))?;
            println!("{verdict}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("superheis: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("superheis: {e:#}");
            ExitCode::from(1)
        }
    }
}

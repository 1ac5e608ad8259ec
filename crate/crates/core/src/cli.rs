//! Command-line front end.

use std::cmp::Ordering;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::braid::BraidWord;
use crate::classification::{class_of, count_classes, enumerate_classes, min_positive, realize, DiagramClass};
use crate::diagram::CurveDiagram;
use crate::error::{Error, Result};
use crate::isotopy::loose_isotopic;
use crate::order::{dehornoy_diagram, DiagramOrder};
use crate::suites::run_suite;

#[derive(Parser, Debug)]
#[command(name = "braid-orders", version, about = "Finite-type orderings of braid groups from curve diagrams")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of conjugacy classes of finite-type orderings of B_n.
    Count { n: usize },
    /// All canonical classes on n punctures, one per line.
    Enumerate { n: usize },
    /// Compare two braids in the ordering of a diagram.
    Compare {
        #[arg(long)]
        n: usize,
        /// `dehornoy`, a diagram file, or a class expression.
        #[arg(long)]
        diagram: String,
        #[arg(long, allow_hyphen_values = true)]
        b1: String,
        #[arg(long, allow_hyphen_values = true)]
        b2: String,
    },
    /// Sign of a braid in the ordering of a diagram.
    Sign {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Decide loose isotopy of two total diagrams.
    LooseIso { first: String, second: String },
    /// Canonical class of a diagram's orbit.
    Classify { diagram: String },
    /// Least positive braid of a class's ordering.
    MinPositive { class: String },
    /// Standard-position diagram of a class, in the diagram file format.
    Realize { class: String },
    /// Run a property suite.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn verdict(v: Ordering) -> &'static str {
    match v {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

/// Loads `dehornoy`, a diagram file, or a class expression.
fn load_diagram(source: &str, n: Option<usize>) -> Result<CurveDiagram> {
    let d = if source == "dehornoy" {
        let n = n.ok_or_else(|| Error::Parse("`dehornoy` needs a puncture count".into()))?;
        dehornoy_diagram(n)?
    } else if Path::new(source).is_file() {
        let text = std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
        CurveDiagram::parse(&text)?
    } else {
        realize(&DiagramClass::parse(source)?)?
    };
    if let Some(n) = n {
        if d.n() != n {
            return Err(Error::StrandMismatch(d.n(), n));
        }
    }
    d.validate()?;
    Ok(d)
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Output {
    fn ok(text: impl Into<String>, json: serde_json::Value) -> Self {
        Output { text: text.into(), json, code: 0 }
    }
}

fn execute(cmd: Command) -> Result<Output> {
    Ok(match cmd {
        Command::Count { n } => {
            let c = count_classes(n)?.to_string();
            Output::ok(c.clone(), json!({ "n": n, "count": c }))
        }
        Command::Enumerate { n } => {
            let all: Vec<String> = enumerate_classes(n)?.iter().map(|c| c.to_string()).collect();
            Output::ok(all.join("\n"), json!({ "n": n, "classes": all }))
        }
        Command::Compare { n, diagram, b1, b2 } => {
            let o = DiagramOrder::new(&load_diagram(&diagram, Some(n))?)?;
            let v = verdict(o.compare(&BraidWord::parse(&b1, n)?, &BraidWord::parse(&b2, n)?)?);
            Output::ok(v, json!({ "verdict": v }))
        }
        Command::Sign { n, diagram, b } => {
            let o = DiagramOrder::new(&load_diagram(&diagram, Some(n))?)?;
            let v = verdict(o.sign(&BraidWord::parse(&b, n)?)?);
            Output::ok(v, json!({ "verdict": v }))
        }
        Command::LooseIso { first, second } => {
            let yes = loose_isotopic(&load_diagram(&first, None)?, &load_diagram(&second, None)?)?;
            Output::ok(if yes { "YES" } else { "NO" }, json!({ "loosely_isotopic": yes }))
        }
        Command::Classify { diagram } => {
            let c = class_of(&load_diagram(&diagram, None)?)?.to_string();
            Output::ok(c.clone(), json!({ "class": c }))
        }
        Command::MinPositive { class } => {
            let h = min_positive(&DiagramClass::parse(&class)?)?;
            Output::ok(h.to_string(), json!({ "braid": h.letters() }))
        }
        Command::Realize { class } => {
            let d = realize(&DiagramClass::parse(&class)?)?;
            let text = d.to_string();
            Output::ok(text.trim_end(), json!({ "diagram": text }))
        }
        Command::Check { suite, seed } => {
            let r = run_suite(&suite, seed)?;
            let mut text = format!("{}: {} passed, {} failed", r.name, r.passed, r.failed);
            if let Some(f) = &r.first_failure {
                text.push_str(&format!("\nfirst failure: {f}"));
            }
            Output {
                text,
                json: json!({ "suite": r.name, "seed": seed, "passed": r.passed, "failed": r.failed, "first_failure": r.first_failure }),
                code: if r.ok() { 0 } else { 1 },
            }
        }
    })
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code: 0 ok, 1 suite failure, 2 usage or input error.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(o) => {
            let _ = match format {
                Format::Text => writeln!(out, "{}", o.text),
                Format::Json => writeln!(out, "{}", o.json),
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

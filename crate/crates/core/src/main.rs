use std::collections::BTreeSet;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wcs_core::abduction::{
    build_framework, entails, explain, AbductionError, AbductiveFramework, ExplainOptions, Explanation,
    Minimality, Observation, Reasoning, Scope,
};
use wcs_core::classify::{classify, ClassifyOptions, Relation};
use wcs_core::fixtures::{run, FixtureSet};
use wcs_core::frontend::{
    parse_context, parse_literals, parse_observation, parse_program, to_json, ExplanationsDoc, ModelDoc,
    ParsedProgram, ReportDoc,
};
use wcs_core::semantics::{least_model, violated};
use wcs_core::syntax::{ground_constraints, ground_with_pool, Literal};

const EXIT_USAGE: u8 = 1;
const EXIT_IC: u8 = 2;
const EXIT_NONE: u8 = 3;
const EXIT_FIXTURES: u8 = 4;

#[derive(Parser)]
#[command(name = "wcs", version, about = "Contextual abduction under the weak completion semantics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionArg {
    Subset,
    Cardinality,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Skeptical,
    Credulous,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    SideEffect,
    Contested,
    Relevant,
    Joint,
}

#[derive(clap::Args)]
struct Common {
    /// Program file (.lp).
    program: PathBuf,
    /// Extra constants for grounding, comma separated.
    #[arg(long, value_delimiter = ',')]
    constants: Vec<String>,
    /// Plain text or JSON.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(clap::Args)]
struct Search {
    /// How explanations are compared for minimality.
    #[arg(long, value_enum, default_value = "subset")]
    criterion: CriterionArg,
    /// Give no explanation for observations the program already entails.
    #[arg(long)]
    strict_def1: bool,
}

impl Search {
    fn options(&self) -> ExplainOptions {
        ExplainOptions {
            criterion: match self.criterion {
                CriterionArg::Subset => Minimality::Subset,
                CriterionArg::Cardinality => Minimality::Cardinality,
            },
            strict_def1: self.strict_def1,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the least model of a program.
    Model {
        #[command(flatten)]
        common: Common,
    },
    /// Print the minimal explanations of an observation.
    Explain {
        #[command(flatten)]
        common: Common,
        /// Observation literals, or a path to an .obs file.
        #[arg(long)]
        observe: String,
        /// Context file (.ctx) of previously abduced facts.
        #[arg(long)]
        context: Option<PathBuf>,
        #[command(flatten)]
        search: Search,
    },
    /// Evaluate a query across the explanations of an observation.
    Entail {
        #[command(flatten)]
        common: Common,
        /// Observation literals, or a path to an .obs file.
        #[arg(long)]
        observe: String,
        /// Query literals, read as a conjunction.
        #[arg(long)]
        query: String,
        /// Whether every explanation or some explanation must agree.
        #[arg(long, value_enum, default_value = "skeptical")]
        mode: ModeArg,
        #[command(flatten)]
        search: Search,
    },
    /// Classify how a second observation relates to a first one.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Relation to test.
        #[arg(long, value_enum)]
        relation: RelationArg,
        /// Primary observation, or a path to an .obs file.
        #[arg(long)]
        o1: String,
        /// Secondary observation, or a path to an .obs file.
        #[arg(long)]
        o2: String,
        /// Strict possibility also requires necessity.
        #[arg(long)]
        literal_strict_possible: bool,
        #[command(flatten)]
        search: Search,
    },
    /// Run the built-in examples against their expected results.
    Fixtures {
        /// Read fixtures from this directory instead of the embedded copies.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Plain text or JSON.
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

fn styled() -> bool {
    std::env::var("WCS_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal()
}

fn paint(text: &str, code: &str) -> String {
    if styled() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_program(path: &Path) -> Result<ParsedProgram, Failure> {
    parse_program(&read(path)?).map_err(|e| Failure::usage(format!("{}:{e}", path.display())))
}

/// Literal text, or the contents of an existing .obs file.
fn literal_text(arg: &str) -> Result<String, Failure> {
    let p = Path::new(arg);
    if arg.ends_with(".obs") && p.is_file() {
        read(p)
    } else {
        Ok(arg.to_string())
    }
}

fn observation(arg: &str) -> Result<Observation, Failure> {
    parse_observation(&literal_text(arg)?).map_err(|e| Failure::usage(format!("observation {e}")))
}

fn constants_of(lits: impl IntoIterator<Item = Literal>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for l in lits {
        l.subject.atom().collect_constants(&mut out);
    }
    out
}

fn framework(
    common: &Common,
    parsed: &ParsedProgram,
    mut extra: BTreeSet<String>,
) -> Result<AbductiveFramework, Failure> {
    extra.extend(common.constants.iter().cloned());
    build_framework(&parsed.program, &parsed.ics, &extra, &BTreeSet::new())
        .map_err(|e| Failure::usage(e.to_string()))
}

fn emit<T: serde::Serialize>(format: FormatArg, doc: &T, text: impl FnOnce() -> String) {
    match format {
        FormatArg::Text => print!("{}", text()),
        FormatArg::Structured => print!("{}", to_json(doc)),
    }
}

fn cmd_model(common: &Common) -> Result<u8, Failure> {
    let parsed = load_program(&common.program)?;
    let mut pool = parsed.program.constants();
    for ic in &parsed.ics {
        pool.extend(constants_of(ic.body.iter().cloned()));
    }
    pool.extend(common.constants.iter().cloned());
    let ground = ground_with_pool(&parsed.program, &pool).map_err(|e| Failure::usage(e.to_string()))?;
    let ics = ground_constraints(&parsed.ics, &pool).map_err(|e| Failure::usage(e.to_string()))?;
    let model = least_model(&ground).map_err(|e| Failure::usage(e.to_string()))?;
    let doc = ModelDoc::new(&model, &ground.atoms());
    emit(common.format, &doc, || format!("{}\n", doc.text()));
    let bad = violated(&model, &ics);
    if bad.is_empty() {
        return Ok(0);
    }
    for ic in bad {
        eprintln!("{} {ic}", paint("violated:", "1;31"));
    }
    Ok(EXIT_IC)
}

fn cmd_explain(
    common: &Common,
    observe: &str,
    context: Option<&Path>,
    search: &Search,
) -> Result<u8, Failure> {
    let parsed = load_program(&common.program)?;
    let o = observation(observe)?;
    let ctx = match context {
        Some(p) => parse_context(&read(p)?).map_err(|e| Failure::usage(format!("{}:{e}", p.display())))?,
        None => Explanation::empty(),
    };
    let mut extra = o.constants();
    for f in ctx.facts() {
        f.subject.atom().collect_constants(&mut extra);
    }
    let fw = framework(common, &parsed, extra)?;
    let outcome = explain(&fw, &o, &ctx, search.options()).map_err(|e| Failure::usage(e.to_string()))?;
    let doc = ExplanationsDoc::new(&fw, &outcome, Scope::Context(&ctx));
    emit(common.format, &doc, || doc.text());
    Ok(if outcome.explanations.is_empty() { EXIT_NONE } else { 0 })
}

fn cmd_entail(
    common: &Common,
    observe: &str,
    query: &str,
    mode: ModeArg,
    search: &Search,
) -> Result<u8, Failure> {
    let parsed = load_program(&common.program)?;
    let o = observation(observe)?;
    let q = parse_literals(&literal_text(query)?).map_err(|e| Failure::usage(format!("query {e}")))?;
    let mut extra = o.constants();
    extra.extend(constants_of(q.iter().cloned()));
    let fw = framework(common, &parsed, extra)?;
    let mode = match mode {
        ModeArg::Skeptical => Reasoning::Skeptical,
        ModeArg::Credulous => Reasoning::Credulous,
    };
    match entails(&fw, &o, &q, mode, search.options()) {
        Ok(v) => {
            let doc = serde_json::json!({ "value": v });
            emit(common.format, &doc, || format!("{v:?}\n").to_uppercase());
            Ok(0)
        }
        Err(e @ AbductionError::NoExplanation(_)) => Err(Failure { code: EXIT_NONE, message: e.to_string() }),
        Err(e) => Err(Failure::usage(e.to_string())),
    }
}

fn cmd_classify(
    common: &Common,
    relation: RelationArg,
    o1: &str,
    o2: &str,
    opts: ClassifyOptions,
) -> Result<u8, Failure> {
    let parsed = load_program(&common.program)?;
    let (o1, o2) = (observation(o1)?, observation(o2)?);
    let mut extra = o1.constants();
    extra.extend(o2.constants());
    let fw = framework(common, &parsed, extra)?;
    let relation = match relation {
        RelationArg::SideEffect => Relation::SideEffect,
        RelationArg::Contested => Relation::Contested,
        RelationArg::Relevant => Relation::Relevant,
        RelationArg::Joint => Relation::Joint,
    };
    match classify(&fw, relation, &o1, &o2, opts) {
        Ok(report) => {
            let doc = ReportDoc::new(&report);
            emit(common.format, &doc, || doc.text());
            Ok(if report.is_none() { EXIT_NONE } else { 0 })
        }
        Err(e @ AbductionError::NoPrimaryExplanation(_)) => {
            Err(Failure { code: EXIT_NONE, message: e.to_string() })
        }
        Err(e) => Err(Failure::usage(e.to_string())),
    }
}

fn cmd_fixtures(dir: Option<&Path>, format: FormatArg) -> Result<u8, Failure> {
    let set = match dir {
        Some(d) if !d.is_dir() => return Err(Failure::usage(format!("{}: not a directory", d.display()))),
        Some(d) => FixtureSet::from_dir(d),
        None => FixtureSet::embedded(),
    };
    let rows = run(&set);
    let failed = rows.iter().filter(|r| !r.passed).count();
    match format {
        FormatArg::Structured => print!(
            "{}",
            to_json(&serde_json::json!({ "rows": rows, "passed": rows.len() - failed, "failed": failed }))
        ),
        FormatArg::Text => {
            for r in &rows {
                let mark = if r.passed { paint("PASS", "32") } else { paint("FAIL", "1;31") };
                println!("{mark}  {}", r.name);
                if !r.passed {
                    println!("      {}", r.detail);
                }
            }
            println!("{} passed, {failed} failed", rows.len() - failed);
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_FIXTURES })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Model { common } => cmd_model(common),
        Command::Explain { common, observe, context, search } => {
            cmd_explain(common, observe, context.as_deref(), search)
        }
        Command::Entail { common, observe, query, mode, search } => {
            cmd_entail(common, observe, query, *mode, search)
        }
        Command::Classify { common, relation, o1, o2, literal_strict_possible, search } => {
            let opts = ClassifyOptions {
                explain: search.options(),
                literal_strict_possible: *literal_strict_possible,
            };
            cmd_classify(common, *relation, o1, o2, opts)
        }
        Command::Fixtures { dir, format } => cmd_fixtures(dir.as_deref(), *format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{} {}", paint("error:", "1;31"), f.message);
            ExitCode::from(f.code)
        }
    }
}

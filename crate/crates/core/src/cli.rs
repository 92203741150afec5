//! Command-line front end. Commands write to caller-supplied streams and
//! return the process exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::PartialAlgebra;
use crate::checker::{certify_acceptance, check_partial_rba, AcceptanceCertificate, CheckerVerdict};
use crate::decider::{decide, BoundsReport, Countermodel, DecideError, Decision, DecisionConfig, EngineStats, Verdict};
use crate::prover::{CutMode, SearchBudget};
use crate::syntax::{parse_sequent, parse_sequent_lines, Sequent};

pub const EXIT_INPUT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "bfnl", version, about = "Decide entailments in Boolean full nonassociative Lambek calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the assumptions entail a sequent.
    Decide(DecideArgs),
    /// Run the partial-structure checker on an algebra given as JSON.
    CheckAlgebra {
        path: PathBuf,
    },
    /// Decide every item of a suite file and compare with its expectation.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CutArg {
    Auto,
    Always,
    Never,
}

#[derive(Args, Debug)]
pub struct EngineArgs {
    /// File of assumption sequents, one per line.
    #[arg(long)]
    pub assume: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Largest frame tried by the countermodel search (1 to 5).
    #[arg(long, default_value_t = 2)]
    pub kmax: usize,
    /// Prover depth limit.
    #[arg(long, default_value_t = 30)]
    pub depth: usize,
    /// Antecedent size cap as a multiple of the total input size.
    #[arg(long, default_value_t = 2)]
    pub bunch_cap: usize,
    #[arg(long, value_enum, default_value_t = CutArg::Auto)]
    pub cut: CutArg,
    #[arg(long, default_value_t = 2_000_000)]
    pub max_expansions: u64,
    /// Also run the bounded table enumeration.
    #[arg(long)]
    pub paper_faithful: bool,
    /// Largest universe for the table enumeration.
    #[arg(long, default_value_t = 3)]
    pub size_cap: usize,
    /// Worker threads; 0 means one per core.
    #[arg(long, env = "BFNL_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub no_prover: bool,
    #[arg(long)]
    pub no_frames: bool,
}

impl EngineArgs {
    fn jobs(&self) -> usize {
        match self.jobs {
            0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
            n => n,
        }
    }

    pub fn config(&self) -> DecisionConfig {
        DecisionConfig {
            kmax: self.kmax,
            budget: SearchBudget {
                max_depth: self.depth,
                bunch_cap: self.bunch_cap,
                cut: match self.cut {
                    CutArg::Auto => CutMode::Auto,
                    CutArg::Always => CutMode::Always,
                    CutArg::Never => CutMode::Never,
                },
                max_expansions: self.max_expansions,
            },
            paper_faithful: self.paper_faithful,
            size_cap: self.size_cap,
            jobs: self.jobs(),
            prover: !self.no_prover,
            frames: !self.no_frames,
        }
    }
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    /// The sequent, e.g. "p , (p \ q) => q".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub sequent: Option<String>,
    /// Read goal sequents from a file instead, one per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Lines of the form `<sequent>\texpect:{provable|refuted|unknown}`.
    pub suite: PathBuf,
    #[command(flatten)]
    pub engine: EngineArgs,
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let code = match cli.command {
        Command::Decide(a) => cmd_decide(&a, out, err),
        Command::CheckAlgebra { path } => cmd_check_algebra(&path, out, err),
        Command::Bench(a) => cmd_bench(&a, out, err),
    };
    let _ = out.flush();
    code
}

struct Failure(i32, String);

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn read_sequents(path: &Path) -> Result<Vec<Sequent>, Failure> {
    parse_sequent_lines(&read(path)?)
        .map_err(|(line, e)| Failure(EXIT_INPUT, format!("{}:{line}: {e}", path.display())))
}

fn assumptions(engine: &EngineArgs) -> Result<Vec<Sequent>, Failure> {
    engine.assume.as_deref().map_or(Ok(Vec::new()), read_sequents)
}

fn report(result: Result<i32, Failure>, err: &mut dyn Write) -> i32 {
    result.unwrap_or_else(|Failure(code, msg)| {
        let _ = writeln!(err, "error: {msg}");
        code
    })
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run_one(phi: &[Sequent], goal: &Sequent, cfg: &DecisionConfig) -> Result<Decision, Failure> {
    decide(phi, goal, cfg).map_err(|e| {
        let code = if matches!(e, DecideError::Kmax(_)) { EXIT_INPUT } else { EXIT_INTERNAL };
        Failure(code, format!("{goal}: {e}"))
    })
}

pub fn cmd_decide(args: &DecideArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        let phi = assumptions(&args.engine)?;
        let goals = match (&args.sequent, &args.file) {
            (Some(text), _) => vec![parse_sequent(text).map_err(|e| Failure(EXIT_INPUT, e.to_string()))?],
            (None, Some(path)) => read_sequents(path)?,
            (None, None) => unreachable!("clap requires one input"),
        };
        let cfg = args.engine.config();
        let decisions = goals.iter().map(|g| run_one(&phi, g, &cfg)).collect::<Result<Vec<_>, _>>()?;
        let text = if args.engine.json {
            if decisions.len() == 1 { json(&decisions[0]) } else { json(&decisions) }
        } else {
            decisions.iter().map(render_decision).collect::<Vec<_>>().join("\n")
        };
        writeln!(out, "{text}").map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
        Ok(decisions.iter().map(|d| d.verdict.exit_code()).max().unwrap_or(0))
    })();
    report(result, err)
}

fn render_countermodel(cm: &Countermodel) -> String {
    let mut s = String::new();
    match cm {
        Countermodel::Frame { frame, valuation } => {
            let _ = writeln!(s, "frame with {} points, unit {:?}", frame.points(), frame.unit());
            let triples: Vec<String> = frame.triples().map(|(x, y, z)| format!("({x},{y},{z})")).collect();
            let _ = writeln!(s, "relation {}", triples.join(" "));
            for (v, e) in valuation {
                let _ = writeln!(s, "  {v} = {e:?}");
            }
        }
        Countermodel::Algebra { algebra, valuation } => {
            let _ = writeln!(s, "partial algebra with {} elements", algebra.size);
            let _ = writeln!(s, "{}", json(&algebra.to_json()));
            for (v, e) in valuation {
                let _ = writeln!(s, "  {v} = {e}");
            }
        }
    }
    s
}

fn render_bounds(r: &BoundsReport) -> String {
    json(r)
}

pub fn render_decision(d: &Decision) -> String {
    let mut s = format!("{}: {}\n", d.goal, d.verdict.name());
    match &d.verdict {
        Verdict::Provable { proof, soundness_alarm } => {
            s.push_str(&proof.to_text());
            if let Some(cm) = soundness_alarm {
                s.push_str("warning: a countermodel was also found\n");
                s.push_str(&render_countermodel(cm));
            }
        }
        Verdict::Refuted { countermodel } => s.push_str(&render_countermodel(countermodel)),
        Verdict::Unknown { report } => {
            s.push_str(&render_bounds(report));
            s.push('\n');
        }
    }
    s
}

#[derive(Serialize)]
struct CheckOutput {
    verdict: CheckerVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<AcceptanceCertificate>,
}

pub fn cmd_check_algebra(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        let alg = PartialAlgebra::from_json_str(&read(path)?)
            .map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
        let verdict = check_partial_rba(&alg);
        let certificate = if verdict.accepted {
            Some(certify_acceptance(&alg, &verdict).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?)
        } else {
            None
        };
        let code = if verdict.accepted { 0 } else { 1 };
        writeln!(out, "{}", json(&CheckOutput { verdict, certificate })).map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
        Ok(code)
    })();
    report(result, err)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expect {
    Provable,
    Refuted,
    Unknown,
}

impl Expect {
    fn name(self) -> &'static str {
        match self {
            Expect::Provable => "provable",
            Expect::Refuted => "refuted",
            Expect::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteItem {
    pub sequent: Sequent,
    pub expect: Expect,
}

/// Blank lines and lines starting with `#` are skipped.
pub fn parse_suite(text: &str) -> Result<Vec<SuiteItem>, String> {
    let mut items = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (seq, tag) = line.split_once('\t').ok_or_else(|| format!("line {}: missing tab", i + 1))?;
        let expect = match tag.trim() {
            "expect:provable" => Expect::Provable,
            "expect:refuted" => Expect::Refuted,
            "expect:unknown" => Expect::Unknown,
            other => return Err(format!("line {}: bad expectation `{other}`", i + 1)),
        };
        let sequent = parse_sequent(seq).map_err(|e| format!("line {}: {e}", i + 1))?;
        items.push(SuiteItem { sequent, expect });
    }
    Ok(items)
}

/// One suite item's outcome, with its timing and work counters.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub decision: Decision,
    pub expect: Expect,
    pub millis: f64,
}

impl BenchRow {
    pub fn matches(&self) -> bool {
        self.decision.verdict.name() == self.expect.name()
    }
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub rows: Vec<BenchRow>,
}

impl RunReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| !r.matches()).count()
    }

    pub fn table(&self) -> String {
        let mut s = format!(
            "{:<44} {:>9} {:>9} {:>3} {:>10} {:>10} {:>8}\n",
            "sequent", "expected", "verdict", "ok", "ms", "nodes", "frames"
        );
        for r in &self.rows {
            let EngineStats { prover_expansions, frames_checked, .. } = r.decision.stats;
            let _ = writeln!(
                s,
                "{:<44} {:>9} {:>9} {:>3} {:>10.2} {:>10} {:>8}",
                r.decision.goal.to_string(),
                r.expect.name(),
                r.decision.verdict.name(),
                if r.matches() { "yes" } else { "NO" },
                r.millis,
                prover_expansions,
                frames_checked
            );
        }
        let _ = writeln!(s, "{} items, {} mismatches", self.rows.len(), self.mismatches());
        s
    }
}

#[derive(Serialize)]
struct BenchJson<'a> {
    #[serde(flatten)]
    decision: &'a Decision,
    expected: Expect,
    matches: bool,
}

/// Items run on a pool of `cfg.jobs` workers, each item single-threaded;
/// rows come back in suite order.
pub fn run_suite(items: &[SuiteItem], phi: &[Sequent], cfg: &DecisionConfig) -> Result<RunReport, String> {
    let inner = DecisionConfig { jobs: 1, ..cfg.clone() };
    let one = |item: &SuiteItem| {
        let start = Instant::now();
        let decision = decide(phi, &item.sequent, &inner).map_err(|e| format!("{}: {e}", item.sequent))?;
        Ok(BenchRow { decision, expect: item.expect, millis: start.elapsed().as_secs_f64() * 1e3 })
    };
    let rows = if cfg.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().map_err(|e| e.to_string())?;
        pool.install(|| items.par_iter().map(one).collect::<Result<Vec<_>, String>>())?
    } else {
        items.iter().map(one).collect::<Result<Vec<_>, String>>()?
    };
    Ok(RunReport { rows })
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        let text = read(&args.suite)?;
        let items = parse_suite(&text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", args.suite.display())))?;
        let phi = assumptions(&args.engine)?;
        let report = run_suite(&items, &phi, &args.engine.config()).map_err(|e| Failure(EXIT_INTERNAL, e))?;
        let text = if args.engine.json {
            let rows: Vec<BenchJson> = report
                .rows
                .iter()
                .map(|r| BenchJson { decision: &r.decision, expected: r.expect, matches: r.matches() })
                .collect();
            json(&rows)
        } else {
            report.table()
        };
        writeln!(out, "{text}").map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))?;
        Ok(if report.mismatches() == 0 { 0 } else { EXIT_MISMATCH })
    })();
    report(result, err)
}

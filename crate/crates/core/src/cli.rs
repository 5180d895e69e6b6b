//! Command-line surface.
//!
//! Exit codes: 0 success, 1 I/O or malformed input, 2 precondition mismatch,
//! 3 oracle cap exceeded, 4 verification found unpierced boxes.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{BoundRule, BoundTable};
use crate::error::{Error, Result};
use crate::generators::{gen_extremal_two_line, gen_gadget, gen_random, RandomSpec, GENERATOR_TAG};
use crate::io::{self as files, format_instance, parse_instance, parse_points, Instance, Meta, ReportFile, VerifyReport};
use crate::model::{BoxFamily, TwoLines};
use crate::oracles::{nu_exact, tau_exact, OracleConfig, DEFAULT_ORACLE_CAP};
use crate::pierce::{self, PierceReport, SplitPolicy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_UNPIERCED: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Io { .. } | Error::Parse { .. } | Error::InvalidBox { .. } | Error::InvalidInterval { .. } => EXIT_IO,
        Error::Internal(_) => EXIT_IO,
        _ => EXIT_PRECONDITION,
    }
}

#[derive(Debug, Parser)]
#[command(name = "boxpierce", version, about = "Piercing sets for families of axis-parallel boxes")]
pub struct Cli {
    /// Largest family the exact oracles will accept.
    #[arg(long, global = true, env = "BOXPIERCE_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
    pub cap: usize,

    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Exact packing number and a disjoint witness.
    Nu { instance: Option<PathBuf> },
    /// Exact piercing number and a minimum piercing set.
    Tau { instance: Option<PathBuf> },
    /// Run a piercing algorithm.
    Pierce {
        instance: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Algo::Ddim)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = PolicyArg::Balanced)]
        policy: PolicyArg,
    },
    /// Print a bound table as CSV.
    Bounds { rule: String, max_n: usize, max_d: usize },
    /// Check that every box contains a point. With one argument (or none),
    /// the document must be a `pierce` report carrying its instance.
    Verify {
        instance: Option<PathBuf>,
        points: Option<PathBuf>,
        /// Also compute ν and τ with the exact oracles.
        #[arg(long)]
        oracle: bool,
    },
    /// Fuzz every applicable algorithm against the oracles.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Five-box family with ν = 2 and τ = 3.
    Gadget,
    /// Disjoint gadget copies with ν = n and τ = ⌊3n/2⌋.
    Extremal { n: usize },
    /// Uniform random boxes.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long, default_value_t = 10)]
    pub n_boxes: usize,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 20, allow_hyphen_values = true)]
    pub hi: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub stream: u64,
    /// Force the two-line condition: AXIS C1 C2.
    #[arg(long, num_args = 3, value_names = ["AXIS", "C1", "C2"], allow_hyphen_values = true)]
    pub lines: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub n_boxes: usize,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub lo: i64,
    #[arg(long, default_value_t = 20, allow_hyphen_values = true)]
    pub hi: i64,
    /// Generate two-line instances (lines y = lo + 1/3 span, y = lo + 2/3 span).
    #[arg(long)]
    pub two_line: bool,
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Interval,
    Twoline,
    Planar,
    Ddim,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Interval => "interval",
            Algo::Twoline => "twoline",
            Algo::Planar => "planar",
            Algo::Ddim => "ddim",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Balanced,
    Dp,
}

impl From<PolicyArg> for SplitPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Balanced => SplitPolicy::Balanced,
            PolicyArg::Dp => SplitPolicy::DpOptimal,
        }
    }
}

pub fn run_algo(algo: Algo, policy: SplitPolicy, f: &BoxFamily, cfg: &OracleConfig) -> Result<PierceReport> {
    match algo {
        Algo::Interval => {
            cfg.admit(f)?;
            pierce::pierce_intervals_1d(f)
        }
        Algo::Twoline => pierce::pierce_two_lines(f, cfg),
        Algo::Planar => pierce::pierce_planar(f, policy, cfg),
        Algo::Ddim => pierce::pierce_ddim(f, policy, cfg),
    }
}

/// Standard streams, injectable for tests.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli, io: &mut Io<'_>) -> i32 {
    match execute(&cli, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "boxpierce: {e}");
            exit_code(&e)
        }
    }
}

fn read_input(path: Option<&Path>, io: &mut Io<'_>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| files::io_error(p, e)),
        _ => {
            let mut s = String::new();
            io.stdin.read_to_string(&mut s).map_err(|e| files::io_error(Path::new("<stdin>"), e))?;
            Ok(s)
        }
    }
}

fn emit(cli: &Cli, text: &str, io: &mut Io<'_>) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| files::io_error(path, e)),
        None => io.stdout.write_all(text.as_bytes()).map_err(|e| files::io_error(Path::new("<stdout>"), e)),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<i32> {
    let cfg = OracleConfig::with_cap(cli.cap);
    match &cli.command {
        Command::Gen { kind } => {
            let instance = generate(kind)?;
            emit(cli, &format_instance(&instance), io)?;
            Ok(EXIT_OK)
        }
        Command::Nu { instance } => {
            let inst = parse_instance(&read_input(instance.as_deref(), io)?)?;
            let r = nu_exact(&inst.family, &cfg)?;
            emit(cli, &to_json(&serde_json::json!({ "nu": r.nu, "witness": r.witness })), io)?;
            Ok(EXIT_OK)
        }
        Command::Tau { instance } => {
            let inst = parse_instance(&read_input(instance.as_deref(), io)?)?;
            let r = tau_exact(&inst.family, &cfg)?;
            emit(cli, &to_json(&serde_json::json!({ "tau": r.tau, "witness": r.witness })), io)?;
            Ok(EXIT_OK)
        }
        Command::Pierce { instance, algo, policy } => {
            let inst = parse_instance(&read_input(instance.as_deref(), io)?)?;
            check_algo(*algo, &inst.family)?;
            let policy = SplitPolicy::from(*policy);
            let report = run_algo(*algo, policy, &inst.family, &cfg)?;
            emit(cli, &to_json(&ReportFile::new(algo.name(), policy, &report, &inst)), io)?;
            Ok(EXIT_OK)
        }
        Command::Bounds { rule, max_n, max_d } => {
            let rule: BoundRule = rule.parse()?;
            emit(cli, &BoundTable::build(rule, *max_n, *max_d)?.to_csv(), io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { instance, points, oracle } => {
            let (family, doc) = match (instance, points) {
                (Some(inst), Some(pts)) => {
                    let family = parse_instance(&read_input(Some(inst), io)?)?.family;
                    (family, parse_points(&read_input(Some(pts), io)?)?)
                }
                (single, None) => {
                    let doc = parse_points(&read_input(single.as_deref(), io)?)?;
                    let family = doc
                        .instance
                        .as_ref()
                        .map(|i| i.family.clone())
                        .ok_or_else(|| Error::Precondition("points document carries no instance".into()))?;
                    (family, doc)
                }
                (None, Some(_)) => unreachable!("clap fills positionals in order"),
            };
            let mut report = VerifyReport::check(&family, &doc.points, doc.guarantee)?;
            if *oracle {
                report.nu = Some(nu_exact(&family, &cfg)?.nu);
                report.tau = Some(tau_exact(&family, &cfg)?.tau);
            }
            emit(cli, &to_json(&report), io)?;
            Ok(if report.hits_all { EXIT_OK } else { EXIT_UNPIERCED })
        }
        Command::Bench(args) => {
            let summary = bench(args, &cfg)?;
            emit(cli, &to_json(&summary), io)?;
            Ok(if summary.violations.is_empty() { EXIT_OK } else { EXIT_UNPIERCED })
        }
    }
}

fn check_algo(algo: Algo, f: &BoxFamily) -> Result<()> {
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Precondition(format!("{} {what}", algo.name()))) };
    match algo {
        Algo::Interval => need(f.dim() == 1, "needs a 1-dimensional instance"),
        Algo::Twoline => {
            need(f.dim() == 2, "needs a planar instance")?;
            need(f.lines().is_some(), "needs an instance with lines")
        }
        Algo::Planar => need(f.dim() == 2, "needs a planar instance"),
        Algo::Ddim => Ok(()),
    }
}

fn generate(kind: &GenKind) -> Result<Instance> {
    let meta = |generator: &str, seed, stream, description: &str| Meta {
        generator: Some(generator.to_string()),
        seed,
        stream,
        description: Some(description.to_string()),
    };
    Ok(match kind {
        GenKind::Gadget => Instance::with_meta(gen_gadget(), meta("gadget", None, None, "five-cycle, nu=2, tau=3")),
        GenKind::Extremal { n } => Instance::with_meta(
            gen_extremal_two_line(*n)?,
            meta("extremal", None, None, &format!("nu={n}, tau={}", 3 * n / 2)),
        ),
        GenKind::Random(a) => {
            let mut spec = RandomSpec::new(a.n_boxes, a.dim, (a.lo, a.hi), a.seed).stream(a.stream);
            if let Some(l) = &a.lines {
                let axis = usize::try_from(l[0]).map_err(|_| Error::InvalidSpec("negative line axis".into()))?;
                spec = spec.two_lines(TwoLines { axis, c1: l[1], c2: l[2] });
            }
            Instance::with_meta(gen_random(&spec)?, meta(GENERATOR_TAG, Some(a.seed), Some(a.stream), "uniform random boxes"))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchViolation {
    pub stream: u64,
    pub algo: String,
    pub policy: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgoStats {
    pub algo: String,
    pub policy: String,
    pub runs: usize,
    pub total_points: usize,
    /// Runs where the oracle value was available.
    pub oracle_runs: usize,
    pub total_tau: usize,
    pub max_ratio_to_guarantee: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchSummary {
    pub instances: usize,
    pub stats: Vec<AlgoStats>,
    pub violations: Vec<BenchViolation>,
}

struct RunOutcome {
    algo: Algo,
    policy: SplitPolicy,
    size: usize,
    guarantee: f64,
    tau: Option<usize>,
    violation: Option<String>,
}

fn bench_instance(args: &BenchArgs, cfg: &OracleConfig, stream: u64) -> Result<Vec<RunOutcome>> {
    let mut spec = RandomSpec::new(args.n_boxes, args.dim, (args.lo, args.hi), args.seed).stream(stream);
    if args.two_line {
        if args.dim != 2 {
            return Err(Error::InvalidSpec("two-line bench needs dim 2".into()));
        }
        let span = args.hi - args.lo;
        spec = spec.two_lines(TwoLines::new(1, args.lo + span / 3, args.lo + 2 * span / 3)?);
    }
    let f = gen_random(&spec)?;
    let tau = tau_exact(&f, cfg)?.tau;
    let mut runs: Vec<(Algo, SplitPolicy)> = Vec::new();
    let both = [SplitPolicy::Balanced, SplitPolicy::DpOptimal];
    match f.dim() {
        1 => runs.push((Algo::Interval, SplitPolicy::Balanced)),
        2 => {
            if f.lines().is_some() {
                runs.push((Algo::Twoline, SplitPolicy::Balanced));
            }
            runs.extend(both.map(|p| (Algo::Planar, p)));
        }
        _ => runs.extend(both.map(|p| (Algo::Ddim, p))),
    }
    runs.into_iter()
        .map(|(algo, policy)| {
            let r = run_algo(algo, policy, &f, cfg)?;
            let unhit = f.unhit(&r.points)?;
            let violation = if !unhit.is_empty() {
                Some(format!("boxes {unhit:?} unpierced"))
            } else if r.size() as f64 > r.guarantee + 1e-9 {
                Some(format!("{} points exceed guarantee {}", r.size(), r.guarantee))
            } else if r.size() < tau {
                Some(format!("{} points below tau {tau}", r.size()))
            } else {
                None
            };
            Ok(RunOutcome { algo, policy, size: r.size(), guarantee: r.guarantee, tau: Some(tau), violation })
        })
        .collect()
}

pub fn bench(args: &BenchArgs, cfg: &OracleConfig) -> Result<BenchSummary> {
    let streams: Vec<u64> = (0..args.count as u64).collect();
    let outcomes: Vec<Result<Vec<RunOutcome>>> = if args.parallel {
        streams.par_iter().map(|&s| bench_instance(args, cfg, s)).collect()
    } else {
        streams.iter().map(|&s| bench_instance(args, cfg, s)).collect()
    };
    let mut stats: Vec<AlgoStats> = Vec::new();
    let mut violations = Vec::new();
    for (stream, runs) in streams.iter().zip(outcomes) {
        for run in runs? {
            let (algo, policy) = (run.algo.name().to_string(), run.policy.name().to_string());
            if let Some(reason) = run.violation {
                violations.push(BenchViolation { stream: *stream, algo: algo.clone(), policy: policy.clone(), reason });
            }
            let idx = match stats.iter().position(|s| s.algo == algo && s.policy == policy) {
                Some(i) => i,
                None => {
                    stats.push(AlgoStats {
                        algo,
                        policy,
                        runs: 0,
                        total_points: 0,
                        oracle_runs: 0,
                        total_tau: 0,
                        max_ratio_to_guarantee: 0.0,
                    });
                    stats.len() - 1
                }
            };
            let s = &mut stats[idx];
            s.runs += 1;
            s.total_points += run.size;
            if let Some(t) = run.tau {
                s.oracle_runs += 1;
                s.total_tau += t;
            }
            if run.guarantee > 0.0 {
                s.max_ratio_to_guarantee = s.max_ratio_to_guarantee.max(run.size as f64 / run.guarantee);
            }
        }
    }
    Ok(BenchSummary { instances: args.count, stats, violations })
}

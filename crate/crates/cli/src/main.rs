//! `jm-expand`: class expansions of symmetric functions in Jucys-Murphy elements.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use jm_core::alpha::{conjecture_check, default_alphas, interpolate_in_alpha};
use jm_core::dyck::{leading_b, subleading_b};
use jm_core::hecke::b_expansion_oracle;
use jm_core::numbers::binomial;
use jm_core::partial::{partial_class_expansion, partial_jm_evaluate};
use jm_core::recurrence::{load_cache, save_cache, Engine, Kind};
use jm_core::series::{cycle_series, hook_series, solved_f_series, SolvedShape};
use jm_core::symgroup::{oracle_class_expansion, OracleLimits};
use jm_core::{partitions_of, Error, Partition, SymFunc};

use output::{num, Record};

#[derive(Parser)]
#[command(name = "jm-expand", version, about = "Exact class expansions of symmetric functions in Jucys-Murphy elements")]
struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    /// Coefficient cache file, read before and written after `expand`.
    #[arg(long, global = true, env = "JM_EXPAND_CACHE", value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients from the recurrence engine.
    Expand(ExpandArgs),
    /// Brute-force expansion in a group algebra.
    Oracle(OracleArgs),
    /// Generating series, truncated.
    Series(SeriesArgs),
    /// Leading and subleading terms of the b coefficients.
    Asymptotics(AsymptoticsArgs),
    /// Checks the conjectured α-deformed recurrence at sample values of α.
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["partition", "all_of_size"])))]
struct ExpandArgs {
    /// One of a, b, c, a-power, b-power, d.
    #[arg(long, value_parser = parse_kind)]
    family: Kind,
    #[arg(long)]
    k: usize,
    /// Partition such as "3,1,1"; "-" is the empty partition.
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Partition>,
    /// Tabulate every partition of this size.
    #[arg(long, value_name = "N")]
    all_of_size: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Sym,
    Hecke,
    Partial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    H,
    E,
    P,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    group: Group,
    #[arg(long, value_enum)]
    function: Function,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Compare every coefficient with the recurrence engine.
    #[arg(long)]
    verify_recurrence: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Cycle,
    Hook,
    #[value(name = "F211")]
    F211,
    #[value(name = "F22")]
    F22,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    n: usize,
    #[arg(long, value_name = "K")]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Term {
    Leading,
    Subleading,
}

#[derive(Args)]
struct AsymptoticsArgs {
    #[arg(long, value_enum)]
    which: Term,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long)]
    kmax: usize,
    #[arg(long)]
    nmax: usize,
    /// Comma-separated rationals.
    #[arg(long, value_parser = parse_alphas, default_value = "1/2,1,3/2,2,3,5")]
    alphas: Alphas,
    /// Also fit a polynomial in α through the samples of a^{k,(α)} on this partition, k ≤ kmax.
    #[arg(long, value_parser = parse_partition, value_name = "PARTITION")]
    fit: Option<Partition>,
}

#[derive(Clone)]
struct Alphas(Vec<BigRational>);

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_alphas(s: &str) -> Result<Alphas, String> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<BigRational>().map_err(|_| format!("cannot parse {t:?} as a rational")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Ok(Alphas(default_alphas()));
    }
    Ok(Alphas(v))
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceGuard { .. } => 3,
            Error::NotCentral { .. } | Error::NotBiInvariant { .. } => 4,
            Error::DegenerateGram { .. } | Error::SingularTheta { .. } => 5,
            Error::Cache(_) | Error::Io(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(Record, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = OracleLimits::default();
    let outcome = match &cli.command {
        Command::Expand(args) => cmd_expand(args, cli.cache.as_deref()),
        Command::Oracle(args) => cmd_oracle(args, &limits),
        Command::Series(args) => cmd_series(args),
        Command::Asymptotics(args) => cmd_asymptotics(args),
        Command::Conjecture(args) => cmd_conjecture(args, &limits),
    };
    match outcome {
        Ok((record, ok)) => {
            if cli.json {
                println!("{}", record.to_json());
            } else {
                print!("{}", record.to_text());
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_expand(args: &ExpandArgs, cache: Option<&std::path::Path>) -> CmdResult {
    let engine = Engine::new();
    if let Some(path) = cache {
        load_cache(&engine, path)?;
    }
    let targets = match (&args.partition, args.all_of_size) {
        (Some(p), _) => vec![p.clone()],
        (None, Some(n)) => partitions_of(n),
        (None, None) => unreachable!("clap requires one target"),
    };
    let rows = targets
        .iter()
        .map(|lam| (lam.clone(), engine.coeff(args.family, args.k, lam)))
        .collect::<Vec<_>>();
    if let Some(path) = cache {
        save_cache(&engine, path)?;
    }
    let mut params = vec![("family", json!(args.family.tag())), ("k", num(args.k))];
    match (&args.partition, args.all_of_size) {
        (Some(p), _) => params.push(("partition", json!(p))),
        (_, Some(n)) => params.push(("all_of_size", num(n))),
        _ => {}
    }
    let mut record = Record::new("expand", params);
    record.table(
        &["partition", "value"],
        rows.iter().map(|(lam, v)| vec![json!(lam), num(v)]).collect(),
    );
    Ok((record, true))
}

fn symfunc(f: Function, k: usize) -> SymFunc {
    match f {
        Function::H => SymFunc::Complete(k),
        Function::E => SymFunc::Elementary(k),
        Function::P => SymFunc::PowerSum(k),
    }
}

/// Value the engine (or the elementary-function formula) predicts for the symmetric group
/// or the Hecke setting.
fn predicted(engine: &Engine, group: Group, f: Function, k: usize, lam: &Partition) -> BigInt {
    let kind = match (group, f) {
        (_, Function::E) => return BigInt::from(u8::from(lam.rank() == k)),
        (Group::Hecke, Function::H) => Kind::B,
        (Group::Hecke, Function::P) => Kind::BPower,
        (_, Function::H) => Kind::A,
        (_, Function::P) => Kind::APower,
    };
    engine.coeff(kind, k, lam)
}

fn cmd_oracle(args: &OracleArgs, limits: &OracleLimits) -> CmdResult {
    let f = symfunc(args.function, args.k);
    let group = args.group;
    let rows: Vec<(Partition, BigInt)> = match group {
        Group::Sym => oracle_class_expansion(&f, args.n, limits)?
            .entries()
            .map(|(l, v)| (l.clone(), v.clone()))
            .collect(),
        Group::Hecke => b_expansion_oracle(&f, args.n, limits)?
            .entries()
            .map(|(l, v)| (l.clone(), v.clone()))
            .collect(),
        Group::Partial => partial_class_expansion(&partial_jm_evaluate(&f, args.n, limits)?, args.n)?,
    };
    let params = vec![
        ("group", json!(group_name(group))),
        ("function", json!(function_name(args.function))),
        ("k", num(args.k)),
        ("n", num(args.n)),
    ];
    let mut record = Record::new("oracle", params);
    record.table(
        &["partition", "value"],
        rows.iter().map(|(lam, v)| vec![json!(lam), num(v)]).collect(),
    );
    if !args.verify_recurrence {
        return Ok((record, true));
    }
    let engine = Engine::new();
    let mut mismatches = Vec::new();
    let mut compare = |lam: &Partition, oracle: BigInt, engine_value: BigInt| {
        if oracle != engine_value {
            mismatches.push(json!({"partition": lam, "oracle": oracle.to_string(), "engine": engine_value.to_string()}));
        }
    };
    match group {
        Group::Sym | Group::Hecke => {
            for (lam, v) in &rows {
                compare(lam, v.clone(), predicted(&engine, group, args.function, args.k, lam));
            }
        }
        Group::Partial => {
            let c = |lam: &Partition| rows.iter().find(|(l, _)| l == lam).map(|(_, v)| v.clone()).unwrap_or_default();
            if matches!(args.function, Function::H) {
                for (lam, v) in &rows {
                    compare(lam, v.clone(), engine.c_coeff(args.k, lam));
                }
            }
            // project to S_n: a_ρ = Σ_i c_{ρ̄ ∪ 1^i} C(m_1(ρ), i)
            for rho in partitions_of(args.n) {
                let (bar, m) = rho.strip_ones();
                let projected: BigInt = (0..=m).map(|i| binomial(m, i) * c(&bar.with_ones(i))).sum();
                compare(&rho, projected, predicted(&engine, Group::Sym, args.function, args.k, &rho));
            }
        }
    }
    let ok = mismatches.is_empty();
    record.field("verify_recurrence", json!(if ok { "pass" } else { "fail" }));
    record.field("mismatches", Value::Array(mismatches));
    Ok((record, ok))
}

fn group_name(g: Group) -> &'static str {
    match g {
        Group::Sym => "sym",
        Group::Hecke => "hecke",
        Group::Partial => "partial",
    }
}

fn function_name(f: Function) -> &'static str {
    match f {
        Function::H => "h",
        Function::E => "e",
        Function::P => "p",
    }
}

fn cmd_series(args: &SeriesArgs) -> CmdResult {
    let (name, series) = match args.which {
        Which::Cycle => ("cycle", cycle_series(args.n, args.order)?),
        Which::Hook => ("hook", hook_series(args.n, args.order)?),
        Which::F211 => ("F211", solved_f_series(SolvedShape::TwoOnes, args.n, args.order)?),
        Which::F22 => ("F22", solved_f_series(SolvedShape::Two, args.n, args.order)?),
    };
    let mut record = Record::new(
        "series",
        vec![("which", json!(name)), ("n", num(args.n)), ("order", num(args.order))],
    );
    record.field(
        "coefficients",
        Value::Array(series.coeffs().iter().map(num).collect()),
    );
    record.text_line(series.to_string());
    Ok((record, true))
}

fn cmd_asymptotics(args: &AsymptoticsArgs) -> CmdResult {
    let mu = &args.partition;
    if mu.is_empty() {
        return Err(Error::InvalidInput("the partition must be nonempty".into()).into());
    }
    let (name, k, value) = match args.which {
        Term::Leading => ("leading", mu.rank(), leading_b(mu)),
        Term::Subleading => ("subleading", mu.rank() + 1, subleading_b(mu)),
    };
    let engine_value = Engine::new().b_coeff(k, mu);
    let mut record = Record::new("asymptotics", vec![("which", json!(name)), ("partition", json!(mu))]);
    record.field("value", num(&value));
    record.field("k", num(k));
    record.field("b_coeff", num(&engine_value));
    let ok = value == engine_value;
    Ok((record, ok))
}

fn cmd_conjecture(args: &ConjectureArgs, limits: &OracleLimits) -> CmdResult {
    let alphas = &args.alphas.0;
    let report = conjecture_check(args.kmax, args.nmax, alphas, limits)?;
    let mut record = Record::new(
        "conjecture",
        vec![
            ("kmax", num(args.kmax)),
            ("nmax", num(args.nmax)),
            ("alphas", Value::Array(alphas.iter().map(num).collect())),
        ],
    );
    record.table(
        &["alpha", "n", "k", "rho", "m", "lhs", "rhs", "pass"],
        report
            .iter()
            .map(|r| {
                vec![
                    num(&r.alpha),
                    num(r.n),
                    num(r.k),
                    json!(r.rho),
                    num(r.m),
                    num(&r.lhs),
                    num(&r.rhs),
                    json!(r.pass),
                ]
            })
            .collect(),
    );
    let failures = report.iter().filter(|r| !r.pass).count();
    record.field("instances", num(report.len()));
    record.field("failures", num(failures));
    if let Some(mu) = &args.fit {
        let mut fits = Vec::new();
        for k in 0..=args.kmax {
            let poly = interpolate_in_alpha(k, mu, alphas, limits)?;
            fits.push(json!({"k": k.to_string(), "polynomial": poly.to_string().replace('t', "alpha")}));
        }
        record.field("empirical_fit", json!({"partition": mu, "fits": fits}));
    }
    Ok((record, failures == 0))
}

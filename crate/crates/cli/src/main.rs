use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use hive_lr::classify::{gty_mf, multiplicity_witness, skew_product_mf, stembridge_mf, MfReport, MfVerdict};
use hive_lr::expansion::{product_expansion, skew_expansion, Expansion, ExpansionReport, Method, Query};
use hive_lr::hive::{enumerate_lr_hives, lr_coefficient_hive};
use hive_lr::sweep::{verify_sweep, Family};
use hive_lr::tableau::lr_tableau_count;
use hive_lr::witness::{witness, Params, Witness};
use hive_lr::{Hive, Partition, SkewShape};
use serde::Serialize;

const DEFAULT_MAX_WEIGHT: usize = 40;

/// Littlewood-Richardson coefficients by hive enumeration, with
/// multiplicity-free classifiers.
#[derive(Parser)]
#[command(name = "hive-lr", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Hive,
    Tableau,
    Both,
}

impl Engine {
    fn methods(self) -> Vec<Method> {
        match self {
            Engine::Hive => vec![Method::Hive],
            Engine::Tableau => vec![Method::Tableau],
            Engine::Both => vec![Method::Hive, Method::Tableau],
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// One coefficient c^lambda_{mu nu}.
    Lrcoef {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Engine::Hive)]
        method: Engine,
    },
    /// Schur expansion of s_mu s_nu.
    Product {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Engine::Hive)]
        method: Engine,
    },
    /// Schur expansion of the skew function s_{lambda/mu}.
    Skew {
        /// OUTER/INNER, e.g. 6^2,4^2,2^2/3^3
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_enum, default_value_t = Engine::Hive)]
        method: Engine,
    },
    /// Multiplicity-free verdict from the structural classification.
    Mf {
        #[command(subcommand)]
        target: MfTarget,
    },
    /// Builds and verifies a witness triple, e.g. `witness T1 --params a=3,b=2,c=1,d=2,e=1`.
    Witness {
        /// Q1..Q3, T1..T3, T1i..T3ii, U1i..U3ii
        case: String,
        #[arg(long)]
        params: Params,
    },
    /// Counts (and optionally prints) the LR-hives for a boundary.
    Hives {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Hive side; defaults to max(l(lambda), l(mu) + l(nu)).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        dump: bool,
    },
    /// Differential sweep of a classifier against enumeration.
    Verify {
        #[arg(long)]
        family: Family,
        /// MxN: parts at most M, at most N rows.
        #[arg(long = "box")]
        bounds: BoxSize,
        /// Check a seeded random sample of this size instead of everything.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Engine::Hive)]
        method: Engine,
    },
}

#[derive(Subcommand)]
enum MfTarget {
    /// s_mu s_nu
    Product {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Also expand and fail if enumeration disagrees.
        #[arg(long)]
        check: bool,
    },
    /// s_{lambda/mu} for a basic shape
    Skew {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        check: bool,
    },
    /// s_theta s_phi for basic shapes
    SkewProduct {
        #[arg(long)]
        theta: SkewShape,
        #[arg(long)]
        phi: SkewShape,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy)]
struct BoxSize {
    m: usize,
    n: usize,
}

impl FromStr for BoxSize {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (m, n) = s.split_once(['x', 'X']).ok_or("expected MxN, e.g. 3x3")?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad box size {s:?}"));
        Ok(BoxSize { m: num(m)?, n: num(n)? })
    }
}

enum Failure {
    Usage(String),
    Disagreement(String),
}

type Outcome = Result<String, (String, Failure)>;

fn usage(msg: impl Into<String>) -> (String, Failure) {
    (String::new(), Failure::Usage(msg.into()))
}

fn max_weight() -> Result<usize, (String, Failure)> {
    match std::env::var("HIVE_LR_MAX_WEIGHT") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("HIVE_LR_MAX_WEIGHT={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT),
    }
}

fn check_weight(weight: usize) -> Result<(), (String, Failure)> {
    let cap = max_weight()?;
    if weight > cap {
        return Err(usage(format!("weight {weight} exceeds HIVE_LR_MAX_WEIGHT={cap}")));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output") + "\n"
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = match run(&cli) {
        Ok(out) => (out, 0),
        Err((out, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            (out, 2)
        }
        Err((out, Failure::Disagreement(msg))) => {
            eprintln!("disagreement: {msg}");
            (out, 1)
        }
    };
    print!("{out}");
    ExitCode::from(code)
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Lrcoef { lambda, mu, nu, method } => lrcoef(json, lambda, mu, nu, *method),
        Command::Product { mu, nu, method } => {
            check_weight(mu.weight() + nu.weight())?;
            let query = Query::Product { mu: mu.clone(), nu: nu.clone() };
            expansions(json, query, *method, |m| product_expansion(mu, nu, m))
        }
        Command::Skew { shape, method } => {
            check_weight(shape.outer().weight())?;
            let query = Query::Skew { outer: shape.outer().clone(), inner: shape.inner().clone() };
            expansions(json, query, *method, |m| skew_expansion(shape, m))
        }
        Command::Mf { target } => mf(json, target),
        Command::Witness { case, params } => witness_cmd(json, case, params),
        Command::Hives { lambda, mu, nu, n, dump } => hives(json, lambda, mu, nu, *n, *dump),
        Command::Verify { family, bounds, sample, seed, method } => {
            let weight = bounds.m * bounds.n * if *family == Family::Products { 2 } else { 1 };
            check_weight(weight)?;
            let mut out = String::new();
            let mut reports = Vec::new();
            for m in method.methods() {
                let report = verify_sweep(*family, bounds.m, bounds.n, *sample, *seed, m);
                if !json {
                    out += &report.to_string();
                }
                reports.push(report);
            }
            if json {
                out = if reports.len() == 1 { to_json(&reports[0]) } else { to_json(&reports) };
            }
            let bad: usize = reports.iter().map(|r| r.disagree).sum();
            if bad > 0 {
                return Err((out, Failure::Disagreement(format!("{bad} verdicts disagree with enumeration"))));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct CoefReport<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    hive: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tableau: Option<u64>,
}

fn lrcoef(json: bool, lambda: &Partition, mu: &Partition, nu: &Partition, engine: Engine) -> Outcome {
    check_weight(lambda.weight().max(mu.weight() + nu.weight()))?;
    let mut report = CoefReport { lambda, mu, nu, hive: None, tableau: None };
    for m in engine.methods() {
        match m {
            Method::Hive => report.hive = Some(lr_coefficient_hive(lambda, mu, nu)),
            Method::Tableau => report.tableau = Some(lr_tableau_count(lambda, mu, nu)),
        }
    }
    let out = if json {
        to_json(&report)
    } else {
        match (report.hive, report.tableau) {
            (Some(h), Some(t)) => format!("hive: {h}\ntableau: {t}\n"),
            (Some(c), None) | (None, Some(c)) => format!("{c}\n"),
            (None, None) => unreachable!("at least one engine runs"),
        }
    };
    match (report.hive, report.tableau) {
        (Some(h), Some(t)) if h != t => Err((out, Failure::Disagreement(format!("hive count {h}, tableau count {t}")))),
        _ => Ok(out),
    }
}

fn expansions(json: bool, query: Query, engine: Engine, expand: impl Fn(Method) -> Expansion) -> Outcome {
    let results: Vec<(Method, Expansion)> = engine.methods().into_iter().map(|m| (m, expand(m))).collect();
    let out = if json {
        let reports: Vec<_> = results.iter().map(|(m, e)| ExpansionReport::new(query.clone(), *m, e)).collect();
        if reports.len() == 1 {
            to_json(&reports[0])
        } else {
            to_json(&reports)
        }
    } else {
        let mut out = String::new();
        for (m, e) in &results {
            if results.len() > 1 {
                write!(out, "{m}: ").unwrap();
            }
            writeln!(out, "{e}").unwrap();
        }
        writeln!(out, "max multiplicity: {}", results[0].1.max_multiplicity()).unwrap();
        out
    };
    if results.windows(2).any(|w| w[0].1 != w[1].1) {
        return Err((out, Failure::Disagreement("hive and tableau expansions differ".into())));
    }
    Ok(out)
}

fn mf(json: bool, target: &MfTarget) -> Outcome {
    let not_basic = |e: hive_lr::Error| usage(e.to_string());
    let (verdict, check, expand): (MfVerdict, bool, Box<dyn Fn() -> Expansion + '_>) = match target {
        MfTarget::Product { mu, nu, check } => {
            (stembridge_mf(mu, nu), *check, Box::new(move || product_expansion(mu, nu, Method::Hive)))
        }
        MfTarget::Skew { shape, check } => {
            (gty_mf(shape).map_err(not_basic)?, *check, Box::new(move || skew_expansion(shape, Method::Hive)))
        }
        MfTarget::SkewProduct { theta, phi, check } => (
            skew_product_mf(theta, phi).map_err(not_basic)?,
            *check,
            Box::new(move || skew_expansion(&theta.join(phi), Method::Hive)),
        ),
    };
    let weight = match target {
        MfTarget::Product { mu, nu, .. } => mu.weight() + nu.weight(),
        MfTarget::Skew { shape, .. } => shape.outer().weight(),
        MfTarget::SkewProduct { theta, phi, .. } => theta.join(phi).outer().weight(),
    };
    let expansion = if check || !verdict.multiplicity_free {
        check_weight(weight)?;
        Some(expand())
    } else {
        None
    };
    let witness = expansion.as_ref().and_then(multiplicity_witness);
    let report = MfReport::new(verdict.clone(), witness.clone());
    let mut out = if json {
        to_json(&report)
    } else if verdict.multiplicity_free {
        let cases: Vec<String> = verdict.cases.iter().map(ToString::to_string).collect();
        format!("multiplicity-free ({})\n", cases.join(", "))
    } else {
        "not multiplicity-free\n".to_string()
    };
    if !json {
        if let Some((p, c)) = &witness {
            writeln!(out, "witness: s({p}) with coefficient {c}").unwrap();
        }
    }
    if let Some(e) = &expansion {
        let enumerated = e.is_multiplicity_free();
        if check && !json {
            writeln!(out, "check: enumeration gives max multiplicity {}", e.max_multiplicity()).unwrap();
        }
        if enumerated != verdict.multiplicity_free {
            let msg = format!("classifier says {}, enumeration gives max multiplicity {}", verdict.multiplicity_free, e.max_multiplicity());
            return Err((out, Failure::Disagreement(msg)));
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct WitnessReport<'a> {
    #[serde(flatten)]
    witness: &'a Witness,
    coefficient: u64,
    verified: bool,
}

fn witness_cmd(json: bool, case: &str, params: &Params) -> Outcome {
    let w = witness(case, params).map_err(|e| usage(e.to_string()))?;
    check_weight(w.lambda.weight())?;
    let coefficient = w.coefficient();
    let verified = w.expected.holds(coefficient);
    let out = if json {
        to_json(&WitnessReport { witness: &w, coefficient, verified })
    } else {
        format!(
            "case {}: lambda=({}) mu=({}) nu=({})\nconstructed: {}\ncoefficient: {} (expected {})\n",
            w.case, w.lambda, w.mu, w.nu, w.constructed, coefficient, w.expected
        )
    };
    if !verified {
        let msg = format!("{} witness has coefficient {coefficient}, expected {}", w.case, w.expected);
        return Err((out, Failure::Disagreement(msg)));
    }
    Ok(out)
}

#[derive(Serialize)]
struct HiveReport<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    n: usize,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    hives: Option<&'a [Hive]>,
}

fn hives(json: bool, lambda: &Partition, mu: &Partition, nu: &Partition, n: Option<usize>, dump: bool) -> Outcome {
    check_weight(lambda.weight().max(mu.weight() + nu.weight()))?;
    let n = n.unwrap_or_else(|| lambda.len().max(mu.len() + nu.len()).max(1));
    let all = enumerate_lr_hives(lambda, mu, nu, n).map_err(|e| usage(e.to_string()))?;
    if json {
        let report = HiveReport { lambda, mu, nu, n, count: all.len(), hives: dump.then_some(&all[..]) };
        return Ok(to_json(&report));
    }
    let mut out = format!("{} LR-hives with n={n}\n", all.len());
    if dump {
        for h in &all {
            write!(out, "\n{h}").unwrap();
        }
    }
    Ok(out)
}

mod output;

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use symrank::bounds::{
    applicable_priors, closed_form, compare_all, constructive_bound, prior_report, tabulate, BoundReport, FieldKind,
};
use symrank::curves::{family_data, genus_x0, CurveFamily};
use symrank::mult::{self, emit_tensor, plan_evaluation, verify, MultError, VerifyMode, DEFAULT_SEED};
use symrank::primes::{verify_gaps, Alpha, GapPolicy, DEFAULT_SIEVE_LIMIT};
use symrank::{ff::GaloisField, selftest};

use output::{to_csv, to_text, Format};

#[derive(Parser, Debug)]
#[command(name = "symrank", version, about = "Symmetric tensor rank bounds and genus-0 multiplication algorithms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Sieve range backing the empirical gap policy.
    #[arg(long, default_value_t = DEFAULT_SIEVE_LIMIT, global = true)]
    sieve_limit: u64,
    /// Seed for randomized verification.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    P,
    P2,
}

impl From<FieldArg> for FieldKind {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::P => FieldKind::Prime,
            FieldArg::P2 => FieldKind::Quadratic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Constructive,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Dudek,
    Bhp,
    Empirical,
}

#[derive(Args, Debug)]
struct PolicyOpts {
    /// Gap policy.
    #[arg(long, value_enum, default_value_t = PolicyArg::Dudek)]
    policy: PolicyArg,
    /// Gap exponent for the empirical policy, as c/d.
    #[arg(long)]
    alpha: Option<Alpha>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Upper bound on the symmetric rank for one (p, n).
    Bound {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = FieldArg::P2)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[command(flatten)]
        policy: PolicyOpts,
    },
    /// Bounds for a grid of (p, n).
    Table {
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', required = true)]
        p_set: Vec<u64>,
        /// A:B:STEP, inclusive of A and of B when reached.
        #[arg(long)]
        n_range: String,
        #[command(flatten)]
        policy: PolicyOpts,
    },
    /// Prime gaps exceeding l^alpha below a limit.
    Gaps {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value = "2/3")]
        alpha: Alpha,
        /// Include wall-clock time in the output.
        #[arg(long)]
        timing: bool,
    },
    /// Genus data of X_0(N) or of a family curve.
    Genus {
        #[arg(long = "N", conflicts_with_all = ["family", "l", "p"])]
        level: Option<u64>,
        #[arg(long, requires_all = ["l", "p"])]
        family: Option<String>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Build and verify a multiplication algorithm for F_{q^n} over F_q.
    Mult {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        /// Allow degree-2 places.
        #[arg(long)]
        allow_deg2: bool,
        /// Write the decomposition as JSON.
        #[arg(long)]
        emit_tensor: Option<String>,
        /// exhaustive | random | random:N | auto
        #[arg(long, default_value = "auto")]
        verify: VerifyMode,
    },
    /// All applicable bounds for (p, n), smallest first.
    Compare {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        policy: PolicyOpts,
    },
    /// Run the invariant suites.
    Selftest,
}

/// A failed run: exit code and structured reason.
struct Failure {
    code: u8,
    body: Value,
}

impl Failure {
    fn usage(reason: impl ToString) -> Self {
        Self {
            code: 1,
            body: json!({"error": "usage", "reason": reason.to_string()}),
        }
    }

    fn infeasible(reason: impl ToString) -> Self {
        Self {
            code: 2,
            body: json!({"error": "infeasible", "reason": reason.to_string()}),
        }
    }

    fn report<T: Serialize>(code: u8, error: &str, report: &T) -> Self {
        let mut body = serde_json::to_value(report).expect("report serializes");
        if let Value::Object(map) = &mut body {
            map.insert("error".into(), json!(error));
            map.entry("reason").or_insert_with(|| json!(error));
        }
        Self { code, body }
    }
}

enum Output {
    Value(Value),
    Rows(Vec<BoundReport>, Value),
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output serializes")
}

fn make_policy(opts: &PolicyOpts, sieve_limit: u64) -> Result<GapPolicy, Failure> {
    match (opts.policy, opts.alpha) {
        (PolicyArg::Dudek, None) => Ok(GapPolicy::dudek()),
        (PolicyArg::Bhp, None) => Ok(GapPolicy::bhp()),
        (PolicyArg::Dudek | PolicyArg::Bhp, Some(_)) => {
            Err(Failure::usage("--alpha applies only to --policy empirical"))
        }
        (PolicyArg::Empirical, alpha) => GapPolicy::empirical(alpha.unwrap_or(Alpha::TWO_THIRDS), sieve_limit)
            .map(|(p, _)| p)
            .map_err(Failure::usage),
    }
}

fn parse_range(s: &str) -> Result<Vec<u64>, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    let nums: Result<Vec<u64>, _> = parts.iter().map(|t| t.trim().parse::<u64>()).collect();
    match nums.as_deref() {
        Ok([a, b, step]) if *step > 0 && a <= b => Ok((*a..=*b).step_by(*step as usize).collect()),
        Ok([a, b]) if a <= b => Ok((*a..=*b).collect()),
        _ => Err(Failure::usage(format!("bad --n-range {s:?}; expected A:B:STEP with A <= B"))),
    }
}

fn run_bound(p: u64, n: u64, field: FieldKind, method: MethodArg, policy: &GapPolicy) -> Result<Output, Failure> {
    let closed = || closed_form(p, n, field, policy).map_err(Failure::infeasible);
    let constructive = || constructive_bound(p, n, field, policy).map_err(Failure::infeasible);
    match method {
        MethodArg::Closed => {
            let r = closed()?;
            Ok(Output::Rows(vec![r.clone()], value(&r)))
        }
        MethodArg::Constructive => match constructive()? {
            Ok(r) => Ok(Output::Rows(vec![r.clone()], value(&r))),
            Err(inf) => Err(Failure::report(2, "infeasible", &inf)),
        },
        MethodArg::All => {
            let mut rows = vec![closed()?];
            if let Ok(r) = constructive()? {
                rows.push(r);
            }
            for (v, q) in applicable_priors(p, field) {
                rows.push(prior_report(v, q, p, n, field).map_err(Failure::infeasible)?);
            }
            let v = value(&rows);
            Ok(Output::Rows(rows, v))
        }
    }
}

fn run_genus(level: Option<u64>, family: Option<String>, l: Option<u64>, p: Option<u64>) -> Result<Output, Failure> {
    if let Some(level) = level {
        return genus_x0(level)
            .map(|d| Output::Value(value(&d)))
            .map_err(Failure::infeasible);
    }
    let (Some(family), Some(l), Some(p)) = (family, l, p) else {
        return Err(Failure::usage("give either --N or all of --family, --l, --p"));
    };
    let wanted = match family.as_str() {
        "11l" => CurveFamily::ElevenL,
        "23l" => CurveFamily::TwentyThreeL,
        other => return Err(Failure::usage(format!("unknown family {other:?}; expected 11l or 23l"))),
    };
    if CurveFamily::for_characteristic(p) != wanted {
        return Err(Failure::infeasible(format!(
            "family {family} is not the one used at p = {p}"
        )));
    }
    family_data(p, l)
        .map(|d| Output::Value(value(&d)))
        .map_err(Failure::infeasible)
}

fn run_mult(
    q: u64,
    n: usize,
    allow_deg2: bool,
    emit: Option<String>,
    mode: VerifyMode,
    seed: u64,
) -> Result<Output, Failure> {
    let f = GaloisField::new(q).map_err(Failure::usage)?;
    let plan = plan_evaluation(&f, n, allow_deg2).map_err(|e| match e {
        MultError::DegreeTooSmall(_) => Failure::usage(e),
        other => Failure::infeasible(other),
    })?;
    let algo = mult::build_algorithm(&f, &plan).map_err(Failure::infeasible)?;
    let report = match verify(&algo, mode, seed) {
        Ok(r) => r,
        Err(MultError::Mismatch(m)) => {
            return Err(Failure {
                code: 3,
                body: json!({"error": "verification", "reason": "bilinear identity fails", "pair": value(&*m)}),
            })
        }
        Err(e) => return Err(Failure::infeasible(e)),
    };
    if let Some(path) = &emit {
        fs::write(path, emit_tensor(&algo) + "\n")
            .map_err(|e| Failure::usage(format!("cannot write {path}: {e}")))?;
    }
    Ok(Output::Value(json!({
        "q": q,
        "n": n,
        "seed": seed,
        "modulus": algo.extension().modulus(),
        "plan": value(&plan),
        "rank": algo.rank(),
        "ledger": value(&algo.ledger()),
        "verification": value(&report),
    })))
}

fn dispatch(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Bound {
            p,
            n,
            field,
            method,
            policy,
        } => {
            let policy = make_policy(&policy, cli.sieve_limit)?;
            run_bound(p, n, field.into(), method, &policy)
        }
        Command::Table { p_set, n_range, policy } => {
            let ns = parse_range(&n_range)?;
            let policy = make_policy(&policy, cli.sieve_limit)?;
            let rows = tabulate(&p_set, &ns, &policy).map_err(Failure::infeasible)?;
            let v = value(&rows);
            Ok(Output::Rows(rows, v))
        }
        Command::Gaps { limit, alpha, timing } => {
            let start = Instant::now();
            let report = verify_gaps(limit, alpha).map_err(Failure::usage)?;
            let mut v = value(&report);
            v["verified_floor"] = json!(report.verified_floor());
            if timing {
                v["runtime_ms"] = json!(start.elapsed().as_millis() as u64);
            }
            Ok(Output::Value(v))
        }
        Command::Genus { level, family, l, p } => run_genus(level, family, l, p),
        Command::Mult {
            q,
            n,
            allow_deg2,
            emit_tensor,
            verify,
        } => run_mult(q, n, allow_deg2, emit_tensor, verify, cli.seed),
        Command::Compare { p, n, policy } => {
            let policy = make_policy(&policy, cli.sieve_limit)?;
            compare_all(p, n, &policy)
                .map(|r| Output::Value(value(&r)))
                .map_err(Failure::infeasible)
        }
        Command::Selftest => {
            let report = selftest::run(cli.seed);
            if report.passed {
                Ok(Output::Value(value(&report)))
            } else {
                let failed: Vec<&str> = report
                    .suites
                    .iter()
                    .filter(|s| !s.passed)
                    .map(|s| s.name.as_str())
                    .collect();
                let mut f = Failure::report(3, "verification", &report);
                f.body["reason"] = json!(format!("failed suites: {}", failed.join(", ")));
                Err(f)
            }
        }
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Text => to_text(v),
        _ => serde_json::to_string_pretty(v).expect("json") + "\n",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let reason = e.kind().to_string();
            let detail = e.to_string();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"error": "usage", "reason": reason, "detail": detail.trim_end()}))
                    .expect("json")
            );
            return ExitCode::from(1);
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(Output::Rows(rows, v)) => {
            if format == Format::Csv {
                match to_csv(&rows) {
                    Ok(s) => print!("{s}"),
                    Err(e) => {
                        print!("{}", render(&Failure::usage(e).body, Format::Json));
                        return ExitCode::from(1);
                    }
                }
            } else {
                print!("{}", render(&v, format));
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Value(v)) => {
            if format == Format::Csv {
                let f = Failure::usage("--format csv is available for bound and table only");
                print!("{}", render(&f.body, Format::Json));
                return ExitCode::from(f.code);
            }
            print!("{}", render(&v, format));
            ExitCode::SUCCESS
        }
        Err(f) => {
            let fmt = if format == Format::Csv { Format::Json } else { format };
            print!("{}", render(&f.body, fmt));
            ExitCode::from(f.code)
        }
    }
}

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commvar::commscheme::{self, MdegMethod};
use commvar::hecke::{self, CenterElement};
use commvar::kernel::format::rational_string;
use commvar::kernel::LaurentPoly;
use commvar::lattice::{self, WeightScheme, DEFAULT_STATE_BUDGET};
use commvar::perm::Perm;
use commvar::shuffle;
use commvar::symfunc::Partition;
use commvar::verify::{self, VerifyOptions};
use commvar::Error;

/// Largest grade for commands that work with polynomials in x_1..x_n.
const MAX_POLY_GRADE: usize = 8;
/// Largest grid handled by the transfer sweep.
const MAX_GRID: usize = 15;

#[derive(Parser)]
#[command(name = "commvar", version, about = "Exact invariants of commuting schemes, Hecke centers and shuffle algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "COMMVAR_WORKERS", default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// K-polynomial K_n of the commuting scheme.
    Kpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KpolyMethod::Recurrence)]
        method: KpolyMethod,
        /// Print the coefficient table of K_n at x_i = 1 instead.
        #[arg(long)]
        x1: bool,
    },
    /// Multidegree D_n.
    Mdeg {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MdegChoice::Lattice)]
        method: MdegChoice,
    },
    /// Degree of the commuting scheme.
    Degree {
        /// A single n.
        #[arg(long, conflicts_with = "upto", required_unless_present = "upto")]
        n: Option<usize>,
        /// Every n from 1 up to this value, one per line.
        #[arg(long)]
        upto: Option<usize>,
        #[arg(long, value_enum, default_value_t = DegreeMethod::Dp)]
        method: DegreeMethod,
        /// Cap on live frontier states in the sweep.
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        max_states: usize,
    },
    /// Partition function f(c) of a central element, or F_v for one connectivity.
    Pf {
        #[arg(long)]
        n: Option<usize>,
        /// Use A_λ = A_λ1 * ⋯ * A_λm.
        #[arg(long, conflicts_with = "element")]
        lambda: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Element::One)]
        element: Element,
        /// Connectivity v (one-line notation); prints F_v with general weights.
        #[arg(long, conflicts_with_all = ["lambda", "n"])]
        perm: Option<Perm>,
    },
    /// Shuffle-algebra element ε_λ(q_k).
    Epsilon {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Shuffle-algebra element κ_n.
    Kappa {
        #[arg(long)]
        n: usize,
    },
    /// Lattice-path configurations with a given connectivity.
    Configs {
        /// Connectivity (one-line notation); defaults to the identity of size n.
        #[arg(long, required_unless_present = "n")]
        perm: Option<Perm>,
        #[arg(long, conflicts_with = "perm")]
        n: Option<usize>,
        /// Refuse to print more configurations than this.
        #[arg(long, default_value_t = 10_000)]
        max_configs: usize,
    },
    /// Run verification suites.
    Verify {
        /// Suite to run; may be repeated.
        #[arg(long, required_unless_present_any = ["all", "list"])]
        suite: Vec<String>,
        /// Run every registered suite.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// List the registered suites and their default bounds.
        #[arg(long)]
        list: bool,
        /// Replace every suite's default bound on n.
        #[arg(long)]
        max_n: Option<usize>,
        /// Seed for randomized evaluation points.
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KpolyMethod {
    Recurrence,
    Partition,
    Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum MdegChoice {
    Lattice,
    Symmetrize,
}

#[derive(Clone, Copy, ValueEnum)]
enum DegreeMethod {
    Dp,
    Brute,
    Mdeg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Element {
    One,
    Antisym,
    Sym,
}

enum Failure {
    Usage(String),
    Runtime(String),
    /// Rendered report of a failed verification.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailure(m) => Failure::Verification(m),
            e => Failure::Runtime(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn grade_at_most(n: usize, max: usize) -> Result<usize, Failure> {
    if n > max {
        return Err(usage(format!("n = {n} exceeds the supported maximum {max}")));
    }
    Ok(n)
}

fn poly_out(format: Format, header: Value, label: &str, p: &LaurentPoly) -> String {
    match format {
        Format::Text => format!("{label} = {p}\n"),
        Format::Json => {
            let mut obj = header;
            obj["poly"] = p.to_json();
            pretty(&obj)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.global.format;
    match &cli.command {
        Command::Kpoly { n, method, x1 } => {
            let n = grade_at_most(*n, MAX_POLY_GRADE)?;
            let k = match method {
                KpolyMethod::Recurrence => commscheme::kpoly(n)?,
                KpolyMethod::Partition => commscheme::kpoly_from_f(n)?,
                KpolyMethod::Lattice => commscheme::kpoly_lattice(n)?,
            };
            if !*x1 {
                return Ok(poly_out(fmt, json!({ "n": n }), &format!("K_{n}"), &k.poly));
            }
            let table = commscheme::x1_table(&k)?;
            Ok(match fmt {
                Format::Text => table.iter().map(|(i, j, c)| format!("q1^{j} q2^{i}\t{c}\n")).collect(),
                Format::Json => pretty(&json!({
                    "n": n,
                    "table": table.iter().map(|(i, j, c)| json!({ "q1": j, "q2": i, "coeff": rational_string(c) })).collect::<Vec<_>>(),
                })),
            })
        }
        Command::Mdeg { n, method } => {
            let n = grade_at_most(*n, MAX_POLY_GRADE)?;
            let m = match method {
                MdegChoice::Lattice => MdegMethod::Lattice,
                MdegChoice::Symmetrize => MdegMethod::Symmetrize,
            };
            let d = commscheme::mdeg(n, m)?;
            Ok(poly_out(fmt, json!({ "n": n }), &format!("D_{n}"), &d.poly))
        }
        Command::Degree { n, upto, method, max_states } => {
            let ns: Vec<usize> = match (n, upto) {
                (Some(n), _) => vec![*n],
                (None, Some(m)) => (1..=*m).collect(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let mut rows = Vec::new();
            for &n in &ns {
                let d = match method {
                    DegreeMethod::Dp => lattice::degree_dp_with_budget(grade_at_most(n, MAX_GRID)?, *max_states)?.to_string(),
                    DegreeMethod::Brute => lattice::degree_brute(grade_at_most(n, 7)?).to_string(),
                    DegreeMethod::Mdeg => {
                        let d = commscheme::mdeg(grade_at_most(n, MAX_POLY_GRADE)?, MdegMethod::Lattice)?;
                        commscheme::degree_from_mdeg(&d)?.to_string()
                    }
                };
                rows.push((n, d));
            }
            Ok(match (fmt, upto.is_some()) {
                (Format::Text, false) => format!("{}\n", rows[0].1),
                (Format::Text, true) => rows.iter().map(|(n, d)| format!("{n}\t{d}\n")).collect(),
                (Format::Json, _) => {
                    let v: Vec<Value> = rows.iter().map(|(n, d)| json!({ "n": n, "degree": d })).collect();
                    pretty(&if upto.is_some() { json!(v) } else { v[0].clone() })
                }
            })
        }
        Command::Pf { n, lambda, element, perm } => {
            if let Some(v) = perm {
                grade_at_most(v.n(), MAX_POLY_GRADE)?;
                let f = lattice::partition_fn_single(v, WeightScheme::WtGeneral)?;
                return Ok(poly_out(fmt, json!({ "perm": v.to_string() }), &format!("F_{v}"), &f));
            }
            let (label, c) = match (lambda, n) {
                (Some(l), _) => {
                    if n.is_some_and(|n| n != l.weight()) {
                        return Err(usage(format!("--lambda {l} is not a partition of --n")));
                    }
                    grade_at_most(l.weight(), MAX_POLY_GRADE)?;
                    (format!("A_{l}"), hecke::antisymmetrizer_product(l)?)
                }
                (None, Some(n)) => {
                    let n = grade_at_most(*n, MAX_POLY_GRADE)?;
                    match element {
                        Element::One => (format!("1_{n}"), CenterElement::one(n)),
                        Element::Antisym => (format!("A_{n}"), hecke::antisymmetrizer(n)),
                        Element::Sym => (format!("S_{n}"), hecke::complete_symmetrizer(n)),
                    }
                }
                (None, None) => return Err(usage("pf needs --n, --lambda or --perm")),
            };
            let f = lattice::partition_fn_f(&c)?;
            Ok(poly_out(fmt, json!({ "element": label }), &format!("f({label})"), &f))
        }
        Command::Epsilon { lambda, k } => {
            if !(1..=3).contains(k) {
                return Err(usage("--k must be 1, 2 or 3"));
            }
            grade_at_most(lambda.weight(), MAX_POLY_GRADE)?;
            let e = shuffle::epsilon(lambda, *k)?;
            Ok(cal_out(fmt, &format!("ε_{lambda}(q_{k})"), &e))
        }
        Command::Kappa { n } => {
            let k = shuffle::kappa(grade_at_most(*n, MAX_POLY_GRADE)?)?;
            Ok(cal_out(fmt, &format!("κ_{n}"), &k))
        }
        Command::Configs { perm, n, max_configs } => {
            let v = match (perm, n) {
                (Some(v), _) => v.clone(),
                (None, Some(n)) => Perm::identity(*n),
                (None, None) => unreachable!("clap requires one of them"),
            };
            grade_at_most(v.n(), 7)?;
            let mut configs = Vec::new();
            let mut total = 0usize;
            lattice::for_each_config(&v, |c| {
                total += 1;
                if configs.len() < *max_configs {
                    configs.push(c.clone());
                }
            });
            if total > *max_configs {
                return Err(Failure::Runtime(
                    Error::ResourceBudgetExceeded(format!("{total} configurations exceed --max-configs {max_configs}")).to_string(),
                ));
            }
            Ok(match fmt {
                Format::Json => pretty(&json!({
                    "perm": v.to_string(),
                    "count": total,
                    "configs": configs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                })),
                Format::Text => {
                    let mut s = format!("{total} configurations with connectivity {v}\n");
                    for (k, c) in configs.iter().enumerate() {
                        s.push_str(&format!("\n#{} ({} bends)\n", k + 1, c.bends()));
                        for row in c.grid() {
                            let codes: Vec<&str> = row.iter().map(|x| x.classify().map(|c| c.code()).unwrap_or("?")).collect();
                            s.push_str(&codes.join(" "));
                            s.push('\n');
                        }
                    }
                    s
                }
            })
        }
        Command::Verify { suite, all, list, max_n, seed } => {
            if *list {
                return Ok(match fmt {
                    Format::Text => verify::suites()
                        .iter()
                        .map(|s| format!("{:<14} n <= {:<3} {}\n", s.name, s.default_max_n, s.description))
                        .collect(),
                    Format::Json => pretty(&json!(verify::suites()
                        .iter()
                        .map(|s| json!({ "name": s.name, "default_max_n": s.default_max_n, "description": s.description }))
                        .collect::<Vec<_>>())),
                });
            }
            let chosen: Vec<&verify::Suite> = if *all {
                verify::suites().iter().collect()
            } else {
                suite
                    .iter()
                    .map(|name| verify::find_suite(name).ok_or_else(|| usage(format!("unknown suite `{name}`; see --list"))))
                    .collect::<Result<_, _>>()?
            };
            let opts = VerifyOptions { max_n: *max_n, seed: *seed };
            let reports: Vec<verify::SuiteReport> = chosen.iter().map(|s| s.run(&opts)).collect();
            let ok = reports.iter().all(|r| r.passed());
            let rendered = match fmt {
                Format::Text => {
                    let mut s: String = reports.iter().map(|r| r.to_string()).collect();
                    let failed = reports.iter().filter(|r| !r.passed()).count();
                    s.push_str(&format!("{} suites, {} failed\n", reports.len(), failed));
                    s
                }
                Format::Json => pretty(&json!({ "passed": ok, "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>() })),
            };
            if ok {
                Ok(rendered)
            } else {
                Err(Failure::Verification(rendered))
            }
        }
    }
}

fn cal_out(fmt: Format, label: &str, c: &shuffle::ShuffleCal) -> String {
    match fmt {
        Format::Text => format!("{label} = ({}) / Δ²\n", c.num()),
        Format::Json => pretty(&c.to_json()),
    }
}

fn emit(path: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.global.workers > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.global.workers).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (text, code) = match run(&cli) {
        Ok(t) => (t, 0),
        Err(Failure::Verification(report)) => (report, 1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli.global.output, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    if code != 0 {
        eprintln!("verification failed");
    }
    ExitCode::from(code)
}

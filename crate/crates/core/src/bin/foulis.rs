use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use foulis::bratteli::BratteliDiagram;
use foulis::coordinatize::{coordinatize, report_interval, IntervalReport};
use foulis::cuntz::{CuntzElement, Side};
use foulis::effect::FiniteMvAlgebra;
use foulis::prefix::{PrefixCode, Word};
use foulis::quotient::{quotient_mv, SemisimpleView};
use foulis::selftest::{run_selftest, SelftestOptions, DEFAULT_SEED};
use foulis::semisimple::Signature;

#[derive(Parser)]
#[command(name = "foulis", version, about = "Exact computations with Boolean inverse monoids and MV-algebras")]
struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a Bratteli diagram file and print its size vectors.
    ValidateDiagram { path: PathBuf },
    /// Per-level vertex sizes, monoid orders and connecting matrices.
    LevelInfo {
        path: PathBuf,
        #[arg(long)]
        level: Option<usize>,
    },
    /// The interval `[0, u]` of a level and its match with the level quotient.
    Interval {
        path: PathBuf,
        #[arg(long)]
        level: Option<usize>,
    },
    /// The MV-algebra of 𝒟-classes of a level monoid, or of `--signature`.
    Quotient {
        path: Option<PathBuf>,
        #[arg(long)]
        level: Option<usize>,
        /// Comma-separated component sizes, e.g. `1,2`.
        #[arg(long, conflicts_with = "path")]
        signature: Option<String>,
    },
    /// Find a semisimple monoid whose quotient is the given MV-algebra.
    Coordinatize { path: PathBuf },
    /// Prefix-code operations on codes written like `aa+aba+b`.
    Prefix {
        #[arg(long, default_value_t = 2)]
        arity: usize,
        #[command(subcommand)]
        op: PrefixOp,
    },
    /// Cuntz monoid operations on elements written like `aa->ab, ab->aa`.
    Cuntz {
        #[arg(long, default_value_t = 2)]
        arity: usize,
        #[command(subcommand)]
        op: CuntzOp,
    },
    /// Run the invariant suites.
    Selftest {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Additional diagram files checked by the `bratteli` suite.
        #[arg(long = "fixture")]
        fixtures: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PrefixOp {
    /// Words, length, Bernoulli measure and maximality.
    Info { code: String },
    Minimize { code: String },
    Uniformize { code: String, length: usize },
    Extend { code: String, word: String, depth: usize },
    Reduce { code: String, word: String, depth: usize },
    Equal { left: String, right: String },
    Union { left: String, right: String },
    Intersection { left: String, right: String },
    Difference { left: String, right: String },
}

#[derive(Subcommand)]
enum CuntzOp {
    /// Canonical form, domain and range codes, gauge membership.
    Canon { element: String },
    Multiply { left: String, right: String },
    Inverse { element: String },
    Meet { left: String, right: String },
    Join { left: String, right: String },
    /// Bernoulli measure of the domain of a gauge element.
    Mean { element: String },
    /// The partial bijection of words of length `--level`.
    Symmetric {
        element: String,
        #[arg(long)]
        level: usize,
    },
}

enum Failure {
    Validation(String),
    Breach(String),
}

impl From<foulis::Error> for Failure {
    fn from(e: foulis::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Breach(msg)) => {
            eprintln!("invariant breach: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<BratteliDiagram, Failure> {
    Ok(BratteliDiagram::from_json(&read(path)?)?)
}

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) {
    if json {
        println!("{value}");
    } else {
        print!("{}", text());
    }
}

fn levels(d: &BratteliDiagram, level: Option<usize>) -> Result<Vec<usize>, Failure> {
    match level {
        Some(l) if l > d.depth() => Err(foulis::Error::LevelOutOfRange { level: l, depth: d.depth() }.into()),
        Some(l) => Ok(vec![l]),
        None => Ok((0..=d.depth()).collect()),
    }
}

fn join_vec(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn matrix_text(m: &[Vec<usize>]) -> String {
    m.iter().map(|r| format!("[{}]", join_vec(r))).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::ValidateDiagram { path } => {
            let d = load_diagram(path)?;
            let sizes: Vec<Vec<usize>> = (0..=d.depth())
                .map(|l| d.size_vector(l).map(<[usize]>::to_vec))
                .collect::<foulis::Result<_>>()?;
            emit(cli.json, json!({"valid": true, "depth": d.depth(), "size_vectors": sizes}), || {
                let mut out = format!("valid diagram, depth {}\nlevel  sizes\n", d.depth());
                for (l, s) in sizes.iter().enumerate() {
                    out += &format!("{l:>5}  ({})\n", join_vec(s));
                }
                out
            });
        }
        Command::LevelInfo { path, level } => {
            let d = load_diagram(path)?;
            let mut rows = Vec::new();
            for l in levels(&d, *level)? {
                let sizes = d.size_vector(l)?.to_vec();
                let order = d.level_monoid_signature(l)?.order();
                let next = d.mult(l).ok().map(<[Vec<usize>]>::to_vec);
                rows.push((l, sizes, order, next));
            }
            let value = json!(rows
                .iter()
                .map(|(l, s, o, m)| json!({"level": l, "sizes": s, "order": o.to_string(), "connecting": m}))
                .collect::<Vec<_>>());
            emit(cli.json, value, || {
                let mut out = String::from("level  sizes  order  connecting\n");
                for (l, s, o, m) in &rows {
                    let m = m.as_deref().map_or("-".to_string(), matrix_text);
                    out += &format!("{l:>5}  ({})  {o}  {m}\n", join_vec(s));
                }
                out
            });
        }
        Command::Interval { path, level } => {
            let d = load_diagram(path)?;
            let reports: Vec<IntervalReport> = levels(&d, *level)?
                .into_iter()
                .map(|l| report_interval(&d, l))
                .collect::<foulis::Result<_>>()?;
            let value = json!(reports
                .iter()
                .map(|r| json!({
                    "level": r.level,
                    "rank": r.rank,
                    "unit": r.unit,
                    "connecting": r.connecting,
                    "interval_size": r.interval_size.to_string(),
                    "verified": r.verified,
                    "identity_witness": r.identity_witness,
                }))
                .collect::<Vec<_>>());
            emit(cli.json, value, || {
                let mut out = String::from("level  rank  unit  |[0,u]|  quotient ≅ [0,u]\n");
                for r in &reports {
                    let status = match (r.verified, r.identity_witness) {
                        (Some(true), Some(true)) => "yes, rank vector ↦ interval point",
                        (Some(true), _) => "yes",
                        (Some(false), _) => "NO",
                        (None, _) => "skipped (too large)",
                    };
                    out += &format!(
                        "{:>5}  {:>4}  ({})  {}  {status}\n",
                        r.level,
                        r.rank,
                        join_vec(&r.unit),
                        r.interval_size
                    );
                }
                out
            });
            if let Some(r) = reports.iter().find(|r| r.verified == Some(false)) {
                return Err(Failure::Breach(format!("level {} quotient does not match [0,u]", r.level)));
            }
        }
        Command::Quotient { path, level, signature } => {
            let sig = match (path, signature) {
                (_, Some(text)) => Signature::new(
                    text.split(',')
                        .map(|s| s.trim().parse::<usize>().map_err(|e| Failure::Validation(format!("{s}: {e}"))))
                        .collect::<Result<_, _>>()?,
                )?,
                (Some(path), None) => {
                    let d = load_diagram(path)?;
                    d.level_monoid_signature(level.unwrap_or(d.depth()))?
                }
                (None, None) => return Err(Failure::Validation("give a diagram path or --signature".into())),
            };
            let q = quotient_mv(&SemisimpleView::new(sig.clone()))?;
            let mv = q.mv().map_err(|e| Failure::Breach(e.to_string()))?;
            if cli.json {
                println!("{}", mv.to_json());
            } else {
                let names = mv.base().names();
                println!("quotient of {sig}: {} classes", mv.len());
                println!("index  class  complement");
                for (i, name) in names.iter().enumerate() {
                    println!("{i:>5}  {name}  {}", names[mv.complement(i)]);
                }
            }
        }
        Command::Coordinatize { path } => {
            let m = FiniteMvAlgebra::from_json(&read(path)?)?;
            let c = coordinatize(&m)?;
            let names = m.base().names();
            let value = json!({
                "chains": c.chains,
                "signature": c.signature.sizes(),
                "witness": names.iter().zip(&c.witness).map(|(n, r)| json!({"element": n, "ranks": r})).collect::<Vec<_>>(),
            });
            emit(cli.json, value, || {
                let chains: Vec<String> = c.chains.iter().map(|n| format!("L_{n}")).collect();
                let mut out = format!("chains     {}\nsignature  {}\nelement  rank vector\n", chains.join(" × "), c.signature);
                for (n, r) in names.iter().zip(&c.witness) {
                    out += &format!("{n:>7}  ({})\n", join_vec(r));
                }
                out
            });
        }
        Command::Prefix { arity, op } => prefix(cli.json, *arity, op)?,
        Command::Cuntz { arity, op } => cuntz(cli.json, *arity, op)?,
        Command::Selftest { filter, seed, fixtures } => {
            let fixtures = fixtures
                .iter()
                .map(|p| Ok((p.display().to_string(), read(p)?)))
                .collect::<Result<_, Failure>>()?;
            let options = SelftestOptions {
                filter: filter.clone(),
                seed: *seed,
                fixtures,
            };
            let report = run_selftest(&options)?;
            let value = json!({
                "seed": report.seed,
                "passed": report.passed(),
                "checks": report.checks.iter().map(|c| json!({
                    "suite": c.suite,
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                    "seconds": c.elapsed.as_secs_f64(),
                })).collect::<Vec<_>>(),
            });
            emit(cli.json, value, || {
                let mut out: String = report.checks.iter().map(|c| format!("{c}\n")).collect();
                let failed = report.failures().count();
                out += &format!(
                    "{} checks, {failed} failed, seed {}, {:.2?}\n",
                    report.checks.len(),
                    report.seed,
                    report.elapsed
                );
                out
            });
            let first = report.failures().next().map(|c| format!("{}::{} failed", c.suite, c.name));
            if let Some(msg) = first {
                return Err(Failure::Breach(msg));
            }
        }
    }
    Ok(())
}

fn code_json(c: &PrefixCode) -> Value {
    json!({
        "code": c.to_string(),
        "words": c.len(),
        "length": c.length(),
        "measure": c.bernoulli().to_string(),
        "maximal": c.is_maximal(),
    })
}

fn print_code(json: bool, c: &PrefixCode) {
    emit(json, code_json(c), || {
        format!(
            "code     {c}\nwords    {}\nlength   {}\nmeasure  {}\nmaximal  {}\n",
            c.len(),
            c.length(),
            c.bernoulli(),
            c.is_maximal()
        )
    });
}

fn prefix(json: bool, arity: usize, op: &PrefixOp) -> Outcome {
    let parse = |s: &str| PrefixCode::parse(arity, s);
    let word = |s: &str| Word::parse(arity, s);
    match op {
        PrefixOp::Info { code } => print_code(json, &parse(code)?),
        PrefixOp::Minimize { code } => print_code(json, &parse(code)?.minimize()),
        PrefixOp::Uniformize { code, length } => print_code(json, &parse(code)?.uniformize(*length)?),
        PrefixOp::Extend { code, word: u, depth } => print_code(json, &parse(code)?.extend(&word(u)?, *depth)?),
        PrefixOp::Reduce { code, word: u, depth } => print_code(json, &parse(code)?.reduce(&word(u)?, *depth)?),
        PrefixOp::Equal { left, right } => {
            let equal = parse(left)?.clopen_equal(&parse(right)?)?;
            emit(json, json!({"equal": equal}), || format!("{equal}\n"));
        }
        PrefixOp::Union { left, right } => print_code(json, &parse(left)?.union(&parse(right)?)?),
        PrefixOp::Intersection { left, right } => print_code(json, &parse(left)?.intersection(&parse(right)?)?),
        PrefixOp::Difference { left, right } => print_code(json, &parse(left)?.difference(&parse(right)?)?),
    }
    Ok(())
}

fn print_element(json: bool, f: &CuntzElement) {
    let code = |c: Option<PrefixCode>| c.map_or("0".to_string(), |c| c.to_string());
    let value = json!({
        "element": f.to_string(),
        "domain": code(f.domain_code()),
        "range": code(f.range_code()),
        "gauge": f.is_gauge(),
        "idempotent": f.is_idempotent(),
    });
    emit(json, value, || {
        format!(
            "element     {f}\ndomain      {}\nrange       {}\ngauge       {}\nidempotent  {}\n",
            code(f.domain_code()),
            code(f.range_code()),
            f.is_gauge(),
            f.is_idempotent()
        )
    });
}

fn cuntz(json: bool, arity: usize, op: &CuntzOp) -> Outcome {
    let parse = |s: &str| CuntzElement::parse(arity, s);
    match op {
        CuntzOp::Canon { element } => print_element(json, &parse(element)?),
        CuntzOp::Multiply { left, right } => print_element(json, &parse(left)?.multiply(&parse(right)?)?),
        CuntzOp::Inverse { element } => print_element(json, &parse(element)?.inverse()),
        CuntzOp::Meet { left, right } => print_element(json, &parse(left)?.meet(&parse(right)?)?),
        CuntzOp::Join { left, right } => match parse(left)?.join(&parse(right)?)? {
            Some(j) => print_element(json, &j),
            None => return Err(Failure::Validation("elements are not compatible; the join is undefined".into())),
        },
        CuntzOp::Mean { element } => {
            let mean = parse(element)?.dyadic_mean(Side::Domain)?;
            emit(json, json!({"mean": mean.to_string()}), || format!("{mean}\n"));
        }
        CuntzOp::Symmetric { element, level } => {
            let p = parse(element)?.to_symmetric(arity, *level)?;
            emit(json, json!({"degree": p.degree(), "map": p.to_string()}), || {
                format!("degree {}\n{p}\n", p.degree())
            });
        }
    }
    Ok(())
}

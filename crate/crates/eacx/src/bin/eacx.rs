use clap::{Args, Parser, Subcommand, ValueEnum};
use eacx::activity::{lex_weight, random_weight, Weight};
use eacx::cli;
use eacx::dilworth::MatroidPair;
use eacx::io::{parse_matroid, parse_weight};
use eacx::kclasses::SubstitutionVector;
use eacx::matroid::Matroid;
use eacx::simplicial::Grading;
use eacx::verify::Suite;
use eacx::{Error, Result};
use serde_json::Value;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "eacx", version, about = "Dilworth truncations, external activity complexes and their invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads (default: all cores, or RAYON_NUM_THREADS).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct PairArgs {
    /// Two matroid JSON files.
    #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
    pair: Vec<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct WeightArgs {
    /// Weight JSON file.
    #[arg(long)]
    weight: Option<String>,
    /// Lexicographic weight (the default).
    #[arg(long)]
    lex: bool,
    /// Pseudo-random weight from this seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct MatroidArg {
    /// Matroid JSON file.
    #[arg(long)]
    matroid: String,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonal Dilworth truncation of a pair.
    Dd(PairArgs),
    /// External activity complex: facets, generators, f-vector, CM verdict.
    Complex {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// K-polynomial in a grading, cross-checked by localization for z2 and z2xzn.
    Kpoly {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value = "z2")]
        grading: GradingArg,
        /// Localization substitution, comma-separated distinct positive integers.
        #[arg(long, value_delimiter = ',')]
        c_vector: Option<Vec<u64>>,
    },
    /// Both routes to omega.
    Omega(MatroidArg),
    /// The g-invariant.
    G(MatroidArg),
    /// Tropical intersection counts against the activity formula.
    ChernDegree {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Property suite over the fixture battery.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GradingArg {
    Fine,
    Z2,
    Zn,
    Z2xzn,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Dilworth,
    Activity,
    Simplicial,
    Kclasses,
    Tropical,
    Realizable,
    All,
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::BadInput(format!("{path}: {e}")))
}

fn matroid(path: &str) -> Result<Matroid> {
    parse_matroid(&read(path)?)
}

fn pair(a: &PairArgs) -> Result<MatroidPair> {
    MatroidPair::new(matroid(&a.pair[0])?, matroid(&a.pair[1])?)
}

fn weight(w: &WeightArgs, n: usize) -> Result<Weight> {
    match (&w.weight, w.seed) {
        (Some(path), _) => parse_weight(&read(path)?, n),
        (None, Some(s)) => Ok(random_weight(n, s)),
        _ => Ok(lex_weight(n)),
    }
}

fn grading(g: GradingArg) -> Grading {
    match g {
        GradingArg::Fine => Grading::Fine,
        GradingArg::Z2 => Grading::Z2,
        GradingArg::Zn => Grading::Zn,
        GradingArg::Z2xzn => Grading::Z2xZn,
        GradingArg::Z => Grading::Z,
    }
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Dilworth => Suite::Dilworth,
        SuiteArg::Activity => Suite::Activity,
        SuiteArg::Simplicial => Suite::Simplicial,
        SuiteArg::Kclasses => Suite::Kclasses,
        SuiteArg::Tropical => Suite::Tropical,
        SuiteArg::Realizable => Suite::Realizable,
        SuiteArg::All => Suite::All,
    }
}

/// Output value and whether the command succeeded.
fn run(cmd: &Command) -> Result<(Value, bool)> {
    Ok(match cmd {
        Command::Dd(p) => (cli::dd(&pair(p)?)?, true),
        Command::Complex { pair: p, weight: w } => {
            let p = pair(p)?;
            (cli::complex(&p, &weight(w, p.n())?)?, true)
        }
        Command::Kpoly { pair: p, weight: w, grading: g, c_vector } => {
            let p = pair(p)?;
            let c = c_vector.clone().map(SubstitutionVector::new).transpose()?;
            (cli::kpoly(&p, &weight(w, p.n())?, grading(*g), c.as_ref())?, true)
        }
        Command::Omega(m) => (cli::omega_cmd(&matroid(&m.matroid)?)?, true),
        Command::G(m) => (cli::g_cmd(&matroid(&m.matroid)?)?, true),
        Command::ChernDegree { pair: p, weight: w } => {
            let p = pair(p)?;
            (cli::chern_degree(&p, &weight(w, p.n())?)?, true)
        }
        Command::Verify { suite: s, seed } => cli::verify_cmd(suite(*s), *seed),
    })
}

fn emit(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("JSON value")),
        Format::Text => print!("{}", cli::render_text(v)),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    if let Some(j) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&args.command) {
        Ok((v, ok)) => {
            emit(&v, args.format);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit(&cli::error_json(&e), args.format);
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `incring`: generation tests and exact generator counts for incidence rings.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use incring::{
    check_generates, count_by_enumeration, count_gen, mgen, mgen_lower_bound, monte_carlo,
    probability_closed_form, radical_data, rational_json, BaseRing, IncidenceRing, Poset,
    ScalarField, TupleFile, DEFAULT_ENUMERATION_LIMIT,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "incring",
    version,
    about = "Generators of incidence rings over finite posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; only JSON is stable.
    #[arg(long, value_enum, default_value = "json", global = true)]
    output: Output,

    /// Worker threads for enumeration and Monte Carlo.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

impl From<FieldArg> for ScalarField {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Real => ScalarField::Real,
            FieldArg::Complex => ScalarField::Complex,
        }
    }
}

#[derive(Args)]
struct PosetArg {
    /// Poset file (`n <int>` then `rel <i> <j>` lines).
    #[arg(long)]
    poset: PathBuf,
}

#[derive(Args)]
struct RingArgs {
    #[command(flatten)]
    poset: PosetArg,

    /// Base ring, e.g. "GF(4)", "M(2,GF(3))", "GF(2)xGF(3)", "Z/8".
    #[arg(long)]
    ring: String,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    ring: RingArgs,

    /// Tuple length.
    #[arg(short = 'm', value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,

    /// Also render probabilities as decimals with this many digits.
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Covering pairs, rho and c of a poset.
    Poset(PosetArg),
    /// Exact number of generating m-tuples.
    Count(CountArgs),
    /// Probability that a uniform m-tuple generates, with its closed form.
    Prob(CountArgs),
    /// Least m admitting a generating m-tuple.
    Mgen(RingArgs),
    /// Generation test for the tuple in a JSON tuple file.
    Check {
        #[arg(long)]
        tuple: PathBuf,
    },
    /// Counts generating m-tuples by closing every tuple; exits 1 if this differs from the formula.
    Enumerate {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(short = 'm', value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
    },
    /// Order and additive generators of the Jacobson radical.
    Radical(RingArgs),
    /// Monte Carlo generation rate over R or C.
    Mc {
        #[command(flatten)]
        poset: PosetArg,
        #[arg(long, value_enum)]
        field: FieldArg,
        #[arg(short = 'm', value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write the margin histogram as CSV to this path.
        #[arg(long)]
        histogram: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_poset(arg: &PosetArg) -> Result<Poset> {
    let text = read(&arg.poset)?;
    Poset::parse(&text).with_context(|| format!("parsing {}", arg.poset.display()))
}

fn load_ring(args: &RingArgs) -> Result<(Poset, BaseRing)> {
    Ok((load_poset(&args.poset)?, BaseRing::parse(&args.ring)?))
}

/// JSON value and whether the run counts as successful.
fn run(command: &Command) -> Result<(Value, bool)> {
    let value = match command {
        Command::Poset(arg) => {
            let p = load_poset(arg)?;
            let mut v = serde_json::to_value(p.cover_data())?;
            v["n"] = json!(p.size());
            v
        }
        Command::Count(args) => {
            let (p, r) = load_ring(&args.ring)?;
            let report = count_gen(&p, &r, args.m);
            let mut v = report.to_json();
            if let Some(digits) = args.precision {
                v["probability_decimal"] = json!(render::decimal(&report.probability, digits));
            }
            v
        }
        Command::Prob(args) => {
            let (p, r) = load_ring(&args.ring)?;
            let report = count_gen(&p, &r, args.m);
            let closed = probability_closed_form(&p, &r, args.m);
            let agrees = closed == report.probability;
            let mut v = json!({
                "m": report.m,
                "rho": report.rho,
                "c": report.c,
                "mgen": report.mgen,
                "probability": rational_json(&report.probability),
                "closed_form": rational_json(&closed),
                "agrees": agrees,
            });
            if let Some(digits) = args.precision {
                v["probability_decimal"] = json!(render::decimal(&report.probability, digits));
            }
            return Ok((v, agrees));
        }
        Command::Mgen(args) => {
            let (p, r) = load_ring(args)?;
            json!({ "mgen": mgen(&p, &r), "lower_bound": mgen_lower_bound(&p, &r) })
        }
        Command::Check { tuple } => {
            let file = TupleFile::parse(&read(tuple)?)
                .with_context(|| format!("parsing {}", tuple.display()))?;
            check_generates(&file.ring, &file.matrices)?.to_json()
        }
        Command::Enumerate { ring, m } => {
            let (p, r) = load_ring(ring)?;
            let formula = count_gen(&p, &r, *m).count;
            let a = IncidenceRing::new(p, r);
            let enumerated = count_by_enumeration(&a, *m, DEFAULT_ENUMERATION_LIMIT)?;
            let equal = enumerated == formula;
            let v = json!({
                "m": m,
                "enumerated": enumerated.to_string(),
                "formula": formula.to_string(),
                "equal": equal,
            });
            return Ok((v, equal));
        }
        Command::Radical(args) => {
            let (p, r) = load_ring(args)?;
            let a = IncidenceRing::new(p, r);
            radical_data(&a).to_json(&a)
        }
        Command::Mc {
            poset,
            field,
            m,
            trials,
            seed,
            tol,
            histogram,
        } => {
            if !tol.is_finite() || *tol <= 0.0 {
                bail!("--tol must be a positive number");
            }
            let p = load_poset(poset)?;
            let report = monte_carlo(&p, (*field).into(), *m as usize, *trials, *seed, *tol);
            if let Some(path) = histogram {
                fs::write(path, report.histogram_csv())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            report.to_json()
        }
    };
    Ok((value, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.into())
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli.command) {
        Ok((value, ok)) => {
            match cli.output {
                Output::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("serializable")
                ),
                Output::Table => print!("{}", render::table(&value)),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

//! `bid`: tables, recursion trees, verification and simulation sweeps for
//! BiD codes.
//!
//! Exit status is 0 on success, 1 when `verify` finds a failure or an I/O
//! error occurs, and 2 on bad arguments.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bid_core::codes::{bid_generator, GeneratorExport};
use bid_core::decode::DecoderKind;
use bid_core::distance::{
    brute_force_min_distance, closed_form_lower, distance_table, random_low_weight_search, recursion_tree,
    recursive_bounds, scatter_data, table_csv, DEFAULT_DIM_BUDGET, SCATTER_HEADER,
};
use bid_core::sim::{epsilon_for_gap, parse_grid, sweep, sweep_csv, SweepChannel};
use bid_core::transform::default_dynamic_kernel;
use bid_core::verify::run_default_suites;
use bid_core::{CodeSpec, DecoderConfig, Encoder, EncoderConfig, Error, Kernel};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bid", version, about = "BiD codes of length 3^m")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for simulations (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Clone)]
struct CodeArgs {
    m: Option<usize>,
    r1: Option<usize>,
    r2: Option<usize>,

    /// Kernel: A3 or A3p.
    #[arg(long)]
    kernel: Option<Kernel>,

    /// Dynamic freezing with a seeded pre-transform.
    #[arg(long)]
    dynamic: bool,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Encoder config as JSON; replaces the positional parameters.
    #[arg(long, conflicts_with_all = ["m", "r1", "r2"])]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Edges,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Length, dimension, rate and distance bounds of BiD(m,r1,r2).
    Info { m: usize, r1: usize, r2: usize },
    /// Generator matrix as 0/1 text or hex JSON.
    GenMatrix {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
    },
    /// Minimum distance by enumeration, or a low-weight codeword search.
    Distance {
        m: usize,
        r1: usize,
        r2: usize,
        /// Largest dimension enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_DIM_BUDGET)]
        budget: usize,
        /// Search rounds when the dimension exceeds the budget.
        #[arg(long, default_value_t = 1000)]
        search: usize,
        /// Search target weight (default: the recursive lower bound).
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Distance table for 2 <= m <= max-m.
    Tables {
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 2)]
        min_m: usize,
    },
    /// Recursion graph of the distance bounds.
    Tree {
        m: usize,
        r1: usize,
        r2: usize,
        #[arg(long, value_enum, default_value_t = TreeFormat::Edges)]
        format: TreeFormat,
    },
    /// Rate against ln(dmin) / ln(N) for every BiD code at this m.
    Scatter { m: usize },
    /// Self-check suites.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// BLER sweep on the erasure channel under ML decoding.
    SimulateBec {
        #[command(flatten)]
        code: CodeArgs,
        /// Erasure probabilities, `a:b:step` or a list.
        #[arg(long, conflicts_with = "gap", required_unless_present = "gap")]
        epsilon: Option<String>,
        /// Gaps to capacity `1 - R - epsilon`.
        #[arg(long)]
        gap: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
    },
    /// BLER sweep on the BI-AWGN channel.
    SimulateAwgn {
        #[command(flatten)]
        code: CodeArgs,
        /// Eb/N0 values in dB, `a:b:step` or a list.
        #[arg(long)]
        ebn0: String,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value = "sc")]
        decoder: DecoderKind,
        #[arg(long)]
        lambda_max: Option<f64>,
        #[arg(long)]
        eta: Option<u32>,
        /// Exact f-minus in SC instead of min-sum.
        #[arg(long)]
        exact_f: bool,
    },
}

enum Failure {
    Usage(String),
    Verify,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn encoder_config(code: &CodeArgs, fallback_kernel: impl Fn(usize, bool) -> Kernel) -> Result<EncoderConfig, Failure> {
    if let Some(path) = &code.config {
        let text = fs::read_to_string(path)?;
        return Ok(EncoderConfig::from_json(&text)?);
    }
    let (Some(m), Some(r1), Some(r2)) = (code.m, code.r1, code.r2) else {
        return Err(Failure::Usage("expected M R1 R2 or --config".into()));
    };
    let kernel = code.kernel.unwrap_or_else(|| fallback_kernel(r1, code.dynamic));
    // Static codes keep the seed too: simulations draw from it.
    let mut cfg = EncoderConfig::new(m, r1, r2, kernel);
    cfg.dynamic = code.dynamic;
    cfg.seed = code.seed;
    Ok(cfg)
}

fn info(m: usize, r1: usize, r2: usize) -> Result<String, Failure> {
    let spec = CodeSpec::bid(m, r1, r2, Kernel::A3)?;
    let iv = recursive_bounds(m, r1, r2)?;
    Ok(format!(
        "code,N,K,rate,closed_form,dmin_lower,dmin_upper,exact\n{},{},{},{:.6},{},{},{},{}\n",
        spec.label(),
        spec.length(),
        spec.dimension(),
        spec.rate(),
        closed_form_lower(m, r1, r2)?,
        iv.lower,
        iv.upper,
        iv.is_exact()
    ))
}

fn distance(
    m: usize,
    r1: usize,
    r2: usize,
    budget: usize,
    search: usize,
    target: Option<usize>,
    seed: u64,
) -> Result<String, Failure> {
    let spec = CodeSpec::bid(m, r1, r2, Kernel::A3)?;
    let iv = recursive_bounds(m, r1, r2)?;
    let mut s = String::from("code,K,dmin_lower,dmin_upper,method,weight\n");
    let prefix = format!("{},{},{},{}", spec.label(), spec.dimension(), iv.lower, iv.upper);
    if spec.dimension() <= budget {
        let (d, _) = brute_force_min_distance(&bid_generator(&spec)?, budget)?;
        s.push_str(&format!("{prefix},enumeration,{d}\n"));
    } else {
        let target = target.unwrap_or(iv.lower as usize);
        let found = random_low_weight_search(&spec, target, search, seed)?;
        let w = found.map_or("none".to_string(), |w| w.weight().to_string());
        s.push_str(&format!("{prefix},search<={target},{w}\n"));
    }
    Ok(s)
}

fn simulate(
    encoder: &Encoder,
    channel: SweepChannel,
    grid: &[f64],
    trials: u64,
    dec: &DecoderConfig,
) -> Result<String, Failure> {
    let seed = encoder.config().seed;
    Ok(sweep_csv(&sweep(encoder, channel, grid, trials, seed, dec)?))
}

fn run(cli: Cli) -> Result<Option<String>, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let out = match cli.command {
        Command::Info { m, r1, r2 } => info(m, r1, r2)?,
        Command::GenMatrix { code, format } => {
            let cfg = encoder_config(&code, |_, _| Kernel::A3)?;
            let spec = CodeSpec::bid(cfg.m, cfg.r1, cfg.r2, cfg.kernel)?;
            let g = if cfg.dynamic {
                Encoder::new(cfg)?.generator_matrix()
            } else {
                bid_generator(&spec)?
            };
            match format {
                MatrixFormat::Text => g.to_text(),
                MatrixFormat::Json => {
                    let export = GeneratorExport::from_generator(&spec, &g)?;
                    serde_json::to_string_pretty(&export).expect("serializable") + "\n"
                }
            }
        }
        Command::Distance {
            m,
            r1,
            r2,
            budget,
            search,
            target,
            seed,
        } => distance(m, r1, r2, budget, search, target, seed)?,
        Command::Tables { max_m, min_m } => {
            if max_m > 9 {
                return Err(Failure::Usage("tables support m <= 9".into()));
            }
            table_csv(&distance_table(min_m, max_m)?)
        }
        Command::Tree { m, r1, r2, format } => {
            let tree = recursion_tree(m, r1, r2)?;
            match format {
                TreeFormat::Edges => tree.to_edge_list(),
                TreeFormat::Json => tree.to_json() + "\n",
            }
        }
        Command::Scatter { m } => {
            let mut s = format!("{SCATTER_HEADER}\n");
            for r in scatter_data(m)? {
                s.push_str(&r.to_csv());
                s.push('\n');
            }
            s
        }
        Command::Verify { seed } => {
            let results = run_default_suites(seed)?;
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!("{r}\n"));
            }
            if results.iter().any(|r| !r.passed) {
                print!("{s}");
                return Err(Failure::Verify);
            }
            s
        }
        Command::SimulateBec {
            code,
            epsilon,
            gap,
            trials,
        } => {
            let cfg = encoder_config(&code, |r1, dynamic| {
                if dynamic {
                    default_dynamic_kernel(r1)
                } else {
                    Kernel::A3
                }
            })?;
            let encoder = Encoder::new(cfg)?;
            let grid = match (epsilon, gap) {
                (Some(e), _) => parse_grid(&e)?,
                (None, Some(g)) => {
                    let rate = encoder.dimension() as f64 / encoder.length() as f64;
                    parse_grid(&g)?.into_iter().map(|g| epsilon_for_gap(rate, g)).collect()
                }
                (None, None) => unreachable!("clap requires one of the grids"),
            };
            if let Some(bad) = grid.iter().find(|e| !(0.0..=1.0).contains(*e)) {
                return Err(Failure::Usage(format!("erasure probability {bad} outside [0, 1]")));
            }
            simulate(&encoder, SweepChannel::Bec, &grid, trials, &DecoderConfig::sc())?
        }
        Command::SimulateAwgn {
            code,
            ebn0,
            trials,
            decoder,
            lambda_max,
            eta,
            exact_f,
        } => {
            let encoder = Encoder::new(encoder_config(&code, |_, _| Kernel::A3Prime)?)?;
            let mut dec = DecoderConfig {
                decoder,
                exact_f,
                ..DecoderConfig::default()
            };
            if let Some(l) = lambda_max {
                dec.lambda_max = l;
            }
            if let Some(e) = eta {
                dec.eta = e;
            }
            simulate(&encoder, SweepChannel::Awgn, &parse_grid(&ebn0)?, trials, &dec)?
        }
    };
    match cli.out {
        Some(path) => {
            fs::write(path, out)?;
            Ok(None)
        }
        None => Ok(Some(out)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Some(text)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use tzmrd::decoder::{decode_with, DecoderOptions};
use tzmrd::harness::bench::bench;
use tzmrd::harness::channel::ChannelSpec;
use tzmrd::harness::io::{format_outcome, format_vector, parse_vectors, ParamsFile};
use tzmrd::harness::oracle::{min_distance_bruteforce, DEFAULT_BUDGET};
use tzmrd::harness::selftest;
use tzmrd::harness::simulate::simulate;
use tzmrd::{CodeParams, Field, TzCode};

const EXIT_DECODE_FAILURE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "tzmrd", version, about = "TZ rank-metric codes: generate, encode, decode, simulate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write its parameter file.
    Gen {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Monic modulus of degree 2n, coefficients low to high, e.g. "[2,0,0,0,1]".
        #[arg(long)]
        modulus: Option<String>,
        /// Power-basis coefficients, low to high.
        #[arg(long, requires = "xi")]
        gamma: Option<String>,
        #[arg(long, requires = "gamma")]
        xi: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encode every message line of MSG (2k elements of F_{q^n}).
    Encode {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        msg: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode every received word; failures are written as `FAIL <reason>`.
    Decode {
        #[arg(long)]
        params: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Do not retry the generic branch when the trace-augmented branch fails.
        #[arg(long)]
        strict_alg1: bool,
    },
    /// Seeded Monte-Carlo decoding trials; prints a JSON report.
    Simulate {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        subfield_only: bool,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        strict_alg1: bool,
    },
    /// Check the built-in worked example over F_625.
    Selftest,
    /// Exhaustive minimum rank distance.
    Mindist {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Median decode time for k = n and growing n.
    Bench {
        #[arg(long, default_value_t = 3)]
        q: u32,
        #[arg(long, value_delimiter = ',', default_value = "4,8,16")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 15)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return EXIT_IO;
        }
        if let Some(tzmrd::Error::Io(_)) = cause.downcast_ref::<tzmrd::Error>() {
            return EXIT_IO;
        }
    }
    EXIT_INVALID
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn load_code(path: &Path) -> Result<TzCode> {
    let text = read(path)?;
    let params = ParamsFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(params.to_code()?)
}

/// Accepts `[a,b,c]` or `a,b,c`.
fn parse_coeffs(s: &str) -> Result<Vec<u32>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(|t| t.trim().parse::<u32>().with_context(|| format!("bad coefficient {t:?} in {s:?}")))
        .collect()
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Gen { q, n, k, modulus, gamma, xi, out } => {
            let field = match modulus {
                Some(m) => Field::with_modulus(q, n, &parse_coeffs(&m)?)?,
                None => Field::new(q, n)?,
            };
            let mut params = CodeParams::default();
            if let (Some(g), Some(x)) = (gamma, xi) {
                params.gamma = Some(field.from_coeffs(&parse_coeffs(&g)?)?);
                params.xi = Some(field.from_coeffs(&parse_coeffs(&x)?)?);
            }
            let code = TzCode::build(field, k, params)?;
            write(&out, &ParamsFile::from_code(&code).to_json())?;
            println!(
                "wrote [{}x{}] TZ code over F_{}^{} (d = {}) to {}",
                code.length(),
                code.message_len(),
                q,
                2 * n,
                code.min_distance(),
                out.display()
            );
            Ok(0)
        }
        Command::Encode { params, msg, out } => {
            let code = load_code(&params)?;
            let msgs = parse_vectors(code.field(), &read(&msg)?)?;
            let words = msgs
                .iter()
                .enumerate()
                .map(|(i, m)| code.encode(m).map(|c| format_vector(&c)).with_context(|| format!("message {}", i + 1)))
                .collect::<Result<Vec<_>>>()?;
            write(&out, &lines(words))?;
            Ok(0)
        }
        Command::Decode { params, input, out, strict_alg1 } => {
            let code = load_code(&params)?;
            let words = parse_vectors(code.field(), &read(&input)?)?;
            let opts = DecoderOptions { strict_alg1 };
            let outcomes = words
                .iter()
                .enumerate()
                .map(|(i, r)| decode_with(&code, r, opts).with_context(|| format!("word {}", i + 1)))
                .collect::<Result<Vec<_>>>()?;
            let failures = outcomes.iter().filter(|o| !o.is_success()).count();
            write(&out, &lines(outcomes.iter().map(format_outcome)))?;
            if failures > 0 {
                eprintln!("{failures} of {} words failed to decode", outcomes.len());
                return Ok(EXIT_DECODE_FAILURE);
            }
            Ok(0)
        }
        Command::Simulate { params, t, subfield_only, trials, seed, strict_alg1 } => {
            let code = load_code(&params)?;
            let sim =
                simulate(&code, &ChannelSpec::new(t, subfield_only, seed), trials, DecoderOptions { strict_alg1 })?;
            println!("{}", serde_json::to_string_pretty(&sim)?);
            Ok(0)
        }
        Command::Selftest => {
            let results = selftest::run()?;
            for (name, ok) in &results {
                println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
            }
            Ok(if results.iter().all(|r| r.1) { 0 } else { EXIT_DECODE_FAILURE })
        }
        Command::Mindist { params, budget } => {
            let code = load_code(&params)?;
            let d = min_distance_bruteforce(&code, budget)?;
            println!("{d}");
            Ok(0)
        }
        Command::Bench { q, sizes, reps, seed } => {
            if sizes.contains(&0) {
                bail!("sizes must be positive");
            }
            let report = bench(q, &sizes, reps, seed)?;
            println!("{:>4} {:>4} {:>4} {:>14}", "n", "k", "t", "median_us");
            for r in &report.rows {
                println!("{:>4} {:>4} {:>4} {:>14.1}", r.n, r.k, r.t, r.median_us);
            }
            match report.slope {
                Some(s) => println!("log-log slope: {s:.3}"),
                None => println!("log-log slope: n/a (need two sizes)"),
            }
            Ok(0)
        }
    }
}

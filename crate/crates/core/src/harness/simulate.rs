//! Seeded Monte-Carlo decoding trials.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::TzCode;
use crate::decoder::{decode_with, DecodeOutcome, DecoderOptions, FailureReason};
use crate::error::Result;
use crate::harness::channel::{random_error, random_message, ChannelSpec};

/// Outcome category for a Success whose codeword differs from the plant.
pub const MISCORRECTION: &str = "Miscorrection";

/// The random stream for trial `index`: the master seed with the trial index
/// as ChaCha stream id, so trials are independent of scheduling.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Deterministic part of a simulation: identical seeds give identical
/// reports, independent of thread count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub subfield_only: bool,
    pub strict_alg1: bool,
    pub seed: u64,
    pub trials: u64,
    pub successes: u64,
    /// Failures keyed by reason name, plus [`MISCORRECTION`].
    pub failures: BTreeMap<String, u64>,
}

impl TrialReport {
    pub fn failure_count(&self) -> u64 {
        self.failures.values().sum()
    }

    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            1.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub mean_us: f64,
    pub p50_us: f64,
    pub p95_us: f64,
    pub max_us: f64,
}

impl Timing {
    pub fn from_samples(mut us: Vec<f64>) -> Self {
        if us.is_empty() {
            return Self { mean_us: 0.0, p50_us: 0.0, p95_us: 0.0, max_us: 0.0 };
        }
        us.sort_by(f64::total_cmp);
        let pick = |p: f64| us[((us.len() - 1) as f64 * p).round() as usize];
        Self {
            mean_us: us.iter().sum::<f64>() / us.len() as f64,
            p50_us: pick(0.5),
            p95_us: pick(0.95),
            max_us: *us.last().unwrap(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Simulation {
    pub report: TrialReport,
    pub timing: Timing,
}

/// What a single trial produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialResult {
    Success,
    Miscorrection,
    Failure(FailureReason),
}

/// Runs trial `index`: random message, random error of the requested rank,
/// decode. Success means both message and error vector equal the plant.
pub fn run_trial(code: &TzCode, spec: &ChannelSpec, opts: DecoderOptions, index: u64) -> Result<(TrialResult, f64)> {
    let f = code.field();
    let mut rng = trial_rng(spec.seed, index);
    let msg = random_message(code, &mut rng);
    let c = code.encode(&msg)?;
    let (e, _) = random_error(code, spec, &mut rng)?;
    let r: Vec<_> = c.iter().zip(&e).map(|(x, y)| f.add(x, y)).collect();
    let start = Instant::now();
    let outcome = decode_with(code, &r, opts)?;
    let us = start.elapsed().as_secs_f64() * 1e6;
    let result = match outcome {
        DecodeOutcome::Success { message, error, .. } if message == msg && error == e => TrialResult::Success,
        DecodeOutcome::Success { .. } => TrialResult::Miscorrection,
        DecodeOutcome::Failure(reason) => TrialResult::Failure(reason),
    };
    Ok((result, us))
}

pub fn simulate(code: &TzCode, spec: &ChannelSpec, trials: u64, opts: DecoderOptions) -> Result<Simulation> {
    spec.validate(code)?;
    let results = (0..trials).into_par_iter().map(|i| run_trial(code, spec, opts, i)).collect::<Result<Vec<_>>>()?;
    let mut report = TrialReport {
        q: code.field().q(),
        n: code.n(),
        k: code.k(),
        t: spec.t,
        subfield_only: spec.subfield_only,
        strict_alg1: opts.strict_alg1,
        seed: spec.seed,
        trials,
        successes: 0,
        failures: BTreeMap::new(),
    };
    let mut times = Vec::with_capacity(results.len());
    for (result, us) in results {
        times.push(us);
        match result {
            TrialResult::Success => report.successes += 1,
            TrialResult::Miscorrection => *report.failures.entry(MISCORRECTION.into()).or_default() += 1,
            TrialResult::Failure(reason) => *report.failures.entry(reason.name().into()).or_default() += 1,
        }
    }
    Ok(Simulation { report, timing: Timing::from_samples(times) })
}

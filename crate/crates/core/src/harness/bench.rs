//! Decode timing as a function of `n`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::code::TzCode;
use crate::decoder::{decode, max_rank};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::harness::channel::{random_error, random_message, ChannelSpec};
use crate::harness::simulate::trial_rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub median_us: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub q: u32,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(time)` against `ln(n)`; needs two sizes.
    pub slope: Option<f64>,
}

/// Times `reps` decodes per size with `k = n` and the largest error rank the
/// generic branch handles, `t = ⌊(n-1)/2⌋`.
pub fn bench(q: u32, sizes: &[usize], reps: usize, seed: u64) -> Result<BenchReport> {
    if reps == 0 {
        return Err(Error::InvalidParameter("reps must be positive".into()));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let code = TzCode::new(Field::new(q, n)?, n)?;
        let t = max_rank(&code);
        let spec = ChannelSpec::new(t, false, seed);
        let f = code.field();
        let mut times = Vec::with_capacity(reps);
        for i in 0..reps {
            let mut rng = trial_rng(seed, i as u64);
            let c = code.encode(&random_message(&code, &mut rng))?;
            let (e, _) = random_error(&code, &spec, &mut rng)?;
            let r: Vec<_> = c.iter().zip(&e).map(|(x, y)| f.add(x, y)).collect();
            let start = Instant::now();
            let out = decode(&code, &r)?;
            times.push(start.elapsed().as_secs_f64() * 1e6);
            debug_assert!(out.is_success());
        }
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow { n, k: n, t, median_us: times[times.len() / 2] });
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n as f64).ln(), r.median_us.ln())).collect();
    Ok(BenchReport { q, slope: loglog_slope(&points), rows })
}

pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

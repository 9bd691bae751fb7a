//! Step-count benchmark harness.
//!
//! A "step" is one division producing a nonzero remainder, which is both the
//! number of table rows of the Extended Euclid variants and the Valli length
//! of the Kuttaka variants. Counts are machine-independent, so reports are
//! byte-for-byte reproducible from the seed.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chain::{coprime, RemainderMode};
use crate::congruence::Algo;
use crate::division::Integer;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub min_bits: u32,
    pub max_bits: u32,
    pub samples: usize,
    pub seed: u64,
    pub algos: Vec<Algo>,
    /// Enumerate every coprime pair `2 <= b < a <= limit` instead of sampling.
    pub exhaustive_limit: Option<u64>,
    /// Explicit pairs to measure instead of sampling. Each is ordered so that
    /// `a > b`.
    pub pairs: Vec<(Integer, Integer)>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            min_bits: 8,
            max_bits: 64,
            samples: 1000,
            seed: 0,
            algos: Algo::ALL.to_vec(),
            exhaustive_limit: None,
            pairs: Vec::new(),
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algos.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.min_bits < 2 || self.min_bits > self.max_bits {
            return Err(Error::Config(format!(
                "bit range must satisfy 2 <= min_bits <= max_bits, got {}..{}",
                self.min_bits, self.max_bits
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Measurement {
    pub steps: usize,
    pub valli_len: usize,
    /// S-table recurrence evaluations (Kuttaka variants only).
    pub back_substitutions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub a: Integer,
    pub b: Integer,
    pub measurements: Vec<(Algo, Measurement)>,
}

impl PairRecord {
    pub fn steps(&self, algo: Algo) -> Option<usize> {
        self.measurements.iter().find(|(a, _)| *a == algo).map(|(_, m)| m.steps)
    }

    fn mode_steps(&self, mode: RemainderMode) -> Option<usize> {
        self.measurements.iter().find(|(a, _)| a.mode() == mode).map(|(_, m)| m.steps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgoStats {
    pub algo: Algo,
    pub count: usize,
    pub total_steps: usize,
    pub min_steps: usize,
    pub max_steps: usize,
}

impl AlgoStats {
    /// `total_steps / count`, zero for an empty run.
    pub fn mean_steps(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.total_steps as f64 / self.count as f64
        }
    }
}

/// Absolute-over-positive step ratios across all pairs with a nonzero
/// positive-remainder count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioStats {
    pub best: f64,
    pub mean: f64,
    pub worst: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub records: Vec<PairRecord>,
    pub stats: Vec<AlgoStats>,
    pub dominance_violations: usize,
    pub ratios: Option<RatioStats>,
    /// First pair whose absolute-remainder count is at most half (rounded
    /// up) of the positive-remainder count.
    pub halving_witness: Option<(Integer, Integer)>,
}

/// Divisions with a nonzero remainder executed by `algo` on coprime `a > b > 0`.
pub fn count_steps(a: &Integer, b: &Integer, algo: Algo) -> Result<usize> {
    measure(a, b, algo).map(|m| m.steps)
}

pub fn measure(a: &Integer, b: &Integer, algo: Algo) -> Result<Measurement> {
    let result = algo.run(a, b)?;
    if !result.gcd.is_one() {
        return Err(Error::NoInverse { gcd: result.gcd });
    }
    let (valli_len, back_substitutions) = match &result.kuttaka {
        Some(t) => (t.valli.len(), t.valli.len().saturating_sub(1)),
        None if matches!(algo, Algo::KuttakaClassic | Algo::KuttakaFast) => (0, 0),
        None => (result.rows.iter().filter(|r| r.q.is_some()).count(), 0),
    };
    Ok(Measurement { steps: result.step_count, valli_len, back_substitutions })
}

fn ordered(a: Integer, b: Integer) -> (Integer, Integer) {
    if a > b {
        (a, b)
    } else {
        (b, a)
    }
}

fn sample_pairs(config: &BenchConfig) -> Vec<(Integer, Integer)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let lo = BigUint::one() << (config.min_bits - 1);
    let hi = BigUint::one() << config.max_bits;
    let mut pairs = Vec::with_capacity(config.samples);
    while pairs.len() < config.samples {
        let a = Integer::from(rng.gen_biguint_range(&lo, &hi));
        let b = Integer::from(rng.gen_biguint_range(&lo, &hi));
        if a != b && coprime(&a, &b) {
            pairs.push(ordered(a, b));
        }
    }
    pairs
}

fn exhaustive_pairs(limit: u64) -> Vec<(Integer, Integer)> {
    let mut pairs = Vec::new();
    for a in 3..=limit {
        for b in 2..a {
            if num_integer::gcd(a, b) == 1 {
                pairs.push((Integer::from(a), Integer::from(b)));
            }
        }
    }
    pairs
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    config.validate()?;
    let mut algos = config.algos.clone();
    algos.sort();
    algos.dedup();

    let pairs = if !config.pairs.is_empty() {
        config.pairs.iter().cloned().map(|(a, b)| ordered(a, b)).collect()
    } else if let Some(limit) = config.exhaustive_limit {
        exhaustive_pairs(limit)
    } else {
        sample_pairs(config)
    };

    // Collecting a parallel iterator preserves input order.
    let records: Vec<PairRecord> = pairs
        .into_par_iter()
        .map(|(a, b)| {
            let measurements = algos
                .iter()
                .map(|&algo| measure(&a, &b, algo).map(|m| (algo, m)))
                .collect::<Result<Vec<_>>>()?;
            Ok(PairRecord { a, b, measurements })
        })
        .collect::<Result<_>>()?;

    let mut ratio_sum = 0.0;
    let mut ratio_count = 0usize;
    let mut best = f64::INFINITY;
    let mut worst = f64::NEG_INFINITY;
    let mut halving_witness = None;
    for rec in &records {
        let (Some(pos), Some(abs)) = (
            rec.mode_steps(RemainderMode::LeastPositive),
            rec.mode_steps(RemainderMode::LeastAbsolute),
        ) else {
            continue;
        };
        let pos_algos = [Algo::EeaClassic, Algo::KuttakaClassic];
        let abs_algos = [Algo::EeaAbsolute, Algo::KuttakaFast];
        let pos_max = pos_algos.iter().filter_map(|&a| rec.steps(a)).max().unwrap_or(pos);
        let abs_max = abs_algos.iter().filter_map(|&a| rec.steps(a)).max().unwrap_or(abs);
        let pos_min = pos_algos.iter().filter_map(|&a| rec.steps(a)).min().unwrap_or(pos);
        if abs_max > pos_min {
            return Err(Error::DominanceViolation { a: rec.a.clone(), b: rec.b.clone() });
        }
        if pos_max > 0 {
            let ratio = abs_max as f64 / pos_max as f64;
            ratio_sum += ratio;
            ratio_count += 1;
            best = best.min(ratio);
            worst = worst.max(ratio);
            if halving_witness.is_none() && abs_max <= pos_max.div_ceil(2) {
                halving_witness = Some((rec.a.clone(), rec.b.clone()));
            }
        }
    }
    let ratios = (ratio_count > 0).then(|| RatioStats { best, mean: ratio_sum / ratio_count as f64, worst });

    let stats = algos
        .iter()
        .map(|&algo| {
            let steps: Vec<usize> = records.iter().filter_map(|r| r.steps(algo)).collect();
            AlgoStats {
                algo,
                count: steps.len(),
                total_steps: steps.iter().sum(),
                min_steps: steps.iter().copied().min().unwrap_or(0),
                max_steps: steps.iter().copied().max().unwrap_or(0),
            }
        })
        .collect();

    Ok(BenchReport { records, stats, dominance_violations: 0, ratios, halving_witness })
}

/// Renders the report as CSV: header `a,b,algo,steps,valli_len`, one row
/// per (pair, algo), then `#`-prefixed summary lines.
pub fn render_csv(report: &BenchReport) -> String {
    let mut out = String::from("a,b,algo,steps,valli_len\n");
    for rec in &report.records {
        for (algo, m) in &rec.measurements {
            let _ = writeln!(out, "{},{},{},{},{}", rec.a, rec.b, algo.name(), m.steps, m.valli_len);
        }
    }
    out.push_str("# algo,mean_steps,min,max,total\n");
    for s in &report.stats {
        let _ = writeln!(
            out,
            "# {},{:.6},{},{},{}",
            s.algo.name(),
            s.mean_steps(),
            s.min_steps,
            s.max_steps,
            s.total_steps
        );
    }
    if let Some(r) = &report.ratios {
        out.push_str("# ratio,best,mean,worst\n");
        let _ = writeln!(out, "# absolute/positive,{:.6},{:.6},{:.6}", r.best, r.mean, r.worst);
    }
    let _ = writeln!(out, "# dominance_violations,{}", report.dominance_violations);
    out
}

pub fn write_csv(report: &BenchReport, mut w: impl Write) -> Result<()> {
    w.write_all(render_csv(report).as_bytes())?;
    Ok(())
}

pub fn report_csv(report: &BenchReport, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_csv(report))?;
    Ok(())
}

impl BenchReport {
    /// Number of measured pairs.
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty() || self.stats.iter().all(|s| s.count.is_zero())
    }
}

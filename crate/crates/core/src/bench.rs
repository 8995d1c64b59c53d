//! Timing the linear-time tilers on seeded random regions.

use std::time::Instant;

use serde::Serialize;

use crate::domino_l::alg_tile;
use crate::fountain::{alg2_tile, s2_retile_table, GeneratingTiles};
use crate::lattice::TileSet;
use crate::random::{eden, RNG_NAME};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchSolver {
    DominoL,
    S2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchResult {
    Tiled,
    Untileable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub generator: String,
    pub seed: u64,
    pub n: usize,
    /// Nanoseconds spent in the solver call, region generation excluded.
    pub wall_time: u64,
    pub tiles_placed: usize,
    pub result: BenchResult,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchSummary {
    pub solver: BenchSolver,
    pub records: Vec<BenchRecord>,
    /// `(n, median wall time)` per size, in input order.
    pub medians: Vec<(usize, u64)>,
    /// Least-squares `b` in `time ~ a * n^b`; `None` with fewer than two sizes.
    pub exponent: Option<f64>,
}

/// Seed of repetition `rep`: consecutive from `seed`, shared across sizes.
pub fn rep_seed(seed: u64, rep: usize) -> u64 {
    seed.wrapping_add(rep as u64)
}

pub fn bench_run(sizes: &[usize], solver: BenchSolver, repetitions: usize, seed: u64) -> BenchSummary {
    let generators = GeneratingTiles::of(&TileSet::s2());
    let mut records = Vec::new();
    let mut medians = Vec::new();
    for &n in sizes {
        let mut times = Vec::with_capacity(repetitions);
        for rep in 0..repetitions {
            let s = rep_seed(seed, rep);
            let region = eden(n, s);
            let start = Instant::now();
            let placed = match solver {
                BenchSolver::DominoL => alg_tile(&region).map(|t| t.len()).ok(),
                BenchSolver::S2 => alg2_tile(&region, &generators, s2_retile_table()).map(|t| t.len()).ok(),
            };
            let wall_time = start.elapsed().as_nanos() as u64;
            times.push(wall_time);
            records.push(BenchRecord {
                generator: format!("eden/{RNG_NAME}"),
                seed: s,
                n,
                wall_time,
                tiles_placed: placed.unwrap_or(0),
                result: if placed.is_some() { BenchResult::Tiled } else { BenchResult::Untileable },
            });
        }
        if let Some(m) = median(&mut times) {
            medians.push((n, m));
        }
    }
    let exponent = fit_exponent(&medians);
    BenchSummary { solver, records, medians, exponent }
}

pub fn median(values: &mut [u64]) -> Option<u64> {
    if values.is_empty() {
        return None;
    }
    values.sort_unstable();
    Some(values[values.len() / 2])
}

/// Slope of the least-squares line through `(ln n, ln t)`.
pub fn fit_exponent(points: &[(usize, u64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|&&(n, t)| n > 0 && t > 0).map(|&(n, t)| ((n as f64).ln(), (t as f64).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_of_exact_power_law() {
        let pts: Vec<(usize, u64)> = [10usize, 100, 1000].iter().map(|&n| (n, (n * n) as u64)).collect();
        assert!((fit_exponent(&pts).unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(fit_exponent(&pts[..1]), None);
    }

    #[test]
    fn records_are_reproducible() {
        let a = bench_run(&[50, 100], BenchSolver::S2, 3, 9);
        let b = bench_run(&[50, 100], BenchSolver::S2, 3, 9);
        assert_eq!(a.records.len(), 6);
        assert_eq!(a.medians.len(), 2);
        let strip =
            |s: &BenchSummary| s.records.iter().map(|r| (r.seed, r.n, r.tiles_placed, r.result)).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
        assert!(a.records.iter().all(|r| r.result == BenchResult::Tiled && r.generator == "eden/chacha8"));
    }

    #[test]
    fn median_picks_the_middle() {
        assert_eq!(median(&mut [5, 1, 3]), Some(3));
        assert_eq!(median(&mut []), None);
    }
}

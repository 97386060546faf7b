//! The seeded Monte Carlo experiments behind `altpaths mc`.
//!
//! All randomness is split from the run seed by counters: trial `t` draws
//! its instance from stream `t` and its subset samples from stream
//! `1_000_000 + t`, so trials are order-independent and the CSV is byte
//! reproducible.

use crate::report::CsvReport;
use crate::CliError;
use altpaths::coloring::{ColoringMatrix, Side, RED};
use altpaths::constructions::{
    auto_blockspec, balanced_split_coloring, matching_chain_paths, random_coloring_rng,
    random_complete_coloring_rng,
};
use altpaths::counting::count_alt_2paths_complete;
use altpaths::matching::{max_matching, BipartiteSubgraphView};
use altpaths::rng::stream_rng;
use rand::seq::index::sample;
use rayon::prelude::*;
use serde::Serialize;

const SAMPLE_STREAM_BASE: u64 = 1_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct McConfig {
    pub experiment: String,
    pub m: usize,
    pub n: usize,
    pub r: u8,
    pub k: usize,
    pub alpha: f64,
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
}

/// Minimum Hamming distance over all right-class pairs, via the column
/// words.
fn min_pair_2paths(c: &ColoringMatrix) -> u64 {
    let words: Vec<Vec<u8>> = (0..c.n())
        .map(|v| (0..c.m()).map(|u| c.color(u, v)).collect())
        .collect();
    let mut min = u64::MAX;
    for u in 0..c.n() {
        for v in (u + 1)..c.n() {
            let d = words[u]
                .iter()
                .zip(&words[v])
                .filter(|(a, b)| a != b)
                .count() as u64;
            min = min.min(d);
        }
    }
    min
}

/// Random coloring per trial; observation is the minimum pair 2-path count,
/// checked against `tolerance * (1 - 1/r) * m`.
pub fn concentration_2path(config: &McConfig) -> Result<CsvReport, CliError> {
    if config.n < 2 {
        return Err(CliError::Precondition(
            "concentration-2path needs n >= 2".into(),
        ));
    }
    let threshold = config.tolerance * (1.0 - 1.0 / config.r as f64) * config.m as f64;
    let mut report = CsvReport::new(
        "mc-concentration-2path",
        config,
        &["trial", "min_pair_count", "threshold", "pass"],
    );
    // Trials run concurrently on independent streams; rows are emitted in
    // trial order, so parallelism never changes bytes.
    let minima: Vec<u64> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let c = random_coloring_rng(
                config.m,
                config.n,
                config.r,
                &mut stream_rng(config.seed, trial),
            );
            min_pair_2paths(&c)
        })
        .collect();
    let mut obs = Vec::new();
    let mut passes = 0u64;
    for (trial, &min) in minima.iter().enumerate() {
        let pass = min as f64 >= threshold;
        passes += pass as u64;
        obs.push(min as f64);
        report.row(vec![
            trial.to_string(),
            min.to_string(),
            format!("{threshold:.6}"),
            pass.to_string(),
        ]);
    }
    report.aggregate("min_pair_count", &obs);
    report.note(format!("pass_count {passes}/{}", config.trials));
    Ok(report)
}

/// Fresh half-density graph per trial, `k` sampled subset pairs of size
/// `alpha * m` each; observation is the matching deficiency, checked
/// against `tolerance * ln m`.
pub fn matching_deficiency(config: &McConfig) -> Result<CsvReport, CliError> {
    let subset = (config.alpha * config.m as f64).round() as usize;
    if subset == 0 || subset > config.m {
        return Err(CliError::Precondition(format!(
            "alpha {} gives subset size {subset} outside 1..={}",
            config.alpha, config.m
        )));
    }
    let bound = config.tolerance * (config.m as f64).ln();
    let mut report = CsvReport::new(
        "mc-matching-deficiency",
        config,
        &[
            "trial",
            "samples",
            "within_bound",
            "max_deficiency",
            "bound",
        ],
    );
    let trials: Vec<Result<(u64, usize), CliError>> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let host =
                random_coloring_rng(config.m, config.m, 2, &mut stream_rng(config.seed, trial));
            let mut rng = stream_rng(config.seed, SAMPLE_STREAM_BASE + trial);
            let mut within = 0u64;
            let mut max_def = 0usize;
            for _ in 0..config.k {
                let a: Vec<usize> = sample(&mut rng, config.m, subset).into_iter().collect();
                let b: Vec<usize> = sample(&mut rng, config.m, subset).into_iter().collect();
                let view = BipartiteSubgraphView::from_coloring(&host, Side::Left, a, b, Some(RED))
                    .map_err(|e| CliError::Precondition(e.to_string()))?;
                let deficiency = subset - max_matching(&view).size();
                max_def = max_def.max(deficiency);
                if (deficiency as f64) <= bound {
                    within += 1;
                }
            }
            Ok((within, max_def))
        })
        .collect();
    let mut obs = Vec::new();
    let mut within_total = 0u64;
    let mut samples_total = 0u64;
    for (trial, result) in trials.into_iter().enumerate() {
        let (within, max_def) = result?;
        within_total += within;
        samples_total += config.k as u64;
        obs.push(max_def as f64);
        report.row(vec![
            trial.to_string(),
            config.k.to_string(),
            within.to_string(),
            max_def.to_string(),
            format!("{bound:.6}"),
        ]);
    }
    report.aggregate("max_deficiency", &obs);
    report.note(format!("within_bound_total {within_total}/{samples_total}"));
    Ok(report)
}

/// Random symmetric coloring per trial; observation is the minimum pair
/// 2-path count over all vertex pairs of `K_n`, checked against
/// `tolerance * (1 - 1/r) * n`.
pub fn complete_2path(config: &McConfig) -> Result<CsvReport, CliError> {
    if config.n < 3 {
        return Err(CliError::Precondition("complete-2path needs n >= 3".into()));
    }
    let threshold = config.tolerance * (1.0 - 1.0 / config.r as f64) * config.n as f64;
    let mut report = CsvReport::new(
        "mc-complete-2path",
        config,
        &["trial", "min_pair_count", "threshold", "pass"],
    );
    let minima: Vec<Result<u64, CliError>> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let cc = random_complete_coloring_rng(
                config.n,
                config.r,
                &mut stream_rng(config.seed, trial),
            );
            let mut min = u64::MAX;
            for u in 0..config.n {
                for v in (u + 1)..config.n {
                    let count = count_alt_2paths_complete(&cc, u, v)
                        .map_err(|e| CliError::Precondition(e.to_string()))?;
                    min = min.min(count);
                }
            }
            Ok(min)
        })
        .collect();
    let mut obs = Vec::new();
    let mut passes = 0u64;
    for (trial, result) in minima.into_iter().enumerate() {
        let min = result?;
        let pass = min as f64 >= threshold;
        passes += pass as u64;
        obs.push(min as f64);
        report.row(vec![
            trial.to_string(),
            min.to_string(),
            format!("{threshold:.6}"),
            pass.to_string(),
        ]);
    }
    report.aggregate("min_pair_count", &obs);
    report.note(format!("pass_count {passes}/{}", config.trials));
    Ok(report)
}

/// One balanced-split coloring; `trials` sampled shared-tail pairs and
/// `trials` sampled random-zone pairs, each run through the chain builder.
/// Tail pairs are checked against `tolerance * m/k` combined; zone pairs
/// against `tolerance * m/(2k)` for each color pattern separately.
pub fn chain_yield(config: &McConfig) -> Result<CsvReport, CliError> {
    let split = balanced_split_coloring(config.m, config.n, config.k, config.seed)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    let c = &split.coloring;
    let nc = split.random_cols;
    let tail = config.n - nc;
    let tail_target = config.tolerance * config.m as f64 / config.k as f64;
    let zone_target = config.tolerance * config.m as f64 / (2.0 * config.k as f64);
    let mut report = CsvReport::new(
        "mc-chain-yield",
        config,
        &[
            "pair_index",
            "kind",
            "u",
            "v",
            "unprimed",
            "primed",
            "total",
            "target",
            "pass",
        ],
    );
    // Pairs are drawn sequentially from one stream; the chain evaluations
    // then run concurrently on the shared coloring and are emitted in draw
    // order.
    let mut rng = stream_rng(config.seed, SAMPLE_STREAM_BASE);
    let mut jobs: Vec<(u64, bool, usize, usize)> = Vec::new();
    if tail >= 2 {
        for i in 0..config.trials {
            let picks = sample(&mut rng, tail, 2);
            jobs.push((i, true, nc + picks.index(0), nc + picks.index(1)));
        }
    }
    for i in 0..config.trials {
        let picks = sample(&mut rng, nc, 2);
        jobs.push((i, false, picks.index(0), picks.index(1)));
    }

    let yields = |u: usize, v: usize| -> Result<(usize, usize), CliError> {
        let pair = auto_blockspec(c, u, v, config.k, Some(nc));
        let mut all = Vec::new();
        let mut unprimed = 0;
        let mut primed = 0;
        if let Some(spec) = &pair.unprimed {
            let paths = matching_chain_paths(c, u, v, config.k, spec)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            unprimed = paths.len();
            all.extend(paths);
        }
        if let Some(spec) = &pair.primed {
            let paths = matching_chain_paths(c, u, v, config.k, spec)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            primed = paths.len();
            all.extend(paths);
        }
        for p in &all {
            p.check_bipartite(c)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
        }
        Ok((unprimed, primed))
    };

    let results: Vec<Result<(usize, usize), CliError>> =
        jobs.par_iter().map(|&(_, _, u, v)| yields(u, v)).collect();

    let mut obs = Vec::new();
    let mut passes = 0u64;
    let mut rows = 0u64;
    for (&(i, is_tail, u, v), result) in jobs.iter().zip(results) {
        let (unprimed, primed) = result?;
        let total = unprimed + primed;
        let (kind, target, pass) = if is_tail {
            ("tail", tail_target, total as f64 >= tail_target)
        } else {
            (
                "zone",
                zone_target,
                unprimed as f64 >= zone_target && primed as f64 >= zone_target,
            )
        };
        passes += pass as u64;
        rows += 1;
        obs.push(total as f64);
        report.row(vec![
            i.to_string(),
            kind.into(),
            u.to_string(),
            v.to_string(),
            unprimed.to_string(),
            primed.to_string(),
            total.to_string(),
            format!("{target:.6}"),
            pass.to_string(),
        ]);
    }
    report.aggregate("total_yield", &obs);
    report.note(format!("pass_count {passes}/{rows}"));
    Ok(report)
}

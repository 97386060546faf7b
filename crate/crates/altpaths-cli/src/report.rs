//! Report plumbing: JSON reports on stdout or a file, CSV trial tables with
//! schema and config headers, and aggregate statistics.
//!
//! Reports are byte-deterministic for a fixed config: no timestamps, no
//! float formatting drift (fixed precision), no map iteration order.

use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

/// One trial table: schema id, config echo, fixed column set, one row per
/// trial, aggregate comment lines.
pub struct CsvReport {
    schema: &'static str,
    config: String,
    columns: &'static [&'static str],
    rows: Vec<Vec<String>>,
    aggregates: Vec<String>,
}

impl CsvReport {
    pub fn new<C: Serialize>(
        schema: &'static str,
        config: &C,
        columns: &'static [&'static str],
    ) -> Self {
        CsvReport {
            schema,
            config: serde_json::to_string(config).expect("config serializes"),
            columns,
            rows: Vec::new(),
            aggregates: Vec::new(),
        }
    }

    pub fn row(&mut self, values: Vec<String>) {
        assert_eq!(values.len(), self.columns.len());
        self.rows.push(values);
    }

    /// Appends an aggregate block over the named observation series.
    pub fn aggregate(&mut self, label: &str, observations: &[f64]) {
        let stats = Stats::from(observations);
        self.aggregates.push(format!(
            "# aggregate {label} count={} min={} max={} mean={} std={} q25={} q50={} q75={}",
            stats.count,
            fmt(stats.min),
            fmt(stats.max),
            fmt(stats.mean),
            fmt(stats.std),
            fmt(stats.q25),
            fmt(stats.q50),
            fmt(stats.q75),
        ));
    }

    pub fn note(&mut self, line: String) {
        self.aggregates.push(format!("# {line}"));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# schema {} v1\n", self.schema));
        out.push_str(&format!("# config {}\n", self.config));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        for line in &self.aggregates {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

fn fmt(x: f64) -> String {
    format!("{x:.6}")
}

/// Aggregates recomputable from the per-trial observations.
pub struct Stats {
    pub count: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub std: f64,
    pub q25: f64,
    pub q50: f64,
    pub q75: f64,
}

impl Stats {
    pub fn from(obs: &[f64]) -> Stats {
        if obs.is_empty() {
            return Stats {
                count: 0,
                min: 0.0,
                max: 0.0,
                mean: 0.0,
                std: 0.0,
                q25: 0.0,
                q50: 0.0,
                q75: 0.0,
            };
        }
        let mut sorted = obs.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite observations"));
        let count = sorted.len();
        let mean = sorted.iter().sum::<f64>() / count as f64;
        let var = sorted.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / count as f64;
        let quantile = |q: f64| -> f64 {
            let rank = (q * count as f64).ceil() as usize;
            sorted[rank.clamp(1, count) - 1]
        };
        Stats {
            count,
            min: sorted[0],
            max: sorted[count - 1],
            mean,
            std: var.sqrt(),
            q25: quantile(0.25),
            q50: quantile(0.50),
            q75: quantile(0.75),
        }
    }
}

/// Writes `content` to `out` or stdout.
pub fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

/// Serializes a JSON report with a trailing newline.
pub fn json_report<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

use std::fs;
use std::path::Path;

use serde::Serialize;

use super::{
    closure_table, diff_count, partition_tables, tolerated_count, ClosureTable, DiffReport,
    EquivalencePartition,
};
use crate::calculi::TNorm;
use crate::error::Result;
use crate::fuzznum::DEFAULT_RESOLUTION;
use crate::lingapprox::ApproxConfig;
use crate::report::fmt_sig;
use crate::termset::TermSet;

/// T-norms in nondecreasing order, term sets, and per-set thresholds.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub tnorms: Vec<TNorm>,
    pub termsets: Vec<(TermSet, Vec<f64>)>,
    pub approx: ApproxConfig,
    pub resolution: usize,
}

impl ExperimentConfig {
    /// Nine T-norms from T1 to T3 (six Schweizer-Sklar members between them)
    /// over L1, L2 and L3.
    pub fn paper() -> Self {
        let sc = |p| TNorm::schweizer(p).expect("valid parameter");
        ExperimentConfig {
            tnorms: vec![
                TNorm::BOUNDED,
                sc(-0.8),
                sc(-0.5),
                sc(-0.3),
                TNorm::PRODUCT,
                sc(0.5),
                sc(1.0),
                sc(2.0),
                TNorm::MIN,
            ],
            termsets: vec![
                (TermSet::builtin("L1").expect("built-in"), vec![0.0]),
                (
                    TermSet::builtin("L2").expect("built-in"),
                    vec![0.065, 0.155],
                ),
                (TermSet::builtin("L3").expect("built-in"), vec![0.12]),
            ],
            approx: ApproxConfig::default(),
            resolution: DEFAULT_RESOLUTION,
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "paper" => Some(Self::paper()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TermSetReport {
    pub termset: String,
    pub comparable_cells: usize,
    #[serde(skip)]
    pub tables: Vec<ClosureTable>,
    /// Each T-norm against the next one in order.
    pub adjacent: Vec<DiffReport>,
    /// Every unordered pair of T-norms.
    pub pairwise: Vec<DiffReport>,
    pub partitions: Vec<EquivalencePartition>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub tnorms: Vec<String>,
    pub approx: ApproxConfig,
    pub resolution: usize,
    pub termsets: Vec<TermSetReport>,
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let mut termsets = Vec::with_capacity(cfg.termsets.len());
    for (ts, thresholds) in &cfg.termsets {
        for &t in thresholds {
            tolerated_count(t, 0)?;
        }
        let tables = cfg
            .tnorms
            .iter()
            .map(|t| closure_table(t, ts, &cfg.approx, cfg.resolution))
            .collect::<Result<Vec<_>>>()?;
        let adjacent = tables
            .windows(2)
            .map(|w| diff_count(&w[0], &w[1]))
            .collect::<Result<Vec<_>>>()?;
        let mut pairwise = Vec::new();
        for i in 0..tables.len() {
            for j in i + 1..tables.len() {
                pairwise.push(diff_count(&tables[i], &tables[j])?);
            }
        }
        let partitions = thresholds
            .iter()
            .map(|&t| partition_tables(&tables, t))
            .collect::<Result<Vec<_>>>()?;
        termsets.push(TermSetReport {
            termset: ts.name().to_string(),
            comparable_cells: ts.len() * (ts.len() + 1) / 2,
            tables,
            adjacent,
            pairwise,
            partitions,
        });
    }
    Ok(ExperimentReport {
        tnorms: cfg.tnorms.iter().map(ToString::to_string).collect(),
        approx: cfg.approx,
        resolution: cfg.resolution,
        termsets,
    })
}

/// File-name-safe form of a selector: `Tsc(p=-0.5)` becomes `Tsc_p_m0.5`.
pub(crate) fn slug(s: &str) -> String {
    s.chars()
        .filter_map(|c| match c {
            '(' | '=' => Some('_'),
            ')' => None,
            '-' => Some('m'),
            c => Some(c),
        })
        .collect()
}

impl ExperimentReport {
    pub fn table_count(&self) -> usize {
        self.termsets.iter().map(|t| t.tables.len()).sum()
    }

    /// Markdown summary: adjacent differences and partitions per term set.
    pub fn summary_markdown(&self) -> String {
        let mut out = String::from("# Closure experiment\n\n");
        out.push_str(&format!(
            "T-norms: {}\n\nApproximation weights: centroid {}, area {}; resolution {}\n",
            self.tnorms.join(", "),
            fmt_sig(self.approx.weight_centroid),
            fmt_sig(self.approx.weight_area),
            self.resolution
        ));
        for ts in &self.termsets {
            out.push_str(&format!(
                "\n## {} ({} comparable cells)\n\n",
                ts.termset, ts.comparable_cells
            ));
            let rows: Vec<Vec<String>> = ts
                .adjacent
                .iter()
                .map(|d| {
                    vec![
                        format!("{} -> {}", d.pair[0], d.pair[1]),
                        d.count.to_string(),
                        format!("{}%", fmt_sig(100.0 * d.percent)),
                    ]
                })
                .collect();
            out.push_str(&crate::report::markdown_table(
                &["pair", "count", "percent"],
                &rows,
            ));
            for p in &ts.partitions {
                out.push_str(&format!(
                    "\nThreshold {}%: {} classes\n\n",
                    fmt_sig(100.0 * p.threshold),
                    p.classes.len()
                ));
                for class in &p.classes {
                    out.push_str(&format!("- {{{}}}\n", class.join(", ")));
                }
            }
        }
        out
    }

    /// Writes `summary.md`, `report.json` and one CSV and Markdown file per
    /// closure table under `<dir>/<termset>/`.
    pub fn write_dir(&self, dir: &Path) -> Result<Vec<std::path::PathBuf>> {
        let mut written = Vec::new();
        fs::create_dir_all(dir)?;
        for ts in &self.termsets {
            let sub = dir.join(&ts.termset);
            fs::create_dir_all(&sub)?;
            for table in &ts.tables {
                let stem = slug(&table.tnorm().to_string());
                for (ext, body) in [("csv", table.to_csv()), ("md", table.to_markdown())] {
                    let path = sub.join(format!("{stem}.{ext}"));
                    fs::write(&path, body)?;
                    written.push(path);
                }
            }
        }
        let summary = dir.join("summary.md");
        fs::write(&summary, self.summary_markdown())?;
        written.push(summary);
        let json = dir.join("report.json");
        fs::write(&json, serde_json::to_string_pretty(self)? + "\n")?;
        written.push(json);
        Ok(written)
    }
}

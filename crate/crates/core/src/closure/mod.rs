//! Closure tables of fuzzified T-norms over a term set, difference counts
//! between tables, and chain-based equivalence classes of T-norms.

mod experiment;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::calculi::TNorm;
use crate::error::{Error, Result};
use crate::fuzznum::{extend_binary, Features, HasFeatures};
use crate::lingapprox::{nearest, ApproxConfig};
use crate::report::{csv_record, markdown_table};
use crate::termset::TermSet;

pub use experiment::{run_experiment, ExperimentConfig, ExperimentReport, TermSetReport};

/// Result of `T(term_i, term_j)` for every pair, approximated back into the
/// term set. Cells hold term indices.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureTable {
    tnorm: TNorm,
    termset: String,
    labels: Vec<String>,
    cells: Vec<Vec<usize>>,
}

impl ClosureTable {
    pub fn tnorm(&self) -> TNorm {
        self.tnorm
    }

    pub fn termset(&self) -> &str {
        &self.termset
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        self.cells[i][j]
    }

    pub fn label(&self, i: usize, j: usize) -> &str {
        &self.labels[self.cells[i][j]]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// `n(n+1)/2`: the upper triangle with its diagonal.
    pub fn comparable_cells(&self) -> usize {
        let n = self.len();
        n * (n + 1) / 2
    }

    fn label_rows(&self) -> Vec<Vec<String>> {
        self.cells
            .iter()
            .enumerate()
            .map(|(i, row)| {
                std::iter::once(self.labels[i].clone())
                    .chain(row.iter().map(|&k| self.labels[k].clone()))
                    .collect()
            })
            .collect()
    }

    fn header(&self) -> Vec<String> {
        std::iter::once(self.tnorm.to_string())
            .chain(self.labels.iter().cloned())
            .collect()
    }

    /// First row and column carry the term labels; the corner names the T-norm.
    pub fn to_csv(&self) -> String {
        let mut out = csv_record(&self.header());
        out.push('\n');
        for row in self.label_rows() {
            out.push_str(&csv_record(&row));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "Closure of {} on {}\n", self.tnorm, self.termset);
        out.push_str(&markdown_table(&self.header(), &self.label_rows()));
        out
    }
}

impl Serialize for ClosureTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            tnorm: String,
            termset: &'a str,
            labels: &'a [String],
            cells: Vec<Vec<&'a str>>,
        }
        View {
            tnorm: self.tnorm.to_string(),
            termset: &self.termset,
            labels: &self.labels,
            cells: self
                .cells
                .iter()
                .map(|row| row.iter().map(|&k| self.labels[k].as_str()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// Build the closure table of `tnorm` on `ts`.
///
/// Only the upper triangle is evaluated (cells in parallel); the lower
/// triangle is its mirror image. Discontinuous T-norms are rejected since
/// level-wise extension needs continuity.
pub fn closure_table(
    tnorm: &TNorm,
    ts: &TermSet,
    cfg: &ApproxConfig,
    resolution: usize,
) -> Result<ClosureTable> {
    if !tnorm.is_continuous() {
        return Err(Error::domain(format!(
            "{tnorm} is discontinuous and cannot be fuzzified level by level"
        )));
    }
    let sem = ts.semantics();
    let feats: Vec<Features> = sem.iter().map(HasFeatures::features).collect();
    let n = sem.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let f = |u: f64, v: f64| tnorm.eval(u.clamp(0.0, 1.0), v.clamp(0.0, 1.0));
    let upper = pairs
        .par_iter()
        .map(|&(i, j)| {
            let result = extend_binary(f, &sem[i], &sem[j], resolution)?;
            Ok(nearest(result.features(), &feats, cfg).0)
        })
        .collect::<Result<Vec<usize>>>()?;

    let mut cells = vec![vec![0; n]; n];
    for (&(i, j), &k) in pairs.iter().zip(&upper) {
        cells[i][j] = k;
        cells[j][i] = k;
    }
    Ok(ClosureTable {
        tnorm: *tnorm,
        termset: ts.name().to_string(),
        labels: ts.labels().map(str::to_string).collect(),
        cells,
    })
}

/// Number of comparable cells on which two closure tables disagree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiffReport {
    pub pair: [String; 2],
    pub count: usize,
    #[serde(serialize_with = "crate::report::serialize_sig")]
    pub percent: f64,
}

pub fn diff_count(a: &ClosureTable, b: &ClosureTable) -> Result<DiffReport> {
    if a.termset != b.termset || a.labels != b.labels {
        return Err(Error::domain(format!(
            "closure tables are over different term sets ({} vs {})",
            a.termset, b.termset
        )));
    }
    let n = a.len();
    let count = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.cells[i][j] != b.cells[i][j])
        .count();
    Ok(DiffReport {
        pair: [a.tnorm.to_string(), b.tnorm.to_string()],
        count,
        percent: count as f64 / a.comparable_cells() as f64,
    })
}

/// Ordered groups of T-norms whose closures differ by at most `threshold`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalencePartition {
    #[serde(serialize_with = "crate::report::serialize_sig")]
    pub threshold: f64,
    pub classes: Vec<Vec<String>>,
}

impl EquivalencePartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Largest tolerated difference count for `threshold` over `cells` cells.
///
/// Counts are compared rather than percentages: a threshold stands for the
/// nearest whole number of cells, so `0.065` over 45 cells tolerates 3.
pub fn tolerated_count(threshold: f64, cells: usize) -> Result<usize> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::domain(format!(
            "threshold {threshold} is outside [0, 1]"
        )));
    }
    Ok((threshold * cells as f64).round() as usize)
}

/// Greedy chain grouping over `tables` in the given order: a table joins the
/// current class when it differs from every member by at most the tolerated
/// count, and starts a new class otherwise.
pub fn partition_tables(tables: &[ClosureTable], threshold: f64) -> Result<EquivalencePartition> {
    let Some(first) = tables.first() else {
        return Ok(EquivalencePartition {
            threshold,
            classes: Vec::new(),
        });
    };
    let limit = tolerated_count(threshold, first.comparable_cells())?;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (k, table) in tables.iter().enumerate() {
        let joins = match groups.last() {
            None => false,
            Some(group) => {
                let mut fits = true;
                for &m in group {
                    if diff_count(&tables[m], table)?.count > limit {
                        fits = false;
                        break;
                    }
                }
                fits
            }
        };
        match groups.last_mut() {
            Some(group) if joins => group.push(k),
            _ => groups.push(vec![k]),
        }
    }
    Ok(EquivalencePartition {
        threshold,
        classes: groups
            .into_iter()
            .map(|g| g.into_iter().map(|k| tables[k].tnorm.to_string()).collect())
            .collect(),
    })
}

/// Closure tables for `tnorms` (in nondecreasing order) followed by
/// [`partition_tables`].
pub fn equivalence_classes(
    tnorms: &[TNorm],
    ts: &TermSet,
    cfg: &ApproxConfig,
    resolution: usize,
    threshold: f64,
) -> Result<EquivalencePartition> {
    tolerated_count(threshold, 0)?;
    let tables = tnorms
        .iter()
        .map(|t| closure_table(t, ts, cfg, resolution))
        .collect::<Result<Vec<_>>>()?;
    partition_tables(&tables, threshold)
}

use serde::Serialize;

use super::Connective;
use crate::error::{Error, Result};

/// `n` equally spaced points `0, 1/(n-1), ..., 1`.
pub(crate) fn lattice(n: usize) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n).map(|i| i as f64 / last).collect()
}

/// Largest observed violation of each axiom on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxiomReport {
    pub grid: usize,
    /// `C(a, e) = C(e, a) = a` for the identity `e`, and the absorbing element.
    #[serde(serialize_with = "crate::report::serialize_sig")]
    pub boundary: f64,
    #[serde(serialize_with = "crate::report::serialize_sig")]
    pub commutativity: f64,
    /// Largest drop `C(a, b) - C(a', b)` for `a < a'` adjacent on the grid.
    #[serde(serialize_with = "crate::report::serialize_sig")]
    pub monotonicity: f64,
    #[serde(serialize_with = "crate::report::serialize_sig")]
    pub associativity: f64,
}

impl AxiomReport {
    /// Boundary and commutativity exact, the rest within `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.boundary == 0.0
            && self.commutativity == 0.0
            && self.monotonicity <= tol
            && self.associativity <= tol
    }
}

/// Checks the T-norm (or T-conorm) axioms on a `grid x grid` lattice, and
/// associativity on `grid³`.
pub fn check_axioms<C: Connective + ?Sized>(op: &C, grid: usize) -> Result<AxiomReport> {
    if grid < 3 {
        return Err(Error::domain(format!(
            "axiom grid needs at least 3 points (got {grid})"
        )));
    }
    let pts = lattice(grid);
    let e = op.identity();
    let z = 1.0 - e;
    let mut r = AxiomReport {
        grid,
        boundary: 0.0,
        commutativity: 0.0,
        monotonicity: 0.0,
        associativity: 0.0,
    };
    for &a in &pts {
        r.boundary = r
            .boundary
            .max((op.apply(a, e) - a).abs())
            .max((op.apply(e, a) - a).abs())
            .max((op.apply(a, z) - z).abs())
            .max((op.apply(z, a) - z).abs());
    }
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts {
            let ab = op.apply(a, b);
            r.commutativity = r.commutativity.max((ab - op.apply(b, a)).abs());
            if let Some(&next) = pts.get(i + 1) {
                r.monotonicity = r
                    .monotonicity
                    .max(ab - op.apply(next, b))
                    .max(op.apply(b, a) - op.apply(b, next));
            }
            for &c in &pts {
                let gap = (op.apply(ab, c) - op.apply(a, op.apply(b, c))).abs();
                r.associativity = r.associativity.max(gap);
            }
        }
    }
    Ok(r)
}

/// Number of `(pair, point)` combinations where `ops[k](a, b) > ops[k+1](a, b)`
/// on a `grid x grid` lattice. Zero means the list is a pointwise chain.
pub fn chain_violations(ops: &[&dyn Connective], grid: usize) -> usize {
    let pts = lattice(grid.max(2));
    ops.windows(2)
        .map(|w| {
            pts.iter()
                .flat_map(|&a| pts.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| w[0].apply(a, b) > w[1].apply(a, b))
                .count()
        })
        .sum()
}

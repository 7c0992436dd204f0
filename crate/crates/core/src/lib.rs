//! Linguistic uncertainty calculi.
//!
//! Trapezoidal fuzzy numbers, triangular norms and conorms, linguistic term
//! sets, linguistic approximation, and the closure experiment that groups
//! T-norms into equivalence classes at a given term-set granularity.
//!
//! ```
//! use granulab::{approximate, closure_table, ApproxConfig, TNorm, TermSet};
//!
//! let l1 = TermSet::builtin("L1").unwrap();
//! let cfg = ApproxConfig::default();
//! let table = closure_table(&TNorm::MIN, &l1, &cfg, 101).unwrap();
//! assert_eq!(table.label(2, 2), "maybe");
//!
//! let maybe = l1.lookup("maybe").unwrap();
//! assert_eq!(approximate(&maybe.semantics, &l1, &cfg).term.label, "maybe");
//! ```

// `!(x <= y)` style checks deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod calculi;
pub mod closure;
pub mod error;
pub mod fuzznum;
pub mod lingapprox;
pub mod plot;
pub mod report;
pub mod termset;

pub use calculi::{CalculusSpec, Connective, Kind, Negation, TConorm, TNorm};
pub use closure::{
    closure_table, diff_count, equivalence_classes, run_experiment, ClosureTable, DiffReport,
    EquivalencePartition, ExperimentConfig, ExperimentReport,
};
pub use error::{Error, Result};
pub use fuzznum::{
    DiscretizedFuzzy, Features, FuzzyNumber, HasFeatures, Interval, UnitFuzzyNumber,
};
pub use lingapprox::{approximate, distance, ApproxConfig, Approximation, TieBreak};
pub use termset::{Term, TermSet};

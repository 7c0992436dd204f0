//! Shared inputs for the benchmarks.

use granulab::{FuzzyNumber, TermSet};

/// The built-in term sets, coarsest first.
pub fn builtin_termsets() -> Vec<TermSet> {
    TermSet::BUILTIN_NAMES
        .iter()
        .map(|name| TermSet::builtin(name).expect("built-in term set"))
        .collect()
}

/// Two mid-range operands with different spreads.
pub fn operands() -> (FuzzyNumber, FuzzyNumber) {
    (
        FuzzyNumber::new(0.41, 0.58, 0.09, 0.07).expect("valid"),
        FuzzyNumber::new(0.22, 0.36, 0.05, 0.06).expect("valid"),
    )
}

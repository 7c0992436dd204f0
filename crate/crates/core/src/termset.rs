//! Linguistic term sets: ordered vocabularies of likelihood labels with
//! trapezoidal semantics on `[0, 1]`.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzznum::{FuzzyNumber, HasFeatures, UnitFuzzyNumber};

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub label: String,
    pub semantics: UnitFuzzyNumber,
}

impl Term {
    pub fn new(label: impl Into<String>, semantics: UnitFuzzyNumber) -> Result<Self> {
        let label = label.into();
        if label.trim().is_empty() {
            return Err(Error::invariant("term", "label is empty"));
        }
        Ok(Term { label, semantics })
    }
}

/// An ordered, validated list of terms.
///
/// Invariants: at least two terms, unique nonempty labels, supports inside
/// `[0, 1]`, centroids nondecreasing along the list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTermSet", into = "RawTermSet")]
pub struct TermSet {
    name: String,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    label: String,
    a: f64,
    b: f64,
    alpha: f64,
    beta: f64,
}

#[derive(Serialize, Deserialize)]
struct RawTermSet {
    name: String,
    terms: Vec<RawTerm>,
}

impl TryFrom<RawTermSet> for TermSet {
    type Error = Error;

    fn try_from(raw: RawTermSet) -> Result<Self> {
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let semantics = UnitFuzzyNumber::from_tuple(t.a, t.b, t.alpha, t.beta)
                    .map_err(|e| Error::invariant(format!("term `{}`", t.label), e.to_string()))?;
                Term::new(t.label, semantics)
            })
            .collect::<Result<Vec<_>>>()?;
        TermSet::new(raw.name, terms)
    }
}

impl From<TermSet> for RawTermSet {
    fn from(ts: TermSet) -> Self {
        RawTermSet {
            name: ts.name,
            terms: ts
                .terms
                .into_iter()
                .map(|t| {
                    let (a, b, alpha, beta) = t.semantics.get().tuple();
                    RawTerm {
                        label: t.label,
                        a,
                        b,
                        alpha,
                        beta,
                    }
                })
                .collect(),
        }
    }
}

type Row = (&'static str, f64, f64, f64, f64);

const L1: &[Row] = &[
    ("impossible", 0.0, 0.0, 0.0, 0.0),
    ("unlikely", 0.0, 0.25, 0.0, 0.1),
    ("maybe", 0.4, 0.6, 0.1, 0.1),
    ("likely", 0.75, 1.0, 0.1, 0.0),
    ("certain", 1.0, 1.0, 0.0, 0.0),
];

const L2: &[Row] = &[
    ("impossible", 0.0, 0.0, 0.0, 0.0),
    ("extremely_unlikely", 0.0, 0.02, 0.0, 0.05),
    ("very_low_chance", 0.1, 0.18, 0.06, 0.05),
    ("small_chance", 0.22, 0.36, 0.05, 0.06),
    ("it_may", 0.41, 0.58, 0.09, 0.07),
    ("meaningful_chance", 0.63, 0.80, 0.05, 0.06),
    ("most_likely", 0.78, 0.92, 0.06, 0.05),
    ("extremely_likely", 0.98, 1.0, 0.05, 0.0),
    ("certain", 1.0, 1.0, 0.0, 0.0),
];

const L3: &[Row] = &[
    ("impossible", 0.0, 0.0, 0.0, 0.0),
    ("extremely_unlikely", 0.0, 0.02, 0.0, 0.05),
    ("not_likely", 0.05, 0.15, 0.03, 0.03),
    ("very_low_chance", 0.1, 0.18, 0.06, 0.05),
    ("small_chance", 0.22, 0.36, 0.05, 0.06),
    ("it_may", 0.41, 0.58, 0.09, 0.07),
    ("likely", 0.53, 0.69, 0.09, 0.12),
    ("meaningful_chance", 0.63, 0.80, 0.05, 0.06),
    ("high_chance", 0.75, 0.87, 0.04, 0.04),
    ("most_likely", 0.78, 0.92, 0.06, 0.05),
    ("very_high_chance", 0.87, 0.96, 0.04, 0.03),
    ("extremely_likely", 0.98, 1.0, 0.05, 0.0),
    ("certain", 1.0, 1.0, 0.0, 0.0),
];

impl TermSet {
    /// Names accepted by [`TermSet::builtin`], coarsest first.
    pub const BUILTIN_NAMES: [&'static str; 3] = ["L1", "L2", "L3"];

    pub fn new(name: impl Into<String>, terms: Vec<Term>) -> Result<Self> {
        let name = name.into();
        let what = || format!("term set `{name}`");
        if terms.len() < 2 {
            return Err(Error::invariant(
                what(),
                format!("needs at least 2 terms, has {}", terms.len()),
            ));
        }
        for (i, t) in terms.iter().enumerate() {
            if t.label.trim().is_empty() {
                return Err(Error::invariant(
                    what(),
                    format!("term {i} has an empty label"),
                ));
            }
            if terms[..i].iter().any(|u| u.label == t.label) {
                return Err(Error::invariant(
                    what(),
                    format!("duplicate label `{}`", t.label),
                ));
            }
        }
        for w in terms.windows(2) {
            let (c0, c1) = (
                w[0].semantics.features().centroid,
                w[1].semantics.features().centroid,
            );
            if c1 < c0 {
                return Err(Error::invariant(
                    what(),
                    format!(
                        "centroid of `{}` ({c1}) is below that of the preceding `{}` ({c0})",
                        w[1].label, w[0].label
                    ),
                ));
            }
        }
        Ok(TermSet { name, terms })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let rows = match name.to_ascii_uppercase().as_str() {
            "L1" => L1,
            "L2" => L2,
            "L3" => L3,
            _ => {
                return Err(Error::domain(format!(
                    "unknown term set `{name}` (built-ins: L1, L2, L3)"
                )))
            }
        };
        let terms = rows
            .iter()
            .map(|&(label, a, b, alpha, beta)| Term {
                label: label.to_string(),
                semantics: UnitFuzzyNumber::from_tuple(a, b, alpha, beta)
                    .expect("built-in tuple is valid"),
            })
            .collect();
        TermSet::new(name.to_ascii_uppercase(), terms)
    }

    /// A built-in name, or else a path to a JSON term-set file.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        match TermSet::builtin(name_or_path) {
            Ok(ts) => Ok(ts),
            Err(_) if Path::new(name_or_path).exists() => TermSet::load(name_or_path),
            Err(e) => Err(e),
        }
    }

    pub fn from_reader<R: Read>(reader: R) -> Result<Self> {
        Ok(serde_json::from_reader(reader)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        TermSet::from_reader(fs::File::open(path)?)
    }

    pub fn to_writer<W: Write>(&self, writer: W) -> Result<()> {
        Ok(serde_json::to_writer_pretty(writer, self)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut file = fs::File::create(path)?;
        self.to_writer(&mut file)?;
        file.write_all(b"\n")?;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false; a term set has at least two terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|t| t.label.as_str())
    }

    pub fn term(&self, index: usize) -> &Term {
        &self.terms[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.terms
            .iter()
            .position(|t| t.label == label)
            .ok_or_else(|| Error::domain(format!("no term `{label}` in term set `{}`", self.name)))
    }

    pub fn lookup(&self, label: &str) -> Result<&Term> {
        Ok(&self.terms[self.index_of(label)?])
    }

    /// Semantics of every term as plain fuzzy numbers, in order.
    pub fn semantics(&self) -> Vec<FuzzyNumber> {
        self.terms.iter().map(|t| t.semantics.get()).collect()
    }
}

//! Triangular norms, conorms and negations.
//!
//! A calculus of uncertainty is a DeMorgan triple: a T-norm for conjunction,
//! a T-conorm for disjunction and an involutive negation tying them together
//! through `S(a, b) = N(T(N(a), N(b)))`.
//!
//! Six fixed operators form the classic ladder (drastic, bounded, Einstein,
//! algebraic, Hamacher-zero and min/max, written `T0 ... T3` in selector
//! strings) and six parametrized families span the space between them.
//! Parameters are validated when a selector is built; evaluation is total on
//! `[0, 1]²`.

mod axioms;
mod formulas;
mod parse;

use std::fmt;

use crate::error::{Error, Result};

pub use axioms::{chain_violations, check_axioms, AxiomReport};

/// Operator shape shared by a T-norm and its dual T-conorm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kind {
    /// `T0` / `S0`: drastic product and sum.
    Drastic,
    /// `T1` / `S1`: bounded difference `max(0, a + b - 1)` and bounded sum.
    Bounded,
    /// `T1.5` / `S1.5`: Einstein product and sum.
    Einstein,
    /// `T2` / `S2`: product and probabilistic sum.
    Algebraic,
    /// `T2.5` / `S2.5`: Hamacher product with γ = 0.
    HamacherZero,
    /// `T3` / `S3`: min and max.
    MinMax,
    Yager {
        q: f64,
    },
    Dubois {
        alpha: f64,
    },
    Hamacher {
        gamma: f64,
    },
    Schweizer {
        p: f64,
    },
    Frank {
        theta: f64,
    },
    Sugeno {
        lambda: f64,
    },
}

/// Distance from 1 below which a Frank parameter is rejected.
pub const FRANK_ONE_GAP: f64 = 1e-6;

impl Kind {
    fn validate(self) -> Result<Self> {
        let bad = |what: &str| Err(Error::domain(format!("{what} (got {self:?})")));
        match self {
            Kind::Yager { q } if !(q > 0.0 && q.is_finite()) => {
                bad("Yager q must be a positive finite number")
            }
            Kind::Dubois { alpha } if !(0.0..=1.0).contains(&alpha) => {
                bad("Dubois alpha must lie in [0, 1]")
            }
            Kind::Hamacher { gamma } if !(gamma >= 0.0 && gamma.is_finite()) => {
                bad("Hamacher gamma must be a nonnegative finite number")
            }
            Kind::Schweizer { p } if p == 0.0 || p.is_nan() => {
                bad("Schweizer p must be nonzero (use the product for p -> 0)")
            }
            Kind::Frank { theta } if !(theta > 0.0 && theta.is_finite()) => {
                bad("Frank theta must be a positive finite number")
            }
            Kind::Frank { theta } if (theta - 1.0).abs() < FRANK_ONE_GAP => {
                bad("Frank theta too close to 1 (use the product for theta -> 1)")
            }
            Kind::Sugeno { lambda } if !(lambda >= -1.0 && lambda.is_finite()) => {
                bad("Sugeno lambda must be a finite number >= -1")
            }
            _ => Ok(self),
        }
    }

    /// False for operators with a jump on `[0, 1]²`: the drastic pair and the
    /// Schweizer family at `p = -inf`.
    pub fn is_continuous(&self) -> bool {
        !matches!(self, Kind::Drastic)
            && !matches!(self, Kind::Schweizer { p } if *p == f64::NEG_INFINITY)
    }

    fn ladder_name(&self) -> Option<&'static str> {
        Some(match self {
            Kind::Drastic => "0",
            Kind::Bounded => "1",
            Kind::Einstein => "1.5",
            Kind::Algebraic => "2",
            Kind::HamacherZero => "2.5",
            Kind::MinMax => "3",
            _ => return None,
        })
    }

    fn family_string(&self, conorm: bool) -> String {
        let prefix = if conorm { "S-" } else { "" };
        match *self {
            Kind::Yager { q } => format!("{prefix}Yager(q={q})"),
            Kind::Dubois { alpha } => format!("{prefix}Dubois(alpha={alpha})"),
            Kind::Hamacher { gamma } => format!("{prefix}Hamacher(gamma={gamma})"),
            Kind::Schweizer { p } if conorm => format!("Ssc(p={p})"),
            Kind::Schweizer { p } => format!("Tsc(p={p})"),
            Kind::Frank { theta } => format!("{prefix}Frank(theta={theta})"),
            Kind::Sugeno { lambda } => format!("{prefix}Sugeno(lambda={lambda})"),
            _ => unreachable!("ladder operators are named by their rung"),
        }
    }
}

/// A binary aggregation operator on `[0, 1]`.
pub trait Connective {
    fn apply(&self, a: f64, b: f64) -> f64;

    /// Neutral element: 1 for T-norms, 0 for T-conorms.
    fn identity(&self) -> f64;

    /// `T(x1, ..., xn)` as a left fold of the binary operator.
    fn fold(&self, xs: &[f64]) -> Result<f64> {
        let (first, rest) = xs
            .split_first()
            .ok_or_else(|| Error::domain("cannot aggregate an empty list"))?;
        if let Some(x) = xs.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(Error::domain(format!("argument {x} is outside [0, 1]")));
        }
        Ok(rest.iter().fold(*first, |acc, &x| self.apply(acc, x)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TNorm {
    kind: Kind,
}

impl TNorm {
    pub const DRASTIC: TNorm = TNorm {
        kind: Kind::Drastic,
    };
    pub const BOUNDED: TNorm = TNorm {
        kind: Kind::Bounded,
    };
    pub const EINSTEIN: TNorm = TNorm {
        kind: Kind::Einstein,
    };
    pub const PRODUCT: TNorm = TNorm {
        kind: Kind::Algebraic,
    };
    pub const HAMACHER_ZERO: TNorm = TNorm {
        kind: Kind::HamacherZero,
    };
    pub const MIN: TNorm = TNorm { kind: Kind::MinMax };

    /// The ladder `T0 <= T1 <= T1.5 <= T2 <= T2.5 <= T3`.
    pub const LADDER: [TNorm; 6] = [
        Self::DRASTIC,
        Self::BOUNDED,
        Self::EINSTEIN,
        Self::PRODUCT,
        Self::HAMACHER_ZERO,
        Self::MIN,
    ];

    pub fn new(kind: Kind) -> Result<Self> {
        Ok(TNorm {
            kind: kind.validate()?,
        })
    }

    pub fn yager(q: f64) -> Result<Self> {
        Self::new(Kind::Yager { q })
    }

    pub fn dubois(alpha: f64) -> Result<Self> {
        Self::new(Kind::Dubois { alpha })
    }

    pub fn hamacher(gamma: f64) -> Result<Self> {
        Self::new(Kind::Hamacher { gamma })
    }

    pub fn schweizer(p: f64) -> Result<Self> {
        Self::new(Kind::Schweizer { p })
    }

    pub fn frank(theta: f64) -> Result<Self> {
        Self::new(Kind::Frank { theta })
    }

    pub fn sugeno(lambda: f64) -> Result<Self> {
        Self::new(Kind::Sugeno { lambda })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_continuous(&self) -> bool {
        self.kind.is_continuous()
    }

    pub fn eval(&self, a: f64, b: f64) -> f64 {
        formulas::tnorm(self.kind, a, b)
    }

    /// [`eval`](Self::eval) with the arguments checked against `[0, 1]`.
    pub fn eval_checked(&self, a: f64, b: f64) -> Result<f64> {
        check_unit(a)?;
        check_unit(b)?;
        Ok(self.eval(a, b))
    }

    /// The DeMorgan dual under `negation`. Under the standard negation this
    /// is the conorm of the same kind; otherwise the dual is generated.
    pub fn dual(&self, negation: Negation) -> TConorm {
        match negation {
            Negation::Standard => TConorm {
                shape: ConormShape::Family(self.kind),
            },
            _ => TConorm {
                shape: ConormShape::DeMorgan {
                    tnorm: *self,
                    negation,
                },
            },
        }
    }
}

/// Shorthand for [`TNorm::dual`].
pub fn dual_of(tnorm: &TNorm, negation: Negation) -> TConorm {
    tnorm.dual(negation)
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(format!("argument {x} is outside [0, 1]")))
    }
}

impl Connective for TNorm {
    fn apply(&self, a: f64, b: f64) -> f64 {
        self.eval(a, b)
    }

    fn identity(&self) -> f64 {
        1.0
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind.ladder_name() {
            Some(rung) => write!(f, "T{rung}"),
            None => f.write_str(&self.kind.family_string(false)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum ConormShape {
    Family(Kind),
    DeMorgan { tnorm: TNorm, negation: Negation },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TConorm {
    shape: ConormShape,
}

impl TConorm {
    pub const DRASTIC: TConorm = TConorm::ladder(Kind::Drastic);
    pub const BOUNDED: TConorm = TConorm::ladder(Kind::Bounded);
    pub const EINSTEIN: TConorm = TConorm::ladder(Kind::Einstein);
    pub const PROBABILISTIC: TConorm = TConorm::ladder(Kind::Algebraic);
    pub const HAMACHER_ZERO: TConorm = TConorm::ladder(Kind::HamacherZero);
    pub const MAX: TConorm = TConorm::ladder(Kind::MinMax);

    /// The ladder `S3 <= S2.5 <= S2 <= S1.5 <= S1 <= S0`.
    pub const LADDER: [TConorm; 6] = [
        Self::MAX,
        Self::HAMACHER_ZERO,
        Self::PROBABILISTIC,
        Self::EINSTEIN,
        Self::BOUNDED,
        Self::DRASTIC,
    ];

    const fn ladder(kind: Kind) -> TConorm {
        TConorm {
            shape: ConormShape::Family(kind),
        }
    }

    /// The family conorm of the given kind, using the closed form for each family.
    pub fn new(kind: Kind) -> Result<Self> {
        Ok(TConorm {
            shape: ConormShape::Family(kind.validate()?),
        })
    }

    /// The kind of a family conorm; `None` for generated duals.
    pub fn kind(&self) -> Option<Kind> {
        match self.shape {
            ConormShape::Family(kind) => Some(kind),
            ConormShape::DeMorgan { .. } => None,
        }
    }

    pub fn eval(&self, a: f64, b: f64) -> f64 {
        match self.shape {
            ConormShape::Family(kind) => formulas::tconorm(kind, a, b),
            ConormShape::DeMorgan { .. } if a == 0.0 => b,
            ConormShape::DeMorgan { .. } if b == 0.0 => a,
            ConormShape::DeMorgan { .. } if a == 1.0 || b == 1.0 => 1.0,
            ConormShape::DeMorgan { tnorm, negation } => {
                negation.eval(tnorm.eval(negation.eval(a), negation.eval(b)))
            }
        }
    }

    pub fn eval_checked(&self, a: f64, b: f64) -> Result<f64> {
        check_unit(a)?;
        check_unit(b)?;
        Ok(self.eval(a, b))
    }
}

impl Connective for TConorm {
    fn apply(&self, a: f64, b: f64) -> f64 {
        self.eval(a, b)
    }

    fn identity(&self) -> f64 {
        0.0
    }
}

impl fmt::Display for TConorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            ConormShape::Family(kind) => match kind.ladder_name() {
                Some(rung) => write!(f, "S{rung}"),
                None => f.write_str(&kind.family_string(true)),
            },
            ConormShape::DeMorgan { tnorm, negation } => write!(f, "Dual[{tnorm}; {negation}]"),
        }
    }
}

/// Strictly decreasing involutions on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Negation {
    /// `1 - x`
    #[default]
    Standard,
    /// `(1 - x) / (1 + λx)`, λ > -1
    Sugeno { lambda: f64 },
    /// `(1 - x^w)^(1/w)`, w > 0
    Yager { w: f64 },
}

impl Negation {
    pub fn sugeno(lambda: f64) -> Result<Self> {
        if lambda > -1.0 && lambda.is_finite() {
            Ok(Negation::Sugeno { lambda })
        } else {
            Err(Error::domain(format!(
                "Sugeno negation needs lambda > -1 (got {lambda})"
            )))
        }
    }

    pub fn yager(w: f64) -> Result<Self> {
        if w > 0.0 && w.is_finite() {
            Ok(Negation::Yager { w })
        } else {
            Err(Error::domain(format!(
                "Yager negation needs w > 0 (got {w})"
            )))
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 1.0;
        }
        if x == 1.0 {
            return 0.0;
        }
        let v = match *self {
            Negation::Standard => 1.0 - x,
            Negation::Sugeno { lambda } => (1.0 - x) / (1.0 + lambda * x),
            // 1 - x^w via expm1 keeps precision for x near 1.
            Negation::Yager { w } => (-(w * x.ln()).exp_m1()).powf(1.0 / w),
        };
        v.clamp(0.0, 1.0)
    }
}

impl fmt::Display for Negation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Negation::Standard => f.write_str("N"),
            Negation::Sugeno { lambda } => write!(f, "Sugeno(lambda={lambda})"),
            Negation::Yager { w } => write!(f, "Yager(w={w})"),
        }
    }
}

/// A calculus of uncertainty: conjunction, disjunction and negation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalculusSpec {
    pub tnorm: TNorm,
    pub tconorm: TConorm,
    pub negation: Negation,
}

impl CalculusSpec {
    /// The DeMorgan triple generated by `tnorm` and `negation`.
    pub fn demorgan(tnorm: TNorm, negation: Negation) -> Self {
        CalculusSpec {
            tnorm,
            tconorm: tnorm.dual(negation),
            negation,
        }
    }

    /// Largest `|N(T(N(a), N(b))) - S(a, b)|` over a `grid x grid` lattice.
    pub fn duality_gap(&self, grid: usize) -> f64 {
        let pts = axioms::lattice(grid.max(2));
        let n = self.negation;
        pts.iter()
            .flat_map(|&a| pts.iter().map(move |&b| (a, b)))
            .map(|(a, b)| {
                let generated = n.eval(self.tnorm.eval(n.eval(a), n.eval(b)));
                (generated - self.tconorm.eval(a, b)).abs()
            })
            .fold(0.0, f64::max)
    }
}

impl Default for CalculusSpec {
    fn default() -> Self {
        CalculusSpec::demorgan(TNorm::MIN, Negation::Standard)
    }
}

impl fmt::Display for CalculusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.tnorm, self.tconorm, self.negation)
    }
}

//! Extension-principle evaluation of crisp binary functions.
//!
//! [`extend_binary`] works level by level: for a function that is continuous
//! and nondecreasing in each argument, the cut of `f(X, Y)` at level `l` is
//! `[f(lo_x, lo_y), f(hi_x, hi_y)]`. [`brute_force_extend`] evaluates the
//! sup-min definition literally on a grid and exists to check the former.

use std::io::{self, Write};

use super::{Features, FuzzyNumber, HasFeatures, Interval};
use crate::error::{Error, Result};

/// Number of alpha levels used when none is given.
pub const DEFAULT_RESOLUTION: usize = 101;

/// Grid used by the brute-force oracle: points per argument axis and output bins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGrid {
    pub points: usize,
    pub bins: usize,
}

pub const ORACLE_GRID: OracleGrid = OracleGrid {
    points: 1001,
    bins: 1001,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaLevel {
    pub level: f64,
    pub cut: Interval,
}

/// A fuzzy quantity stored as a stack of nested level cuts.
///
/// Levels run from 0 (the closed support) to 1 (the core) in equal steps.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedFuzzy {
    levels: Vec<AlphaLevel>,
}

fn level_grid(resolution: usize) -> impl Iterator<Item = f64> {
    let last = (resolution - 1) as f64;
    (0..resolution).map(move |k| k as f64 / last)
}

impl DiscretizedFuzzy {
    /// Validate and wrap a level stack: levels strictly increasing from 0 to 1,
    /// each cut ordered and nested inside the one below it.
    pub fn from_levels(levels: Vec<AlphaLevel>) -> Result<Self> {
        let what = "discretized fuzzy number";
        if levels.len() < 2 {
            return Err(Error::invariant(what, "needs at least two levels"));
        }
        if levels[0].level != 0.0 || levels[levels.len() - 1].level != 1.0 {
            return Err(Error::invariant(what, "levels must span 0 to 1"));
        }
        for l in &levels {
            if !(l.cut.lo <= l.cut.hi) {
                return Err(Error::invariant(
                    what,
                    format!("cut {} at level {} is not ordered", l.cut, l.level),
                ));
            }
        }
        for w in levels.windows(2) {
            if !(w[0].level < w[1].level) {
                return Err(Error::invariant(what, "levels must be strictly increasing"));
            }
            if !w[0].cut.encloses(&w[1].cut) {
                return Err(Error::invariant(
                    what,
                    format!(
                        "cut at level {} is not nested in the cut at level {}",
                        w[1].level, w[0].level
                    ),
                ));
            }
        }
        Ok(DiscretizedFuzzy { levels })
    }

    /// Sample a trapezoid at `resolution` levels.
    pub fn from_fuzzy(n: &FuzzyNumber, resolution: usize) -> Result<Self> {
        check_resolution(resolution)?;
        let levels = level_grid(resolution)
            .map(|level| AlphaLevel {
                level,
                cut: n.cut(level),
            })
            .collect();
        Ok(DiscretizedFuzzy { levels })
    }

    pub fn levels(&self) -> &[AlphaLevel] {
        &self.levels
    }

    pub fn resolution(&self) -> usize {
        self.levels.len()
    }

    pub fn support(&self) -> Interval {
        self.levels[0].cut
    }

    pub fn core(&self) -> Interval {
        self.levels[self.levels.len() - 1].cut
    }

    /// Cut at an arbitrary level in `[0, 1]`, interpolating between stored levels.
    pub fn cut_at(&self, level: f64) -> Result<Interval> {
        if !(0.0..=1.0).contains(&level) {
            return Err(Error::domain(format!(
                "alpha level {level} is outside [0, 1]"
            )));
        }
        let k = self.levels.partition_point(|l| l.level < level);
        if k == 0 {
            return Ok(self.levels[0].cut);
        }
        let (below, above) = (&self.levels[k - 1], &self.levels[k]);
        let t = (level - below.level) / (above.level - below.level);
        Ok(Interval {
            lo: below.cut.lo + t * (above.cut.lo - below.cut.lo),
            hi: below.cut.hi + t * (above.cut.hi - below.cut.hi),
        })
    }

    /// The trapezoid through this quantity's core and support.
    pub fn to_secant(&self) -> FuzzyNumber {
        FuzzyNumber::from_cuts(self.core(), self.support())
            .expect("nested cuts give an ordered trapezoid")
    }

    /// Writes `level,lo,hi` rows with a header line.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "level,lo,hi")?;
        for l in &self.levels {
            writeln!(
                out,
                "{},{},{}",
                crate::report::fmt_sig(l.level),
                crate::report::fmt_sig(l.cut.lo),
                crate::report::fmt_sig(l.cut.hi)
            )?;
        }
        Ok(())
    }
}

impl HasFeatures for DiscretizedFuzzy {
    /// Area and first moment by the trapezoidal rule over the levels:
    /// `area = ∫ (hi - lo) dl`, `moment = ∫ (hi² - lo²) / 2 dl`.
    fn features(&self) -> Features {
        let (mut area, mut moment) = (0.0, 0.0);
        for w in self.levels.windows(2) {
            let h = w[1].level - w[0].level;
            let width = |c: &Interval| c.hi - c.lo;
            let half_sq = |c: &Interval| (c.hi * c.hi - c.lo * c.lo) / 2.0;
            area += h * (width(&w[0].cut) + width(&w[1].cut)) / 2.0;
            moment += h * (half_sq(&w[0].cut) + half_sq(&w[1].cut)) / 2.0;
        }
        if area > 0.0 {
            Features {
                centroid: moment / area,
                area,
            }
        } else {
            Features {
                centroid: self.core().lo,
                area: 0.0,
            }
        }
    }
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < 2 {
        return Err(Error::domain(format!("resolution {resolution} is below 2")));
    }
    Ok(())
}

/// Evaluate `f(x, y)` by the extension principle at `resolution` levels.
///
/// `f` must be continuous and nondecreasing in each argument over the
/// supports of `x` and `y`; that contract is not checked.
pub fn extend_binary<F>(
    f: F,
    x: &FuzzyNumber,
    y: &FuzzyNumber,
    resolution: usize,
) -> Result<DiscretizedFuzzy>
where
    F: Fn(f64, f64) -> f64,
{
    check_resolution(resolution)?;
    let levels = level_grid(resolution)
        .map(|level| {
            let (cx, cy) = (x.cut(level), y.cut(level));
            let lo = f(cx.lo, cy.lo);
            let hi = f(cx.hi, cy.hi);
            AlphaLevel {
                level,
                cut: Interval {
                    lo: lo.min(hi),
                    hi: hi.max(lo),
                },
            }
        })
        .collect();
    Ok(DiscretizedFuzzy { levels })
}

/// Membership of `f(X, Y)` sampled into equal-width bins.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledMembership {
    lo: f64,
    hi: f64,
    values: Vec<f64>,
}

impl SampledMembership {
    pub fn range(&self) -> Interval {
        Interval {
            lo: self.lo,
            hi: self.hi,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn bin_width(&self) -> f64 {
        (self.hi - self.lo) / self.values.len() as f64
    }

    pub fn bin_center(&self, k: usize) -> f64 {
        if self.hi == self.lo {
            self.lo
        } else {
            self.lo + (k as f64 + 0.5) * self.bin_width()
        }
    }

    /// Highest membership reached by any bin.
    pub fn height(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Span of bin centers whose membership reaches `level`.
    pub fn cut(&self, level: f64) -> Option<Interval> {
        let first = self.values.iter().position(|&m| m >= level)?;
        let last = self.values.iter().rposition(|&m| m >= level)?;
        Some(Interval {
            lo: self.bin_center(first),
            hi: self.bin_center(last),
        })
    }

    /// Span of bin centers with positive membership.
    pub fn support(&self) -> Option<Interval> {
        let first = self.values.iter().position(|&m| m > 0.0)?;
        let last = self.values.iter().rposition(|&m| m > 0.0)?;
        Some(Interval {
            lo: self.bin_center(first),
            hi: self.bin_center(last),
        })
    }
}

fn axis(n: &FuzzyNumber, points: usize) -> Vec<(f64, f64)> {
    let s = n.support();
    if s.width() == 0.0 {
        return vec![(s.lo, 1.0)];
    }
    let step = s.width() / (points - 1) as f64;
    (0..points)
        .map(|i| {
            let u = if i + 1 == points {
                s.hi
            } else {
                s.lo + i as f64 * step
            };
            (u, n.membership(u))
        })
        .collect()
}

/// Literal sup-min evaluation on the default oracle grid with `grid` points
/// per axis and `grid` output bins.
pub fn brute_force_extend<F>(
    f: F,
    x: &FuzzyNumber,
    y: &FuzzyNumber,
    grid: usize,
) -> Result<SampledMembership>
where
    F: Fn(f64, f64) -> f64,
{
    brute_force_extend_with(
        f,
        x,
        y,
        OracleGrid {
            points: grid,
            bins: grid,
        },
    )
}

/// Literal sup-min evaluation: every output bin receives the largest
/// `min(mu_x(u), mu_y(v))` over grid pairs with `f(u, v)` inside the bin.
pub fn brute_force_extend_with<F>(
    f: F,
    x: &FuzzyNumber,
    y: &FuzzyNumber,
    grid: OracleGrid,
) -> Result<SampledMembership>
where
    F: Fn(f64, f64) -> f64,
{
    if grid.points < 10 || grid.bins < 1 {
        return Err(Error::domain(format!(
            "oracle grid {}x{} is too coarse",
            grid.points, grid.bins
        )));
    }
    let xs = axis(x, grid.points);
    let ys = axis(y, grid.points);
    let samples: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&(u, mu)| ys.iter().map(move |&(v, mv)| (u, v, mu.min(mv))))
        .map(|(u, v, m)| (f(u, v), m))
        .collect();

    let lo = samples.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let hi = samples
        .iter()
        .map(|s| s.0)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut values = vec![0.0; grid.bins];
    let width = (hi - lo) / grid.bins as f64;
    for (fv, m) in samples {
        let k = if width > 0.0 {
            (((fv - lo) / width) as usize).min(grid.bins - 1)
        } else {
            0
        };
        if m > values[k] {
            values[k] = m;
        }
    }
    Ok(SampledMembership { lo, hi, values })
}

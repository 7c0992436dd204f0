use std::fs;
use std::path::Path;

use granulab::fuzznum::DEFAULT_RESOLUTION;
use granulab::lingapprox::TieBreak;
use granulab::{ApproxConfig, TermSet};
use serde::Deserialize;

use crate::args::Approx;
use crate::failure::{CmdResult, Context, Failure};

pub const DEFAULT_TERMSET: &str = "L1";

/// Defaults read from a JSON file. Every field is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    weight_centroid: Option<f64>,
    weight_area: Option<f64>,
    tie_break: Option<TieBreak>,
    resolution: Option<usize>,
    termset: Option<String>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> CmdResult<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text =
            fs::read_to_string(path).context(format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).context(format!("parsing config {}", path.display()))
    }

    /// File values over built-in defaults, then `weights` over both.
    pub fn approx(&self, weights: Option<&str>) -> CmdResult<ApproxConfig> {
        let base = ApproxConfig::default();
        let (wc, wa) = match weights {
            Some(w) => parse_weights(w)?,
            None => (
                self.weight_centroid.unwrap_or(base.weight_centroid),
                self.weight_area.unwrap_or(base.weight_area),
            ),
        };
        Ok(ApproxConfig::new(
            wc,
            wa,
            self.tie_break.unwrap_or(base.tie_break),
        )?)
    }

    pub fn resolution(&self, flag: Option<usize>) -> usize {
        flag.or(self.resolution).unwrap_or(DEFAULT_RESOLUTION)
    }

    pub fn termset(&self, flag: Option<&str>) -> CmdResult<TermSet> {
        let name = flag.or(self.termset.as_deref()).unwrap_or(DEFAULT_TERMSET);
        Ok(TermSet::resolve(name)?)
    }
}

/// Everything a closure computation needs.
pub struct Settings {
    pub termset: TermSet,
    pub approx: ApproxConfig,
    pub resolution: usize,
}

impl Settings {
    pub fn new(file: &FileConfig, flags: &Approx) -> CmdResult<Self> {
        Ok(Settings {
            termset: file.termset(flags.termset.as_deref())?,
            approx: file.approx(flags.weights.as_deref())?,
            resolution: file.resolution(flags.resolution),
        })
    }
}

/// `"0.7,0.3"` into a pair of weights.
pub fn parse_weights(s: &str) -> CmdResult<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [wc, wa] = parts.as_slice() else {
        return Err(Failure::usage(format!(
            "--weights expects WC,WA, got {s:?}"
        )));
    };
    let num = |p: &str| {
        p.parse::<f64>()
            .map_err(|_| Failure::usage(format!("--weights: {p:?} is not a number")))
    };
    Ok((num(wc)?, num(wa)?))
}

//! Parsing of `--dist` values.

use std::fs;
use std::str::FromStr;

use coboson::{ChiTable, SchmidtDistribution};

use crate::failure::Failure;

/// Where the Schmidt coefficients come from.
#[derive(Debug, Clone)]
pub enum DistSpec {
    Uniform(usize),
    Peaked { purity: f64, modes: usize },
    PeakedLimit(f64),
    File(String),
}

impl FromStr for DistSpec {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |what: &str| format!("invalid distribution '{text}': {what}");
        let (kind, rest) = match text.split_once(':') {
            Some(pair) => pair,
            None => return Ok(DistSpec::File(text.to_string())),
        };
        match kind {
            "uniform" => rest
                .trim()
                .parse()
                .map(DistSpec::Uniform)
                .map_err(|_| bad("expected uniform:S")),
            "peaked" => {
                let (p, s) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("expected peaked:P,S"))?;
                Ok(DistSpec::Peaked {
                    purity: p
                        .trim()
                        .parse()
                        .map_err(|_| bad("purity is not a number"))?,
                    modes: s.trim().parse().map_err(|_| bad("S is not a count"))?,
                })
            }
            "peaked-limit" => rest
                .trim()
                .parse()
                .map(DistSpec::PeakedLimit)
                .map_err(|_| bad("expected peaked-limit:P")),
            "file" => Ok(DistSpec::File(rest.to_string())),
            _ => Ok(DistSpec::File(text.to_string())),
        }
    }
}

/// A resolved `--dist` argument.
#[derive(Debug, Clone)]
pub enum Source {
    Explicit(SchmidtDistribution),
    Uniform(usize),
    PeakedLimit(f64),
}

impl Source {
    pub fn resolve(spec: &DistSpec) -> Result<Self, Failure> {
        match spec {
            DistSpec::Uniform(modes) => {
                SchmidtDistribution::uniform(*modes)?;
                Ok(Source::Uniform(*modes))
            }
            DistSpec::Peaked { purity, modes } => Ok(Source::Explicit(
                SchmidtDistribution::peaked(*purity, *modes)?,
            )),
            DistSpec::PeakedLimit(purity) => {
                ChiTable::peaked_limit(*purity, 1)?;
                Ok(Source::PeakedLimit(*purity))
            }
            DistSpec::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
                Ok(Source::Explicit(SchmidtDistribution::from_json_str(&text)?))
            }
        }
    }

    pub fn table(&self, nmax: usize) -> Result<ChiTable, Failure> {
        Ok(match self {
            Source::Explicit(d) => ChiTable::new(d, nmax),
            Source::Uniform(modes) => ChiTable::uniform(*modes, nmax)?,
            Source::PeakedLimit(purity) => ChiTable::peaked_limit(*purity, nmax)?,
        })
    }

    /// The coefficient list, for commands that need individual modes.
    pub fn distribution(&self) -> Result<SchmidtDistribution, Failure> {
        match self {
            Source::Explicit(d) => Ok(d.clone()),
            Source::Uniform(modes) => Ok(SchmidtDistribution::uniform(*modes)?),
            Source::PeakedLimit(_) => Err(Failure::Usage(
                "peaked-limit has no finite coefficient list; use peaked:P,S".into(),
            )),
        }
    }
}

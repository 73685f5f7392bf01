//! Schmidt coefficient distributions.
//!
//! A coboson made of two distinguishable fermions is characterised by the
//! Schmidt coefficients `lambda_j` of its two-fermion wave function. Only the
//! coefficient list matters for every statistic in this crate; it is stored in
//! canonical non-increasing order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const SUM_TOLERANCE: f64 = 1e-12;

/// Normalized, non-increasing sequence of Schmidt coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtDistribution {
    lambdas: Vec<f64>,
}

/// On-disk form `{"lambdas": [...]}`. Values need not be normalized.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistributionFile {
    pub lambdas: Vec<f64>,
}

impl SchmidtDistribution {
    /// Normalizes nonnegative weights and sorts them non-increasing.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite()) {
            return Err(Error::InvalidWeights(format!("non-finite weight {w}")));
        }
        if let Some(w) = weights.iter().find(|&&w| w < 0.0) {
            return Err(Error::InvalidWeights(format!("negative weight {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidWeights("all weights are zero".into()));
        }
        let mut lambdas: Vec<f64> = weights.iter().map(|w| w / sum).collect();
        lambdas.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { lambdas })
    }

    /// All `S` coefficients equal to `1/S`.
    pub fn uniform(modes: usize) -> Result<Self> {
        if modes == 0 {
            return Err(Error::InvalidParameter(
                "uniform distribution needs S >= 1".into(),
            ));
        }
        Ok(Self {
            lambdas: vec![1.0 / modes as f64; modes],
        })
    }

    /// One large coefficient `a` and `S - 1` equal small ones with purity `P`.
    ///
    /// `a` is the root of `a^2 + (1 - a)^2 / (S - 1) = P` with `a >= 1/S`,
    /// i.e. `a = (1 + sqrt((S - 1)(S P - 1))) / S`.
    pub fn peaked(purity: f64, modes: usize) -> Result<Self> {
        let unachievable = Error::UnachievablePurity { purity, modes };
        if modes == 0 || !purity.is_finite() {
            return Err(unachievable);
        }
        let s = modes as f64;
        if purity > 1.0 + SUM_TOLERANCE || purity * s < 1.0 - 1e-12 {
            return Err(unachievable);
        }
        if modes == 1 {
            return Ok(Self { lambdas: vec![1.0] });
        }
        let purity = purity.min(1.0);
        let disc = ((s - 1.0) * (s * purity - 1.0)).max(0.0);
        let a = ((1.0 + disc.sqrt()) / s).min(1.0);
        let rest = (1.0 - a).max(0.0) / (s - 1.0);
        let mut lambdas = Vec::with_capacity(modes);
        lambdas.push(a);
        lambdas.extend(std::iter::repeat_n(rest, modes - 1));
        Ok(Self { lambdas })
    }

    /// Parses `{"lambdas": [...]}` and normalizes via [`Self::from_weights`].
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: DistributionFile =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_weights(&file.lambdas)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&DistributionFile {
            lambdas: self.lambdas.clone(),
        })
        .expect("plain float vector serializes")
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Number of Schmidt modes `S`.
    pub fn size(&self) -> usize {
        self.lambdas.len()
    }

    /// `P = sum_j lambda_j^2`.
    pub fn purity(&self) -> f64 {
        self.lambdas.iter().map(|l| l * l).sum()
    }

    /// The coefficients with the listed (0-based) modes removed. The result is
    /// deliberately left unnormalized.
    pub fn complement(&self, indices: &[usize]) -> Result<Vec<f64>> {
        let removed = validate_indices(indices, self.size())?;
        Ok(self
            .lambdas
            .iter()
            .enumerate()
            .filter(|(j, _)| !removed.contains(j))
            .map(|(_, &l)| l)
            .collect())
    }

    /// `prod_{l in indices} lambda_l`.
    pub fn product(&self, indices: &[usize]) -> Result<f64> {
        validate_indices(indices, self.size())?;
        Ok(indices.iter().map(|&i| self.lambdas[i]).product())
    }
}

pub(crate) fn validate_indices(indices: &[usize], modes: usize) -> Result<BTreeSet<usize>> {
    let mut seen = BTreeSet::new();
    for &index in indices {
        if index >= modes {
            return Err(Error::IndexOutOfRange { index, modes });
        }
        if !seen.insert(index) {
            return Err(Error::DuplicateIndex(index));
        }
    }
    Ok(seen)
}

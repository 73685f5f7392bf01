//! A balanced beam-splitter acting on `N` cobosons in one input, `|N, 0>`.
//!
//! Each bifermion tunnels independently, so the output holds `M` of them in
//! the first mode with binomial probability. Conditioned on `M`, the state
//! decomposes into the coboson Fock state `|M, N - M>` and an orthogonal,
//! mode-correlated remainder.

use crate::math::{binomial, ln_binomial, ln_fact};
use crate::schmidt::{validate_indices, SchmidtDistribution};
use crate::symfunc::ChiTable;
use crate::{Error, Result};

const LN_2: f64 = std::f64::consts::LN_2;

/// Weights of `|M, N-M>` and `|M, N-M>^perp` in the split state, `M = 0..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitDecomposition {
    pub fock_weight: Vec<f64>,
    pub orth_weight: Vec<f64>,
}

impl SplitDecomposition {
    /// Total population of the coboson Fock components.
    pub fn fock_total(&self) -> f64 {
        self.fock_weight.iter().sum()
    }

    /// Total population of the orthogonal components.
    pub fn orth_total(&self) -> f64 {
        self.orth_weight.iter().sum()
    }
}

/// `chi_N / (chi_M chi_{N-M})`, the overlap of the post-selected state with
/// the coboson Fock state `|M, N-M>`.
fn fock_fraction(t: &ChiTable, n: usize, m: usize) -> Result<f64> {
    let denom = t.ln_chi(m)? + t.ln_chi(n - m)?;
    if denom == f64::NEG_INFINITY {
        // Cannot happen when chi_N > 0: chi is log-concave in N.
        return Err(Error::Inconsistent(format!(
            "chi_{m} chi_{} vanishes while chi_{n} does not",
            n - m
        )));
    }
    let fraction = (t.ln_chi(n)? - denom).exp();
    if fraction > 1.0 + 1e-12 {
        return Err(Error::Inconsistent(format!(
            "Fock fraction {fraction} exceeds 1 at N={n}, M={m}"
        )));
    }
    Ok(fraction.min(1.0))
}

/// Fock and orthogonal weights for every `M`.
pub fn split_decomposition(t: &ChiTable, n: usize) -> Result<SplitDecomposition> {
    t.require_positive(n)?;
    let mut fock_weight = Vec::with_capacity(n + 1);
    let mut orth_weight = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let pop = p_hom_split(n, m)?;
        let fraction = fock_fraction(t, n, m)?;
        fock_weight.push(pop * fraction);
        orth_weight.push(pop * (1.0 - fraction));
    }
    Ok(SplitDecomposition {
        fock_weight,
        orth_weight,
    })
}

/// Probability of finding exactly the bifermions in modes `sites` (0-based)
/// in the first output:
/// `2^-N N!/(N-M)! chi^{[sites]}_{N-M} / chi_N prod_{l in sites} lambda_l`,
/// where `chi^{[sites]}` is taken over the unnormalized complement.
pub fn p_bif(d: &SchmidtDistribution, n: usize, sites: &[usize]) -> Result<f64> {
    validate_indices(sites, d.size())?;
    let m = sites.len();
    if m > n {
        return Ok(0.0);
    }
    let t = ChiTable::new(d, n);
    t.require_positive(n)?;
    let rest = ChiTable::from_coefficients(&d.complement(sites)?, n - m);
    let ln_rest = rest.ln_chi(n - m)?;
    let ln_prod: f64 = sites.iter().map(|&i| d.lambdas()[i].ln()).sum();
    let ln_p = -(n as f64) * LN_2 + ln_fact(n) - ln_fact(n - m) + ln_rest - t.ln_chi(n)? + ln_prod;
    Ok(ln_p.exp())
}

/// `C(N, M) / 2^N`, independent of the Schmidt coefficients.
pub fn p_hom_split(n: usize, m: usize) -> Result<f64> {
    if m > n {
        return Err(Error::InvalidParameter(format!("M = {m} exceeds N = {n}")));
    }
    if n <= 60 {
        return Ok(binomial(n as i64, m as i64) / 2f64.powi(n as i32));
    }
    Ok((ln_binomial(n as i64, m as i64) - n as f64 * LN_2).exp())
}

/// Amplitudes of `|M, N-M>` and `|M, N-M>^perp` in the state post-selected on
/// `M` bifermions in the first output. Their squares sum to one.
pub fn projected_coefficients(t: &ChiTable, n: usize, m: usize) -> Result<(f64, f64)> {
    if m > n {
        return Err(Error::InvalidParameter(format!("M = {m} exceeds N = {n}")));
    }
    t.require_positive(n)?;
    let fraction = fock_fraction(t, n, m)?;
    Ok((fraction.sqrt(), (1.0 - fraction).sqrt()))
}

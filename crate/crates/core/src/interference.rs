//! Two-mode interference of coboson Fock states.
//!
//! A state `|N1, N2>` is represented as an orthogonal superposition of
//! components in which `2p` bifermions behave as fermions (one frozen pair per
//! shared Schmidt mode) and the remaining `N1 + N2 - 2p` as ideal bosons. The
//! output counting statistics are the weighted mixture of ideal-boson
//! statistics of each component.

use num_complex::Complex64;

use crate::math::{binomial, factorial, ln_binomial, ln_fact};
use crate::schmidt::SchmidtDistribution;
use crate::symfunc::{omega, ChiTable, ExponentPattern};
use crate::{Error, OutcomeDistribution, Result};

/// Unitary completion of a balanced mixing `a1 -> (a1 + a2)/sqrt 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BeamSplitterConvention {
    /// `[[cos, i sin], [i sin, cos]]`.
    #[default]
    Symmetric,
    /// `[[cos, -sin], [sin, cos]]`.
    RealOrthogonal,
}

/// Balanced beam-splitter amplitude `<m1, m2| U |n1, n2>` for ideal bosons,
/// in the real orthogonal convention.
///
/// Zero for negative arguments or when `m1 + m2 != n1 + n2`.
pub fn bs_amplitude(n1: i64, n2: i64, m1: i64, m2: i64) -> Complex64 {
    bs_amplitude_in(BeamSplitterConvention::RealOrthogonal, n1, n2, m1, m2)
}

/// [`bs_amplitude`] in an explicit convention. Expands
/// `(b1^dagger)^n1 (b2^dagger)^n2` term by term, `k` counting the first-mode
/// photons that stay in the first output.
pub fn bs_amplitude_in(
    convention: BeamSplitterConvention,
    n1: i64,
    n2: i64,
    m1: i64,
    m2: i64,
) -> Complex64 {
    if n1 < 0 || n2 < 0 || m1 < 0 || m2 < 0 || n1 + n2 != m1 + m2 {
        return Complex64::new(0.0, 0.0);
    }
    let ln_norm = 0.5
        * (ln_fact(m1 as usize) + ln_fact(m2 as usize)
            - ln_fact(n1 as usize)
            - ln_fact(n2 as usize))
        - 0.5 * (n1 + n2) as f64 * std::f64::consts::LN_2;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0.max(m1 - n2)..=n1.min(m1) {
        let magnitude = (ln_binomial(n1, k) + ln_binomial(n2, m1 - k) + ln_norm).exp();
        // k of n1 stay, m1 - k of n2 cross into the first output.
        let phase = match convention {
            BeamSplitterConvention::RealOrthogonal => {
                let crossing = m1 - k;
                Complex64::new(if crossing % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
            }
            BeamSplitterConvention::Symmetric => {
                Complex64::new(0.0, 1.0).powi(((n1 - k) + (m1 - k)) as i32)
            }
        };
        total += phase * magnitude;
    }
    total
}

/// `|A(n1, n2, m1, m2)|^2`.
pub fn bs_probability(n1: i64, n2: i64, m1: i64, m2: i64) -> f64 {
    bs_amplitude(n1, n2, m1, m2).norm_sqr()
}

/// Weights `w_p`, `p = 0..=min(N1, N2)`, of the components with `2p`
/// fermion-like bifermions.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    pub w: Vec<f64>,
}

impl WeightVector {
    pub fn total(&self) -> f64 {
        self.w.iter().sum()
    }
}

/// `w_p = C(N1,p) C(N2,p) p! / (chi_N1 chi_N2) Omega({2^p, 1^{N1+N2-2p}})`.
pub fn superposition_weights(
    d: &SchmidtDistribution,
    n1: usize,
    n2: usize,
) -> Result<WeightVector> {
    if n1 + n2 > d.size() {
        return Err(Error::InvalidParameter(format!(
            "N1 + N2 = {} exceeds S = {}",
            n1 + n2,
            d.size()
        )));
    }
    let t = ChiTable::new(d, n1.max(n2));
    t.require_positive(n1)?;
    t.require_positive(n2)?;
    let norm = t.chi(n1)? * t.chi(n2)?;
    let w = (0..=n1.min(n2))
        .map(|p| {
            let pattern = ExponentPattern::new(p, n1 + n2 - 2 * p);
            binomial(n1 as i64, p as i64) * binomial(n2 as i64, p as i64) * factorial(p) / norm
                * omega(d, pattern)
        })
        .collect();
    Ok(WeightVector { w })
}

/// `P(m, p) = |A(N1-p, N2-p, m-p, N1+N2-m-p)|^2`: `m` bifermions in the first
/// output when `p` pairs behave as fermions.
pub fn p_mp(n1: usize, n2: usize, m: usize, p: usize) -> f64 {
    let (n1, n2, m, p) = (n1 as i64, n2 as i64, m as i64, p as i64);
    bs_probability(n1 - p, n2 - p, m - p, n1 + n2 - m - p)
}

/// Distribution of the number `m` of bifermions in the first output after
/// `|N1, N2>` meets a balanced beam-splitter.
///
/// `N2 = 0` is accepted and reduces to the binomial splitting statistics.
pub fn pair_interference(
    d: &SchmidtDistribution,
    n1: usize,
    n2: usize,
) -> Result<OutcomeDistribution<usize>> {
    let weights = superposition_weights(d, n1, n2)?;
    Ok((0..=n1 + n2)
        .map(|m| {
            let p: f64 = weights
                .w
                .iter()
                .enumerate()
                .map(|(p, w)| w * p_mp(n1, n2, m, p))
                .sum();
            (m, p)
        })
        .collect())
}

/// `P1(n2, p) = |A(N-p, 1-p, n2-p, N+1-n2-p)|^2` for `N` cobosons meeting a
/// single one. Negative arguments give zero.
pub fn p_single(ncob: usize, n2: usize, p: usize) -> f64 {
    let (n, n2, p) = (ncob as i64, n2 as i64, p as i64);
    bs_probability(n - p, 1 - p, n2 - p, n + 1 - n2 - p)
}

/// Probability of `n2` bifermions in the first output when `Ncob` cobosons
/// interfere with a single coboson:
/// `r P1(n2, 0) + (1 - r) P1(n2, 1)`, `r = chi_{Ncob+1} / chi_Ncob`.
pub fn single_vs_n(t: &ChiTable, ncob: usize, n2: usize) -> Result<f64> {
    let r = t.ratio(ncob)?;
    Ok(r.value() * p_single(ncob, n2, 0) + r.deficit() * p_single(ncob, n2, 1))
}

/// Full `(n2, n3)` distribution of [`single_vs_n`], `n2 + n3 = Ncob + 1`.
pub fn single_vs_n_distribution(
    t: &ChiTable,
    ncob: usize,
) -> Result<OutcomeDistribution<(usize, usize)>> {
    (0..=ncob + 1)
        .map(|n2| Ok(((n2, ncob + 1 - n2), single_vs_n(t, ncob, n2)?)))
        .collect()
}

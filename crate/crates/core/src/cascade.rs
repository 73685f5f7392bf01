//! Three sublattices, two balanced beam-splitters.
//!
//! `N` cobosons start in the first sublattice and one in the third: `|N,0,1>`.
//! BS1 mixes sublattices 1 and 2, BS2 then mixes 2 and 3. The counting
//! statistics `P(n1, n2, n3)` split into a single-bifermion splitting term
//! `Q_spl` and an interference term `Q_int`; both depend on the Schmidt
//! coefficients only through `r = chi_{N+1} / chi_N`.

use std::fmt;

use crate::interference::p_single;
use crate::math::{binomial, ln_binomial};
use crate::symfunc::{ChiTable, NormalizationRatio};
use crate::{Error, OutcomeDistribution, Result};

const LN_2: f64 = std::f64::consts::LN_2;

/// Bifermion counts in the three outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleOutcome {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl TripleOutcome {
    pub fn new(n1: usize, n2: usize, n3: usize) -> Self {
        Self { n1, n2, n3 }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidParameter("the cascade needs N >= 1".into()));
        }
        if self.n1 + self.n2 + self.n3 != n + 1 {
            return Err(Error::NonConserving {
                n1: self.n1,
                n2: self.n2,
                n3: self.n3,
                total: n + 1,
            });
        }
        Ok(())
    }
}

impl fmt::Display for TripleOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n1, self.n2, self.n3)
    }
}

fn binom(n: usize, k: i64) -> f64 {
    binomial(n as i64, k)
}

/// `2^-(2N-n1+1) (n1/N) C(N,n1) (1 - r) [C(N-n1, n2-1) + C(N-n1, n3-1)]`.
pub fn q_spl(t: &ChiTable, n: usize, outcome: TripleOutcome) -> Result<f64> {
    outcome.check(n)?;
    Ok(q_spl_with(n, outcome, t.ratio(n)?))
}

fn q_spl_with(n: usize, o: TripleOutcome, r: NormalizationRatio) -> f64 {
    if o.n1 == 0 || o.n1 > n {
        return 0.0;
    }
    let rest = n - o.n1;
    let bracket = binom(rest, o.n2 as i64 - 1) + binom(rest, o.n3 as i64 - 1);
    let ln_pre = ln_binomial(n as i64, o.n1 as i64) - (2 * n - o.n1 + 1) as f64 * LN_2;
    ln_pre.exp() * (o.n1 as f64 / n as f64) * r.deficit() * bracket
}

/// `2^-N C(N,n1) [r P1(n2,0) + ((N-n1)/N) (1-r) P1(n2,1)]`, with `P1` taken
/// for `N - n1` bifermions meeting the single coboson.
pub fn q_int(n: usize, outcome: TripleOutcome, ratio: NormalizationRatio) -> Result<f64> {
    outcome.check(n)?;
    Ok(q_int_with(n, outcome, ratio))
}

fn q_int_with(n: usize, o: TripleOutcome, r: NormalizationRatio) -> f64 {
    let ln_pre = ln_binomial(n as i64, o.n1 as i64) - n as f64 * LN_2;
    ln_pre.exp() * interference_part(n, o, r)
}

/// The bracket of [`q_int`].
fn interference_part(n: usize, o: TripleOutcome, r: NormalizationRatio) -> f64 {
    // The single coboson never reaches the first output.
    if o.n1 > n {
        return 0.0;
    }
    let rest = n - o.n1;
    r.value() * p_single(rest, o.n2, 0)
        + (rest as f64 / n as f64) * r.deficit() * p_single(rest, o.n2, 1)
}

/// `Q_spl + Q_int` over every outcome with `n1 + n2 + n3 = N + 1`.
pub fn triple_distribution(t: &ChiTable, n: usize) -> Result<OutcomeDistribution<TripleOutcome>> {
    let r = t.ratio(n)?;
    triple_distribution_with(n, r)
}

/// [`triple_distribution`] for a given normalization ratio.
pub fn triple_distribution_with(
    n: usize,
    r: NormalizationRatio,
) -> Result<OutcomeDistribution<TripleOutcome>> {
    if n == 0 {
        return Err(Error::InvalidParameter("the cascade needs N >= 1".into()));
    }
    let mut out = OutcomeDistribution::new();
    for n1 in 0..=n + 1 {
        for n2 in 0..=n + 1 - n1 {
            let o = TripleOutcome::new(n1, n2, n + 1 - n1 - n2);
            out.add(o, q_spl_with(n, o, r) + q_int_with(n, o, r));
        }
    }
    Ok(out)
}

/// Statistics of `(n2, n3)` conditioned on `M` bifermions in the first output,
/// `2^N / C(N, M) * P(M, n2, n3)`.
pub fn postselected_distribution(
    t: &ChiTable,
    n: usize,
    m: usize,
) -> Result<OutcomeDistribution<(usize, usize)>> {
    postselected_with(n, m, t.ratio(n)?)
}

/// [`postselected_distribution`] for a given normalization ratio.
///
/// The renormalization is applied analytically so that `N` in the thousands
/// does not over- or underflow:
/// `(M/N)(1-r)[C(N-M,n2-1) + C(N-M,n3-1)] / 2^{N-M+1} + bracket(Q_int)`.
pub fn postselected_with(
    n: usize,
    m: usize,
    r: NormalizationRatio,
) -> Result<OutcomeDistribution<(usize, usize)>> {
    if n == 0 {
        return Err(Error::InvalidParameter("the cascade needs N >= 1".into()));
    }
    if m > n {
        return Err(Error::InvalidParameter(format!("M = {m} exceeds N = {n}")));
    }
    let rest = n - m;
    let mut out = OutcomeDistribution::new();
    for n2 in 0..=rest + 1 {
        let o = TripleOutcome::new(m, n2, rest + 1 - n2);
        let bracket = binom(rest, n2 as i64 - 1) + binom(rest, o.n3 as i64 - 1);
        let split =
            (m as f64 / n as f64) * r.deficit() * bracket * (-((rest + 1) as f64) * LN_2).exp();
        out.add((o.n2, o.n3), split + interference_part(n, o, r));
    }
    Ok(out)
}

/// Coincidence probability at BS2 after post-selecting `N - 1` bifermions:
/// `(N+1)/(2N) (1 - chi_{N+1}/chi_N)`. Vanishes for ideal bosons.
pub fn hom_dip(t: &ChiTable, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("the HOM dip needs N >= 1".into()));
    }
    let r = t.ratio(n)?;
    Ok((n + 1) as f64 / (2 * n) as f64 * r.deficit())
}

/// Binomial statistics of `N - M + 1` distinguishable particles.
pub fn distinguishable_limit(n: usize, m: usize, n2: usize) -> f64 {
    if m > n || n2 > n - m + 1 {
        return 0.0;
    }
    let k = n - m + 1;
    (ln_binomial(k as i64, n2 as i64) - k as f64 * LN_2).exp()
}

/// Ideal-boson statistics: `N - M` bosons meeting one boson.
pub fn bosonic_limit(n: usize, m: usize, n2: usize) -> f64 {
    if m > n {
        return 0.0;
    }
    p_single(n - m, n2, 0)
}

/// `P_enh = [M / ((N-1)(N-M+1))]^2`, below which post-selection strictly
/// enlarges the deviation from bosonic statistics. Values above one are
/// returned as is; they mean the whole purity range qualifies.
pub fn enhancement_threshold(n: usize, m: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter("the threshold needs N >= 2".into()));
    }
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!("M = {m} outside 1..={n}")));
    }
    let root = m as f64 / ((n - 1) * (n - m + 1)) as f64;
    Ok(root * root)
}

/// The bunching outcome `(1, 2, 0)` of `|2, 0, 1>` after post-selecting one
/// bifermion, next to the frequently quoted `(1 + 3r)/4`.
///
/// `(1 + 3r)/8` is the normalized value: with the coincidence `3(1-r)/4` and
/// the two symmetric bunching outcomes it sums to one, and it gives `1/4` for
/// distinguishable particles (`r = 1/3`) and `1/2` for ideal bosons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BunchingComparison {
    pub ratio: f64,
    pub normalized: f64,
    pub published: f64,
}

impl BunchingComparison {
    pub fn new(r: NormalizationRatio) -> Self {
        let r = r.value();
        Self {
            ratio: r,
            normalized: (1.0 + 3.0 * r) / 8.0,
            published: (1.0 + 3.0 * r) / 4.0,
        }
    }

    /// Total of coincidence plus both bunching outcomes under the published
    /// value.
    pub fn published_total(&self) -> f64 {
        0.75 * (1.0 - self.ratio) + 2.0 * self.published
    }
}

impl fmt::Display for BunchingComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N=2 M=1 bunching (2,0)/(0,2): normalized (1+3r)/8 = {:.10}, \
             published (1+3r)/4 = {:.10} (factor {:.3}; published values sum to {:.10}) at r = {:.10}",
            self.normalized,
            self.published,
            self.published / self.normalized,
            self.published_total(),
            self.ratio
        )
    }
}

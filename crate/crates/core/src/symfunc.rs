//! Normalization factors and generalized symmetric polynomials.
//!
//! `chi_N = N! e_N(lambda)` where `e_N` is the elementary symmetric polynomial
//! of degree `N`. Tables are stored as `ln chi_N` so that `N` in the thousands
//! and strongly Pauli-blocked regimes stay representable.

use crate::schmidt::SchmidtDistribution;
use crate::{Error, Result};

/// Results whose `|ln|` exceeds this are recomputed fully in log domain.
const LOG_SWITCH: f64 = 690.0;
const RATIO_TOLERANCE: f64 = 1e-12;

/// A normalization ratio `r = chi_{N+1} / chi_N` together with `1 - r`.
///
/// Near the ideal-boson limit `r` is within `1e-10` of one; the deficit is
/// carried separately so it keeps full relative precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationRatio {
    value: f64,
    deficit: f64,
}

impl NormalizationRatio {
    /// Accepts `r` in `[0, 1]` up to `1e-12`, clamping the excess.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || !(-RATIO_TOLERANCE..=1.0 + RATIO_TOLERANCE).contains(&value) {
            return Err(Error::Inconsistent(format!(
                "normalization ratio {value} outside [0, 1]"
            )));
        }
        let value = value.clamp(0.0, 1.0);
        Ok(Self {
            value,
            deficit: 1.0 - value,
        })
    }

    fn from_log_difference(delta: f64) -> Result<Self> {
        if delta == f64::NEG_INFINITY {
            return Ok(Self {
                value: 0.0,
                deficit: 1.0,
            });
        }
        if delta.is_nan() || delta > RATIO_TOLERANCE {
            return Err(Error::Inconsistent(format!(
                "normalization ratio exp({delta}) exceeds 1"
            )));
        }
        let delta = delta.min(0.0);
        Ok(Self {
            value: delta.exp(),
            deficit: -delta.exp_m1(),
        })
    }

    /// `chi_{N+1} / chi_N`.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// `1 - chi_{N+1} / chi_N`.
    pub fn deficit(&self) -> f64 {
        self.deficit
    }
}

/// Precomputed `chi_0 ..= chi_Nmax`, in log domain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiTable {
    ln_chi: Vec<f64>,
    source_size: Option<usize>,
}

impl ChiTable {
    /// `chi_N` of a normalized distribution for `N = 0..=nmax`.
    pub fn new(d: &SchmidtDistribution, nmax: usize) -> Self {
        Self::from_coefficients(d.lambdas(), nmax)
    }

    /// `chi_N` of an arbitrary nonnegative coefficient list, e.g. the raw
    /// complement of a distribution. The coefficients are not normalized, so
    /// `chi_1` equals their sum.
    pub fn from_coefficients(coefficients: &[f64], nmax: usize) -> Self {
        debug_assert!(coefficients.iter().all(|c| c.is_finite() && *c >= 0.0));
        let sum: f64 = coefficients.iter().sum();
        let positive = coefficients.iter().filter(|&&c| c > 0.0).count();
        let mut ln_chi = vec![f64::NEG_INFINITY; nmax + 1];
        ln_chi[0] = 0.0;
        if sum > 0.0 {
            let unit: Vec<f64> = coefficients.iter().map(|c| c / sum).collect();
            let ln_sum = sum.ln();
            let direct = scaled_forward(&unit, nmax);
            let needs_log = direct
                .iter()
                .take(positive + 1)
                .any(|&h| h == 0.0 || h.ln().abs() > LOG_SWITCH);
            let ln_unit = if needs_log {
                log_forward(&unit, nmax)
            } else {
                direct.iter().map(|h| h.ln()).collect()
            };
            for (k, slot) in ln_chi.iter_mut().enumerate().skip(1) {
                *slot = if k > positive {
                    f64::NEG_INFINITY
                } else {
                    ln_unit[k] + k as f64 * ln_sum
                };
            }
        }
        Self {
            ln_chi,
            source_size: Some(coefficients.len()),
        }
    }

    /// Closed form `chi_N = N! C(S, N) / S^N` of the uniform distribution.
    pub fn uniform(modes: usize, nmax: usize) -> Result<Self> {
        if modes == 0 {
            return Err(Error::InvalidParameter(
                "uniform distribution needs S >= 1".into(),
            ));
        }
        let s = modes as f64;
        let mut ln_chi = Vec::with_capacity(nmax + 1);
        let mut acc = 0.0;
        ln_chi.push(acc);
        for i in 0..nmax {
            if i >= modes {
                acc = f64::NEG_INFINITY;
            } else {
                acc += (-(i as f64) / s).ln_1p();
            }
            ln_chi.push(acc);
        }
        Ok(Self {
            ln_chi,
            source_size: Some(modes),
        })
    }

    /// The `S -> infinity` peaked family with purity `P`:
    /// `chi_N = (1 - a)^{N-1} ((1 - a) + N a)`, `a = sqrt(P)`.
    pub fn peaked_limit(purity: f64, nmax: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&purity) {
            return Err(Error::InvalidParameter(format!(
                "purity {purity} outside [0, 1]"
            )));
        }
        let ln_chi = (0..=nmax).map(|n| ln_chi_peaked_limit(purity, n)).collect();
        Ok(Self {
            ln_chi,
            source_size: None,
        })
    }

    /// Largest `N` held by the table.
    pub fn nmax(&self) -> usize {
        self.ln_chi.len() - 1
    }

    /// Mode count of the generating distribution; `None` for the peaked limit.
    pub fn source_size(&self) -> Option<usize> {
        self.source_size
    }

    /// `ln chi_N`, `-inf` when `chi_N = 0`.
    pub fn ln_chi(&self, n: usize) -> Result<f64> {
        match self.ln_chi.get(n) {
            Some(&v) => Ok(v),
            None => match self.source_size {
                Some(s) if n > s => Ok(f64::NEG_INFINITY),
                _ => Err(Error::TableTooShort {
                    nmax: self.nmax(),
                    requested: n,
                }),
            },
        }
    }

    pub fn chi(&self, n: usize) -> Result<f64> {
        self.ln_chi(n).map(f64::exp)
    }

    /// Errors with [`Error::VanishingChi`] unless `chi_N > 0`.
    pub fn require_positive(&self, n: usize) -> Result<()> {
        if self.ln_chi(n)? == f64::NEG_INFINITY {
            Err(Error::VanishingChi(n))
        } else {
            Ok(())
        }
    }

    /// `chi_{N+1} / chi_N`, an error when `chi_N = 0`.
    pub fn ratio(&self, n: usize) -> Result<NormalizationRatio> {
        let lo = self.ln_chi(n)?;
        if lo == f64::NEG_INFINITY {
            return Err(Error::VanishingChi(n));
        }
        let hi = self.ln_chi(n + 1)?;
        NormalizationRatio::from_log_difference(hi - lo)
    }

    /// `(N, chi_N)` for every stored entry.
    pub fn values(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.ln_chi.iter().enumerate().map(|(n, l)| (n, l.exp()))
    }
}

/// `chi_N` of a distribution for `N = 0..=nmax`.
pub fn chi_table(d: &SchmidtDistribution, nmax: usize) -> ChiTable {
    ChiTable::new(d, nmax)
}

/// `chi_{N+1} / chi_N` as a plain number.
pub fn chi_ratio(t: &ChiTable, n: usize) -> Result<f64> {
    t.ratio(n).map(|r| r.value())
}

/// `N! C(S, N) / S^N`, zero for `N > S`.
pub fn chi_uniform(modes: usize, n: usize) -> f64 {
    if modes == 0 || n > modes {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let s = modes as f64;
    (0..n).map(|i| (-(i as f64) / s).ln_1p()).sum::<f64>().exp()
}

/// `(1 - a)^{N-1} ((1 - a) + N a)` with `a = sqrt(P)`.
pub fn chi_peaked_limit(purity: f64, n: usize) -> f64 {
    ln_chi_peaked_limit(purity, n).exp()
}

fn ln_chi_peaked_limit(purity: f64, n: usize) -> f64 {
    if n <= 1 {
        return 0.0;
    }
    let a = purity.sqrt();
    if a >= 1.0 {
        return f64::NEG_INFINITY;
    }
    (n - 1) as f64 * (-a).ln_1p() + ((n - 1) as f64 * a).ln_1p()
}

/// Forward recurrence on `h_k = k! e_k`:
/// `h_k(j) = h_k(j-1) + k lambda_j h_{k-1}(j-1)`.
///
/// For coefficients summing to at most one every `h_k` stays in `[0, 1]`, so
/// the recurrence cannot overflow; underflow only costs absolute error of
/// order the smallest subnormal per step.
pub fn scaled_forward(coefficients: &[f64], nmax: usize) -> Vec<f64> {
    let mut h = vec![0.0; nmax + 1];
    h[0] = 1.0;
    for (j, &lambda) in coefficients.iter().enumerate() {
        let top = (j + 1).min(nmax);
        for k in (1..=top).rev() {
            h[k] += k as f64 * lambda * h[k - 1];
        }
    }
    h
}

/// The same recurrence carried out on `ln h_k` with log-sum-exp updates.
/// Returns `ln(k! e_k)`, `-inf` for vanishing entries.
pub fn log_forward(coefficients: &[f64], nmax: usize) -> Vec<f64> {
    let mut ln_h = vec![f64::NEG_INFINITY; nmax + 1];
    ln_h[0] = 0.0;
    let ln_k: Vec<f64> = (0..=nmax).map(|k| (k as f64).ln()).collect();
    let mut seen = 0usize;
    for &lambda in coefficients {
        if lambda <= 0.0 {
            continue;
        }
        seen += 1;
        let ln_lambda = lambda.ln();
        for k in (1..=seen.min(nmax)).rev() {
            ln_h[k] = log_add_exp(ln_h[k], ln_k[k] + ln_lambda + ln_h[k - 1]);
        }
    }
    ln_h
}

fn log_add_exp(x: f64, y: f64) -> f64 {
    if x == f64::NEG_INFINITY {
        return y;
    }
    if y == f64::NEG_INFINITY {
        return x;
    }
    let (hi, lo) = if x > y { (x, y) } else { (y, x) };
    hi + (lo - hi).exp().ln_1p()
}

/// Exponent multiset `{2^twos, 1^ones}` of a generalized polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentPattern {
    pub twos: usize,
    pub ones: usize,
}

impl ExponentPattern {
    pub fn new(twos: usize, ones: usize) -> Self {
        Self { twos, ones }
    }

    /// `{1^k}`, whose polynomial is `chi_k`.
    pub fn ones(k: usize) -> Self {
        Self { twos: 0, ones: k }
    }

    /// Number of distinct modes the pattern occupies.
    pub fn len(&self) -> usize {
        self.twos + self.ones
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Omega({2^a, 1^b})`: sum over ordered tuples of pairwise distinct modes of
/// `prod lambda^exponent`. Zero when the pattern needs more than `S` modes.
pub fn omega(d: &SchmidtDistribution, pattern: ExponentPattern) -> f64 {
    omega_coefficients(d.lambdas(), pattern)
}

/// [`omega`] over a raw coefficient list.
///
/// Uses `g(a, b) = a! b! f(a, b)`, where `f` is the unordered sum, with
/// `g(a, b) += a lambda^2 g(a-1, b) + b lambda g(a, b-1)` per mode.
pub fn omega_coefficients(coefficients: &[f64], pattern: ExponentPattern) -> f64 {
    let ExponentPattern { twos, ones } = pattern;
    if twos + ones > coefficients.len() {
        return 0.0;
    }
    let width = ones + 1;
    let mut g = vec![0.0; (twos + 1) * width];
    g[0] = 1.0;
    for &lambda in coefficients {
        let sq = lambda * lambda;
        for a in (0..=twos).rev() {
            for b in (0..=ones).rev() {
                if a == 0 && b == 0 {
                    continue;
                }
                let mut add = 0.0;
                if a > 0 {
                    add += a as f64 * sq * g[(a - 1) * width + b];
                }
                if b > 0 {
                    add += b as f64 * lambda * g[a * width + b - 1];
                }
                g[a * width + b] += add;
            }
        }
    }
    g[twos * width + ones]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{factorial, ln_fact};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// `N! * sum over N-subsets of prod lambda`, by explicit enumeration.
    fn chi_by_subsets(lambdas: &[f64], n: usize) -> f64 {
        let s = lambdas.len();
        if n > s {
            return 0.0;
        }
        let mut total = 0.0;
        for mask in 0u32..(1 << s) {
            if mask.count_ones() as usize == n {
                total += (0..s)
                    .filter(|j| mask & (1 << j) != 0)
                    .map(|j| lambdas[j])
                    .product::<f64>();
            }
        }
        factorial(n) * total
    }

    /// Ordered distinct-tuple sum by recursion over tuples.
    fn omega_by_tuples(lambdas: &[f64], exponents: &[u32], used: &mut Vec<bool>) -> f64 {
        let Some((&e, rest)) = exponents.split_first() else {
            return 1.0;
        };
        let mut total = 0.0;
        for j in 0..lambdas.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            total += lambdas[j].powi(e as i32) * omega_by_tuples(lambdas, rest, used);
            used[j] = false;
        }
        total
    }

    fn random_distribution(rng: &mut ChaCha8Rng, modes: usize) -> SchmidtDistribution {
        let w: Vec<f64> = (0..modes).map(|_| rng.random::<f64>() + 1e-3).collect();
        SchmidtDistribution::from_weights(&w).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        let scale = a.abs().max(b.abs());
        if scale == 0.0 {
            0.0
        } else {
            (a - b).abs() / scale
        }
    }

    #[test]
    fn chi_table_examples() {
        let u = SchmidtDistribution::uniform(4).unwrap();
        let t = chi_table(&u, 5);
        assert!((t.chi(2).unwrap() - 0.75).abs() < 1e-15);
        assert_eq!(t.chi(5).unwrap(), 0.0);
        assert_eq!(t.chi(0).unwrap(), 1.0);
        assert!((t.chi(1).unwrap() - 1.0).abs() < 1e-15);

        let d = SchmidtDistribution::from_weights(&[0.7, 0.2, 0.1]).unwrap();
        let t = chi_table(&d, 3);
        assert!((t.chi(3).unwrap() - 0.084).abs() < 1e-15);
        assert!((t.chi(2).unwrap() - 0.46).abs() < 1e-15);
    }

    #[test]
    fn pauli_blocking_beyond_table() {
        let t = chi_table(&SchmidtDistribution::uniform(3).unwrap(), 2);
        assert_eq!(t.chi(10).unwrap(), 0.0);
        let t = ChiTable::peaked_limit(0.2, 2).unwrap();
        assert!(matches!(t.chi(3), Err(Error::TableTooShort { .. })));
    }

    #[test]
    fn chi_ratio_examples() {
        let t = chi_table(&SchmidtDistribution::uniform(4).unwrap(), 5);
        assert!((chi_ratio(&t, 2).unwrap() - 0.5).abs() < 1e-15);
        assert!((chi_ratio(&t, 0).unwrap() - 1.0).abs() < 1e-15);
        let single = chi_table(&SchmidtDistribution::from_weights(&[1.0]).unwrap(), 3);
        assert_eq!(chi_ratio(&single, 1).unwrap(), 0.0);
        assert_eq!(chi_ratio(&single, 2), Err(Error::VanishingChi(2)));
    }

    #[test]
    fn chi_uniform_examples() {
        assert!((chi_uniform(4, 2) - 0.75).abs() < 1e-15);
        assert!((chi_uniform(4, 3) - 0.375).abs() < 1e-15);
        assert_eq!(chi_uniform(4, 5), 0.0);
        assert_eq!(chi_uniform(4, 0), 1.0);
        let t = ChiTable::uniform(4, 6).unwrap();
        for n in 0..=6 {
            assert!((t.chi(n).unwrap() - chi_uniform(4, n)).abs() < 1e-15);
        }
    }

    #[test]
    fn chi_uniform_matches_explicit_table_at_large_s() {
        let modes = 1_000_000;
        let d = SchmidtDistribution::uniform(modes).unwrap();
        let t = chi_table(&d, 1000);
        let closed = chi_uniform(modes, 1000);
        assert!(closed > 0.0 && closed.is_finite());
        assert!(rel(t.chi(1000).unwrap(), closed) < 1e-10);
    }

    #[test]
    fn chi_peaked_limit_examples() {
        assert!((chi_peaked_limit(0.25, 2) - 0.75).abs() < 1e-15);
        assert!((chi_peaked_limit(0.25, 3) - 0.5).abs() < 1e-15);
        for n in 1..20 {
            assert_eq!(chi_peaked_limit(0.0, n), 1.0);
        }
        assert_eq!(chi_peaked_limit(1.0, 1), 1.0);
        assert_eq!(chi_peaked_limit(1.0, 2), 0.0);
    }

    #[test]
    fn peaked_limit_is_limit_of_finite_peaked_family() {
        let d = SchmidtDistribution::peaked(0.3, 200_000).unwrap();
        let t = chi_table(&d, 6);
        for n in 0..=6 {
            assert!(rel(t.chi(n).unwrap(), chi_peaked_limit(0.3, n)) < 1e-4);
        }
    }

    #[test]
    fn chi_table_matches_subset_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for modes in 1..=10 {
            for _ in 0..5 {
                let d = random_distribution(&mut rng, modes);
                let t = chi_table(&d, modes);
                for n in 0..=modes {
                    let brute = chi_by_subsets(d.lambdas(), n);
                    assert!(rel(t.chi(n).unwrap(), brute) < 1e-13, "S={modes} N={n}");
                }
            }
        }
    }

    #[test]
    fn log_and_direct_paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for modes in [3usize, 10, 50, 300] {
            let d = random_distribution(&mut rng, modes);
            let nmax = modes.min(60);
            let direct = scaled_forward(d.lambdas(), nmax);
            let logs = log_forward(d.lambdas(), nmax);
            for k in 0..=nmax {
                if direct[k] > 1e-290 {
                    assert!(
                        rel(direct[k].ln().exp(), logs[k].exp()) < 1e-12,
                        "S={modes} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn log_path_handles_underflowing_chi() {
        // chi_S of a 1001-mode peaked distribution is far below f64 range.
        let d = SchmidtDistribution::peaked(0.25, 1001).unwrap();
        let t = chi_table(&d, 1001);
        let ln_chi = t.ln_chi(1000).unwrap();
        assert!(ln_chi.is_finite() && ln_chi < -690.0);
        // chi_S = S! prod lambda, in closed form.
        let a = d.lambdas()[0];
        let b = d.lambdas()[1];
        let expected = ln_fact(1001) + a.ln() + 1000.0 * b.ln();
        assert!(rel(t.ln_chi(1001).unwrap(), expected) < 1e-12);
        for n in 0..1001 {
            assert!(t.ratio(n).unwrap().value() <= 1.0);
        }
    }

    #[test]
    fn omega_examples() {
        let d = SchmidtDistribution::from_weights(&[0.7, 0.2, 0.1]).unwrap();
        assert!((omega(&d, ExponentPattern::new(1, 0)) - 0.54).abs() < 1e-15);
        let u = SchmidtDistribution::uniform(4).unwrap();
        assert!((omega(&u, ExponentPattern::ones(2)) - 0.75).abs() < 1e-15);
        assert!((omega(&u, ExponentPattern::new(1, 1)) - 0.1875).abs() < 1e-15);
        assert_eq!(omega(&u, ExponentPattern::new(3, 2)), 0.0);
        assert_eq!(omega(&u, ExponentPattern::new(0, 0)), 1.0);
    }

    #[test]
    fn omega_matches_tuple_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for modes in 1..=6 {
            let d = random_distribution(&mut rng, modes);
            for twos in 0..=3 {
                for ones in 0..=3 {
                    let mut exps = vec![2u32; twos];
                    exps.extend(std::iter::repeat_n(1, ones));
                    let brute = omega_by_tuples(d.lambdas(), &exps, &mut vec![false; modes]);
                    let got = omega(&d, ExponentPattern::new(twos, ones));
                    assert!((got - brute).abs() <= 1e-14, "S={modes} a={twos} b={ones}");
                }
            }
        }
    }

    #[test]
    fn omega_of_ones_is_chi() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for modes in 1..=10 {
            let d = random_distribution(&mut rng, modes);
            let t = chi_table(&d, modes);
            for k in 0..=modes {
                assert!(rel(omega(&d, ExponentPattern::ones(k)), t.chi(k).unwrap()) < 1e-12);
            }
        }
    }

    /// Sums `prod_{l in L} lambda_l * Omega^{complement(L)}(pattern)` over all
    /// `n1`-subsets `L`.
    fn subset_sum(lambdas: &[f64], n1: usize, pattern: ExponentPattern) -> f64 {
        let s = lambdas.len();
        let mut total = 0.0;
        for mask in 0u32..(1 << s) {
            if mask.count_ones() as usize != n1 {
                continue;
            }
            let mut prod = 1.0;
            let mut rest = Vec::with_capacity(s);
            for (j, &l) in lambdas.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    prod *= l;
                } else {
                    rest.push(l);
                }
            }
            total += prod * omega_coefficients(&rest, pattern);
        }
        total
    }

    #[test]
    fn subset_summation_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for modes in 2..=8 {
            let d = random_distribution(&mut rng, modes);
            let t = chi_table(&d, modes);
            for n in 1..=4usize {
                let chi_n = t.chi(n).unwrap();
                let chi_next = t.chi(n + 1).unwrap();
                for n1 in 0..=n {
                    let lhs = subset_sum(d.lambdas(), n1, ExponentPattern::ones(n - n1 + 1));
                    assert!((lhs - chi_next / factorial(n1)).abs() < 1e-12);
                    if n1 < n {
                        let lhs = subset_sum(d.lambdas(), n1, ExponentPattern::new(1, n - n1 - 1));
                        let rhs = (chi_n - chi_next) / (factorial(n1) * n as f64);
                        assert!((lhs - rhs).abs() < 1e-12, "S={modes} N={n} n1={n1}");
                    }
                }
            }
        }
    }

    #[test]
    fn chi_two_is_one_minus_purity() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let modes = rng.random_range(1..=12);
            let d = random_distribution(&mut rng, modes);
            let t = chi_table(&d, 2);
            assert!((t.chi(2).unwrap() - (1.0 - d.purity())).abs() < 1e-13);
        }
    }

    #[test]
    fn peaked_limit_maximizes_ratio_at_fixed_purity() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..1000 {
            let modes = rng.random_range(2..=12);
            let d = random_distribution(&mut rng, modes);
            let t = chi_table(&d, 4);
            let limit = ChiTable::peaked_limit(d.purity(), 4).unwrap();
            for n in 1..=3 {
                if t.chi(n).unwrap() == 0.0 {
                    continue;
                }
                let r = t.ratio(n).unwrap().value();
                let bound = limit.ratio(n).unwrap().value();
                assert!(r <= bound + 1e-12, "S={modes} N={n}: {r} > {bound}");
            }
        }
    }

    #[test]
    fn ratio_deficit_keeps_precision_near_one() {
        let t = ChiTable::peaked_limit(1e-12, 1001).unwrap();
        let r = t.ratio(1000).unwrap();
        let a = 1e-6f64;
        let exact = 1000.0 * a * a / (1.0 + 999.0 * a);
        assert!(rel(r.deficit(), exact) < 1e-9);
    }

    #[test]
    fn normalization_ratio_validation() {
        assert!(NormalizationRatio::new(1.0 + 1e-13).is_ok());
        assert!(NormalizationRatio::new(1.1).is_err());
        assert!(NormalizationRatio::new(-0.1).is_err());
        assert!(NormalizationRatio::new(f64::NAN).is_err());
        let r = NormalizationRatio::new(0.25).unwrap();
        assert_eq!(r.deficit(), 0.75);
    }

    proptest! {
        #[test]
        fn ratios_are_bounded_by_one(weights in prop::collection::vec(0.01f64..1.0, 1..15)) {
            let d = SchmidtDistribution::from_weights(&weights).unwrap();
            let t = chi_table(&d, d.size());
            prop_assert!((t.chi(1).unwrap() - 1.0).abs() < 1e-12);
            for n in 0..d.size() {
                let r = t.ratio(n).unwrap();
                prop_assert!((0.0..=1.0).contains(&r.value()));
            }
        }
    }
}

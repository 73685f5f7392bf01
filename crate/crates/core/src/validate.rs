//! Analytic formulas against the hardcore-boson oracle.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cascade::{postselected_distribution, triple_distribution, TripleOutcome};
use crate::interference::{pair_interference, BeamSplitterConvention};
use crate::ladder::{commutator_expectation, delta_expectation, epsilon_norm};
use crate::math::{binomial, factorial};
use crate::oracle::{
    apply_annihilator, apply_creator, balanced, build_state, cascade_state, fock_overlap,
    mode_weighted_occupation, occupation_distribution, site_pattern_probability,
};
use crate::splitting::{p_bif, p_hom_split, split_decomposition};
use crate::symfunc::ChiTable;
use crate::{Result, SchmidtDistribution};

/// Deviation above which the command-line suite reports failure.
pub const FAILURE_THRESHOLD: f64 = 1e-9;

/// Largest particle number per sublattice the suite exercises.
pub const MAX_N: usize = 3;

/// One distribution in the test matrix.
#[derive(Debug, Clone)]
pub struct Case {
    pub label: String,
    pub distribution: SchmidtDistribution,
}

/// Worst deviation of one analytic quantity over the matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub comparisons: usize,
    pub max_deviation: f64,
}

/// Uniform, peaked and seeded random distributions for `S` in {4, 6, 8}.
pub fn default_matrix() -> Vec<Case> {
    let mut cases = Vec::new();
    for modes in [4usize, 6, 8] {
        cases.push(Case {
            label: format!("uniform:{modes}"),
            distribution: SchmidtDistribution::uniform(modes).expect("positive S"),
        });
        cases.push(Case {
            label: format!("peaked:0.3,{modes}"),
            distribution: SchmidtDistribution::peaked(0.3, modes).expect("achievable purity"),
        });
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + modes as u64);
        let weights: Vec<f64> = (0..modes).map(|_| rng.random::<f64>() + 0.05).collect();
        cases.push(Case {
            label: format!("random:{modes}"),
            distribution: SchmidtDistribution::from_weights(&weights).expect("positive weights"),
        });
    }
    cases
}

#[derive(Default)]
struct Tally {
    entries: Vec<(&'static str, usize, f64)>,
}

impl Tally {
    fn record(&mut self, name: &'static str, deviation: f64) {
        match self.entries.iter_mut().find(|(n, _, _)| *n == name) {
            Some(entry) => {
                entry.1 += 1;
                entry.2 = entry.2.max(deviation);
            }
            None => self.entries.push((name, 1, deviation)),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (name, count, dev) in other.entries {
            match self.entries.iter_mut().find(|(n, _, _)| *n == name) {
                Some(entry) => {
                    entry.1 += count;
                    entry.2 = entry.2.max(dev);
                }
                None => self.entries.push((name, count, dev)),
            }
        }
        self
    }
}

/// Runs every check over `cases`. Results are listed in a fixed order.
pub fn run_suite(cases: &[Case]) -> Result<Vec<CheckResult>> {
    let tallies = cases
        .par_iter()
        .map(|case| check_case(&case.distribution))
        .collect::<Result<Vec<_>>>()?;
    let merged = tallies.into_iter().fold(Tally::default(), Tally::merge);
    Ok(merged
        .entries
        .into_iter()
        .map(|(name, comparisons, max_deviation)| CheckResult {
            name,
            comparisons,
            max_deviation,
        })
        .collect())
}

fn subsets(modes: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << modes))
        .filter(|mask| mask.count_ones() as usize == size)
        .map(|mask| (0..modes).filter(|j| mask & (1 << j) != 0).collect())
        .collect()
}

fn check_case(d: &SchmidtDistribution) -> Result<Tally> {
    let modes = d.size();
    let t = ChiTable::new(d, modes);
    let max_n = MAX_N.min(modes);
    let mut tally = Tally::default();

    for n in 0..=max_n {
        let state = build_state(d, [n, 0, 0])?;
        tally.record("chi", (state.prenorm() / factorial(n) - t.chi(n)?).abs());

        let up = apply_creator(&state, d, 0)?.norm_sqr();
        let down = apply_annihilator(&state, d, 0)?.norm_sqr();
        tally.record(
            "commutator",
            (up - down - commutator_expectation(&t, n)?).abs(),
        );

        let delta = 2.0 * mode_weighted_occupation(&state, d, 0)?;
        tally.record("delta", (delta - delta_expectation(&t, n)?).abs());

        if n >= 1 {
            let below = build_state(d, [n - 1, 0, 0])?;
            let lowered = apply_annihilator(&state, d, 0)?;
            let residual = lowered.sub_scaled(below.inner(&lowered), &below);
            tally.record(
                "epsilon_norm",
                (residual.norm_sqr() - epsilon_norm(&t, n)?).abs(),
            );
            check_splitting(d, &t, n, &mut tally)?;
            check_cascade(d, &t, n, &mut tally)?;
        }
    }

    for n1 in 1..=2 {
        for n2 in 1..=2 {
            if n1 + n2 > modes {
                continue;
            }
            let state = balanced(&build_state(d, [n1, n2, 0])?, 0, 1)?;
            let occ = occupation_distribution(&state);
            let analytic = pair_interference(d, n1, n2)?;
            for m in 0..=n1 + n2 {
                let oracle = occ.get(&(m, n1 + n2 - m, 0));
                tally.record("pair_interference", (oracle - analytic.get(&m)).abs());
            }
        }
    }
    Ok(tally)
}

fn check_splitting(
    d: &SchmidtDistribution,
    t: &ChiTable,
    n: usize,
    tally: &mut Tally,
) -> Result<()> {
    let split = balanced(&build_state(d, [n, 0, 0])?, 0, 1)?;
    let decomposition = split_decomposition(t, n)?;
    let occ = occupation_distribution(&split);
    for m in 0..=n {
        let overlap: Complex64 = fock_overlap(&split, d, [m, n - m, 0])?;
        tally.record(
            "fock_weight",
            (overlap.norm_sqr() - decomposition.fock_weight[m]).abs(),
        );
        let population = occ.get(&(m, n - m, 0));
        tally.record("binomial_split", (population - p_hom_split(n, m)?).abs());
        tally.record(
            "orth_weight",
            (population - overlap.norm_sqr() - decomposition.orth_weight[m]).abs(),
        );
        for sites in subsets(d.size(), m) {
            let oracle = site_pattern_probability(&split, 0, &sites)?;
            tally.record("p_bif", (oracle - p_bif(d, n, &sites)?).abs());
        }
    }
    Ok(())
}

fn check_cascade(d: &SchmidtDistribution, t: &ChiTable, n: usize, tally: &mut Tally) -> Result<()> {
    let symmetric = cascade_state(d, n, BeamSplitterConvention::Symmetric)?;
    let real = cascade_state(d, n, BeamSplitterConvention::RealOrthogonal)?;
    let occ = occupation_distribution(&symmetric);
    tally.record(
        "phase_convention",
        occ.max_abs_diff(&occupation_distribution(&real)),
    );
    tally.record("oracle_norm", (symmetric.norm_sqr() - 1.0).abs());

    let analytic = triple_distribution(t, n)?;
    for n1 in 0..=n + 1 {
        for n2 in 0..=n + 1 - n1 {
            let n3 = n + 1 - n1 - n2;
            let oracle = occ.get(&(n1, n2, n3));
            let formula = analytic.get(&TripleOutcome::new(n1, n2, n3));
            tally.record("triple", (oracle - formula).abs());
        }
    }
    for m in 0..=n {
        let scale = 2f64.powi(n as i32) / binomial(n as i64, m as i64);
        let post = postselected_distribution(t, n, m)?;
        for n2 in 0..=n - m + 1 {
            let n3 = n - m + 1 - n2;
            let oracle = scale * occ.get(&(m, n2, n3));
            tally.record("postselected", (oracle - post.get(&(n2, n3))).abs());
        }
    }
    Ok(())
}

/// Worst deviation of any check.
pub fn worst(results: &[CheckResult]) -> f64 {
    results.iter().map(|r| r.max_deviation).fold(0.0, f64::max)
}

/// Exposed for callers that want to run a single distribution.
pub fn run_single(d: &SchmidtDistribution) -> Result<Vec<CheckResult>> {
    run_suite(&[Case {
        label: "single".into(),
        distribution: d.clone(),
    }])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_covers_three_families_per_size() {
        let cases = default_matrix();
        assert_eq!(cases.len(), 9);
        assert!(cases.iter().any(|c| c.label == "peaked:0.3,4"));
    }

    #[test]
    fn single_small_case_passes() {
        let d = SchmidtDistribution::from_weights(&[0.7, 0.2, 0.1]).unwrap();
        let results = run_single(&d).unwrap();
        assert!(results.len() >= 10);
        assert!(worst(&results) < 1e-10, "{results:?}");
    }
}

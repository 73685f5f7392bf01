//! Exact simulation of bifermions as hardcore bosons.
//!
//! Three sublattices of `S` wells each, one well per Schmidt mode. A bifermion
//! in Schmidt mode `j` of sublattice `q` is a hardcore boson on site
//! `q * S + j`; basis states are occupation bitmasks. Beam-splitters only
//! couple the wells of one Schmidt column, so they act as independent
//! two-site unitaries, and a doubly occupied column is frozen.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::interference::BeamSplitterConvention;
use crate::schmidt::{validate_indices, SchmidtDistribution};
use crate::{Error, OutcomeDistribution, Result};

pub const SUBLATTICES: usize = 3;
const PRUNE: f64 = 1e-15;
const MAX_MODES: usize = 64 / SUBLATTICES;

type Key = u64;

/// A many-body state as a sparse map from occupation bitmask to amplitude.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseState {
    modes: usize,
    amplitudes: BTreeMap<Key, Complex64>,
    prenorm: f64,
}

impl SparseState {
    /// The empty lattice.
    pub fn vacuum(modes: usize) -> Result<Self> {
        if modes == 0 || modes > MAX_MODES {
            return Err(Error::Capacity(format!(
                "{modes} Schmidt modes; supported 1..={MAX_MODES}"
            )));
        }
        Ok(Self {
            modes,
            amplitudes: BTreeMap::from([(0, Complex64::new(1.0, 0.0))]),
            prenorm: 1.0,
        })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    /// Number of stored basis states.
    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitude(&self, key: Key) -> Complex64 {
        self.amplitudes.get(&key).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Key, Complex64)> + '_ {
        self.amplitudes.iter().map(|(&k, &a)| (k, a))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    /// Squared norm before the last normalization done by [`build_state`];
    /// `prod_q N_q! chi_{N_q}` for a freshly built state.
    pub fn prenorm(&self) -> f64 {
        self.prenorm
    }

    /// Site index of Schmidt mode `j` in sublattice `q`.
    pub fn site(&self, q: usize, j: usize) -> usize {
        q * self.modes + j
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &SparseState) -> Complex64 {
        let (small, large, flip) = if self.len() <= other.len() {
            (self, other, false)
        } else {
            (other, self, true)
        };
        let mut total = Complex64::new(0.0, 0.0);
        for (k, a) in small.iter() {
            if let Some(b) = large.amplitudes.get(&k) {
                total += if flip { b.conj() * a } else { a.conj() * b };
            }
        }
        total
    }

    /// `self - c * other`.
    pub fn sub_scaled(&self, c: Complex64, other: &SparseState) -> SparseState {
        let mut amplitudes = self.amplitudes.clone();
        for (k, b) in other.iter() {
            *amplitudes.entry(k).or_default() -= c * b;
        }
        let mut out = SparseState {
            modes: self.modes,
            amplitudes,
            prenorm: self.prenorm,
        };
        out.prune();
        out
    }

    /// Number of bifermions in sublattice `q` for a basis key.
    pub fn count(&self, key: Key, q: usize) -> usize {
        (key & self.sublattice_mask(q)).count_ones() as usize
    }

    fn sublattice_mask(&self, q: usize) -> Key {
        let ones = if self.modes == 64 {
            Key::MAX
        } else {
            (1 << self.modes) - 1
        };
        ones << (q * self.modes)
    }

    fn prune(&mut self) {
        self.amplitudes.retain(|_, a| a.norm() >= PRUNE);
    }

    fn normalized(mut self) -> Result<Self> {
        let norm_sqr = self.norm_sqr();
        if norm_sqr == 0.0 {
            return Err(Error::VanishingChi(0));
        }
        let scale = 1.0 / norm_sqr.sqrt();
        for a in self.amplitudes.values_mut() {
            *a *= scale;
        }
        self.prenorm = norm_sqr;
        Ok(self)
    }
}

fn check_sublattice(q: usize) -> Result<()> {
    if q >= SUBLATTICES {
        return Err(Error::InvalidParameter(format!(
            "sublattice {q} outside 0..{SUBLATTICES}"
        )));
    }
    Ok(())
}

/// `c_q^dagger = sum_j sqrt(lambda_j) d_{q,j}^dagger`, unnormalized.
pub fn apply_creator(s: &SparseState, d: &SchmidtDistribution, q: usize) -> Result<SparseState> {
    check_sublattice(q)?;
    check_modes(s, d)?;
    let mut out: BTreeMap<Key, Complex64> = BTreeMap::new();
    for (key, a) in s.iter() {
        for (j, lambda) in d.lambdas().iter().enumerate() {
            let bit = 1 << s.site(q, j);
            if key & bit == 0 && *lambda > 0.0 {
                *out.entry(key | bit).or_default() += a * lambda.sqrt();
            }
        }
    }
    let mut state = SparseState {
        modes: s.modes,
        amplitudes: out,
        prenorm: s.prenorm,
    };
    state.prune();
    Ok(state)
}

/// `c_q = sum_j sqrt(lambda_j) d_{q,j}` with hardcore lowering, unnormalized.
pub fn apply_annihilator(
    s: &SparseState,
    d: &SchmidtDistribution,
    q: usize,
) -> Result<SparseState> {
    check_sublattice(q)?;
    check_modes(s, d)?;
    let mut out: BTreeMap<Key, Complex64> = BTreeMap::new();
    for (key, a) in s.iter() {
        for (j, lambda) in d.lambdas().iter().enumerate() {
            let bit = 1 << s.site(q, j);
            if key & bit != 0 && *lambda > 0.0 {
                *out.entry(key & !bit).or_default() += a * lambda.sqrt();
            }
        }
    }
    let mut state = SparseState {
        modes: s.modes,
        amplitudes: out,
        prenorm: s.prenorm,
    };
    state.prune();
    Ok(state)
}

fn check_modes(s: &SparseState, d: &SchmidtDistribution) -> Result<()> {
    if s.modes != d.size() {
        return Err(Error::InvalidParameter(format!(
            "state has {} Schmidt modes, distribution {}",
            s.modes,
            d.size()
        )));
    }
    Ok(())
}

/// `prod_q (c_q^dagger)^{N_q} |0>`, normalized. The squared norm before
/// normalization is kept in [`SparseState::prenorm`].
pub fn build_state(d: &SchmidtDistribution, counts: [usize; SUBLATTICES]) -> Result<SparseState> {
    let mut state = SparseState::vacuum(d.size())?;
    for (q, &n) in counts.iter().enumerate() {
        if n > d.size() {
            return Err(Error::VanishingChi(n));
        }
        for _ in 0..n {
            state = apply_creator(&state, d, q)?;
        }
    }
    if state.is_empty() {
        let n = counts.iter().copied().max().unwrap_or(0);
        return Err(Error::VanishingChi(n));
    }
    state.normalized()
}

/// Two-site tunnelling unitary on every Schmidt column between sublattices
/// `qa` and `qb`. On `{|10>, |01>}` it is the rotation by `theta` in the given
/// convention; `|00>` and `|11>` are left alone. `theta = pi/4` is balanced.
pub fn apply_beamsplitter(
    s: &SparseState,
    qa: usize,
    qb: usize,
    theta: f64,
    convention: BeamSplitterConvention,
) -> Result<SparseState> {
    check_sublattice(qa)?;
    check_sublattice(qb)?;
    if qa == qb {
        return Err(Error::InvalidParameter(
            "beam-splitter needs two sublattices".into(),
        ));
    }
    let (cos, sin) = (theta.cos(), theta.sin());
    // (stay, a -> b, b -> a)
    let (stay, a_to_b, b_to_a) = match convention {
        BeamSplitterConvention::Symmetric => (
            Complex64::new(cos, 0.0),
            Complex64::new(0.0, sin),
            Complex64::new(0.0, sin),
        ),
        BeamSplitterConvention::RealOrthogonal => (
            Complex64::new(cos, 0.0),
            Complex64::new(sin, 0.0),
            Complex64::new(-sin, 0.0),
        ),
    };
    let mut amplitudes = s.amplitudes.clone();
    for j in 0..s.modes {
        let bit_a: Key = 1 << s.site(qa, j);
        let bit_b: Key = 1 << s.site(qb, j);
        let mut next: BTreeMap<Key, Complex64> = BTreeMap::new();
        for (key, amp) in amplitudes {
            let (has_a, has_b) = (key & bit_a != 0, key & bit_b != 0);
            if has_a == has_b {
                *next.entry(key).or_default() += amp;
                continue;
            }
            let moved = key ^ bit_a ^ bit_b;
            *next.entry(key).or_default() += stay * amp;
            let hop = if has_a { a_to_b } else { b_to_a };
            *next.entry(moved).or_default() += hop * amp;
        }
        next.retain(|_, a| a.norm() >= PRUNE);
        amplitudes = next;
    }
    Ok(SparseState {
        modes: s.modes,
        amplitudes,
        prenorm: s.prenorm,
    })
}

/// Balanced splitter in the default convention.
pub fn balanced(s: &SparseState, qa: usize, qb: usize) -> Result<SparseState> {
    apply_beamsplitter(
        s,
        qa,
        qb,
        std::f64::consts::FRAC_PI_4,
        BeamSplitterConvention::Symmetric,
    )
}

/// Distribution of total occupation `(n1, n2, n3)` per sublattice.
pub fn occupation_distribution(s: &SparseState) -> OutcomeDistribution<(usize, usize, usize)> {
    s.iter()
        .map(|(key, a)| {
            (
                (s.count(key, 0), s.count(key, 1), s.count(key, 2)),
                a.norm_sqr(),
            )
        })
        .collect()
}

/// Probability that the occupied modes of sublattice `q` are exactly `sites`.
pub fn site_pattern_probability(s: &SparseState, q: usize, sites: &[usize]) -> Result<f64> {
    check_sublattice(q)?;
    validate_indices(sites, s.modes)?;
    let mask = s.sublattice_mask(q);
    let pattern: Key = sites
        .iter()
        .map(|&j| 1 << s.site(q, j))
        .fold(0, |a, b| a | b);
    Ok(s.iter()
        .filter(|(key, _)| key & mask == pattern)
        .map(|(_, a)| a.norm_sqr())
        .sum())
}

/// `<M1, M2, M3|s>` with the bra the normalized product of coboson Fock
/// states.
pub fn fock_overlap(
    s: &SparseState,
    d: &SchmidtDistribution,
    counts: [usize; SUBLATTICES],
) -> Result<Complex64> {
    check_modes(s, d)?;
    Ok(build_state(d, counts)?.inner(s))
}

/// `sum_j lambda_j <n_{q,j}>`; `Delta = 2 sum_j lambda_j n_j` on a sublattice.
pub fn mode_weighted_occupation(s: &SparseState, d: &SchmidtDistribution, q: usize) -> Result<f64> {
    check_sublattice(q)?;
    check_modes(s, d)?;
    Ok(s.iter()
        .map(|(key, a)| {
            let weight: f64 = (0..s.modes)
                .filter(|&j| key & (1 << s.site(q, j)) != 0)
                .map(|j| d.lambdas()[j])
                .sum();
            weight * a.norm_sqr()
        })
        .sum())
}

/// The cascade `|N, 0, 1>`, BS1 on sublattices 0-1, then BS2 on 1-2.
pub fn cascade_state(
    d: &SchmidtDistribution,
    n: usize,
    convention: BeamSplitterConvention,
) -> Result<SparseState> {
    let quarter = std::f64::consts::FRAC_PI_4;
    let s = build_state(d, [n, 0, 1])?;
    let s = apply_beamsplitter(&s, 0, 1, quarter, convention)?;
    apply_beamsplitter(&s, 1, 2, quarter, convention)
}

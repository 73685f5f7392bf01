//! Purity sweeps over the extremal Schmidt families.
//!
//! The peaked family is evaluated in its `S -> infinity` closed form, which
//! bounds the normalization ratio from above at fixed purity. The uniform
//! family only exists at the discrete purities `P = 1/S` and is emitted there.

use std::fmt;

use rayon::prelude::*;

use crate::cascade::{
    bosonic_limit, distinguishable_limit, hom_dip, postselected_distribution, BunchingComparison,
};
use crate::interference::single_vs_n;
use crate::splitting::split_decomposition;
use crate::symfunc::ChiTable;
use crate::{Error, Result};

/// Uniform purities emitted per sweep at most; beyond that `S` is thinned
/// logarithmically.
pub const MAX_UNIFORM_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Peaked,
    Uniform,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Peaked => "peaked",
            Family::Uniform => "uniform",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// Purity grid. Without an explicit start the grid is
/// `stop * i / points` for `i = 1..=points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PurityGrid {
    pub start: Option<f64>,
    pub stop: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl PurityGrid {
    pub fn new(start: Option<f64>, stop: f64, points: usize, spacing: Spacing) -> Result<Self> {
        let in_range = |p: f64| p > 0.0 && p <= 1.0;
        if !in_range(stop) || start.is_some_and(|s| !in_range(s) || s > stop) {
            return Err(Error::InvalidParameter(format!(
                "purity grid must satisfy 0 < start <= stop <= 1 (start {start:?}, stop {stop})"
            )));
        }
        if points < 2 {
            return Err(Error::InvalidParameter(
                "purity grid needs at least 2 points".into(),
            ));
        }
        if spacing == Spacing::Log && start.is_none() {
            return Err(Error::InvalidParameter(
                "a log grid needs an explicit start".into(),
            ));
        }
        Ok(Self {
            start,
            stop,
            points,
            spacing,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        match (self.start, self.spacing) {
            (None, _) => (1..=self.points)
                .map(|i| self.stop * i as f64 / self.points as f64)
                .collect(),
            (Some(start), Spacing::Linear) => (0..self.points)
                .map(|i| start + (self.stop - start) * i as f64 / last)
                .collect(),
            (Some(start), Spacing::Log) => {
                let (lo, hi) = (start.ln(), self.stop.ln());
                (0..self.points)
                    .map(|i| match i {
                        0 => start,
                        i if i + 1 == self.points => self.stop,
                        i => (lo + (hi - lo) * i as f64 / last).exp(),
                    })
                    .collect()
            }
        }
    }

    fn bounds(&self) -> (f64, f64) {
        let values = self.values();
        (values[0], values[values.len() - 1])
    }
}

/// Mode counts `S >= min_modes` whose purity `1/S` lies in `[lo, hi]`.
pub fn uniform_sizes(min_modes: usize, lo: f64, hi: f64) -> Vec<usize> {
    let first = ((1.0 / hi).ceil() as usize).max(min_modes).max(1);
    let last = (1.0 / lo).floor().min(1e15) as usize;
    if last < first {
        return Vec::new();
    }
    if last - first < MAX_UNIFORM_POINTS {
        return (first..=last).collect();
    }
    let (a, b) = ((first as f64).ln(), (last as f64).ln());
    let mut sizes: Vec<usize> = (0..MAX_UNIFORM_POINTS)
        .map(|i| {
            (a + (b - a) * i as f64 / (MAX_UNIFORM_POINTS - 1) as f64)
                .exp()
                .round() as usize
        })
        .map(|s| s.clamp(first, last))
        .collect();
    sizes.dedup();
    sizes
}

type SweepPoint = (Family, f64, Option<usize>, ChiTable);

/// A `(family, P, S, chi table)` entry for each sweep point, ordered by family
/// then ascending `P`. Points where `chi_n` vanishes (the peaked limit at
/// `P = 1` for `n >= 2`) are dropped.
fn sweep_tables(
    grid: &PurityGrid,
    min_modes: usize,
    n: usize,
    nmax: usize,
) -> Result<Vec<SweepPoint>> {
    let mut peaked: Vec<f64> = grid.values();
    peaked.sort_by(f64::total_cmp);
    let (lo, hi) = grid.bounds();
    let mut uniform = uniform_sizes(min_modes, lo.min(hi), hi.max(lo));
    uniform.reverse();
    let mut points: Vec<(Family, f64, Option<usize>)> = peaked
        .into_iter()
        .map(|p| (Family::Peaked, p, None))
        .collect();
    points.extend(
        uniform
            .into_iter()
            .map(|s| (Family::Uniform, 1.0 / s as f64, Some(s))),
    );
    points
        .into_par_iter()
        .map(|(family, p, modes)| {
            let table = match modes {
                Some(s) => ChiTable::uniform(s, nmax)?,
                None => ChiTable::peaked_limit(p, nmax)?,
            };
            Ok((family, p, modes, table))
        })
        .collect::<Result<Vec<_>>>()
        .map(|tables| {
            tables
                .into_iter()
                .filter(|(_, _, _, t)| t.require_positive(n).is_ok())
                .collect()
        })
}

/// Total Fock and orthogonal population after splitting `|N, 0>`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitRow {
    pub n: usize,
    pub family: Family,
    pub purity: f64,
    pub modes: Option<usize>,
    pub fock_total: f64,
    pub orth_total: f64,
}

/// Coboson-component population of `N` split cobosons; uniform points at
/// every `S >= N + 1`.
pub fn split_sweep(n: usize, grid: &PurityGrid) -> Result<Vec<SplitRow>> {
    sweep_tables(grid, n + 1, n, n)?
        .into_par_iter()
        .map(|(family, purity, modes, table)| {
            let split = split_decomposition(&table, n)?;
            Ok(SplitRow {
                n,
                family,
                purity,
                modes,
                fock_total: split.fock_total(),
                orth_total: split.orth_total(),
            })
        })
        .collect()
}

/// One outcome of post-selected interference with its reference values.
#[derive(Debug, Clone, PartialEq)]
pub struct PostselectRow {
    pub n: usize,
    pub family: Family,
    pub purity: f64,
    pub modes: Option<usize>,
    pub m: usize,
    pub n2: usize,
    pub n3: usize,
    pub postselected: f64,
    /// `|0, N-M, 1>` interfering without a preceding split.
    pub usual: f64,
    pub bosonic: f64,
    pub distinguishable: f64,
    /// `(1 + 3r)/4` at the bunching outcomes of `N = 2, M = 1`.
    pub published: Option<f64>,
}

/// Post-selected distributions for each `M` over the purity grid.
pub fn postselect_sweep(n: usize, ms: &[usize], grid: &PurityGrid) -> Result<Vec<PostselectRow>> {
    if let Some(&m) = ms.iter().find(|&&m| m > n) {
        return Err(Error::InvalidParameter(format!("M = {m} exceeds N = {n}")));
    }
    let per_point = sweep_tables(grid, n, n, n + 1)?
        .into_par_iter()
        .map(|(family, purity, modes, table)| {
            let mut rows = Vec::new();
            for &m in ms {
                let post = postselected_distribution(&table, n, m)?;
                let bunching = BunchingComparison::new(table.ratio(n)?);
                for ((n2, n3), p) in post.iter() {
                    let published =
                        (n == 2 && m == 1).then_some(if *n2 == 1 { p } else { bunching.published });
                    rows.push(PostselectRow {
                        n,
                        family,
                        purity,
                        modes,
                        m,
                        n2: *n2,
                        n3: *n3,
                        postselected: p,
                        usual: single_vs_n(&table, n - m, *n2)?,
                        bosonic: bosonic_limit(n, m, *n2),
                        distinguishable: distinguishable_limit(n, m, *n2),
                        published,
                    });
                }
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

/// Coincidence probability after `N - 1` post-selected bifermions.
#[derive(Debug, Clone, PartialEq)]
pub struct DipRow {
    pub n: usize,
    pub family: Family,
    pub purity: f64,
    pub modes: Option<usize>,
    pub dip: f64,
    /// One coboson meeting one coboson: `1 - chi_2 = P`.
    pub one_one: f64,
}

pub fn dip_sweep(ns: &[usize], grid: &PurityGrid) -> Result<Vec<DipRow>> {
    let mut rows = Vec::new();
    for &n in ns {
        if n == 0 {
            return Err(Error::InvalidParameter("the HOM dip needs N >= 1".into()));
        }
        let part = sweep_tables(grid, n, n, n + 1)?
            .into_par_iter()
            .map(|(family, purity, modes, table)| {
                Ok(DipRow {
                    n,
                    family,
                    purity,
                    modes,
                    dip: hom_dip(&table, n)?,
                    one_one: hom_dip(&table, 1)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.extend(part);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_excludes_zero() {
        let g = PurityGrid::new(None, 0.2, 5, Spacing::Linear).unwrap();
        let v = g.values();
        assert_eq!(v.len(), 5);
        assert!((v[0] - 0.04).abs() < 1e-15 && (v[4] - 0.2).abs() < 1e-15);
        let g = PurityGrid::new(Some(1e-4), 1.0, 5, Spacing::Log).unwrap();
        assert!((g.values()[2] - 1e-2).abs() < 1e-15);
        assert!(PurityGrid::new(None, 0.0, 5, Spacing::Linear).is_err());
        assert!(PurityGrid::new(None, 0.5, 1, Spacing::Linear).is_err());
        assert!(PurityGrid::new(Some(0.6), 0.5, 3, Spacing::Linear).is_err());
    }

    #[test]
    fn uniform_sizes_respect_bounds() {
        assert_eq!(uniform_sizes(7, 0.1, 0.2), vec![7, 8, 9, 10]);
        assert!(uniform_sizes(1001, 0.04, 0.2).is_empty());
        let thinned = uniform_sizes(2, 1e-12, 0.5);
        assert!(thinned.len() <= MAX_UNIFORM_POINTS);
        assert_eq!(thinned[0], 2);
        assert_eq!(*thinned.last().unwrap(), 1_000_000_000_000);
    }

    #[test]
    fn split_sweep_endpoint_is_bosonic() {
        let g = PurityGrid::new(Some(1e-8), 0.1, 2, Spacing::Log).unwrap();
        let rows = split_sweep(6, &g).unwrap();
        let first = &rows[0];
        assert_eq!(first.family, Family::Peaked);
        assert!((first.fock_total - 1.0).abs() < 1e-6);
        for r in &rows {
            assert!((r.fock_total + r.orth_total - 1.0).abs() < 1e-12);
            if r.family == Family::Uniform {
                assert!(r.modes.unwrap() >= 7);
            }
        }
    }

    #[test]
    fn postselect_sweep_groups_are_normalized() {
        let g = PurityGrid::new(None, 1.0, 10, Spacing::Linear).unwrap();
        let rows = postselect_sweep(4, &[1, 2, 3], &g).unwrap();
        let mut groups = std::collections::BTreeMap::new();
        for r in &rows {
            let key = (r.family, r.purity.to_bits(), r.m);
            *groups.entry(key).or_insert(0.0) += r.postselected;
            assert!((0.0..=1.0 + 1e-12).contains(&r.postselected));
            assert!(r.published.is_none());
        }
        for total in groups.values() {
            assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn dip_sweep_reproduces_coincidence_formula() {
        let g = PurityGrid::new(None, 0.2, 5, Spacing::Linear).unwrap();
        let rows = dip_sweep(&[2], &g).unwrap();
        let row = rows.iter().find(|r| r.family == Family::Peaked).unwrap();
        assert!((row.purity - 0.04).abs() < 1e-15);
        let t = ChiTable::peaked_limit(0.04, 3).unwrap();
        assert!((row.dip - 0.75 * t.ratio(2).unwrap().deficit()).abs() < 1e-15);
        assert!((row.one_one - 0.04).abs() < 1e-15);
    }
}

//! Scalar quantities of the coboson Fock ladder `|N> ~ (c^dagger)^N |0>`.

use crate::symfunc::ChiTable;
use crate::{Error, Result};

/// `<N| [c, c^dagger] |N> = 2 chi_{N+1} / chi_N - 1`.
///
/// Equals one only for ideal bosons (`chi_{N+1} = chi_N`).
pub fn commutator_expectation(t: &ChiTable, n: usize) -> Result<f64> {
    Ok(2.0 * t.ratio(n)?.value() - 1.0)
}

/// `<N| Delta |N> = 2 (1 - chi_{N+1} / chi_N)`, the deviation of the
/// commutator from one.
pub fn delta_expectation(t: &ChiTable, n: usize) -> Result<f64> {
    Ok(2.0 * t.ratio(n)?.deficit())
}

/// Squared norm of the part of `c |N>` outside the ladder:
/// `1 - N chi_N / chi_{N-1} + (N - 1) chi_{N+1} / chi_N`.
pub fn epsilon_norm(t: &ChiTable, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "the orthogonal remainder is defined for N >= 1".into(),
        ));
    }
    let down = t.ratio(n - 1)?.value();
    let up = t.ratio(n)?.value();
    Ok(1.0 - n as f64 * down + (n - 1) as f64 * up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SchmidtDistribution;

    fn table(weights: &[f64], nmax: usize) -> ChiTable {
        ChiTable::new(&SchmidtDistribution::from_weights(weights).unwrap(), nmax)
    }

    #[test]
    fn commutator_examples() {
        let t = table(&[0.7, 0.2, 0.1], 4);
        assert!((commutator_expectation(&t, 0).unwrap() - 1.0).abs() < 1e-15);
        assert!((commutator_expectation(&t, 1).unwrap() + 0.08).abs() < 1e-15);
        assert_eq!(commutator_expectation(&t, 4), Err(Error::VanishingChi(4)));

        let wide = ChiTable::uniform(1_000_000, 4).unwrap();
        assert!((commutator_expectation(&wide, 3).unwrap() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn delta_is_one_minus_commutator() {
        let t = table(&[0.5, 0.3, 0.2], 3);
        for n in 0..3 {
            let c = commutator_expectation(&t, n).unwrap();
            assert!((delta_expectation(&t, n).unwrap() - (1.0 - c)).abs() < 1e-15);
        }
    }

    #[test]
    fn epsilon_examples() {
        assert!(epsilon_norm(&table(&[0.5, 0.5], 3), 2).unwrap().abs() < 1e-15);
        assert!(
            epsilon_norm(&ChiTable::uniform(4, 3).unwrap(), 2)
                .unwrap()
                .abs()
                < 1e-15
        );
        let e = epsilon_norm(&table(&[0.7, 0.2, 0.1], 3), 2).unwrap();
        assert!((e - (1.0 - 0.92 + 0.084 / 0.46)).abs() < 1e-15);
        assert!((e - 0.2626087).abs() < 1e-7);
        assert!(epsilon_norm(&table(&[1.0], 2), 0).is_err());
        assert_eq!(
            epsilon_norm(&table(&[1.0], 3), 2),
            Err(Error::VanishingChi(2))
        );
    }

    #[test]
    fn single_particle_leaves_no_remainder() {
        for w in [[0.9, 0.1], [0.5, 0.5]] {
            assert!(epsilon_norm(&table(&w, 2), 1).unwrap().abs() < 1e-15);
        }
    }
}

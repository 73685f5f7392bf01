use coboson::cascade::{hom_dip, postselected_distribution, triple_distribution, TripleOutcome};
use coboson::interference::{pair_interference, superposition_weights};
use coboson::oracle::{cascade_state, occupation_distribution};
use coboson::validate::{run_single, worst};
use coboson::{BeamSplitterConvention, ChiTable, SchmidtDistribution};
use proptest::prelude::*;

fn distribution() -> impl Strategy<Value = SchmidtDistribution> {
    prop::collection::vec(0.01f64..1.0, 3..=5)
        .prop_map(|w| SchmidtDistribution::from_weights(&w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_distributions_match_the_oracle(d in distribution()) {
        let results = run_single(&d).unwrap();
        prop_assert!(worst(&results) < 1e-10, "{results:?}");
    }

    #[test]
    fn weights_sum_to_one(d in distribution(), n1 in 0usize..3, n2 in 0usize..3) {
        prop_assume!(n1 + n2 <= d.size());
        let w = superposition_weights(&d, n1, n2).unwrap();
        prop_assert!((w.total() - 1.0).abs() < 1e-12);
        prop_assert!(w.w.iter().all(|&x| x >= -1e-15));
    }
}

#[test]
fn real_convention_gives_the_same_counts() {
    let d = SchmidtDistribution::from_weights(&[0.5, 0.3, 0.15, 0.05]).unwrap();
    for n in 1..=3 {
        let a = occupation_distribution(
            &cascade_state(&d, n, BeamSplitterConvention::Symmetric).unwrap(),
        );
        let b = occupation_distribution(
            &cascade_state(&d, n, BeamSplitterConvention::RealOrthogonal).unwrap(),
        );
        assert!(a.max_abs_diff(&b) < 1e-14);
    }
}

#[test]
fn triple_statistics_reproduce_the_simulator() {
    let d = SchmidtDistribution::peaked(0.4, 6).unwrap();
    let t = ChiTable::new(&d, 4);
    let n = 3;
    let occ =
        occupation_distribution(&cascade_state(&d, n, BeamSplitterConvention::Symmetric).unwrap());
    let analytic = triple_distribution(&t, n).unwrap();
    for (o, p) in analytic.iter() {
        assert!((occ.get(&(o.n1, o.n2, o.n3)) - p).abs() < 1e-10, "{o}");
    }
    assert_eq!(analytic.get(&TripleOutcome::new(4, 0, 0)), 0.0);
}

#[test]
fn ideal_bosons_show_no_coincidences() {
    let t = ChiTable::uniform(1_000_000, 40).unwrap();
    for n in [1, 5, 20] {
        assert!(hom_dip(&t, n).unwrap() < 1e-4);
    }
    let d = SchmidtDistribution::uniform(40).unwrap();
    let pair = pair_interference(&d, 1, 1).unwrap();
    assert!((pair.get(&1) - d.purity()).abs() < 1e-14);
    let post = postselected_distribution(&t, 1, 0).unwrap();
    assert!(post.get(&(1, 1)) < 1e-5);
}

use map_core::enumerate::*;
use map_core::path::{Family, Step, StepClass};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_paths(Family::M2, 3, 3).count(), 9);
    let empty: Vec<_> = enumerate_paths(Family::M1, 0, 0).collect();
    assert_eq!(empty.len(), 1);
    assert!(empty[0].is_empty());
    let mut row1: Vec<Vec<Step>> = enumerate_paths(Family::M1R, 1, 5).map(|p| p.steps().to_vec()).collect();
    row1.sort();
    let mut want = vec![vec![Step::Flat]];
    want.extend((1..=5).map(|j| vec![Step::Up(j)]));
    want.sort();
    assert_eq!(row1, want);
}

#[test]
fn enumeration_is_lexicographic_and_distinct() {
    let paths: Vec<Vec<Step>> = enumerate_paths(Family::M1, 6, 6).map(|p| p.steps().to_vec()).collect();
    let mut sorted = paths.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(paths, sorted);
}

#[test]
fn count_table_examples() {
    let t = count_table(Family::M1, 8, 2);
    assert_eq!(t.counts[8], [982, 1118, 869].map(BigInt::from));
    let t = count_table(Family::M2R, 4, 9);
    assert!(t.counts[2].iter().all(|c| *c == BigInt::from(1)));
    let t = count_table(Family::M2, 3, 3);
    let c = &t.by_class[3][0];
    assert_eq!((c.f.clone(), c.g.clone(), c.h.clone()), (0.into(), 2.into(), 0.into()));
    let dist: Vec<BigInt> = t.counts[3].clone();
    assert_eq!(dist, [2, 3, 3, 1].map(BigInt::from));
}

#[test]
fn antidiagonal_examples() {
    assert_eq!(antidiagonal_count(Family::M1R, 2), BigInt::from(3));
    assert_eq!(antidiagonal_count(Family::M2R, 4), BigInt::from(9));
    assert_eq!(antidiagonal_count(Family::M2R, 0), BigInt::from(1));
    let on_axis = enumerate_paths(Family::M2R, 4, 0).filter(|p| p.end_height() == 0).count();
    assert_eq!(on_axis, 4);
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dp_counts_match_materialised_paths(f in family(), n in 0usize..8, k in 0usize..6) {
        let t = count_table(f, n, k);
        for h in 0..=k {
            let paths: Vec<_> = enumerate_paths(f, n, k).filter(|p| p.end_height() == h as i64).collect();
            prop_assert_eq!(&t.counts[n][h], &BigInt::from(paths.len()));
            let by = |c: StepClass| paths.iter().filter(|p| match c {
                StepClass::U => matches!(p.last_step_class(), StepClass::U | StepClass::Empty),
                other => p.last_step_class() == other,
            }).count();
            let cc = &t.by_class[n][h];
            prop_assert_eq!((&cc.f, &cc.g, &cc.h), (&BigInt::from(by(StepClass::U)), &BigInt::from(by(StepClass::D)), &BigInt::from(by(StepClass::H))));
        }
    }

    #[test]
    fn reversal_maps_axis_paths_to_mirror_family(f in family(), n in 0usize..=10) {
        let here: Vec<_> = enumerate_paths(f, n, 0).collect();
        for p in &here {
            let r = p.reversed().unwrap();
            prop_assert_eq!(r.family(), f.mirror());
            prop_assert_eq!(r.end_height(), 0);
            prop_assert_eq!(&r.reversed().unwrap(), p);
        }
        prop_assert_eq!(here.len(), enumerate_paths(f.mirror(), n, 0).count());
    }
}

use map_core::series::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn ints(s: &USeries) -> Vec<i64> {
    s.to_integers().unwrap().iter().map(|x| i64::try_from(x).unwrap()).collect()
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn division_examples() {
    let geo = USeries::one(10).div(&USeries::poly(&[1, -1], 10)).unwrap();
    assert_eq!(ints(&USeries::poly(&[1, -1], 10).mul(&geo)), [1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    let q = USeries::z(8).div(&USeries::poly(&[1, -1, 1], 8)).unwrap();
    assert_eq!(ints(&q), [0, 1, 1, 0, -1, -1, 0, 1]);
    assert!(USeries::one(4).div(&USeries::zero(4)).is_err());
}

#[test]
fn sqrt_examples() {
    assert_eq!(ints(&USeries::one(5).sqrt().unwrap()), [1, 0, 0, 0, 0]);
    let s = USeries::poly(&[1, -4], 12).sqrt().unwrap();
    assert_eq!(ints(&s)[..4], [1, -2, -2, -4]);
    let c = (&USeries::one(12) - &s).shift_down(1).unwrap().scale(&BigRational::new(1.into(), 2.into()));
    let oracle: Vec<i64> = (0..11u64).map(|n| i64::try_from(binom(2 * n, n) / (n + 1)).unwrap()).collect();
    assert_eq!(ints(&c), oracle);
    assert!(USeries::poly(&[2, 1], 4).sqrt().is_err());
}

#[test]
fn named_series_values() {
    assert_eq!(ints(&named_series(NamedSeries::Motzkin, 9)), [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]);
    assert_eq!(ints(&named_series(NamedSeries::Catalan, 5)), [1, 1, 2, 5, 14, 42]);
    assert_eq!(ints(&named_series(NamedSeries::RiordanNumbers, 7)), [1, 0, 1, 1, 3, 6, 15, 36]);
    // Motzkin from its own radical
    let d = motzkin_discriminant_sqrt(12);
    let m = (&(&USeries::one(12) - &USeries::z(12)) - &d).shift_down(2).unwrap().scale(&BigRational::new(1.into(), 2.into()));
    assert_eq!(ints(&m), ints(&named_series(NamedSeries::Motzkin, 9)));
}

#[test]
fn inverse_examples() {
    let p = 14;
    let zm = named_series(NamedSeries::Motzkin, p - 1).shift_up(1).truncate(p);
    let f = USeries::z(p).div(&USeries::poly(&[1, 1, 1], p)).unwrap();
    assert_eq!(f.comp_inverse().unwrap(), zm);
    let g = USeries::poly(&[0, 1, -1], p).div(&USeries::poly(&[1, -1, 1], p)).unwrap();
    let zr = named_series(NamedSeries::RiordanNumbers, p - 1).shift_up(1).truncate(p);
    assert_eq!(g.comp_inverse().unwrap(), zr);
    assert_eq!(zr.compose(&g).unwrap(), USeries::z(p));
}

#[test]
fn tight_precision_rule() {
    let a = USeries::poly(&[0, 0, 1, 1], 6);
    let b = USeries::poly(&[0, 1, 2], 4);
    // min(6 + 1, 4 + 2)
    assert_eq!(a.mul(&b).prec(), 6);
    assert!(matches!(a.coeff(9), Err(SeriesError::TruncationExceeded { .. })));
}

#[test]
fn bivariate_evaluation() {
    let cols: Vec<USeries> = (1..=4).map(|k| USeries::poly(&[k, k], 5)).collect();
    let b = BSeries::from_columns(cols);
    assert_eq!(b.eval_u(&USeries::zero(5), false).unwrap(), USeries::poly(&[1, 1], 5));
    assert!(matches!(b.eval_u(&USeries::one(5), false), Err(SeriesError::WindowTooSmall { .. })));
    assert_eq!(ints(&b.eval_u(&USeries::one(5), true).unwrap()), [10, 10, 0, 0, 0]);
    // u = z: four columns fill z^0..z^3, three do not
    assert!(b.truncate(4, 3).eval_u(&USeries::z(4), false).is_err());
    let e = b.truncate(4, 4).eval_u(&USeries::z(4), false).unwrap();
    assert_eq!(ints(&e), [1, 3, 5, 7]);
}

fn series_strategy(unit: bool) -> impl Strategy<Value = USeries> {
    prop::collection::vec(-6i64..=6, 1..10).prop_map(move |mut v| {
        if unit {
            v[0] = 1;
        }
        let p = 10;
        USeries::poly(&v, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sqrt_squares_back(a in series_strategy(true)) {
        let s = a.sqrt().unwrap();
        prop_assert_eq!(s.mul(&s).truncate(a.prec()), a);
    }

    #[test]
    fn inverse_round_trips(mut v in prop::collection::vec(-5i64..=5, 1..8)) {
        v.insert(0, 0);
        v[1] = if v[1] == 0 { 1 } else { v[1] };
        let f = USeries::poly(&v, 9);
        let g = f.comp_inverse().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), USeries::z(9));
        prop_assert_eq!(g.compose(&f).unwrap(), USeries::z(9));
    }

    #[test]
    fn ring_laws(a in series_strategy(false), b in series_strategy(false), c in series_strategy(false)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn division_inverts_multiplication(a in series_strategy(false), d in series_strategy(true)) {
        prop_assert_eq!(a.mul(&d).div(&d).unwrap(), a);
    }
}

use map_core::formulas::*;
use num_bigint::BigInt;

fn b(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn binomial_convention() {
    assert_eq!(binom(5, 2), b(10));
    assert_eq!(binom(3, 5), b(0));
    assert_eq!(binom(4, -1), b(0));
    assert_eq!(binom(-1, 3), b(-1));
    assert_eq!(binom(-3, 2), b(6));
    for n in 1..20 {
        for k in 1..=n {
            assert_eq!(binom(n, k), binom(n - 1, k) + binom(n - 1, k - 1));
        }
    }
}

#[test]
fn worked_values() {
    let mut ev = Evaluator::new();
    assert_eq!(ev.m1_c(3, 1), b(5));
    assert_eq!(ev.m1_nested_sum(4, 2), b(9));
    assert_eq!(ev.m1_nested_sum(0, 0), b(0));
    assert_eq!(ev.m1_d(0, 0), b(0));
    assert_eq!(ev.m1_catalan_sum(3, 1), b(5));
    assert_eq!(ev.m1_catalan_sum(6, 3), b(48));
    for n in 0..8 {
        assert_eq!(ev.m1_catalan_sum(n, n), b(1));
    }
    let v: Vec<_> = (0..5).map(|n| ev.m1r_v(n)).collect();
    assert_eq!(v, [1, 3, 8, 23, 69].map(b));
    assert_eq!(ev.m1r_rectified_sum(2, 1), b(10));
    assert_eq!(m2_lagrange_sum(7, 3), b(59));
    assert_eq!(m2_alternating_sum(5, 0), b(9));
    assert_eq!(motzkin_riordan_rect_term(2, 1), b(3));
    assert_eq!(motzkin_riordan_rect_term(4, 2), b(22));
    assert_eq!(motzkin_riordan_rect_term(0, 0), b(1));
}

#[test]
fn manifest_small() {
    let r = formula_report(9).unwrap();
    assert!(r.is_clean(), "{r}");
}

use map_core::kernel::*;
use map_core::path::Family;
use map_core::series::USeries;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

fn col(b: &GfBundle, k: usize) -> Vec<BigInt> {
    b.total_col[k].to_integers().unwrap()
}

#[test]
fn closed_form_examples() {
    let b = gf_closed_forms(Family::M1, 9, 3).unwrap();
    assert_eq!(col(&b, 0), [1, 1, 2, 5, 13, 36, 105, 317, 982, 3105].map(BigInt::from));
    let b = gf_closed_forms(Family::M2, 8, 8).unwrap();
    for k in 0..=8 {
        assert_eq!(b.total_at(k, k), BigInt::one());
    }
    let b = gf_closed_forms(Family::M1R, 5, 3).unwrap();
    assert_eq!(col(&b, 3)[3..], [12, 43, 149].map(BigInt::from));
}

#[test]
fn iteration_examples() {
    let b = gf_by_iteration(Family::M1, 6, 4).unwrap();
    let s = &b.f[2].coeffs()[4] + &b.g[2].coeffs()[4] + &b.h[2].coeffs()[4];
    assert_eq!(s, BigRational::from_integer(9.into()));
    let b = gf_by_iteration(Family::M2R, 4, 6).unwrap();
    assert_eq!(b.total_at(2, 5), BigInt::one());
    for f in Family::ALL {
        let b = gf_by_iteration(f, 3, 3).unwrap();
        assert_eq!(b.f[0].coeffs()[0], BigRational::one());
        assert!(b.g[0].coeffs()[0] == BigRational::from_integer(0.into()));
        assert!(b.h[0].coeffs()[0] == BigRational::from_integer(0.into()));
    }
}

#[test]
fn root_examples() {
    let p = 12;
    let r = kernel_roots(Family::M2R, p);
    assert!(agree(&(&r.r_form + &r.s), &USeries::poly(&[1, 1], p), p));
    assert!(agree(&r.r_form.mul(&r.s), &USeries::poly(&[0, 1, 1], p), p));
    assert!(r.s.coeffs()[0] == BigRational::from_integer(0.into()) && r.r_form.coeffs()[0] == BigRational::one());
    for f in Family::ALL {
        let roots = kernel_roots(f, p);
        for (name, ok) in root_identities(&roots, p - 1) {
            assert!(ok, "{f}: {name}");
        }
    }
    let m1 = kernel_roots(Family::M1, p);
    assert!(m1.inv_r().coeffs()[0] == BigRational::from_integer(0.into()));
}

#[test]
fn residuals_vanish() {
    for f in Family::ALL {
        let rep = verify_functional_equations(f, 10, 10).unwrap();
        assert!(rep.is_clean(), "{}", rep.to_report());
        let ids = kernel_identity_report(f, 12).unwrap();
        assert!(ids.is_clean(), "{ids}");
    }
}

#[test]
fn injected_fault_is_located() {
    for f in Family::ALL {
        for &(n, k) in &[(5usize, 2usize), (7, 0), (3, 3)] {
            let mut b = gf_closed_forms(f, 9, 9).unwrap();
            let mut c = b.f[k].coeffs().to_vec();
            c[n] += BigRational::one();
            b.f[k] = USeries::new(c, b.prec());
            let rep = check_functional_equations(&b);
            let flagged = rep.flagged();
            assert!(flagged.contains(&(n, k)), "{f} ({n},{k}) not flagged: {flagged:?}");
            assert!(flagged.iter().all(|&(m, _)| m >= n), "{f} ({n},{k}) flagged earlier cells {flagged:?}");
        }
    }
}

use map_core::path::Family;
use map_core::printed;
use map_core::triangles::*;
use num_bigint::BigInt;

#[test]
fn every_route_reproduces_printed_matrices() {
    for f in Family::ALL {
        let (rows, cols, data) = printed::printed_matrix(f);
        for route in Route::ALL.into_iter().filter(|r| r.available(f)) {
            let t = build_triangle(f, route, rows, cols).unwrap();
            assert_eq!((t.rows, t.cols), (rows, cols));
            for (n, row) in data.iter().enumerate() {
                for (k, &v) in row.iter().enumerate() {
                    assert_eq!(t.data[n][k], BigInt::from(v), "{f} {route} ({n},{k})");
                }
            }
        }
    }
}

#[test]
fn reversed_families_reject_constructive_routes() {
    assert!(build_triangle(Family::M1R, Route::Recurrence, 4, 4).is_err());
    assert!(build_triangle(Family::M2R, Route::Riordan, 4, 4).is_err());
}

#[test]
fn recurrences_hold_on_stated_ranges() {
    for f in Family::ALL {
        let t = build_triangle(f, Route::ClosedForm, 14, 14).unwrap();
        let r = triangle_recurrence_check(&t);
        assert!(r.is_clean(), "{r}");
    }
}

#[test]
fn corrupted_cell_is_reported() {
    let mut t = build_triangle(Family::M2, Route::Enumeration, 10, 10).unwrap();
    t.data[6][3] += 1;
    let r = triangle_recurrence_check(&t);
    assert!(!r.is_clean());
    assert!(r.to_string().contains("(6, 3)"), "{r}");
}

#[test]
fn first_columns_match_printed() {
    let to = |v: &[u64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(first_column_series(Family::M1, 11), to(&printed::A114465_PREFIX));
    assert_eq!(first_column_series(Family::M2, 9), to(&printed::M2_COLUMN0));
}

#[test]
fn decompositions_and_identities() {
    for d in [Decomposition::M1R, Decomposition::M2R] {
        let r = decomposition_check(d, 10).unwrap();
        assert!(r.is_clean(), "{r}");
    }
    let r = convolution_checks(12).unwrap();
    assert!(r.is_clean(), "{r}");
    let r = family_identity_checks(12).unwrap();
    assert!(r.is_clean(), "{r}");
    for f in Family::ALL {
        let r = cross_route_equality(f, 8, 8).unwrap();
        assert!(r.is_clean(), "{r}");
    }
}

#[test]
fn rectifications() {
    let r = rectification_checks(8).unwrap();
    println!("{r}");
    assert!(r.find("rectify(g, (1 - z^2 - sqrt)/2) = m1r [t(n+1,k+1)]").unwrap().passed());
    assert!(!r.find("rectify(M, zR) = m2r [t(n+1,k+1)]").unwrap().passed());
    assert!(r.find("rectify(M, zR) = m2r [t(n+1,k)]").unwrap().passed());
    assert!(r.find("rectify(M R, zR) = m2r [t(n+1,k+1)]").unwrap().passed());
}

//! Named verification suites combining the module checks into reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::formulas::formula_report;
use crate::kernel::{gf_by_iteration, gf_closed_forms, kernel_identity_report, verify_functional_equations, KernelError};
use crate::oeis::{match_shift, MatchError, OeisClient, OeisError, DEFAULT_MAX_SHIFT};
use crate::path::Family;
use crate::printed;
use crate::report::Report;
use crate::riordan::{
    self, from_integer_matrix, pseudo_involution_check, rectify, to_integer_matrix, Matrix, RiordanArray, RiordanError,
};
use crate::series::{named_series, NamedSeries};
use crate::triangles::{
    build_triangle, convolution_checks, cross_route_equality, decomposition_check, family_identity_checks,
    rectification_checks, triangle_recurrence_check, Decomposition, Route, TriangleError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Kernel,
    Triangles,
    Riordan,
    Formulas,
    Oeis,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Kernel, Suite::Triangles, Suite::Riordan, Suite::Formulas, Suite::Oeis, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kernel => "kernel",
            Suite::Triangles => "triangles",
            Suite::Riordan => "riordan",
            Suite::Formulas => "formulas",
            Suite::Oeis => "oeis",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}' (expected kernel, triangles, riordan, formulas, oeis or all)"))
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Triangle(#[from] TriangleError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Oeis(#[from] OeisError),
}

/// `order` bounds lengths `n`, `width` bounds heights `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub order: usize,
    pub width: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { order: 16, width: 16 }
    }
}

pub fn run_suite(suite: Suite, opts: Options) -> Result<Report, VerifyError> {
    Ok(match suite {
        Suite::Kernel => kernel_suite(opts)?,
        Suite::Triangles => triangles_suite(opts)?,
        Suite::Riordan => riordan_suite(opts)?,
        Suite::Formulas => formula_report(opts.order)?,
        Suite::Oeis => oeis_suite(&OeisClient::from_env())?,
        Suite::All => {
            let mut all = Report::new("all");
            for s in [Suite::Kernel, Suite::Triangles, Suite::Riordan, Suite::Formulas, Suite::Oeis] {
                all.absorb(run_suite(s, opts)?);
            }
            all
        }
    })
}

pub fn kernel_suite(opts: Options) -> Result<Report, VerifyError> {
    let mut rep = Report::new("kernel");
    for f in Family::ALL {
        rep.absorb(verify_functional_equations(f, opts.order, opts.width)?.to_report());
        rep.absorb(kernel_identity_report(f, opts.order)?);
        for b in [gf_closed_forms(f, opts.order, opts.width)?, gf_by_iteration(f, opts.order, opts.width)?] {
            let ok = b.check_integral();
            rep.check(
                format!("{f} {:?} series are integral", b.route),
                ok.is_ok(),
                ok.err().map_or_else(|| "f, g, h, total".to_string(), |e| e.to_string()),
            );
        }
    }
    Ok(rep)
}

fn printed_matrix_checks(rep: &mut Report) -> Result<(), TriangleError> {
    for f in Family::ALL {
        let (rows, cols, data) = printed::printed_matrix(f);
        let t = build_triangle(f, Route::Enumeration, rows, cols)?;
        let bad = (0..rows).flat_map(|n| (0..cols).map(move |k| (n, k))).find(|&(n, k)| t.data[n][k] != BigInt::from(data[n][k]));
        rep.check(
            format!("{f} printed {rows}x{cols} matrix"),
            bad.is_none(),
            bad.map_or_else(|| "exact".to_string(), |(n, k)| format!("differs at ({n},{k}): {} vs {}", t.data[n][k], data[n][k])),
        );
    }
    Ok(())
}

pub fn triangles_suite(opts: Options) -> Result<Report, VerifyError> {
    let mut rep = Report::new("triangles");
    printed_matrix_checks(&mut rep)?;
    for f in Family::ALL {
        rep.absorb(cross_route_equality(f, opts.order, opts.width)?);
        let t = build_triangle(f, Route::ClosedForm, opts.order + 1, opts.width + 1)?;
        rep.absorb(triangle_recurrence_check(&t));
    }
    rep.absorb(family_identity_checks(opts.order)?);
    rep.absorb(convolution_checks(opts.order)?);
    Ok(rep)
}

fn same_block(rep: &mut Report, name: String, m: &Matrix, target: &[Vec<BigInt>]) {
    let t = from_integer_matrix(target);
    let bad = (0..t.len()).flat_map(|n| (0..t[n].len()).map(move |k| (n, k))).find(|&(n, k)| m[n][k] != t[n][k]);
    rep.check(
        name,
        bad.is_none(),
        bad.map_or_else(
            || format!("{}x{} block equal", t.len(), t.first().map_or(0, Vec::len)),
            |(n, k)| format!("differs at ({n},{k}): {} vs {}", m[n][k], t[n][k]),
        ),
    );
}

fn rows_of<const C: usize>(rows: &[[u64; C]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn riordan_suite(opts: Options) -> Result<Report, VerifyError> {
    let mut rep = Report::new("riordan");
    let size = opts.order;
    let prec = size + 1;
    for (name, arr, fam) in [
        ("m1 = (C(Z)/(1-z^2), zC(Z)/(1-z^2))", riordan::m1_array(prec), Family::M1),
        ("m1 = (1/(zr), 1/r)", riordan::m1_array_from_root(prec), Family::M1),
        ("m2 = (1+zM, z(1+zM))", riordan::m2_array(prec), Family::M2),
        ("m2 = (C(z/(1+z)), zC(z/(1+z)))", riordan::m2_array_catalan_form(prec), Family::M2),
    ] {
        let t = build_triangle(fam, Route::Enumeration, size, size)?;
        same_block(&mut rep, format!("{name} on {size}x{size}"), &arr.matrix(size)?, &t.data);
    }
    for d in [Decomposition::M1R, Decomposition::M2R] {
        rep.absorb(decomposition_check(d, size)?);
    }
    for (name, d, printed_a) in [
        ("m1r almost factor A printed rows", Decomposition::M1R, rows_of(&printed::M1R_A)),
        ("m2r stretched factor A printed rows", Decomposition::M2R, rows_of(&printed::M2R_A)),
    ] {
        same_block(&mut rep, name.to_string(), &d.factor_a(8)?, &printed_a);
    }
    rep.absorb(rectification_checks(size.min(12))?);
    same_block(
        &mut rep,
        "printed m1r rectified block".into(),
        &rectify(&riordan::m1r_rectified_source(8), 5, 5)?,
        &rows_of(&printed::M1R_RECTIFIED),
    );
    same_block(
        &mut rep,
        "printed display = rectify(M R, zR)".into(),
        &rectify(&riordan::motzkin_riordan_shifted(9), 6, 5)?,
        &rows_of(&printed::MOTZKIN_RIORDAN_RECTIFIED_DISPLAY),
    );

    let inv_prec = 21;
    let mr = riordan::motzkin_riordan_array(inv_prec);
    let inv = riordan::motzkin_riordan_inverse(inv_prec);
    let id = RiordanArray::identity(inv_prec);
    rep.check("(M, zR) * printed inverse = (1, z)", mr.mul(&inv)? == id, "order 20");
    rep.check("printed inverse * (M, zR) = (1, z)", inv.mul(&mr)? == id, "order 20");
    rep.check("inverse of (M, zR) = printed inverse", mr.inverse()? == inv, "order 20");

    let gp = 14;
    let (a, b, c) = (riordan::catalan_array(gp), riordan::m2_array(gp), riordan::motzkin_riordan_array(gp));
    rep.check("group: (A B) C = A (B C)", a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?, "order 13");
    rep.check("group: A A^-1 = (1, z)", a.mul(&a.inverse()?)? == RiordanArray::identity(gp), "order 13");
    let mb = b.matrix(10)?;
    let ma = a.matrix(10)?;
    rep.check("group: matrix of A B = product of matrices", a.mul(&b)?.matrix(10)? == riordan::mat_mul(&ma, &mb), "10x10");

    let pi = pseudo_involution_check(&riordan::m2_array(17), 16)?;
    rep.check("m2 pseudo-involution: (R D)^2 = I", pi.involution, "16x16");
    rep.info("m2 signed array idempotent", format!("(R D)^2 = R D is {} on 16x16", pi.idempotent));
    let cat = to_integer_matrix(&riordan::catalan_array(11).matrix(10)?).expect("integral");
    rep.check("catalan array integral", cat.iter().all(|r| r.len() == 10), "10x10");
    Ok(rep)
}

fn flatten_triangle(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    rows.iter().enumerate().flat_map(|(n, r)| r[..=n].to_vec()).collect()
}

fn shift_check(rep: &mut Report, name: &str, computed: &[BigInt], reference: &[BigInt], expected: Option<i64>) {
    match (match_shift(computed, reference, DEFAULT_MAX_SHIFT), expected) {
        (Ok(s), Some(e)) => rep.check(name, s == e, format!("shift {s} (expected {e})")),
        (Ok(s), None) => rep.check(name, true, format!("shift {s}")),
        (Err(e @ MatchError::OverlapTooShort), _) => rep.check(
            name,
            false,
            format!("{e}: {} reference terms available offline", reference.len()),
        ),
        (Err(e), _) => rep.check(name, false, e.to_string()),
    }
}

/// Each computed sequence against its reference, via `match_shift`.
pub fn oeis_suite(client: &OeisClient) -> Result<Report, VerifyError> {
    let mut rep = Report::new("oeis");
    let n = 22;
    let tri = |f| build_triangle(f, Route::Enumeration, n, n);
    let (m1, m2, m1r) = (tri(Family::M1)?, tri(Family::M2)?, tri(Family::M1R)?);
    let r = |id: &str| client.load_reference(id).map(|s| s.terms);
    shift_check(&mut rep, "m1 row sums vs A159771", &m1.row_sums(), &r("A159771")?, Some(1));
    shift_check(&mut rep, "m1 column 0 vs A114465", &m1.column(0), &r("A114465")?, Some(0));
    shift_check(&mut rep, "m1r anti-diagonal sums vs A101499", &m1r.antidiagonal_sums(), &r("A101499")?, Some(1));
    let motz = r("A001006")?;
    shift_check(&mut rep, "m2 column 0 vs A001006", &m2.column(0), &motz, Some(-1));
    shift_check(&mut rep, "m2 row sums vs A001006", &m2.row_sums(), &motz, Some(1));
    let block: Vec<Vec<BigInt>> = m2.data[..10].to_vec();
    shift_check(&mut rep, "m2 triangle rows 0..9 vs A091836", &flatten_triangle(&block), &r("A091836")?, Some(0));
    let aux = riordan::m1r_column_series(16).div(&riordan::m1r_initial_column(16)).expect("unit");
    let aux = aux.to_integers().expect("integral");
    shift_check(&mut rep, "auxiliary g/g0 vs A187256", &aux, &r("A187256")?, Some(0));
    let cat = to_integer_matrix(&riordan::catalan_array(11).matrix(10)?).expect("integral");
    shift_check(&mut rep, "catalan array vs A033184", &flatten_triangle(&cat), &r("A033184")?, Some(0));
    let m1r_m = to_integer_matrix(&RiordanArray::new(
        crate::series::USeries::one(11),
        named_series(NamedSeries::Catalan, 10).shift_up(1).truncate(11),
    )?
    .matrix(10)?)
    .expect("integral");
    shift_check(&mut rep, "(1, zC(z)) vs A106566", &flatten_triangle(&m1r_m), &r("A106566")?, Some(0));
    let riord = named_series(NamedSeries::RiordanNumbers, 20).to_integers().expect("integral");
    shift_check(&mut rep, "Riordan numbers vs A005043", &riord, &r("A005043")?, Some(0));
    Ok(rep)
}

//! Counting triangles built along independent routes, the triangle
//! recurrences, first-column recurrences, `T = A B` decompositions and the
//! convolution identities.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::enumerate::count_table;
use crate::kernel::{gf_by_iteration, gf_closed_forms, GfBundle, KernelError};
use crate::path::Family;
use crate::printed;
use crate::report::Report;
use crate::riordan::{
    self, from_integer_matrix, mat_mul, pascal_like_b, rectify, to_integer_matrix, RiordanArray, RiordanError,
};
use crate::series::{named_series, NamedSeries, USeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Enumeration,
    Iteration,
    ClosedForm,
    Recurrence,
    Riordan,
}

impl Route {
    pub const ALL: [Route; 5] = [Route::Enumeration, Route::Iteration, Route::ClosedForm, Route::Recurrence, Route::Riordan];

    pub fn tag(self) -> &'static str {
        match self {
            Route::Enumeration => "enum",
            Route::Iteration => "iter",
            Route::ClosedForm => "closed",
            Route::Recurrence => "recur",
            Route::Riordan => "riordan",
        }
    }

    pub fn available(self, family: Family) -> bool {
        !(family.is_reversed() && matches!(self, Route::Recurrence | Route::Riordan))
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Route {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Route::ALL
            .into_iter()
            .find(|r| r.tag() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown route '{s}' (expected enum, iter, closed, recur or riordan)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("route {route} is not available for family {family}")]
    RouteUnavailable { family: Family, route: Route },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

/// Block `t(n, k)`, `0 <= n < rows`, `0 <= k < cols`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub family: Family,
    pub route: Route,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<BigInt>>,
}

impl Triangle {
    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.data[n][k]
    }

    /// `t(n, k)` with zero for negative indices and `None` outside the window.
    pub fn lookup(&self, n: i64, k: i64) -> Option<BigInt> {
        if n < 0 || k < 0 {
            return Some(BigInt::zero());
        }
        let (n, k) = (n as usize, k as usize);
        (n < self.rows && k < self.cols).then(|| self.data[n][k].clone())
    }

    pub fn column(&self, k: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[k].clone()).collect()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.data.iter().map(|r| r.iter().sum()).collect()
    }

    /// Sums `t(x, n - x)` for every `n` whose anti-diagonal fits the window.
    pub fn antidiagonal_sums(&self) -> Vec<BigInt> {
        let m = self.rows.min(self.cols);
        (0..m).map(|n| (0..=n).map(|x| self.data[x][n - x].clone()).sum()).collect()
    }

    pub fn first_mismatch(&self, other: &Triangle) -> Option<(usize, usize, BigInt, BigInt)> {
        for n in 0..self.rows.min(other.rows) {
            for k in 0..self.cols.min(other.cols) {
                if self.data[n][k] != other.data[n][k] {
                    return Some((n, k, self.data[n][k].clone(), other.data[n][k].clone()));
                }
            }
        }
        None
    }
}

fn from_bundle(family: Family, route: Route, b: &GfBundle, rows: usize, cols: usize) -> Triangle {
    let data = (0..rows).map(|n| (0..cols).map(|k| b.total_at(n, k)).collect()).collect();
    Triangle { family, route, rows, cols, data }
}

/// Builds the `rows x cols` block of the family's triangle along `route`.
pub fn build_triangle(family: Family, route: Route, rows: usize, cols: usize) -> Result<Triangle, TriangleError> {
    if !route.available(family) {
        return Err(TriangleError::RouteUnavailable { family, route });
    }
    let (nmax, kmax) = (rows.saturating_sub(1), cols.saturating_sub(1));
    let data = match route {
        Route::Enumeration => {
            let t = count_table(family, nmax, kmax);
            t.counts.into_iter().take(rows).map(|r| r.into_iter().take(cols).collect()).collect()
        }
        Route::Iteration => return Ok(from_bundle(family, route, &gf_by_iteration(family, nmax, kmax)?, rows, cols)),
        Route::ClosedForm => return Ok(from_bundle(family, route, &gf_closed_forms(family, nmax, kmax)?, rows, cols)),
        Route::Recurrence => recurrence_construction(family, rows, cols),
        Route::Riordan => {
            let size = rows.max(cols);
            let arr = if family == Family::M1 { riordan::m1_array(size + 1) } else { riordan::m2_array(size + 1) };
            let m = to_integer_matrix(&arr.matrix(size)?).expect("counting arrays are integral");
            m.into_iter().take(rows).map(|r| r.into_iter().take(cols).collect()).collect()
        }
    };
    Ok(Triangle { family, route, rows, cols, data })
}

/// Column 0 from the first-column recurrence, the rest from the triangle
/// recurrence (M1 and M2 only).
fn recurrence_construction(family: Family, rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    let col0 = first_column_series(family, rows.saturating_sub(1));
    let mut t = vec![vec![BigInt::zero(); cols]; rows];
    let get = |t: &Vec<Vec<BigInt>>, n: i64, k: i64| -> BigInt {
        if n < 0 || k < 0 {
            BigInt::zero()
        } else {
            t[n as usize][k as usize].clone()
        }
    };
    for n in 0..rows {
        if cols > 0 {
            t[n][0] = col0[n].clone();
        }
        for k in 1..cols {
            let (ni, ki) = (n as i64, k as i64);
            t[n][k] = match n {
                0 => BigInt::zero(),
                1 => BigInt::from(u8::from(k == 1)),
                _ if family == Family::M1 => {
                    get(&t, ni, ki - 1) + get(&t, ni - 1, ki) - get(&t, ni - 1, ki - 2) - get(&t, ni - 2, ki) - get(&t, ni - 2, ki - 1)
                }
                _ => get(&t, ni, ki - 1) + get(&t, ni - 1, ki - 1) - get(&t, ni - 1, ki - 2) - get(&t, ni - 2, ki - 2),
            };
        }
    }
    t
}

/// Right-hand side of the family's triangle recurrence at `(n, k)`, or `None`
/// if a referenced cell lies outside the window.
pub fn recurrence_rhs(t: &Triangle, n: usize, k: usize) -> Option<BigInt> {
    let (n, k) = (n as i64, k as i64);
    let g = |a: i64, b: i64| t.lookup(a, b);
    Some(match t.family {
        Family::M1 => g(n, k - 1)? + g(n - 1, k)? - g(n - 1, k - 2)? - g(n - 2, k)? - g(n - 2, k - 1)?,
        Family::M1R => g(n - 2, k - 1)? + g(n - 2, k)? - g(n - 1, k - 1)? + g(n - 1, k + 1)? + g(n, k - 1)?,
        Family::M2 => g(n, k - 1)? + g(n - 1, k - 1)? - g(n - 1, k - 2)? - g(n - 2, k - 2)?,
        Family::M2R => g(n, k - 1)? - g(n - 1, k)? + g(n - 2, k + 1)? + g(n - 1, k + 1)?,
    })
}

/// Lowest row from which the recurrence is asserted.
pub fn stated_start_row(family: Family) -> usize {
    if family == Family::M2R {
        1
    } else {
        2
    }
}

/// Checks the triangle recurrence on every in-window cell of the stated range
/// (`k >= 1`), and records from which row on it holds when tried from `n = 1`.
pub fn triangle_recurrence_check(t: &Triangle) -> Report {
    let mut rep = Report::new("triangles");
    let start = stated_start_row(t.family);
    let mut checked = 0usize;
    let mut bad = Vec::new();
    let mut bad_rows = Vec::new();
    for n in 1..t.rows {
        for k in 1..t.cols {
            let Some(rhs) = recurrence_rhs(t, n, k) else { continue };
            let ok = rhs == t.data[n][k];
            if n >= start {
                checked += 1;
                if !ok {
                    bad.push((n, k));
                }
            }
            if !ok {
                bad_rows.push(n);
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{checked} cells with n >= {start}, k >= 1 hold")
    } else {
        format!("violations at {bad:?}")
    };
    rep.check(format!("{} triangle recurrence ({} route)", t.family, t.route), bad.is_empty(), detail);
    let first = bad_rows.iter().max().map_or(1, |m| m + 1);
    rep.info(
        format!("{} triangle recurrence first row", t.family),
        format!("holds for every in-window cell with n >= {first}, k >= 1 (stated range starts at n = {start})"),
    );
    rep
}

/// `t_0 .. t_order` from the first-column recurrence alone.
pub fn first_column_series(family: Family, order: usize) -> Vec<BigInt> {
    let mut t: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let v = if n < 2 {
            BigInt::one()
        } else {
            match family {
                Family::M1 | Family::M1R => {
                    let mut acc = &t[n - 1] + &t[n - 2];
                    for k in 0..n.saturating_sub(2) {
                        acc += &t[k] * &t[n - k - 3];
                    }
                    for k in 2..n {
                        acc += (&t[k] - &t[k - 1]) * &t[n - k - 1];
                    }
                    acc
                }
                Family::M2 | Family::M2R => {
                    let mut acc = t[n - 1].clone();
                    for k in 1..n - 1 {
                        acc += &t[k] * &t[n - 1 - k];
                    }
                    acc
                }
            }
        };
        t.push(v);
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    /// Almost Riordan `A` for M1R.
    M1R,
    /// Almost stretched Riordan `A` for M2R.
    M2R,
}

impl Decomposition {
    pub fn family(self) -> Family {
        match self {
            Decomposition::M1R => Family::M1R,
            Decomposition::M2R => Family::M2R,
        }
    }

    pub fn factor_a(self, size: usize) -> Result<riordan::Matrix, RiordanError> {
        let a = match self {
            Decomposition::M1R => riordan::m1r_almost_array(size + 2),
            Decomposition::M2R => riordan::m2r_almost_array(size + 2),
        };
        a.matrix(size, size)
    }
}

/// Compares `A B` with the family triangle on the `size x size` block.
pub fn decomposition_check(which: Decomposition, size: usize) -> Result<Report, TriangleError> {
    let mut rep = Report::new("triangles");
    let family = which.family();
    let a = which.factor_a(size)?;
    let ab = mat_mul(&a, &pascal_like_b(size));
    let t = build_triangle(family, Route::ClosedForm, size, size)?;
    let ti = from_integer_matrix(&t.data);
    let mismatch = (0..size).flat_map(|n| (0..size).map(move |k| (n, k))).find(|&(n, k)| ab[n][k] != ti[n][k]);
    rep.check(
        format!("{family} T = A B on {size}x{size}"),
        mismatch.is_none(),
        match mismatch {
            None => "all entries equal".to_string(),
            Some((n, k)) => format!("first mismatch at ({n},{k}): A B = {}, t = {}", ab[n][k], ti[n][k]),
        },
    );
    Ok(rep)
}

/// Coefficients of `C(Z)` with `Z = z(1 - z + z^2)/(1 - z^2)^2`.
pub fn u_sequence(order: usize) -> Vec<BigInt> {
    let prec = order + 1;
    let c = named_series(NamedSeries::Catalan, order);
    c.compose(&riordan::m1_argument(prec)).expect("Z(0) = 0").to_integers().expect("integral")
}

fn ints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// The convolution identities around column 0 of M1 and the M1R almost array.
pub fn convolution_checks(order: usize) -> Result<Report, TriangleError> {
    let mut rep = Report::new("triangles");
    let u = u_sequence(order.max(11));
    rep.check(
        "u_n = [z^n] C(Z) printed prefix",
        u[..12] == ints(&printed::U_SEQUENCE)[..],
        format!("computed {:?}", u[..12].iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    );
    let t = build_triangle(Family::M1, Route::Enumeration, order + 1, 1)?;
    let bad: Vec<usize> = (0..=order)
        .filter(|&n| {
            let conv: BigInt = (0..=n).filter(|k| k % 2 == 0).map(|k| u[n - k].clone()).sum();
            conv != t.data[n][0]
        })
        .collect();
    rep.check(
        "t(n,0) = sum_k u_(n-k) [k even]",
        bad.is_empty(),
        if bad.is_empty() { format!("holds for n <= {order}") } else { format!("fails at n = {bad:?}") },
    );
    let prec = order + 1;
    let g0 = riordan::m1r_initial_column(prec);
    let g = riordan::m1r_column_series(prec);
    let aux = g.div(&g0).expect("g0(0) = 1");
    let aux_i = aux.to_integers().expect("integral");
    rep.check(
        "g / g0 printed prefix 1, 2, 4, 10, 28",
        aux_i[..5] == ints(&printed::AUXILIARY_PREFIX)[..],
        format!("computed {:?}", aux_i.iter().take(8).map(|x| x.to_string()).collect::<Vec<_>>()),
    );
    let v = g.to_integers().expect("integral");
    rep.check(
        "v_n printed prefix 1, 3, 8, 23, 69",
        v[..5] == ints(&printed::V_SEQUENCE)[..],
        format!("computed {:?}", v.iter().take(8).map(|x| x.to_string()).collect::<Vec<_>>()),
    );
    rep.check(
        "v = (column 0 of M1) * (g / g0)",
        g0.mul(&aux).truncate(prec) == g.truncate(prec) && g0.to_integers().ok() == Some(t.column(0)),
        "convolution holds to the window",
    );
    Ok(rep)
}

/// Entry-wise equality of all available routes against enumeration, and of
/// the split by last-step class for the series routes.
pub fn cross_route_equality(family: Family, order: usize, width: usize) -> Result<Report, TriangleError> {
    let mut rep = Report::new("triangles");
    let (rows, cols) = (order + 1, width + 1);
    let base = build_triangle(family, Route::Enumeration, rows, cols)?;
    for route in Route::ALL.into_iter().skip(1).filter(|r| r.available(family)) {
        let t = build_triangle(family, route, rows, cols)?;
        let m = base.first_mismatch(&t);
        rep.check(
            format!("{family} enum = {route} on n <= {order}, k <= {width}"),
            m.is_none(),
            match m {
                None => "all entries equal".into(),
                Some((n, k, a, b)) => format!("({family}, enum/{route}, {n}, {k}): {a} != {b}"),
            },
        );
    }
    let table = count_table(family, order, width);
    for b in [gf_closed_forms(family, order, width)?, gf_by_iteration(family, order, width)?] {
        let mut bad = None;
        'outer: for n in 0..=order {
            for k in 0..=width {
                let c = &table.by_class[n][k];
                let got = [&b.f[k], &b.g[k], &b.h[k]].map(|s| s.coeffs()[n].to_integer());
                if got != [c.f.clone(), c.g.clone(), c.h.clone()] {
                    bad = Some((n, k));
                    break 'outer;
                }
            }
        }
        rep.check(
            format!("{family} enum = {:?} split by last step (f, g, h)", b.route),
            bad.is_none(),
            match bad {
                None => format!("n <= {order}, k <= {width}"),
                Some((n, k)) => format!("first mismatch at ({n},{k})"),
            },
        );
    }
    Ok(rep)
}

/// Identities between families: mirrored column 0, M2 row sums against
/// Motzkin numbers, and the anti-diagonal sums of the reversed families.
pub fn family_identity_checks(order: usize) -> Result<Report, TriangleError> {
    let mut rep = Report::new("triangles");
    let rows = order + 1;
    let t = |f| build_triangle(f, Route::Enumeration, rows, rows);
    let (m1, m2, m1r, m2r) = (t(Family::M1)?, t(Family::M2)?, t(Family::M1R)?, t(Family::M2R)?);
    rep.check("column 0: m1 = m1r", m1.column(0) == m1r.column(0), format!("n <= {order}"));
    rep.check("column 0: m2 = m2r", m2.column(0) == m2r.column(0), format!("n <= {order}"));
    for f in Family::ALL {
        let col = first_column_series(f, order);
        let tri = [&m1, &m2, &m1r, &m2r].into_iter().find(|x| x.family == f).expect("all families built");
        rep.check(format!("{f} first-column recurrence"), col == tri.column(0), format!("n <= {order}"));
    }
    let motz = named_series(NamedSeries::Motzkin, order + 1).to_integers().expect("integral");
    rep.check("m2 row sums = Motzkin(n+1)", m2.row_sums() == motz[1..=order + 1].to_vec(), format!("n <= {order}"));
    let ad = m1r.antidiagonal_sums();
    rep.check(
        "m1r anti-diagonal sums printed prefix",
        ad.len() >= 10 && ad[..10] == ints(&printed::M1R_ANTIDIAGONAL)[..],
        format!("{:?}", ad.iter().take(10).map(|x| x.to_string()).collect::<Vec<_>>()),
    );
    let ad2 = m2r.antidiagonal_sums();
    rep.check("m2r anti-diagonal sums = Motzkin", ad2 == motz[..ad2.len()].to_vec(), format!("n <= {order}"));
    Ok(rep)
}

fn matrix_matches(computed: &riordan::Matrix, target: &[Vec<BigInt>]) -> Option<(usize, usize)> {
    for (n, row) in target.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if computed[n][k] != num_rational::BigRational::from_integer(x.clone()) {
                return Some((n, k));
            }
        }
    }
    None
}

fn shifted_block(t: &Triangle, size: usize, dn: usize, dk: usize) -> Vec<Vec<BigInt>> {
    (0..size).map(|n| (0..size).map(|k| t.data[n + dn][k + dk].clone()).collect()).collect()
}

/// Rectifications against sub-blocks of the M1R and M2R triangles.
pub fn rectification_checks(size: usize) -> Result<Report, TriangleError> {
    let mut rep = Report::new("riordan");
    let prec = size + 3;
    let m1r = build_triangle(Family::M1R, Route::ClosedForm, size + 1, size + 1)?;
    let m2r = build_triangle(Family::M2R, Route::ClosedForm, size + 1, size + 1)?;
    let mut check = |name: &str, src: RiordanArray, target: Vec<Vec<BigInt>>| -> Result<(), TriangleError> {
        let r = rectify(&src, size, size)?;
        let m = matrix_matches(&r, &target);
        rep.check(
            name,
            m.is_none(),
            match m {
                None => format!("{size}x{size} block equal"),
                Some((n, k)) => format!("first mismatch at ({n},{k}): rectified {} vs target {}", r[n][k], target[n][k]),
            },
        );
        Ok(())
    };
    check("rectify(g, (1 - z^2 - sqrt)/2) = m1r [t(n+1,k+1)]", riordan::m1r_rectified_source(prec), shifted_block(&m1r, size, 1, 1))?;
    check("rectify(M, zR) = m2r [t(n+1,k+1)]", riordan::motzkin_riordan_array(prec), shifted_block(&m2r, size, 1, 1))?;
    check("rectify(M, zR) = m2r [t(n+1,k)]", riordan::motzkin_riordan_array(prec), shifted_block(&m2r, size, 1, 0))?;
    check("rectify(M R, zR) = m2r [t(n+1,k+1)]", riordan::motzkin_riordan_shifted(prec), shifted_block(&m2r, size, 1, 1))?;
    Ok(rep)
}

/// Motzkin numbers from the radical formula, for callers that need a plain
/// integer list.
pub fn motzkin_numbers(order: usize) -> Vec<BigInt> {
    named_series(NamedSeries::Motzkin, order).to_integers().expect("integral")
}

/// Series `sum_k t(n,k)` restricted to the window, as a `USeries`.
pub fn column_series(t: &Triangle, k: usize) -> USeries {
    USeries::from_integers(&t.column(k), t.rows)
}

//! Closed-form binomial sums for the four triangles, evaluated exactly under
//! one binomial convention, and the validated-range manifests that tie each
//! sum to its triangle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::path::Family;
use crate::report::Report;
use crate::series::{named_series, NamedSeries};
use crate::triangles::{build_triangle, Route, Triangle, TriangleError};

/// `binom(a, b)`: zero for `b < 0` and for `0 <= a < b`, otherwise the falling
/// product `a (a-1) ... (a-b+1) / b!`, which also covers negative `a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || (0 <= a && a < b) {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// `binom(a / 2, b / 2)` for arguments that a parity guard has made even.
fn binom_half(a2: i64, b2: i64) -> BigInt {
    assert!(a2 % 2 == 0 && b2 % 2 == 0, "half-integer binomial outside a parity guard");
    binom(a2 / 2, b2 / 2)
}

/// `(1 + (-1)^m) / 2`.
pub fn even(m: i64) -> bool {
    m.rem_euclid(2) == 0
}

fn sign(m: i64) -> BigInt {
    if even(m) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn q(n: BigInt, d: i64) -> BigRational {
    BigRational::new(n, BigInt::from(d))
}

fn as_integer(x: BigRational, what: &str) -> BigInt {
    assert!(x.is_integer(), "{what} is not an integer: {x}");
    x.to_integer()
}

pub fn catalan(n: i64) -> BigInt {
    binom(2 * n, n) / (n + 1)
}

/// `m_n = sum_k binom(n, 2k) c_k`.
pub fn motzkin_number(n: i64) -> BigInt {
    (0..=n / 2).map(|k| binom(n, 2 * k) * catalan(k)).sum()
}

/// The four factors and the nested sum for the M1 triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M1CompositionTerms {
    pub t: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

/// Memoised evaluator; every sum is a pure function of its indices.
#[derive(Debug, Default)]
pub struct Evaluator {
    c: HashMap<(i64, i64), BigInt>,
    d: HashMap<(i64, i64), BigInt>,
    a: HashMap<(i64, i64), BigInt>,
    b: HashMap<(i64, i64), BigInt>,
    v: HashMap<i64, BigInt>,
    w: HashMap<(i64, i64), BigInt>,
    x: HashMap<(i64, i64), BigRational>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `C_{n,k} = (k+1)/(n+1) binom(2n-k, n-k)`.
    pub fn m1_c(&mut self, n: i64, k: i64) -> BigInt {
        if let Some(x) = self.c.get(&(n, k)) {
            return x.clone();
        }
        let x = if k < 0 || k > n { BigInt::zero() } else { binom(2 * n - k, n - k) * (k + 1) / (n + 1) };
        self.c.insert((n, k), x.clone());
        x
    }

    pub fn m1_d(&mut self, n: i64, k: i64) -> BigInt {
        if let Some(x) = self.d.get(&(n, k)) {
            return x.clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..=k {
            for i in 0..=j {
                let m = n - k - j - i;
                if m < 0 || !even(m) {
                    continue;
                }
                acc += binom(k, j) * sign(j) * binom(j, i) * sign(i) * binom_half(4 * k - 2 + m, 4 * k - 2);
            }
        }
        self.d.insert((n, k), acc.clone());
        acc
    }

    pub fn m1_a(&mut self, n: i64, k: i64) -> BigInt {
        if let Some(x) = self.a.get(&(n, k)) {
            return x.clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..=n {
            let c = self.m1_c(j, k);
            if !c.is_zero() {
                acc += c * self.m1_d(n, j);
            }
        }
        self.a.insert((n, k), acc.clone());
        acc
    }

    pub fn m1_b(&mut self, n: i64, k: i64) -> BigInt {
        if let Some(x) = self.b.get(&(n, k)) {
            return x.clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..=2 * k {
            let mut inner = BigInt::zero();
            for i in 0..=(n - 2 * j) {
                inner += binom(k + i - 1, i) * binom(i, n - 2 * j - i) * sign(n - i);
            }
            acc += binom(2 * k, j) * sign(j) * inner;
        }
        self.b.insert((n, k), acc.clone());
        acc
    }

    /// `t(n,k) = sum_{i even} binom(k + i/2, i/2) sum_j A_{j,k} B_{n-i-j,k}`.
    pub fn m1_nested_sum(&mut self, n: i64, k: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for i in (0..=n).step_by(2) {
            let mut inner = BigInt::zero();
            for j in 0..=(n - i) {
                inner += self.m1_a(j, k) * self.m1_b(n - i - j, k);
            }
            acc += binom(k + i / 2, i / 2) * inner;
        }
        acc
    }

    pub fn m1_composition_terms(&mut self, n: i64, k: i64) -> M1CompositionTerms {
        M1CompositionTerms {
            t: self.m1_nested_sum(n, k),
            a: self.m1_a(n, k),
            b: self.m1_b(n, k),
            c: self.m1_c(n, k),
            d: self.m1_d(n, k),
        }
    }

    /// The single five-fold sum for `t(n,k)` of M1 in terms of `C_{k+j,k}`.
    pub fn m1_catalan_sum(&mut self, n: i64, k: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for i in 0..=(n - k) {
            let a = n - k - i;
            if !even(a) {
                continue;
            }
            let mut inner = BigInt::zero();
            for j in 0..=i {
                let mut s = BigInt::zero();
                for m in 0..=j {
                    for p in 0..=m {
                        let b = i - j - m - p;
                        if !even(b) {
                            continue;
                        }
                        s += binom(j, m) * sign(m) * binom(m, p) * sign(p) * binom_half(4 * j - 2 + b, b);
                    }
                }
                if !s.is_zero() {
                    inner += self.m1_c(k + j, k) * s;
                }
            }
            acc += binom(k + a / 2, a / 2) * inner;
        }
        acc
    }

    /// First column `v_n` of the shifted part of the M1R almost array.
    pub fn m1r_v(&mut self, n: i64) -> BigInt {
        if let Some(x) = self.v.get(&n) {
            return x.clone();
        }
        let mut acc = BigInt::zero();
        for k in 0..=n / 3 {
            let ck = catalan(k);
            for j in 0..=k {
                for i in 0..=j {
                    let rem = n - 3 * k - j - i;
                    for l in 0..=rem {
                        for m in 0..=l {
                            let e = rem - l - m;
                            acc += binom(k, j) * sign(j) * binom(j, i) * sign(i) * binom(2 * k + l, l) * binom(l, m)
                                * BigInt::from(3).pow((l - m) as u32)
                                * sign(m)
                                * binom(m, e)
                                * sign(e)
                                * &ck;
                        }
                    }
                }
            }
        }
        self.v.insert(n, acc.clone());
        acc
    }

    /// Inner double sum over `p, q`: `[z^j]` of the `m`-th power of the
    /// substituted argument.
    fn m1r_w(&mut self, j: i64, m: i64) -> BigInt {
        if let Some(x) = self.w.get(&(j, m)) {
            return x.clone();
        }
        let mut acc = BigInt::zero();
        for p in 0..=m {
            for qq in 0..=p {
                let b = j - m - p - qq;
                if b < 0 || !even(b) {
                    continue;
                }
                acc += binom(m, p) * sign(p) * binom(p, qq) * sign(qq) * binom_half(4 * m - 2 + b, b);
            }
        }
        self.w.insert((j, m), acc.clone());
        acc
    }

    fn m1r_x(&mut self, j: i64, k: i64) -> BigRational {
        if let Some(x) = self.x.get(&(j, k)) {
            return x.clone();
        }
        let mut acc = BigRational::zero();
        for m in 0..=j {
            let mk = m1r_riordan_term(m, k);
            if !mk.is_zero() {
                acc += mk * BigRational::from_integer(self.m1r_w(j, m));
            }
        }
        self.x.insert((j, k), acc.clone());
        acc
    }

    /// `sum_i v_{n+k-i} sum_j sum_m M_{m,k} ... binom(k, (i-j)/2)`.
    pub fn m1r_rectified_sum(&mut self, n: i64, k: i64) -> BigInt {
        let mut acc = BigRational::zero();
        for i in 0..=(n + k) {
            let v = self.m1r_v(n + k - i);
            let mut inner = BigRational::zero();
            for j in 0..=i {
                if !even(i - j) {
                    continue;
                }
                let h = (i - j) / 2;
                let outer = binom(k, h) * sign(h);
                if outer.is_zero() {
                    continue;
                }
                inner += self.m1r_x(j, k) * BigRational::from_integer(outer);
            }
            acc += inner * BigRational::from_integer(v);
        }
        as_integer(acc, "M1R rectified sum")
    }
}

/// General term of `(1, zC(z))`: `[n = 0]` at `k = 0`, otherwise
/// `(k/n) binom(2n-k-1, n-k)`.
pub fn m1r_riordan_term(n: i64, k: i64) -> BigRational {
    if n == 0 {
        return BigRational::from_integer(BigInt::from(u8::from(k == 0)));
    }
    q(binom(2 * n - k - 1, n - k) * k, n)
}

/// Alternating sum for `t(n,k)` of M2.
pub fn m2_alternating_sum(n: i64, k: i64) -> BigInt {
    if n == k {
        return BigInt::one();
    }
    let mut acc = BigRational::zero();
    for j in 1..=(n - k) {
        let mut inner = BigInt::zero();
        for i in 0..=(n - k) {
            inner += binom(i, n - k - i + j) * binom(n - k, i);
        }
        acc += q(inner * j * sign(n - k - j) * binom(n + j, j), n - k);
    }
    as_integer(acc * q(BigInt::from(k + 1), n + 1), "M2 alternating sum")
}

/// Convolution form of `t(n,k)` of M2.
pub fn m2_convolution_sum(n: i64, k: i64) -> BigInt {
    let mut acc = BigRational::zero();
    for j in 0..=n {
        let mut inner = BigRational::zero();
        for i in 0..=(j - k) {
            inner += q(binom(k + 2 * i, i) * binom(j - i - 1, j - k - i), k + i + 1);
        }
        acc += inner * BigRational::from_integer(binom(n - 1, n - j) * sign(n - j) * (k + 1));
    }
    as_integer(acc, "M2 convolution sum")
}

/// Lagrange-inversion form of `t(n,k)` of M2.
pub fn m2_lagrange_sum(n: i64, k: i64) -> BigInt {
    if n == k {
        return BigInt::one();
    }
    let mut s = BigInt::zero();
    for j in 0..=k {
        let mut inner = BigInt::zero();
        for i in 0..=(n - k) {
            inner += binom(n - k, i) * binom(i, n - k - i - j - 1);
        }
        s += binom(k, j) * inner;
    }
    as_integer(q(s * (k + 1), n - k), "M2 Lagrange sum")
}

/// `r(n,k)`, general term of the rectification of the Motzkin Riordan array.
pub fn motzkin_riordan_rect_term(n: i64, k: i64) -> BigInt {
    let mut acc = BigRational::zero();
    for i in 0..=n {
        let e = i64::from(n == i);
        let mut s = BigInt::zero();
        for j in 0..=(n - i) {
            let inner: BigInt = (0..=(n + k - i)).map(|l| binom(n + k - i, l) * binom(l, n - i - j - l)).sum();
            s += sign(n - i - j) * binom(n + k - i + j - 1, j) * inner;
        }
        acc += q(motzkin_number(i) * (k + e) * s, n + k - i + e);
    }
    as_integer(acc, "rectified Motzkin term")
}

/// Motzkin numbers from the binomial sum and from the radical series.
pub fn motzkin_two_ways(order: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let direct = (0..=order as i64).map(motzkin_number).collect();
    let series = named_series(NamedSeries::Motzkin, order).to_integers().expect("integral");
    (direct, series)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    M1NestedSum,
    M1CatalanSum,
    M1rRectifiedSum,
    M2AlternatingSum,
    M2ConvolutionSum,
    M2LagrangeSum,
    MotzkinRiordanRect,
}

impl Formula {
    pub const ALL: [Formula; 7] = [
        Formula::M1NestedSum,
        Formula::M1CatalanSum,
        Formula::M1rRectifiedSum,
        Formula::M2AlternatingSum,
        Formula::M2ConvolutionSum,
        Formula::M2LagrangeSum,
        Formula::MotzkinRiordanRect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::M1NestedSum => "m1-nested",
            Formula::M1CatalanSum => "m1-catalan",
            Formula::M1rRectifiedSum => "m1r-rectified",
            Formula::M2AlternatingSum => "m2-alternating",
            Formula::M2ConvolutionSum => "m2-convolution",
            Formula::M2LagrangeSum => "m2-lagrange",
            Formula::MotzkinRiordanRect => "motzkin-rect",
        }
    }

    /// Whether the sum is only defined for `n >= k`.
    pub fn needs_n_ge_k(self) -> bool {
        matches!(self, Formula::M1CatalanSum | Formula::M2AlternatingSum | Formula::M2ConvolutionSum | Formula::M2LagrangeSum)
    }

    pub fn eval(self, ev: &mut Evaluator, n: i64, k: i64) -> BigInt {
        match self {
            Formula::M1NestedSum => ev.m1_nested_sum(n, k),
            Formula::M1CatalanSum => ev.m1_catalan_sum(n, k),
            Formula::M1rRectifiedSum => ev.m1r_rectified_sum(n, k),
            Formula::M2AlternatingSum => m2_alternating_sum(n, k),
            Formula::M2ConvolutionSum => m2_convolution_sum(n, k),
            Formula::M2LagrangeSum => m2_lagrange_sum(n, k),
            Formula::MotzkinRiordanRect => motzkin_riordan_rect_term(n, k),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Formula::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<_> = Formula::ALL.iter().map(|f| f.name()).collect();
            format!("unknown formula '{s}' (expected one of {})", names.join(", "))
        })
    }
}

/// Where a formula's value lives in its triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexMap {
    /// `formula(n,k) = t(n,k)`.
    Direct,
    /// `formula(n,k) = t(n+1,k+1)`.
    Shifted,
    /// `formula(n,k) = t(n+1,k)`.
    RowShift,
}

impl IndexMap {
    pub fn target(self, n: usize, k: usize) -> (usize, usize) {
        match self {
            IndexMap::Direct => (n, k),
            IndexMap::Shifted => (n + 1, k + 1),
            IndexMap::RowShift => (n + 1, k),
        }
    }
}

/// Frozen record of where a formula agrees with its triangle.
#[derive(Debug, Clone, Copy)]
pub struct ValidatedRange {
    pub formula: Formula,
    pub family: Family,
    pub map: IndexMap,
    /// Cells where the formula is known to deviate.
    pub excluded: fn(usize, usize) -> bool,
    pub note: &'static str,
}

fn none(_: usize, _: usize) -> bool {
    false
}

fn even_row_column_zero(n: usize, k: usize) -> bool {
    k == 0 && n.is_multiple_of(2)
}

pub const MANIFEST: [ValidatedRange; 7] = [
    ValidatedRange {
        formula: Formula::M1NestedSum,
        family: Family::M1,
        map: IndexMap::Direct,
        excluded: even_row_column_zero,
        note: "D_{0,0} = 0 under the binomial convention, so column 0 is short by 1 on even rows",
    },
    ValidatedRange { formula: Formula::M1CatalanSum, family: Family::M1, map: IndexMap::Direct, excluded: none, note: "" },
    ValidatedRange {
        formula: Formula::M1rRectifiedSum,
        family: Family::M1R,
        map: IndexMap::Shifted,
        excluded: none,
        note: "uses M_{n,k} = (k/n) binom(2n-k-1, n-k); lands on t(n+1,k+1)",
    },
    ValidatedRange { formula: Formula::M2AlternatingSum, family: Family::M2, map: IndexMap::Direct, excluded: none, note: "" },
    ValidatedRange { formula: Formula::M2ConvolutionSum, family: Family::M2, map: IndexMap::Direct, excluded: none, note: "" },
    ValidatedRange { formula: Formula::M2LagrangeSum, family: Family::M2, map: IndexMap::Direct, excluded: none, note: "" },
    ValidatedRange {
        formula: Formula::MotzkinRiordanRect,
        family: Family::M2R,
        map: IndexMap::RowShift,
        excluded: none,
        note: "t(n,k) = r(n-1,k) for n >= 1",
    },
];

pub fn manifest_entry(formula: Formula) -> &'static ValidatedRange {
    MANIFEST.iter().find(|e| e.formula == formula).expect("every formula has a manifest entry")
}

fn fmt_cells(cells: &[(usize, usize)]) -> String {
    let shown: Vec<String> = cells.iter().take(8).map(|(n, k)| format!("({n},{k})")).collect();
    let more = if cells.len() > 8 { format!(" and {} more", cells.len() - 8) } else { String::new() };
    format!("{}{more}", shown.join(" "))
}

/// Evaluates the formula on `0 <= n, k <= size` (with `k <= n` where
/// required) and compares with its triangle per the manifest. Included cells
/// must match and excluded cells must really deviate.
pub fn check_manifest_entry(entry: &ValidatedRange, size: usize, triangle: &Triangle, ev: &mut Evaluator) -> Report {
    let mut rep = Report::new("formulas");
    let mut bad = Vec::new();
    let mut stale = Vec::new();
    let mut checked = 0usize;
    for n in 0..=size {
        for k in 0..=size {
            if entry.formula.needs_n_ge_k() && k > n {
                continue;
            }
            let (tn, tk) = entry.map.target(n, k);
            if tn >= triangle.rows || tk >= triangle.cols {
                continue;
            }
            let got = entry.formula.eval(ev, n as i64, k as i64);
            let ok = got == triangle.data[tn][tk];
            if (entry.excluded)(n, k) {
                if ok {
                    stale.push((n, k));
                }
            } else {
                checked += 1;
                if !ok {
                    bad.push((n, k));
                }
            }
        }
    }
    let name = format!("{} = {} triangle ({:?} map)", entry.formula, entry.family, entry.map);
    rep.check(
        name.clone(),
        bad.is_empty(),
        if bad.is_empty() { format!("{checked} cells with n <= {size}") } else { format!("mismatches at {}", fmt_cells(&bad)) },
    );
    rep.check(
        format!("{name} exclusions deviate"),
        stale.is_empty(),
        if stale.is_empty() {
            if entry.note.is_empty() {
                "no exclusions".to_string()
            } else {
                entry.note.to_string()
            }
        } else {
            format!("excluded cells that actually match: {}", fmt_cells(&stale))
        },
    );
    rep
}

/// Whole formula suite on `n <= size`.
pub fn formula_report(size: usize) -> Result<Report, TriangleError> {
    let mut rep = Report::new("formulas");
    let mut ev = Evaluator::new();
    let mut cache: HashMap<Family, Triangle> = HashMap::new();
    for entry in &MANIFEST {
        if let std::collections::hash_map::Entry::Vacant(slot) = cache.entry(entry.family) {
            slot.insert(build_triangle(entry.family, Route::Enumeration, size + 2, size + 2)?);
        }
        rep.absorb(check_manifest_entry(entry, size, &cache[&entry.family], &mut ev));
    }
    rep.absorb(m2_mutual_agreement(size));
    rep.absorb(row_shift_statement(size, &cache[&Family::M2R]));
    let (a, b) = motzkin_two_ways(30);
    rep.check("Motzkin numbers: binomial sum = radical series", a == b, "n <= 30");
    Ok(rep)
}

/// The three M2 sums agree with each other on `k <= n <= size`.
pub fn m2_mutual_agreement(size: usize) -> Report {
    let mut rep = Report::new("formulas");
    let mut bad = Vec::new();
    for n in 0..=size as i64 {
        for k in 0..=n {
            let a = m2_alternating_sum(n, k);
            if a != m2_convolution_sum(n, k) || a != m2_lagrange_sum(n, k) {
                bad.push((n as usize, k as usize));
            }
        }
    }
    rep.check(
        "m2 sums mutually agree",
        bad.is_empty(),
        if bad.is_empty() { format!("k <= n <= {size}") } else { format!("disagree at {}", fmt_cells(&bad)) },
    );
    rep
}

/// `t(n,k) = [k = 0]` at `n = 0` and `r(n-1,k)` for `1 <= n <= size`.
pub fn row_shift_statement(size: usize, m2r: &Triangle) -> Report {
    let mut rep = Report::new("formulas");
    let mut bad = Vec::new();
    for n in 0..=size.min(m2r.rows - 1) {
        for k in 0..=size.min(m2r.cols - 1) {
            let want = if n == 0 { BigInt::from(u8::from(k == 0)) } else { motzkin_riordan_rect_term(n as i64 - 1, k as i64) };
            if want != m2r.data[n][k] {
                bad.push((n, k));
            }
        }
    }
    rep.check(
        "m2r t(n,k) = r(n-1,k)",
        bad.is_empty(),
        if bad.is_empty() { format!("0 <= n, k <= {size}") } else { format!("mismatches at {}", fmt_cells(&bad)) },
    );
    rep
}

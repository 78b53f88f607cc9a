//! Riordan arrays, almost Riordan arrays, rectification and the named arrays
//! attached to the four path families.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{named_series, NamedSeries, BSeries, SeriesError, USeries};

pub type Matrix = Vec<Vec<BigRational>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error("not a Riordan pair: {0}")]
    NotRiordan(&'static str),
    #[error("array is not invertible")]
    NotInvertible,
    #[error("entry ({n}, {k}) needs more than the {prec} known terms")]
    TruncationExceeded { n: usize, k: usize, prec: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub fn identity_matrix(size: usize) -> Matrix {
    (0..size)
        .map(|i| (0..size).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect()
}

/// Product of an `a.len() x m` and an `m x c` block.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = BigRational::zero();
                    for (x, brow) in row.iter().zip(b.iter()) {
                        if !x.is_zero() && !brow[j].is_zero() {
                            acc += x * &brow[j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Integer view of a matrix; `None` if some entry is not integral.
pub fn to_integer_matrix(m: &Matrix) -> Option<Vec<Vec<BigInt>>> {
    m.iter()
        .map(|row| row.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
        .collect()
}

pub fn from_integer_matrix(m: &[Vec<BigInt>]) -> Matrix {
    m.iter().map(|row| row.iter().cloned().map(BigRational::from_integer).collect()).collect()
}

/// The pair `(g, f)`: column `k` has generating function `g f^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanArray {
    pub g: USeries,
    pub f: USeries,
}

impl RiordanArray {
    pub fn new(g: USeries, f: USeries) -> Result<Self, RiordanError> {
        if g.constant_term().is_zero() {
            return Err(RiordanError::NotRiordan("g(0) = 0"));
        }
        if f.prec() < 2 || !f.coeffs()[0].is_zero() || f.coeffs()[1].is_zero() {
            return Err(RiordanError::NotRiordan("need f(0) = 0 and f'(0) != 0"));
        }
        Ok(RiordanArray { g, f })
    }

    pub fn identity(prec: usize) -> Self {
        RiordanArray { g: USeries::one(prec), f: USeries::z(prec) }
    }

    pub fn prec(&self) -> usize {
        self.g.prec().min(self.f.prec())
    }

    /// Generating function `g f^k` of column `k`.
    pub fn column(&self, k: usize) -> USeries {
        self.g.mul(&self.f.pow(k))
    }

    pub fn term(&self, n: usize, k: usize) -> Result<BigRational, RiordanError> {
        let c = self.column(k);
        c.coeff(n).cloned().map_err(|_| RiordanError::TruncationExceeded { n, k, prec: c.prec() })
    }

    pub fn matrix(&self, size: usize) -> Result<Matrix, RiordanError> {
        let mut m = vec![vec![BigRational::zero(); size]; size];
        let mut col = self.g.clone();
        for k in 0..size {
            for (n, row) in m.iter_mut().enumerate().skip(k) {
                row[k] = col.coeff(n).cloned().map_err(|_| RiordanError::TruncationExceeded { n, k, prec: col.prec() })?;
            }
            col = col.mul(&self.f);
        }
        Ok(m)
    }

    /// `(g, f) * (h, l) = (g h(f), l(f))`.
    pub fn mul(&self, other: &RiordanArray) -> Result<RiordanArray, RiordanError> {
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        RiordanArray::new(g, f)
    }

    /// `(1 / g(fbar), fbar)`.
    pub fn inverse(&self) -> Result<RiordanArray, RiordanError> {
        let fbar = self.f.comp_inverse().map_err(|_| RiordanError::NotInvertible)?;
        let g = self.g.compose(&fbar)?.inv().map_err(|_| RiordanError::NotInvertible)?;
        RiordanArray::new(g, fbar)
    }

    /// Fundamental theorem: the array times the column vector of `h` is `g h(f)`.
    pub fn apply(&self, h: &USeries) -> Result<USeries, RiordanError> {
        Ok(self.g.mul(&h.compose(&self.f)?))
    }
}

/// Rectification: entry `(n, k) = [z^n] g (f/z)^k`.
pub fn rectify(source: &RiordanArray, rows: usize, cols: usize) -> Result<Matrix, RiordanError> {
    let q = source.f.shift_down(1)?;
    let mut col = source.g.clone();
    let mut m = vec![vec![BigRational::zero(); cols]; rows];
    for k in 0..cols {
        for (n, row) in m.iter_mut().enumerate() {
            row[k] = col.coeff(n).cloned().map_err(|_| RiordanError::TruncationExceeded { n, k, prec: col.prec() })?;
        }
        col = col.mul(&q);
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stretch {
    /// `g0 + z u g / (1 - u f)`.
    Shifted,
    /// `g0 + z u g / (1 - z^2 u g)`; `f` is ignored.
    ShiftedStretched,
}

/// An initial column `g0` followed by a shifted (possibly stretched) array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostRiordan {
    pub g0: USeries,
    pub g: USeries,
    pub f: USeries,
    pub stretch: Stretch,
}

impl AlmostRiordan {
    fn ratio(&self) -> USeries {
        match self.stretch {
            Stretch::Shifted => self.f.clone(),
            Stretch::ShiftedStretched => self.g.shift_up(2),
        }
    }

    pub fn matrix(&self, rows: usize, cols: usize) -> Result<Matrix, RiordanError> {
        let b = almost_bivariate(self, rows.saturating_sub(1), cols.saturating_sub(1));
        let mut m = vec![vec![BigRational::zero(); cols]; rows];
        for (n, row) in m.iter_mut().enumerate() {
            for (k, x) in row.iter_mut().enumerate() {
                *x = b.coeff(n, k).cloned().map_err(|_| RiordanError::TruncationExceeded { n, k, prec: b.prec() })?;
            }
        }
        Ok(m)
    }
}

/// Bivariate generating function of an almost Riordan array, with
/// coefficients of `z^0..=z^order` and columns `u^0..=u^width`.
pub fn almost_bivariate(a: &AlmostRiordan, order: usize, width: usize) -> BSeries {
    let prec = order + 1;
    let ratio = a.ratio();
    let mut cols = vec![a.g0.truncate(prec)];
    let mut c = a.g.shift_up(1);
    for _ in 1..=width {
        cols.push(c.truncate(prec));
        c = c.mul(&ratio);
    }
    BSeries::from_columns(cols)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudoInvolution {
    pub involution: bool,
    pub idempotent: bool,
}

/// Signs the columns, `D = [(-1)^k t(n,k)]`, and tests `D D = I` and `D D = D`
/// on the `size x size` block.
pub fn pseudo_involution_check(r: &RiordanArray, size: usize) -> Result<PseudoInvolution, RiordanError> {
    let m = r.matrix(size)?;
    Ok(pseudo_involution_of_matrix(&m))
}

pub fn pseudo_involution_of_matrix(m: &Matrix) -> PseudoInvolution {
    let d: Matrix = m
        .iter()
        .map(|row| row.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x } else { x.clone() }).collect())
        .collect();
    let dd = mat_mul(&d, &d);
    PseudoInvolution { involution: dd == identity_matrix(m.len()), idempotent: dd == d }
}

fn p(c: &[i64], prec: usize) -> USeries {
    USeries::poly(c, prec)
}

fn half(s: &USeries) -> USeries {
    s.scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
}

fn sqrt_of(c: &[i64], prec: usize) -> USeries {
    p(c, prec).sqrt().expect("constant term 1")
}

const DELTA_M1: [i64; 5] = [1, -4, 2, -4, 1];
const DELTA_M2: [i64; 3] = [1, -2, -3];

/// The catalan array `(C(z), zC(z))`.
pub fn catalan_array(prec: usize) -> RiordanArray {
    let c = named_series(NamedSeries::Catalan, prec.max(1) - 1);
    RiordanArray { f: c.shift_up(1).truncate(prec), g: c }
}

/// `Z = z(1 - z + z^2)/(1 - z^2)^2`.
pub fn m1_argument(prec: usize) -> USeries {
    p(&[0, 1, -1, 1], prec).div(&p(&[1, 0, -2, 0, 1], prec)).expect("unit")
}

/// The M1 triangle as `(C(Z)/(1 - z^2), z C(Z)/(1 - z^2))`.
pub fn m1_array(prec: usize) -> RiordanArray {
    let c = named_series(NamedSeries::Catalan, prec.max(1) - 1);
    let cz = c.compose(&m1_argument(prec)).expect("Z(0) = 0");
    let g = cz.div(&p(&[1, 0, -1], prec)).expect("unit");
    RiordanArray { f: g.shift_up(1).truncate(prec), g }
}

/// The M1 triangle as `(1/(z r), 1/r)` from the kernel root.
pub fn m1_array_from_root(prec: usize) -> RiordanArray {
    let sq = sqrt_of(&DELTA_M1, prec + 1);
    let den = &p(&[1, 0, -1], prec + 1) + &sq;
    let g = den.inv().expect("constant term 2").scale_int(2).truncate(prec);
    RiordanArray { f: g.shift_up(1).truncate(prec), g }
}

/// The M2 triangle as `(1 + zM, z(1 + zM))`.
pub fn m2_array(prec: usize) -> RiordanArray {
    let m = named_series(NamedSeries::Motzkin, prec.max(1) - 1);
    let g = &USeries::one(prec) + &m.shift_up(1).truncate(prec);
    RiordanArray { f: g.shift_up(1).truncate(prec), g }
}

/// The M2 triangle as `(C(z/(1+z)), z C(z/(1+z)))`.
pub fn m2_array_catalan_form(prec: usize) -> RiordanArray {
    let c = named_series(NamedSeries::Catalan, prec.max(1) - 1);
    let arg = p(&[0, 1], prec).div(&p(&[1, 1], prec)).expect("unit");
    let g = c.compose(&arg).expect("arg(0) = 0");
    RiordanArray { f: g.shift_up(1).truncate(prec), g }
}

/// `(M(z), z R(z))`, Motzkin numbers against Riordan numbers.
pub fn motzkin_riordan_array(prec: usize) -> RiordanArray {
    let m = named_series(NamedSeries::Motzkin, prec.max(1) - 1);
    let r = named_series(NamedSeries::RiordanNumbers, prec.max(1) - 1);
    RiordanArray { g: m, f: r.shift_up(1).truncate(prec) }
}

/// `((1 - z)^2/(1 - z + z^2), z(1 - z)/(1 - z + z^2))`, the printed inverse of
/// `(M, zR)`.
pub fn motzkin_riordan_inverse(prec: usize) -> RiordanArray {
    let q = p(&[1, -1, 1], prec);
    RiordanArray { g: p(&[1, -2, 1], prec).div(&q).expect("unit"), f: p(&[0, 1, -1], prec).div(&q).expect("unit") }
}

/// `(M(z) R(z), z R(z))`; its rectification is the M2R block `[t(n+1, k+1)]`.
pub fn motzkin_riordan_shifted(prec: usize) -> RiordanArray {
    let base = motzkin_riordan_array(prec);
    let r = named_series(NamedSeries::RiordanNumbers, prec.max(1) - 1);
    RiordanArray { g: base.g.mul(&r), f: base.f }
}

/// Initial column of the M1R almost array: `(1 - z^2 - sqrt)/(2z(1 - z + z^2))`.
pub fn m1r_initial_column(prec: usize) -> USeries {
    let sq = sqrt_of(&DELTA_M1, prec + 1);
    let num = &p(&[1, 0, -1], prec + 1) - &sq;
    half(&num.shift_down(1).expect("O(z)")).div(&p(&[1, -1, 1], prec)).expect("unit")
}

/// `g` shared by the M1R almost array and its rectified form, the generating
/// function of `1, 3, 8, 23, 69, ...`.
pub fn m1r_column_series(prec: usize) -> USeries {
    let sq = sqrt_of(&DELTA_M1, prec + 3);
    let num = &p(&[1, -3, 1, -1], prec + 3) - &p(&[1, -1], prec + 3).mul(&sq);
    half(&num.shift_down(3).expect("O(z^3)")).div(&p(&[1, -1, 1], prec)).expect("unit")
}

/// `(1 - 2z - z^2 - sqrt)/(2z)`.
pub fn m1r_almost_ratio(prec: usize) -> USeries {
    let sq = sqrt_of(&DELTA_M1, prec + 1);
    let num = &p(&[1, -2, -1], prec + 1) - &sq;
    half(&num.shift_down(1).expect("O(z)"))
}

pub fn m1r_almost_array(prec: usize) -> AlmostRiordan {
    AlmostRiordan {
        g0: m1r_initial_column(prec),
        g: m1r_column_series(prec),
        f: m1r_almost_ratio(prec),
        stretch: Stretch::Shifted,
    }
}

/// `(g, (1 - z^2 - sqrt)/2)`, whose rectification is the M1R block
/// `[t(n+1, k+1)]`.
pub fn m1r_rectified_source(prec: usize) -> RiordanArray {
    let sq = sqrt_of(&DELTA_M1, prec);
    let f = half(&(&p(&[1, 0, -1], prec) - &sq));
    RiordanArray { g: m1r_column_series(prec), f }
}

pub fn m2r_almost_array(prec: usize) -> AlmostRiordan {
    let m = named_series(NamedSeries::Motzkin, prec.max(1) - 1);
    let g0 = &USeries::one(prec) + &m.shift_up(1).truncate(prec);
    let sq = sqrt_of(&DELTA_M2, prec + 3);
    let num = &p(&[1, -1, -2], prec + 3) - &sq;
    let g = half(&num.shift_down(3).expect("O(z^3)")).div(&p(&[1, 1], prec)).expect("unit");
    AlmostRiordan { g0, g, f: USeries::zero(prec), stretch: Stretch::ShiftedStretched }
}

/// `b(0,0) = 1`, `b(n,0) = b(0,n) = 0` for `n >= 1`, otherwise `binom(k-1, n-1)`.
#[allow(clippy::needless_range_loop)]
pub fn pascal_like_b(size: usize) -> Matrix {
    let mut m = vec![vec![BigRational::zero(); size]; size];
    if size > 0 {
        m[0][0] = BigRational::one();
    }
    for k in 1..size {
        // binom(k-1, n-1) along column k, built by the multiplicative rule
        let mut b = BigInt::one();
        for n in 1..=k {
            m[n][k] = BigRational::from_integer(b.clone());
            b = b * BigInt::from(k - n) / BigInt::from(n);
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedArray {
    Identity,
    Catalan,
    M1,
    M1Root,
    M2,
    M2Catalan,
    MotzkinRiordan,
    MotzkinRiordanInverse,
    MotzkinRiordanShifted,
    M1RRectified,
}

impl NamedArray {
    pub const ALL: [NamedArray; 10] = [
        NamedArray::Identity,
        NamedArray::Catalan,
        NamedArray::M1,
        NamedArray::M1Root,
        NamedArray::M2,
        NamedArray::M2Catalan,
        NamedArray::MotzkinRiordan,
        NamedArray::MotzkinRiordanInverse,
        NamedArray::MotzkinRiordanShifted,
        NamedArray::M1RRectified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedArray::Identity => "identity",
            NamedArray::Catalan => "catalan",
            NamedArray::M1 => "m1",
            NamedArray::M1Root => "m1-root",
            NamedArray::M2 => "m2",
            NamedArray::M2Catalan => "m2-catalan",
            NamedArray::MotzkinRiordan => "motzkin-riordan",
            NamedArray::MotzkinRiordanInverse => "motzkin-riordan-inverse",
            NamedArray::MotzkinRiordanShifted => "motzkin-riordan-shifted",
            NamedArray::M1RRectified => "m1r-rectified",
        }
    }

    pub fn build(self, prec: usize) -> RiordanArray {
        match self {
            NamedArray::Identity => RiordanArray::identity(prec),
            NamedArray::Catalan => catalan_array(prec),
            NamedArray::M1 => m1_array(prec),
            NamedArray::M1Root => m1_array_from_root(prec),
            NamedArray::M2 => m2_array(prec),
            NamedArray::M2Catalan => m2_array_catalan_form(prec),
            NamedArray::MotzkinRiordan => motzkin_riordan_array(prec),
            NamedArray::MotzkinRiordanInverse => motzkin_riordan_inverse(prec),
            NamedArray::MotzkinRiordanShifted => motzkin_riordan_shifted(prec),
            NamedArray::M1RRectified => m1r_rectified_source(prec),
        }
    }
}

impl FromStr for NamedArray {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_lowercase();
        NamedArray::ALL.into_iter().find(|a| a.name() == key).ok_or_else(|| {
            let names: Vec<&str> = NamedArray::ALL.iter().map(|a| a.name()).collect();
            format!("unknown array '{s}' (known: {})", names.join(", "))
        })
    }
}

//! Truncated formal power series with exact rational coefficients.
//!
//! A [`USeries`] stores the coefficients of `z^0 .. z^(prec-1)` and stands for
//! the class of all series agreeing with them modulo `z^prec`. Every operation
//! returns the largest precision that is still guaranteed by its inputs.
//! [`BSeries`] is a finite window of columns `[u^k]`, each a `USeries`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub const DEFAULT_ORDER: usize = 24;
pub const DEFAULT_WIDTH: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("divisor has a zero constant term")]
    DivisorNotUnit,
    #[error("square root needs constant term 1")]
    ConstantNotOne,
    #[error("inner series of a composition must have zero constant term")]
    InnerConstantNonzero,
    #[error("series has no compositional inverse")]
    NotInvertible,
    #[error("series is not divisible by z^{0}")]
    NotDivisibleByZ(usize),
    #[error("coefficient of z^{index} lies beyond the truncation O(z^{prec})")]
    TruncationExceeded { index: usize, prec: usize },
    #[error("u-window of width {width} cannot be evaluated at this point without a completeness flag")]
    WindowTooSmall { width: usize },
    #[error("column u^{index} lies outside the window of width {width}")]
    ColumnOutOfWindow { index: usize, width: usize },
    #[error("coefficient of z^{0} is not an integer")]
    NonInteger(usize),
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

// Polynomial kernels on plain coefficient vectors, truncated to `len` terms.

fn common_denominator(a: &[BigRational]) -> BigInt {
    a.iter().filter(|x| !x.is_zero()).fold(BigInt::one(), |d, x| d.lcm(x.denom()))
}

fn scaled(a: &[BigRational], d: &BigInt) -> Vec<BigInt> {
    a.iter().map(|x| if x.is_zero() { BigInt::zero() } else { x.numer() * (d / x.denom()) }).collect()
}

fn mul_trunc(a: &[BigRational], b: &[BigRational], len: usize) -> Vec<BigRational> {
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    let (da, db) = (common_denominator(a), common_denominator(b));
    let (ia, ib) = (scaled(a, &da), scaled(b, &db));
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in ia.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in ib.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    let d = da * db;
    out.into_iter().map(|c| BigRational::new(c, d.clone())).collect()
}

fn inv_trunc(a: &[BigRational], len: usize) -> Result<Vec<BigRational>, SeriesError> {
    let a0 = a.first().filter(|c| !c.is_zero()).ok_or(SeriesError::DivisorNotUnit)?;
    let a0_inv = a0.recip();
    let mut out: Vec<BigRational> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(a0_inv.clone());
            continue;
        }
        let mut acc = BigRational::zero();
        for i in 1..=n.min(a.len().saturating_sub(1)) {
            if !a[i].is_zero() {
                acc += &a[i] * &out[n - i];
            }
        }
        out.push(-acc * &a0_inv);
    }
    Ok(out)
}

fn compose_trunc(outer: &[BigRational], inner: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut acc = vec![BigRational::zero(); len];
    for c in outer.iter().take(len.max(1)).rev() {
        acc = mul_trunc(&acc, inner, len);
        if len > 0 {
            acc[0] += c;
        }
    }
    acc
}

fn padded(c: &[BigRational], len: usize) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = c.iter().take(len).cloned().collect();
    v.resize(len, BigRational::zero());
    v
}

/// Univariate series in `z`, known modulo `z^prec` with `prec = coeffs.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct USeries {
    c: Vec<BigRational>,
}

impl USeries {
    /// Builds a series from explicit coefficients, padding with zeros or
    /// truncating to `prec` terms.
    pub fn new(coeffs: Vec<BigRational>, prec: usize) -> Self {
        USeries { c: padded(&coeffs, prec) }
    }

    pub fn zero(prec: usize) -> Self {
        USeries { c: vec![BigRational::zero(); prec] }
    }

    pub fn one(prec: usize) -> Self {
        Self::constant(BigRational::one(), prec)
    }

    pub fn constant(value: BigRational, prec: usize) -> Self {
        Self::new(vec![value], prec)
    }

    /// `coeff * z^k` known to order `prec`.
    pub fn monomial(k: usize, coeff: BigRational, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if k < prec {
            s.c[k] = coeff;
        }
        s
    }

    /// The series `z`.
    pub fn z(prec: usize) -> Self {
        Self::monomial(1, BigRational::one(), prec)
    }

    /// Polynomial with small integer coefficients, listed from `z^0` up.
    pub fn poly(coeffs: &[i64], prec: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), prec)
    }

    pub fn from_integers(coeffs: &[BigInt], prec: usize) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from_integer).collect(), prec)
    }

    pub fn prec(&self) -> usize {
        self.c.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn coeff(&self, n: usize) -> Result<&BigRational, SeriesError> {
        self.c.get(n).ok_or(SeriesError::TruncationExceeded { index: n, prec: self.prec() })
    }

    pub fn constant_term(&self) -> BigRational {
        self.c.first().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Index of the first nonzero coefficient inside the window.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    fn valuation_or_prec(&self) -> usize {
        self.valuation().unwrap_or(self.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, prec: usize) -> Self {
        USeries { c: self.c.iter().take(prec).cloned().collect() }
    }

    /// Coefficients as integers, failing at the first non-integral one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.c
            .iter()
            .enumerate()
            .map(|(n, x)| if x.is_integer() { Ok(x.to_integer()) } else { Err(SeriesError::NonInteger(n)) })
            .collect()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        USeries { c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&rat(k))
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.c.iter().cloned());
        USeries { c }
    }

    /// Exact division by `z^k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.prec() {
            return Err(SeriesError::TruncationExceeded { index: k, prec: self.prec() });
        }
        if self.c[..k].iter().any(|x| !x.is_zero()) {
            return Err(SeriesError::NotDivisibleByZ(k));
        }
        Ok(USeries { c: self.c[k..].to_vec() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = (self.prec() + other.valuation_or_prec()).min(other.prec() + self.valuation_or_prec());
        USeries { c: mul_trunc(&self.c, &other.c, p) }
    }

    pub fn pow(&self, k: usize) -> Self {
        if k == 0 {
            return USeries::one(self.prec());
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        Ok(USeries { c: inv_trunc(&self.c, self.prec())? })
    }

    /// Quotient `self / d`. A divisor with zero constant term is accepted when
    /// the same power of `z` divides the numerator.
    pub fn div(&self, d: &Self) -> Result<Self, SeriesError> {
        let v = d.valuation().ok_or(SeriesError::DivisorNotUnit)?;
        if v == 0 {
            return Ok(self.mul(&d.inv()?));
        }
        let num = self.shift_down(v).map_err(|_| SeriesError::DivisorNotUnit)?;
        let den = d.shift_down(v)?;
        Ok(num.mul(&den.inv()?))
    }

    pub fn derivative(&self) -> Self {
        USeries {
            c: self.c.iter().enumerate().skip(1).map(|(n, x)| x * rat(n as i64)).collect(),
        }
    }

    /// Square root with constant term 1, by Newton iteration.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.c.first() != Some(&BigRational::one()) {
            return Err(SeriesError::ConstantNotOne);
        }
        let p = self.prec();
        let mut y = vec![BigRational::one()];
        let mut cur = 1;
        while cur < p {
            let np = (2 * cur).min(p);
            let yp = padded(&y, np);
            let q = mul_trunc(&self.c[..np], &inv_trunc(&yp, np)?, np);
            y = yp.iter().zip(q.iter()).map(|(a, b)| (a + b) * half()).collect();
            cur = np;
        }
        Ok(USeries::new(y, p))
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if inner.prec() == 0 || !inner.c[0].is_zero() {
            return Err(SeriesError::InnerConstantNonzero);
        }
        let v = inner.valuation_or_prec();
        let p = inner.prec().min(v.saturating_mul(self.prec()));
        Ok(USeries { c: compose_trunc(&self.c, &inner.c, p) })
    }

    /// Compositional inverse by Newton iteration on `f(g) = z`.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        let p = self.prec();
        if p < 2 || !self.c[0].is_zero() || self.c[1].is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let mut g = vec![BigRational::zero(), self.c[1].recip()];
        let mut cur = 2;
        while cur < p {
            let np = (2 * cur).min(p);
            let gp = padded(&g, np);
            let f = padded(&self.c, np);
            let df: Vec<BigRational> = USeries { c: f.clone() }.derivative().c;
            let mut fg = compose_trunc(&f, &gp, np);
            fg[1] -= BigRational::one();
            let dfg = compose_trunc(&df, &gp, np);
            let delta = mul_trunc(&fg, &inv_trunc(&dfg, np)?, np);
            g = gp.iter().zip(delta.iter()).map(|(a, b)| a - b).collect();
            cur = np;
        }
        Ok(USeries::new(g, p))
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}] + O(z^{})", parts.join(", "), self.prec())
    }
}

impl Add for &USeries {
    type Output = USeries;
    fn add(self, o: &USeries) -> USeries {
        let p = self.prec().min(o.prec());
        USeries { c: (0..p).map(|i| &self.c[i] + &o.c[i]).collect() }
    }
}

impl Sub for &USeries {
    type Output = USeries;
    fn sub(self, o: &USeries) -> USeries {
        let p = self.prec().min(o.prec());
        USeries { c: (0..p).map(|i| &self.c[i] - &o.c[i]).collect() }
    }
}

impl Neg for &USeries {
    type Output = USeries;
    fn neg(self) -> USeries {
        USeries { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &USeries {
    type Output = USeries;
    fn mul(self, o: &USeries) -> USeries {
        USeries::mul(self, o)
    }
}

/// Bivariate series: a window of `width` columns `[u^k]`, each a `USeries`.
/// The window makes no claim that columns beyond it vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeries {
    cols: Vec<USeries>,
}

impl BSeries {
    pub fn from_columns(cols: Vec<USeries>) -> Self {
        BSeries { cols }
    }

    pub fn zero(prec: usize, width: usize) -> Self {
        BSeries { cols: vec![USeries::zero(prec); width] }
    }

    /// A series free of `u`, placed in column 0.
    pub fn constant(s: &USeries, width: usize) -> Self {
        let mut cols = vec![USeries::zero(s.prec()); width];
        if width > 0 {
            cols[0] = s.clone();
        }
        BSeries { cols }
    }

    /// Polynomial in `u` with series coefficients, inside a window of `width`.
    pub fn u_poly(coeffs: &[USeries], width: usize) -> Self {
        let prec = coeffs.iter().map(USeries::prec).min().unwrap_or(0);
        let mut cols = vec![USeries::zero(prec); width];
        for (k, c) in coeffs.iter().enumerate().take(width) {
            cols[k] = c.clone();
        }
        BSeries { cols }
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn prec(&self) -> usize {
        self.cols.iter().map(USeries::prec).min().unwrap_or(0)
    }

    pub fn columns(&self) -> &[USeries] {
        &self.cols
    }

    pub fn column(&self, k: usize) -> Result<&USeries, SeriesError> {
        self.cols.get(k).ok_or(SeriesError::ColumnOutOfWindow { index: k, width: self.width() })
    }

    pub fn coeff(&self, n: usize, k: usize) -> Result<&BigRational, SeriesError> {
        self.column(k)?.coeff(n)
    }

    pub fn truncate(&self, prec: usize, width: usize) -> Self {
        BSeries { cols: self.cols.iter().take(width).map(|c| c.truncate(prec)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let w = self.width().min(o.width());
        let cols = (0..w)
            .map(|k| {
                let mut acc: Option<USeries> = None;
                for i in 0..=k {
                    let t = self.cols[i].mul(&o.cols[k - i]);
                    acc = Some(match acc {
                        None => t,
                        Some(a) => &a + &t,
                    });
                }
                acc.expect("k >= 0 gives at least one term")
            })
            .collect();
        BSeries { cols }
    }

    pub fn mul_series(&self, s: &USeries) -> Self {
        BSeries { cols: self.cols.iter().map(|c| c.mul(s)).collect() }
    }

    /// Multiplication by `u`; the window grows by one column.
    pub fn mul_u(&self) -> Self {
        let mut cols = vec![USeries::zero(self.prec())];
        cols.extend(self.cols.iter().cloned());
        BSeries { cols }
    }

    /// Exact division by `u`; column 0 must vanish.
    pub fn div_u(&self) -> Result<Self, SeriesError> {
        match self.cols.first() {
            None => Ok(self.clone()),
            Some(c0) if c0.is_zero() => Ok(BSeries { cols: self.cols[1..].to_vec() }),
            Some(_) => Err(SeriesError::DivisorNotUnit),
        }
    }

    /// Substitutes `u = point`. Column 0 is returned for the zero point. For a
    /// point with positive valuation the window is complete whenever
    /// `width * valuation >= prec`; otherwise (e.g. `u = 1`) the caller must
    /// vouch for the window with `window_complete`.
    pub fn eval_u(&self, point: &USeries, window_complete: bool) -> Result<USeries, SeriesError> {
        let prec = self.prec().min(point.prec());
        if point.truncate(prec).is_zero() {
            return Ok(self.column(0)?.truncate(prec));
        }
        let v = point.valuation().unwrap_or(0);
        if !window_complete && v * self.width() < prec {
            return Err(SeriesError::WindowTooSmall { width: self.width() });
        }
        let mut acc = USeries::zero(prec);
        let mut pw = USeries::one(prec);
        for c in &self.cols {
            acc = &acc + &c.mul(&pw).truncate(prec);
            pw = pw.mul(point).truncate(prec);
        }
        Ok(acc)
    }

    pub fn eval_u_rational(&self, point: &BigRational, window_complete: bool) -> Result<USeries, SeriesError> {
        self.eval_u(&USeries::constant(point.clone(), self.prec()), window_complete)
    }

    /// Cells `(n, k)` with a nonzero coefficient inside the window.
    pub fn nonzero_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, c) in self.cols.iter().enumerate() {
            for (n, x) in c.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    out.push((n, k));
                }
            }
        }
        out.sort();
        out
    }
}

impl Add for &BSeries {
    type Output = BSeries;
    fn add(self, o: &BSeries) -> BSeries {
        BSeries { cols: self.cols.iter().zip(o.cols.iter()).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &BSeries {
    type Output = BSeries;
    fn sub(self, o: &BSeries) -> BSeries {
        BSeries { cols: self.cols.iter().zip(o.cols.iter()).map(|(a, b)| a - b).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedSeries {
    Catalan,
    Motzkin,
    RiordanNumbers,
}

impl FromStr for NamedSeries {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "catalan" => Ok(NamedSeries::Catalan),
            "motzkin" => Ok(NamedSeries::Motzkin),
            "riordan" | "riordan_numbers" => Ok(NamedSeries::RiordanNumbers),
            other => Err(format!("unknown series '{other}'")),
        }
    }
}

/// `sqrt(1 - 2z - 3z^2)` to `prec` terms.
pub fn motzkin_discriminant_sqrt(prec: usize) -> USeries {
    USeries::poly(&[1, -2, -3], prec).sqrt().expect("constant term is 1")
}

/// Catalan, Motzkin or Riordan-number generating function from its radical
/// formula, with coefficients of `z^0 .. z^order`.
pub fn named_series(name: NamedSeries, order: usize) -> USeries {
    let prec = order + 1;
    match name {
        NamedSeries::Catalan => {
            let sq = USeries::poly(&[1, -4], prec + 1).sqrt().expect("constant term is 1");
            let num = &USeries::one(prec + 1) - &sq;
            num.shift_down(1).expect("1 - sqrt(1-4z) = O(z)").scale(&half())
        }
        NamedSeries::Motzkin => {
            let sq = motzkin_discriminant_sqrt(prec + 2);
            let num = &USeries::poly(&[1, -1], prec + 2) - &sq;
            num.shift_down(2).expect("numerator = O(z^2)").scale(&half())
        }
        NamedSeries::RiordanNumbers => {
            let sq = motzkin_discriminant_sqrt(prec + 1);
            let num = &USeries::poly(&[1, 1], prec + 1) - &sq;
            let q = num.shift_down(1).expect("numerator = O(z)").scale(&half());
            q.div(&USeries::poly(&[1, 1], prec)).expect("1 + z is a unit")
        }
    }
}

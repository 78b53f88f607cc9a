//! Kernel roots, closed-form generating functions, order-by-order solution of
//! the defining systems, and the functional-equation verifier.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::path::Family;
use crate::report::Report;
use crate::series::{BSeries, USeries};

/// Extra working precision absorbed by divisions by powers of `z`.
const GUARD: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("coefficient ({n}, {k}) of {series} is not an integer")]
    NonIntegerCoefficient { series: &'static str, n: usize, k: usize },
}

fn p(c: &[i64], prec: usize) -> USeries {
    USeries::poly(c, prec)
}

fn half(s: &USeries) -> USeries {
    s.scale(&num_rational::BigRational::new(BigInt::one(), BigInt::from(2)))
}

/// True when both series are known to `prec` terms and agree there.
pub fn agree(a: &USeries, b: &USeries, prec: usize) -> bool {
    a.prec() >= prec && b.prec() >= prec && a.truncate(prec) == b.truncate(prec)
}

/// Roots of the kernel quadratic. For M1 and M2 the large root has a pole at
/// 0, so `r_form` holds `1/r`; for M1R and M2R it holds `r` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelRoots {
    pub family: Family,
    pub s: USeries,
    pub r_form: USeries,
    pub discriminant: USeries,
}

impl KernelRoots {
    pub fn r_is_inverted(&self) -> bool {
        !self.family.is_reversed()
    }

    /// `1/r` for every family.
    pub fn inv_r(&self) -> USeries {
        if self.r_is_inverted() {
            self.r_form.clone()
        } else {
            self.r_form.inv().expect("r(0) = 1")
        }
    }

    pub fn prec(&self) -> usize {
        self.s.prec().min(self.r_form.prec())
    }
}

/// Roots from the printed radicals, known to at least `prec` terms.
pub fn kernel_roots(family: Family, prec: usize) -> KernelRoots {
    let w = prec + GUARD;
    match family {
        Family::M1 | Family::M1R => {
            let disc = p(&[1, -4, 2, -4, 1], w + 1);
            let sq = disc.sqrt().expect("constant term 1");
            let a = p(&[1, 0, -1], w + 1);
            let plus = &a + &sq;
            let minus = &a - &sq;
            if family == Family::M1 {
                let s = half(&minus.shift_down(1).expect("1 - z^2 - sqrt = O(z)"));
                let inv_r = plus.truncate(w).inv().expect("constant term 2").shift_up(1).scale_int(2);
                KernelRoots { family, s, r_form: inv_r, discriminant: disc }
            } else {
                let q = p(&[1, -1, 1], w + 1);
                let r = half(&plus.div(&q).expect("unit"));
                let s = half(&minus.div(&q).expect("unit"));
                KernelRoots { family, s, r_form: r, discriminant: disc }
            }
        }
        Family::M2 | Family::M2R => {
            let disc = p(&[1, -2, -3], w + 1);
            let sq = disc.sqrt().expect("constant term 1");
            let a = p(&[1, 1], w + 1);
            let plus = &a + &sq;
            let minus = &a - &sq;
            if family == Family::M2 {
                let inv_r = p(&[0, 2, 2], w).mul(&plus.truncate(w).inv().expect("constant term 2"));
                let s = half(&minus.shift_down(1).expect("O(z)")).div(&p(&[1, 1], w)).expect("unit");
                KernelRoots { family, s, r_form: inv_r, discriminant: disc }
            } else {
                KernelRoots { family, s: half(&minus), r_form: half(&plus), discriminant: disc }
            }
        }
    }
}

/// Root product and sum identities, plus the M1 simplification
/// `1 + rs - z = 1/z`, each checked to `prec` terms.
pub fn root_identities(roots: &KernelRoots, prec: usize) -> Vec<(String, bool)> {
    let w = roots.prec();
    let z = USeries::z(w);
    let s = &roots.s;
    let mut out = Vec::new();
    match roots.family {
        Family::M1 => {
            let ir = &roots.r_form;
            out.push(("z r s = z^2 - z + 1".into(), agree(&z.mul(s), &p(&[1, -1, 1], w).mul(ir), prec)));
            let lhs = z.mul(&(&USeries::one(w) + &s.mul(ir)));
            out.push(("z (r + s) = 1 - z^2".into(), agree(&lhs, &p(&[1, 0, -1], w).mul(ir), prec)));
            let lhs = &(ir + s) - &z.mul(ir);
            let simple = ir.shift_down(1).expect("1/r = O(z)");
            out.push(("1 + r s - z = 1/z".into(), agree(&lhs, &simple, prec)));
        }
        Family::M1R => {
            let r = &roots.r_form;
            let q = p(&[1, -1, 1], w);
            out.push(("s r (z^2 - z + 1) = z".into(), agree(&s.mul(r).mul(&q), &z, prec)));
            out.push(("(r + s)(z^2 - z + 1) = 1 - z^2".into(), agree(&(r + s).mul(&q), &p(&[1, 0, -1], w), prec)));
        }
        Family::M2 => {
            let ir = &roots.r_form;
            out.push(("z (1 + z) r s = 1".into(), agree(ir, &p(&[0, 1, 1], w).mul(s), prec)));
            let lhs = z.mul(&(&USeries::one(w) + &s.mul(ir)));
            out.push(("z (r + s) = 1".into(), agree(&lhs, ir, prec)));
        }
        Family::M2R => {
            let r = &roots.r_form;
            out.push(("r s = z (1 + z)".into(), agree(&r.mul(s), &p(&[0, 1, 1], w), prec)));
            out.push(("r + s = 1 + z".into(), agree(&(r + s), &p(&[1, 1], w), prec)));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GfRoute {
    ClosedForm,
    Iteration,
}

/// Column generating functions `f_k, g_k, h_k` and their sums for
/// `k = 0..=width`, each with coefficients of `z^0 ..= z^order`.
/// `aux` is `F(1)` for M1 and M2 and `G(0)` for M1R and M2R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfBundle {
    pub family: Family,
    pub route: GfRoute,
    pub order: usize,
    pub width: usize,
    pub f: Vec<USeries>,
    pub g: Vec<USeries>,
    pub h: Vec<USeries>,
    pub total_col: Vec<USeries>,
    pub aux: USeries,
}

impl GfBundle {
    pub fn prec(&self) -> usize {
        self.order + 1
    }

    pub fn total(&self) -> BSeries {
        BSeries::from_columns(self.total_col.clone())
    }

    pub fn f_series(&self) -> BSeries {
        BSeries::from_columns(self.f.clone())
    }

    pub fn g_series(&self) -> BSeries {
        BSeries::from_columns(self.g.clone())
    }

    pub fn h_series(&self) -> BSeries {
        BSeries::from_columns(self.h.clone())
    }

    /// Integer coefficient `[z^n u^k]` of the total.
    pub fn total_at(&self, n: usize, k: usize) -> BigInt {
        self.total_col[k].coeffs()[n].to_integer()
    }

    /// Checks that every coefficient is a nonnegative integer.
    pub fn check_integral(&self) -> Result<(), KernelError> {
        let named = [("f", &self.f), ("g", &self.g), ("h", &self.h), ("total", &self.total_col)];
        for (name, cols) in named {
            for (k, c) in cols.iter().enumerate() {
                for (n, x) in c.coeffs().iter().enumerate() {
                    if !x.is_integer() || x < &num_rational::BigRational::zero() {
                        return Err(KernelError::NonIntegerCoefficient { series: name, n, k });
                    }
                }
            }
        }
        Ok(())
    }
}

fn finish(
    family: Family,
    route: GfRoute,
    order: usize,
    width: usize,
    cols: [Vec<USeries>; 3],
    aux: USeries,
) -> Result<GfBundle, KernelError> {
    let prec = order + 1;
    let [f, g, h] = cols.map(|v| v.into_iter().map(|s| s.truncate(prec)).collect::<Vec<_>>());
    let total_col = (0..=width).map(|k| &(&f[k] + &g[k]) + &h[k]).collect();
    let b = GfBundle { family, route, order, width, f, g, h, total_col, aux: aux.truncate(prec) };
    b.check_integral()?;
    Ok(b)
}

/// The closed forms for `f_k, g_k, h_k` read off the kernel roots.
pub fn gf_closed_forms(family: Family, order: usize, width: usize) -> Result<GfBundle, KernelError> {
    let prec = order + 1;
    let roots = kernel_roots(family, prec + width + 2);
    let w = roots.prec();
    let one = USeries::one(w);
    let z = USeries::z(w);
    let s = roots.s.clone();
    let ir = roots.inv_r();
    let mut pw = vec![one.clone()];
    for k in 1..=width + 1 {
        let next = pw[k - 1].mul(&ir).truncate(w);
        pw.push(next);
    }
    let (mut f, mut g, mut h, mut t) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let aux = match family {
        Family::M1 => {
            let gc = &(&s - &one) - &z.mul(&ir);
            let tc = &(&ir + &s) - &z.mul(&ir);
            for k in 0..=width {
                f.push(pw[k].clone());
                g.push(gc.mul(&pw[k]));
                h.push(pw[k + 1].clone());
                t.push(tc.mul(&pw[k]));
            }
            (&s - &one).div(&z.mul(&ir).scale_int(2)).expect("s - 1 = O(z^2)")
        }
        Family::M1R => {
            let r = &roots.r_form;
            let gc = s.mul(&(&(&one - r) + &r.mul(&z)));
            let tc = s.mul(&(&r.mul(&z) + &one));
            for k in 0..=width {
                if k == 0 {
                    f.push(one.clone());
                    h.push(s.clone());
                    t.push(&one + &tc.mul(&pw[1]));
                } else {
                    f.push(s.mul(&pw[k - 1]));
                    h.push(&s.mul(&pw[k]) - &p(&[1, -1], w).mul(&s).mul(&pw[k - 1]));
                    t.push(&tc.mul(&pw[k + 1]) + &s.mul(&z).mul(&pw[k - 1]));
                }
                g.push(gc.mul(&pw[k + 1]));
            }
            &(&one - r).mul(&ir) - &s.mul(&z)
        }
        Family::M2 => {
            let gc = p(&[1, 1], w).mul(&(&s - &one));
            for k in 0..=width {
                f.push(pw[k].clone());
                g.push(gc.mul(&pw[k]));
                h.push(z.mul(&pw[k]));
                t.push(pw[k + 1].shift_down(1).expect("1/r = O(z)"));
            }
            (&s - &one).div(&s.mul(&z).mul(&z)).expect("s - 1 = O(z^2)")
        }
        Family::M2R => {
            let r = &roots.r_form;
            let zp1 = p(&[1, 1], w);
            for k in 0..=width {
                if k == 0 {
                    f.push(one.clone());
                    h.push(z.mul(&pw[1]));
                    t.push(zp1.mul(&pw[1]));
                } else {
                    f.push(&pw[k] + &p(&[-1, 1], w).mul(&pw[k]));
                    h.push(&z.mul(&pw[k + 1]) - &z.mul(&pw[k]));
                    t.push(&zp1.mul(&pw[k + 1]) - &pw[k]);
                }
                g.push((&one - r).mul(&pw[k + 1]));
            }
            (&one - r).mul(&ir)
        }
    };
    let mut b = finish(family, GfRoute::ClosedForm, order, width, [f, g, h], aux)?;
    // closed column formulas, kept as computed rather than re-summed
    b.total_col = t.into_iter().map(|s| s.truncate(prec)).collect();
    b.check_integral()?;
    Ok(b)
}

/// Solves the defining system order by order in `z`. Right-hand sides carry a
/// factor `z`, so order `n` only reads order `n - 1`.
pub fn gf_by_iteration(family: Family, order: usize, width: usize) -> Result<GfBundle, KernelError> {
    let nn = order;
    // padded u-window: index k + 1 references and tail sums stay exact
    let ww = width + nn + 2;
    let zero = BigInt::zero;
    let mut f = vec![vec![zero(); nn + 1]; ww + 1];
    let mut g = vec![vec![zero(); nn + 1]; ww + 1];
    let mut h = vec![vec![zero(); nn + 1]; ww + 1];
    f[0][0] = BigInt::one();
    for n in 1..=nn {
        let t = |k: usize, f: &Vec<Vec<BigInt>>, g: &Vec<Vec<BigInt>>, h: &Vec<Vec<BigInt>>| {
            &f[k][n - 1] + &g[k][n - 1] + &h[k][n - 1]
        };
        // k + 1 references need k < ww
        for k in 0..=ww {
            let (fv, gv, hv);
            match family {
                Family::M1 | Family::M2 => {
                    fv = if k == 0 { zero() } else { t(k - 1, &f, &g, &h) };
                    gv = (k + 1..=ww)
                        .map(|l| if family == Family::M1 { &f[l][n - 1] + &h[l][n - 1] } else { f[l][n - 1].clone() })
                        .sum();
                    hv = if family == Family::M1 { t(k, &f, &g, &h) } else { f[k][n - 1].clone() };
                }
                Family::M1R | Family::M2R => {
                    let base = if n == 1 { BigInt::one() } else { zero() };
                    fv = if k == 0 {
                        zero()
                    } else {
                        let tail: BigInt = (0..k)
                            .map(|j| if family == Family::M1R { &g[j][n - 1] + &h[j][n - 1] } else { g[j][n - 1].clone() })
                            .sum();
                        &base + tail
                    };
                    gv = if k < ww { t(k + 1, &f, &g, &h) } else { zero() };
                    hv = match family {
                        Family::M1R => t(k, &f, &g, &h),
                        _ if k == 0 => &base + &g[0][n - 1],
                        _ => g[k][n - 1].clone(),
                    };
                }
            }
            f[k][n] = fv;
            g[k][n] = gv;
            h[k][n] = hv;
        }
    }
    let prec = nn + 1;
    let to_cols = |a: &Vec<Vec<BigInt>>| -> Vec<USeries> {
        a.iter().take(width + 1).map(|c| USeries::from_integers(c, prec)).collect()
    };
    let (fc, gc, hc) = (to_cols(&f), to_cols(&g), to_cols(&h));
    let aux = match family {
        Family::M1 | Family::M2 => {
            let mut acc = vec![zero(); prec];
            for col in f.iter().take(nn + 1) {
                for (n, x) in col.iter().enumerate() {
                    acc[n] += x;
                }
            }
            USeries::from_integers(&acc, prec)
        }
        Family::M1R | Family::M2R => USeries::from_integers(&g[0], prec),
    };
    finish(family, GfRoute::Iteration, order, width, [fc, gc, hc], aux)
}

/// Residual of one functional equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationResidual {
    pub equation: String,
    /// Cells `(n, k)` with a nonzero residual coefficient.
    pub cells: Vec<(usize, usize)>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeReport {
    pub family: Family,
    pub order: usize,
    pub width: usize,
    pub equations: Vec<EquationResidual>,
}

impl FeReport {
    pub fn is_clean(&self) -> bool {
        self.equations.iter().all(|e| e.cells.is_empty())
    }

    pub fn flagged(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.equations.iter().flat_map(|e| e.cells.iter().copied()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("kernel");
        for e in &self.equations {
            let name = format!("{} functional equation {}", self.family, e.equation);
            match &e.skipped {
                Some(why) => r.info(name, format!("skipped: {why}")),
                None => r.check(
                    name,
                    e.cells.is_empty(),
                    if e.cells.is_empty() {
                        format!("zero residual to z^{} u^{}", self.order, self.width)
                    } else {
                        format!("nonzero residual at (n,k) = {:?}", e.cells)
                    },
                ),
            }
        }
        r
    }
}

fn cells_of(cols: Vec<USeries>, prec: usize) -> Vec<(usize, usize)> {
    BSeries::from_columns(cols.into_iter().map(|c| c.truncate(prec)).collect()).nonzero_cells()
}

fn scalar_cells(s: &USeries, prec: usize) -> Vec<(usize, usize)> {
    cells_of(vec![s.clone()], prec)
}

/// Checks every bivariate equation of the family's system, and the forms
/// solved by the kernel roots, column by column on the bundle's window.
pub fn check_functional_equations(b: &GfBundle) -> FeReport {
    let prec = b.prec();
    let kw = b.width;
    let roots = kernel_roots(b.family, prec + 2);
    let w = roots.prec();
    let z = USeries::z(w);
    let zs = USeries::zero(w);
    let one = USeries::one(w);
    let at = |v: &Vec<USeries>, k: isize| -> USeries {
        if k < 0 {
            zs.clone()
        } else {
            v[k as usize].clone()
        }
    };
    let ind = |cond: bool| if cond { one.clone() } else { zs.clone() };
    let tot = |k: isize| &(&at(&b.f, k) + &at(&b.g, k)) + &at(&b.h, k);
    let sum_cols = |v: &Vec<USeries>| v.iter().fold(USeries::zero(prec), |a, c| &a + c);
    let complete = kw >= b.order;
    let mut eqs: Vec<EquationResidual> = Vec::new();
    let mut push = |name: &str, cols: Vec<USeries>| {
        eqs.push(EquationResidual { equation: name.to_string(), cells: cells_of(cols, prec), skipped: None });
    };
    let ks = || 0..=kw as isize;
    let fam = b.family;
    match fam {
        Family::M1 | Family::M2 => {
            push(
                "F = 1 + zu(F + G + H)",
                ks().map(|k| &(&at(&b.f, k) - &ind(k == 0)) - &z.mul(&tot(k - 1))).collect(),
            );
            if fam == Family::M1 {
                push("H = z(F + G + H)", ks().map(|k| &at(&b.h, k) - &z.mul(&tot(k))).collect());
            } else {
                push("H = zF", ks().map(|k| &at(&b.h, k) - &z.mul(&at(&b.f, k))).collect());
            }
            let ir = roots.inv_r();
            let gk = if fam == Family::M1 { &(&roots.s - &one) - &z.mul(&ir) } else { p(&[1, 1], w).mul(&(&roots.s - &one)) };
            let hk = if fam == Family::M1 { ir.clone() } else { z.clone() };
            let lin = |v: &Vec<USeries>, k: isize| &at(v, k) - &ir.mul(&at(v, k - 1));
            push("F (1 - u/r) = 1", ks().map(|k| &lin(&b.f, k) - &ind(k == 0)).collect());
            push("G (1 - u/r) = root form", ks().map(|k| &lin(&b.g, k) - &ind(k == 0).mul(&gk)).collect());
            push("H (1 - u/r) = root form", ks().map(|k| &lin(&b.h, k) - &ind(k == 0).mul(&hk)).collect());
            let (f1, h1) = (sum_cols(&b.f), sum_cols(&b.h));
            let g_name = if fam == Family::M1 { "(u - 1)G = z(F - F(1) + H - H(1))" } else { "(u - 1)G = z(F - F(1))" };
            let s_name = if fam == Family::M1 { "F(1) - H(1) = 1" } else { "H(1) = zF(1)" };
            if complete {
                push(
                    g_name,
                    ks().map(|k| {
                        let mut rhs = at(&b.f, k);
                        if fam == Family::M1 {
                            rhs = &rhs + &at(&b.h, k);
                        }
                        if k == 0 {
                            rhs = &rhs - &f1;
                            if fam == Family::M1 {
                                rhs = &rhs - &h1;
                            }
                        }
                        &(&at(&b.g, k - 1) - &at(&b.g, k)) - &z.mul(&rhs)
                    })
                    .collect(),
                );
                let scalar = if fam == Family::M1 { &(&f1 - &h1) - &one } else { &h1 - &z.mul(&f1) };
                eqs.push(EquationResidual { equation: s_name.into(), cells: scalar_cells(&scalar, prec), skipped: None });
            } else {
                for name in [g_name, s_name] {
                    eqs.push(EquationResidual {
                        equation: name.into(),
                        cells: vec![],
                        skipped: Some(format!("u-window {kw} < order {}", b.order)),
                    });
                }
            }
        }
        Family::M1R | Family::M2R => {
            let r = roots.r_form.clone();
            let s = roots.s.clone();
            let (f0, g0, h0) = (at(&b.f, 0), at(&b.g, 0), at(&b.h, 0));
            if fam == Family::M1R {
                push(
                    "(1 - u)F = (1 - u) + zu(1 + G + H)",
                    ks().map(|k| {
                        let lhs = &at(&b.f, k) - &at(&b.f, k - 1);
                        let rhs = &(&ind(k == 0) - &ind(k == 1))
                            + &z.mul(&(&(&ind(k == 1) + &at(&b.g, k - 1)) + &at(&b.h, k - 1)));
                        &lhs - &rhs
                    })
                    .collect(),
                );
                push("H = z(F + G + H)", ks().map(|k| &at(&b.h, k) - &z.mul(&tot(k))).collect());
            } else {
                push(
                    "(1 - u)F = (1 - u) + zu(1 + G)",
                    ks().map(|k| {
                        let lhs = &at(&b.f, k) - &at(&b.f, k - 1);
                        let rhs = &(&ind(k == 0) - &ind(k == 1)) + &z.mul(&(&ind(k == 1) + &at(&b.g, k - 1)));
                        &lhs - &rhs
                    })
                    .collect(),
                );
                push(
                    "H = z + zG",
                    ks().map(|k| &(&at(&b.h, k) - &z.mul(&ind(k == 0))) - &z.mul(&at(&b.g, k))).collect(),
                );
            }
            push(
                "uG = z(F - F(0) + G - G(0) + H - H(0))",
                ks().map(|k| &at(&b.g, k - 1) - &ind(k >= 1).mul(&z.mul(&tot(k)))).collect(),
            );
            let lin = |v: &Vec<USeries>, k: isize| &r.mul(&at(v, k)) - &at(v, k - 1);
            if fam == Family::M1R {
                let gk = s.mul(&(&(&one - &r) + &r.mul(&z)));
                let sr = s.mul(&r);
                push(
                    "(r - u)F = (r - u) + sru",
                    ks().map(|k| &(&lin(&b.f, k) - &(&r.mul(&ind(k == 0)) - &ind(k == 1))) - &sr.mul(&ind(k == 1)))
                        .collect(),
                );
                push("(r - u)G = s(1 - r + rz)", ks().map(|k| &lin(&b.g, k) - &ind(k == 0).mul(&gk)).collect());
                push(
                    "(r - u)H = sr - sru(1 - z)",
                    ks().map(|k| {
                        &(&lin(&b.h, k) - &ind(k == 0).mul(&sr)) + &ind(k == 1).mul(&sr.mul(&p(&[1, -1], w)))
                    })
                    .collect(),
                );
                let boundary = &p(&[1, -1], w).mul(&h0) - &z.mul(&(&one + &g0));
                eqs.push(EquationResidual {
                    equation: "(1 - z)H(0) = z(1 + G(0))".into(),
                    cells: scalar_cells(&boundary, prec),
                    skipped: None,
                });
            } else {
                push(
                    "(r - u)F = u(z - 1) + r",
                    ks().map(|k| &(&lin(&b.f, k) - &ind(k == 1).mul(&p(&[-1, 1], w))) - &ind(k == 0).mul(&r))
                        .collect(),
                );
                push("(r - u)G = 1 - r", ks().map(|k| &lin(&b.g, k) - &ind(k == 0).mul(&(&one - &r))).collect());
                push(
                    "(r - u)H = z(1 - u)",
                    ks().map(|k| &lin(&b.h, k) - &z.mul(&(&ind(k == 0) - &ind(k == 1)))).collect(),
                );
                eqs.push(EquationResidual {
                    equation: "F(0) = 1".into(),
                    cells: scalar_cells(&(&f0 - &one), prec),
                    skipped: None,
                });
                let boundary = &(&h0 - &z) - &z.mul(&g0);
                eqs.push(EquationResidual {
                    equation: "H(0) = z + zG(0)".into(),
                    cells: scalar_cells(&boundary, prec),
                    skipped: None,
                });
            }
        }
    }
    FeReport { family: fam, order: b.order, width: kw, equations: eqs }
}

/// Builds the closed-form bundle and checks its functional equations.
pub fn verify_functional_equations(family: Family, order: usize, width: usize) -> Result<FeReport, KernelError> {
    Ok(check_functional_equations(&gf_closed_forms(family, order, width)?))
}

/// Root identities and the scalar boundary identities, to `order`.
pub fn kernel_identity_report(family: Family, order: usize) -> Result<Report, KernelError> {
    let prec = order + 1;
    let mut rep = Report::new("kernel");
    let roots = kernel_roots(family, prec);
    for (name, ok) in root_identities(&roots, prec) {
        rep.check(format!("{family} roots: {name}"), ok, format!("to order {order}"));
    }
    let b = gf_closed_forms(family, order, order)?;
    let z = USeries::z(prec);
    let one = USeries::one(prec);
    let sum = |v: &Vec<USeries>| v.iter().fold(USeries::zero(prec), |a, c| &a + c);
    let mut scalar = |name: &str, lhs: USeries, rhs: USeries| {
        rep.check(format!("{family} scalar: {name}"), agree(&lhs, &rhs, prec), format!("to order {order}"));
    };
    match family {
        Family::M1 => {
            scalar("F(1) - H(1) = 1", &sum(&b.f) - &sum(&b.h), one.clone());
            scalar("F(1) = r(s - 1)/(2z)", b.aux.clone(), sum(&b.f));
            let wider = gf_closed_forms(family, order + 1, order)?;
            for k in [0, 1, order / 2] {
                let simple = wider.h[k].shift_down(1).expect("1/r = O(z)");
                scalar(&format!("[u^{k}]Total = 1/(z r^{})", k + 1), b.total_col[k].clone(), simple);
            }
        }
        Family::M1R => {
            let rhs = z.mul(&(&one + &b.g[0])).div(&p(&[1, -1], prec)).expect("unit");
            scalar("H(0) = z(1 + G(0))/(1 - z)", b.h[0].clone(), rhs);
            scalar("G(0) = (1 - r)/r - sz", b.aux.clone(), b.g[0].clone());
        }
        Family::M2 => {
            scalar("H(1) = zF(1)", sum(&b.h), z.mul(&sum(&b.f)).truncate(prec));
            scalar("F(1) = (s - 1)/(s z^2)", b.aux.clone(), sum(&b.f));
        }
        Family::M2R => {
            scalar("F(0) = 1", b.f[0].clone(), one.clone());
            scalar("H(0) = z + zG(0)", b.h[0].clone(), &z + &z.mul(&b.g[0]));
            scalar("G(0) = (1 - r)/r", b.aux.clone(), b.g[0].clone());
        }
    }
    Ok(rep)
}

//! `Aut(f)`, the order of `Γ(f)`, the factorable core, and the polynomial
//! consequences of the uniqueness theorems.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::decompose::{all_complete_decompositions, check_tame, left_quotient};
use super::linear::LinearPoly;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Degree cap for the bivariate expansion in [`is_factorable`].
pub const FACTORABLE_DEGREE_CAP: usize = 64;

/// All linear `μ` with `f ∘ μ = f`, sorted.
///
/// Over a finite field every slope `a` with `a^n = 1` is tried against every
/// translation `b`. Over ℚ the slope is `±1` and `b` is forced by the
/// coefficient of `X^{n-1}`.
pub fn aut_group(f: &Poly) -> Result<Vec<LinearPoly>> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::InvalidInput("degree must be at least 2".into()));
    }
    let field = f.field();
    let mut out = Vec::new();
    match field.elements() {
        Some(elements) => {
            for a in elements.iter().filter(|a| !a.is_zero()) {
                if !field.pow(a, n as u64).is_one() {
                    continue;
                }
                for b in &elements {
                    let mu = LinearPoly::new(field, a.clone(), b.clone())?;
                    if f.compose(&mu.as_poly())? == *f {
                        out.push(mu);
                    }
                }
            }
        }
        None => {
            let lc = f.leading();
            let c = f.coeff(n - 1);
            for a in [field.one(), field.from_i64(-1)] {
                if !field.pow(&a, n as u64).is_one() {
                    continue;
                }
                // [X^{n-1}] f(aX+b) = lc·n·a^{n-1}·b + c·a^{n-1}
                let an1 = field.pow(&a, n as u64 - 1);
                let num = field.sub(&c, &field.mul(&c, &an1));
                let den = field.mul(&field.mul(&lc, &field.from_usize(n)), &an1);
                let b = field.div(&num, &den)?;
                let mu = LinearPoly::new(field, a, b)?;
                if f.compose(&mu.as_poly())? == *f {
                    out.push(mu);
                }
            }
        }
    }
    out.sort_by(|x, y| (x.a(), x.b()).cmp(&(y.a(), y.b())));
    Ok(out)
}

/// `|Γ(f)|`, or infinite when `f` is linearly related to `X^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GammaOrder {
    Finite(usize),
    Infinite,
}

impl fmt::Display for GammaOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaOrder::Finite(m) => write!(f, "{m}"),
            GammaOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// `f(X + t)` with `t` chosen to kill the `X^{n-1}` term.
fn depressed(f: &Poly) -> Result<Poly> {
    let field = f.field();
    let n = f.degree();
    let t = field.neg(&field.div(&f.coeff(n - 1), &field.mul(&field.from_usize(n), &f.leading()))?);
    let shift = Poly::new(field.clone(), vec![t, field.one()]);
    f.compose(&shift)
}

/// The gcd of exponent differences of the nonconstant terms of `f` after the
/// shift removing the `X^{n-1}` term.
///
/// The constant term is left out: `Γ(f)` is defined through `ν ∘ f ∘ μ = f`
/// with an arbitrary linear `ν`, which absorbs any translation of values.
pub fn gamma_order(f: &Poly) -> Result<GammaOrder> {
    let n = f.degree();
    if n < 2 {
        return Err(Error::InvalidInput("degree must be at least 2".into()));
    }
    check_tame(f)?;
    let g = depressed(f)?;
    let exps: Vec<usize> =
        g.coeffs().iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).map(|(e, _)| e).collect();
    if exps.len() == 1 {
        return Ok(GammaOrder::Infinite);
    }
    let m = exps.iter().fold(0usize, |acc, &e| acc.gcd(&(n - e)));
    Ok(GammaOrder::Finite(m))
}

/// Over a finite field: every linear `μ` admitting a linear `ν` with
/// `ν ∘ f ∘ μ = f`.
pub fn gamma_group(f: &Poly) -> Result<Vec<LinearPoly>> {
    let field = f.field();
    let elements = field
        .elements()
        .ok_or_else(|| Error::InvalidInput("Γ(f) is enumerated over finite fields only".into()))?;
    let n = f.degree();
    let mut out = Vec::new();
    for a in elements.iter().filter(|a| !a.is_zero()) {
        for b in &elements {
            let mu = LinearPoly::new(field, a.clone(), b.clone())?;
            let fm = f.compose(&mu.as_poly())?;
            // ν(Y) = αY + β with α = a^n forced by leading terms
            let alpha = field.pow(a, n as u64);
            let diff = fm.sub(&f.scale(&alpha))?;
            if diff.is_constant() {
                out.push(mu);
            }
        }
    }
    Ok(out)
}

/// `f = g ∘ h` with `h` the normalized orbit product `∏_{μ ∈ Aut(f)} μ(X)`.
pub fn factorable_core(f: &Poly) -> Result<(Poly, Poly)> {
    let aut = aut_group(f)?;
    let field = f.field();
    if aut.len() == 1 {
        return Ok((f.clone(), Poly::x(field)));
    }
    let mut prod = Poly::one(field);
    for mu in &aut {
        prod = prod.mul(&mu.as_poly())?;
    }
    let h = prod.normalized()?;
    let g = left_quotient(f, &h)?.ok_or_else(|| {
        Error::InternalInconsistency("orbit product is not a right factor".into())
    })?;
    Ok((g, h))
}

/// Dense bivariate polynomial, `c[i][j]` the coefficient of `X^i Y^j`.
struct Bivariate {
    c: Vec<Vec<Scalar>>,
}

impl Bivariate {
    fn mul_linear(&self, field: &Field, mu: &LinearPoly) -> Bivariate {
        // multiply by X − aY − b
        let (a, b) = (mu.a(), mu.b());
        let rows = self.c.len() + 1;
        let cols = self.c[0].len() + 1;
        let mut out = vec![vec![field.zero(); cols]; rows];
        for (i, row) in self.c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                out[i + 1][j] = field.add(&out[i + 1][j], v);
                out[i][j + 1] = field.sub(&out[i][j + 1], &field.mul(a, v));
                out[i][j] = field.sub(&out[i][j], &field.mul(b, v));
            }
        }
        Bivariate { c: out }
    }
}

/// `|Aut(f)| = deg f` and `f(X) − f(Y) = lc(f) ∏_{μ ∈ Aut(f)} (X − μ(Y))`.
pub fn is_factorable(f: &Poly) -> Result<bool> {
    let n = f.degree();
    if n > FACTORABLE_DEGREE_CAP {
        return Err(Error::InvalidInput(format!(
            "degree {n} exceeds the bivariate cap {FACTORABLE_DEGREE_CAP}"
        )));
    }
    let aut = aut_group(f)?;
    if aut.len() != n {
        return Ok(false);
    }
    let field = f.field();
    let mut prod = Bivariate { c: vec![vec![f.leading()]] };
    for mu in &aut {
        prod = prod.mul_linear(field, mu);
    }
    for (i, row) in prod.c.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let expected = match (i, j) {
                (0, 0) => field.zero(),
                (i, 0) => f.coeff(i),
                (0, j) => field.neg(&f.coeff(j)),
                _ => field.zero(),
            };
            if *v != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSummary {
    pub factors: Vec<String>,
    pub degrees: Vec<usize>,
    pub aut_orders: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyTheoremReport {
    pub decompositions: Vec<DecompositionSummary>,
    pub length: usize,
    pub degree_multiset: Vec<usize>,
    /// Sorted `(degree, |Aut|)` pairs.
    pub aut_multiset: Vec<(usize, usize)>,
    pub aut_order: usize,
}

/// All complete decompositions share length, degree multiset and the
/// multiset of `(degree, |Aut|)`; and `|Aut(f)|` divides the product of the
/// factor orders along each of them.
pub fn verify_poly_theorems(f: &Poly) -> Result<PolyTheoremReport> {
    let ds = all_complete_decompositions(f)?;
    let aut_order = aut_group(f)?.len();
    let mut summaries = Vec::new();
    for d in &ds {
        if d.compose() != *f {
            return Err(Error::TheoremViolated(format!("{d} does not recompose to f")));
        }
        let aut_orders =
            d.factors().iter().map(|p| aut_group(p).map(|a| a.len())).collect::<Result<Vec<_>>>()?;
        let product: usize = aut_orders.iter().product();
        if !product.is_multiple_of(aut_order) {
            return Err(Error::TheoremViolated(format!(
                "|Aut(f)| = {aut_order} does not divide {product} along {d}"
            )));
        }
        summaries.push(DecompositionSummary {
            factors: d.factors().iter().map(|p| p.to_string()).collect(),
            degrees: d.degrees(),
            aut_orders,
        });
    }
    let multiset = |s: &DecompositionSummary| {
        let mut v: Vec<(usize, usize)> =
            s.degrees.iter().copied().zip(s.aut_orders.iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let reference = multiset(&summaries[0]);
    for s in &summaries {
        if multiset(s) != reference {
            return Err(Error::TheoremViolated(format!(
                "{:?} and {:?} have different (degree, |Aut|) multisets",
                summaries[0].factors, s.factors
            )));
        }
    }
    Ok(PolyTheoremReport {
        length: reference.len(),
        degree_multiset: reference.iter().map(|p| p.0).collect(),
        aut_multiset: reference,
        decompositions: summaries,
        aut_order,
    })
}

/// `X^n`.
pub fn power(field: &Field, n: usize) -> Poly {
    Poly::monomial(field, field.one(), n)
}

/// `D_n(X, a)`: `D_0 = 2`, `D_1 = X`, `D_n = X·D_{n-1} − a·D_{n-2}`.
pub fn dickson(field: &Field, n: usize, a: &Scalar) -> Poly {
    let x = Poly::x(field);
    let mut prev = Poly::constant(field, field.from_i64(2));
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).unwrap().sub(&prev.scale(a)).unwrap();
        prev = cur;
        cur = next;
    }
    cur
}

/// `D_n(X, 1)`, the Chebyshev polynomial normalized so that
/// `T_n(X + 1/X) = X^n + X^{-n}`.
pub fn chebyshev_normalized(field: &Field, n: usize) -> Poly {
    dickson(field, n, &field.one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(&Field::Rational, coeffs)
    }

    #[test]
    fn aut_examples() {
        let aut = aut_group(&q(&[0, 0, 1])).unwrap();
        assert_eq!(aut.len(), 2);
        assert_eq!(aut_group(&q(&[0, -3, 0, 1])).unwrap().len(), 1);
        let f7 = Field::fq(7).unwrap();
        let aut = aut_group(&power(&f7, 3)).unwrap();
        let slopes: Vec<_> = aut.iter().map(|m| m.a().code().unwrap()).collect();
        assert_eq!(slopes, vec![1, 2, 4]);
        // shifted even function: (X - 1)^2 has Aut {X, 2 - X}
        let aut = aut_group(&q(&[1, -2, 1])).unwrap();
        assert_eq!(aut.len(), 2);
    }

    #[test]
    fn gamma_examples() {
        let f = Field::Rational;
        assert_eq!(gamma_order(&power(&f, 6)).unwrap(), GammaOrder::Infinite);
        assert_eq!(gamma_order(&q(&[-2, 0, 9, 0, -6, 0, 1])).unwrap(), GammaOrder::Finite(2));
        assert_eq!(gamma_order(&q(&[0, 0, 0, 1, 1])).unwrap(), GammaOrder::Finite(1));
        // X^2 + 1 is related to X^2 through ν
        assert_eq!(gamma_order(&q(&[1, 0, 1])).unwrap(), GammaOrder::Infinite);
    }

    #[test]
    fn gamma_group_size_matches_order() {
        let f7 = Field::fq(7).unwrap();
        // X^4 + X over F7: m = 3, gcd(3, 6) = 3
        let f = Poly::from_i64s(&f7, &[0, 1, 0, 0, 1]);
        assert_eq!(gamma_order(&f).unwrap(), GammaOrder::Finite(3));
        assert_eq!(gamma_group(&f).unwrap().len(), 3);
    }

    #[test]
    fn factorable_core_examples() {
        let f = Field::Rational;
        assert_eq!(factorable_core(&power(&f, 6)).unwrap(), (power(&f, 3), power(&f, 2)));
        let t3 = q(&[0, -3, 0, 1]);
        assert_eq!(factorable_core(&t3).unwrap(), (t3.clone(), Poly::x(&f)));
        let (g, h) = factorable_core(&q(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!((g, h), (q(&[0, 1, 1]), power(&f, 2)));
    }

    #[test]
    fn factorable_examples() {
        assert!(is_factorable(&q(&[0, 0, 1])).unwrap());
        assert!(is_factorable(&power(&Field::fq(7).unwrap(), 3)).unwrap());
        assert!(!is_factorable(&power(&Field::Rational, 3)).unwrap());
    }

    #[test]
    fn dickson_identities() {
        let f = Field::Rational;
        let d2 = chebyshev_normalized(&f, 2);
        let d3 = chebyshev_normalized(&f, 3);
        assert_eq!(d2, q(&[-2, 0, 1]));
        let d6 = chebyshev_normalized(&f, 6);
        assert_eq!(d2.compose(&d3).unwrap(), d6);
        assert_eq!(d3.compose(&d2).unwrap(), d6);
        assert_eq!(power(&f, 1), Poly::x(&f));
    }

    #[test]
    fn poly_theorems() {
        let f = Field::Rational;
        let r = verify_poly_theorems(&power(&f, 6)).unwrap();
        assert_eq!(r.aut_multiset, vec![(2, 2), (3, 1)]);
        let r = verify_poly_theorems(&power(&f, 12)).unwrap();
        assert_eq!(r.degree_multiset, vec![2, 2, 3]);
        let r = verify_poly_theorems(&q(&[0, 0, 0, 1, 1])).unwrap();
        assert_eq!(r.length, 1);
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field, Scalar};

/// Dense univariate polynomial, coefficients low to high with trailing zeros
/// stripped. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: Scalar) -> Self {
        Poly::new(field.clone(), vec![c])
    }

    pub fn one(field: &Field) -> Self {
        Poly::constant(field, field.one())
    }

    /// The identity polynomial `X`.
    pub fn x(field: &Field) -> Self {
        Poly::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &Field, c: Scalar, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(field.clone(), coeffs)
    }

    /// From integer coefficients, low to high.
    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Self {
        Poly::new(field.clone(), coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// From sparse `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_terms(field: &Field, terms: &[(usize, Scalar)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![field.zero(); deg + 1];
        for (d, c) in terms {
            coeffs[*d] = field.add(&coeffs[*d], c);
        }
        Poly::new(field.clone(), coeffs)
    }

    /// Parses `<deg>:<coeff> ...` with integer or `num/den` coefficients.
    pub fn parse_terms(field: &Field, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for tok in text.split_whitespace() {
            let (d, c) = tok
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("bad term {tok:?}")))?;
            let d: usize =
                d.parse().map_err(|_| Error::InvalidInput(format!("bad degree in {tok:?}")))?;
            terms.push((d, parse_scalar(field, c)?));
        }
        if terms.is_empty() {
            return Err(Error::InvalidInput("empty term list".into()));
        }
        Ok(Poly::from_terms(field, &terms))
    }

    /// Sparse `<deg>:<coeff>` form, high to low.
    pub fn to_terms(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| format!("{d}:{}", self.field.scalar_text(c)))
            .collect();
        if parts.is_empty() {
            "0:0".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial given degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Monic with zero constant term.
    pub fn is_normalized(&self) -> bool {
        self.is_monic() && self.coeff(0).is_zero()
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        Ok(Poly::new(f.clone(), (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect()))
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, b));
                }
            }
        }
        Ok(Poly::new(f.clone(), out))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    pub fn evaluate(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self ∘ inner`, i.e. `self(inner(X))`, by Horner's rule.
    pub fn compose(&self, inner: &Poly) -> Result<Poly> {
        self.check(inner)?;
        let mut acc = Poly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?.add(&Poly::constant(&self.field, c.clone()))?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_usize(i), c)).collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let lead_inv = f.inv(&d.leading())?;
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(&r[top], &lead_inv);
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = f.sub(&r[idx], &f.mul(&c, dc));
            }
            q[top - dd] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(f.clone(), q), Poly::new(f.clone(), r)))
    }

    /// `self / lc(self)`.
    pub fn monic(&self) -> Result<Poly> {
        Ok(self.scale(&self.field.inv(&self.leading())?))
    }

    /// `(self − self(0)) / lc(self)`: monic with zero constant term.
    pub fn normalized(&self) -> Result<Poly> {
        let f = &self.field;
        let shifted = self.sub(&Poly::constant(f, self.coeff(0)))?;
        shifted.monic()
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = if negative { self.field.neg(c) } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let coef = if abs.is_one() && d > 0 { String::new() } else { abs.to_string() };
            let needs_parens = coef.contains('/') && d > 0;
            let coef = if needs_parens { format!("({coef})") } else { coef };
            match (d, coef.is_empty()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{coef}*X")?,
                (_, true) => write!(f, "X^{d}")?,
                (_, false) => write!(f, "{coef}*X^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(&Field::Rational, coeffs)
    }

    #[test]
    fn chebyshev_composite() {
        let t2 = q(&[-2, 0, 1]);
        let t3 = q(&[0, -3, 0, 1]);
        let f = t2.compose(&t3).unwrap();
        assert_eq!(f, q(&[-2, 0, 9, 0, -6, 0, 1]));
        assert_eq!(f.to_string(), "X^6 - 6*X^4 + 9*X^2 - 2");
        assert_eq!(t3.compose(&t2).unwrap(), f);
    }

    #[test]
    fn identity_and_power_composition() {
        let x = Poly::x(&Field::Rational);
        let f = q(&[1, 2, 3]);
        assert_eq!(f.compose(&x).unwrap(), f);
        assert_eq!(x.compose(&f).unwrap(), f);
        let x2 = q(&[0, 0, 1]);
        assert_eq!(x2.compose(&x2).unwrap(), q(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn division() {
        let f = q(&[1, 0, 0, 1]);
        let d = q(&[1, 1]);
        let (qq, r) = f.div_rem(&d).unwrap();
        assert_eq!(qq, q(&[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&q(&[-1, 0, 1])).unwrap(), d);
    }

    #[test]
    fn field_mismatch() {
        let a = q(&[1, 1]);
        let b = Poly::from_i64s(&Field::fq(7).unwrap(), &[1, 1]);
        assert_eq!(a.compose(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn terms_round_trip() {
        let f = Poly::parse_terms(&Field::Rational, "3:1 1:-1/2 0:4").unwrap();
        assert_eq!(f.to_terms(), "3:1 1:-1/2 0:4");
        assert_eq!(f.to_string(), "X^3 - (1/2)*X + 4");
        assert_eq!(f.derivative().to_terms(), "2:3 0:-1/2");
    }
}

//! Additive polynomials `Σ a_i X^{p^i}` as the twisted ring of
//! τ-polynomials, where `τ·c = c^p·τ` and multiplication is composition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::oracle::exhaustive_right_factors;
use crate::polyfield::Poly;

/// Largest base field accepted by the factorization enumerator.
pub const MAX_SKEW_FIELD: u64 = 9;
/// Largest τ-degree accepted by the factorization enumerator.
pub const MAX_SKEW_DEGREE: usize = 5;

/// `Σ a_i τ^i` over a finite field, coefficients low to high.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl SkewPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Result<Self> {
        if field.size().is_none() {
            return Err(Error::InvalidInput("skew polynomials need a finite field".into()));
        }
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Ok(SkewPoly { field: field.clone(), coeffs })
    }

    pub fn zero(field: &Field) -> Result<Self> {
        SkewPoly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Result<Self> {
        SkewPoly::new(field, vec![field.one()])
    }

    /// `c·τ^i`.
    pub fn monomial(field: &Field, c: Scalar, i: usize) -> Result<Self> {
        let mut coeffs = vec![field.zero(); i + 1];
        coeffs[i] = c;
        SkewPoly::new(field, coeffs)
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Result<Self> {
        SkewPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// Parses `<i>:<coeff> ...` meaning `Σ coeff·τ^i`.
    pub fn parse_terms(field: &Field, text: &str) -> Result<Self> {
        let poly = Poly::parse_terms(field, text)?;
        SkewPoly::new(field, poly.coeffs().to_vec())
    }

    pub fn to_terms(&self) -> String {
        Poly::new(self.field.clone(), self.coeffs.clone()).to_terms()
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

    pub fn tau_degree(&self) -> usize {
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

    fn check(&self, other: &SkewPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `c^{p^i}`.
    fn twist(&self, c: &Scalar, i: usize) -> Scalar {
        (0..i).fold(c.clone(), |acc, _| self.field.frobenius(&acc))
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        SkewPoly::new(f, (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        SkewPoly::new(f, (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    /// `self · other`: `(a τ^i)(b τ^j) = a b^{p^i} τ^{i+j}`.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = f.add(&out[i + j], &f.mul(a, &self.twist(b, i)));
                }
            }
        }
        SkewPoly::new(f, out)
    }

    /// `f = q·d + r` with `τ-deg r < τ-deg d`.
    pub fn right_divide(&self, d: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let m = d.tau_degree();
        let lead = d.leading();
        let mut r = self.clone();
        let mut q = vec![f.zero(); self.coeffs.len().saturating_sub(m).max(1)];
        while !r.is_zero() && r.tau_degree() >= m {
            let j = r.tau_degree() - m;
            let c = f.div(&r.leading(), &self.twist(&lead, j))?;
            let term = SkewPoly::monomial(f, c.clone(), j)?;
            r = r.sub(&term.mul(d)?)?;
            q[j] = c;
        }
        Ok((SkewPoly::new(f, q)?, r))
    }

    /// `Σ a_i X^{p^i}`.
    pub fn to_additive(&self) -> Poly {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let terms: Vec<(usize, Scalar)> =
            self.coeffs.iter().enumerate().map(|(i, c)| (p.pow(i as u32), c.clone())).collect();
        if terms.is_empty() {
            return Poly::zero(f);
        }
        Poly::from_terms(f, &terms)
    }

    /// Inverse of [`SkewPoly::to_additive`]; fails with the first exponent
    /// that is not a power of `p`.
    pub fn from_additive(poly: &Poly) -> Result<SkewPoly> {
        let f = poly.field();
        let p = f.characteristic() as usize;
        if p == 0 {
            return Err(Error::InvalidInput("additive polynomials need a finite field".into()));
        }
        let mut coeffs = Vec::new();
        for (e, c) in poly.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = power_log(e, p).ok_or(Error::NotAdditive(e))?;
            if coeffs.len() <= i {
                coeffs.resize(i + 1, f.zero());
            }
            coeffs[i] = c.clone();
        }
        SkewPoly::new(f, coeffs)
    }
}

/// `i` with `p^i = e`.
fn power_log(e: usize, p: usize) -> Option<usize> {
    let mut v = 1;
    let mut i = 0;
    while v < e {
        v *= p;
        i += 1;
    }
    (v == e).then_some(i)
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let coef = if c.is_one() && i > 0 { String::new() } else { c.to_string() };
                match (i, coef.is_empty()) {
                    (0, _) => coef,
                    (1, true) => "τ".into(),
                    (1, false) => format!("{coef}*τ"),
                    (_, true) => format!("τ^{i}"),
                    (_, false) => format!("{coef}*τ^{i}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `u · v`.
pub fn skew_mul(u: &SkewPoly, v: &SkewPoly) -> Result<SkewPoly> {
    u.mul(v)
}

fn check_caps(f: &SkewPoly) -> Result<()> {
    let q = f.field.size().unwrap_or(u64::MAX);
    if q > MAX_SKEW_FIELD {
        return Err(Error::CapExceeded { cap: MAX_SKEW_FIELD as usize });
    }
    if f.tau_degree() > MAX_SKEW_DEGREE {
        return Err(Error::CapExceeded { cap: MAX_SKEW_DEGREE });
    }
    Ok(())
}

/// Every monic skew polynomial of τ-degree `r`, in code order.
fn monic_of_degree(field: &Field, r: usize) -> Result<Vec<SkewPoly>> {
    let q = field.size().expect("finite field");
    let count = q.pow(r as u32);
    let mut out = Vec::with_capacity(count as usize);
    for code in 0..count {
        let mut c = code;
        let mut coeffs = Vec::with_capacity(r + 1);
        for _ in 0..r {
            coeffs.push(Scalar::Finite(c % q));
            c /= q;
        }
        coeffs.push(field.one());
        out.push(SkewPoly::new(field, coeffs)?);
    }
    Ok(out)
}

/// Monic right factors of `f` of τ-degree `r` with their left quotients.
pub fn monic_right_factors(f: &SkewPoly, r: usize) -> Result<Vec<(SkewPoly, SkewPoly)>> {
    check_caps(f)?;
    let mut out = Vec::new();
    for d in monic_of_degree(&f.field, r)? {
        let (q, rem) = f.right_divide(&d)?;
        if rem.is_zero() {
            out.push((q, d));
        }
    }
    Ok(out)
}

/// No monic right factor of τ-degree strictly between 0 and `τ-deg f`.
pub fn is_irreducible(f: &SkewPoly) -> Result<bool> {
    if f.tau_degree() == 0 {
        return Ok(false);
    }
    for r in 1..f.tau_degree() {
        if !monic_right_factors(f, r)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A complete factorization `f = f_1 · … · f_k`, leftmost first; every
/// factor but the leftmost is monic.
pub type SkewFactorization = Vec<SkewPoly>;

/// All complete factorizations of `f` into irreducible factors.
pub fn all_complete_skew_factorizations(f: &SkewPoly) -> Result<Vec<SkewFactorization>> {
    if f.tau_degree() == 0 {
        return Err(Error::InvalidInput("τ-degree must be at least 1".into()));
    }
    check_caps(f)?;
    let mut irreducible = BTreeMap::new();
    factorizations(f, &mut irreducible)
}

fn factorizations(
    f: &SkewPoly,
    irreducible: &mut BTreeMap<Vec<Scalar>, bool>,
) -> Result<Vec<SkewFactorization>> {
    let mut out = Vec::new();
    for r in 1..f.tau_degree() {
        for (q, d) in monic_right_factors(f, r)? {
            let known = irreducible.get(&d.coeffs).copied();
            let irr = match known {
                Some(v) => v,
                None => {
                    let v = is_irreducible(&d)?;
                    irreducible.insert(d.coeffs.clone(), v);
                    v
                }
            };
            if !irr {
                continue;
            }
            for mut left in factorizations(&q, irreducible)? {
                left.push(d.clone());
                out.push(left);
            }
        }
    }
    if out.is_empty() {
        out.push(vec![f.clone()]);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralOracleCheck {
    pub general_right_degrees: Vec<usize>,
    pub skew_right_degrees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OreReport {
    pub skew: String,
    pub additive: String,
    pub factorizations: Vec<Vec<String>>,
    pub length: usize,
    pub degree_multiset: Vec<usize>,
    pub general: Option<GeneralOracleCheck>,
}

/// Field size and total degree up to which the general oracle also runs.
pub const GENERAL_ORACLE_FIELD: u64 = 4;
pub const GENERAL_ORACLE_DEGREE: usize = 16;

/// Checks that all complete factorizations of `f` share length and τ-degree
/// multiset, and at small scale that every general right composition factor
/// of the additive polynomial has the degree of some skew right factor.
pub fn verify_ore_invariance(f: &SkewPoly) -> Result<OreReport> {
    let facs = all_complete_skew_factorizations(f)?;
    let profile = |fac: &SkewFactorization| {
        let mut d: Vec<usize> = fac.iter().map(SkewPoly::tau_degree).collect();
        d.sort_unstable();
        d
    };
    let first = profile(&facs[0]);
    for fac in &facs[1..] {
        if profile(fac) != first {
            let shown: Vec<String> = fac.iter().map(ToString::to_string).collect();
            return Err(Error::TheoremViolated(format!(
                "factorization [{}] of {f} has τ-degrees {:?}, another has {first:?}",
                shown.join(", "),
                profile(fac)
            )));
        }
    }

    let additive = f.to_additive();
    let q = f.field.size().expect("finite field");
    let general = if q <= GENERAL_ORACLE_FIELD && additive.degree() <= GENERAL_ORACLE_DEGREE {
        let p = f.field.characteristic() as usize;
        let n = additive.degree();
        let skew_right_degrees: Vec<usize> = (1..f.tau_degree())
            .filter_map(|r| match monic_right_factors(f, r) {
                Ok(v) if v.is_empty() => None,
                Ok(_) => Some(Ok(p.pow(r as u32))),
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_>>()?;
        let mut general_right_degrees = BTreeSet::new();
        for r in 2..n {
            if n.is_multiple_of(r) && !exhaustive_right_factors(&additive, r)?.is_empty() {
                general_right_degrees.insert(r);
            }
        }
        for &r in &general_right_degrees {
            if !skew_right_degrees.contains(&r) {
                return Err(Error::TheoremViolated(format!(
                    "{additive} has a right composition factor of degree {r} but no additive one"
                )));
            }
        }
        Some(GeneralOracleCheck {
            general_right_degrees: general_right_degrees.into_iter().collect(),
            skew_right_degrees,
        })
    } else {
        None
    };

    Ok(OreReport {
        skew: f.to_string(),
        additive: additive.to_string(),
        factorizations: facs.iter().map(|fac| fac.iter().map(ToString::to_string).collect()).collect(),
        length: first.len(),
        degree_multiset: first,
        general,
    })
}

/// Every skew polynomial over `field` of τ-degree `1..=max_degree`.
pub fn all_skew_polys(field: &Field, max_degree: usize) -> Result<Vec<SkewPoly>> {
    let q = field.size().ok_or_else(|| Error::InvalidInput("finite field required".into()))?;
    let mut out = Vec::new();
    for r in 1..=max_degree {
        for code in 0..q.pow(r as u32 + 1) {
            let mut c = code;
            let coeffs: Vec<Scalar> = (0..=r)
                .map(|_| {
                    let v = Scalar::Finite(c % q);
                    c /= q;
                    v
                })
                .collect();
            if !coeffs[r].is_zero() {
                out.push(SkewPoly::new(field, coeffs)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2(c: &[i64]) -> SkewPoly {
        SkewPoly::from_i64s(&Field::fq(2).unwrap(), c).unwrap()
    }

    #[test]
    fn twist_rule() {
        let f4 = Field::fq(4).unwrap();
        let w = f4.element(2).unwrap();
        let tau = SkewPoly::monomial(&f4, f4.one(), 1).unwrap();
        let wc = SkewPoly::monomial(&f4, w.clone(), 0).unwrap();
        let left = skew_mul(&tau, &wc).unwrap();
        assert_eq!(left, SkewPoly::monomial(&f4, f4.mul(&w, &w), 1).unwrap());
        assert_ne!(left, skew_mul(&wc, &tau).unwrap());
    }

    #[test]
    fn composition_correspondence() {
        let prod = skew_mul(&f2(&[0, 1]), &f2(&[1, 1])).unwrap();
        assert_eq!(prod, f2(&[0, 1, 1]));
        let x = prod.to_additive();
        assert_eq!(x.to_terms(), "4:1 2:1");
        assert_eq!(SkewPoly::from_additive(&x).unwrap(), prod);
        let bad = Poly::from_i64s(&Field::fq(2).unwrap(), &[0, 1, 0, 1]);
        assert_eq!(SkewPoly::from_additive(&bad), Err(Error::NotAdditive(3)));
    }

    #[test]
    fn division_examples() {
        let f = f2(&[0, 1, 1]);
        assert_eq!(f.right_divide(&f2(&[0, 1])).unwrap(), (f2(&[1, 1]), f2(&[])));
        assert_eq!(f.right_divide(&f2(&[1, 1])).unwrap(), (f2(&[0, 1]), f2(&[])));
        assert!(!f2(&[0, 0, 1]).right_divide(&f2(&[1, 1])).unwrap().1.is_zero());
    }

    #[test]
    fn factorization_examples() {
        let facs = all_complete_skew_factorizations(&f2(&[0, 1, 1])).unwrap();
        assert_eq!(facs, vec![vec![f2(&[1, 1]), f2(&[0, 1])], vec![f2(&[0, 1]), f2(&[1, 1])]]);
        assert_eq!(all_complete_skew_factorizations(&f2(&[1, 1, 1])).unwrap(), vec![vec![f2(&[1, 1, 1])]]);
        assert_eq!(all_complete_skew_factorizations(&f2(&[0, 0, 1])).unwrap(), vec![vec![f2(&[0, 1]); 2]]);
    }

    #[test]
    fn irreducible_has_no_general_right_factor() {
        let report = verify_ore_invariance(&f2(&[1, 1, 1])).unwrap();
        assert_eq!(report.length, 1);
        assert!(report.general.unwrap().general_right_degrees.is_empty());
    }

    #[test]
    fn caps() {
        let f = SkewPoly::monomial(&Field::fq(2).unwrap(), Field::fq(2).unwrap().one(), 6).unwrap();
        assert!(matches!(all_complete_skew_factorizations(&f), Err(Error::CapExceeded { .. })));
    }
}

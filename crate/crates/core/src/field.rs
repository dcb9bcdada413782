//! Exact scalars: ℚ with arbitrary precision, and finite fields `F_{p^k}`.
//!
//! A finite-field element is stored as the integer code `Σ d_i p^i` of its
//! digit vector `(d_0, .., d_{k-1})` relative to the field's modulus. For a
//! prime field the code is the residue itself.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported finite-field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `F_p[t]/(m(t))` with `m` monic irreducible of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u64,
    k: usize,
    /// Monic modulus, low to high, length `k + 1`.
    modulus: Vec<u64>,
    size: u64,
    builtin: bool,
}

impl GaloisField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > MAX_FIELD_SIZE {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(GaloisField { p, k: 1, modulus: vec![0, 1], size: p, builtin: true })
    }

    /// `F_p[t]/(modulus)`; `modulus` is low to high and must be monic and
    /// irreducible.
    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let k = modulus.len().saturating_sub(1);
        if k == 0 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidInput("modulus must be monic with reduced digits".into()));
        }
        let size = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p).filter(|&s| s <= MAX_FIELD_SIZE));
        let size = size.ok_or_else(|| Error::InvalidInput("field too large".into()))?;
        if !irreducible_mod_p(p, &modulus) {
            return Err(Error::InvalidInput("modulus is reducible".into()));
        }
        Ok(GaloisField { p, k, modulus, size, builtin: false })
    }

    /// `F_4 = F_2[t]/(t²+t+1)` and `F_9 = F_3[t]/(t²+1)`, or a prime field.
    pub fn builtin(q: u64) -> Result<Self> {
        let mut f = match q {
            4 => Self::extension(2, vec![1, 1, 1])?,
            9 => Self::extension(3, vec![1, 0, 1])?,
            _ => return Self::prime(q),
        };
        f.builtin = true;
        Ok(f)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, code: u64) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.k);
        let mut c = code;
        for _ in 0..self.k {
            d.push(c % self.p);
            c /= self.p;
        }
        d
    }

    fn code(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.code(&s)
    }

    fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u64> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.code(&d)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return a * b % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for top in (self.k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate().take(self.k) {
                let idx = top - self.k + i;
                prod[idx] = (prod[idx] + (self.p - c) * m) % self.p;
            }
            prod[top] = 0;
        }
        self.code(&prod[..self.k])
    }

    fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.size - 2))
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.builtin {
            return write!(f, "F{}", self.size);
        }
        write!(f, "F{}^{} mod", self.p, self.k)?;
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c != 0 {
                write!(f, " {i}:{c}")?;
            }
        }
        Ok(())
    }
}

/// Irreducibility by absence of monic factors of degree `≤ k/2`.
fn irreducible_mod_p(p: u64, m: &[u64]) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut cand: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            cand.push(1);
            if poly_rem_mod_p(p, m, &cand).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_mod_p(p: u64, a: &[u64], monic: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let top = r.len() - 1;
        let c = r[top];
        if c != 0 {
            for (i, &m) in monic.iter().enumerate() {
                let idx = top - d + i;
                r[idx] = (r[idx] + (p - c) * m) % p;
            }
        }
        r.pop();
    }
    r
}

/// The field a polynomial lives over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Finite(Arc<GaloisField>),
}

/// An element of some [`Field`]. Arithmetic goes through the field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Finite(u64),
}

impl Field {
    pub fn finite(gf: GaloisField) -> Self {
        Field::Finite(Arc::new(gf))
    }

    /// `F_p`, or the built-in `F_4`, `F_9`.
    pub fn fq(q: u64) -> Result<Self> {
        Ok(Field::finite(GaloisField::builtin(q)?))
    }

    /// Parses `Q`, `F<q>` (prime, 4 or 9), `F<p>^<k>` (4 or 9), or
    /// `F<p>^<k> mod <deg>:<digit> ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "Q" {
            return Ok(Field::Rational);
        }
        let bad = || Error::InvalidInput(format!("unknown field {text:?}"));
        let rest = text.strip_prefix('F').ok_or_else(bad)?;
        let (head, modulus) = match rest.split_once(" mod ") {
            Some((h, m)) => (h.trim(), Some(m.trim())),
            None => (rest, None),
        };
        let (p, k) = match head.split_once('^') {
            Some((p, k)) => {
                (p.parse::<u64>().map_err(|_| bad())?, k.parse::<u32>().map_err(|_| bad())?)
            }
            None => (head.parse::<u64>().map_err(|_| bad())?, 1),
        };
        match modulus {
            None if k == 1 => Field::fq(p),
            None => {
                let q = p.checked_pow(k).ok_or_else(bad)?;
                if q == 4 || q == 9 {
                    Field::fq(q)
                } else {
                    Err(Error::InvalidInput(format!("F{p}^{k} needs an explicit modulus")))
                }
            }
            Some(m) => {
                let mut digits = vec![0u64; k as usize + 1];
                for term in m.split_whitespace() {
                    let (d, c) = term.split_once(':').ok_or_else(bad)?;
                    let d: usize = d.parse().map_err(|_| bad())?;
                    let c: u64 = c.parse().map_err(|_| bad())?;
                    if d > k as usize {
                        return Err(Error::InvalidInput("modulus degree exceeds k".into()));
                    }
                    digits[d] = c;
                }
                Ok(Field::finite(GaloisField::extension(p, digits)?))
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Finite(gf) => gf.p,
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn size(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Finite(gf) => Some(gf.size),
        }
    }

    /// All elements in code order, for finite fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.size().map(|q| (0..q).map(Scalar::Finite).collect())
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Finite(_) => Scalar::Finite(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Finite(_) => Scalar::Finite(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Finite(gf) => {
                let r = n.rem_euclid(gf.p as i64) as u64;
                Scalar::Finite(r)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Finite(gf) => {
                let r = n.mod_floor(&BigInt::from(gf.p));
                Scalar::Finite(r.to_u64().expect("residue fits"))
            }
        }
    }

    /// The image of `num/den`.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Finite(_) => {
                let d = self.from_bigint(den);
                self.div(&self.from_bigint(num), &d)
            }
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        self.from_ratio(r.numer(), r.denom())
    }

    /// A finite-field element from its code.
    pub fn element(&self, code: u64) -> Result<Scalar> {
        match self {
            Field::Finite(gf) if code < gf.size => Ok(Scalar::Finite(code)),
            _ => Err(Error::InvalidInput(format!("{code} is not an element of {self}"))),
        }
    }

    /// Text that [`parse_scalar`] reads back as `a`.
    pub fn scalar_text(&self, a: &Scalar) -> String {
        match a {
            Scalar::Finite(c) if *c >= self.characteristic() => format!("#{c}"),
            _ => a.to_string(),
        }
    }

    fn gf(&self) -> &GaloisField {
        match self {
            Field::Finite(gf) => gf,
            Field::Rational => unreachable!("finite-field operation on ℚ"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Finite(x), Scalar::Finite(y)) => Scalar::Finite(self.gf().add(*x, *y)),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Finite(x) => Scalar::Finite(self.gf().neg(*x)),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Finite(x), Scalar::Finite(y)) => Scalar::Finite(self.gf().mul(*x, *y)),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match a {
            Scalar::Rational(x) if x.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(x) => Ok(Scalar::Rational(x.recip())),
            Scalar::Finite(x) => Ok(Scalar::Finite(self.gf().inv(*x)?)),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: u64) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(num_traits::pow(x.clone(), e as usize)),
            Scalar::Finite(x) => Scalar::Finite(self.gf().pow(*x, e)),
        }
    }

    /// `n · 1` in the field.
    pub fn from_usize(&self, n: usize) -> Scalar {
        self.from_i64(n as i64)
    }

    /// The Frobenius `a ↦ a^p` (identity on ℚ).
    pub fn frobenius(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rational => a.clone(),
            Field::Finite(gf) => self.pow(a, gf.p),
        }
    }

    /// Multiplicative order of a nonzero finite-field element.
    pub fn multiplicative_order(&self, a: &Scalar) -> Option<u64> {
        let q = self.size()?;
        if a.is_zero() {
            return None;
        }
        (1..q).find(|&e| self.pow(a, e).is_one())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Finite(gf) => write!(f, "{gf}"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Finite(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Finite(x) => *x == 1,
        }
    }

    /// True for negative rationals; finite-field elements have no sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(x) if x.is_negative())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(x) => Some(x),
            Scalar::Finite(_) => None,
        }
    }

    pub fn code(&self) -> Option<u64> {
        match self {
            Scalar::Finite(c) => Some(*c),
            Scalar::Rational(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(x) => write!(f, "{x}"),
            Scalar::Finite(c) => write!(f, "{c}"),
        }
    }
}

/// Parses an integer or `num/den` coefficient into `field`. Over a finite
/// field, `#<code>` names an element by its code.
pub fn parse_scalar(field: &Field, text: &str) -> Result<Scalar> {
    let bad = || Error::InvalidInput(format!("bad coefficient {text:?}"));
    if let Some(code) = text.trim().strip_prefix('#') {
        return field.element(code.parse().map_err(|_| bad())?);
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    field.from_ratio(&num, &den)
}

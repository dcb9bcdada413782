//! Reduced rational functions, Möbius maps, and automorphism groups of
//! rational functions over small prime fields.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Scalar};
use crate::polyfield::{Decomposition, LinearPoly, Poly};

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den)?;
        let g = if g.is_zero() { den.clone() } else { g };
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading();
        let inv = den.field().inv(&lead)?;
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: &Poly) -> Self {
        RationalFunction { num: p.clone(), den: Poly::one(p.field()) }
    }

    pub fn x(field: &Field) -> Self {
        RationalFunction::from_poly(&Poly::x(field))
    }

    /// Parses numerator and denominator term lists.
    pub fn parse_terms(field: &Field, num: &str, den: &str) -> Result<Self> {
        RationalFunction::new(Poly::parse_terms(field, num)?, Poly::parse_terms(field, den)?)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// `N(a/b)·b^d` and `D(a/b)·b^d` with `d = deg self`, unreduced.
    fn homogenized(&self, inner: &RationalFunction) -> Result<(Poly, Poly)> {
        let d = self.degree();
        let (a, b) = (&inner.num, &inner.den);
        let field = self.field();
        let a_pows: Vec<Poly> = (0..=d).map(|i| a.pow(i)).collect();
        let b_pows: Vec<Poly> = (0..=d).map(|i| b.pow(i)).collect();
        let eval = |p: &Poly| -> Result<Poly> {
            let mut acc = Poly::zero(field);
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&a_pows[i].mul(&b_pows[d - i])?.scale(c))?;
                }
            }
            Ok(acc)
        };
        Ok((eval(&self.num)?, eval(&self.den)?))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RationalFunction) -> Result<RationalFunction> {
        if self.field() != inner.field() {
            return Err(Error::FieldMismatch);
        }
        let (n, d) = self.homogenized(inner)?;
        let out = RationalFunction::new(n, d)?;
        if out.degree() == 0 && self.degree() > 0 && inner.degree() > 0 {
            return Err(Error::DegenerateResult);
        }
        Ok(out)
    }

    /// `self ∘ inner == self`, decided by cross-multiplying.
    pub fn is_fixed_by(&self, inner: &RationalFunction) -> Result<bool> {
        let (n, d) = self.homogenized(inner)?;
        Ok(n.mul(&self.den)? == d.mul(&self.num)?)
    }

    pub fn evaluate(&self, x: &ProjPoint) -> ProjPoint {
        let field = self.field();
        match x {
            ProjPoint::Finite(v) => {
                let d = self.den.evaluate(v);
                if d.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(field.div(&self.num.evaluate(v), &d).expect("nonzero"))
                }
            }
            ProjPoint::Infinity => match self.num.degree().cmp(&self.den.degree()) {
                std::cmp::Ordering::Greater => ProjPoint::Infinity,
                std::cmp::Ordering::Less => ProjPoint::Finite(field.zero()),
                std::cmp::Ordering::Equal => {
                    ProjPoint::Finite(field.div(&self.num.leading(), &self.den.leading()).expect("nonzero"))
                }
            },
        }
    }

    /// The single point over `∞`, when there is exactly one.
    pub fn unique_pole(&self) -> Option<ProjPoint> {
        let k = self.den.degree();
        if k == 0 {
            return (self.num.degree() > 0).then_some(ProjPoint::Infinity);
        }
        if self.num.degree() > k {
            return None;
        }
        let field = self.field();
        let root = match field.elements() {
            Some(all) => all.into_iter().find(|q| self.den.evaluate(q).is_zero())?,
            None => field.neg(&field.div(&self.den.coeff(k - 1), &field.from_usize(k)).ok()?),
        };
        let linear = Poly::new(field.clone(), vec![field.neg(&root), field.one()]);
        (linear.pow(k) == self.den).then_some(ProjPoint::Finite(root))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(Scalar),
    Infinity,
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(v) => write!(f, "{v}"),
            ProjPoint::Infinity => write!(f, "∞"),
        }
    }
}

/// `(αX + β)/(γX + δ)` with `αδ − βγ ≠ 0`, scaled so the first nonzero
/// entry of `(α, β, γ, δ)` is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    field: Field,
    m: [Scalar; 4],
}

impl MobiusMap {
    pub fn new(field: &Field, alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> Result<Self> {
        let det = field.sub(&field.mul(&alpha, &delta), &field.mul(&beta, &gamma));
        if det.is_zero() {
            return Err(Error::InvalidInput("singular Möbius matrix".into()));
        }
        let m = [alpha, beta, gamma, delta];
        let first = m.iter().find(|v| !v.is_zero()).expect("nonsingular").clone();
        let inv = field.inv(&first)?;
        Ok(MobiusMap { field: field.clone(), m: m.map(|v| field.mul(&v, &inv)) })
    }

    pub fn identity(field: &Field) -> Self {
        MobiusMap::new(field, field.one(), field.zero(), field.zero(), field.one()).expect("nonsingular")
    }

    /// `X ↦ 1/X`.
    pub fn reciprocal(field: &Field) -> Self {
        MobiusMap::new(field, field.zero(), field.one(), field.one(), field.zero()).expect("nonsingular")
    }

    pub fn from_linear(l: &LinearPoly) -> Self {
        let f = l.field();
        MobiusMap::new(f, l.a().clone(), l.b().clone(), f.zero(), f.one()).expect("nonzero slope")
    }

    /// A map sending `∞` to `q`.
    pub fn sending_infinity_to(field: &Field, q: &ProjPoint) -> Self {
        match q {
            ProjPoint::Infinity => MobiusMap::identity(field),
            // (qX + 1)/X
            ProjPoint::Finite(v) => {
                MobiusMap::new(field, v.clone(), field.one(), field.one(), field.zero()).expect("nonsingular")
            }
        }
    }

    pub fn entries(&self) -> &[Scalar; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == MobiusMap::identity(&self.field)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MobiusMap) -> MobiusMap {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        let [e, g, h, k] = &inner.m;
        let dot = |x: &Scalar, y: &Scalar, z: &Scalar, w: &Scalar| f.add(&f.mul(x, y), &f.mul(z, w));
        MobiusMap::new(f, dot(a, e, b, h), dot(a, g, b, k), dot(c, e, d, h), dot(c, g, d, k))
            .expect("product of invertible maps")
    }

    pub fn inverse(&self) -> MobiusMap {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        MobiusMap::new(f, d.clone(), f.neg(b), f.neg(c), a.clone()).expect("nonsingular")
    }

    pub fn apply(&self, x: &ProjPoint) -> ProjPoint {
        self.as_rational_function().evaluate(x)
    }

    pub fn as_rational_function(&self) -> RationalFunction {
        let f = &self.field;
        let [a, b, c, d] = &self.m;
        RationalFunction::new(
            Poly::new(f.clone(), vec![b.clone(), a.clone()]),
            Poly::new(f.clone(), vec![d.clone(), c.clone()]),
        )
        .expect("nonzero denominator")
    }

    /// Every Möbius map over a finite field, in code order of `(α, β, γ, δ)`.
    pub fn all(field: &Field) -> Result<Vec<MobiusMap>> {
        let elems =
            field.elements().ok_or_else(|| Error::InvalidInput("finite field required".into()))?;
        let (zero, one) = (field.zero(), field.one());
        let mut out = Vec::new();
        // α = 1
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    if let Ok(m) = MobiusMap::new(field, one.clone(), b.clone(), c.clone(), d.clone()) {
                        out.push(m);
                    }
                }
            }
        }
        // α = 0, β = 1, γ ≠ 0
        for c in elems.iter().filter(|c| !c.is_zero()) {
            for d in &elems {
                out.push(MobiusMap::new(field, zero.clone(), one.clone(), c.clone(), d.clone())?);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_rational_function())
    }
}

/// Rewrites a decomposition of the polynomial `f` into rational functions,
/// outermost first, as the equivalent canonical polynomial decomposition.
///
/// At each junction the point over `∞` is moved to `∞` by a Möbius map
/// inserted between the two factors.
pub fn normalize_poly_decomposition(f: &Poly, factors: &[RationalFunction]) -> Result<Vec<Poly>> {
    let mut fs = factors.to_vec();
    let first = fs.first().ok_or_else(|| Error::InvalidInput("no factors".into()))?;
    let field = first.field().clone();
    let mut composite = fs.last().expect("nonempty").clone();
    for outer in fs.iter().rev().skip(1) {
        composite = outer.compose(&composite)?;
    }
    if composite != RationalFunction::from_poly(f) {
        return Err(Error::NotAPolynomialComposite(format!("the factors compose to {composite}, not {f}")));
    }
    for i in 0..fs.len() {
        let q = fs[i].unique_pole().ok_or_else(|| {
            Error::NotAPolynomialComposite(format!("∞ has several preimages under {}", fs[i]))
        })?;
        let mu = MobiusMap::sending_infinity_to(&field, &q);
        fs[i] = fs[i].compose(&mu.as_rational_function())?;
        if i + 1 < fs.len() {
            fs[i + 1] = mu.inverse().as_rational_function().compose(&fs[i + 1])?;
        }
    }
    let polys: Vec<Poly> = fs
        .iter()
        .map(|r| {
            r.as_poly().cloned().ok_or_else(|| Error::InternalInconsistency(format!("{r} stayed rational")))
        })
        .collect::<Result<_>>()?;
    let canonical = Decomposition::new(polys)?.canonical();
    if canonical.compose() != *f {
        return Err(Error::InternalInconsistency("normalization changed the composite".into()));
    }
    Ok(canonical.factors().to_vec())
}

/// Largest field for [`aut_search`].
pub const MAX_AUT_FIELD: u64 = 31;

/// All Möbius maps `μ` with `f ∘ μ = f`.
///
/// The result is checked to be a group of order at most `deg f`, and for a
/// polynomial to fix `∞`.
pub fn aut_search(f: &RationalFunction) -> Result<Vec<MobiusMap>> {
    let field = f.field();
    match field.size() {
        Some(q) if q <= MAX_AUT_FIELD => {}
        _ => return Err(Error::CapExceeded { cap: MAX_AUT_FIELD as usize }),
    }
    let mut out = Vec::new();
    for mu in MobiusMap::all(field)? {
        if f.is_fixed_by(&mu.as_rational_function())? {
            out.push(mu);
        }
    }
    if out.len() > f.degree() {
        return Err(Error::TheoremViolated(format!(
            "Aut({f}) has {} elements, more than the degree {}",
            out.len(),
            f.degree()
        )));
    }
    for a in &out {
        for b in &out {
            if !out.contains(&a.compose(b)) {
                return Err(Error::InternalInconsistency(format!("Aut({f}) is not closed")));
            }
        }
    }
    if f.is_polynomial() && out.iter().any(|m| m.apply(&ProjPoint::Infinity) != ProjPoint::Infinity) {
        return Err(Error::TheoremViolated(format!("an automorphism of {f} moves ∞")));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub field: String,
    pub f: String,
    pub f2: String,
    pub f1: String,
    pub aut_f: usize,
    pub aut_f2: usize,
    pub aut_f1: usize,
    pub product: usize,
    pub divides: bool,
    pub aut_f_maps: Vec<String>,
}

/// Compares `|Aut(f₂ ∘ f₁)|` with `|Aut(f₂)|·|Aut(f₁)|`.
pub fn counterexample_harness(f2: &RationalFunction, f1: &RationalFunction) -> Result<CounterexampleReport> {
    let f = f2.compose(f1)?;
    let aut_f = aut_search(&f)?;
    let (a2, a1) = (aut_search(f2)?.len(), aut_search(f1)?.len());
    let product = a2 * a1;
    Ok(CounterexampleReport {
        field: f.field().to_string(),
        f: f.to_string(),
        f2: f2.to_string(),
        f1: f1.to_string(),
        aut_f: aut_f.len(),
        aut_f2: a2,
        aut_f1: a1,
        product,
        divides: product % aut_f.len() == 0,
        aut_f_maps: aut_f.iter().map(ToString::to_string).collect(),
    })
}

/// `f₁ = X + 1/X`, `f₂ = X³ − 3X` and `f = X³ + X⁻³` over `F_p`,
/// `p ≡ 1 (mod 3)`.
pub fn cubic_reciprocal_example(p: u64) -> Result<(RationalFunction, RationalFunction, RationalFunction)> {
    if !is_prime(p) || p % 3 != 1 || p > MAX_AUT_FIELD {
        return Err(Error::BadPrime(p));
    }
    let field = Field::fq(p)?;
    let f1 = RationalFunction::new(Poly::from_i64s(&field, &[1, 0, 1]), Poly::from_i64s(&field, &[0, 1]))?;
    let f2 = RationalFunction::from_poly(&Poly::from_i64s(&field, &[0, -3, 0, 1]));
    let f = RationalFunction::new(
        Poly::from_i64s(&field, &[1, 0, 0, 0, 0, 0, 1]),
        Poly::from_i64s(&field, &[0, 0, 0, 1]),
    )?;
    Ok((f2, f1, f))
}

/// The cubic-reciprocal counterexample to divisibility of automorphism
/// orders along a decomposition.
pub fn cubic_reciprocal_harness(p: u64) -> Result<CounterexampleReport> {
    let (f2, f1, f) = cubic_reciprocal_example(p)?;
    if f2.compose(&f1)? != f {
        return Err(Error::InternalInconsistency("(X³ − 3X) ∘ (X + 1/X) ≠ X³ + X⁻³".into()));
    }
    counterexample_harness(&f2, &f1)
}

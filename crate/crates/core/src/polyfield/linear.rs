use std::fmt;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// The degree-one polynomial `aX + b`, `a ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearPoly {
    field: Field,
    a: Scalar,
    b: Scalar,
}

impl LinearPoly {
    pub fn new(field: &Field, a: Scalar, b: Scalar) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidInput("linear map with zero slope".into()));
        }
        Ok(LinearPoly { field: field.clone(), a, b })
    }

    pub fn identity(field: &Field) -> Self {
        LinearPoly { field: field.clone(), a: field.one(), b: field.zero() }
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn as_poly(&self) -> Poly {
        Poly::new(self.field.clone(), vec![self.b.clone(), self.a.clone()])
    }

    pub fn apply(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        f.add(&f.mul(&self.a, x), &self.b)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearPoly) -> LinearPoly {
        let f = &self.field;
        LinearPoly {
            field: f.clone(),
            a: f.mul(&self.a, &inner.a),
            b: f.add(&f.mul(&self.a, &inner.b), &self.b),
        }
    }

    /// `(1/a)X − b/a`.
    pub fn inverse(&self) -> LinearPoly {
        let f = &self.field;
        let ai = f.inv(&self.a).expect("slope is nonzero");
        LinearPoly { field: f.clone(), b: f.neg(&f.mul(&self.b, &ai)), a: ai }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl fmt::Display for LinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let f = Field::Rational;
        let mu = LinearPoly::new(&f, f.from_i64(3), f.from_i64(-2)).unwrap();
        assert!(mu.compose(&mu.inverse()).is_identity());
        assert!(mu.inverse().compose(&mu).is_identity());
        assert_eq!(mu.as_poly().compose(&mu.inverse().as_poly()).unwrap(), Poly::x(&f));
        assert!(LinearPoly::new(&f, f.zero(), f.one()).is_err());
    }
}

//! Benchmark inputs shared by the criterion targets.

use ritt_core::chains::ChainContext;
use ritt_core::field::Field;
use ritt_core::fixtures;
use ritt_core::polyfield::Poly;

pub fn context(name: &str) -> ChainContext {
    fixtures::context(name).expect("catalog context")
}

pub fn poly(name: &str) -> Poly {
    fixtures::polys()
        .expect("catalog polynomials")
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f)
        .expect("catalog polynomial")
}

/// `X^n` over the given field.
pub fn power(field: &Field, n: usize) -> Poly {
    Poly::monomial(field, field.one(), n)
}

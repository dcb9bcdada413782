//! Univariate polynomials over ℚ and `F_{p^k}`: arithmetic, tame functional
//! decomposition, automorphism groups and related invariants.
//!
//! Decompositions list factors outermost first, so `[X³, X²]` is `X³ ∘ X²`.

mod decompose;
mod invariants;
mod linear;
mod poly;

pub use decompose::{
    all_complete_decompositions, canonical_right_factors, check_tame, left_quotient,
    right_factor, Decomposition,
};
pub use invariants::{
    aut_group, chebyshev_normalized, dickson, factorable_core, gamma_group, gamma_order,
    is_factorable, power, verify_poly_theorems, DecompositionSummary, GammaOrder,
    PolyTheoremReport, FACTORABLE_DEGREE_CAP,
};
pub use linear::LinearPoly;
pub use poly::Poly;

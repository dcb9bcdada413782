//! Exact tools for studying functional decompositions through monodromy.
//!
//! A decomposition of a cover corresponds to a chain of subgroups between its
//! monodromy group `G` and a point stabilizer `H`. The [`permgroup`] and
//! [`chains`] modules work on that group side; [`polyfield`], [`additive`],
//! [`laurent`] and [`ratfunc`] handle the concrete objects (polynomials over
//! ℚ and finite fields, additive polynomials, branch expansions, rational
//! functions).

pub mod additive;
pub mod chains;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod formats;
pub mod laurent;
pub mod oracle;
pub mod permgroup;
pub mod polyfield;
pub mod ratfunc;
pub mod report;
pub mod suite;

pub use error::{Error, Result};

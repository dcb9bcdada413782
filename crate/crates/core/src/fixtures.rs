//! The shipped fixture catalog, embedded at compile time.

use crate::additive::SkewPoly;
use crate::chains::ChainContext;
use crate::error::{Error, Result};
use crate::formats::{parse_context, parse_pair_file, parse_poly_file, parse_skew_file};
use crate::polyfield::Poly;
use crate::ratfunc::RationalFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    Context,
    Poly,
    Skew,
    Pair,
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: FixtureKind,
    pub text: &'static str,
}

macro_rules! fixture {
    ($kind:ident, $dir:literal, $name:literal, $ext:literal) => {
        Fixture {
            name: $name,
            kind: FixtureKind::$kind,
            text: include_str!(concat!("../fixtures/", $dir, "/", $name, ".", $ext)),
        }
    };
}

pub const CATALOG: &[Fixture] = &[
    fixture!(Context, "groups", "s3_natural", "ctx"),
    fixture!(Context, "groups", "s4_s3", "ctx"),
    fixture!(Context, "groups", "d6", "ctx"),
    fixture!(Context, "groups", "c6_regular", "ctx"),
    fixture!(Context, "groups", "q8_regular", "ctx"),
    fixture!(Context, "groups", "m16_regular", "ctx"),
    fixture!(Context, "groups", "c2_regular", "ctx"),
    fixture!(Context, "groups", "c3_regular", "ctx"),
    fixture!(Context, "groups", "c5_regular", "ctx"),
    fixture!(Context, "groups", "c7_regular", "ctx"),
    fixture!(Context, "groups", "agl1_5", "ctx"),
    fixture!(Poly, "polys", "x6_q", "poly"),
    fixture!(Poly, "polys", "chebyshev6_q", "poly"),
    fixture!(Poly, "polys", "x4_plus_x2_q", "poly"),
    fixture!(Poly, "polys", "x4_plus_x3_q", "poly"),
    fixture!(Poly, "polys", "x12_q", "poly"),
    fixture!(Poly, "polys", "triple12_q", "poly"),
    fixture!(Poly, "polys", "fractional6_q", "poly"),
    fixture!(Poly, "polys", "x6_f7", "poly"),
    fixture!(Poly, "polys", "nine_f7", "poly"),
    fixture!(Poly, "polys", "triple8_f5", "poly"),
    fixture!(Poly, "polys", "nine_f4", "poly"),
    fixture!(Skew, "skew", "tau2_tau_f2", "skew"),
    fixture!(Skew, "skew", "tau2_tau_1_f2", "skew"),
    fixture!(Skew, "skew", "tau2_f2", "skew"),
    fixture!(Skew, "skew", "tau2_wtau_f4", "skew"),
    fixture!(Pair, "pairs", "cubic_reciprocal_f7", "pair"),
];

fn of_kind(kind: FixtureKind) -> impl Iterator<Item = &'static Fixture> {
    CATALOG.iter().filter(move |f| f.kind == kind)
}

pub fn find(name: &str) -> Option<&'static Fixture> {
    CATALOG.iter().find(|f| f.name == name)
}

pub fn contexts() -> Result<Vec<ChainContext>> {
    of_kind(FixtureKind::Context).map(|f| parse_context(f.name, f.text)).collect()
}

pub fn context(name: &str) -> Result<ChainContext> {
    match find(name) {
        Some(f) if f.kind == FixtureKind::Context => parse_context(f.name, f.text),
        _ => Err(Error::InvalidInput(format!("no context fixture named {name:?}"))),
    }
}

pub fn polys() -> Result<Vec<(&'static str, Poly)>> {
    of_kind(FixtureKind::Poly).map(|f| Ok((f.name, parse_poly_file(f.text)?))).collect()
}

pub fn skews() -> Result<Vec<(&'static str, SkewPoly)>> {
    of_kind(FixtureKind::Skew).map(|f| Ok((f.name, parse_skew_file(f.text)?))).collect()
}

pub fn pairs() -> Result<Vec<(&'static str, (RationalFunction, RationalFunction))>> {
    of_kind(FixtureKind::Pair).map(|f| Ok((f.name, parse_pair_file(f.text)?))).collect()
}

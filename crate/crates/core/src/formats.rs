//! Line-oriented `key: value` input files. Blank lines and lines starting
//! with `#` are ignored.
//!
//! - context: `name`, `degree`, `generators`, `H: stabilizer <pt>` or
//!   `H: generators <cycles>`, optional `A: generators <cycles>`
//! - polynomial: `field`, `poly: <deg>:<coeff> ...`
//! - skew polynomial: `field`, `skew: <i>:<coeff> ...`
//! - rational pair: `field`, `f2.num`, `f2.den`, `f1.num`, `f1.den`

use std::collections::BTreeMap;

use crate::additive::SkewPoly;
use crate::chains::ChainContext;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::permgroup::{parse_generator_list, PermutationGroup};
use crate::polyfield::Poly;
use crate::ratfunc::RationalFunction;

/// Parsed `key: value` lines with their 1-based line numbers.
#[derive(Debug, Clone)]
pub struct KeyValues {
    entries: BTreeMap<String, (usize, String)>,
}

impl KeyValues {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once(':').ok_or_else(|| Error::parse(i + 1, "expected `key: value`"))?;
            let key = k.trim().to_string();
            if entries.insert(key.clone(), (i + 1, v.trim().to_string())).is_some() {
                return Err(Error::parse(i + 1, format!("duplicate key {key:?}")));
            }
        }
        Ok(KeyValues { entries })
    }

    pub fn get(&self, key: &str) -> Option<(usize, &str)> {
        self.entries.get(key).map(|(l, v)| (*l, v.as_str()))
    }

    pub fn require(&self, key: &str) -> Result<(usize, &str)> {
        self.get(key).ok_or_else(|| Error::InvalidInput(format!("missing key {key:?}")))
    }

    fn field(&self) -> Result<Field> {
        let (line, v) = self.require("field")?;
        Field::parse(v).map_err(|e| Error::parse(line, e.to_string()))
    }
}

fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(line, other.to_string()),
    })
}

/// Reads a context file; `default_name` is used when no `name` key is given.
pub fn parse_context(default_name: &str, text: &str) -> Result<ChainContext> {
    let kv = KeyValues::parse(text)?;
    let name = kv.get("name").map_or(default_name, |(_, v)| v);
    let (line, deg) = kv.require("degree")?;
    let degree: usize = deg.parse().map_err(|_| Error::parse(line, format!("bad degree {deg:?}")))?;
    let (line, gens) = kv.require("generators")?;
    let g = at(line, parse_generator_list(degree, gens).and_then(|p| PermutationGroup::close(degree, &p)))?;

    let group_from = |line: usize, text: &str| -> Result<PermutationGroup> {
        let rest = text
            .strip_prefix("generators")
            .ok_or_else(|| Error::parse(line, "expected `generators <cycles>`"))?;
        at(line, parse_generator_list(degree, rest).and_then(|p| PermutationGroup::close(degree, &p)))
    };
    let a = match kv.get("A") {
        Some((line, text)) => Some(group_from(line, text)?),
        None => None,
    };
    let (line, h_text) = kv.require("H")?;
    if let Some(pt) = h_text.strip_prefix("stabilizer") {
        let pt: u32 = pt.trim().parse().map_err(|_| Error::parse(line, format!("bad point {pt:?}")))?;
        at(line, ChainContext::with_stabilizer(name, g, pt, a))
    } else {
        let h = group_from(line, h_text)?;
        at(line, ChainContext::new(name, g, h, a))
    }
}

pub fn parse_poly_file(text: &str) -> Result<Poly> {
    let kv = KeyValues::parse(text)?;
    let field = kv.field()?;
    let (line, terms) = kv.require("poly")?;
    at(line, Poly::parse_terms(&field, terms))
}

pub fn parse_skew_file(text: &str) -> Result<SkewPoly> {
    let kv = KeyValues::parse(text)?;
    let field = kv.field()?;
    let (line, terms) = kv.require("skew")?;
    at(line, SkewPoly::parse_terms(&field, terms))
}

/// `(f₂, f₁)` from a rational pair file.
pub fn parse_pair_file(text: &str) -> Result<(RationalFunction, RationalFunction)> {
    let kv = KeyValues::parse(text)?;
    let field = kv.field()?;
    let read = |prefix: &str| -> Result<RationalFunction> {
        let (line, num) = kv.require(&format!("{prefix}.num"))?;
        let den = kv.get(&format!("{prefix}.den")).map_or("0:1", |(_, v)| v);
        at(line, RationalFunction::parse_terms(&field, num, den))
    };
    Ok((read("f2")?, read("f1")?))
}

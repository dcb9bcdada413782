use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored by its image sequence.
///
/// The derived ordering is lexicographic on images, which is the ordering
/// used for every deterministic listing in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint-or-not cycles, composing them left to right
    /// in the usual reading order `(a b)(c d)`: the rightmost cycle acts first.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            let mut seen = std::collections::HashSet::new();
            for (i, &x) in cycle.iter().enumerate() {
                if x as usize >= degree {
                    return Err(Error::InvalidInput(format!("point {x} outside degree {degree}")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidInput(format!("point {x} repeated in cycle")));
                }
                images[x as usize] = cycle[(i + 1) % cycle.len()];
            }
            acc = Permutation { images }.compose(&acc);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// Function composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn order(&self) -> usize {
        let mut acc = 1usize;
        for len in self.cycle_lengths() {
            acc = num_integer::lcm(acc, len);
        }
        acc
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.images[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn pow(&self, mut e: usize) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses one permutation in cycle notation, e.g. `(0 1 2)(3 4)` or `()`.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let text = text.trim();
    let mut cycles = Vec::new();
    let mut rest = text;
    if rest.is_empty() {
        return Err(Error::InvalidInput("empty permutation".into()));
    }
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidInput(format!("expected '(' in {text:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::InvalidInput(format!("unclosed cycle in {text:?}")))?;
        let body = &open[..close];
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad point {t:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = open[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

/// Splits a generator list `(0 1)(2 3), (1 2), ()` at top-level commas.
pub fn parse_generator_list(degree: usize, text: &str) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let piece = text[start..i].trim();
                if !piece.is_empty() {
                    out.push(parse_cycles(degree, piece)?);
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    let piece = text[start..].trim();
    if !piece.is_empty() {
        out.push(parse_cycles(degree, piece)?);
    }
    Ok(out)
}

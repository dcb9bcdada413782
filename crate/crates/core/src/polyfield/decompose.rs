//! Tame functional decomposition: approximate roots, right factors and the
//! enumeration of complete decompositions up to equivalence.

use std::collections::BTreeMap;
use std::fmt;

use super::linear::LinearPoly;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `f = f_n ∘ … ∘ f_1`, stored outermost first: `factors[0] = f_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    factors: Vec<Poly>,
}

impl Decomposition {
    pub fn new(factors: Vec<Poly>) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::InvalidInput("no factors".into()))?;
        if factors.iter().any(|p| p.field() != first.field()) {
            return Err(Error::FieldMismatch);
        }
        if factors.iter().any(|p| p.degree() < 2) {
            return Err(Error::InvalidInput("every factor needs degree at least 2".into()));
        }
        Ok(Decomposition { factors })
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor degrees, outermost first.
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(Poly::degree).collect()
    }

    pub fn compose(&self) -> Poly {
        let mut iter = self.factors.iter().rev();
        let mut acc = iter.next().unwrap().clone();
        for outer in iter {
            acc = outer.compose(&acc).expect("factors share a field");
        }
        acc
    }

    /// Every factor except the outermost is monic with zero constant term.
    pub fn is_canonical(&self) -> bool {
        self.factors[1..].iter().all(Poly::is_normalized)
    }

    /// The unique equivalent decomposition in canonical form: each junction
    /// is adjusted by the linear map normalizing the inner factor.
    pub fn canonical(&self) -> Decomposition {
        let mut factors = self.factors.clone();
        for i in (1..factors.len()).rev() {
            let inner = &factors[i];
            let field = inner.field().clone();
            let lead = inner.leading();
            let c = inner.coeff(0);
            // inner = λ ∘ ĥ with λ = lead·X + c
            let lambda = LinearPoly::new(&field, lead, c).expect("nonzero leading coefficient");
            factors[i] = lambda.inverse().as_poly().compose(inner).expect("same field");
            factors[i - 1] = factors[i - 1].compose(&lambda.as_poly()).expect("same field");
        }
        Decomposition { factors }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ∘ ")?;
            }
            write!(f, "[{p}]")?;
        }
        Ok(())
    }
}

/// Fails when the characteristic divides the degree.
pub fn check_tame(f: &Poly) -> Result<()> {
    let p = f.field().characteristic();
    if p != 0 && (f.degree() as u64).is_multiple_of(p) {
        return Err(Error::WildCharacteristic { p, degree: f.degree() });
    }
    Ok(())
}

/// `g` with `f = g ∘ h`, by base-`h` expansion with constant digits.
pub fn left_quotient(f: &Poly, h: &Poly) -> Result<Option<Poly>> {
    if h.degree() == 0 {
        return Err(Error::InvalidInput("inner polynomial must be nonconstant".into()));
    }
    let mut digits = Vec::new();
    let mut cur = f.clone();
    while !cur.is_zero() {
        let (q, r) = cur.div_rem(h)?;
        if r.degree() > 0 {
            return Ok(None);
        }
        digits.push(r.coeff(0));
        cur = q;
    }
    Ok(Some(Poly::new(f.field().clone(), digits)))
}

/// The unique monic, zero-constant `h` of degree `r` whose `s`-th power
/// agrees with the normalized `f` in degrees `n − 1, …, n − r + 1`.
fn approximate_root(f: &Poly, r: usize) -> Result<Poly> {
    let field = f.field().clone();
    let n = f.degree();
    let s = n / r;
    let target = f.normalized()?;
    let s_inv = field.inv(&field.from_usize(s))?;
    let mut h = vec![field.zero(); r + 1];
    h[r] = field.one();
    for j in 1..r {
        let partial = Poly::new(field.clone(), h.clone());
        let current = partial.pow(s).coeff(n - j);
        h[r - j] = field.mul(&field.sub(&target.coeff(n - j), &current), &s_inv);
    }
    Ok(Poly::new(field, h))
}

/// A decomposition `f = g ∘ h` with `deg h = r`, `h` monic with zero
/// constant term, if one exists.
pub fn right_factor(f: &Poly, r: usize) -> Result<Option<(Poly, Poly)>> {
    let n = f.degree();
    if r < 2 || !n.is_multiple_of(r) || n / r < 2 {
        return Err(Error::InvalidInput(format!("{r} is not a proper divisor of {n}")));
    }
    check_tame(f)?;
    let h = approximate_root(f, r)?;
    match left_quotient(f, &h)? {
        Some(g) if g.compose(&h)? == *f => Ok(Some((g, h))),
        Some(_) => Err(Error::InternalInconsistency("base expansion does not recompose".into())),
        None => Ok(None),
    }
}

/// The canonical right factor of each proper degree, keyed by degree.
pub fn canonical_right_factors(f: &Poly) -> Result<BTreeMap<usize, Poly>> {
    let n = f.degree();
    let mut out = BTreeMap::new();
    for r in 2..n {
        if n.is_multiple_of(r) {
            if let Some((_, h)) = right_factor(f, r)? {
                out.insert(r, h);
            }
        }
    }
    Ok(out)
}

/// All complete decompositions of `f` in canonical form, one per
/// equivalence class.
///
/// The canonical right factors of `f`, together with `X` and `f`, are
/// ordered by "is a right composition factor of"; each maximal chain of
/// that order yields one decomposition.
pub fn all_complete_decompositions(f: &Poly) -> Result<Vec<Decomposition>> {
    if f.degree() < 2 {
        return Err(Error::InvalidInput("degree must be at least 2".into()));
    }
    check_tame(f)?;
    let rights = canonical_right_factors(f)?;
    // nodes: right factors by increasing degree; f itself is the top
    let nodes: Vec<(usize, Poly)> = rights.into_iter().collect();
    let k = nodes.len();
    // below[i][j]: nodes[j] is a right factor of nodes[i]
    let mut below = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..i {
            let (di, ref hi) = nodes[i];
            let (dj, ref hj) = nodes[j];
            if di % dj == 0 && di / dj >= 2 {
                if let Some((_, h)) = right_factor(hi, dj)? {
                    below[i][j] = &h == hj;
                }
            }
        }
    }
    // covers below a node (None = the top f)
    let covers = |top: Option<usize>| -> Vec<usize> {
        let under: Vec<usize> = match top {
            None => (0..k).collect(),
            Some(i) => (0..k).filter(|&j| below[i][j]).collect(),
        };
        under
            .iter()
            .copied()
            .filter(|&j| !under.iter().any(|&m| m != j && below[m][j]))
            .collect()
    };

    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn walk(
        f: &Poly,
        nodes: &[(usize, Poly)],
        covers: &dyn Fn(Option<usize>) -> Vec<usize>,
        stack: &mut Vec<usize>,
        out: &mut Vec<Decomposition>,
    ) -> Result<()> {
        let children = covers(stack.last().copied());
        if children.is_empty() {
            out.push(chain_to_decomposition(f, nodes, stack)?);
            return Ok(());
        }
        for c in children {
            stack.push(c);
            walk(f, nodes, covers, stack, out)?;
            stack.pop();
        }
        Ok(())
    }
    walk(f, &nodes, &covers, &mut stack, &mut out)?;
    Ok(out)
}

fn chain_to_decomposition(f: &Poly, nodes: &[(usize, Poly)], chain: &[usize]) -> Result<Decomposition> {
    let mut factors = Vec::with_capacity(chain.len() + 1);
    let mut outer = f.clone();
    for &i in chain {
        let h = &nodes[i].1;
        let g = left_quotient(&outer, h)?
            .ok_or_else(|| Error::InternalInconsistency("right factor lost along a chain".into()))?;
        factors.push(g);
        outer = h.clone();
    }
    factors.push(outer);
    Decomposition::new(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(&Field::Rational, coeffs)
    }

    fn xn(n: usize) -> Poly {
        Poly::monomial(&Field::Rational, Field::Rational.one(), n)
    }

    #[test]
    fn right_factors_of_examples() {
        let (g, h) = right_factor(&xn(6), 2).unwrap().unwrap();
        assert_eq!((g, h), (xn(3), xn(2)));
        let (g, h) = right_factor(&q(&[0, 0, 1, 0, 1]), 2).unwrap().unwrap();
        assert_eq!((g, h), (q(&[0, 1, 1]), xn(2)));
        assert!(right_factor(&q(&[0, 0, 0, 1, 1]), 2).unwrap().is_none());
    }

    #[test]
    fn wild_is_rejected() {
        let f = Poly::from_i64s(&Field::fq(2).unwrap(), &[0, 1, 1, 0, 1]);
        assert!(matches!(right_factor(&f, 2), Err(Error::WildCharacteristic { p: 2, degree: 4 })));
    }

    #[test]
    fn x6_has_two_decompositions() {
        let ds = all_complete_decompositions(&xn(6)).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].factors(), &[xn(3), xn(2)]);
        assert_eq!(ds[1].factors(), &[xn(2), xn(3)]);
        for d in &ds {
            assert_eq!(d.compose(), xn(6));
            assert!(d.is_canonical());
        }
    }

    #[test]
    fn x4_and_x12() {
        assert_eq!(all_complete_decompositions(&xn(4)).unwrap().len(), 1);
        let ds = all_complete_decompositions(&xn(12)).unwrap();
        assert_eq!(ds.len(), 3);
        for d in ds {
            let mut degs = d.degrees();
            degs.sort_unstable();
            assert_eq!(degs, vec![2, 2, 3]);
        }
    }

    #[test]
    fn chebyshev_swap() {
        let f = q(&[-2, 0, 9, 0, -6, 0, 1]);
        let ds = all_complete_decompositions(&f).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].degrees(), vec![3, 2]);
        assert_eq!(ds[1].degrees(), vec![2, 3]);
        for d in &ds {
            assert_eq!(d.compose(), f);
        }
    }

    #[test]
    fn indecomposable_is_single() {
        let f = q(&[0, 0, 0, 1, 1]);
        let ds = all_complete_decompositions(&f).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].factors(), &[f]);
    }

    #[test]
    fn canonicalization() {
        // (X² + 1) ∘ (2X³ + 5) re-expressed canonically
        let d = Decomposition::new(vec![q(&[1, 0, 1]), q(&[5, 0, 0, 2])]).unwrap();
        let c = d.canonical();
        assert!(c.is_canonical());
        assert_eq!(c.compose(), d.compose());
        assert_eq!(c.factors()[1], xn(3));
        assert_eq!(c.canonical(), c);
    }
}

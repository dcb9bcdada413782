//! Brute-force oracles that share no code path with the main algorithms.
//!
//! Polynomial right factors are found by exhaustive search over finite
//! fields, each candidate tested by solving the linear system for the
//! undetermined outer coefficients. Over ℚ the search runs modulo several
//! primes; an empty search certifies absence, and rational candidates are
//! recovered by Chinese remaindering plus rational reconstruction and then
//! verified exactly. Subgroups are found as closures of small generating
//! sets.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Scalar};
use crate::permgroup::{set_product, Permutation, PermutationGroup};
use crate::polyfield::{all_complete_decompositions, canonical_right_factors, Decomposition, Poly};

/// Largest number of candidates an exhaustive search will try.
pub const SEARCH_BUDGET: u64 = 250_000;
/// Largest per-prime search size used when lifting to ℚ.
pub const PRIME_SEARCH_BUDGET: u64 = 20_000;

/// Solves `A x = b` by Gaussian elimination; `a` is row-major.
pub fn solve_linear(field: &Field, a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> =
        a.iter().zip(b).map(|(row, v)| row.iter().cloned().chain([v.clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// `g` with `g ∘ h = f`, by solving for the coefficients of `g`.
pub fn solve_outer(f: &Poly, h: &Poly) -> Option<Poly> {
    let (n, r) = (f.degree(), h.degree());
    if r == 0 || n % r != 0 {
        return None;
    }
    let field = f.field();
    let s = n / r;
    let powers: Vec<Poly> = (0..=s).map(|i| h.pow(i)).collect();
    let a: Vec<Vec<Scalar>> =
        (0..=n).map(|row| powers.iter().map(|p| p.coeff(row)).collect()).collect();
    let b: Vec<Scalar> = (0..=n).map(|row| f.coeff(row)).collect();
    solve_linear(field, &a, &b).map(|g| Poly::new(field.clone(), g))
}

/// Every monic, zero-constant `h` of degree `r` over a finite field that is
/// a right composition factor of `f`.
pub fn exhaustive_right_factors(f: &Poly, r: usize) -> Result<Vec<Poly>> {
    let field = f.field();
    let q = field
        .size()
        .ok_or_else(|| Error::InvalidInput("exhaustive search needs a finite field".into()))?;
    let free = r.saturating_sub(1) as u32;
    let count = q.checked_pow(free).filter(|&c| c <= SEARCH_BUDGET);
    let count = count.ok_or(Error::CapExceeded { cap: SEARCH_BUDGET as usize })?;
    let mut out = Vec::new();
    for code in 0..count {
        let mut coeffs = vec![field.zero()];
        let mut c = code;
        for _ in 0..free {
            coeffs.push(Scalar::Finite(c % q));
            c /= q;
        }
        coeffs.push(field.one());
        let h = Poly::new(field.clone(), coeffs);
        if solve_outer(f, &h).is_some() {
            out.push(h);
        }
    }
    Ok(out)
}

fn reduce_mod_p(f: &Poly, fp: &Field) -> Result<Poly> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| fp.from_rational(c.as_rational().expect("rational input")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(fp.clone(), coeffs))
}

/// `r/s` with `r ≡ s·a (mod m)` and `|r|, |s| ≤ √(m/2)`.
fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !s1.gcd(m).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

fn crt(residues: &[(u64, u64)]) -> (BigInt, BigInt) {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for &(r, p) in residues {
        let p = BigInt::from(p);
        // x + m·t ≡ r (mod p)
        let inv = m.modpow(&(&p - 2), &p);
        let t = ((BigInt::from(r) - &x) * inv).mod_floor(&p);
        x += &m * t;
        m *= p;
    }
    (x, m)
}

/// Right factors of degree `r` of a polynomial over ℚ.
///
/// A rational right factor `h` (monic, zero constant term) of the
/// normalized `f` has `p`-integral coefficients for every prime `p` not
/// dividing `deg f` or any denominator, so it reduces to a solution of the
/// exhaustive search modulo `p`.
pub fn rational_right_factors(f: &Poly, r: usize) -> Result<Vec<Poly>> {
    let field = f.field();
    if *field != Field::Rational {
        return Err(Error::InvalidInput("expected a polynomial over Q".into()));
    }
    let n = f.degree();
    let fnorm = f.normalized()?;
    let den_lcm = fnorm
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.as_rational().unwrap().denom()));
    let free = r.saturating_sub(1) as u32;
    let mut primes = Vec::new();
    let mut p = 5u64;
    while primes.len() < 8 {
        if p.checked_pow(free).is_none_or(|c| c > PRIME_SEARCH_BUDGET) {
            break;
        }
        if is_prime(p) && !(n as u64).is_multiple_of(p) && (&den_lcm % BigInt::from(p)).is_positive() {
            primes.push(p);
        }
        p += 1;
    }
    if primes.is_empty() {
        return Err(Error::CapExceeded { cap: PRIME_SEARCH_BUDGET as usize });
    }
    let mut solutions: Vec<(u64, Vec<Poly>)> = Vec::new();
    for &p in &primes {
        let fp = Field::fq(p)?;
        let sols = exhaustive_right_factors(&reduce_mod_p(&fnorm, &fp)?, r)?;
        if sols.is_empty() {
            return Ok(Vec::new());
        }
        solutions.push((p, sols));
    }

    let mut found = BTreeSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; solutions.len()];
    loop {
        let mut coeffs = Vec::with_capacity(r + 1);
        let mut ok = true;
        for d in 0..=r {
            let residues: Vec<(u64, u64)> = solutions
                .iter()
                .zip(&choice)
                .map(|((p, sols), &k)| (sols[k].coeff(d).code().unwrap(), *p))
                .collect();
            let (x, m) = crt(&residues);
            match rational_reconstruction(&x, &m) {
                Some(v) => coeffs.push(Scalar::Rational(v)),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let h = Poly::new(field.clone(), coeffs);
            if h.degree() == r && solve_outer(&fnorm, &h).is_some() && found.insert(h.to_terms()) {
                out.push(h);
            }
        }
        // next combination
        let mut i = 0;
        loop {
            if i == choice.len() {
                if out.is_empty() {
                    return Err(Error::InternalInconsistency(format!(
                        "degree-{r} right factor exists modulo {primes:?} but did not lift"
                    )));
                }
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < solutions[i].1.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Right factors (monic, zero constant term) of every proper degree.
pub fn oracle_right_factors(f: &Poly) -> Result<BTreeMap<usize, Vec<Poly>>> {
    let n = f.degree();
    let mut out = BTreeMap::new();
    for r in 2..n {
        if !n.is_multiple_of(r) {
            continue;
        }
        let sols = match f.field() {
            Field::Rational => rational_right_factors(f, r)?,
            Field::Finite(_) => exhaustive_right_factors(&f.normalized()?, r)?,
        };
        if !sols.is_empty() {
            out.insert(r, sols);
        }
    }
    Ok(out)
}

/// Complete decompositions assembled from the oracle's right factors, with
/// every relation and quotient obtained by linear solves.
pub fn oracle_decompositions(f: &Poly) -> Result<Vec<Decomposition>> {
    let rights = oracle_right_factors(f)?;
    let nodes: Vec<Poly> = rights.into_values().flatten().collect();
    let below = |i: usize, j: usize| -> bool {
        nodes[j].degree() < nodes[i].degree() && solve_outer(&nodes[i], &nodes[j]).is_some()
    };
    let mut out = Vec::new();
    // chains f > nodes[a] > nodes[b] > ... > X, each step a cover
    fn extend(
        f: &Poly,
        nodes: &[Poly],
        below: &dyn Fn(usize, usize) -> bool,
        chain: &mut Vec<usize>,
        out: &mut Vec<Decomposition>,
    ) -> Result<()> {
        let under: Vec<usize> = (0..nodes.len())
            .filter(|&j| match chain.last() {
                None => true,
                Some(&i) => below(i, j),
            })
            .collect();
        let covers: Vec<usize> = under
            .iter()
            .copied()
            .filter(|&j| !under.iter().any(|&m| m != j && below(m, j)))
            .collect();
        if covers.is_empty() {
            let mut factors = Vec::new();
            let mut outer = f.clone();
            for &i in chain.iter() {
                factors.push(solve_outer(&outer, &nodes[i]).expect("relation was checked"));
                outer = nodes[i].clone();
            }
            factors.push(outer);
            out.push(Decomposition::new(factors)?);
            return Ok(());
        }
        for c in covers {
            chain.push(c);
            extend(f, nodes, below, chain, out)?;
            chain.pop();
        }
        Ok(())
    }
    extend(f, &nodes, &below, &mut Vec::new(), &mut out)?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EngineAgreement {
    pub right_factor_degrees: Vec<usize>,
    pub decompositions: Vec<String>,
}

/// Compares the decomposition engine with the oracle on `f`: the same
/// canonical right factor in each degree, at most one per degree, and the
/// same complete decompositions.
pub fn check_engine_against_oracle(f: &Poly) -> Result<EngineAgreement> {
    let engine = canonical_right_factors(f)?;
    let oracle = oracle_right_factors(f)?;
    let disagree = |what: String| Err(Error::InternalInconsistency(format!("{f}: {what}")));
    if !engine.keys().eq(oracle.keys()) {
        return disagree(format!(
            "engine right-factor degrees {:?}, oracle {:?}",
            engine.keys().collect::<Vec<_>>(),
            oracle.keys().collect::<Vec<_>>()
        ));
    }
    for (r, sols) in &oracle {
        if sols.len() != 1 {
            return disagree(format!("{} inequivalent right factors of degree {r}", sols.len()));
        }
        if sols[0] != engine[r] {
            return disagree(format!("degree {r}: engine {}, oracle {}", engine[r], sols[0]));
        }
    }
    let render = |ds: Vec<Decomposition>| {
        let mut v: Vec<String> = ds.iter().map(ToString::to_string).collect();
        v.sort();
        v
    };
    let mine = all_complete_decompositions(f)?;
    for d in &mine {
        if d.compose() != *f || !d.is_canonical() {
            return disagree(format!("{d} is not a canonical decomposition"));
        }
    }
    let (mine, theirs) = (render(mine), render(oracle_decompositions(f)?));
    if mine != theirs {
        return disagree(format!("engine chains {mine:?}, oracle chains {theirs:?}"));
    }
    Ok(EngineAgreement { right_factor_degrees: oracle.into_keys().collect(), decompositions: mine })
}

/// Subgroups generated by at most `k` elements, sorted by (order, elements).
pub fn subgroups_by_generation(g: &PermutationGroup, k: usize) -> Result<Vec<PermutationGroup>> {
    let elems = g.elements();
    let mut seen: BTreeMap<(usize, Vec<Permutation>), PermutationGroup> = BTreeMap::new();
    let trivial = PermutationGroup::trivial(g.degree());
    seen.insert((1, trivial.elements().to_vec()), trivial.clone());
    let mut layer = vec![trivial];
    for _ in 0..k {
        let mut next = Vec::new();
        for u in &layer {
            for x in elems {
                if u.contains(x) {
                    continue;
                }
                let v = u.extend(std::slice::from_ref(x))?;
                let key = (v.order(), v.elements().to_vec());
                if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                    e.insert(v.clone());
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    Ok(seen.into_values().collect())
}

/// Every subgroup from `subgroups` is normal in `g`.
pub fn all_normal(g: &PermutationGroup, subgroups: &[PermutationGroup]) -> bool {
    subgroups.iter().all(|u| g.generators().iter().all(|x| u.conjugate(x) == *u))
}

/// Every pair from `subgroups` permutes.
pub fn all_permutable(subgroups: &[PermutationGroup]) -> bool {
    subgroups.iter().enumerate().all(|(i, a)| {
        subgroups[i + 1..].iter().all(|b| set_product(a, b).is_subgroup)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polyfield::power;

    #[test]
    fn linear_solve() {
        let q = Field::Rational;
        let a = vec![vec![q.from_i64(1), q.from_i64(1)], vec![q.from_i64(1), q.from_i64(-1)]];
        let x = solve_linear(&q, &a, &[q.from_i64(3), q.from_i64(1)]).unwrap();
        assert_eq!(x, vec![q.from_i64(2), q.from_i64(1)]);
        let singular = vec![vec![q.from_i64(1), q.from_i64(1)], vec![q.from_i64(2), q.from_i64(2)]];
        assert!(solve_linear(&q, &singular, &[q.from_i64(1), q.from_i64(3)]).is_none());
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(385);
        // -1/2 mod 385 = 192
        let v = rational_reconstruction(&BigInt::from(192), &m).unwrap();
        assert_eq!(v, BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn rational_search_matches_engine() {
        let q = Field::Rational;
        let f = Poly::from_i64s(&q, &[0, 0, 1, 0, 1]);
        assert_eq!(rational_right_factors(&f, 2).unwrap(), vec![power(&q, 2)]);
        let g = Poly::from_i64s(&q, &[0, 0, 0, 1, 1]);
        assert!(rational_right_factors(&g, 2).unwrap().is_empty());
        // h = X^2 + X/2 has a denominator
        let h = Poly::new(q.clone(), vec![q.zero(), q.from_ratio(&1.into(), &2.into()).unwrap(), q.one()]);
        let f = Poly::from_i64s(&q, &[3, 1, 1]).compose(&h).unwrap();
        assert_eq!(rational_right_factors(&f, 2).unwrap(), vec![h]);
    }

    #[test]
    fn x6_oracle_chains() {
        let q = Field::Rational;
        let f = power(&q, 6);
        let mut a: Vec<String> = oracle_decompositions(&f).unwrap().iter().map(|d| d.to_string()).collect();
        let mut b: Vec<String> =
            all_complete_decompositions(&f).unwrap().iter().map(|d| d.to_string()).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn engine_agrees_on_corpus() {
        for (name, f) in fixtures::polys().unwrap() {
            let a = check_engine_against_oracle(&f).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!a.decompositions.is_empty());
        }
    }

    #[test]
    fn subgroup_generation() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        assert_eq!(subgroups_by_generation(&s4, 2).unwrap().len(), 30);
    }
}

//! Branches at infinity: for `f` of degree `n` over `F_p` with `n | p − 1`,
//! Laurent series `x_c = c·s + Σ_{i≤0} a_i s^i` with `f(x_c) = s^n`. The
//! substitution `s ↦ θs` permutes the `n` branches in a single cycle.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Scalar};
use crate::permgroup::Permutation;
use crate::polyfield::Poly;

/// `x_c` truncated at `s^{-M}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentBranch {
    field: Field,
    // u[0] = c, u[k] = coefficient of s^{1-k}
    u: Vec<Scalar>,
}

impl LaurentBranch {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The coefficient `c` of `s`.
    pub fn lead(&self) -> &Scalar {
        &self.u[0]
    }

    pub fn precision(&self) -> usize {
        self.u.len() - 2
    }

    /// Coefficient of `s^e` for `1 ≥ e ≥ −M`.
    pub fn coeff(&self, e: i64) -> Option<&Scalar> {
        usize::try_from(1 - e).ok().and_then(|k| self.u.get(k))
    }

    /// `a_0, a_{−1}, …, a_{−M}`.
    pub fn tail(&self) -> &[Scalar] {
        &self.u[1..]
    }

    /// The same series with `delta` added to `tail()[index]`.
    pub fn perturbed(&self, index: usize, delta: &Scalar) -> LaurentBranch {
        let mut u = self.u.clone();
        u[index + 1] = self.field.add(&u[index + 1], delta);
        LaurentBranch { field: self.field.clone(), u }
    }

    /// `x_c(θs)`.
    pub fn substitute_scaled(&self, theta: &Scalar) -> LaurentBranch {
        let f = &self.field;
        let inv = f.inv(theta).expect("θ is nonzero");
        let mut scale = theta.clone();
        let mut u = Vec::with_capacity(self.u.len());
        for a in &self.u {
            u.push(f.mul(a, &scale));
            scale = f.mul(&scale, &inv);
        }
        LaurentBranch { field: f.clone(), u }
    }
}

impl fmt::Display for LaurentBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, a) in self.u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = 1 - k as i64;
            parts.push(match e {
                1 => format!("{a}*s"),
                0 => format!("{a}"),
                _ => format!("{a}*s^{e}"),
            });
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{} + O(s^{})", parts.join(" + "), -(self.precision() as i64) - 1)
    }
}

/// Checks that `f` lives over a prime field `F_p` with `p ∤ n` and `n | p−1`.
fn check_field(f: &Poly) -> Result<u64> {
    let p = f.field().characteristic();
    let n = f.degree() as u64;
    if p == 0 || f.field().size() != Some(p) || !is_prime(p) {
        return Err(Error::InvalidInput("branches need a prime field F_p".into()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    if n.is_multiple_of(p) {
        return Err(Error::WildCharacteristic { p, degree: n as usize });
    }
    if !(p - 1).is_multiple_of(n) {
        return Err(Error::BadPrime(p));
    }
    Ok(p)
}

/// Coefficients `[t^0..=t^len)` of `u(t)^j`, where `u` is truncated.
fn series_pow(field: &Field, u: &[Scalar], j: usize, len: usize) -> Vec<Scalar> {
    let mut acc = vec![field.zero(); len];
    if len == 0 {
        return acc;
    }
    acc[0] = field.one();
    for _ in 0..j {
        let mut next = vec![field.zero(); len];
        for (a, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in u.iter().enumerate().take(len - a) {
                next[a + b] = field.add(&next[a + b], &field.mul(x, y));
            }
        }
        acc = next;
    }
    acc
}

/// Coefficient of `s^{n−k}` in `f(x) − s^n` for `x = s·u(1/s)`, using only
/// `u[0..=k]`.
fn residual(f: &Poly, u: &[Scalar], k: usize) -> Scalar {
    let field = f.field();
    let n = f.degree();
    let mut total = if k == 0 { field.neg(&field.one()) } else { field.zero() };
    for j in 0..=n {
        let fj = f.coeff(j);
        if fj.is_zero() || j + k < n {
            continue;
        }
        let idx = j + k - n;
        let pw = series_pow(field, &u[..=k.min(u.len() - 1)], j, idx + 1);
        total = field.add(&total, &field.mul(&fj, &pw[idx]));
    }
    total
}

/// Solves for the branch with leading coefficient `c` to precision `m`.
///
/// The condition on `c` is `lc(f)·c^n = 1`, which makes the `s^n`
/// coefficient of `f(x_c)` equal to one.
pub fn solve_branch(f: &Poly, c: &Scalar, m: usize) -> Result<LaurentBranch> {
    check_field(f)?;
    let field = f.field();
    let n = f.degree();
    let lc = f.leading();
    if !field.mul(&lc, &field.pow(c, n as u64)).is_one() {
        return Err(Error::BadLeadingCoefficient(format!("lc(f)·{c}^{n} ≠ 1 in {field}")));
    }
    let pivot = field.mul(&field.mul(&field.from_usize(n), &lc), &field.pow(c, n as u64 - 1));
    let mut u = vec![field.zero(); m + 2];
    u[0] = c.clone();
    for k in 1..m + 2 {
        let r = residual(f, &u, k);
        u[k] = field.neg(&field.div(&r, &pivot)?);
    }
    Ok(LaurentBranch { field: field.clone(), u })
}

/// The coefficients of `f(x_c) − s^n` at degrees `n−1, …, n−1−M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchCheck {
    pub degrees: Vec<i64>,
    pub coefficients: Vec<String>,
    pub vanishes: bool,
}

/// Re-expands `f(x_c)` and reports the checked coefficients.
pub fn verify_branch(f: &Poly, branch: &LaurentBranch) -> BranchCheck {
    let n = f.degree() as i64;
    let mut degrees = Vec::new();
    let mut coefficients = Vec::new();
    let mut vanishes = residual(f, &branch.u, 0).is_zero();
    for k in 1..branch.u.len() {
        let r = residual(f, &branch.u, k);
        vanishes &= r.is_zero();
        degrees.push(n - k as i64);
        coefficients.push(r.to_string());
    }
    BranchCheck { degrees, coefficients, vanishes }
}

/// The `n` values of `c` with `lc(f)·c^n = 1`, ascending by code. There are
/// none when `1/lc(f)` is not an `n`-th power in the field.
pub fn branch_leads(f: &Poly) -> Result<Vec<Scalar>> {
    check_field(f)?;
    let field = f.field();
    let n = f.degree() as u64;
    let lc = f.leading();
    let leads: Vec<Scalar> = field
        .elements()
        .expect("finite field")
        .into_iter()
        .filter(|c| field.mul(&lc, &field.pow(c, n)).is_one())
        .collect();
    if leads.is_empty() {
        return Err(Error::BadLeadingCoefficient(format!(
            "1/{lc} is not a {n}-th power in {field}, so no branch is defined over it"
        )));
    }
    if leads.len() != n as usize {
        return Err(Error::InternalInconsistency(format!(
            "expected {n} branch leads, found {}",
            leads.len()
        )));
    }
    Ok(leads)
}

/// The smallest element of multiplicative order exactly `n`.
pub fn primitive_root_of_unity(field: &Field, n: u64) -> Option<Scalar> {
    field
        .elements()?
        .into_iter()
        .find(|a| field.multiplicative_order(a) == Some(n))
}

#[derive(Debug, Clone)]
pub struct InertiaCycle {
    pub theta: Scalar,
    pub branches: Vec<LaurentBranch>,
    /// On branch indices: `i ↦ j` when `x_{c_i}(θs) = x_{c_j}(s)`.
    pub permutation: Permutation,
}

impl InertiaCycle {
    pub fn leads(&self) -> Vec<Scalar> {
        self.branches.iter().map(|b| b.lead().clone()).collect()
    }

    /// Cycle notation on the branch leads, e.g. `(1 2 4)`.
    pub fn cycle_notation(&self) -> String {
        let leads = self.leads();
        self.permutation
            .cycles()
            .iter()
            .map(|cyc| {
                let xs: Vec<String> = cyc.iter().map(|&i| leads[i as usize].to_string()).collect();
                format!("({})", xs.join(" "))
            })
            .collect()
    }

    pub fn is_full_cycle(&self) -> bool {
        let n = self.branches.len();
        n == 1 || self.permutation.cycles().first().is_some_and(|c| c.len() == n)
    }
}

/// Computes every branch and the permutation induced by `s ↦ θs`, checking
/// each image against the branch with the matching lead to precision `m`.
pub fn monodromy_at_infinity(f: &Poly, m: usize) -> Result<InertiaCycle> {
    let leads = branch_leads(f)?;
    let field = f.field();
    let n = leads.len();
    let theta = primitive_root_of_unity(field, n as u64)
        .ok_or_else(|| Error::InternalInconsistency("no primitive root of unity".into()))?;
    let branches =
        leads.iter().map(|c| solve_branch(f, c, m)).collect::<Result<Vec<_>>>()?;
    let mut images = Vec::with_capacity(n);
    for b in &branches {
        let moved = b.substitute_scaled(&theta);
        let j = branches
            .iter()
            .position(|t| *t == moved)
            .ok_or_else(|| Error::TheoremViolated(format!("x_{}(θs) matches no branch", b.lead())))?;
        images.push(j as u32);
    }
    let permutation = Permutation::from_images(images)?;
    let cycle = InertiaCycle { theta, branches, permutation };
    if !cycle.is_full_cycle() {
        return Err(Error::TheoremViolated(format!(
            "s ↦ θs permutes the branches as {}, not an {n}-cycle",
            cycle.cycle_notation()
        )));
    }
    Ok(cycle)
}

/// Default precision: twice the degree.
pub fn default_precision(f: &Poly) -> usize {
    2 * f.degree()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionCompatibility {
    /// For each branch of `g∘h`, the index of the branch of `g` it lies over.
    pub projection: Vec<usize>,
    /// The cycle induced on the branches of `g` by `θ^{deg h}`.
    pub outer_cycle: String,
}

/// For `f = g ∘ h`: `h(x_c)` is the branch of `g` with lead `lc(h)c^r`,
/// evaluated at `s^r`; the inertia cycle of `f` projects to a full cycle on
/// the branches of `g`.
pub fn verify_composition_compatibility(g: &Poly, h: &Poly, m: usize) -> Result<CompositionCompatibility> {
    let f = g.compose(h)?;
    let field = f.field().clone();
    let r = h.degree();
    let inertia = monodromy_at_infinity(&f, m)?;
    let outer_leads = branch_leads(g)?;
    let outer: Vec<LaurentBranch> =
        outer_leads.iter().map(|c| solve_branch(g, c, m)).collect::<Result<_>>()?;

    let mut projection = Vec::new();
    for b in &inertia.branches {
        let lead = field.mul(&h.leading(), &field.pow(b.lead(), r as u64));
        let j = outer_leads
            .iter()
            .position(|c| *c == lead)
            .ok_or_else(|| Error::TheoremViolated(format!("lead {lead} is not a branch of {g}")))?;
        // h(x_c) as s·u(t) raised termwise: coefficient of s^{r-k}
        let len = b.u.len();
        let mut hx = vec![field.zero(); len];
        for e in 0..=r {
            let he = h.coeff(e);
            if he.is_zero() {
                continue;
            }
            let pw = series_pow(&field, &b.u, e, len);
            for k in (r - e)..len {
                hx[k] = field.add(&hx[k], &field.mul(&he, &pw[k - (r - e)]));
            }
        }
        for (k, v) in hx.iter().enumerate() {
            // s^{r-k} = (s^r)^{1-q} requires k = r·q
            let expected = if k % r == 0 {
                outer[j].u.get(k / r).cloned().unwrap_or_else(|| field.zero())
            } else {
                field.zero()
            };
            if *v != expected {
                return Err(Error::TheoremViolated(format!(
                    "h(x_{}) differs from the outer branch at s^{}",
                    b.lead(),
                    r as i64 - k as i64
                )));
            }
        }
        projection.push(j);
    }

    let theta_r = field.pow(&inertia.theta, r as u64);
    let images: Vec<u32> = outer_leads
        .iter()
        .map(|c| {
            let t = field.mul(&theta_r, c);
            outer_leads.iter().position(|d| *d == t).expect("leads are closed under roots of unity") as u32
        })
        .collect();
    let tau = Permutation::from_images(images)?;
    for (i, &j) in projection.iter().enumerate() {
        let si = inertia.permutation.apply(i as u32) as usize;
        if projection[si] != tau.apply(j as u32) as usize {
            return Err(Error::TheoremViolated("projection does not intertwine the cycles".into()));
        }
    }
    let outer_cycle = InertiaCycle { theta: theta_r, branches: outer, permutation: tau };
    if !outer_cycle.is_full_cycle() {
        return Err(Error::TheoremViolated("projected cycle is not transitive".into()));
    }
    Ok(CompositionCompatibility { projection, outer_cycle: outer_cycle.cycle_notation() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(&Field::fq(7).unwrap(), coeffs)
    }

    #[test]
    fn pure_power_branches() {
        let f = f7(&[0, 0, 0, 1]);
        let field = f.field().clone();
        let b = solve_branch(&f, &field.one(), 6).unwrap();
        assert!(b.tail().iter().all(Scalar::is_zero));
        let b2 = solve_branch(&f, &field.from_i64(2), 6).unwrap();
        assert_eq!(b2.coeff(1), Some(&field.from_i64(2)));
        assert!(matches!(solve_branch(&f, &field.from_i64(3), 6), Err(Error::BadLeadingCoefficient(_))));
    }

    #[test]
    fn cubic_with_tail() {
        let f = f7(&[0, 1, 0, 1]);
        let b = solve_branch(&f, &f.field().one(), 10).unwrap();
        assert!(b.tail().iter().any(|a| !a.is_zero()));
        assert!(verify_branch(&f, &b).vanishes);
        let longer = solve_branch(&f, &f.field().one(), 20).unwrap();
        assert_eq!(&longer.u[..b.u.len()], &b.u[..]);
    }

    #[test]
    fn inertia_cycles() {
        let c = monodromy_at_infinity(&f7(&[0, 0, 0, 1]), 6).unwrap();
        assert_eq!(c.theta, Field::fq(7).unwrap().from_i64(2));
        assert_eq!(c.cycle_notation(), "(1 2 4)");
        let c = monodromy_at_infinity(&f7(&[0, 1, 0, 1]), 10).unwrap();
        assert!(c.is_full_cycle());
        let f5 = Poly::from_i64s(&Field::fq(5).unwrap(), &[1, 0, 1]);
        let c = monodromy_at_infinity(&f5, 4).unwrap();
        assert_eq!(c.theta, Field::fq(5).unwrap().from_i64(4));
        assert_eq!(c.cycle_notation(), "(1 4)");
    }

    #[test]
    fn field_preconditions() {
        assert!(matches!(solve_branch(&f7(&[0, 0, 0, 0, 0, 0, 0, 1]), &Field::fq(7).unwrap().one(), 3), Err(Error::WildCharacteristic { .. })));
        assert_eq!(branch_leads(&f7(&[0, 0, 0, 0, 1])).unwrap_err(), Error::BadPrime(7));
    }

    #[test]
    fn composition_x6() {
        let g = f7(&[0, 0, 0, 1]);
        let h = f7(&[0, 0, 1]);
        let c = verify_composition_compatibility(&g, &h, 12).unwrap();
        assert_eq!(c.projection.len(), 6);
        let g = f7(&[0, 1, 0, 1]);
        let h = f7(&[0, 3, 1]);
        verify_composition_compatibility(&g, &h, 12).unwrap();
    }
}

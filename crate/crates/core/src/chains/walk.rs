//! Maximal chains and the exchange walk between them.

use std::collections::{BTreeMap, HashMap};

use super::context::{Chain, ChainContext};
use crate::error::{Error, Result};
use crate::permgroup::{intersection, set_product, Permutation, PermutationGroup};

/// Which permutability condition on `A` licenses the exchange walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Hypothesis {
    /// `A` is quasi-Hamiltonian.
    #[default]
    QuasiHamiltonian,
    /// Only the subgroups `J` with `H ∩ A ≤ J ≤ A` and `JH = HJ` are
    /// required to permute pairwise.
    Weak,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::QuasiHamiltonian => "quasi-Hamiltonian",
            Hypothesis::Weak => "weak",
        }
    }
}

/// All maximal chains from `G` down to `H`, depth first through maximal
/// steps, larger children first.
pub fn maximal_chains(ctx: &ChainContext) -> Vec<Chain> {
    let lat = ctx.lattice();
    let mut out = Vec::new();
    let mut stack = vec![lat.top()];
    descend(ctx, &mut stack, &mut out);
    out
}

fn descend(ctx: &ChainContext, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
    let last = *stack.last().unwrap();
    if last == 0 {
        out.push(ctx.chain(stack.clone()).expect("descent builds valid chains"));
        return;
    }
    for &m in ctx.lattice().maximal_below(last).iter().rev() {
        stack.push(m);
        descend(ctx, stack, out);
        stack.pop();
    }
}

/// Every chain from `G` to `H`, maximal or not.
pub fn all_chains(ctx: &ChainContext) -> Vec<Chain> {
    fn go(ctx: &ChainContext, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
        let last = *stack.last().unwrap();
        if last == 0 {
            out.push(ctx.chain(stack.clone()).expect("valid chain"));
            return;
        }
        for k in 0..last {
            if ctx.lattice().le(k, last) {
                stack.push(k);
                go(ctx, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = vec![ctx.lattice().top()];
    go(ctx, &mut stack, &mut out);
    out.sort();
    out
}

/// The images `ρ(U) = U ∩ A` of all lattice members, indexed by lattice id.
#[derive(Debug, Clone)]
pub struct RhoTable {
    images: Vec<PermutationGroup>,
    index: HashMap<Vec<Permutation>, usize>,
}

impl RhoTable {
    pub fn build(ctx: &ChainContext) -> Result<Self> {
        let images = ctx
            .lattice()
            .members()
            .iter()
            .map(|u| ctx.rho_restrict(u))
            .collect::<Result<Vec<_>>>()?;
        let mut index = HashMap::new();
        for (i, j) in images.iter().enumerate() {
            if index.insert(j.elements().to_vec(), i).is_some() {
                return Err(Error::TheoremViolated(format!(
                    "ρ is not injective: member #{i} collides with another member"
                )));
            }
        }
        Ok(RhoTable { images, index })
    }

    pub fn images(&self) -> &[PermutationGroup] {
        &self.images
    }

    pub fn id_of(&self, j: &PermutationGroup) -> Option<usize> {
        self.index.get(j.elements()).copied()
    }
}

/// Checks that `A` satisfies `hypothesis`.
pub fn check_hypothesis(ctx: &ChainContext, hypothesis: Hypothesis) -> Result<()> {
    let a = ctx.require_a()?;
    match hypothesis {
        Hypothesis::QuasiHamiltonian => {
            if !a.is_quasi_hamiltonian() {
                return Err(Error::HypothesisFailed("A is not quasi-Hamiltonian".into()));
            }
        }
        Hypothesis::Weak => {
            let rho = RhoTable::build(ctx)?;
            let imgs = rho.images();
            for i in 0..imgs.len() {
                for j in i + 1..imgs.len() {
                    if !set_product(&imgs[i], &imgs[j]).is_subgroup {
                        return Err(Error::HypothesisFailed(format!(
                            "ρ-images of members #{i} and #{j} do not permute"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// A sequence of maximal chains in which consecutive chains differ by one
/// exchange step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeWalk {
    pub chains: Vec<Chain>,
}

impl ExchangeWalk {
    pub fn steps(&self) -> usize {
        self.chains.len() - 1
    }
}

/// Runs the exchange recursion inside the set `S` of ρ-images, where joins
/// are products `IJ` and meets are intersections, then maps the result back
/// to the lattice.
struct Walker<'a> {
    ctx: &'a ChainContext,
    rho: &'a RhoTable,
    joins: BTreeMap<(usize, usize), usize>,
}

impl Walker<'_> {
    fn join(&mut self, a: usize, b: usize) -> Result<usize> {
        let key = (a.min(b), a.max(b));
        if let Some(&j) = self.joins.get(&key) {
            return Ok(j);
        }
        let imgs = self.rho.images();
        let prod = set_product(&imgs[a], &imgs[b]);
        if !prod.is_subgroup {
            return Err(Error::HypothesisFailed(format!(
                "ρ-images of members #{a} and #{b} do not permute"
            )));
        }
        let group = PermutationGroup::from_elements(imgs[a].degree(), prod.elements)?;
        let j = self.rho.id_of(&group).ok_or_else(|| {
            Error::TheoremViolated(format!("product of ρ-images #{a}, #{b} is not a ρ-image"))
        })?;
        self.joins.insert(key, j);
        Ok(j)
    }

    fn meet(&self, a: usize, b: usize) -> Result<usize> {
        let imgs = self.rho.images();
        let m = intersection(&imgs[a], &imgs[b]);
        self.rho.id_of(&m).ok_or_else(|| {
            Error::TheoremViolated(format!("intersection of ρ-images #{a}, #{b} is not a ρ-image"))
        })
    }

    fn first_maximal_chain(&self, top: usize) -> Vec<usize> {
        let lat = self.ctx.lattice();
        let mut chain = vec![top];
        while *chain.last().unwrap() != 0 {
            let last = *chain.last().unwrap();
            chain.push(lat.maximal_below(last)[0]);
        }
        chain
    }

    /// Walk between two maximal chains sharing their top and bottom.
    fn walk(&mut self, v: &[usize], w: &[usize]) -> Result<Vec<Vec<usize>>> {
        if v == w {
            return Ok(vec![v.to_vec()]);
        }
        if v.len() < 2 || w.len() < 2 {
            return Err(Error::TheoremViolated(format!("chains {v:?} and {w:?} differ in length")));
        }
        let top = v[0];
        let prepend = |chains: Vec<Vec<usize>>| {
            chains
                .into_iter()
                .map(|c| std::iter::once(top).chain(c).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        if v[1] == w[1] {
            return Ok(prepend(self.walk(&v[1..], &w[1..])?));
        }
        let (a, b) = (v[1], w[1]);
        if self.join(a, b)? != top {
            return Err(Error::TheoremViolated(format!(
                "maximal members #{a}, #{b} below #{top} do not generate it"
            )));
        }
        let m = self.meet(a, b)?;
        let lat = self.ctx.lattice();
        if !lat.maximal_below(a).contains(&m) || !lat.maximal_below(b).contains(&m) {
            return Err(Error::TheoremViolated(format!(
                "#{a} ∩ #{b} is not maximal in both (chains of different length)"
            )));
        }
        let y = self.first_maximal_chain(m);
        let via_a: Vec<usize> = std::iter::once(a).chain(y.iter().copied()).collect();
        let via_b: Vec<usize> = std::iter::once(b).chain(y.iter().copied()).collect();
        let mut out = prepend(self.walk(&v[1..], &via_a)?);
        out.extend(prepend(self.walk(&via_b, &w[1..])?));
        Ok(out)
    }
}

/// Passes from `from` to `to` by exchange steps, validating every step.
pub fn exchange_walk(ctx: &ChainContext, from: &Chain, to: &Chain) -> Result<ExchangeWalk> {
    exchange_walk_with(ctx, from, to, Hypothesis::QuasiHamiltonian)
}

pub fn exchange_walk_with(
    ctx: &ChainContext,
    from: &Chain,
    to: &Chain,
    hypothesis: Hypothesis,
) -> Result<ExchangeWalk> {
    check_hypothesis(ctx, hypothesis)?;
    let rho = RhoTable::build(ctx)?;
    exchange_walk_in(ctx, &rho, from, to)
}

pub(crate) fn exchange_walk_in(
    ctx: &ChainContext,
    rho: &RhoTable,
    from: &Chain,
    to: &Chain,
) -> Result<ExchangeWalk> {
    for c in [from, to] {
        if !c.is_maximal() {
            return Err(Error::NotMaximal(c.to_string()));
        }
    }
    let mut walker = Walker { ctx, rho, joins: BTreeMap::new() };
    let raw = walker.walk(from.members(), to.members())?;
    let chains = raw
        .into_iter()
        .map(|m| ctx.chain(m))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::TheoremViolated(format!("walk produced an invalid chain: {e}")))?;
    let walk = ExchangeWalk { chains };
    validate_walk(ctx, &walk)?;
    Ok(walk)
}

/// Checks every step: maximal chains of equal length differing in exactly
/// one interior entry, with `[C_i : C_{i-1}] = [C_{i+1} : D_i]` at the change.
pub fn validate_walk(ctx: &ChainContext, walk: &ExchangeWalk) -> Result<()> {
    let lat = ctx.lattice();
    for pair in walk.chains.windows(2) {
        let (c, d) = (&pair[0], &pair[1]);
        let violation = |what: &str| Error::TheoremViolated(format!("step {c} -> {d}: {what}"));
        if !c.is_maximal() || !d.is_maximal() {
            return Err(violation("chain not maximal"));
        }
        if c.len() != d.len() {
            return Err(violation("length changed"));
        }
        let (cm, dm) = (c.members(), d.members());
        let diffs: Vec<usize> = (0..cm.len()).filter(|&k| cm[k] != dm[k]).collect();
        if diffs.len() != 1 || diffs[0] == 0 || diffs[0] == cm.len() - 1 {
            return Err(violation("not exactly one interior change"));
        }
        let k = diffs[0];
        if lat.index(cm[k], cm[k + 1]) != lat.index(cm[k - 1], dm[k]) {
            return Err(violation("index identity fails"));
        }
        if sorted(chain_indices(ctx, c)) != sorted(chain_indices(ctx, d)) {
            return Err(violation("index multiset changed"));
        }
    }
    Ok(())
}

/// `[V_i : V_{i-1}]` listed top down.
pub fn chain_indices(ctx: &ChainContext, chain: &Chain) -> Vec<usize> {
    chain.members().windows(2).map(|w| ctx.lattice().index(w[0], w[1])).collect()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

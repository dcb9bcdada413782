//! One verifier per group-side theorem. Each returns a serializable report on
//! success; a failed assertion is `Error::TheoremViolated` carrying the
//! witness.

use serde::Serialize;

use super::context::{Chain, ChainContext};
use super::invariants::{aut_quotient, chain_invariants, AutQuotient};
use super::walk::{
    check_hypothesis, exchange_walk_in, maximal_chains, Hypothesis, RhoTable,
};
use crate::error::{Error, Result};
use crate::permgroup::{
    all_subgroups, core_in, coset_action, intermediate_subgroups, intersection, is_normal_in,
    normalizer_in, perm_isomorphic, set_product, PermutationGroup,
};

#[derive(Debug, Clone, Serialize)]
pub struct ChainSummary {
    pub chain: String,
    pub orders: Vec<usize>,
    pub indices: Vec<usize>,
}

fn summarize(ctx: &ChainContext, chain: &Chain) -> ChainSummary {
    let lat = ctx.lattice();
    ChainSummary {
        chain: chain.to_string(),
        orders: chain.members().iter().map(|&m| lat.get(m).order()).collect(),
        indices: chain.members().windows(2).map(|w| lat.index(w[0], w[1])).collect(),
    }
}

fn require_dedekind(ctx: &ChainContext) -> Result<()> {
    if !ctx.require_a()?.is_dedekind() {
        return Err(Error::HypothesisFailed("A is not a Dedekind group".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct RittReport {
    pub hypothesis: String,
    pub chains: Vec<ChainSummary>,
    pub length: usize,
    pub index_multiset: Vec<usize>,
    pub walks: usize,
    pub walk_steps: usize,
}

pub fn verify_ritt_first(ctx: &ChainContext) -> Result<RittReport> {
    verify_ritt_first_with(ctx, Hypothesis::QuasiHamiltonian)
}

/// All maximal chains have equal length and index multiset, and the exchange
/// walk succeeds for every ordered pair.
pub fn verify_ritt_first_with(ctx: &ChainContext, hypothesis: Hypothesis) -> Result<RittReport> {
    check_hypothesis(ctx, hypothesis)?;
    let rho = RhoTable::build(ctx)?;
    let chains = maximal_chains(ctx);
    let summaries: Vec<ChainSummary> = chains.iter().map(|c| summarize(ctx, c)).collect();
    let multiset = |s: &ChainSummary| {
        let mut v = s.indices.clone();
        v.sort_unstable();
        v
    };
    let reference = multiset(&summaries[0]);
    for (c, s) in chains.iter().zip(&summaries) {
        if multiset(s) != reference {
            return Err(Error::TheoremViolated(format!(
                "chains {} and {} have index multisets {:?} and {:?}",
                chains[0],
                c,
                reference,
                multiset(s)
            )));
        }
    }
    let mut walks = 0;
    let mut walk_steps = 0;
    for a in &chains {
        for b in &chains {
            let walk = exchange_walk_in(ctx, &rho, a, b)?;
            walks += 1;
            walk_steps += walk.steps();
        }
    }
    Ok(RittReport {
        hypothesis: hypothesis.name().into(),
        length: chains[0].len(),
        chains: summaries,
        index_multiset: reference,
        walks,
        walk_steps,
    })
}

/// Whether two lists of permutation groups agree as multisets of
/// permutation-isomorphism classes.
pub fn same_perm_classes(a: &[PermutationGroup], b: &[PermutationGroup]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (k, y) in b.iter().enumerate() {
            if !used[k] && perm_isomorphic(x, y) {
                used[k] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainMonodromy {
    pub chain: String,
    pub quotients: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonodromyReport {
    pub chains: Vec<ChainMonodromy>,
    /// Sorted labels of the common multiset.
    pub multiset: Vec<String>,
    pub length_two_pairs: usize,
    /// Pairs falling in the `G/N ≅ V/C` branch of the core dichotomy.
    pub isomorphic_branch: usize,
}

/// The two-step pair `G > U > H`, `G > V > H` (distinct, maximal).
fn length_two_pairs(chains: &[Chain]) -> Vec<(usize, usize)> {
    let two: Vec<usize> = chains.iter().filter(|c| c.len() == 2).map(|c| c.members()[1]).collect();
    let mut out = Vec::new();
    for (i, &u) in two.iter().enumerate() {
        for &v in &two[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

pub fn verify_monodromy_invariant(ctx: &ChainContext) -> Result<MonodromyReport> {
    require_dedekind(ctx)?;
    let chains = maximal_chains(ctx);
    let invariants: Vec<_> = chains.iter().map(|c| chain_invariants(ctx, c)).collect();
    for (c, inv) in chains.iter().zip(&invariants) {
        if !same_perm_classes(&invariants[0].monodromy_quotients, &inv.monodromy_quotients) {
            return Err(Error::TheoremViolated(format!(
                "monodromy quotients of {} ({:?}) and {} ({:?}) differ",
                chains[0],
                invariants[0].monodromy_labels(),
                c,
                inv.monodromy_labels()
            )));
        }
    }

    let lat = ctx.lattice();
    let g = ctx.g();
    let h = ctx.h();
    let pairs = length_two_pairs(&chains);
    let mut isomorphic_branch = 0;
    for &(u_id, v_id) in &pairs {
        let (u, v) = (lat.get(u_id), lat.get(v_id));
        for (x, y) in [(u, v), (v, u)] {
            // upper step through x against lower step through y
            let upper = coset_action(g, x)?.image;
            let lower = coset_action(y, h)?.image;
            if !perm_isomorphic(&upper, &lower) {
                return Err(Error::TheoremViolated(format!(
                    "G on cosets of #{} is not permutation isomorphic to #{} on cosets of H",
                    lat.id_of(x).unwrap(),
                    lat.id_of(y).unwrap()
                )));
            }
        }
        match core_dichotomy(ctx, u, v)? {
            Dichotomy::Isomorphic => isomorphic_branch += 1,
            Dichotomy::CoresEqual => {}
        }
    }

    let mut multiset = invariants[0].monodromy_labels();
    multiset.sort();
    Ok(MonodromyReport {
        chains: chains
            .iter()
            .zip(&invariants)
            .map(|(c, inv)| ChainMonodromy { chain: c.to_string(), quotients: inv.monodromy_labels() })
            .collect(),
        multiset,
        length_two_pairs: pairs.len(),
        isomorphic_branch,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dichotomy {
    Isomorphic,
    CoresEqual,
}

/// With `N = core_G(U)` and `C = core_V(H)`: either `G/N ≅ V/C` as
/// permutation groups or `N = C = core_G(H)`.
fn core_dichotomy(
    ctx: &ChainContext,
    u: &PermutationGroup,
    v: &PermutationGroup,
) -> Result<Dichotomy> {
    let (g, h) = (ctx.g(), ctx.h());
    let n = core_in(g, u);
    let c = core_in(v, h);
    if perm_isomorphic(&coset_action(g, u)?.image, &coset_action(v, h)?.image) {
        return Ok(Dichotomy::Isomorphic);
    }
    if n == c && n == core_in(g, h) {
        return Ok(Dichotomy::CoresEqual);
    }
    Err(Error::TheoremViolated(format!(
        "core dichotomy fails: |N| = {}, |C| = {}",
        n.order(),
        c.order()
    )))
}

#[derive(Debug, Clone, Serialize)]
pub struct TrivialCoreCase {
    pub u: String,
    pub v: String,
    pub cross_isomorphic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreScanReport {
    pub length_two_pairs: usize,
    pub trivial_core_cases: Vec<TrivialCoreCase>,
}

/// Under the quasi-Hamiltonian hypothesis only: checks the core dichotomy on
/// every two-step pair and lists the pairs with `N = C = 1`, recording
/// whether the monodromy cross-isomorphism still holds there. Nothing is
/// asserted about those pairs.
pub fn scan_trivial_cores(ctx: &ChainContext) -> Result<CoreScanReport> {
    check_hypothesis(ctx, Hypothesis::QuasiHamiltonian)?;
    let chains = maximal_chains(ctx);
    let lat = ctx.lattice();
    let pairs = length_two_pairs(&chains);
    let mut trivial_core_cases = Vec::new();
    for &(u_id, v_id) in &pairs {
        let (u, v) = (lat.get(u_id), lat.get(v_id));
        for (x, y, xi, yi) in [(u, v, u_id, v_id), (v, u, v_id, u_id)] {
            core_dichotomy(ctx, x, y)?;
            let n = core_in(ctx.g(), x);
            let c = core_in(y, ctx.h());
            if n.is_trivial() && c.is_trivial() {
                let cross = perm_isomorphic(
                    &coset_action(ctx.g(), x)?.image,
                    &coset_action(y, ctx.h())?.image,
                );
                trivial_core_cases.push(TrivialCoreCase {
                    u: format!("#{xi}"),
                    v: format!("#{yi}"),
                    cross_isomorphic: cross,
                });
            }
        }
    }
    Ok(CoreScanReport { length_two_pairs: pairs.len(), trivial_core_cases })
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainAut {
    pub chain: String,
    /// `(index, aut order, aut type)` per step, top down.
    pub triples: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AutReport {
    pub chains: Vec<ChainAut>,
    pub multiset: Vec<(usize, usize, String)>,
}

pub fn verify_aut_invariant(ctx: &ChainContext) -> Result<AutReport> {
    check_hypothesis(ctx, Hypothesis::QuasiHamiltonian)?;
    let chains = maximal_chains(ctx);
    let mut rows = Vec::new();
    for c in &chains {
        let inv = chain_invariants(ctx, c);
        let triples: Vec<(usize, usize, String)> = inv
            .indices
            .iter()
            .zip(&inv.aut)
            .map(|(&i, AutQuotient { order, label })| (i, *order, label.clone()))
            .collect();
        rows.push(ChainAut { chain: c.to_string(), triples });
    }
    let sorted = |r: &ChainAut| {
        let mut t = r.triples.clone();
        t.sort();
        t
    };
    let multiset = sorted(&rows[0]);
    for r in &rows {
        if sorted(r) != multiset {
            return Err(Error::TheoremViolated(format!(
                "aut triples of {} ({:?}) and {} ({:?}) differ",
                rows[0].chain,
                multiset,
                r.chain,
                sorted(r)
            )));
        }
    }
    Ok(AutReport { chains: rows, multiset })
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisibilityStep {
    /// `|N_{V_i}(H)/H|`, the automorphism order of the lower composite.
    pub lower: usize,
    /// `|N_{V_{i+1}}(H)/H|`.
    pub upper: usize,
    /// `|N_{V_{i+1}}(V_i)/V_i|`, the automorphism order of the new factor.
    pub factor: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisibilityReport {
    pub chain: String,
    /// Bottom up.
    pub steps: Vec<DivisibilityStep>,
    /// `|N_G(H)/H|`.
    pub aut_total: usize,
    /// Product of the factor automorphism orders.
    pub product: usize,
}

/// Normality, embedding and divisibility along one chain.
pub fn verify_divisibility(ctx: &ChainContext, chain: &Chain) -> Result<DivisibilityReport> {
    require_dedekind(ctx)?;
    let lat = ctx.lattice();
    let h = ctx.h();
    // bottom up: V_0 = H, ..., V_n = G
    let vs: Vec<&PermutationGroup> = chain.members().iter().rev().map(|&m| lat.get(m)).collect();
    let mut steps = Vec::new();
    let mut product = 1usize;
    for i in 0..vs.len() - 1 {
        let (lower_v, upper_v) = (vs[i], vs[i + 1]);
        let n_lower = normalizer_in(lower_v, h);
        let n_upper = normalizer_in(upper_v, h);
        let n_step = normalizer_in(upper_v, lower_v);
        let factor = n_step.order() / lower_v.order();
        let witness = |what: &str| {
            Error::TheoremViolated(format!("{chain}, step {i} -> {}: {what}", i + 1))
        };
        if !is_normal_in(&n_upper, &n_lower) {
            return Err(witness("Aut of the lower composite is not normal"));
        }
        if !n_upper.is_subgroup_of(&n_step) {
            return Err(witness("N_{V_{i+1}}(H) does not normalize V_i"));
        }
        // kernel of N_{V_{i+1}}(H) -> N_{V_{i+1}}(V_i)/V_i is N_{V_i}(H)
        if intersection(&n_upper, lower_v) != n_lower {
            return Err(witness("kernel of the restriction map is not Aut of the lower composite"));
        }
        let quotient = n_upper.order() / n_lower.order();
        if !factor.is_multiple_of(quotient) {
            return Err(witness(&format!("{quotient} does not divide {factor}")));
        }
        if i == 0 {
            product *= n_upper.order() / h.order();
        } else {
            product *= factor;
        }
        steps.push(DivisibilityStep {
            lower: n_lower.order() / h.order(),
            upper: n_upper.order() / h.order(),
            factor,
        });
    }
    let aut_total = normalizer_in(ctx.g(), h).order() / h.order();
    if !product.is_multiple_of(aut_total) {
        return Err(Error::TheoremViolated(format!(
            "{chain}: |Aut| = {aut_total} does not divide {product}"
        )));
    }
    Ok(DivisibilityReport { chain: chain.to_string(), steps, aut_total, product })
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    /// `|G| = |Aut(φ)|`.
    pub group_order: usize,
    /// `|U| = |Aut(φ₁)|`.
    pub subgroup_order: usize,
    /// `|N_G(U)/U| = |Aut(φ₂)|`.
    pub normalizer_quotient: usize,
    pub product: usize,
    pub divides: bool,
}

/// In the regular action of a quasi-Hamiltonian, non-Dedekind `G`, the chain
/// `G > U > 1` through a non-normal `U` breaks the divisibility statement.
pub fn witness_nondedekind_failure(
    g: &PermutationGroup,
    u: &PermutationGroup,
) -> Result<WitnessReport> {
    if !g.is_regular() {
        return Err(Error::HypothesisFailed("G must act regularly".into()));
    }
    if !g.is_quasi_hamiltonian() {
        return Err(Error::HypothesisFailed("G is not quasi-Hamiltonian".into()));
    }
    if g.is_dedekind() {
        return Err(Error::HypothesisFailed("G is a Dedekind group".into()));
    }
    if !u.is_subgroup_of(g) {
        return Err(Error::InvalidInput("U is not a subgroup of G".into()));
    }
    if is_normal_in(g, u) {
        return Err(Error::HypothesisFailed("U is normal in G".into()));
    }
    let normalizer_quotient = aut_quotient(g, u).order;
    let product = u.order() * normalizer_quotient;
    let divides = product.is_multiple_of(g.order());
    if divides {
        return Err(Error::TheoremViolated(format!(
            "|G| = {} divides {} although U is not normal",
            g.order(),
            product
        )));
    }
    Ok(WitnessReport {
        group_order: g.order(),
        subgroup_order: u.order(),
        normalizer_quotient,
        product,
        divides,
    })
}

/// The first non-normal subgroup in (order, elements) order.
pub fn first_non_normal_subgroup(g: &PermutationGroup) -> Result<Option<PermutationGroup>> {
    Ok(all_subgroups(g)?.into_iter().find(|u| !is_normal_in(g, u)))
}

#[derive(Debug, Clone, Serialize)]
pub struct IndecomposableReport {
    pub degree: usize,
    pub prime_cyclic: bool,
    pub abelian: bool,
    pub regular: bool,
    pub nontrivial_aut: bool,
}

/// For an indecomposable context, the four characterizations of a nontrivial
/// automorphism group agree.
pub fn verify_indecomposable_equivalences(ctx: &ChainContext) -> Result<IndecomposableReport> {
    let lat = ctx.lattice();
    if lat.len() > 2 {
        return Err(Error::NotIndecomposable(lat.len() - 2));
    }
    let (g, h) = (ctx.g(), ctx.h());
    let n = ctx.degree();
    let aut = aut_quotient(g, h);
    let prime = n >= 2 && (2..n).all(|d| !n.is_multiple_of(d));
    let prime_cyclic = prime && aut.order == n && g.order() == n && g.is_cyclic();
    let abelian = g.is_abelian();
    let regular = g.is_regular();
    let nontrivial_aut = aut.order > 1;
    let report = IndecomposableReport { degree: n, prime_cyclic, abelian, regular, nontrivial_aut };
    if !(prime_cyclic == abelian && abelian == regular && regular == nontrivial_aut) {
        return Err(Error::TheoremViolated(format!("conditions disagree: {report:?}")));
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct RhoReport {
    pub members: usize,
    pub pairs: usize,
    /// Number of permutable subgroups between `H ∩ A` and `A`.
    pub permutable_in_a: usize,
}

/// ρ is a bijection onto the subgroups of `A` above `H ∩ A` that permute with
/// `H`, preserving indices, joins and meets.
pub fn verify_rho_bijection(ctx: &ChainContext) -> Result<RhoReport> {
    let a = ctx.require_a()?;
    let lat = ctx.lattice();
    let rho = RhoTable::build(ctx)?;
    let imgs = rho.images();
    let g = ctx.g();
    for (id, u) in lat.members().iter().enumerate() {
        let j = &imgs[id];
        if &ctx.rho_inverse(j)? != u {
            return Err(Error::TheoremViolated(format!("ρ⁻¹(ρ(#{id})) != #{id}")));
        }
        if g.order() / u.order() != a.order() / j.order() {
            return Err(Error::TheoremViolated(format!("ρ changes the index of #{id}")));
        }
    }
    let mut pairs = 0;
    for x in 0..lat.len() {
        for y in x + 1..lat.len() {
            pairs += 1;
            let join = lat.join(x, y);
            let meet = lat.meet(x, y);
            let image_join = imgs[x].join(&imgs[y])?;
            if imgs[join] != image_join {
                return Err(Error::TheoremViolated(format!("ρ does not preserve #{x} ∨ #{y}")));
            }
            if imgs[meet] != intersection(&imgs[x], &imgs[y]) {
                return Err(Error::TheoremViolated(format!("ρ does not preserve #{x} ∧ #{y}")));
            }
        }
    }
    let base = intersection(ctx.h(), a);
    let permutable: Vec<PermutationGroup> = intermediate_subgroups(a, &base)?
        .into_iter()
        .filter(|j| set_product(j, ctx.h()).is_subgroup)
        .collect();
    if permutable.len() != lat.len() || permutable.iter().any(|j| rho.id_of(j).is_none()) {
        return Err(Error::TheoremViolated(format!(
            "ρ is not onto: {} permutable subgroups of A, {} lattice members",
            permutable.len(),
            lat.len()
        )));
    }
    Ok(RhoReport { members: lat.len(), pairs, permutable_in_a: permutable.len() })
}

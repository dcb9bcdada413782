use proptest::prelude::*;
use ritt_core::chains::{
    chain_invariants, exchange_walk, maximal_chains, verify_aut_invariant, verify_divisibility,
    verify_monodromy_invariant, verify_rho_bijection, ChainContext,
};
use ritt_core::fixtures;
use ritt_core::permgroup::PermutationGroup;

fn quasi_hamiltonian_contexts() -> Vec<ChainContext> {
    fixtures::contexts()
        .unwrap()
        .into_iter()
        .filter(|c| c.a().is_some_and(|a| a.is_quasi_hamiltonian()))
        .collect()
}

#[test]
fn rho_laws_on_every_context_with_a() {
    for ctx in fixtures::contexts().unwrap().into_iter().filter(|c| c.a().is_some()) {
        let r = verify_rho_bijection(&ctx).unwrap();
        assert_eq!(r.members, ctx.lattice().len());
        let lat = ctx.lattice();
        for x in 0..lat.len() {
            for y in 0..lat.len() {
                let (u, v) = (lat.get(x), lat.get(y));
                let (ru, rv) = (ctx.rho_restrict(u).unwrap(), ctx.rho_restrict(v).unwrap());
                let join = ctx.rho_restrict(lat.get(lat.join(x, y))).unwrap();
                assert_eq!(join, ru.join(&rv).unwrap(), "{}", ctx.name());
            }
        }
    }
}

#[test]
fn walk_steps_exchange_one_entry() {
    for ctx in quasi_hamiltonian_contexts() {
        let chains = maximal_chains(&ctx);
        for a in &chains {
            for b in &chains {
                let walk = exchange_walk(&ctx, a, b).unwrap();
                for pair in walk.chains.windows(2) {
                    let (x, y) = (pair[0].members(), pair[1].members());
                    assert_eq!(x.len(), y.len());
                    let changed: Vec<usize> = (0..x.len()).filter(|&i| x[i] != y[i]).collect();
                    assert_eq!(changed.len(), 1, "{}: {} -> {}", ctx.name(), pair[0], pair[1]);
                    assert!(changed[0] > 0 && changed[0] < x.len() - 1);
                    let mut ix = chain_invariants(&ctx, &pair[0]).indices;
                    let mut iy = chain_invariants(&ctx, &pair[1]).indices;
                    ix.sort_unstable();
                    iy.sort_unstable();
                    assert_eq!(ix, iy);
                }
            }
        }
    }
}

#[test]
fn dedekind_verifiers_pass_on_catalog() {
    for ctx in fixtures::contexts().unwrap() {
        if !ctx.a().is_some_and(|a| a.is_dedekind()) {
            continue;
        }
        verify_monodromy_invariant(&ctx).unwrap();
        verify_aut_invariant(&ctx).unwrap();
        for c in maximal_chains(&ctx) {
            verify_divisibility(&ctx, &c).unwrap();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Reordering and repeating generators changes nothing about the chains.
    #[test]
    fn chains_stable_under_generator_order(idx in 0usize..16, seed in any::<u64>()) {
        let ctxs = quasi_hamiltonian_contexts();
        let ctx = &ctxs[idx % ctxs.len()];
        let mut gens = ctx.g().generators().to_vec();
        gens.push(gens[(seed as usize) % gens.len()].clone());
        let k = (seed >> 8) as usize % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        let g = PermutationGroup::close(ctx.degree(), &gens).unwrap();
        let a = ctx.a().cloned();
        let again = ChainContext::with_stabilizer(ctx.name(), g, ctx.point(), a).unwrap();
        let before: Vec<String> = maximal_chains(ctx).iter().map(|c| c.to_string()).collect();
        let after: Vec<String> = maximal_chains(&again).iter().map(|c| c.to_string()).collect();
        prop_assert_eq!(before, after);
    }
}

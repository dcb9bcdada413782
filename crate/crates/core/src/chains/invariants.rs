use serde::Serialize;

use super::context::{Chain, ChainContext};
use super::walk::chain_indices;
use crate::permgroup::{abstract_label, coset_action, describe_action, normalizer_in, PermutationGroup};

/// Order and abstract type of an automorphism quotient `N_V(U)/U`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AutQuotient {
    pub order: usize,
    pub label: String,
}

/// Per-step invariants of a chain, listed top down.
#[derive(Debug, Clone)]
pub struct ChainInvariants {
    pub indices: Vec<usize>,
    /// Action of `V_i` on the cosets of `V_{i-1}`.
    pub monodromy_quotients: Vec<PermutationGroup>,
    pub aut: Vec<AutQuotient>,
}

impl ChainInvariants {
    pub fn monodromy_labels(&self) -> Vec<String> {
        self.monodromy_quotients.iter().map(describe_action).collect()
    }
}

/// `N_V(U)/U` via the regular action of `N_V(U)` on the cosets of `U`.
pub fn aut_quotient(v: &PermutationGroup, u: &PermutationGroup) -> AutQuotient {
    let n = normalizer_in(v, u);
    let action = coset_action(&n, u).expect("U is a subgroup of its normalizer");
    AutQuotient { order: n.order() / u.order(), label: abstract_label(&action.image) }
}

pub fn chain_invariants(ctx: &ChainContext, chain: &Chain) -> ChainInvariants {
    let lat = ctx.lattice();
    let mut monodromy_quotients = Vec::new();
    let mut aut = Vec::new();
    for w in chain.members().windows(2) {
        let (upper, lower) = (lat.get(w[0]), lat.get(w[1]));
        monodromy_quotients
            .push(coset_action(upper, lower).expect("chain steps are inclusions").image);
        aut.push(aut_quotient(upper, lower));
    }
    ChainInvariants { indices: chain_indices(ctx, chain), monodromy_quotients, aut }
}

//! The group side of decompositions: chains of subgroups between `G` and a
//! point stabilizer `H`, the correspondence `ρ: U ↦ U ∩ A` with subgroups of
//! a transitive subgroup `A`, the exchange walk, and the theorem verifiers.

mod context;
mod invariants;
mod verify;
mod walk;

pub use context::{Chain, ChainContext, Lattice};
pub use invariants::{aut_quotient, chain_invariants, AutQuotient, ChainInvariants};
pub use verify::{
    first_non_normal_subgroup, same_perm_classes, scan_trivial_cores, verify_aut_invariant,
    verify_divisibility, verify_indecomposable_equivalences, verify_monodromy_invariant,
    verify_rho_bijection, verify_ritt_first, verify_ritt_first_with, witness_nondedekind_failure,
    AutReport, ChainAut, ChainMonodromy, ChainSummary, CoreScanReport, DivisibilityReport,
    DivisibilityStep, IndecomposableReport, MonodromyReport, RhoReport, RittReport,
    TrivialCoreCase, WitnessReport,
};
pub use walk::{
    all_chains, chain_indices, check_hypothesis, exchange_walk, exchange_walk_with,
    maximal_chains, validate_walk, ExchangeWalk, Hypothesis, RhoTable,
};

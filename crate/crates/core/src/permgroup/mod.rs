//! Exact finite permutation groups, stored fully enumerated.
//!
//! Points are 0-indexed and permutations compose as functions: `a.compose(b)`
//! applies `b` first. Cosets are left cosets `gU`.

mod group;
mod iso;
mod permutation;
mod smallgroups;

pub use group::{
    all_subgroups, core_in, coset_action, intermediate_subgroups, intermediate_subgroups_with_cap,
    intersection, is_normal_in, normalizer_in, set_product, CosetAction, PermutationGroup,
    SetProduct, DEFAULT_ELEMENT_CAP, DEFAULT_LATTICE_CAP,
};
pub use iso::{perm_isomorphic, perm_isomorphism, PermIsomorphism};
pub use permutation::{parse_cycles, parse_generator_list, Permutation};
pub use smallgroups::{
    abstract_label, describe_action, small_group_label, small_group_table, SmallGroup,
    MAX_TABLE_ORDER,
};

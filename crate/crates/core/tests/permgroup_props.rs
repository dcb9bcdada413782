use proptest::prelude::*;
use ritt_core::fixtures;
use ritt_core::oracle::{all_normal, all_permutable, subgroups_by_generation};
use ritt_core::permgroup::{
    all_subgroups, core_in, coset_action, intersection, perm_isomorphic, set_product,
    Permutation, PermutationGroup,
};

fn catalog_groups() -> Vec<(String, PermutationGroup)> {
    let mut out = Vec::new();
    for ctx in fixtures::contexts().unwrap() {
        out.push((ctx.name().to_string(), ctx.g().clone()));
        if let Some(a) = ctx.a() {
            out.push((format!("{}/A", ctx.name()), a.clone()));
        }
    }
    out
}

#[test]
fn lagrange_and_cores_on_lattices() {
    for ctx in fixtures::contexts().unwrap() {
        let g = ctx.g();
        for u in ctx.lattice().members() {
            let action = coset_action(g, u).unwrap();
            assert_eq!(g.order(), action.image.degree() * u.order(), "{}", ctx.name());
            assert_eq!(action.kernel, core_in(g, u), "{}", ctx.name());
        }
    }
}

#[test]
fn dedekind_and_quasi_hamiltonian_against_oracle() {
    for (name, g) in catalog_groups() {
        if g.order() > 100 {
            continue;
        }
        let subs = all_subgroups(&g).unwrap();
        let by_generation = subgroups_by_generation(&g, 2).unwrap();
        assert_eq!(subs.len(), by_generation.len(), "{name}: subgroup counts");
        assert_eq!(g.is_dedekind(), all_normal(&g, &subs), "{name}");
        assert_eq!(g.is_quasi_hamiltonian(), all_permutable(&subs), "{name}");
        if g.is_dedekind() {
            assert!(g.is_quasi_hamiltonian(), "{name}");
        }
    }
}

#[test]
fn known_classifications() {
    let q8 = fixtures::context("q8_regular").unwrap();
    assert!(q8.g().is_dedekind() && !q8.g().is_abelian());
    let m16 = fixtures::context("m16_regular").unwrap();
    assert!(m16.g().is_quasi_hamiltonian() && !m16.g().is_dedekind());
    let d6 = fixtures::context("d6").unwrap();
    assert!(!d6.g().is_quasi_hamiltonian());
}

#[test]
fn set_product_cardinality() {
    for (name, g) in catalog_groups() {
        if g.order() > 24 {
            continue;
        }
        let subs = all_subgroups(&g).unwrap();
        for i in &subs {
            for j in &subs {
                let p = set_product(i, j);
                let meet = intersection(i, j);
                assert_eq!(p.elements.len(), i.order() * j.order() / meet.order(), "{name}");
            }
        }
    }
}

#[test]
fn perm_isomorphism_is_an_equivalence() {
    let groups: Vec<PermutationGroup> = catalog_groups().into_iter().map(|(_, g)| g).collect();
    for a in &groups {
        assert!(perm_isomorphic(a, a));
        for b in &groups {
            let ab = perm_isomorphic(a, b);
            assert_eq!(ab, perm_isomorphic(b, a));
            if !ab {
                continue;
            }
            for c in &groups {
                if perm_isomorphic(b, c) {
                    assert!(perm_isomorphic(a, c));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugates_are_permutation_isomorphic(
        (idx, images) in (0usize..64).prop_flat_map(|idx| {
            let groups = catalog_groups();
            let n = groups[idx % groups.len()].1.degree() as u32;
            (Just(idx), Just((0..n).collect::<Vec<u32>>()).prop_shuffle())
        })
    ) {
        let groups = catalog_groups();
        let (_, g) = &groups[idx % groups.len()];
        let x = Permutation::from_images(images).unwrap();
        let h = g.conjugate(&x);
        prop_assert_eq!(h.order(), g.order());
        prop_assert!(perm_isomorphic(g, &h));
        prop_assert_eq!(h.is_dedekind(), g.is_dedekind());
        prop_assert_eq!(h.is_quasi_hamiltonian(), g.is_quasi_hamiltonian());
    }

    #[test]
    fn composition_is_associative(idx in 0usize..64, i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let groups = catalog_groups();
        let (_, g) = &groups[idx % groups.len()];
        let e = g.elements();
        let (a, b, c) = (&e[i % e.len()], &e[j % e.len()], &e[k % e.len()]);
        prop_assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.pow(a.order()).is_identity(), true);
    }
}

use proptest::prelude::*;
use ritt_core::error::Error;
use ritt_core::field::Field;
use ritt_core::laurent::{
    branch_leads, monodromy_at_infinity, solve_branch, verify_branch,
    verify_composition_compatibility,
};
use ritt_core::polyfield::Poly;

/// `(p, n)` with `n | p − 1`.
const CASES: [(u64, usize); 6] = [(7, 2), (7, 3), (7, 6), (13, 3), (13, 4), (11, 5)];

fn poly_for(case: usize, lower: &[i64], lc: i64) -> Poly {
    let (p, n) = CASES[case];
    let field = Field::fq(p).unwrap();
    let mut coeffs: Vec<i64> = lower.iter().cycle().take(n).copied().collect();
    coeffs.push(if lc.rem_euclid(p as i64) == 0 { 1 } else { lc });
    Poly::from_i64s(&field, &coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn branches_vanish_and_form_a_cycle(
        case in 0usize..6, lower in prop::collection::vec(-20i64..20, 1..8), lc in 1i64..13,
    ) {
        let f = poly_for(case, &lower, lc);
        let cycle = match monodromy_at_infinity(&f, 8) {
            Err(Error::BadLeadingCoefficient(_)) => return Ok(()),
            r => r.unwrap(),
        };
        prop_assert!(cycle.is_full_cycle());
        prop_assert_eq!(cycle.branches.len(), f.degree());
        for b in &cycle.branches {
            prop_assert!(verify_branch(&f, b).vanishes);
        }
    }

    #[test]
    fn precision_increase_keeps_coefficients(
        case in 0usize..6, lower in prop::collection::vec(-20i64..20, 1..8), lc in 1i64..13,
        m in 2usize..10,
    ) {
        let f = poly_for(case, &lower, lc);
        let Ok(leads) = branch_leads(&f) else { return Ok(()) };
        for c in leads {
            let short = solve_branch(&f, &c, m).unwrap();
            let long = solve_branch(&f, &c, 2 * m).unwrap();
            prop_assert_eq!(&long.tail()[..short.tail().len()], short.tail());
        }
    }

    #[test]
    fn perturbation_breaks_the_first_perturbed_degree(
        case in 0usize..6, lower in prop::collection::vec(-20i64..20, 1..8), lc in 1i64..13,
        index in 0usize..8, delta in 1i64..6,
    ) {
        let f = poly_for(case, &lower, lc);
        let Ok(leads) = branch_leads(&f) else { return Ok(()) };
        let c = leads[0].clone();
        let b = solve_branch(&f, &c, 8).unwrap();
        let index = index % b.tail().len();
        let bad = b.perturbed(index, &f.field().from_i64(delta));
        let check = verify_branch(&f, &bad);
        prop_assert!(!check.vanishes);
        let first = check.coefficients.iter().position(|s| s != "0");
        prop_assert_eq!(first, Some(index));
    }
}

#[test]
fn wrong_leading_coefficient_is_rejected() {
    let f7 = Field::fq(7).unwrap();
    let f = Poly::from_i64s(&f7, &[0, 0, 0, 1]);
    assert!(matches!(solve_branch(&f, &f7.from_i64(3), 5), Err(Error::BadLeadingCoefficient(_))));
    let b = solve_branch(&f, &f7.from_i64(2), 5).unwrap();
    assert!(b.tail().iter().all(|a| a.is_zero()));
}

#[test]
fn leading_coefficient_without_roots() {
    let f7 = Field::fq(7).unwrap();
    let f = Poly::from_i64s(&f7, &[0, 0, 3]);
    assert!(matches!(branch_leads(&f), Err(Error::BadLeadingCoefficient(_))));
    let g = Poly::from_i64s(&f7, &[0, 0, 2]);
    assert_eq!(branch_leads(&g).unwrap().len(), 2);
}

#[test]
fn unsupported_fields() {
    let f7 = Field::fq(7).unwrap();
    let wild = Poly::from_i64s(&f7, &[0, 1, 0, 0, 0, 0, 0, 1]);
    assert!(matches!(monodromy_at_infinity(&wild, 4), Err(Error::WildCharacteristic { .. })));
    let f5 = Field::fq(5).unwrap();
    let no_roots = Poly::from_i64s(&f5, &[0, 0, 0, 1]);
    assert!(matches!(monodromy_at_infinity(&no_roots, 4), Err(Error::BadPrime(5))));
}

#[test]
fn composition_projects_onto_outer_cycle() {
    let f7 = Field::fq(7).unwrap();
    let g = Poly::from_i64s(&f7, &[1, 2, 0, 1]);
    let h = Poly::from_i64s(&f7, &[0, 3, 1]);
    let r = verify_composition_compatibility(&g, &h, 10).unwrap();
    assert_eq!(r.projection.len(), 6);
    let h3 = Poly::from_i64s(&f7, &[0, 0, 0, 1]);
    verify_composition_compatibility(&Poly::from_i64s(&f7, &[0, 1, 1]), &h3, 10).unwrap();
}

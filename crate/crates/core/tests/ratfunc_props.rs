use proptest::prelude::*;
use ritt_core::field::Field;
use ritt_core::polyfield::{all_complete_decompositions, Poly};
use ritt_core::ratfunc::{
    aut_search, normalize_poly_decomposition, MobiusMap, ProjPoint, RationalFunction,
};

fn f(p: u64) -> Field {
    Field::fq(p).unwrap()
}

fn mobius(field: &Field, e: [i64; 4]) -> Option<MobiusMap> {
    let [a, b, c, d] = e.map(|x| field.from_i64(x));
    MobiusMap::new(field, a, b, c, d).ok()
}

fn rational(field: &Field, num: &[i64], den: &[i64]) -> Option<RationalFunction> {
    let (n, d) = (Poly::from_i64s(field, num), Poly::from_i64s(field, den));
    if d.is_zero() {
        return None;
    }
    RationalFunction::new(n, d).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn mobius_maps_form_a_group(
        a in prop::array::uniform4(-6i64..7), b in prop::array::uniform4(-6i64..7),
        c in prop::array::uniform4(-6i64..7), x in 0i64..7,
    ) {
        let field = f(7);
        let (Some(a), Some(b), Some(c)) = (mobius(&field, a), mobius(&field, b), mobius(&field, c)) else {
            return Ok(());
        };
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        let pt = ProjPoint::Finite(field.from_i64(x));
        prop_assert_eq!(a.compose(&b).apply(&pt), a.apply(&b.apply(&pt)));
        let as_fn = a.compose(&b).as_rational_function();
        prop_assert_eq!(as_fn, a.as_rational_function().compose(&b.as_rational_function()).unwrap());
    }

    #[test]
    fn results_stay_reduced(
        n1 in prop::collection::vec(-5i64..6, 1..4), d1 in prop::collection::vec(-5i64..6, 1..4),
        n2 in prop::collection::vec(-5i64..6, 1..4), d2 in prop::collection::vec(-5i64..6, 1..4),
    ) {
        let field = f(11);
        let (Some(g), Some(h)) = (rational(&field, &n1, &d1), rational(&field, &n2, &d2)) else {
            return Ok(());
        };
        for r in [&g, &h] {
            prop_assert!(r.den().is_monic());
            prop_assert!(r.num().gcd(r.den()).unwrap().is_constant());
        }
        if let Ok(c) = g.compose(&h) {
            prop_assert!(c.den().is_monic());
            prop_assert!(c.num().gcd(c.den()).unwrap().is_constant());
            if g.degree() >= 1 && h.degree() >= 1 {
                prop_assert_eq!(c.degree(), g.degree() * h.degree());
            }
        }
    }

    /// Conjugating a polynomial decomposition by Möbius maps and normalizing
    /// gives back the canonical form.
    #[test]
    fn normalization_undoes_mobius_conjugation(
        g in prop::collection::vec(-5i64..6, 3..5), h in prop::collection::vec(-5i64..6, 3..4),
        mu in prop::array::uniform4(-6i64..7),
    ) {
        let field = f(13);
        let (g, h) = (Poly::from_i64s(&field, &g), Poly::from_i64s(&field, &h));
        prop_assume!(g.degree() >= 2 && h.degree() >= 2);
        let Some(mu) = mobius(&field, mu) else { return Ok(()) };
        let whole = g.compose(&h).unwrap();
        let outer = RationalFunction::from_poly(&g).compose(&mu.as_rational_function()).unwrap();
        let inner = mu.inverse().as_rational_function().compose(&RationalFunction::from_poly(&h)).unwrap();
        let normalized = normalize_poly_decomposition(&whole, &[outer, inner]).unwrap();
        let composite = normalized[0].compose(&normalized[1]).unwrap();
        prop_assert_eq!(composite, whole.clone());
        let known = all_complete_decompositions(&whole).unwrap();
        prop_assert!(known.iter().any(|d| d.factors() == normalized.as_slice()));
    }

    #[test]
    fn polynomial_automorphisms_fix_infinity(g in prop::collection::vec(-5i64..6, 3..6)) {
        let field = f(7);
        let g = Poly::from_i64s(&field, &g);
        prop_assume!(g.degree() >= 2);
        let aut = aut_search(&RationalFunction::from_poly(&g)).unwrap();
        prop_assert!(aut.len() <= g.degree());
        for m in &aut {
            prop_assert_eq!(m.apply(&ProjPoint::Infinity), ProjPoint::Infinity);
            for k in &aut {
                prop_assert!(aut.contains(&m.compose(k)));
            }
        }
    }
}

#[test]
fn reciprocal_example_maps() {
    let field = f(7);
    let x = RationalFunction::x(&field);
    let inv = MobiusMap::reciprocal(&field);
    assert_eq!(inv.apply(&ProjPoint::Finite(field.zero())), ProjPoint::Infinity);
    assert_eq!(rational(&field, &[0, 1], &[1]).unwrap(), x);
    let f1 = rational(&field, &[1, 0, 1], &[0, 1]).unwrap();
    let aut = aut_search(&f1).unwrap();
    assert_eq!(aut.len(), 2);
    let f3 = rational(&field, &[1, 0, 0, 0, 0, 0, 1], &[0, 0, 0, 1]).unwrap();
    assert_eq!(f1.compose(&rational(&field, &[0, 0, 0, 1], &[1]).unwrap()).unwrap(), f3);
}

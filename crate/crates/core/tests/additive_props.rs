use proptest::prelude::*;
use ritt_core::additive::{all_complete_skew_factorizations, verify_ore_invariance, SkewPoly};
use ritt_core::field::Field;

const FIELDS: [u64; 5] = [2, 3, 4, 5, 9];

fn skew(q: u64, codes: &[u64]) -> SkewPoly {
    let f = Field::fq(q).unwrap();
    SkewPoly::new(&f, codes.iter().map(|&c| f.element(c % q).unwrap()).collect()).unwrap()
}

fn codes(max_degree: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..9, 1..=max_degree + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplication_is_associative(fi in 0usize..5, a in codes(3), b in codes(3), c in codes(3)) {
        let q = FIELDS[fi];
        let (a, b, c) = (skew(q, &a), skew(q, &b), skew(q, &c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let sum = b.add(&c).unwrap();
        prop_assert_eq!(a.mul(&sum).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn right_division_identity(fi in 0usize..5, f in codes(5), d in codes(3)) {
        let q = FIELDS[fi];
        let (f, d) = (skew(q, &f), skew(q, &d));
        prop_assume!(!d.is_zero());
        let (quo, rem) = f.right_divide(&d).unwrap();
        prop_assert_eq!(quo.mul(&d).unwrap().add(&rem).unwrap(), f);
        prop_assert!(rem.is_zero() || rem.tau_degree() < d.tau_degree());
    }

    #[test]
    fn additive_form_is_degree_compatible(fi in 0usize..5, a in codes(3), b in codes(2)) {
        let q = FIELDS[fi];
        let (a, b) = (skew(q, &a), skew(q, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = Field::fq(q).unwrap().characteristic() as usize;
        let x = a.to_additive();
        prop_assert_eq!(x.degree(), p.pow(a.tau_degree() as u32));
        prop_assert_eq!(SkewPoly::from_additive(&x).unwrap(), a.clone());
        let product = a.mul(&b).unwrap().to_additive();
        prop_assert_eq!(product, x.compose(&b.to_additive()).unwrap());
    }

    #[test]
    fn factorizations_multiply_back(fi in 0usize..3, f in codes(3)) {
        let q = [2u64, 3, 4][fi];
        let f = skew(q, &f);
        prop_assume!(f.tau_degree() >= 1);
        let report = verify_ore_invariance(&f).unwrap();
        for fac in all_complete_skew_factorizations(&f).unwrap() {
            prop_assert_eq!(fac.len(), report.length);
            let product = fac.iter().skip(1).fold(fac[0].clone(), |acc, g| acc.mul(g).unwrap());
            prop_assert_eq!(product, f.clone());
            prop_assert!(fac.iter().skip(1).all(SkewPoly::is_monic));
        }
    }
}

//! Named table of every group of order at most 16, used to label abstract
//! isomorphism types (e.g. automorphism quotients) by exhaustive matching.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use super::group::PermutationGroup;
use super::iso::perm_isomorphic;
use super::permutation::Permutation;

/// Largest order covered by the table.
pub const MAX_TABLE_ORDER: usize = 16;

#[derive(Debug, Clone)]
pub struct SmallGroup {
    pub name: &'static str,
    /// Left regular representation.
    pub regular: PermutationGroup,
}

/// Regular representation of the group with element list `elements`,
/// multiplication `mul` and generators `gens`.
fn regular_from<T, F>(elements: &[T], mul: F, gens: &[T]) -> PermutationGroup
where
    T: Eq + Hash + Clone,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<&T, u32> = elements.iter().enumerate().map(|(i, x)| (x, i as u32)).collect();
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|g| {
            let images = elements.iter().map(|x| index[&mul(g, x)]).collect();
            Permutation::from_images(images).expect("left multiplication is a bijection")
        })
        .collect();
    PermutationGroup::close(elements.len(), &perms).expect("small table group")
}

/// `⟨a, b | a^m = 1, b^k = a^s, b a b⁻¹ = a^r⟩`, elements `a^i b^j`.
fn metacyclic(m: usize, k: usize, r: usize, s: usize) -> PermutationGroup {
    let elements: Vec<(usize, usize)> =
        (0..k).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    let mul = |x: &(usize, usize), y: &(usize, usize)| {
        let twist = (0..x.1).fold(1usize, |acc, _| acc * r % m);
        let mut i = x.0 + y.0 * twist;
        let mut j = x.1 + y.1;
        if j >= k {
            j -= k;
            i += s;
        }
        (i % m, j)
    };
    let mut gens = vec![(1 % m, 0)];
    if k > 1 {
        gens.push((0, 1));
    }
    regular_from(&elements, mul, &gens)
}

fn cyclic(n: usize) -> PermutationGroup {
    metacyclic(n, 1, 1, 0)
}

fn dihedral(n: usize) -> PermutationGroup {
    metacyclic(n, 2, n - 1, 0)
}

/// Abstract direct product of two regular representations.
fn direct_product(a: &PermutationGroup, b: &PermutationGroup) -> PermutationGroup {
    let ea = a.elements().to_vec();
    let eb = b.elements().to_vec();
    let elements: Vec<(Permutation, Permutation)> =
        ea.iter().flat_map(|x| eb.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let mul = |x: &(Permutation, Permutation), y: &(Permutation, Permutation)| {
        (x.0.compose(&y.0), x.1.compose(&y.1))
    };
    let mut gens: Vec<(Permutation, Permutation)> = a
        .generators()
        .iter()
        .map(|g| (g.clone(), Permutation::identity(b.degree())))
        .collect();
    gens.extend(b.generators().iter().map(|g| (Permutation::identity(a.degree()), g.clone())));
    regular_from(&elements, mul, &gens)
}

/// `(C4 × C2) ⋊ C2` with the involution `(i, j) ↦ (i, j + i)`.
fn c2sq_by_c4() -> PermutationGroup {
    let elements: Vec<(usize, usize, usize)> = (0..2)
        .flat_map(|e| (0..2).flat_map(move |j| (0..4).map(move |i| (i, j, e))))
        .collect();
    let mul = |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
        let (yi, yj) = if x.2 == 1 { (y.0, (y.1 + y.0) % 2) } else { (y.0, y.1) };
        ((x.0 + yi) % 4, (x.1 + yj) % 2, (x.2 + y.2) % 2)
    };
    regular_from(&elements, mul, &[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
}

/// The Pauli group `{±1, ±i} × {I, X, Y, Z}`, i.e. `C4 ∘ D4`.
fn pauli() -> PermutationGroup {
    // phase in units of i; matrices I, X, Y, Z = 0, 1, 2, 3
    let elements: Vec<(usize, usize)> = (0..4).flat_map(|p| (0..4).map(move |k| (k, p))).collect();
    let mul = |x: &(usize, usize), y: &(usize, usize)| {
        let (phase, prod) = match (x.1, y.1) {
            (0, q) => (0, q),
            (p, 0) => (0, p),
            (p, q) if p == q => (0, 0),
            (1, 2) => (1, 3),
            (2, 3) => (1, 1),
            (3, 1) => (1, 2),
            (2, 1) => (3, 3),
            (3, 2) => (3, 1),
            (1, 3) => (3, 2),
            _ => unreachable!(),
        };
        ((x.0 + y.0 + phase) % 4, prod)
    };
    regular_from(&elements, mul, &[(0, 1), (0, 3), (1, 0)])
}

fn alternating4() -> PermutationGroup {
    let gens = [
        Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
        Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
    ];
    PermutationGroup::close(4, &gens).unwrap().regular_representation()
}

fn build_table() -> Vec<SmallGroup> {
    let c2 = cyclic(2);
    let c2sq = metacyclic(2, 2, 1, 0);
    let c2cube = direct_product(&c2sq, &c2);
    let c4c2 = metacyclic(4, 2, 1, 0);
    let d4 = dihedral(4);
    let q8 = metacyclic(4, 2, 3, 2);
    let entries: Vec<(&'static str, PermutationGroup)> = vec![
        ("1", cyclic(1)),
        ("C2", c2.clone()),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2^2", c2sq.clone()),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", dihedral(3)),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("C4xC2", c4c2.clone()),
        ("C2^3", c2cube.clone()),
        ("D4", d4.clone()),
        ("Q8", q8.clone()),
        ("C9", cyclic(9)),
        ("C3^2", metacyclic(3, 3, 1, 0)),
        ("C10", cyclic(10)),
        ("D5", dihedral(5)),
        ("C11", cyclic(11)),
        ("C12", cyclic(12)),
        ("C6xC2", metacyclic(6, 2, 1, 0)),
        ("D6", dihedral(6)),
        ("A4", alternating4()),
        ("Dic3", metacyclic(6, 2, 5, 3)),
        ("C13", cyclic(13)),
        ("C14", cyclic(14)),
        ("D7", dihedral(7)),
        ("C15", cyclic(15)),
        ("C16", cyclic(16)),
        ("C8xC2", metacyclic(8, 2, 1, 0)),
        ("C4^2", metacyclic(4, 4, 1, 0)),
        ("C4xC2^2", direct_product(&c4c2, &c2)),
        ("C2^4", direct_product(&c2cube, &c2)),
        ("D8", dihedral(8)),
        ("SD16", metacyclic(8, 2, 3, 0)),
        ("Q16", metacyclic(8, 2, 7, 4)),
        ("M16", metacyclic(8, 2, 5, 0)),
        ("C4:C4", metacyclic(4, 4, 3, 0)),
        ("C2xD4", direct_product(&d4, &c2)),
        ("C2xQ8", direct_product(&q8, &c2)),
        ("C2^2:C4", c2sq_by_c4()),
        ("C4oD4", pauli()),
    ];
    entries.into_iter().map(|(name, regular)| SmallGroup { name, regular }).collect()
}

pub fn small_group_table() -> &'static [SmallGroup] {
    static TABLE: OnceLock<Vec<SmallGroup>> = OnceLock::new();
    TABLE.get_or_init(build_table)
}

/// Name of the abstract isomorphism type of `g`, if `|g| ≤ 16`.
pub fn small_group_label(g: &PermutationGroup) -> Option<&'static str> {
    if g.order() > MAX_TABLE_ORDER {
        return None;
    }
    let regular = g.regular_representation();
    let profile = regular.order_profile();
    small_group_table()
        .iter()
        .filter(|e| e.regular.order() == g.order() && e.regular.order_profile() == profile)
        .find(|e| perm_isomorphic(&e.regular, &regular))
        .map(|e| e.name)
}

/// Abstract-type label, falling back to order and commutativity.
pub fn abstract_label(g: &PermutationGroup) -> String {
    match small_group_label(g) {
        Some(name) => name.to_string(),
        None if g.is_abelian() => format!("abelian of order {}", g.order()),
        None => format!("order {}", g.order()),
    }
}

/// Label of a permutation group up to the abstract type, plus its degree.
pub fn describe_action(g: &PermutationGroup) -> String {
    format!("{} on {} points", abstract_label(g), g.degree())
}

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::permutation::Permutation;

/// Default bound on the number of elements a group may have.
pub const DEFAULT_ELEMENT_CAP: usize = 50_000;

/// Default bound on the number of subgroups an intermediate lattice may have.
pub const DEFAULT_LATTICE_CAP: usize = 10_000;

/// A finite permutation group, kept fully enumerated.
///
/// Elements are sorted lexicographically by image sequence; two groups are
/// equal exactly when they have the same degree and the same element set,
/// regardless of the generators they were built from.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Arc<Vec<Permutation>>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

impl Hash for PermutationGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree {}, order {}, <", self.degree, self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">)")
    }
}

/// Closes `seed ∪ new` under left multiplication by `gens`, one left coset of
/// `seed` at a time. `seed` must already be a group containing the identity.
fn closure_over(
    seed: &[Permutation],
    gens: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    let mut set: HashSet<Permutation> = seed.iter().cloned().collect();
    let mut out: Vec<Permutation> = seed.to_vec();
    let mut reps: VecDeque<Permutation> = VecDeque::new();
    reps.push_back(seed[0].clone());
    while let Some(r) = reps.pop_front() {
        for s in gens {
            let y = s.compose(&r);
            if set.contains(&y) {
                continue;
            }
            if out.len() + seed.len() > cap {
                return Err(Error::CapExceeded { cap });
            }
            for u in seed {
                let z = y.compose(u);
                set.insert(z.clone());
                out.push(z);
            }
            reps.push_back(y);
        }
    }
    Ok(out)
}

impl PermutationGroup {
    /// Enumerates the group generated by `generators` with the default cap.
    pub fn close(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::close_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn close_with_cap(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::InvalidInput(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let gens: Vec<Permutation> =
            generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let seed = [Permutation::identity(degree)];
        let mut elements = closure_over(&seed, &gens, cap)?;
        elements.sort();
        Ok(PermutationGroup { degree, generators: gens, elements: Arc::new(elements) })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            elements: Arc::new(vec![Permutation::identity(degree)]),
        }
    }

    /// The full symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree <= 1 {
            return Ok(Self::trivial(degree));
        }
        let cycle: Vec<u32> = (0..degree as u32).collect();
        let gens = [
            Permutation::from_cycles(degree, &[cycle])?,
            Permutation::from_cycles(degree, &[vec![0, 1]])?,
        ];
        Self::close(degree, &gens)
    }

    /// Wraps a set already known to be closed under composition, picking a
    /// small generating set greedily.
    pub(crate) fn from_closed_set(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.first().is_some_and(|e| e.is_identity()));
        let mut current = vec![Permutation::identity(degree)];
        let mut members: HashSet<Permutation> = current.iter().cloned().collect();
        let mut gens = Vec::new();
        for x in &elements {
            if members.contains(x) {
                continue;
            }
            gens.push(x.clone());
            current = closure_over(&current, &gens, usize::MAX).expect("uncapped");
            members = current.iter().cloned().collect();
            if current.len() == elements.len() {
                break;
            }
        }
        debug_assert_eq!(current.len(), elements.len(), "set was not closed");
        PermutationGroup { degree, generators: gens, elements: Arc::new(elements) }
    }

    /// Validating variant of [`Self::from_closed_set`].
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let set: HashSet<&Permutation> = elements.iter().collect();
        if !elements.iter().any(Permutation::is_identity) {
            return Err(Error::InvalidInput("element set lacks the identity".into()));
        }
        for a in &elements {
            if a.degree() != degree {
                return Err(Error::InvalidInput("element of wrong degree".into()));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::InvalidInput("element set is not closed".into()));
                }
            }
        }
        Ok(Self::from_closed_set(degree, elements))
    }

    /// `⟨self, extra⟩`.
    pub fn extend(&self, extra: &[Permutation]) -> Result<Self> {
        let mut gens = self.generators.clone();
        for g in extra {
            if !self.contains(g) && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        if gens.len() == self.generators.len() {
            return Ok(self.clone());
        }
        let mut elements = closure_over(&self.elements, &gens, DEFAULT_ELEMENT_CAP)?;
        elements.sort();
        Ok(PermutationGroup { degree: self.degree, generators: gens, elements: Arc::new(elements) })
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &PermutationGroup) -> Result<Self> {
        self.extend(&other.generators)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let orbit = self.orbit(p);
            for &x in &orbit {
                seen[x as usize] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn point_stabilizer(&self, point: u32) -> Result<Self> {
        if point as usize >= self.degree {
            return Err(Error::InvalidInput(format!(
                "point {point} outside degree {}",
                self.degree
            )));
        }
        let elements = self.elements.iter().filter(|g| g.apply(point) == point).cloned().collect();
        Ok(Self::from_closed_set(self.degree, elements))
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Transitive with trivial point stabilizers.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|g| g.order() == self.order())
    }

    /// `⟨g⟩` as a sorted element list.
    pub fn cyclic_elements(g: &Permutation) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(g.degree())];
        let mut x = g.clone();
        while !x.is_identity() {
            out.push(x.clone());
            x = x.compose(g);
        }
        out.sort();
        out
    }

    /// The distinct cyclic subgroups, each as a sorted element list, in
    /// lexicographic order of those lists.
    pub fn cyclic_subgroups(&self) -> Vec<Vec<Permutation>> {
        let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
        let mut out = Vec::new();
        for g in self.elements.iter() {
            let c = Self::cyclic_elements(g);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    /// Every subgroup normal. Checking cyclic subgroups suffices, since a
    /// subgroup generated by normal subgroups is normal.
    pub fn is_dedekind(&self) -> bool {
        self.cyclic_subgroups().iter().all(|c| {
            self.generators
                .iter()
                .all(|s| c.iter().all(|x| c.binary_search(&x.conjugate_by(s)).is_ok()))
        })
    }

    /// `IJ = JI` for all subgroups, decided on pairs of cyclic subgroups.
    pub fn is_quasi_hamiltonian(&self) -> bool {
        let cyclic = self.cyclic_subgroups();
        for (i, a) in cyclic.iter().enumerate() {
            for b in &cyclic[i + 1..] {
                if !sets_permute(a, b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn conjugate(&self, g: &Permutation) -> Self {
        let elements = self.elements.iter().map(|x| x.conjugate_by(g)).collect::<Vec<_>>();
        let mut sorted = elements;
        sorted.sort();
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|x| x.conjugate_by(g)).collect(),
            elements: Arc::new(sorted),
        }
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements.iter().map(Permutation::order).collect();
        v.sort_unstable();
        v
    }

    /// The left regular representation on `order()` points, points indexed by
    /// the sorted element list.
    pub fn regular_representation(&self) -> Self {
        let index: HashMap<&Permutation, u32> =
            self.elements.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();
        let n = self.order();
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|s| {
                let images = self.elements.iter().map(|x| index[&s.compose(x)]).collect();
                Permutation::from_images(images).expect("left multiplication is a bijection")
            })
            .collect();
        PermutationGroup::close(n, &gens).expect("regular image has the same order")
    }
}

fn sets_permute(a: &[Permutation], b: &[Permutation]) -> bool {
    let mut ab: Vec<Permutation> =
        a.iter().flat_map(|x| b.iter().map(move |y| x.compose(y))).collect();
    let mut ba: Vec<Permutation> =
        b.iter().flat_map(|y| a.iter().map(move |x| y.compose(x))).collect();
    ab.sort();
    ab.dedup();
    ba.sort();
    ba.dedup();
    ab == ba
}

/// The product set `IJ` and whether it is a subgroup.
#[derive(Debug, Clone)]
pub struct SetProduct {
    pub elements: Vec<Permutation>,
    pub is_subgroup: bool,
}

pub fn set_product(i: &PermutationGroup, j: &PermutationGroup) -> SetProduct {
    let a = i.elements();
    let b = j.elements();
    let mut ij: Vec<Permutation> =
        a.iter().flat_map(|x| b.iter().map(move |y| x.compose(y))).collect();
    ij.sort();
    ij.dedup();
    let is_subgroup = ij.len() == a.len() * b.len() / intersection(i, j).order()
        && b.iter().all(|y| a.iter().all(|x| ij.binary_search(&y.compose(x)).is_ok()));
    SetProduct { elements: ij, is_subgroup }
}

pub fn intersection(i: &PermutationGroup, j: &PermutationGroup) -> PermutationGroup {
    let (small, big) = if i.order() <= j.order() { (i, j) } else { (j, i) };
    let elements = small.elements().iter().filter(|g| big.contains(g)).cloned().collect();
    PermutationGroup::from_closed_set(i.degree(), elements)
}

/// `N_G(U) = {g ∈ G : gUg⁻¹ = U}`.
pub fn normalizer_in(g: &PermutationGroup, u: &PermutationGroup) -> PermutationGroup {
    let elements = g
        .elements()
        .iter()
        .filter(|x| u.generators().iter().all(|s| u.contains(&s.conjugate_by(x))))
        .cloned()
        .collect();
    PermutationGroup::from_closed_set(g.degree(), elements)
}

pub fn is_normal_in(g: &PermutationGroup, u: &PermutationGroup) -> bool {
    g.generators()
        .iter()
        .all(|x| u.generators().iter().all(|s| u.contains(&s.conjugate_by(x))))
}

/// `core_G(U) = ⋂_{g ∈ G} g⁻¹Ug`, the largest normal subgroup of `G` inside `U`.
pub fn core_in(g: &PermutationGroup, u: &PermutationGroup) -> PermutationGroup {
    let mut kept: Vec<Permutation> = u.elements().to_vec();
    for x in g.elements() {
        let xinv = x.inverse();
        kept.retain(|y| u.contains(&y.conjugate_by(&xinv)));
        if kept.len() == 1 {
            break;
        }
    }
    PermutationGroup::from_closed_set(g.degree(), kept)
}

/// `G` acting by left multiplication on the left cosets of `U`.
#[derive(Debug, Clone)]
pub struct CosetAction {
    /// Image in `Sym([G:U])`; cosets are numbered by their least element.
    pub image: PermutationGroup,
    /// Elements of `G` fixing every coset.
    pub kernel: PermutationGroup,
    /// Least element of each coset, in coset order.
    pub representatives: Vec<Permutation>,
}

pub fn coset_action(g: &PermutationGroup, u: &PermutationGroup) -> Result<CosetAction> {
    if !u.is_subgroup_of(g) {
        return Err(Error::InvalidInput("coset action needs U ≤ G".into()));
    }
    let mut coset_of: HashMap<&Permutation, u32> = HashMap::with_capacity(g.order());
    let mut reps = Vec::new();
    // elements are sorted, so the first hit in each coset is its least element
    let products: Vec<Vec<Permutation>> = g
        .elements()
        .iter()
        .map(|x| u.elements().iter().map(|y| x.compose(y)).collect())
        .collect();
    let index_of: HashMap<&Permutation, usize> =
        g.elements().iter().enumerate().map(|(i, x)| (x, i)).collect();
    for (i, x) in g.elements().iter().enumerate() {
        if coset_of.contains_key(x) {
            continue;
        }
        let label = reps.len() as u32;
        reps.push(x.clone());
        for y in &products[i] {
            let key = &g.elements()[index_of[y]];
            coset_of.insert(key, label);
        }
    }
    let n = reps.len();
    let act = |s: &Permutation| -> Permutation {
        let images = reps.iter().map(|r| coset_of[&s.compose(r)]).collect();
        Permutation::from_images(images).expect("action on cosets is a bijection")
    };
    let image_gens: Vec<Permutation> = g.generators().iter().map(act).collect();
    let image = PermutationGroup::close(n, &image_gens)?;
    let kernel_elements =
        g.elements().iter().filter(|x| act(x).is_identity()).cloned().collect();
    let kernel = PermutationGroup::from_closed_set(g.degree(), kernel_elements);
    Ok(CosetAction { image, kernel, representatives: reps })
}

/// All `U` with `H ≤ U ≤ G`, sorted by (order, element list).
///
/// Built by layered single-element extension: every subgroup containing `H`
/// is reached from `H` by adjoining one element at a time.
pub fn intermediate_subgroups(
    g: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<Vec<PermutationGroup>> {
    intermediate_subgroups_with_cap(g, h, DEFAULT_LATTICE_CAP)
}

pub fn intermediate_subgroups_with_cap(
    g: &PermutationGroup,
    h: &PermutationGroup,
    cap: usize,
) -> Result<Vec<PermutationGroup>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::InvalidInput("lattice needs H ≤ G".into()));
    }
    let mut found: HashSet<Arc<Vec<Permutation>>> = HashSet::new();
    let mut out: Vec<PermutationGroup> = Vec::new();
    let mut queue: VecDeque<PermutationGroup> = VecDeque::new();
    found.insert(h.elements.clone());
    queue.push_back(h.clone());
    while let Some(u) = queue.pop_front() {
        // ⟨U, g⟩ only depends on the double coset UgU.
        let mut covered: HashSet<&Permutation> = u.elements().iter().collect();
        let mut new_groups = Vec::new();
        for x in g.elements() {
            if covered.contains(x) {
                continue;
            }
            let v = u.extend(std::slice::from_ref(x))?;
            for a in u.elements() {
                for b in u.elements() {
                    let y = a.compose(x).compose(b);
                    if let Ok(pos) = g.elements.binary_search(&y) {
                        covered.insert(&g.elements()[pos]);
                    }
                }
            }
            new_groups.push(v);
        }
        for v in new_groups {
            if found.insert(v.elements.clone()) {
                if found.len() > cap {
                    return Err(Error::LatticeTooLarge { cap });
                }
                queue.push_back(v);
            }
        }
        out.push(u);
    }
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(out)
}

/// Every subgroup of `G`.
pub fn all_subgroups(g: &PermutationGroup) -> Result<Vec<PermutationGroup>> {
    intermediate_subgroups(g, &PermutationGroup::trivial(g.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::permutation::parse_cycles;

    fn grp(degree: usize, gens: &[&str]) -> PermutationGroup {
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(degree, s).unwrap()).collect();
        PermutationGroup::close(degree, &gens).unwrap()
    }

    fn d6() -> PermutationGroup {
        grp(6, &["(0 1 2 3 4 5)", "(1 5)(2 4)"])
    }

    fn q8() -> PermutationGroup {
        grp(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"])
    }

    #[test]
    fn closure_orders() {
        assert_eq!(grp(3, &["(0 1 2)"]).order(), 3);
        assert_eq!(d6().order(), 12);
        assert_eq!(q8().order(), 8);
        assert_eq!(PermutationGroup::symmetric(4).unwrap().order(), 24);
    }

    #[test]
    fn closure_is_sorted_and_contains_identity() {
        let g = d6();
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [parse_cycles(5, "(0 1 2 3 4)").unwrap(), parse_cycles(5, "(0 1)").unwrap()];
        assert_eq!(
            PermutationGroup::close_with_cap(5, &gens, 100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
        assert_eq!(PermutationGroup::close_with_cap(5, &gens, 120).unwrap().order(), 120);
    }

    #[test]
    fn stabilizers() {
        let s3 = PermutationGroup::symmetric(3).unwrap();
        assert_eq!(s3.point_stabilizer(2).unwrap(), grp(3, &["(0 1)"]));
        assert_eq!(d6().point_stabilizer(0).unwrap(), grp(6, &["(1 5)(2 4)"]));
        for p in 0..8 {
            assert!(q8().point_stabilizer(p).unwrap().is_trivial());
        }
        assert!(s3.point_stabilizer(3).is_err());
    }

    #[test]
    fn transitivity_and_commutativity() {
        let c6 = grp(6, &["(0 1 2 3 4 5)"]);
        assert!(c6.is_transitive() && c6.is_abelian());
        assert!(d6().is_transitive() && !d6().is_abelian());
        assert!(!grp(3, &["(0 1)"]).is_transitive());
    }

    #[test]
    fn dedekind_and_quasi_hamiltonian() {
        let s3 = PermutationGroup::symmetric(3).unwrap();
        assert!(q8().is_dedekind() && q8().is_quasi_hamiltonian());
        assert!(!s3.is_dedekind() && !s3.is_quasi_hamiltonian());
        assert!(grp(6, &["(0 1 2 3 4 5)"]).is_dedekind());
    }

    #[test]
    fn set_products() {
        let s3 = PermutationGroup::symmetric(3).unwrap();
        let a = grp(3, &["(0 1)"]);
        let b = grp(3, &["(0 2)"]);
        let p = set_product(&a, &b);
        assert_eq!((p.elements.len(), p.is_subgroup), (4, false));
        let same = set_product(&a, &a);
        assert_eq!(same.elements, a.elements().to_vec());
        assert!(same.is_subgroup);
        let rot = grp(6, &["(0 1 2 3 4 5)"]);
        let refl = grp(6, &["(1 5)(2 4)"]);
        let full = set_product(&rot, &refl);
        assert!(full.is_subgroup);
        assert_eq!(full.elements, d6().elements().to_vec());
        let _ = s3;
    }

    #[test]
    fn normalizers_and_intersections() {
        let s3 = PermutationGroup::symmetric(3).unwrap();
        let h = grp(3, &["(0 1)"]);
        assert_eq!(normalizer_in(&s3, &h), h);
        assert_eq!(normalizer_in(&d6(), &grp(6, &["(1 5)(2 4)"])).order(), 4);
        let i = grp(8, &["(0 1 2 3)(4 5 6 7)"]);
        let j = grp(8, &["(0 4 2 6)(1 7 3 5)"]);
        let z = intersection(&i, &j);
        assert_eq!(z.order(), 2);
        assert!(is_normal_in(&q8(), &z));
    }

    #[test]
    fn cores() {
        let s3 = PermutationGroup::symmetric(3).unwrap();
        let a3 = grp(3, &["(0 1 2)"]);
        assert_eq!(core_in(&s3, &a3), a3);
        assert!(core_in(&s3, &grp(3, &["(0 1)"])).is_trivial());
        let klein = grp(6, &["(0 3)(1 4)(2 5)", "(1 5)(2 4)"]);
        assert_eq!(klein.order(), 4);
        assert_eq!(core_in(&d6(), &klein), grp(6, &["(0 3)(1 4)(2 5)"]));
    }

    #[test]
    fn coset_actions() {
        let s3 = PermutationGroup::symmetric(3).unwrap();
        let act = coset_action(&s3, &grp(3, &["(0 1)"])).unwrap();
        assert_eq!((act.image.degree(), act.image.order()), (3, 6));
        assert!(act.kernel.is_trivial());

        let klein = grp(6, &["(0 3)(1 4)(2 5)", "(1 5)(2 4)"]);
        let act = coset_action(&d6(), &klein).unwrap();
        assert_eq!((act.image.degree(), act.image.order(), act.kernel.order()), (3, 6, 2));
        assert_eq!(act.kernel, core_in(&d6(), &klein));

        let act = coset_action(&d6(), &d6()).unwrap();
        assert_eq!((act.image.degree(), act.image.order()), (1, 1));
    }

    #[test]
    fn lattices() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3).unwrap();
        assert_eq!(intermediate_subgroups(&s4, &s3).unwrap(), vec![s3.clone(), s4.clone()]);

        let h = grp(6, &["(1 5)(2 4)"]);
        let lat = intermediate_subgroups(&d6(), &h).unwrap();
        assert_eq!(lat.iter().map(|u| u.order()).collect::<Vec<_>>(), vec![2, 4, 6, 12]);

        assert_eq!(intermediate_subgroups(&d6(), &d6()).unwrap(), vec![d6()]);
        assert_eq!(all_subgroups(&q8()).unwrap().len(), 6);
        assert_eq!(all_subgroups(&s4).unwrap().len(), 30);
    }

    #[test]
    fn regular_representation_is_regular() {
        let r = d6().regular_representation();
        assert_eq!((r.degree(), r.order()), (12, 12));
        assert!(r.is_regular());
    }
}

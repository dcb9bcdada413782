use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::permgroup::{
    core_in, intermediate_subgroups, intersection, set_product, Permutation, PermutationGroup,
};

/// The subgroups between `H` and `G`, sorted by (order, elements): id 0 is
/// `H`, the last id is `G`.
#[derive(Debug, Clone)]
pub struct Lattice {
    members: Vec<PermutationGroup>,
    index: HashMap<Vec<Permutation>, usize>,
    /// `above[i]`: ids of members strictly containing member `i`.
    above: Vec<Vec<usize>>,
    /// `covers[i]`: maximal members strictly below member `i`.
    covers: Vec<Vec<usize>>,
}

impl Lattice {
    fn build(members: Vec<PermutationGroup>) -> Self {
        let n = members.len();
        let index = members.iter().enumerate().map(|(i, m)| (m.elements().to_vec(), i)).collect();
        let mut above = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if members[j].order() > members[i].order() && members[i].is_subgroup_of(&members[j])
                {
                    above[i].push(j);
                }
            }
        }
        let mut covers = vec![Vec::new(); n];
        for i in 0..n {
            for &j in &above[i] {
                // i is maximal below j if nothing sits strictly between
                let between = above[i].iter().any(|&k| k != j && above[k].contains(&j));
                if !between {
                    covers[j].push(i);
                }
            }
        }
        Lattice { members, index, above, covers }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[PermutationGroup] {
        &self.members
    }

    pub fn get(&self, id: usize) -> &PermutationGroup {
        &self.members[id]
    }

    pub fn id_of(&self, group: &PermutationGroup) -> Option<usize> {
        self.index.get(group.elements()).copied()
    }

    pub fn top(&self) -> usize {
        self.members.len() - 1
    }

    /// `a ≤ b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.above[a].contains(&b)
    }

    /// Maximal members strictly below `id`, in id order.
    pub fn maximal_below(&self, id: usize) -> &[usize] {
        &self.covers[id]
    }

    /// `⟨a, b⟩`, which is always a lattice member.
    pub fn join(&self, a: usize, b: usize) -> usize {
        (0..self.len())
            .find(|&k| self.le(a, k) && self.le(b, k))
            .expect("the top member contains everything")
    }

    /// `a ∩ b`.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let m = intersection(&self.members[a], &self.members[b]);
        self.id_of(&m).expect("intersection of members contains H")
    }

    pub fn index(&self, upper: usize, lower: usize) -> usize {
        self.members[upper].order() / self.members[lower].order()
    }
}

/// A decreasing chain `G = V_n > … > V_0 = H` of lattice members, stored top
/// down as lattice ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    members: Vec<usize>,
    maximal: bool,
}

impl Chain {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Number of steps, i.e. the number of factors of the decomposition.
    pub fn len(&self) -> usize {
        self.members.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, " > ")?;
            }
            write!(f, "#{m}")?;
        }
        Ok(())
    }
}

/// `(G, H, A)` together with the lattice of groups between `H` and `G`.
///
/// `G` models a monodromy group (transitive, faithful), `H` a point
/// stabilizer and `A` an optional transitive subgroup.
#[derive(Debug, Clone)]
pub struct ChainContext {
    name: String,
    g: PermutationGroup,
    h: PermutationGroup,
    point: u32,
    a: Option<PermutationGroup>,
    lattice: Arc<Lattice>,
}

impl ChainContext {
    pub fn new(
        name: impl Into<String>,
        g: PermutationGroup,
        h: PermutationGroup,
        a: Option<PermutationGroup>,
    ) -> Result<Self> {
        if !g.is_transitive() {
            return Err(Error::InvalidInput("G must be transitive".into()));
        }
        if !h.is_subgroup_of(&g) {
            return Err(Error::InvalidInput("H must be a subgroup of G".into()));
        }
        let point = (0..g.degree() as u32)
            .find(|&p| g.point_stabilizer(p).map(|s| s == h).unwrap_or(false))
            .ok_or_else(|| Error::InvalidInput("H is not a one-point stabilizer of G".into()))?;
        if !core_in(&g, &h).is_trivial() {
            return Err(Error::InvalidInput("G does not act faithfully".into()));
        }
        if let Some(a) = &a {
            if !a.is_subgroup_of(&g) {
                return Err(Error::InvalidInput("A must be a subgroup of G".into()));
            }
            let ah = set_product(a, &h);
            if !(ah.is_subgroup && ah.elements.len() == g.order()) {
                return Err(Error::InvalidInput("A is not transitive (AH != G)".into()));
            }
        }
        let lattice = Lattice::build(intermediate_subgroups(&g, &h)?);
        Ok(ChainContext { name: name.into(), g, h, point, a, lattice: Arc::new(lattice) })
    }

    /// Uses the stabilizer of `point` as `H`.
    pub fn with_stabilizer(
        name: impl Into<String>,
        g: PermutationGroup,
        point: u32,
        a: Option<PermutationGroup>,
    ) -> Result<Self> {
        let h = g.point_stabilizer(point)?;
        Self::new(name, g, h, a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn g(&self) -> &PermutationGroup {
        &self.g
    }

    pub fn h(&self) -> &PermutationGroup {
        &self.h
    }

    /// The point whose stabilizer is `H`.
    pub fn point(&self) -> u32 {
        self.point
    }

    pub fn a(&self) -> Option<&PermutationGroup> {
        self.a.as_ref()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Degree of the point action, `[G:H]`.
    pub fn degree(&self) -> usize {
        self.g.degree()
    }

    pub(crate) fn require_a(&self) -> Result<&PermutationGroup> {
        self.a
            .as_ref()
            .ok_or_else(|| Error::HypothesisFailed("no transitive subgroup A supplied".into()))
    }

    /// Builds a chain from lattice ids listed top down, validating the
    /// endpoints and strict inclusions.
    pub fn chain(&self, members: Vec<usize>) -> Result<Chain> {
        let lat = &self.lattice;
        if members.first() != Some(&lat.top()) || members.last() != Some(&0) {
            return Err(Error::InvalidInput("chain must run from G down to H".into()));
        }
        if members.iter().any(|&m| m >= lat.len()) {
            return Err(Error::InvalidInput("chain member outside the lattice".into()));
        }
        let strictly = members.windows(2).all(|w| w[0] != w[1] && lat.le(w[1], w[0]));
        if !strictly {
            return Err(Error::InvalidInput("chain is not strictly decreasing".into()));
        }
        let maximal = members.windows(2).all(|w| lat.maximal_below(w[0]).contains(&w[1]));
        Ok(Chain { members, maximal })
    }

    /// `ρ(U) = U ∩ A`.
    pub fn rho_restrict(&self, u: &PermutationGroup) -> Result<PermutationGroup> {
        let a = self.require_a()?;
        if self.lattice.id_of(u).is_none() {
            return Err(Error::InvalidInput("U is not between H and G".into()));
        }
        let j = intersection(u, a);
        if !set_product(&j, &self.h).is_subgroup {
            return Err(Error::TheoremViolated(format!(
                "(U ∩ A)H is not a group for U of order {}",
                u.order()
            )));
        }
        Ok(j)
    }

    /// `ρ⁻¹(J) = JH`.
    pub fn rho_inverse(&self, j: &PermutationGroup) -> Result<PermutationGroup> {
        let a = self.require_a()?;
        let ha = intersection(&self.h, a);
        if !j.is_subgroup_of(a) || !ha.is_subgroup_of(j) {
            return Err(Error::InvalidInput("J must lie between H ∩ A and A".into()));
        }
        let jh = set_product(j, &self.h);
        if !jh.is_subgroup {
            return Err(Error::NotPermutable);
        }
        Ok(PermutationGroup::from_closed_set(self.g.degree(), jh.elements))
    }
}

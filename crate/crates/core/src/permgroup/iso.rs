use super::group::PermutationGroup;
use super::permutation::Permutation;

/// A point bijection `σ` with `σ G₁ σ⁻¹ = G₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermIsomorphism {
    /// `point_map[x] = σ(x)`.
    pub point_map: Permutation,
    /// Image of each generator of `G₁` under conjugation by `σ`.
    pub generator_images: Vec<Permutation>,
}

/// Per-point invariant used to restrict candidate images.
fn point_signature(g: &PermutationGroup, point: u32) -> (usize, usize) {
    let orbit = g.orbit(point).len();
    (orbit, g.order() / orbit)
}

pub fn perm_isomorphic(a: &PermutationGroup, b: &PermutationGroup) -> bool {
    perm_isomorphism(a, b).is_some()
}

/// Searches for a conjugating point bijection by backtracking over point
/// images. For every generator of `a` the search keeps the elements of `b`
/// that agree with the partial map; an empty candidate list prunes the branch.
pub fn perm_isomorphism(a: &PermutationGroup, b: &PermutationGroup) -> Option<PermIsomorphism> {
    let n = a.degree();
    if n != b.degree() || a.order() != b.order() {
        return None;
    }
    let mut orbit_lengths_a: Vec<usize> = a.orbits().iter().map(Vec::len).collect();
    let mut orbit_lengths_b: Vec<usize> = b.orbits().iter().map(Vec::len).collect();
    orbit_lengths_a.sort_unstable();
    orbit_lengths_b.sort_unstable();
    if orbit_lengths_a != orbit_lengths_b || a.order_profile() != b.order_profile() {
        return None;
    }
    if n == 0 {
        return Some(PermIsomorphism {
            point_map: Permutation::identity(0),
            generator_images: Vec::new(),
        });
    }

    let sig_a: Vec<_> = (0..n as u32).map(|x| point_signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n as u32).map(|x| point_signature(b, x)).collect();

    // Visit points so that each new point is, where possible, the image of an
    // already visited one under some generator.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for start in 0..n as u32 {
        if placed[start as usize] {
            continue;
        }
        placed[start as usize] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let x = order[i];
            for g in a.generators() {
                let y = g.apply(x);
                if !placed[y as usize] {
                    placed[y as usize] = true;
                    order.push(y);
                }
            }
            i += 1;
        }
    }

    let gens = a.generators().to_vec();
    let all_b: Vec<usize> = (0..b.order()).collect();
    let mut search = Search {
        a_gens: &gens,
        b,
        order: &order,
        sig_a: &sig_a,
        sig_b: &sig_b,
        map: vec![u32::MAX; n],
        used: vec![false; n],
    };
    let candidates = vec![all_b; gens.len()];
    if search.extend(0, &candidates) {
        let images = search.map.clone();
        let sigma = Permutation::from_images(images).expect("search builds a bijection");
        let sigma_inv = sigma.inverse();
        let generator_images =
            gens.iter().map(|g| sigma.compose(g).compose(&sigma_inv)).collect::<Vec<_>>();
        debug_assert!(generator_images.iter().all(|h| b.contains(h)));
        return Some(PermIsomorphism { point_map: sigma, generator_images });
    }
    None
}

struct Search<'a> {
    a_gens: &'a [Permutation],
    b: &'a PermutationGroup,
    order: &'a [u32],
    sig_a: &'a [(usize, usize)],
    sig_b: &'a [(usize, usize)],
    map: Vec<u32>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, candidates: &[Vec<usize>]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let n = self.map.len() as u32;

        // Images forced by an assigned preimage under some generator.
        let mut allowed: Option<Vec<bool>> = None;
        for (gi, g) in self.a_gens.iter().enumerate() {
            let pre = g.inverse().apply(x);
            let m = self.map[pre as usize];
            if m == u32::MAX {
                continue;
            }
            let mut mask = vec![false; n as usize];
            for &h in &candidates[gi] {
                mask[self.b.elements()[h].apply(m) as usize] = true;
            }
            allowed = Some(match allowed {
                None => mask,
                Some(prev) => prev.iter().zip(&mask).map(|(p, q)| *p && *q).collect(),
            });
        }

        for y in 0..n {
            if self.used[y as usize] || self.sig_a[x as usize] != self.sig_b[y as usize] {
                continue;
            }
            if let Some(mask) = &allowed {
                if !mask[y as usize] {
                    continue;
                }
            }
            self.map[x as usize] = y;
            self.used[y as usize] = true;
            if let Some(next) = self.filter(x, candidates) {
                if self.extend(depth + 1, &next) {
                    return true;
                }
            }
            self.map[x as usize] = u32::MAX;
            self.used[y as usize] = false;
        }
        false
    }

    /// Drops candidates inconsistent with the constraints newly enabled by
    /// assigning `x`.
    fn filter(&self, x: u32, candidates: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::with_capacity(candidates.len());
        for (gi, g) in self.a_gens.iter().enumerate() {
            let mut pairs = Vec::with_capacity(2);
            // constraint h(σ(z)) = σ(g(z)) for z with both ends assigned
            let gx = g.apply(x);
            if self.map[gx as usize] != u32::MAX {
                pairs.push((self.map[x as usize], self.map[gx as usize]));
            }
            let pre = g.inverse().apply(x);
            if pre != x && self.map[pre as usize] != u32::MAX {
                pairs.push((self.map[pre as usize], self.map[x as usize]));
            }
            let kept: Vec<usize> = if pairs.is_empty() {
                candidates[gi].clone()
            } else {
                candidates[gi]
                    .iter()
                    .copied()
                    .filter(|&h| {
                        let e = &self.b.elements()[h];
                        pairs.iter().all(|&(from, to)| e.apply(from) == to)
                    })
                    .collect()
            };
            if kept.is_empty() {
                return None;
            }
            out.push(kept);
        }
        Some(out)
    }
}

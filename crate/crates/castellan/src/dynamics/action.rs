//! Finite actions given by one permutation per generator.

use std::collections::HashMap;

use crate::dynamics::DynError;
use crate::group::GroupElem;
use crate::perm::Perm;
use crate::subset::StateSubset;

#[derive(Debug, Clone)]
pub struct Orbits {
    pub orbit_of: Vec<u32>,
    pub members: Vec<Vec<u32>>,
}

/// A finite Γ-space: an indexed state set, one permutation per group
/// generator, and a resolution partition (default: singletons) that plays
/// the role of the δ-diameter discretization.
#[derive(Debug, Clone)]
pub struct FinAction<G: GroupElem> {
    n: usize,
    gens: Vec<(G, Perm)>,
    resolution: Vec<u32>,
    n_cells: usize,
    orbits: Orbits,
}

impl<G: GroupElem> FinAction<G> {
    pub fn new(
        n: usize,
        gens: Vec<(G, Perm)>,
        resolution: Option<Vec<u32>>,
    ) -> Result<Self, DynError> {
        for (_, p) in &gens {
            if p.len() != n {
                return Err(DynError::BadPerm(format!(
                    "permutation over {} states in an action with {} states",
                    p.len(),
                    n
                )));
            }
        }
        let resolution = resolution.unwrap_or_else(|| (0..n as u32).collect());
        if resolution.len() != n {
            return Err(DynError::BadResolution);
        }
        let n_cells = resolution.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut seen = vec![false; n_cells];
        for &c in &resolution {
            seen[c as usize] = true;
        }
        if !seen.iter().all(|&b| b) {
            return Err(DynError::BadResolution);
        }
        let orbits = compute_orbits(n, &gens);
        Ok(FinAction {
            n,
            gens,
            resolution,
            n_cells,
            orbits,
        })
    }

    pub fn states(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(G, Perm)] {
        &self.gens
    }

    pub fn generator_elems(&self) -> Vec<G> {
        self.gens.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn resolution(&self) -> &[u32] {
        &self.resolution
    }

    pub fn cell_of(&self, x: usize) -> u32 {
        self.resolution[x]
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn orbits(&self) -> &Orbits {
        &self.orbits
    }

    /// The permutation of an arbitrary element, by evaluating its word in
    /// the generators through their permutations.
    pub fn perm_of(&self, g: &G) -> Result<Perm, DynError> {
        let elems: Vec<G> = self.gens.iter().map(|(e, _)| e.clone()).collect();
        let word = g
            .express(&elems)
            .ok_or_else(|| DynError::NotExpressible(format!("{g:?}")))?;
        let mut acc = Perm::identity(self.n);
        for (i, k) in word {
            acc = acc.compose(&self.gens[i].1.pow(k));
        }
        Ok(acc)
    }

    pub fn act(&self, g: &G, x: usize) -> Result<usize, DynError> {
        Ok(self.perm_of(g)?.apply(x))
    }

    /// Fix(g) = {x : g·x = x}.
    pub fn fix_set(&self, g: &G) -> Result<StateSubset, DynError> {
        let p = self.perm_of(g)?;
        let mut out = StateSubset::empty(self.n);
        for x in 0..self.n {
            if p.apply(x) == x {
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// The part of X where F acts non-freely:
    /// ∪_{g ∈ F^{-1}F \ {1}} Fix(g). Its complement is exactly the set of x
    /// with g ↦ gx injective on F.
    pub fn nonfree_part(&self, f: &[G]) -> Result<StateSubset, DynError> {
        let mut out = StateSubset::empty(self.n);
        let mut seen = std::collections::HashSet::new();
        for a in f {
            for b in f {
                let g = a.inv().op(b);
                if g == G::identity() || !seen.insert(g.clone()) {
                    continue;
                }
                out = out.union(&self.fix_set(&g)?);
            }
        }
        Ok(out)
    }

    /// A shared permutation cache for algorithms that apply many elements.
    pub fn perm_cache(&self) -> PermCache<'_, G> {
        PermCache {
            act: self,
            cache: HashMap::new(),
        }
    }
}

pub struct PermCache<'a, G: GroupElem> {
    act: &'a FinAction<G>,
    cache: HashMap<G, Perm>,
}

impl<'a, G: GroupElem> PermCache<'a, G> {
    pub fn get(&mut self, g: &G) -> Result<&Perm, DynError> {
        if !self.cache.contains_key(g) {
            let p = self.act.perm_of(g)?;
            self.cache.insert(g.clone(), p);
        }
        Ok(self.cache.get(g).unwrap())
    }
}

fn compute_orbits<G: GroupElem>(n: usize, gens: &[(G, Perm)]) -> Orbits {
    let mut orbit_of = vec![u32::MAX; n];
    let mut members = Vec::new();
    for start in 0..n {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = members.len() as u32;
        let mut stack = vec![start];
        let mut orbit = Vec::new();
        orbit_of[start] = id;
        while let Some(x) = stack.pop() {
            orbit.push(x as u32);
            for (_, p) in gens {
                for y in [p.apply(x), p.inverse().apply(x)] {
                    if orbit_of[y] == u32::MAX {
                        orbit_of[y] = id;
                        stack.push(y);
                    }
                }
            }
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    Orbits { orbit_of, members }
}

/// ℤ acting on ℤ/n by +1.
pub fn cyclic_action(n: usize) -> FinAction<crate::group::LambdaElem> {
    let perm = Perm::new((0..n).map(|x| ((x + 1) % n) as u32).collect()).unwrap();
    FinAction::new(n, vec![(crate::group::LambdaElem(1), perm)], None).unwrap()
}

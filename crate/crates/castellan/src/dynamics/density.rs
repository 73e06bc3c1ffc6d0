//! Banach densities and invariant measures on finite actions.
//!
//! On a finite space every subset is clopen, and the extremal invariant
//! measures are the uniform measures on orbits; lower/upper Banach density
//! of A is therefore the min/max orbit fraction of A. The Følner-limit form
//! is exercised by the density-form operations below and the property tests.

use crate::dynamics::{DynError, FinAction};
use crate::group::GroupElem;
use crate::rat::{rat_usize, rzero, Rat};
use crate::subset::StateSubset;

/// D̲_F(A) = min_x |{t ∈ F : tx ∈ A}| / |F|.
pub fn lower_density_f<G: GroupElem>(
    act: &FinAction<G>,
    f_set: &[G],
    a: &StateSubset,
) -> Result<Rat, DynError> {
    density_f(act, f_set, a, true)
}

/// D̄^F(A) = max_x |{t ∈ F : tx ∈ A}| / |F|.
pub fn upper_density_f<G: GroupElem>(
    act: &FinAction<G>,
    f_set: &[G],
    a: &StateSubset,
) -> Result<Rat, DynError> {
    density_f(act, f_set, a, false)
}

fn density_f<G: GroupElem>(
    act: &FinAction<G>,
    f_set: &[G],
    a: &StateSubset,
    lower: bool,
) -> Result<Rat, DynError> {
    if f_set.is_empty() {
        return Err(DynError::EmptyFolner);
    }
    let perms: Vec<_> = f_set
        .iter()
        .map(|g| act.perm_of(g))
        .collect::<Result<_, _>>()?;
    let mut best: Option<usize> = None;
    for x in 0..act.states() {
        let count = perms.iter().filter(|p| a.contains(p.apply(x))).count();
        best = Some(match best {
            None => count,
            Some(b) => {
                if lower {
                    b.min(count)
                } else {
                    b.max(count)
                }
            }
        });
    }
    Ok(rat_usize(best.unwrap_or(0), f_set.len()))
}

/// Lower Banach density: min over orbits of |A ∩ O| / |O|.
pub fn banach_lower<G: GroupElem>(act: &FinAction<G>, a: &StateSubset) -> Rat {
    orbit_extreme(act, a, true)
}

/// Upper Banach density: max over orbits of |A ∩ O| / |O|.
pub fn banach_upper<G: GroupElem>(act: &FinAction<G>, a: &StateSubset) -> Rat {
    orbit_extreme(act, a, false)
}

fn orbit_extreme<G: GroupElem>(act: &FinAction<G>, a: &StateSubset, lower: bool) -> Rat {
    let mut best: Option<Rat> = None;
    for orbit in &act.orbits().members {
        let hit = orbit.iter().filter(|&&x| a.contains(x as usize)).count();
        let frac = rat_usize(hit, orbit.len());
        best = Some(match best {
            None => frac,
            Some(b) => {
                if lower {
                    b.min(frac)
                } else {
                    b.max(frac)
                }
            }
        });
    }
    best.unwrap_or_else(rzero)
}

/// An invariant measure in orbit-uniform decomposition: one nonnegative
/// weight per orbit, summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantMeasure {
    pub weights: Vec<Rat>,
}

impl InvariantMeasure {
    pub fn measure_of<G: GroupElem>(&self, act: &FinAction<G>, a: &StateSubset) -> Rat {
        let mut total = rzero();
        for (orbit, w) in act.orbits().members.iter().zip(&self.weights) {
            let hit = orbit.iter().filter(|&&x| a.contains(x as usize)).count();
            total += w.clone() * rat_usize(hit, orbit.len());
        }
        total
    }
}

/// The extreme points of M_G(X): one uniform measure per orbit.
pub fn invariant_measures<G: GroupElem>(act: &FinAction<G>) -> Vec<InvariantMeasure> {
    let k = act.orbits().members.len();
    (0..k)
        .map(|i| InvariantMeasure {
            weights: (0..k)
                .map(|j| if i == j { crate::rat::rone() } else { rzero() })
                .collect(),
        })
        .collect()
}

/// The finite model of A^{<η}: in a finite quotient every subset is clopen,
/// so for small η the η-neighborhood is A itself. Kept as an explicit
/// operation so call sites record where the infinite-space thickening of
/// eq-style arguments would act.
pub fn eta_neighborhood(a: &StateSubset, _eta: &Rat) -> StateSubset {
    a.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::action::cyclic_action;
    use crate::group::{FreeWord, GroupElem, LambdaElem};
    use crate::perm::Perm;
    use crate::rat::{rat, rint, rone};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn density_f_examples() {
        let act = cyclic_action(8);
        let all = StateSubset::full(8);
        let none = StateSubset::empty(8);
        let f = [LambdaElem(0), LambdaElem(1)];
        assert_eq!(lower_density_f(&act, &f, &all).unwrap(), rone());
        assert_eq!(upper_density_f(&act, &f, &all).unwrap(), rone());
        assert_eq!(lower_density_f(&act, &f, &none).unwrap(), rint(0));
        assert!(lower_density_f(&act, &[], &all).is_err());

        // A = {0,1,2,3}, F = {0,1}: brute-force over all x gives 1/2 and 1
        let a = StateSubset::from_indices(8, [0, 1, 2, 3]);
        let mut counts = Vec::new();
        for x in 0..8 {
            let c = f
                .iter()
                .filter(|t| a.contains(act.act(t, x).unwrap()))
                .count();
            counts.push(c);
        }
        assert_eq!(*counts.iter().min().unwrap(), 1); // at x = 3 or 7
        assert_eq!(*counts.iter().max().unwrap(), 2);
        assert_eq!(lower_density_f(&act, &f, &a).unwrap(), rat(1, 2));
        assert_eq!(upper_density_f(&act, &f, &a).unwrap(), rone());
    }

    #[test]
    fn banach_examples() {
        // transitive: unique invariant measure is uniform
        let act = cyclic_action(10);
        let a = StateSubset::from_indices(10, [0, 2, 4]);
        assert_eq!(banach_lower(&act, &a), rat(3, 10));
        assert_eq!(banach_upper(&act, &a), rat(3, 10));

        let act12 = cyclic_action(12);
        let a4 = StateSubset::from_indices(12, [0, 3, 6, 9]);
        assert_eq!(banach_lower(&act12, &a4), rat(1, 3));
        assert_eq!(banach_upper(&act12, &a4), rat(1, 3));
    }

    fn two_orbit_action() -> crate::dynamics::FinAction<FreeWord> {
        // orbits {0..3} and {4..11} under one generator
        let mut map: Vec<u32> = Vec::new();
        for x in 0..4u32 {
            map.push((x + 1) % 4);
        }
        for x in 0..8u32 {
            map.push(4 + (x + 1) % 8);
        }
        let p = Perm::new(map).unwrap();
        crate::dynamics::FinAction::new(12, vec![(FreeWord::generator(0), p)], None).unwrap()
    }

    #[test]
    fn two_orbit_extremes() {
        let act = two_orbit_action();
        let small_orbit = StateSubset::from_indices(12, 0..4);
        assert_eq!(banach_lower(&act, &small_orbit), rint(0));
        assert_eq!(banach_upper(&act, &small_orbit), rone());
        let ms = invariant_measures(&act);
        assert_eq!(ms.len(), 2);
    }

    #[test]
    fn measures_are_invariant() {
        let act = two_orbit_action();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let gens = act.generator_elems();
        for m in invariant_measures(&act) {
            for _ in 0..100 {
                let a = StateSubset::from_indices(12, (0..12).filter(|_| rng.gen_bool(0.5)));
                for g in &gens {
                    let ga = a.image(&act.perm_of(g).unwrap());
                    assert_eq!(m.measure_of(&act, &ga), m.measure_of(&act, &a));
                }
            }
        }
    }

    #[test]
    fn banach_complement_and_subadditivity() {
        let act = two_orbit_action();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let a = StateSubset::from_indices(12, (0..12).filter(|_| rng.gen_bool(0.4)));
            let b = StateSubset::from_indices(12, (0..12).filter(|_| rng.gen_bool(0.4)));
            assert_eq!(
                banach_lower(&act, &a) + banach_upper(&act, &a.complement()),
                rone()
            );
            assert!(
                banach_upper(&act, &a.union(&b))
                    <= banach_upper(&act, &a) + banach_upper(&act, &b)
            );
        }
    }

    #[test]
    fn banach_equals_extremes_over_measures() {
        let act = two_orbit_action();
        let a = StateSubset::from_indices(12, [0, 1, 4, 5, 6]);
        let values: Vec<_> = invariant_measures(&act)
            .iter()
            .map(|m| m.measure_of(&act, &a))
            .collect();
        assert_eq!(banach_lower(&act, &a), values.iter().min().unwrap().clone());
        assert_eq!(banach_upper(&act, &a), values.iter().max().unwrap().clone());
    }

    #[test]
    fn eta_neighborhood_is_identity() {
        let a = StateSubset::from_indices(5, [1, 3]);
        assert_eq!(eta_neighborhood(&a, &rat(1, 100)), a);
    }
}

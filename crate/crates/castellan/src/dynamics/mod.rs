//! Finite Γ-spaces and their dynamics: fixed-point sets, Banach densities,
//! invariant measures, Følner machinery, ε-disjointness, Schreier graphs,
//! the wedding-cake function, and almost-equivariant sections.

mod action;
mod density;
mod disjoint;
mod folner;
mod lemmas;
mod schreier;
mod section;

pub use action::{FinAction, Orbits};
pub use density::{
    banach_lower, banach_upper, eta_neighborhood, invariant_measures, lower_density_f,
    upper_density_f, InvariantMeasure,
};
pub use disjoint::{eps_disjoint_check, EpsDisjointOutcome};
pub use folner::{
    folner_invariance, lemma22_epsilon, shrink_preserves_invariance_check, FolnerSupplier,
    SupplyError, WreathBoxSupplier, ZIntervalSupplier, ZdBoxSupplier,
};
pub use lemmas::{
    lemma31_conclusion_holds, lemma31_hypotheses_hold, lemma32_hypothesis_density,
    lemma32_inequality_holds, Lemma31Instance,
};
pub use schreier::{wedding_cake, wedding_cake_check, SchreierGraph, WeddingCakeFn};
pub use section::{equivariant_section, SectionData};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DynError {
    #[error("invalid permutation: {0}")]
    BadPerm(String),
    #[error("resolution does not partition the state set")]
    BadResolution,
    #[error("element not expressible in the action's generators: {0}")]
    NotExpressible(String),
    #[error("empty Følner set")]
    EmptyFolner,
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("quotient too small for the requested defect bound")]
    QuotientTooSmall,
    #[error("edge label set is not symmetric")]
    NotSymmetric,
    #[error("{0}")]
    Other(String),
}

//! Følner sets and invariance ratios in the ambient group.
//!
//! Invariance is measured as Σ_{k∈K} |kF △ F| / |F|. This dominates the
//! product-set form |K·F △ F| / |F| (each translate's defect is counted in
//! full), so a set certified here is invariant in the product-set sense too.

use std::collections::BTreeSet;

use crate::dynamics::DynError;
use crate::group::{GroupElem, LambdaElem, Wreath, WreathElem};
use crate::rat::{rat, rat_usize, rint, Rat};

/// Σ_{k∈K} |kF △ F| / |F|, exact.
pub fn folner_invariance<G: GroupElem>(k_set: &[G], f_set: &[G]) -> Result<Rat, DynError> {
    if f_set.is_empty() {
        return Err(DynError::EmptyFolner);
    }
    let f: BTreeSet<&G> = f_set.iter().collect();
    let mut total = 0usize;
    for k in k_set {
        let kf: BTreeSet<G> = f_set.iter().map(|x| k.op(x)).collect();
        let mut sym = 0usize;
        for x in &kf {
            if !f.contains(x) {
                sym += 1;
            }
        }
        for x in &f {
            if !kf.contains(*x) {
                sym += 1;
            }
        }
        total += sym;
    }
    Ok(rat_usize(total, f_set.len()))
}

/// The shrinking constant of the subset-invariance lemma: any F' ⊆ F with
/// |F'| ≥ (1−ε)|F| inside a (K,ε)-invariant F is (K,δ)-invariant, where
/// ε = δ / (2·(1 + 2|K|)). Derivation: Σ_k|kF'△F'| ≤ Σ_k|kF△F| + 2|K||F∖F'|
/// ≤ ε(1+2|K|)|F| ≤ ε(1+2|K|)/(1−ε)·|F'| < δ|F'| for this ε.
pub fn lemma22_epsilon(k_len: usize, delta: &Rat) -> Rat {
    delta / rint(2 * (1 + 2 * k_len as i64))
}

/// Verifies that F' is (K,δ)-invariant. Callers pair this with
/// `lemma22_epsilon` to exercise the shrinking lemma.
pub fn shrink_preserves_invariance_check<G: GroupElem>(
    _f: &[G],
    f_sub: &[G],
    k_set: &[G],
    delta: &Rat,
) -> Result<bool, DynError> {
    Ok(folner_invariance(k_set, f_sub)? < *delta)
}

#[derive(Debug, thiserror::Error)]
pub enum SupplyError {
    #[error("resource cap exceeded at candidate size {0}")]
    CapExceeded(usize),
    #[error("{0}")]
    Other(String),
}

/// Supplies certified (·,·)-invariant finite sets, smallest candidate first.
pub trait FolnerSupplier<G: GroupElem> {
    /// A finite set F with |F| ≥ min_size satisfying every constraint
    /// Σ_{k∈K_i}|kF△F|/|F| < ε_i, certified by `folner_invariance`.
    fn supply(
        &self,
        constraints: &[(Vec<G>, Rat)],
        min_size: usize,
        max_size: usize,
    ) -> Result<Vec<G>, SupplyError>;
}

/// Intervals [0, N) in ℤ.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZIntervalSupplier;

impl FolnerSupplier<LambdaElem> for ZIntervalSupplier {
    fn supply(
        &self,
        constraints: &[(Vec<LambdaElem>, Rat)],
        min_size: usize,
        max_size: usize,
    ) -> Result<Vec<LambdaElem>, SupplyError> {
        let mut n = min_size.max(1);
        while n <= max_size {
            let f: Vec<LambdaElem> = (0..n as i64).map(LambdaElem).collect();
            let ok = constraints.iter().all(|(k, eps)| {
                folner_invariance(k, &f).map(|r| r < *eps).unwrap_or(false)
            });
            if ok {
                return Ok(f);
            }
            n += 1;
        }
        Err(SupplyError::CapExceeded(max_size))
    }
}

/// Boxes [0, N)^d in ℤ^d, flattened to shift elements in version 1 when
/// d = 1; kept for the ℤ^d interface via coordinate tuples.
#[derive(Debug, Clone, Copy)]
pub struct ZdBoxSupplier {
    pub d: usize,
}

impl ZdBoxSupplier {
    /// Enumerates the box [0, n)^d as lamp-free wreath shift tuples is not
    /// meaningful; ℤ^d elements are represented as `Vec<i64>` keys in the
    /// closed-form ratio below.
    pub fn box_ratio(&self, k: &[Vec<i64>], n: usize) -> Rat {
        // |(k+F) △ F| = 2(n^d − Π_i (n − |k_i|)_+)
        let nd = (n as i64).pow(self.d as u32);
        let mut total = rint(0);
        for kv in k {
            let mut inter = 1i64;
            for &c in kv {
                inter *= (n as i64 - c.abs()).max(0);
            }
            total += rat(2 * (nd - inter), nd);
        }
        total
    }
}

/// Shift-centered boxes in ℤ^d ≀ ℤ:
/// F(R, M) = {(f, λ) : λ ∈ [−R, R], supp f ⊆ [λ−R, λ+R], ‖f‖_∞ ≤ M}.
///
/// The lamp window travels with the shift coordinate, which makes the shift
/// translate stay inside the family up to the λ-boundary; a fixed window
/// loses almost every element under the shift once M grows.
#[derive(Debug, Clone, Copy)]
pub struct WreathBoxSupplier {
    pub d: usize,
    pub lamp_bound: fn(u32) -> u32,
}

impl WreathBoxSupplier {
    pub fn new(d: usize) -> Self {
        WreathBoxSupplier {
            d,
            lamp_bound: |r| r * r,
        }
    }

    /// Materializes F(R, M).
    pub fn materialize(&self, r: u32, m: u32, cap: usize) -> Result<Vec<WreathElem>, SupplyError> {
        let size = self.size(r, m);
        if size > cap as u128 {
            return Err(SupplyError::CapExceeded(cap));
        }
        let w = Wreath::new(self.d);
        let positions = 2 * r as i64 + 1;
        let vals_per_pos = (2 * m as i64 + 1).pow(self.d as u32);
        let mut out = Vec::with_capacity(size as usize);
        for lam in -(r as i64)..=(r as i64) {
            let total = (vals_per_pos as u128).pow(positions as u32);
            for code in 0..total {
                let mut c = code;
                let mut lamps = crate::group::LampConfig::empty();
                for off in -(r as i64)..=(r as i64) {
                    let mut v = Vec::with_capacity(self.d);
                    let mut pv = c % vals_per_pos as u128;
                    c /= vals_per_pos as u128;
                    for _ in 0..self.d {
                        let digit = (pv % (2 * m as u128 + 1)) as i64 - m as i64;
                        pv /= 2 * m as u128 + 1;
                        v.push(digit);
                    }
                    lamps.add_at(LambdaElem(lam + off), &crate::group::ZdVector(v));
                }
                out.push(WreathElem::new(lamps, LambdaElem(lam)));
            }
        }
        let _ = w;
        Ok(out)
    }

    pub fn size(&self, r: u32, m: u32) -> u128 {
        let positions = 2 * r + 1;
        let vals = (2 * m as u128 + 1).pow(self.d as u32);
        (2 * r as u128 + 1) * vals.pow(positions)
    }

    /// Closed-form Σ-invariance ratio against the standard generators
    /// {s^{±1}} ∪ {ξ_j^{±1}}: 4/(2R+1) + 4d/((2M+1)^d adjusted per coord).
    ///
    /// Shift: the translate reshapes the family with the λ-window moved by
    /// one, so |sF ∩ F| = 2R·C and the ratio is 2/(2R+1) per direction.
    /// Lamp ξ_j^{±1}: position 1_Λ always lies in the window; only the value
    /// overflow at ±M is lost, one coordinate in 2M+1.
    pub fn generator_ratio(&self, r: u32, m: u32) -> Rat {
        let shift_part = rat(4, 2 * r as i64 + 1);
        let lamp_part = rat(4 * self.d as i64, 2 * m as i64 + 1);
        shift_part + lamp_part
    }
}

impl FolnerSupplier<WreathElem> for WreathBoxSupplier {
    fn supply(
        &self,
        constraints: &[(Vec<WreathElem>, Rat)],
        min_size: usize,
        max_size: usize,
    ) -> Result<Vec<WreathElem>, SupplyError> {
        for r in 1..=16u32 {
            let m = (self.lamp_bound)(r);
            if self.size(r, m) > max_size as u128 {
                return Err(SupplyError::CapExceeded(max_size));
            }
            let f = self.materialize(r, m, max_size)?;
            if f.len() < min_size {
                continue;
            }
            let ok = constraints.iter().all(|(k, eps)| {
                folner_invariance(k, &f).map(|v| v < *eps).unwrap_or(false)
            });
            if ok {
                return Ok(f);
            }
        }
        Err(SupplyError::CapExceeded(max_size))
    }
}

//! Exact arithmetic for the base group Λ = ℤ, the lattice ℤ^d, and the
//! wreath product Γ = ℤ^d ≀ Λ with its shift action β.
//!
//! Λ is written additively; the wreath product multiplicatively. Lamp
//! configurations are canonical sparse maps (zero vectors never stored), so
//! structural equality is group equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("lamp coordinate index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
}

/// Elements and words over a distinguished generating set. The word form is
/// what finite actions evaluate through their generator permutations.
pub trait GroupElem:
    Clone + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync + 'static
{
    fn identity() -> Self;
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;

    /// Expresses `self` as a product Π gens[i]^k, left to right.
    /// Returns None when the element is not a word in the given generators.
    fn express(&self, gens: &[Self]) -> Option<Vec<(usize, i64)>>;
}

// ---------------------------------------------------------------------------
// Λ = ℤ

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LambdaElem(pub i64);

impl LambdaElem {
    pub fn value(&self) -> i64 {
        self.0
    }
}

impl GroupElem for LambdaElem {
    fn identity() -> Self {
        LambdaElem(0)
    }

    fn op(&self, other: &Self) -> Self {
        LambdaElem(self.0 + other.0)
    }

    fn inv(&self) -> Self {
        LambdaElem(-self.0)
    }

    fn express(&self, gens: &[Self]) -> Option<Vec<(usize, i64)>> {
        if self.0 == 0 {
            return Some(Vec::new());
        }
        for (i, g) in gens.iter().enumerate() {
            if g.0 != 0 && self.0 % g.0 == 0 {
                return Some(vec![(i, self.0 / g.0)]);
            }
        }
        None
    }
}

/// The supplied family of finite-index normal subgroups of ℤ: nℤ with
/// quotient ℤ/n. Every nonzero n gives a normal subgroup; quotient
/// enumeration is 0..n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaSubgroup {
    pub modulus: u64,
}

impl LambdaSubgroup {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus > 0);
        LambdaSubgroup { modulus }
    }

    pub fn contains(&self, x: LambdaElem) -> bool {
        x.0.rem_euclid(self.modulus as i64) == 0
    }

    /// Quotient map ℤ -> ℤ/n as a canonical representative in 0..n.
    pub fn project(&self, x: LambdaElem) -> u64 {
        x.0.rem_euclid(self.modulus as i64) as u64
    }

    pub fn index(&self) -> u64 {
        self.modulus
    }
}

// ---------------------------------------------------------------------------
// ℤ^d

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZdVector(pub Vec<i64>);

impl ZdVector {
    pub fn zero(d: usize) -> Self {
        ZdVector(vec![0; d])
    }

    pub fn unit(d: usize, j: usize) -> Result<Self, GroupError> {
        if j == 0 || j > d {
            return Err(GroupError::IndexOutOfRange(j, d));
        }
        let mut v = vec![0; d];
        v[j - 1] = 1;
        Ok(ZdVector(v))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "mixed lattice dimensions");
        ZdVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        ZdVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        ZdVector(self.0.iter().map(|a| a * k).collect())
    }

    /// x ↦ x_1, the first-coordinate projection.
    pub fn first_coord(&self) -> i64 {
        self.0[0]
    }

    pub fn divisible_by(&self, p: i64) -> bool {
        self.0.iter().all(|&c| c % p == 0)
    }
}

// ---------------------------------------------------------------------------
// Finitely supported lamp configurations Λ → ℤ^d

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct LampConfig {
    entries: BTreeMap<LambdaElem, ZdVector>,
}

impl LampConfig {
    pub fn empty() -> Self {
        LampConfig::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (LambdaElem, ZdVector)>>(it: I) -> Self {
        let mut f = LampConfig::empty();
        for (pos, v) in it {
            f.add_at(pos, &v);
        }
        f
    }

    pub fn value_at(&self, pos: LambdaElem) -> Option<&ZdVector> {
        self.entries.get(&pos)
    }

    pub fn support(&self) -> impl Iterator<Item = LambdaElem> + '_ {
        self.entries.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (LambdaElem, &ZdVector)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `v` at position `pos`, keeping the sparse form canonical.
    pub fn add_at(&mut self, pos: LambdaElem, v: &ZdVector) {
        if v.is_zero() {
            return;
        }
        match self.entries.remove(&pos) {
            None => {
                self.entries.insert(pos, v.clone());
            }
            Some(old) => {
                let s = old.add(v);
                if !s.is_zero() {
                    self.entries.insert(pos, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (pos, v) in other.entries() {
            out.add_at(pos, v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LampConfig {
            entries: self.entries.iter().map(|(k, v)| (*k, v.neg())).collect(),
        }
    }
}

/// The shift action: β_λ(f)(λ') = f(λ^{-1}λ'), i.e. the support moves by λ.
pub fn beta_shift(lambda: LambdaElem, f: &LampConfig) -> LampConfig {
    LampConfig {
        entries: f
            .entries
            .iter()
            .map(|(k, v)| (lambda.op(k), v.clone()))
            .collect::<BTreeMap<_, _>>(),
    }
}

// ---------------------------------------------------------------------------
// Γ = ℤ^d ≀ Λ

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WreathElem {
    pub lamps: LampConfig,
    pub shift: LambdaElem,
}

impl WreathElem {
    pub fn new(lamps: LampConfig, shift: LambdaElem) -> Self {
        WreathElem { lamps, shift }
    }

    pub fn from_shift(n: i64) -> Self {
        WreathElem {
            lamps: LampConfig::empty(),
            shift: LambdaElem(n),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.lamps.is_empty() && self.shift.0 == 0
    }

    pub fn is_lamp_only(&self) -> bool {
        self.shift.0 == 0
    }
}

impl fmt::Display for WreathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for (pos, v) in self.lamps.entries() {
            if !first {
                write!(f, "|")?;
            }
            first = false;
            let coords: Vec<String> = v.0.iter().map(|c| c.to_string()).collect();
            write!(f, "{}:{}", pos.0, coords.join(","))?;
        }
        write!(f, ";{})", self.shift.0)
    }
}

pub fn wreath_mul(a: &WreathElem, b: &WreathElem) -> WreathElem {
    WreathElem {
        lamps: a.lamps.add(&beta_shift(a.shift, &b.lamps)),
        shift: a.shift.op(&b.shift),
    }
}

pub fn wreath_inv(a: &WreathElem) -> WreathElem {
    WreathElem {
        lamps: beta_shift(a.shift.inv(), &a.lamps).neg(),
        shift: a.shift.inv(),
    }
}

impl GroupElem for WreathElem {
    fn identity() -> Self {
        WreathElem {
            lamps: LampConfig::empty(),
            shift: LambdaElem(0),
        }
    }

    fn op(&self, other: &Self) -> Self {
        wreath_mul(self, other)
    }

    fn inv(&self) -> Self {
        wreath_inv(self)
    }

    fn express(&self, gens: &[Self]) -> Option<Vec<(usize, i64)>> {
        // Relies on gens containing the shift (∅, 1) and each ξ_j^{1_Λ}.
        // (f, λ) = Π_{k∈supp f} s^k ξ_1^{f(k)_1}…ξ_d^{f(k)_d} s^{-k} · s^λ.
        let shift_idx = gens
            .iter()
            .position(|g| g.lamps.is_empty() && g.shift.0.abs() == 1)?;
        let shift_sign = gens[shift_idx].shift.0;
        let mut word = Vec::new();
        let d = self
            .lamps
            .entries()
            .next()
            .map(|(_, v)| v.dim())
            .unwrap_or(0);
        let mut xi_idx = vec![usize::MAX; d];
        for j in 1..=d {
            let target = WreathElem {
                lamps: LampConfig::from_entries([(
                    LambdaElem(0),
                    ZdVector::unit(d, j).ok()?,
                )]),
                shift: LambdaElem(0),
            };
            xi_idx[j - 1] = gens.iter().position(|g| *g == target)?;
        }
        for (pos, v) in self.lamps.entries() {
            if pos.0 != 0 {
                word.push((shift_idx, pos.0 * shift_sign));
            }
            for j in 1..=v.dim() {
                let c = v.0[j - 1];
                if c != 0 {
                    word.push((xi_idx[j - 1], c));
                }
            }
            if pos.0 != 0 {
                word.push((shift_idx, -pos.0 * shift_sign));
            }
        }
        if self.shift.0 != 0 {
            word.push((shift_idx, self.shift.0 * shift_sign));
        }
        Some(word)
    }
}

/// The wreath-product group context; `d` is a runtime parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wreath {
    pub d: usize,
}

impl Wreath {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1);
        Wreath { d }
    }

    pub fn identity(&self) -> WreathElem {
        WreathElem::identity()
    }

    pub fn mul(&self, a: &WreathElem, b: &WreathElem) -> WreathElem {
        wreath_mul(a, b)
    }

    pub fn inv(&self, a: &WreathElem) -> WreathElem {
        wreath_inv(a)
    }

    pub fn shift(&self, n: i64) -> WreathElem {
        WreathElem::from_shift(n)
    }

    /// ξ_j^λ: the lamp supported at {λ} with value e_j, trivial shift.
    pub fn xi(&self, j: usize, at: LambdaElem) -> Result<WreathElem, GroupError> {
        let v = ZdVector::unit(self.d, j)?;
        Ok(WreathElem {
            lamps: LampConfig::from_entries([(at, v)]),
            shift: LambdaElem(0),
        })
    }

    /// n·ξ_j^λ as a single lamp element.
    pub fn xi_pow(&self, j: usize, at: LambdaElem, n: i64) -> Result<WreathElem, GroupError> {
        let v = ZdVector::unit(self.d, j)?.scale(n);
        Ok(WreathElem {
            lamps: LampConfig::from_entries([(at, v)]),
            shift: LambdaElem(0),
        })
    }

    /// A pure lamp element with the given value at the given position.
    pub fn lamp(&self, at: LambdaElem, v: ZdVector) -> WreathElem {
        assert_eq!(v.dim(), self.d);
        WreathElem {
            lamps: LampConfig::from_entries([(at, v)]),
            shift: LambdaElem(0),
        }
    }

    /// Standard generators: the shift together with ξ_j^{1_Λ} for j ≤ d.
    pub fn generators(&self) -> Vec<WreathElem> {
        let mut gens = vec![self.shift(1)];
        for j in 1..=self.d {
            gens.push(self.xi(j, LambdaElem(0)).expect("j <= d"));
        }
        gens
    }
}

pub fn xi_generator(d: usize, j: usize, at: LambdaElem) -> Result<WreathElem, GroupError> {
    Wreath::new(d).xi(j, at)
}

// ---------------------------------------------------------------------------
// Free words: the element type for actions given by arbitrary generator
// permutations (used by the randomized castle suites).

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct FreeWord {
    /// Reduced word; letters are ±(generator index + 1).
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn generator(i: usize) -> Self {
        FreeWord {
            letters: vec![i as i32 + 1],
        }
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeWord::default();
        for &l in letters {
            assert!(l != 0);
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl GroupElem for FreeWord {
    fn identity() -> Self {
        FreeWord::default()
    }

    fn op(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    fn inv(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    fn express(&self, gens: &[Self]) -> Option<Vec<(usize, i64)>> {
        let mut word = Vec::new();
        for &l in &self.letters {
            let idx = (l.unsigned_abs() as usize) - 1;
            if gens.get(idx).map(|g| g.letters.as_slice()) != Some(&[idx as i32 + 1]) {
                return None;
            }
            word.push((idx, l.signum() as i64));
        }
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_elem(rng: &mut ChaCha8Rng, d: usize, window: i64, maxval: i64) -> WreathElem {
        let mut lamps = LampConfig::empty();
        for pos in -window..=window {
            if rng.gen_bool(0.4) {
                let v = ZdVector((0..d).map(|_| rng.gen_range(-maxval..=maxval)).collect());
                lamps.add_at(LambdaElem(pos), &v);
            }
        }
        WreathElem::new(lamps, LambdaElem(rng.gen_range(-window..=window)))
    }

    #[test]
    fn beta_shift_examples() {
        let f = LampConfig::from_entries([(LambdaElem(0), ZdVector::unit(2, 1).unwrap())]);
        assert_eq!(beta_shift(LambdaElem(0), &f), f);
        assert_eq!(
            beta_shift(LambdaElem(5), &LampConfig::empty()),
            LampConfig::empty()
        );
        let shifted = beta_shift(LambdaElem(2), &f);
        assert_eq!(
            shifted.value_at(LambdaElem(2)),
            Some(&ZdVector::unit(2, 1).unwrap())
        );
        assert_eq!(shifted.support_size(), 1);
    }

    #[test]
    fn beta_is_an_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_elem(&mut rng, 2, 3, 4);
            let l = LambdaElem(rng.gen_range(-4..=4));
            let m = LambdaElem(rng.gen_range(-4..=4));
            assert_eq!(
                beta_shift(l.op(&m), &a.lamps),
                beta_shift(l, &beta_shift(m, &a.lamps))
            );
        }
    }

    #[test]
    fn group_axioms_hold_exactly() {
        // 10^4 random triples: associativity, identity, inverses.
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = WreathElem::identity();
        for _ in 0..10_000 {
            let a = random_elem(&mut rng, 1, 3, 5);
            let b = random_elem(&mut rng, 1, 3, 5);
            let c = random_elem(&mut rng, 1, 3, 5);
            assert_eq!(
                wreath_mul(&wreath_mul(&a, &b), &c),
                wreath_mul(&a, &wreath_mul(&b, &c))
            );
            assert_eq!(wreath_mul(&a, &e), a);
            assert_eq!(wreath_mul(&e, &a), a);
            assert_eq!(wreath_mul(&a, &wreath_inv(&a)), e);
            assert_eq!(wreath_mul(&wreath_inv(&a), &a), e);
        }
    }

    #[test]
    fn wreath_inv_examples() {
        let w = Wreath::new(1);
        assert_eq!(wreath_inv(&w.identity()), w.identity());
        let xi = w.xi(1, LambdaElem(0)).unwrap();
        let inv = wreath_inv(&xi);
        assert_eq!(
            inv.lamps.value_at(LambdaElem(0)),
            Some(&ZdVector(vec![-1]))
        );
        assert_eq!(inv.shift, LambdaElem(0));
        // ({0↦e_1}, 1)^{-1} = ({−1↦−e_1}, −1), checked by round trip too
        let g = WreathElem::new(
            LampConfig::from_entries([(LambdaElem(0), ZdVector(vec![1]))]),
            LambdaElem(1),
        );
        let gi = wreath_inv(&g);
        assert_eq!(gi.shift, LambdaElem(-1));
        assert_eq!(gi.lamps.value_at(LambdaElem(-1)), Some(&ZdVector(vec![-1])));
        assert_eq!(wreath_mul(&g, &gi), w.identity());
    }

    #[test]
    fn commutation_identity_5_1() {
        // λ·(nξ_j^{λ'}) = nξ_j^{λλ'}·λ for a window of λ, λ', |n| ≤ 10, j ≤ d
        let d = 2;
        let w = Wreath::new(d);
        for lam in -3..=3i64 {
            for lam2 in -3..=3i64 {
                for n in -10..=10i64 {
                    for j in 1..=d {
                        let lhs = wreath_mul(
                            &w.shift(lam),
                            &w.xi_pow(j, LambdaElem(lam2), n).unwrap(),
                        );
                        let rhs = wreath_mul(
                            &w.xi_pow(j, LambdaElem(lam + lam2), n).unwrap(),
                            &w.shift(lam),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn xi_generator_examples() {
        let w = Wreath::new(2);
        let xi = w.xi(1, LambdaElem(0)).unwrap();
        assert_eq!(xi.lamps.value_at(LambdaElem(0)), Some(&ZdVector(vec![1, 0])));
        assert_eq!(xi.shift, LambdaElem(0));
        assert!(w.xi(3, LambdaElem(0)).is_err());
        assert!(w.xi(0, LambdaElem(0)).is_err());

        // conjugation by a shift relocates the lamp: μ ξ_j^0 μ^{-1} = ξ_j^μ
        for mu in -3..=3i64 {
            for j in 1..=2 {
                let conj = wreath_mul(
                    &wreath_mul(&w.shift(mu), &w.xi(j, LambdaElem(0)).unwrap()),
                    &wreath_inv(&w.shift(mu)),
                );
                assert_eq!(conj, w.xi(j, LambdaElem(mu)).unwrap());
                // and ξ_j^λ = β_λ(ξ_j^1) as lamp configs
                assert_eq!(
                    conj.lamps,
                    beta_shift(LambdaElem(mu), &w.xi(j, LambdaElem(0)).unwrap().lamps)
                );
            }
        }
    }

    #[test]
    fn generators_generate_ball() {
        // BFS over words in {s^{±1}, ξ_j^{±1}} reaches every element with
        // lamp support in [-1,1], values in [-1,1], shift in [-1,1].
        let d = 1;
        let w = Wreath::new(d);
        let mut gens = Vec::new();
        for g in w.generators() {
            gens.push(g.clone());
            gens.push(wreath_inv(&g));
        }
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![w.identity()];
        seen.insert(w.identity());
        for _ in 0..9 {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &gens {
                    let y = wreath_mul(x, g);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                for c in -1..=1i64 {
                    for s in -1..=1i64 {
                        let mut lamps = LampConfig::empty();
                        lamps.add_at(LambdaElem(-1), &ZdVector(vec![a]));
                        lamps.add_at(LambdaElem(0), &ZdVector(vec![b]));
                        lamps.add_at(LambdaElem(1), &ZdVector(vec![c]));
                        let e = WreathElem::new(lamps, LambdaElem(s));
                        assert!(seen.contains(&e), "missing {e}");
                    }
                }
            }
        }
    }

    #[test]
    fn express_roundtrip() {
        let w = Wreath::new(2);
        let gens = w.generators();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = random_elem(&mut rng, 2, 3, 4);
            let word = x.express(&gens).expect("expressible");
            let mut acc = w.identity();
            for (i, k) in word {
                let mut p = gens[i].clone();
                if k < 0 {
                    p = wreath_inv(&p);
                }
                for _ in 0..k.abs() {
                    acc = wreath_mul(&acc, &p);
                }
            }
            assert_eq!(acc, x);
        }
    }

    #[test]
    fn free_words_reduce() {
        let a = FreeWord::generator(0);
        let b = FreeWord::generator(1);
        let w = a.op(&b).op(&b.inv()).op(&a.inv());
        assert!(w.is_empty());
        let u = a.op(&b).op(&a);
        assert_eq!(u.inv().op(&u), FreeWord::identity());
    }
}

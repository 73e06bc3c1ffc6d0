//! Dense bitmask subsets of a finite state space.

use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateSubset {
    n: usize,
    words: Vec<u64>,
}

impl StateSubset {
    pub fn empty(n: usize) -> Self {
        StateSubset {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = StateSubset::empty(n);
        for x in 0..n {
            s.insert(x);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = StateSubset::empty(n);
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        Self::from_indices(n, [x])
    }

    pub fn space_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n);
        self.words[x >> 6] |= 1u64 << (x & 63);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        assert!(x < self.n);
        self.words[x >> 6] &= !(1u64 << (x & 63));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.words[x >> 6] & (1u64 << (x & 63)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty_set(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        StateSubset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        StateSubset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        StateSubset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.n & 63;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        StateSubset { n: self.n, words }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.contains(x))
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under a permutation of the same space.
    pub fn image(&self, p: &Perm) -> Self {
        assert_eq!(self.n, p.len());
        let mut out = StateSubset::empty(self.n);
        for x in self.iter() {
            out.insert(p.apply(x));
        }
        out
    }
}

//! Permutations of a finite state set, with cycle-based powering.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn new(map: Vec<u32>) -> Result<Self, String> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err("not a bijection".into());
            }
            seen[v] = true;
        }
        Ok(Perm { map })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm { map: inv }
    }

    /// k-th power in O(n) via cycle rotation; k may be negative.
    pub fn pow(&self, k: i64) -> Perm {
        let n = self.len();
        let mut out = vec![u32::MAX; n];
        let mut visited = vec![false; n];
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            loop {
                visited[x] = true;
                cycle.push(x);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            let m = cycle.len() as i64;
            let shift = k.rem_euclid(m) as usize;
            for (i, &c) in cycle.iter().enumerate() {
                out[c] = cycle[(i + shift) % cycle.len()] as u32;
            }
        }
        Perm { map: out }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_matches_repeated_compose() {
        let p = Perm::new(vec![1, 2, 3, 4, 0, 6, 5]).unwrap();
        let mut q = Perm::identity(7);
        for k in 0..15 {
            assert_eq!(p.pow(k), q);
            assert_eq!(p.pow(-k), q.inverse());
            q = p.compose(&q);
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3]).is_err());
    }
}

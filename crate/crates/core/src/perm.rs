//! Small permutations of `{0, .., n-1}` stored as image vectors.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// A permutation `i ↦ self.0[i]` of `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut v: Vec<u8> = (0..n as u8).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                v[a] = c[(k + 1) % c.len()] as u8;
            }
        }
        Perm(v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u8;
        }
        Perm(v)
    }

    /// `σ g σ⁻¹` with `σ = self`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        let mut v = vec![0u8; g.0.len()];
        for (i, &x) in g.0.iter().enumerate() {
            v[self.0[i] as usize] = self.0[x as usize];
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_multiset(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(&a, &b)| other.0[a as usize] == self.0[b as usize])
    }

    pub fn power(&self, k: usize) -> Perm {
        let mut r = Perm::identity(self.degree());
        for _ in 0..k {
            r = self.compose(&r);
        }
        r
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.apply(i) != i).collect()
    }
}

/// Canonical representative of the class with cycle type `mu`: cycles of
/// decreasing length filled with increasing labels.
pub fn class_representative(mu: &Partition) -> Perm {
    let n = mu.size();
    let mut next = 0;
    let mut cycles = Vec::new();
    for &len in mu.parts() {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    Perm::from_cycles(n, &cycles)
}

/// All elements of the group generated by `gens` (breadth-first closure).
pub fn generate_group(gens: &[Perm]) -> Vec<Perm> {
    let n = gens.first().map_or(0, Perm::degree);
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        order.push(g);
    }
    order.sort();
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_representatives() {
        let mu = Partition::new(vec![3, 2, 1]).unwrap();
        let g = class_representative(&mu);
        assert_eq!(g.cycles(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert_eq!(g.cycle_type(), mu);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = Perm::from_cycles(4, &[vec![0, 1, 2]]);
        let s = Perm::from_cycles(4, &[vec![2, 3]]);
        assert_eq!(s.conjugate(&g), Perm::from_cycles(4, &[vec![0, 1, 3]]));
        assert_eq!(s.compose(&g).compose(&s.inverse()), s.conjugate(&g));
    }

    #[test]
    fn symmetric_group_order() {
        let t = Perm::from_cycles(4, &[vec![0, 1]]);
        let c = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]);
        assert_eq!(generate_group(&[t, c]).len(), 24);
    }
}

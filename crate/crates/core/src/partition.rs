//! Integer partitions, their statistics, and standard Young tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are implicit: [`Partition::part`] returns 0 past the
/// stored length. The derived ordering is lexicographic on the parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    /// Sorts the given multiset of parts and drops zeros.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The degree `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 0-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&x| x > j).count())
            .collect();
        Partition(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Side of the Durfee square: the largest `d` with `λ_d ≥ d`.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &x)| x > i)
            .count()
    }

    /// Multiplicity of each part size; index `k` holds the number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &x in &self.0 {
            m[x] += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// `z_λ = Π k^{m_k} m_k!`.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (k, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= (k as u128) * (j as u128);
            }
        }
        z
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.part(j) - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Dimension of the Specht module `S^λ` by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut den: u128 = 1;
        for h in self.hook_lengths().into_iter().flatten() {
            den *= h as u128;
            let g = gcd_u128(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num / den
    }

    /// `2λ`: every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|x| 2 * x).collect())
    }

    /// `λ^{(r)}`: one box added to each of the first `r` rows, empty rows included.
    /// Returns `None` when `l(λ) > r`, where the result would not be a partition.
    pub fn add_first_rows(&self, r: usize) -> Option<Partition> {
        if self.len() > r {
            return None;
        }
        Some(Partition((0..r).map(|i| self.part(i) + 1).collect()))
    }

    pub fn with_cells_added(&self, row: usize, count: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        if row >= v.len() {
            v.resize(row + 1, 0);
        }
        v[row] += count;
        v
    }

    /// Does `self` contain `other` as Young diagrams?
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        parts.join("+")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `5+1+1`, `5,1,1`, `[5,1,1]` and `s[5,1,1]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('s').unwrap_or(t);
        let t = t
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = t
            .split(['+', ','])
            .map(|x| x.trim().parse::<usize>())
            .collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Optional constraints for [`partitions_of`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartitionFilter {
    pub exact_length: Option<usize>,
    pub max_length: Option<usize>,
    pub all_parts_odd: bool,
    pub self_conjugate: bool,
}

impl PartitionFilter {
    pub fn exact_length(mut self, l: usize) -> Self {
        self.exact_length = Some(l);
        self
    }

    pub fn max_length(mut self, l: usize) -> Self {
        self.max_length = Some(l);
        self
    }

    pub fn all_parts_odd(mut self) -> Self {
        self.all_parts_odd = true;
        self
    }

    pub fn self_conjugate(mut self) -> Self {
        self.self_conjugate = true;
        self
    }

    fn accepts(&self, p: &Partition) -> bool {
        self.exact_length.is_none_or(|l| p.len() == l)
            && self.max_length.is_none_or(|l| p.len() <= l)
            && (!self.all_parts_odd || p.0.iter().all(|x| x % 2 == 1))
            && (!self.self_conjugate || p.is_self_conjugate())
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n, PartitionFilter::default())
}

/// Partitions of `n` passing `filter`, in decreasing lexicographic order.
pub fn partitions_of(n: usize, filter: PartitionFilter) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let max_len = match (filter.exact_length, filter.max_length) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => usize::MAX,
    };
    gen_partitions(n, n, max_len, filter.all_parts_odd, &mut cur, &mut out);
    out.retain(|p| filter.accepts(p));
    out
}

fn gen_partitions(
    rest: usize,
    max_part: usize,
    max_len: usize,
    odd: bool,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() >= max_len {
        return;
    }
    for first in (1..=max_part.min(rest)).rev() {
        if odd && first % 2 == 0 {
            continue;
        }
        cur.push(first);
        gen_partitions(rest - first, first, max_len, odd, cur, out);
        cur.pop();
    }
}

/// Visits every standard Young tableau of shape `shape`, passing the row
/// index of each entry `1..=n` (as a slice indexed by `entry - 1`).
pub fn for_each_syt(shape: &Partition, mut visit: impl FnMut(&[usize])) {
    let n = shape.size();
    let mut fill = vec![0usize; shape.len()];
    let mut rows = Vec::with_capacity(n);
    syt_rec(shape, &mut fill, &mut rows, n, &mut visit);
}

fn syt_rec(
    shape: &Partition,
    fill: &mut [usize],
    rows: &mut Vec<usize>,
    n: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if rows.len() == n {
        visit(rows);
        return;
    }
    for i in 0..fill.len() {
        let fits = fill[i] < shape.part(i) && (i == 0 || fill[i - 1] > fill[i]);
        if fits {
            fill[i] += 1;
            rows.push(i);
            syt_rec(shape, fill, rows, n, visit);
            rows.pop();
            fill[i] -= 1;
        }
    }
}

/// Major index from a row-per-entry description: the sum of all `i` such
/// that `i + 1` sits in a strictly lower row than `i`.
pub fn major_index(rows: &[usize]) -> usize {
    rows.windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Number of standard Young tableaux of shape `shape` whose major index is
/// congruent to `m` modulo `k`.
pub fn maj_count(m: i64, k: usize, shape: &Partition) -> u64 {
    assert!(k >= 1, "modulus must be positive");
    let target = m.rem_euclid(k as i64) as usize;
    let mut count = 0;
    for_each_syt(shape, |rows| {
        if major_index(rows) % k == target {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
    }

    #[test]
    fn durfee_examples() {
        assert_eq!(p(&[3, 1, 1]).durfee(), 1);
        assert_eq!(p(&[3, 3, 1]).durfee(), 2);
        assert_eq!(Partition::empty().durfee(), 0);
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(p(&[7]).hook_dimension(), 1);
        assert_eq!(p(&[5, 1, 1]).hook_dimension(), 15);
        assert_eq!(p(&[3, 3, 1]).hook_dimension(), 21);
        assert_eq!(Partition::empty().hook_dimension(), 1);
    }

    #[test]
    fn filtered_partitions() {
        let f = PartitionFilter::default().exact_length(2).all_parts_odd();
        assert_eq!(partitions_of(4, f), vec![p(&[3, 1])]);
        let f = PartitionFilter::default().exact_length(4).all_parts_odd();
        assert_eq!(
            partitions_of(10, f),
            vec![p(&[7, 1, 1, 1]), p(&[5, 3, 1, 1]), p(&[3, 3, 3, 1])]
        );
        let f = PartitionFilter::default().self_conjugate();
        assert_eq!(partitions_of(5, f), vec![p(&[3, 1, 1])]);
    }

    #[test]
    fn self_conjugate_matches_brute_force() {
        for n in 0..=10 {
            let brute: Vec<_> = all_partitions(n)
                .into_iter()
                .filter(|q| q.conjugate() == *q)
                .collect();
            let f = PartitionFilter::default().self_conjugate();
            assert_eq!(partitions_of(n, f), brute);
        }
    }

    #[test]
    fn canonical_order_is_decreasing_lex() {
        let ps = all_partitions(6);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(ps.first(), Some(&p(&[6])));
        assert_eq!(ps.last(), Some(&p(&[1, 1, 1, 1, 1, 1])));
    }

    #[test]
    fn maj_count_examples() {
        assert_eq!(maj_count(0, 1, &p(&[3, 1])), 3);
        assert_eq!(maj_count(1, 3, &p(&[2, 1])), 1);
        assert_eq!(maj_count(0, 3, &p(&[3])), 1);
    }

    #[test]
    fn maj_count_on_hook_column() {
        // The column (1^n) has a unique tableau with full descent set.
        assert_eq!(maj_count(6, 100, &p(&[1, 1, 1, 1])), 1);
        assert_eq!(maj_count(5, 100, &p(&[1, 1, 1, 1])), 0);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1]).z(), 6);
        assert_eq!(p(&[2, 1]).z(), 2);
        assert_eq!(p(&[3]).z(), 3);
        assert_eq!(p(&[2, 2]).z(), 8);
        assert_eq!(Partition::empty().z(), 1);
    }

    #[test]
    fn parse_forms() {
        assert_eq!("5+1+1".parse::<Partition>().unwrap(), p(&[5, 1, 1]));
        assert_eq!("s[5,1,1]".parse::<Partition>().unwrap(), p(&[5, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1+2".parse::<Partition>().is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let q = p(&[5, 1, 1]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[5,1,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), q);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
    }

    #[test]
    fn add_first_rows() {
        assert_eq!(p(&[2]).add_first_rows(2), Some(p(&[3, 1])));
        assert_eq!(p(&[2, 1, 1]).add_first_rows(2), None);
        assert_eq!(Partition::empty().add_first_rows(3), Some(p(&[1, 1, 1])));
    }
}

//! Exact sparse linear algebra over the integers.
//!
//! Vectors are lists of `(column, value)` pairs sorted by column. Rows are
//! kept primitive (content divided out) and combined fraction-free. The
//! elimination code is generic over [`ExactInt`], implemented for `i128`
//! with checked arithmetic and for `BigInt`; callers try `i128` first and
//! rerun with `BigInt` when an operation overflows.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::symfunc::Rational;

/// An exact integer type. Arithmetic returns `None` on overflow.
pub trait ExactInt: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    /// Nonnegative gcd.
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.unsigned_abs(), other.unsigned_abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a as i128
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

pub type SparseVec<T> = Vec<(u32, T)>;

/// Binary search for the entry at `col`.
pub fn entry<T>(v: &[(u32, T)], col: u32) -> Option<&T> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|i| &v[i].1)
}

/// `a·x − b·y`.
fn combine<T: ExactInt>(a: &T, x: &[(u32, T)], b: &T, y: &[(u32, T)]) -> Option<SparseVec<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(u32::MAX, |e| e.0);
        let cy = y.get(j).map_or(u32::MAX, |e| e.0);
        if cx < cy {
            out.push((cx, a.mul(&x[i].1)?));
            i += 1;
        } else if cy < cx {
            out.push((cy, T::from_i64(0).sub(&b.mul(&y[j].1)?)?));
            j += 1;
        } else {
            let v = a.mul(&x[i].1)?.sub(&b.mul(&y[j].1)?)?;
            if !v.is_zero() {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Divides out the content; the first entry becomes positive.
fn make_primitive<T: ExactInt>(v: &mut SparseVec<T>) -> Option<()> {
    let Some(first) = v.first() else {
        return Some(());
    };
    let mut g = T::from_i64(0);
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_unit() {
            break;
        }
    }
    if first.1.is_negative() {
        g = g.neg()?;
    }
    if !g.is_unit() || g.is_negative() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
    Some(())
}

/// Eliminates column `col` of `v` using `pivot_row`, whose entry there is
/// nonzero.
fn eliminate<T: ExactInt>(
    v: &[(u32, T)],
    pivot_row: &[(u32, T)],
    col: u32,
) -> Option<SparseVec<T>> {
    let a = entry(pivot_row, col).expect("pivot entry");
    let b = entry(v, col).expect("entry to eliminate");
    let g = a.gcd(b);
    let mut out = combine(&a.div_exact(&g), v, &b.div_exact(&g), pivot_row)?;
    make_primitive(&mut out)?;
    Some(out)
}

/// An echelon basis of a subspace of `Q^ncols`, built by inserting vectors.
///
/// Columns are visited in a fixed elimination order, ascending static
/// column counts with ties broken by index, so that sparse columns are
/// pivoted first. A stored row's pivot is its earliest column in that
/// order. Internally vectors are held in permuted coordinates.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    /// `position[c]`: place of original column `c` in the elimination order.
    position: Vec<u32>,
    /// `original[k]`: inverse of `position`.
    original: Vec<u32>,
    rows: Vec<SparseVec<T>>,
    /// `pivot_row[k]`: row pivoting at permuted column `k`, or `u32::MAX`.
    pivot_row: Vec<u32>,
    reduced: bool,
}

impl<T: ExactInt> Echelon<T> {
    /// Identity column order.
    pub fn new(ncols: usize) -> Self {
        Self::with_order((0..ncols as u32).collect())
    }

    /// Orders columns by ascending `counts`, ties by index.
    pub fn with_column_counts(counts: &[usize]) -> Self {
        let mut order: Vec<u32> = (0..counts.len() as u32).collect();
        order.sort_by_key(|&c| (counts[c as usize], c));
        Self::with_order(order)
    }

    fn with_order(original: Vec<u32>) -> Self {
        let mut position = vec![0u32; original.len()];
        for (k, &c) in original.iter().enumerate() {
            position[c as usize] = k as u32;
        }
        Echelon {
            pivot_row: vec![u32::MAX; original.len()],
            position,
            original,
            rows: Vec::new(),
            reduced: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.position.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn permute(&self, v: &[(u32, i64)]) -> SparseVec<T> {
        let mut w: SparseVec<T> = v
            .iter()
            .filter(|e| e.1 != 0)
            .map(|&(c, x)| (self.position[c as usize], T::from_i64(x)))
            .collect();
        w.sort_unstable_by_key(|e| e.0);
        w
    }

    /// Reduces `w` (permuted coordinates) until its leading column is free.
    fn reduce_leading(&self, mut w: SparseVec<T>) -> Option<SparseVec<T>> {
        while let Some(&(lead, _)) = w.first() {
            let r = self.pivot_row[lead as usize];
            if r == u32::MAX {
                break;
            }
            w = eliminate(&w, &self.rows[r as usize], lead)?;
        }
        Some(w)
    }

    /// Inserts a vector given in original coordinates. `Some(true)` if the
    /// rank went up, `None` on overflow.
    pub fn insert(&mut self, v: &[(u32, i64)]) -> Option<bool> {
        let mut w = self.reduce_leading(self.permute(v))?;
        if w.is_empty() {
            return Some(false);
        }
        make_primitive(&mut w)?;
        self.pivot_row[w[0].0 as usize] = self.rows.len() as u32;
        self.rows.push(w);
        self.reduced = self.rows.len() == 1;
        Some(true)
    }

    /// Back-substitution: afterwards every pivot column is zero outside its
    /// own row.
    pub fn reduce(&mut self) -> Option<()> {
        if self.reduced {
            return Some(());
        }
        let mut by_pivot: Vec<usize> = (0..self.rows.len()).collect();
        by_pivot.sort_by_key(|&k| std::cmp::Reverse(self.rows[k][0].0));
        for &k in &by_pivot {
            let mut start = 1;
            loop {
                let row = &self.rows[k];
                let Some(off) = row[start..]
                    .iter()
                    .position(|e| self.pivot_row[e.0 as usize] != u32::MAX)
                else {
                    break;
                };
                let col = row[start + off].0;
                let j = self.pivot_row[col as usize] as usize;
                let new = eliminate(row, &self.rows[j], col)?;
                start = new.partition_point(|e| e.0 <= col);
                self.rows[k] = new;
            }
        }
        self.reduced = true;
        Some(())
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Pivot columns in original coordinates, one per row.
    pub fn pivots(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|r| self.original[r[0].0 as usize])
            .collect()
    }

    /// Row `k` in original coordinates, sorted.
    pub fn row(&self, k: usize) -> SparseVec<BigInt> {
        let mut v: SparseVec<BigInt> = self.rows[k]
            .iter()
            .map(|(c, x)| (self.original[*c as usize], x.to_bigint()))
            .collect();
        v.sort_unstable_by_key(|e| e.0);
        v
    }

    /// Trace of a signed coordinate permutation that preserves the span.
    /// `preimage[c] = (f, s)` means the map sends `e_f` to `s·e_c`.
    /// Requires a reduced basis.
    pub fn trace_of_signed_permutation(&self, preimage: &[(u32, i8)]) -> Rational {
        assert!(self.reduced, "trace needs a reduced echelon basis");
        let mut num_unit = 0i64;
        let mut acc = Rational::zero();
        for row in &self.rows {
            let (pc, pv) = &row[0];
            let c = self.original[*pc as usize];
            let (f, s) = preimage[c as usize];
            let Some(x) = entry(row, self.position[f as usize]) else {
                continue;
            };
            if pv == x {
                num_unit += s as i64;
            } else if pv.is_unit() && x.is_unit() {
                num_unit -= s as i64;
            } else {
                acc += Rational::new(x.to_bigint() * BigInt::from(s), pv.to_bigint());
            }
        }
        acc + Rational::from_integer(BigInt::from(num_unit))
    }

    /// Coordinates `a_k` with `v = Σ a_k row_k`, when `v` lies in the span
    /// (requires a reduced basis). `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[(u32, Rational)]) -> Option<Vec<Rational>> {
        assert!(self.reduced, "coordinates need a reduced echelon basis");
        let coords: Vec<Rational> = self
            .rows
            .iter()
            .map(|row| {
                let c = self.original[row[0].0 as usize];
                let x = v
                    .iter()
                    .find(|e| e.0 == c)
                    .map_or_else(Rational::zero, |e| e.1.clone());
                x / Rational::from_integer(row[0].1.to_bigint())
            })
            .collect();
        let mut rest: std::collections::BTreeMap<u32, Rational> = v.iter().cloned().collect();
        for (a, k) in coords.iter().zip(0..) {
            if a.is_zero() {
                continue;
            }
            for (c, x) in self.row(k) {
                let e = rest.entry(c).or_insert_with(Rational::zero);
                *e -= a * Rational::from_integer(x);
            }
        }
        rest.values().all(Zero::is_zero).then_some(coords)
    }
}

/// An echelon basis with `i128` storage that switches to `BigInt` once an
/// operation overflows.
#[derive(Clone, Debug)]
pub enum AdaptiveEchelon {
    Small(Echelon<i128>, Vec<SparseVec<i64>>),
    Big(Echelon<BigInt>),
}

impl AdaptiveEchelon {
    pub fn with_column_counts(counts: &[usize]) -> Self {
        AdaptiveEchelon::Small(Echelon::with_column_counts(counts), Vec::new())
    }

    fn promote(&mut self) {
        if let AdaptiveEchelon::Small(e, inserted) = self {
            let mut big = Echelon::<BigInt>::with_order(e.original.clone());
            for v in inserted.iter() {
                big.insert(v);
            }
            *self = AdaptiveEchelon::Big(big);
        }
    }

    pub fn insert(&mut self, v: &[(u32, i64)]) -> bool {
        match self {
            AdaptiveEchelon::Small(e, inserted) => match e.insert(v) {
                Some(grew) => {
                    inserted.push(v.to_vec());
                    grew
                }
                None => {
                    self.promote();
                    self.insert(v)
                }
            },
            AdaptiveEchelon::Big(e) => e.insert(v).expect("bigint arithmetic does not overflow"),
        }
    }

    pub fn reduce(&mut self) {
        if let AdaptiveEchelon::Small(e, _) = self {
            let mut trial = e.clone();
            if trial.reduce().is_some() {
                *e = trial;
                return;
            }
            self.promote();
        }
        if let AdaptiveEchelon::Big(e) = self {
            e.reduce().expect("bigint arithmetic does not overflow");
        }
    }

    /// Drops the insertion log kept for promotion.
    pub fn freeze(&mut self) {
        if let AdaptiveEchelon::Small(_, log) = self {
            *log = Vec::new();
        }
    }

    pub fn is_big(&self) -> bool {
        matches!(self, AdaptiveEchelon::Big(_))
    }

    pub fn rank(&self) -> usize {
        match self {
            AdaptiveEchelon::Small(e, _) => e.rank(),
            AdaptiveEchelon::Big(e) => e.rank(),
        }
    }

    pub fn pivots(&self) -> Vec<u32> {
        match self {
            AdaptiveEchelon::Small(e, _) => e.pivots(),
            AdaptiveEchelon::Big(e) => e.pivots(),
        }
    }

    pub fn row(&self, k: usize) -> SparseVec<BigInt> {
        match self {
            AdaptiveEchelon::Small(e, _) => e.row(k),
            AdaptiveEchelon::Big(e) => e.row(k),
        }
    }

    pub fn trace_of_signed_permutation(&self, preimage: &[(u32, i8)]) -> Rational {
        match self {
            AdaptiveEchelon::Small(e, _) => e.trace_of_signed_permutation(preimage),
            AdaptiveEchelon::Big(e) => e.trace_of_signed_permutation(preimage),
        }
    }

    pub fn coordinates(&self, v: &[(u32, Rational)]) -> Option<Vec<Rational>> {
        match self {
            AdaptiveEchelon::Small(e, _) => e.coordinates(v),
            AdaptiveEchelon::Big(e) => e.coordinates(v),
        }
    }
}

/// Rank of the span of `vectors` in `Q^ncols`.
pub fn rank_of(ncols: usize, vectors: &[SparseVec<i64>]) -> usize {
    let mut counts = vec![0usize; ncols];
    for v in vectors {
        for (c, _) in v {
            counts[*c as usize] += 1;
        }
    }
    let mut e = AdaptiveEchelon::with_column_counts(&counts);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_rank(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<Rational>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    let pivot = a[rank].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn sparse(r: &[i64]) -> SparseVec<i64> {
        r.iter()
            .enumerate()
            .filter(|e| *e.1 != 0)
            .map(|(c, &x)| (c as u32, x))
            .collect()
    }

    #[test]
    fn rank_matches_dense_elimination() {
        let m = vec![
            vec![2, 4, 0, 6],
            vec![1, 2, 3, 0],
            vec![3, 6, 3, 6],
            vec![0, 0, 5, -5],
        ];
        let vs: Vec<_> = m.iter().map(|r| sparse(r)).collect();
        assert_eq!(rank_of(4, &vs), dense_rank(&m));
        assert_eq!(rank_of(4, &vs), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = 1i64 << 62;
        let vs = vec![
            vec![(0, big), (1, big - 1), (2, 3)],
            vec![(0, big - 1), (1, big - 3), (2, 7)],
            vec![(0, big - 5), (1, big), (2, big - 7)],
        ];
        let mut e = AdaptiveEchelon::with_column_counts(&[3, 3, 3]);
        for v in &vs {
            e.insert(v);
        }
        e.reduce();
        assert!(e.is_big());
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn reduced_rows_vanish_on_other_pivots() {
        let vs = [
            sparse(&[1, 1, 0, 0]),
            sparse(&[0, 1, 1, 0]),
            sparse(&[0, 0, 1, 1]),
        ];
        let mut e = Echelon::<i128>::new(4);
        for v in &vs {
            e.insert(v).unwrap();
        }
        e.reduce().unwrap();
        let piv = e.pivots();
        for k in 0..e.rank() {
            let row = e.row(k);
            for (j, &c) in piv.iter().enumerate() {
                assert_eq!(entry(&row, c).is_some(), j == k);
            }
        }
    }

    #[test]
    fn trace_on_invariant_subspace() {
        // span{e0 - e1, e1 - e2} under the cycle 0 -> 1 -> 2 -> 0 has trace -1
        let mut e = Echelon::<i128>::new(3);
        e.insert(&[(0, 1), (1, -1)]).unwrap();
        e.insert(&[(1, 1), (2, -1)]).unwrap();
        e.reduce().unwrap();
        let pre = vec![(2, 1), (0, 1), (1, 1)];
        assert_eq!(
            e.trace_of_signed_permutation(&pre),
            Rational::from_integer((-1).into())
        );
        let id = vec![(0, 1), (1, 1), (2, 1)];
        assert_eq!(
            e.trace_of_signed_permutation(&id),
            Rational::from_integer(2.into())
        );
    }

    #[test]
    fn coordinates_in_span() {
        let mut e = Echelon::<i128>::new(3);
        e.insert(&[(0, 2), (1, 2)]).unwrap();
        e.insert(&[(1, 1), (2, 3)]).unwrap();
        e.reduce().unwrap();
        let r = |x: i64| Rational::from_integer(x.into());
        let v = vec![(0, r(1)), (1, r(2)), (2, r(3))];
        let a = e.coordinates(&v).unwrap();
        let mut back = vec![r(0), r(0), r(0)];
        for (k, ak) in a.iter().enumerate() {
            for (c, x) in e.row(k) {
                back[c as usize] += ak * Rational::from_integer(x);
            }
        }
        assert_eq!(back, vec![r(1), r(2), r(3)]);
        assert!(e.coordinates(&[(0, r(1))]).is_none());
    }
}

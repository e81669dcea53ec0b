//! Reduced rational homology and its `S_n`-module structure.
//!
//! Faces are oriented by sorted vertex order; deleting the `j`-th vertex
//! carries the sign `(-1)^j`. The augmentation `∂_0` into the empty face
//! is included, so degree `-1` is part of every computation.
//!
//! The character of `H̃_i` at `σ` is obtained as
//! `χ(C_i) − χ(im ∂_i) − χ(im ∂_{i+1})`, where each image is held in
//! reduced echelon form and its trace read off at the pivots.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::{CharError, ClassFunction};
use crate::complex::{ComplexError, SimplicialComplex};
use crate::linalg::{AdaptiveEchelon, SparseVec};
use crate::partition::{all_partitions, Partition};
use crate::perm::{class_representative, Perm};
use crate::symfunc::{Rational, SymError, SymmetricFunction};

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("degree {degree} trace is not a character: {ch}")]
    NotACharacter { degree: i64, ch: String },
    #[error("r = {r} exceeds floor(n/p) for p = {p}, n = {n}")]
    RangeError { p: usize, n: usize, r: usize },
    #[error("thread pool: {0}")]
    Threads(String),
}

/// Runtime knobs shared by the homology routines.
#[derive(Clone, Debug)]
pub struct HomologyOptions {
    /// `1` runs on the calling thread.
    pub threads: usize,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions { threads: 1 }
    }
}

impl HomologyOptions {
    pub fn with_threads(threads: usize) -> Self {
        HomologyOptions {
            threads: threads.max(1),
        }
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> Result<R, HomologyError> {
        if self.threads <= 1 {
            return Ok(f());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| HomologyError::Threads(e.to_string()))?;
        Ok(pool.install(f))
    }
}

/// `∂_i : C_i → C_{i-1}`, stored by columns (one per `i`-face).
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryMatrix {
    pub degree: i64,
    pub nrows: usize,
    pub ncols: usize,
    pub columns: Vec<SparseVec<i64>>,
}

impl BoundaryMatrix {
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `(row, col, value)` triples in column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |&(r, v)| (r, j as u32, v)))
    }

    /// Coordinate text: one `row col value` line per nonzero entry.
    pub fn to_coordinate_text(&self) -> String {
        let mut s = String::new();
        for (r, c, v) in self.triples() {
            writeln!(s, "{r} {c} {v}").unwrap();
        }
        s
    }

    /// Is `self ∘ upper` the zero map?
    pub fn composes_to_zero(&self, upper: &BoundaryMatrix) -> bool {
        upper.columns.iter().all(|col| {
            let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
            for &(k, a) in col {
                for &(r, b) in &self.columns[k as usize] {
                    *acc.entry(r).or_insert(0) += a * b;
                }
            }
            acc.values().all(|&x| x == 0)
        })
    }
}

/// `∂_i` for `i ≥ 0`; zero-width outside `0..=dim`.
pub fn boundary_matrix(c: &SimplicialComplex, i: i64) -> BoundaryMatrix {
    let nrows = c.faces_of_dim(i - 1).len();
    if i < 0 {
        return BoundaryMatrix {
            degree: i,
            nrows,
            ncols: 0,
            columns: Vec::new(),
        };
    }
    let columns = c
        .faces_of_dim(i)
        .iter()
        .map(|f| {
            let mut col: SparseVec<i64> = (0..f.len())
                .map(|j| {
                    let mut g = f.clone();
                    g.remove(j);
                    let row = c.face_index(&g).expect("complex is closed under subsets");
                    (row as u32, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect::<Vec<_>>();
    BoundaryMatrix {
        degree: i,
        nrows,
        ncols: columns.len(),
        columns,
    }
}

fn row_counts(m: &BoundaryMatrix) -> Vec<usize> {
    let mut counts = vec![0usize; m.nrows];
    for col in &m.columns {
        for (r, _) in col {
            counts[*r as usize] += 1;
        }
    }
    counts
}

/// Echelon basis of `im ∂_i ⊂ C_{i-1}`.
pub fn image_basis(c: &SimplicialComplex, i: i64, reduce: bool) -> AdaptiveEchelon {
    let m = boundary_matrix(c, i);
    let mut e = AdaptiveEchelon::with_column_counts(&row_counts(&m));
    for col in &m.columns {
        e.insert(col);
    }
    if reduce {
        e.reduce();
    }
    e.freeze();
    e
}

/// `rank ∂_i` for `i = 0..=dim + 1`.
pub fn boundary_ranks(
    c: &SimplicialComplex,
    opts: &HomologyOptions,
) -> Result<Vec<usize>, HomologyError> {
    let top = c.dim() + 1;
    opts.run(|| {
        (0..=top.max(0))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|i| image_basis(c, i, false).rank())
            .collect()
    })
}

/// Reduced Betti numbers `b̃_{-1}, b̃_0, .., b̃_dim`.
pub fn betti(c: &SimplicialComplex) -> Vec<usize> {
    betti_with(c, &HomologyOptions::default()).expect("single-threaded run cannot fail")
}

pub fn betti_with(
    c: &SimplicialComplex,
    opts: &HomologyOptions,
) -> Result<Vec<usize>, HomologyError> {
    let ranks = boundary_ranks(c, opts)?;
    let f = c.f_vector();
    Ok((0..f.len())
        .map(|s| {
            // s = i + 1 vertices; rank ∂_i = ranks[s - 1], rank ∂_{i+1} = ranks[s]
            let below = if s == 0 { 0 } else { ranks[s - 1] };
            let above = ranks.get(s).copied().unwrap_or(0);
            f[s] - below - above
        })
        .collect())
}

/// Reduced Euler characteristic `Σ (-1)^i f_i`, starting at `i = -1`.
pub fn reduced_euler_characteristic(c: &SimplicialComplex) -> i64 {
    c.f_vector()
        .iter()
        .enumerate()
        .map(|(s, &x)| if s % 2 == 0 { -(x as i64) } else { x as i64 })
        .sum()
}

/// Signed action of `σ` on the faces with `size` vertices, as preimages:
/// `pre[c] = (f, s)` with `σ·e_f = s·e_c`.
fn preimages(action: &[(usize, i8)]) -> Vec<(u32, i8)> {
    let mut pre = vec![(0u32, 0i8); action.len()];
    for (f, &(c, s)) in action.iter().enumerate() {
        pre[c] = (f as u32, s);
    }
    pre
}

fn fixed_face_trace(action: &[(usize, i8)]) -> i64 {
    action
        .iter()
        .enumerate()
        .filter(|(f, (c, _))| f == c)
        .map(|(_, (_, s))| *s as i64)
        .sum()
}

/// The homology module in one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeDecomposition {
    pub degree: i64,
    pub betti: usize,
    pub character: ClassFunction,
    pub ch: SymmetricFunction,
}

impl DegreeDecomposition {
    fn from_character(degree: i64, character: ClassFunction) -> Result<Self, HomologyError> {
        let ch = character.frobenius_ch();
        if ch.as_multiplicities().is_none() {
            return Err(HomologyError::NotACharacter {
                degree,
                ch: ch.to_text(),
            });
        }
        let dim = character.degree_value();
        let betti = dim
            .to_integer()
            .try_into()
            .map_err(|_| HomologyError::NotACharacter {
                degree,
                ch: ch.to_text(),
            })?;
        Ok(DegreeDecomposition {
            degree,
            betti,
            character,
            ch,
        })
    }

    /// Specht multiplicities `λ ↦ m_λ`, nonzero ones only.
    pub fn multiplicities(&self) -> BTreeMap<Partition, u64> {
        self.ch.as_multiplicities().unwrap_or_default()
    }
}

/// `ch H̃_i` for every degree `i = -1..=dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivariantDecomposition {
    pub complex: String,
    pub n: usize,
    pub degrees: Vec<DegreeDecomposition>,
}

impl EquivariantDecomposition {
    pub fn degree(&self, i: i64) -> Option<&DegreeDecomposition> {
        self.degrees.iter().find(|d| d.degree == i)
    }

    /// `ch H̃_i`, zero outside the computed range.
    pub fn ch(&self, i: i64) -> SymmetricFunction {
        self.degree(i)
            .map_or_else(|| SymmetricFunction::zero(self.n), |d| d.ch.clone())
    }

    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    /// Highest degree with nonzero homology.
    pub fn top_nonzero(&self) -> Option<&DegreeDecomposition> {
        self.degrees.iter().rev().find(|d| d.betti > 0)
    }

    pub fn to_json_value(&self) -> DecompositionJson {
        DecompositionJson {
            complex: self.complex.clone(),
            degrees: self
                .degrees
                .iter()
                .map(|d| DegreeJson {
                    i: d.degree,
                    betti: d.betti,
                    specht: d
                        .multiplicities()
                        .into_iter()
                        .rev()
                        .map(|(partition, mult)| SpechtJson { partition, mult })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// One line per degree: `H~_i  betti  ch`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for d in &self.degrees {
            writeln!(s, "H~_{}\tbetti {}\t{}", d.degree, d.betti, d.ch.to_text()).unwrap();
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub complex: String,
    pub degrees: Vec<DegreeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub i: i64,
    pub betti: usize,
    pub specht: Vec<SpechtJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtJson {
    pub partition: Partition,
    pub mult: u64,
}

/// Image index and sign of each face.
type SignedAction = Vec<(usize, i8)>;

/// Class representative of each cycle type of `S_n`, with its induced
/// signed action on faces of every size.
fn class_actions(
    c: &SimplicialComplex,
    n: usize,
) -> Result<Vec<(Partition, Vec<SignedAction>)>, HomologyError> {
    let sizes = c.f_vector().len();
    all_partitions(n)
        .into_iter()
        .map(|mu| {
            let sigma = class_representative(&mu);
            let vp = c.vertex_permutation(&sigma)?;
            let acts = (0..sizes)
                .map(|k| c.face_action(&vp, k))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((mu, acts))
        })
        .collect()
}

/// Character of `S_n` on the reduced chain group `C̃_i`.
pub fn chain_class_function(c: &SimplicialComplex, i: i64) -> Result<ClassFunction, HomologyError> {
    let n = c
        .symmetric_degree()
        .ok_or_else(|| ComplexError::NoAction(c.name().to_string()))?;
    let mut values = BTreeMap::new();
    for mu in all_partitions(n) {
        let vp = c.vertex_permutation(&class_representative(&mu))?;
        let act = c.face_action(&vp, (i + 1).max(0) as usize)?;
        let v = if i < -1 { 0 } else { fixed_face_trace(&act) };
        values.insert(mu, Rational::from_integer(v.into()));
    }
    Ok(ClassFunction::from_values(n, values)?)
}

/// The `S_n`-module structure of every reduced homology group, under the
/// complex's own vertex action.
pub fn equivariant_decomposition(
    c: &SimplicialComplex,
) -> Result<EquivariantDecomposition, HomologyError> {
    equivariant_decomposition_with(c, &HomologyOptions::default())
}

pub fn equivariant_decomposition_with(
    c: &SimplicialComplex,
    opts: &HomologyOptions,
) -> Result<EquivariantDecomposition, HomologyError> {
    let n = c
        .symmetric_degree()
        .ok_or_else(|| ComplexError::NoAction(c.name().to_string()))?;
    let actions = class_actions(c, n)?;
    let sizes = c.f_vector().len();
    let images: Vec<AdaptiveEchelon> = opts.run(|| {
        (0..sizes as i64)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|i| image_basis(c, i, true))
            .collect()
    })?;
    // rows: classes, columns: sizes
    let table: Vec<Vec<Rational>> = opts.run(|| {
        actions
            .par_iter()
            .map(|(_, acts)| {
                (0..sizes)
                    .map(|s| {
                        let mut v = Rational::from_integer(fixed_face_trace(&acts[s]).into());
                        if s >= 1 {
                            v -=
                                images[s - 1].trace_of_signed_permutation(&preimages(&acts[s - 1]));
                        }
                        v -= images[s].trace_of_signed_permutation(&preimages(&acts[s]));
                        v
                    })
                    .collect()
            })
            .collect()
    })?;
    assemble(c.name(), n, sizes, &actions, &table)
}

fn assemble(
    name: &str,
    n: usize,
    sizes: usize,
    actions: &[(Partition, Vec<SignedAction>)],
    table: &[Vec<Rational>],
) -> Result<EquivariantDecomposition, HomologyError> {
    let degrees = (0..sizes)
        .map(|s| {
            let values = actions
                .iter()
                .zip(table)
                .map(|((mu, _), row)| (mu.clone(), row[s].clone()))
                .collect();
            DegreeDecomposition::from_character(
                s as i64 - 1,
                ClassFunction::from_values(n, values)?,
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EquivariantDecomposition {
        complex: name.to_string(),
        n,
        degrees,
    })
}

/// A rational row-reduced basis with a tag vector carried along each row.
struct TaggedBasis {
    rows: Vec<(BTreeMap<u32, Rational>, Vec<Rational>)>,
    /// Pivot column of each row.
    pivots: Vec<u32>,
}

impl TaggedBasis {
    fn new() -> Self {
        TaggedBasis {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut BTreeMap<u32, Rational>, tag: &mut [Rational]) {
        for ((row, rtag), &p) in self.rows.iter().zip(&self.pivots) {
            let Some(x) = v.get(&p).cloned() else {
                continue;
            };
            let f = x / &row[&p];
            for (c, y) in row {
                let e = v.entry(*c).or_insert_with(Rational::zero);
                *e -= &f * y;
                if e.is_zero() {
                    v.remove(c);
                }
            }
            for (t, y) in tag.iter_mut().zip(rtag) {
                *t -= &f * y;
            }
        }
    }

    /// Inserts `v`; `true` if it was independent.
    fn insert(&mut self, mut v: BTreeMap<u32, Rational>, mut tag: Vec<Rational>) -> bool {
        self.reduce(&mut v, &mut tag);
        let Some((&p, _)) = v.iter().next() else {
            return false;
        };
        let pv = v[&p].clone();
        for (row, rtag) in self.rows.iter_mut() {
            let Some(x) = row.get(&p).cloned() else {
                continue;
            };
            let f = x / &pv;
            for (c, y) in &v {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &f * y;
                if e.is_zero() {
                    row.remove(c);
                }
            }
            for (t, y) in rtag.iter_mut().zip(&tag) {
                *t -= &f * y;
            }
        }
        self.rows.push((v, tag));
        self.pivots.push(p);
        true
    }

    /// Tag of `w = Σ_k (w_{p_k}/row_k[p_k]) row_k`.
    fn tag_of(&self, w: &BTreeMap<u32, Rational>, width: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); width];
        for ((row, rtag), &p) in self.rows.iter().zip(&self.pivots) {
            let Some(x) = w.get(&p) else { continue };
            let f = x / &row[&p];
            for (o, y) in out.iter_mut().zip(rtag) {
                *o += &f * y;
            }
        }
        out
    }
}

fn to_rational_map(v: &[(u32, i64)]) -> BTreeMap<u32, Rational> {
    v.iter()
        .map(|&(c, x)| (c, Rational::from_integer(x.into())))
        .collect()
}

/// Kernel basis of `∂_i`, as exact rational chains in `C_i`.
pub fn cycle_basis(c: &SimplicialComplex, i: i64) -> Vec<BTreeMap<u32, Rational>> {
    let width = c.faces_of_dim(i).len();
    let m = boundary_matrix(c, i);
    // rows of ∂_i as vectors over the i-faces
    let mut rows: Vec<SparseVec<i64>> = vec![Vec::new(); m.nrows];
    for (j, col) in m.columns.iter().enumerate() {
        for &(r, v) in col {
            rows[r as usize].push((j as u32, v));
        }
    }
    let mut basis = TaggedBasis::new();
    for r in &rows {
        basis.insert(to_rational_map(r), Vec::new());
    }
    let pivot_set: std::collections::BTreeSet<u32> = basis.pivots.iter().copied().collect();
    (0..width as u32)
        .filter(|j| !pivot_set.contains(j))
        .map(|j| {
            let mut z = BTreeMap::new();
            z.insert(j, Rational::one());
            for ((row, _), &p) in basis.rows.iter().zip(&basis.pivots) {
                if let Some(x) = row.get(&j) {
                    z.insert(p, -(x / &row[&p]));
                }
            }
            z
        })
        .collect()
}

/// Cycles whose classes form a basis of `H̃_i`.
pub fn homology_representatives(c: &SimplicialComplex, i: i64) -> Vec<BTreeMap<u32, Rational>> {
    representatives_with_basis(c, i).0
}

fn representatives_with_basis(
    c: &SimplicialComplex,
    i: i64,
) -> (Vec<BTreeMap<u32, Rational>>, TaggedBasis) {
    let cycles = cycle_basis(c, i);
    let up = boundary_matrix(c, i + 1);
    let mut basis = TaggedBasis::new();
    for col in &up.columns {
        basis.insert(to_rational_map(col), Vec::new());
    }
    let mut reps = Vec::new();
    for z in cycles {
        if basis.insert(z.clone(), Vec::new()) {
            reps.push(z);
        }
    }
    // rebuild with tags now that the number of representatives is known
    let width = reps.len();
    let mut tagged = TaggedBasis::new();
    for col in &up.columns {
        tagged.insert(to_rational_map(col), vec![Rational::zero(); width]);
    }
    for (k, z) in reps.iter().enumerate() {
        let mut tag = vec![Rational::zero(); width];
        tag[k] = Rational::one();
        tagged.insert(z.clone(), tag);
    }
    (reps, tagged)
}

fn act_on_chain(v: &BTreeMap<u32, Rational>, action: &[(usize, i8)]) -> BTreeMap<u32, Rational> {
    v.iter()
        .map(|(f, x)| {
            let (c, s) = action[*f as usize];
            (c as u32, if s < 0 { -x } else { x.clone() })
        })
        .collect()
}

/// Character of `H̃_i` obtained by pushing each homology representative
/// through `σ` and projecting back onto the representatives modulo
/// boundaries. Independent of [`equivariant_decomposition`]; meant for
/// small complexes.
pub fn homology_character_via_representatives(
    c: &SimplicialComplex,
    i: i64,
) -> Result<ClassFunction, HomologyError> {
    let n = c
        .symmetric_degree()
        .ok_or_else(|| ComplexError::NoAction(c.name().to_string()))?;
    let (reps, tagged) = representatives_with_basis(c, i);
    let s = (i + 1) as usize;
    let mut values = BTreeMap::new();
    for mu in all_partitions(n) {
        let vp = c.vertex_permutation(&class_representative(&mu))?;
        let act = c.face_action(&vp, s)?;
        let mut tr = Rational::zero();
        for (k, z) in reps.iter().enumerate() {
            tr += &tagged.tag_of(&act_on_chain(z, &act), reps.len())[k];
        }
        values.insert(mu, tr);
    }
    Ok(ClassFunction::from_values(n, values)?)
}

/// Same as [`equivariant_decomposition`], through the representative route.
pub fn equivariant_decomposition_via_representatives(
    c: &SimplicialComplex,
) -> Result<EquivariantDecomposition, HomologyError> {
    let n = c
        .symmetric_degree()
        .ok_or_else(|| ComplexError::NoAction(c.name().to_string()))?;
    let degrees = (-1..=c.dim())
        .map(|i| {
            DegreeDecomposition::from_character(i, homology_character_via_representatives(c, i)?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EquivariantDecomposition {
        complex: c.name().to_string(),
        n,
        degrees,
    })
}

/// Is `z` a cycle of `∂_i`?
pub fn is_cycle(c: &SimplicialComplex, i: i64, z: &BTreeMap<u32, Rational>) -> bool {
    if i < 0 {
        return true;
    }
    let m = boundary_matrix(c, i);
    let mut acc: BTreeMap<u32, Rational> = BTreeMap::new();
    for (j, x) in z {
        for &(r, v) in &m.columns[*j as usize] {
            *acc.entry(r).or_insert_with(Rational::zero) += x * Rational::from_integer(v.into());
        }
    }
    acc.values().all(Zero::is_zero)
}

/// `ch C̃_{r-1}(M_p(n)) = e_r[h_p] · h_{n-rp}`.
pub fn chain_character(p: usize, n: usize, r: usize) -> Result<SymmetricFunction, HomologyError> {
    if r * p > n {
        return Err(HomologyError::RangeError { p, n, r });
    }
    let er_hp = SymmetricFunction::from_e(r).plethysm(&SymmetricFunction::from_h(p))?;
    Ok(er_hp.multiply(&SymmetricFunction::from_h(n - r * p)))
}

/// Signed sum `Σ_i (-1)^i ch H̃_i` over the computed degrees.
pub fn homology_euler_sum(d: &EquivariantDecomposition) -> SymmetricFunction {
    let mut acc = SymmetricFunction::zero(d.n);
    for deg in &d.degrees {
        let sign = if deg.degree.rem_euclid(2) == 0 { 1 } else { -1 };
        acc = acc
            .try_add(&deg.ch.scale(&Rational::from_integer(sign.into())))
            .expect("same degree");
    }
    acc
}

/// Signed sum `Σ_i (-1)^i ch C̃_i` of a complex with an `S_n` action.
pub fn chain_euler_sum(c: &SimplicialComplex) -> Result<SymmetricFunction, HomologyError> {
    let n = c
        .symmetric_degree()
        .ok_or_else(|| ComplexError::NoAction(c.name().to_string()))?;
    let mut acc = SymmetricFunction::zero(n);
    for i in -1..=c.dim() {
        let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
        let ch = chain_class_function(c, i)?.frobenius_ch();
        acc = acc.try_add(&ch.scale(&Rational::from_integer(sign.into())))?;
    }
    Ok(acc)
}

/// Applies a permutation of `[n]` to a chain of `c` (helper for tests and examples).
pub fn apply_to_chain(
    c: &SimplicialComplex,
    sigma: &Perm,
    i: i64,
    z: &BTreeMap<u32, Rational>,
) -> Result<BTreeMap<u32, Rational>, HomologyError> {
    let vp = c.vertex_permutation(sigma)?;
    let act = c.face_action(&vp, (i + 1) as usize)?;
    Ok(act_on_chain(z, &act))
}

/// `true` when every coefficient of every degree is a nonnegative integer.
pub fn is_genuine(d: &EquivariantDecomposition) -> bool {
    d.degrees.iter().all(|x| {
        x.ch.terms()
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{matching_complex, VertexLabel};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        let labels = (0..3).map(VertexLabel::Index).collect();
        SimplicialComplex::from_facets(
            "circle",
            labels,
            &[vec![0, 1], vec![1, 2], vec![0, 2]],
            None,
        )
        .unwrap()
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = matching_complex(2, 6).unwrap();
        for i in 1..=c.dim() + 1 {
            assert!(boundary_matrix(&c, i - 1).composes_to_zero(&boundary_matrix(&c, i)));
        }
        assert_eq!(boundary_matrix(&c, 0).nrows, 1);
        assert_eq!(
            boundary_matrix(&c, 0).to_coordinate_text().lines().count(),
            15
        );
    }

    #[test]
    fn betti_examples() {
        let point =
            SimplicialComplex::from_facets("pt", vec![VertexLabel::Index(0)], &[vec![0]], None)
                .unwrap();
        assert_eq!(betti(&point), vec![0, 0]);
        assert_eq!(betti(&matching_complex(2, 5).unwrap()), vec![0, 0, 6]);
        assert_eq!(betti(&matching_complex(3, 4).unwrap()), vec![0, 3]);
        assert_eq!(betti(&matching_complex(3, 2).unwrap()), vec![1]);
        assert_eq!(betti(&triangle_boundary()), vec![0, 0, 1]);
    }

    #[test]
    fn representatives_examples() {
        let circle = triangle_boundary();
        let reps = homology_representatives(&circle, 1);
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].len(), 3);
        assert!(is_cycle(&circle, 1, &reps[0]));

        let m = matching_complex(3, 4).unwrap();
        let reps = homology_representatives(&m, 0);
        assert_eq!(reps.len(), 3);
        for z in &reps {
            assert!(is_cycle(&m, 0, z));
            assert_eq!(z.len(), 2);
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = equivariant_decomposition(&matching_complex(3, 4).unwrap()).unwrap();
        assert_eq!(
            d.degree(0).unwrap().multiplicities(),
            [(p(&[3, 1]), 1)].into_iter().collect()
        );
        let d = equivariant_decomposition(&matching_complex(2, 5).unwrap()).unwrap();
        assert_eq!(
            d.degree(1).unwrap().multiplicities(),
            [(p(&[3, 1, 1]), 1)].into_iter().collect()
        );
        assert_eq!(d.betti(), vec![0, 0, 6]);
        let d = equivariant_decomposition(&matching_complex(3, 2).unwrap()).unwrap();
        assert_eq!(d.ch(-1), SymmetricFunction::from_h(2));
    }

    #[test]
    fn routes_agree() {
        for (pp, n) in [(2, 4), (2, 5), (3, 6), (3, 7)] {
            let c = matching_complex(pp, n).unwrap();
            let a = equivariant_decomposition(&c).unwrap();
            let b = equivariant_decomposition_via_representatives(&c).unwrap();
            assert_eq!(a, b, "M_{pp}({n})");
        }
    }

    #[test]
    fn threads_do_not_change_results() {
        let c = matching_complex(2, 6).unwrap();
        let a = equivariant_decomposition_with(&c, &HomologyOptions::with_threads(1)).unwrap();
        let b = equivariant_decomposition_with(&c, &HomologyOptions::with_threads(4)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn chain_character_examples() {
        let s = |v: &[usize]| SymmetricFunction::schur(p(v));
        assert_eq!(
            chain_character(3, 4, 1).unwrap(),
            s(&[4]).try_add(&s(&[3, 1])).unwrap()
        );
        assert_eq!(chain_character(2, 4, 2).unwrap(), s(&[3, 1]));
        assert_eq!(
            chain_character(3, 5, 0).unwrap(),
            SymmetricFunction::from_h(5)
        );
        assert!(chain_character(3, 5, 2).is_err());
    }

    #[test]
    fn json_shape() {
        let d = equivariant_decomposition(&matching_complex(3, 4).unwrap()).unwrap();
        let j = d.to_json();
        assert!(
            j.contains(r#"{"i":0,"betti":3,"specht":[{"partition":[3,1],"mult":1}]}"#),
            "{j}"
        );
    }
}

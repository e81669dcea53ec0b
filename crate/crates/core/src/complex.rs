//! Finite abstract simplicial complexes carrying a vertex action of `S_n`.
//!
//! Builders for the hypergraph matching complex `M_p(n)`, the `p`-cycle
//! complex `C_p(n)` (as an inflation of `M_p(n)`), and the Quillen complex
//! `ΔA_p(S_n)`, together with order complexes, face posets and links.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::is_prime;
use crate::perm::Perm;

/// A face: strictly increasing vertex indices.
pub type Face = Vec<u32>;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("refusing to enumerate subgroups for p = {p}, n = {n} without allow_large")]
    SizeGuard { p: usize, n: usize },
    #[error("{0:?} is not a face")]
    NotAFace(Vec<u32>),
    #[error("complex {0} carries no symmetric-group action")]
    NoAction(String),
    #[error("action is not simplicial: a face maps outside the complex")]
    NotSimplicial,
    #[error("malformed facet list: {0}")]
    Parse(String),
}

/// Canonical vertex labels. Points of `[n]` are numbered `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLabel {
    /// A sorted `p`-subset of `[n]`.
    PSet(Vec<u8>),
    /// A cyclic subgroup generated by a `p`-cycle, given by its canonical
    /// generating cycle: starts at the least support point and is the
    /// lexicographically least among the cycles of all generators.
    CyclicGroup(Vec<u8>),
    /// An elementary abelian subgroup, keyed by its sorted element list.
    Subgroup(Vec<Perm>),
    /// A vertex of a face poset: the labels of a face's vertices, sorted.
    Face(Vec<VertexLabel>),
    /// Copy `index` of a base vertex in an inflation.
    Copy {
        base: Box<VertexLabel>,
        index: usize,
    },
    /// A bare vertex with no attached structure.
    Index(usize),
}

impl VertexLabel {
    /// Image under `σ ∈ S_n` (relabelling supports, or conjugating
    /// subgroups). `None` for labels without a natural action.
    pub fn act(&self, sigma: &Perm) -> Option<VertexLabel> {
        match self {
            VertexLabel::PSet(s) => {
                let mut v: Vec<u8> = s.iter().map(|&x| sigma.0[x as usize]).collect();
                v.sort_unstable();
                Some(VertexLabel::PSet(v))
            }
            VertexLabel::CyclicGroup(c) => {
                let img: Vec<u8> = c.iter().map(|&x| sigma.0[x as usize]).collect();
                Some(VertexLabel::CyclicGroup(canonical_cycle(&img)))
            }
            VertexLabel::Subgroup(els) => {
                let mut v: Vec<Perm> = els.iter().map(|g| sigma.conjugate(g)).collect();
                v.sort();
                Some(VertexLabel::Subgroup(v))
            }
            VertexLabel::Face(ls) => {
                let mut v = ls
                    .iter()
                    .map(|l| l.act(sigma))
                    .collect::<Option<Vec<_>>>()?;
                v.sort();
                Some(VertexLabel::Face(v))
            }
            VertexLabel::Copy { .. } | VertexLabel::Index(_) => None,
        }
    }

    /// Support set of a `p`-set or cyclic-group label.
    pub fn support(&self) -> Option<Vec<u8>> {
        match self {
            VertexLabel::PSet(s) => Some(s.clone()),
            VertexLabel::CyclicGroup(c) => {
                let mut v = c.clone();
                v.sort_unstable();
                Some(v)
            }
            _ => None,
        }
    }
}

/// Canonical generating cycle of `⟨c⟩` for a cycle `c` of prime length:
/// among the cycles of all generators `c^k`, each written from its least
/// point, the lexicographically least.
pub fn canonical_cycle(c: &[u8]) -> Vec<u8> {
    let p = c.len();
    let start = (0..p).min_by_key(|&i| c[i]).unwrap_or(0);
    (1..p.max(2))
        .filter(|k| p == 1 || gcd(*k, p) == 1)
        .map(|k| (0..p).map(|j| c[(start + j * k) % p]).collect::<Vec<u8>>())
        .min()
        .unwrap_or_default()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A finite abstract simplicial complex storing every face, the empty face
/// included. Faces of each cardinality are kept in lexicographic order.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    name: String,
    labels: Vec<VertexLabel>,
    /// `faces[k]` holds the faces with `k` vertices.
    faces: Vec<Vec<Face>>,
    lookup: Vec<HashMap<Face, usize>>,
    label_index: HashMap<VertexLabel, usize>,
    symmetric_degree: Option<usize>,
}

impl SimplicialComplex {
    fn assemble(
        name: String,
        labels: Vec<VertexLabel>,
        mut faces: Vec<Vec<Face>>,
        symmetric_degree: Option<usize>,
    ) -> Self {
        if faces.is_empty() {
            faces.push(vec![Vec::new()]);
        }
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        for level in faces.iter_mut() {
            level.sort();
            level.dedup();
        }
        let lookup = faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, f)| (f, i))
                    .collect()
            })
            .collect();
        let label_index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        SimplicialComplex {
            name,
            labels,
            faces,
            lookup,
            label_index,
            symmetric_degree,
        }
    }

    /// The complex `{∅}`.
    pub fn empty(name: impl Into<String>, symmetric_degree: Option<usize>) -> Self {
        Self::assemble(
            name.into(),
            Vec::new(),
            vec![vec![Vec::new()]],
            symmetric_degree,
        )
    }

    /// The downward closure of `facets`.
    pub fn from_facets(
        name: impl Into<String>,
        labels: Vec<VertexLabel>,
        facets: &[Vec<u32>],
        symmetric_degree: Option<usize>,
    ) -> Result<Self, ComplexError> {
        let nv = labels.len() as u32;
        let mut sets: Vec<HashSet<Face>> = vec![HashSet::new()];
        sets[0].insert(Vec::new());
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) || f.iter().any(|&v| v >= nv) {
                return Err(ComplexError::Parse(format!("bad facet {f:?}")));
            }
            if sets.len() <= f.len() {
                sets.resize(f.len() + 1, HashSet::new());
            }
            for mask in 1u64..(1u64 << f.len()) {
                let sub: Face = (0..f.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                sets[sub.len()].insert(sub);
            }
        }
        let faces = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Self::assemble(name.into(), labels, faces, symmetric_degree))
    }

    /// Clique complex of the graph with the given sorted adjacency lists.
    pub fn flag(
        name: impl Into<String>,
        labels: Vec<VertexLabel>,
        neighbors: &[Vec<u32>],
        symmetric_degree: Option<usize>,
    ) -> Self {
        let mut faces: Vec<Vec<Face>> = vec![vec![Vec::new()]];
        let mut cur = Vec::new();
        for v in 0..labels.len() as u32 {
            let cand: Vec<u32> = neighbors[v as usize]
                .iter()
                .copied()
                .filter(|&w| w > v)
                .collect();
            cur.push(v);
            cliques_rec(&mut cur, &cand, neighbors, &mut faces);
            cur.pop();
        }
        Self::assemble(name.into(), labels, faces, symmetric_degree)
    }

    /// Same complex with vertices renumbered in increasing label order.
    pub fn sorted_by_label(self) -> Self {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        let mut new_index = vec![0u32; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new as u32;
        }
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let faces = self
            .faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|f| {
                        let mut g: Face = f.iter().map(|&v| new_index[v as usize]).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect()
            })
            .collect();
        Self::assemble(self.name, labels, faces, self.symmetric_degree)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// `-1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.faces.len() as i64 - 2
    }

    /// Faces with `k` vertices (dimension `k - 1`).
    pub fn faces_with_size(&self, k: usize) -> &[Face] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    /// Faces of dimension `i ≥ -1`.
    pub fn faces_of_dim(&self, i: i64) -> &[Face] {
        if i < -1 {
            return &[];
        }
        self.faces_with_size((i + 1) as usize)
    }

    /// Face counts by cardinality, starting with the empty face.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn face_index(&self, face: &[u32]) -> Option<usize> {
        self.lookup.get(face.len())?.get(face).copied()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        self.face_index(face).is_some()
    }

    pub fn symmetric_degree(&self) -> Option<usize> {
        self.symmetric_degree
    }

    pub fn vertex_of_label(&self, l: &VertexLabel) -> Option<usize> {
        self.label_index.get(l).copied()
    }

    /// Closed under subsets, contains `∅`, faces strictly increasing.
    pub fn check_invariants(&self) -> bool {
        if self.faces.first().map(|l| l.as_slice()) != Some(&[Vec::new()][..]) {
            return false;
        }
        self.faces.iter().enumerate().all(|(k, level)| {
            level.iter().all(|f| {
                f.len() == k
                    && f.windows(2).all(|w| w[0] < w[1])
                    && f.iter().all(|&v| (v as usize) < self.labels.len())
                    && (0..f.len()).all(|j| {
                        let mut g = f.clone();
                        g.remove(j);
                        self.contains_face(&g)
                    })
            })
        })
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for k in 0..self.faces.len() {
            let mut covered: HashSet<Face> = HashSet::new();
            for f in self.faces.get(k + 1).map_or(&[][..], Vec::as_slice) {
                for j in 0..f.len() {
                    let mut g = f.clone();
                    g.remove(j);
                    covered.insert(g);
                }
            }
            out.extend(
                self.faces[k]
                    .iter()
                    .filter(|f| !covered.contains(*f))
                    .cloned(),
            );
        }
        out.retain(|f| !f.is_empty() || self.faces.len() == 1);
        out
    }

    /// Vertex permutation induced by `σ`.
    pub fn vertex_permutation(&self, sigma: &Perm) -> Result<Vec<u32>, ComplexError> {
        if self.symmetric_degree != Some(sigma.degree()) {
            return Err(ComplexError::NoAction(self.name.clone()));
        }
        self.labels
            .iter()
            .map(|l| {
                let img = l
                    .act(sigma)
                    .ok_or_else(|| ComplexError::NoAction(self.name.clone()))?;
                self.label_index
                    .get(&img)
                    .map(|&i| i as u32)
                    .ok_or(ComplexError::NotSimplicial)
            })
            .collect()
    }

    /// Image index and orientation sign of every face with `k` vertices.
    pub fn face_action(&self, vperm: &[u32], k: usize) -> Result<Vec<(usize, i8)>, ComplexError> {
        self.faces_with_size(k)
            .iter()
            .map(|f| {
                let mut img: Vec<u32> = f.iter().map(|&v| vperm[v as usize]).collect();
                let sign = sort_with_sign(&mut img);
                self.face_index(&img)
                    .map(|i| (i, sign))
                    .ok_or(ComplexError::NotSimplicial)
            })
            .collect()
    }

    /// Does `σ` map every face to a face?
    pub fn is_action_simplicial(&self, sigma: &Perm) -> bool {
        match self.vertex_permutation(sigma) {
            Ok(vp) => (0..self.faces.len()).all(|k| self.face_action(&vp, k).is_ok()),
            Err(_) => false,
        }
    }

    /// Writes the facet-list text form: a `dim n_vertices` header, one facet
    /// per line as 0-based vertex indices, then the label table as JSON.
    pub fn to_facet_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.dim(), self.num_vertices()).unwrap();
        for f in self.facets() {
            if f.is_empty() {
                continue;
            }
            let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            writeln!(s, "{}", parts.join(" ")).unwrap();
        }
        writeln!(s, "{}", serde_json::to_string(&self.labels).unwrap()).unwrap();
        s
    }

    pub fn from_facet_text(
        name: impl Into<String>,
        text: &str,
        symmetric_degree: Option<usize>,
    ) -> Result<Self, ComplexError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| ComplexError::Parse("missing header".into()))?;
        let mut h = header.split_whitespace();
        let dim: i64 = h
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| ComplexError::Parse(format!("bad header {header:?}")))?;
        let nv: usize = h
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| ComplexError::Parse(format!("bad header {header:?}")))?;
        let mut facets = Vec::new();
        let mut labels = None;
        for line in lines {
            let t = line.trim();
            if t.starts_with('[') {
                let l: Vec<VertexLabel> =
                    serde_json::from_str(t).map_err(|e| ComplexError::Parse(e.to_string()))?;
                labels = Some(l);
                break;
            }
            let f: Result<Vec<u32>, _> = t.split_whitespace().map(str::parse).collect();
            facets.push(f.map_err(|_| ComplexError::Parse(format!("bad face {t:?}")))?);
        }
        let labels = labels.unwrap_or_else(|| (0..nv).map(VertexLabel::Index).collect());
        if labels.len() != nv {
            return Err(ComplexError::Parse(format!(
                "{} labels for {nv} vertices",
                labels.len()
            )));
        }
        let c = Self::from_facets(name, labels, &facets, symmetric_degree)?;
        if c.dim() != dim {
            return Err(ComplexError::Parse(format!(
                "declared dim {dim}, found {}",
                c.dim()
            )));
        }
        Ok(c)
    }
}

fn cliques_rec(
    cur: &mut Vec<u32>,
    cand: &[u32],
    neighbors: &[Vec<u32>],
    faces: &mut Vec<Vec<Face>>,
) {
    let k = cur.len();
    if faces.len() <= k {
        faces.push(Vec::new());
    }
    faces[k].push(cur.clone());
    for (i, &w) in cand.iter().enumerate() {
        let nw = &neighbors[w as usize];
        let next: Vec<u32> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|x| nw.binary_search(x).is_ok())
            .collect();
        cur.push(w);
        cliques_rec(cur, &next, neighbors, faces);
        cur.pop();
    }
}

/// Sorts in place and returns the sign of the sorting permutation.
pub fn sort_with_sign(v: &mut [u32]) -> i8 {
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    subsets_rec(0, n, k, &mut cur, &mut out);
    out
}

fn subsets_rec(start: usize, n: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in start..n {
        if n - x < k - cur.len() {
            break;
        }
        cur.push(x as u8);
        subsets_rec(x + 1, n, k, cur, out);
        cur.pop();
    }
}

fn disjoint(a: &[u8], b: &[u8]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

fn disjointness_graph(supports: &[Vec<u8>]) -> Vec<Vec<u32>> {
    (0..supports.len())
        .map(|i| {
            (0..supports.len())
                .filter(|&j| j != i && disjoint(&supports[i], &supports[j]))
                .map(|j| j as u32)
                .collect()
        })
        .collect()
}

/// `⌊n/p⌋ - 1`, the common dimension of `M_p(n)`, `C_p(n)` and `ΔA_p(S_n)`.
pub fn top_dimension(p: usize, n: usize) -> i64 {
    (n / p) as i64 - 1
}

/// The hypergraph matching complex `M_p(n)`: vertices are the `p`-subsets
/// of `[n]`, faces are collections of pairwise disjoint ones.
pub fn matching_complex(p: usize, n: usize) -> Result<SimplicialComplex, ComplexError> {
    if p < 2 {
        return Err(ComplexError::InvalidParameter(format!(
            "p must be at least 2, got {p}"
        )));
    }
    if n > u8::MAX as usize {
        return Err(ComplexError::InvalidParameter(format!(
            "n = {n} is too large"
        )));
    }
    let sets = k_subsets(n, p);
    let nbrs = disjointness_graph(&sets);
    let labels = sets.into_iter().map(VertexLabel::PSet).collect();
    Ok(SimplicialComplex::flag(
        format!("M_{p}({n})"),
        labels,
        &nbrs,
        Some(n),
    ))
}

/// An inflation together with its deflating map (vertex → base vertex).
#[derive(Clone, Debug)]
pub struct Inflation {
    pub complex: SimplicialComplex,
    pub deflation: Vec<usize>,
}

/// The `m`-inflation: vertex `x_i` replaced by `m_i` copies, and every
/// version of every face of `base` kept.
pub fn inflation(base: &SimplicialComplex, mult: &[usize]) -> Result<Inflation, ComplexError> {
    if mult.len() != base.num_vertices() {
        return Err(ComplexError::InvalidParameter(format!(
            "{} multiplicities for {} vertices",
            mult.len(),
            base.num_vertices()
        )));
    }
    if mult.contains(&0) {
        return Err(ComplexError::InvalidParameter(
            "multiplicities must be positive".into(),
        ));
    }
    let mut offset = Vec::with_capacity(mult.len());
    let mut labels = Vec::new();
    let mut deflation = Vec::new();
    for (i, &m) in mult.iter().enumerate() {
        offset.push(labels.len() as u32);
        for j in 0..m {
            labels.push(VertexLabel::Copy {
                base: Box::new(base.labels()[i].clone()),
                index: j,
            });
            deflation.push(i);
        }
    }
    let mut faces: Vec<Vec<Face>> = Vec::new();
    for k in 0..=((base.dim() + 1) as usize) {
        let mut level = Vec::new();
        for f in base.faces_with_size(k) {
            let mut cur = Vec::with_capacity(k);
            versions_rec(f, mult, &offset, &mut cur, &mut level);
        }
        faces.push(level);
    }
    let name = format!("{}_m", base.name());
    let complex = SimplicialComplex::assemble(name, labels, faces, None);
    Ok(Inflation { complex, deflation })
}

fn versions_rec(
    f: &[u32],
    mult: &[usize],
    offset: &[u32],
    cur: &mut Vec<u32>,
    out: &mut Vec<Face>,
) {
    if cur.len() == f.len() {
        out.push(cur.clone());
        return;
    }
    let v = f[cur.len()] as usize;
    for j in 0..mult[v] as u32 {
        cur.push(offset[v] + j);
        versions_rec(f, mult, offset, cur, out);
        cur.pop();
    }
}

/// Canonical generators of the `(p-2)!` cyclic subgroups of order `p` with
/// support `set`, sorted.
pub fn cyclic_subgroups_on(set: &[u8]) -> Vec<Vec<u8>> {
    let first = set[0];
    let mut rest: Vec<u8> = set[1..].to_vec();
    let mut found: HashSet<Vec<u8>> = HashSet::new();
    permute_rec(&mut rest, 0, &mut |perm| {
        let mut c = vec![first];
        c.extend_from_slice(perm);
        found.insert(canonical_cycle(&c));
    });
    let mut v: Vec<_> = found.into_iter().collect();
    v.sort();
    v
}

fn permute_rec(v: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute_rec(v, k + 1, f);
        v.swap(k, i);
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The `p`-cycle complex `C_p(n)`, built as the `(p-2)!`-fold inflation of
/// `M_p(n)` whose copies are labelled by the actual cyclic subgroups.
pub fn pcycle_complex(p: usize, n: usize) -> Result<SimplicialComplex, ComplexError> {
    if !is_prime(p) {
        return Err(ComplexError::NotPrime(p));
    }
    let base = matching_complex(p, n)?;
    let copies = factorial(p - 2);
    let infl = inflation(&base, &vec![copies; base.num_vertices()])?;
    let labels: Vec<VertexLabel> = infl
        .complex
        .labels()
        .iter()
        .map(|l| match l {
            VertexLabel::Copy { base, index } => {
                let set = base.support().expect("matching complex labels are p-sets");
                VertexLabel::CyclicGroup(cyclic_subgroups_on(&set)[*index].clone())
            }
            other => other.clone(),
        })
        .collect();
    let faces = infl.complex.faces.clone();
    Ok(
        SimplicialComplex::assemble(format!("C_{p}({n})"), labels, faces, Some(n))
            .sorted_by_label(),
    )
}

/// Deflating map `C_p(n) → M_p(n)`: each cyclic subgroup goes to its support.
pub fn deflation_map(
    pcycle: &SimplicialComplex,
    matching: &SimplicialComplex,
) -> Result<Vec<usize>, ComplexError> {
    pcycle
        .labels()
        .iter()
        .map(|l| {
            let s = l
                .support()
                .ok_or_else(|| ComplexError::InvalidParameter("not a cyclic label".into()))?;
            matching
                .vertex_of_label(&VertexLabel::PSet(s))
                .ok_or_else(|| ComplexError::InvalidParameter("support is not a vertex".into()))
        })
        .collect()
}

/// An elementary abelian `p`-subgroup of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    /// Sorted element list, identity included.
    pub elements: Vec<Perm>,
    pub rank: usize,
}

/// Default size guard for [`quillen_complex`].
pub fn quillen_within_guard(p: usize, n: usize) -> bool {
    match p {
        2 => n <= 6,
        3 => n <= 9,
        5 => n <= 7,
        _ => n <= p + 2,
    }
}

/// All elements of order `p` in `S_n`, as products of disjoint `p`-cycles.
pub fn elements_of_order(p: usize, n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    order_p_rec(0, p, n, &mut used, &mut cycles, &mut out);
    out.sort();
    out
}

fn order_p_rec(
    start: usize,
    p: usize,
    n: usize,
    used: &mut Vec<bool>,
    cycles: &mut Vec<Vec<usize>>,
    out: &mut Vec<Perm>,
) {
    let Some(i) = (start..n).find(|&i| !used[i]) else {
        if !cycles.is_empty() {
            out.push(Perm::from_cycles(n, cycles));
        }
        return;
    };
    // i stays fixed
    used[i] = true;
    order_p_rec(i + 1, p, n, used, cycles, out);
    // or i starts a p-cycle through larger unused points
    let free: Vec<usize> = (i + 1..n).filter(|&j| !used[j]).collect();
    if free.len() >= p - 1 {
        let mut tail = Vec::new();
        arrangements_rec(&free, p - 1, &mut tail, &mut |t| {
            let mut c = vec![i];
            c.extend_from_slice(t);
            for &x in t {
                used[x] = true;
            }
            cycles.push(c);
            order_p_rec(i + 1, p, n, used, cycles, out);
            cycles.pop();
            for &x in t {
                used[x] = false;
            }
        });
    }
    used[i] = false;
}

fn arrangements_rec(pool: &[usize], k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for &x in pool {
        if !cur.contains(&x) {
            cur.push(x);
            arrangements_rec(pool, k, cur, f);
            cur.pop();
        }
    }
}

/// Every nontrivial elementary abelian `p`-subgroup of `S_n`, by rank:
/// rank one from single elements of order `p`, rank `r + 1` from rank `r`
/// extended by a commuting element of order `p` outside it.
pub fn elementary_abelian_subgroups(p: usize, n: usize) -> Result<Vec<Subgroup>, ComplexError> {
    if !is_prime(p) {
        return Err(ComplexError::NotPrime(p));
    }
    let elements = elements_of_order(p, n);
    let mut all: Vec<Subgroup> = Vec::new();
    let mut layer: Vec<(Vec<Perm>, Vec<Perm>)> = Vec::new(); // (generators, sorted elements)
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    for g in &elements {
        let mut els: Vec<Perm> = (0..p).map(|k| g.power(k)).collect();
        els.sort();
        if seen.insert(els.clone()) {
            layer.push((vec![g.clone()], els));
        }
    }
    let mut rank = 1;
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (gens, els) in &layer {
            let members: HashSet<&Perm> = els.iter().collect();
            for x in &elements {
                if members.contains(x) || !gens.iter().all(|g| g.commutes_with(x)) {
                    continue;
                }
                let powers: Vec<Perm> = (0..p).map(|k| x.power(k)).collect();
                let mut bigger: Vec<Perm> = els
                    .iter()
                    .flat_map(|s| powers.iter().map(move |y| s.compose(y)))
                    .collect();
                bigger.sort();
                if seen.insert(bigger.clone()) {
                    let mut g2 = gens.clone();
                    g2.push(x.clone());
                    next.push((g2, bigger));
                }
            }
        }
        for (_, els) in layer.drain(..) {
            all.push(Subgroup {
                elements: els,
                rank,
            });
        }
        layer = next;
        rank += 1;
    }
    Ok(all)
}

/// A finite poset given by its labels and strict order relation.
#[derive(Clone, Debug)]
pub struct Poset {
    pub labels: Vec<VertexLabel>,
    /// `greater[a]`: sorted indices `b` with `a < b`.
    pub greater: Vec<Vec<u32>>,
    pub symmetric_degree: Option<usize>,
}

impl Poset {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn comparability(&self) -> Vec<Vec<u32>> {
        let mut nb: Vec<Vec<u32>> = vec![Vec::new(); self.len()];
        for (a, gs) in self.greater.iter().enumerate() {
            for &b in gs {
                nb[a].push(b);
                nb[b as usize].push(a as u32);
            }
        }
        for l in nb.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        nb
    }
}

/// The order complex: chains of the poset as faces.
pub fn order_complex(name: impl Into<String>, poset: &Poset) -> SimplicialComplex {
    let nb = poset.comparability();
    SimplicialComplex::flag(name, poset.labels.clone(), &nb, poset.symmetric_degree)
}

/// The poset of nonempty faces ordered by inclusion.
pub fn face_poset(c: &SimplicialComplex) -> Poset {
    let mut ids: HashMap<&Face, u32> = HashMap::new();
    let mut labels = Vec::new();
    let mut members = Vec::new();
    for k in 1..=c.f_vector().len().saturating_sub(1) {
        for f in c.faces_with_size(k) {
            ids.insert(f, labels.len() as u32);
            let mut l: Vec<VertexLabel> =
                f.iter().map(|&v| c.labels()[v as usize].clone()).collect();
            l.sort();
            labels.push(VertexLabel::Face(l));
            members.push(f);
        }
    }
    let mut greater: Vec<Vec<u32>> = vec![Vec::new(); labels.len()];
    for (b, f) in members.iter().enumerate() {
        let k = f.len();
        for mask in 1u64..((1u64 << k) - 1) {
            let sub: Face = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| f[i])
                .collect();
            let a = ids[&sub];
            greater[a as usize].push(b as u32);
        }
    }
    for g in greater.iter_mut() {
        g.sort_unstable();
    }
    Poset {
        labels,
        greater,
        symmetric_degree: c.symmetric_degree(),
    }
}

/// Barycentric subdivision `ΔPΔ`.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> SimplicialComplex {
    order_complex(format!("sd({})", c.name()), &face_poset(c)).sorted_by_label()
}

/// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, on the vertices it uses.
pub fn link(c: &SimplicialComplex, face: &[u32]) -> Result<SimplicialComplex, ComplexError> {
    let mut f = face.to_vec();
    f.sort_unstable();
    if !c.contains_face(&f) {
        return Err(ComplexError::NotAFace(f));
    }
    let mut link_faces: Vec<Face> = Vec::new();
    for k in f.len()..c.f_vector().len() {
        for g in c.faces_with_size(k) {
            if f.iter().all(|v| g.binary_search(v).is_ok()) {
                link_faces.push(
                    g.iter()
                        .copied()
                        .filter(|v| f.binary_search(v).is_err())
                        .collect(),
                );
            }
        }
    }
    let mut verts: Vec<u32> = link_faces.iter().flatten().copied().collect();
    verts.sort_unstable();
    verts.dedup();
    let remap: HashMap<u32, u32> = verts
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    let labels = verts
        .iter()
        .map(|&v| c.labels()[v as usize].clone())
        .collect();
    let mut faces: Vec<Vec<Face>> = Vec::new();
    for g in link_faces {
        let h: Face = g.iter().map(|v| remap[v]).collect();
        if faces.len() <= h.len() {
            faces.resize(h.len() + 1, Vec::new());
        }
        faces[h.len()].push(h);
    }
    Ok(SimplicialComplex::assemble(
        format!("lk({})", c.name()),
        labels,
        faces,
        None,
    ))
}

/// The Quillen complex `ΔA_p(S_n)`: the order complex of the nontrivial
/// elementary abelian `p`-subgroups of `S_n` under inclusion, with `S_n`
/// acting by conjugation.
pub fn quillen_complex(
    p: usize,
    n: usize,
    allow_large: bool,
) -> Result<SimplicialComplex, ComplexError> {
    if !is_prime(p) {
        return Err(ComplexError::NotPrime(p));
    }
    if !allow_large && !quillen_within_guard(p, n) {
        return Err(ComplexError::SizeGuard { p, n });
    }
    let groups = elementary_abelian_subgroups(p, n)?;
    Ok(order_complex(format!("QA_{p}(S_{n})"), &subgroup_poset(&groups, n)).sorted_by_label())
}

/// Inclusion poset of the given subgroups.
pub fn subgroup_poset(groups: &[Subgroup], n: usize) -> Poset {
    let sets: Vec<HashSet<&Perm>> = groups.iter().map(|g| g.elements.iter().collect()).collect();
    let mut greater: Vec<Vec<u32>> = vec![Vec::new(); groups.len()];
    for (a, ga) in groups.iter().enumerate() {
        for (b, gb) in groups.iter().enumerate() {
            if ga.rank < gb.rank && ga.elements.iter().all(|x| sets[b].contains(x)) {
                greater[a].push(b as u32);
            }
        }
    }
    Poset {
        labels: groups
            .iter()
            .map(|g| VertexLabel::Subgroup(g.elements.clone()))
            .collect(),
        greater,
        symmetric_degree: Some(n),
    }
}

/// Generators of `S_n`: the transposition `(0 1)` and the `n`-cycle.
pub fn symmetric_generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return vec![Perm::identity(n)];
    }
    vec![
        Perm::from_cycles(n, &[vec![0, 1]]),
        Perm::from_cycles(n, &[(0..n).collect()]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_examples() {
        let c = matching_complex(3, 4).unwrap();
        assert_eq!(c.f_vector(), vec![1, 4]);
        let c = matching_complex(2, 4).unwrap();
        assert_eq!(c.f_vector(), vec![1, 6, 3]);
        let c = matching_complex(3, 7).unwrap();
        assert_eq!(c.f_vector(), vec![1, 35, 70]);
        assert_eq!(c.dim(), 1);
        let c = matching_complex(3, 2).unwrap();
        assert_eq!(c.f_vector(), vec![1]);
        assert_eq!(c.dim(), -1);
        assert!(matching_complex(1, 3).is_err());
    }

    #[test]
    fn inflation_examples() {
        let m = matching_complex(3, 7).unwrap();
        let same = inflation(&m, &vec![1; m.num_vertices()]).unwrap();
        assert_eq!(same.complex.f_vector(), m.f_vector());
        let point = matching_complex(5, 5).unwrap();
        let six = inflation(&point, &[6]).unwrap();
        assert_eq!(six.complex.f_vector(), vec![1, 6]);
        assert_eq!(six.deflation, vec![0; 6]);
        assert!(inflation(&point, &[0]).is_err());
    }

    #[test]
    fn inflation_counts_versions() {
        let m = matching_complex(2, 4).unwrap();
        let inf = inflation(&m, &[2; 6]).unwrap();
        assert_eq!(inf.complex.f_vector(), vec![1, 12, 12]);
        assert!(inf.complex.check_invariants());
    }

    #[test]
    fn pcycle_examples() {
        assert_eq!(pcycle_complex(5, 5).unwrap().f_vector(), vec![1, 6]);
        let c = pcycle_complex(5, 7).unwrap();
        assert_eq!(c.f_vector(), vec![1, 126]);
        assert_eq!(c.dim(), 0);
        assert_eq!(
            pcycle_complex(3, 7).unwrap().f_vector(),
            matching_complex(3, 7).unwrap().f_vector()
        );
        assert!(matches!(
            pcycle_complex(4, 8),
            Err(ComplexError::NotPrime(4))
        ));
    }

    #[test]
    fn cyclic_canonical_forms() {
        assert_eq!(cyclic_subgroups_on(&[0, 1, 2]), vec![vec![0, 1, 2]]);
        assert_eq!(cyclic_subgroups_on(&[0, 1, 2, 3, 4]).len(), 6);
        assert_eq!(canonical_cycle(&[2, 0, 1]), vec![0, 1, 2]);
        assert_eq!(canonical_cycle(&[0, 2, 1]), vec![0, 1, 2]);
    }

    #[test]
    fn quillen_examples() {
        assert_eq!(quillen_complex(3, 3, false).unwrap().f_vector(), vec![1, 1]);
        assert_eq!(quillen_complex(3, 4, false).unwrap().f_vector(), vec![1, 4]);
        let q = quillen_complex(3, 7, false).unwrap();
        let groups = elementary_abelian_subgroups(3, 7).unwrap();
        assert_eq!(groups.iter().filter(|g| g.rank == 1).count(), 175);
        assert_eq!(groups.iter().filter(|g| g.rank == 2).count(), 70);
        assert_eq!(q.f_vector(), vec![1, 245, 280]);
        assert!(matches!(
            quillen_complex(3, 10, false),
            Err(ComplexError::SizeGuard { .. })
        ));
    }

    #[test]
    fn links_and_subdivision() {
        let m = matching_complex(3, 7).unwrap();
        let lk = link(&m, &[0]).unwrap();
        assert_eq!(lk.f_vector(), vec![1, 4]);
        assert_eq!(link(&m, &[]).unwrap().f_vector(), m.f_vector());
        assert!(link(&m, &[0, 1]).is_err());

        let edge = SimplicialComplex::from_facets(
            "edge",
            vec![VertexLabel::Index(0), VertexLabel::Index(1)],
            &[vec![0, 1]],
            None,
        )
        .unwrap();
        let sd = order_complex("sd", &face_poset(&edge));
        assert_eq!(sd.f_vector(), vec![1, 3, 2]);
    }

    #[test]
    fn actions_are_simplicial() {
        for c in [
            matching_complex(3, 6).unwrap(),
            pcycle_complex(5, 6).unwrap(),
            quillen_complex(3, 6, false).unwrap(),
            barycentric_subdivision(&matching_complex(2, 4).unwrap()),
        ] {
            let n = c.symmetric_degree().unwrap();
            for g in symmetric_generators(n) {
                assert!(c.is_action_simplicial(&g), "{}", c.name());
            }
        }
    }

    #[test]
    fn facet_text_round_trip() {
        let m = matching_complex(2, 4).unwrap();
        let text = m.to_facet_text();
        assert!(text.starts_with("1 6\n"));
        let back = SimplicialComplex::from_facet_text("M", &text, Some(4)).unwrap();
        assert_eq!(back.f_vector(), m.f_vector());
        assert_eq!(back.labels(), m.labels());
        let e = SimplicialComplex::empty("e", None);
        let back = SimplicialComplex::from_facet_text("e", &e.to_facet_text(), None).unwrap();
        assert_eq!(back.f_vector(), vec![1]);
        assert!(SimplicialComplex::from_facet_text("x", "0 2\n0 5\n", None).is_err());
        assert!(SimplicialComplex::from_facet_text("x", "3 2\n0 1\n", None).is_err());
    }

    #[test]
    fn sign_of_sort() {
        let mut v = vec![2, 0, 1];
        assert_eq!(sort_with_sign(&mut v), 1);
        let mut v = vec![1, 0];
        assert_eq!(sort_with_sign(&mut v), -1);
    }
}

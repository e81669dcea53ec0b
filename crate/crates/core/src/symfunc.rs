//! The ring of symmetric functions over the rationals, stored in the Schur basis.
//!
//! Every [`SymmetricFunction`] is homogeneous. Conversions to and from the
//! power-sum basis go through the character table of `S_n`
//! (`p_μ = Σ_λ χ^λ(μ) s_λ`), products are computed by expanding one factor in
//! the complete homogeneous basis and applying Pieri's rule, and plethysm is
//! evaluated in the power-sum basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::CharacterTable;
use crate::partition::Partition;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error(
        "plethysm into a degree-0 symmetric function is only defined for constant outer functions"
    )]
    PlethysmIntoConstant,
    #[error("gamma_{r} is undefined on s{partition}: more than {r} parts")]
    GammaLength { partition: Partition, r: usize },
    #[error("partition {0} does not have the declared degree {1}")]
    BadTerm(Partition, usize),
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A homogeneous symmetric function expanded in Schur functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricFunction {
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

/// A homogeneous symmetric function expanded in power sums `p_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSum {
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl PowerSum {
    pub fn zero(degree: usize) -> Self {
        PowerSum {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    pub fn monomial(mu: Partition, c: Rational) -> Self {
        let mut s = Self::zero(mu.size());
        if !c.is_zero() {
            s.terms.insert(mu, c);
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, mu: Partition, c: Rational) {
        assert_eq!(mu.size(), self.degree, "power-sum term of wrong degree");
        if c.is_zero() {
            return;
        }
        let remove = {
            let e = self.terms.entry(mu.clone()).or_insert_with(Rational::zero);
            *e += c;
            e.is_zero()
        };
        if remove {
            self.terms.remove(&mu);
        }
    }

    pub fn mul(&self, other: &PowerSum) -> PowerSum {
        let mut out = PowerSum::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_multiset(parts), ca * cb);
            }
        }
        out
    }

    /// `p_k[self]`: every `p_j` replaced by `p_{jk}`.
    pub fn adams(&self, k: usize) -> PowerSum {
        let mut out = PowerSum::zero(self.degree * k);
        for (mu, c) in &self.terms {
            let parts = mu.parts().iter().map(|x| x * k).collect();
            out.terms.insert(Partition::from_multiset(parts), c.clone());
        }
        out
    }

    pub fn to_schur(&self) -> SymmetricFunction {
        let mut out = SymmetricFunction::zero(self.degree);
        if self.terms.is_empty() {
            return out;
        }
        let table = CharacterTable::get(self.degree);
        for (li, lambda) in table.partitions().iter().enumerate() {
            let mut c = Rational::zero();
            for (mu, cm) in &self.terms {
                let v = table.value_at(li, table.index_of(mu));
                if v != 0 {
                    c += cm * rat(v);
                }
            }
            if !c.is_zero() {
                out.terms.insert(lambda.clone(), c);
            }
        }
        out
    }
}

impl SymmetricFunction {
    pub fn zero(degree: usize) -> Self {
        SymmetricFunction {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `s_∅`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        let mut f = Self::zero(lambda.size());
        f.terms.insert(lambda, Rational::one());
        f
    }

    /// `c · s_∅`.
    pub fn constant(c: Rational) -> Self {
        let mut f = Self::zero(0);
        if !c.is_zero() {
            f.terms.insert(Partition::empty(), c);
        }
        f
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self, SymError> {
        let mut f = Self::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(SymError::BadTerm(lambda, degree));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    /// Sum of `s_λ` with coefficient 1 over the given partitions of `degree`.
    pub fn sum_of_schur(degree: usize, parts: impl IntoIterator<Item = Partition>) -> Self {
        let mut f = Self::zero(degree);
        for lambda in parts {
            assert_eq!(lambda.size(), degree);
            f.add_term(lambda, Rational::one());
        }
        f
    }

    /// `h_n = s_(n)`.
    pub fn from_h(n: usize) -> Self {
        Self::schur(Partition::row(n))
    }

    /// `e_n = s_(1^n)`.
    pub fn from_e(n: usize) -> Self {
        Self::schur(Partition::column(n))
    }

    /// `p_μ` expanded as `Σ_λ χ^λ(μ) s_λ`.
    pub fn from_power_product(mu: &Partition) -> Self {
        PowerSum::monomial(mu.clone(), Rational::one()).to_schur()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    /// Terms in decreasing lexicographic order of the partition.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        assert_eq!(lambda.size(), self.degree, "Schur term of wrong degree");
        if c.is_zero() {
            return;
        }
        let remove = {
            let e = self
                .terms
                .entry(lambda.clone())
                .or_insert_with(Rational::zero);
            *e += c;
            e.is_zero()
        };
        if remove {
            self.terms.remove(&lambda);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        SymmetricFunction {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SymError> {
        if self.is_zero() && self.degree != other.degree {
            return Ok(other.clone());
        }
        if other.is_zero() && self.degree != other.degree {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(SymError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SymError> {
        self.try_add(&other.scale(&rat(-1)))
    }

    /// Expansion in power sums: `s_λ = Σ_μ z_μ⁻¹ χ^λ(μ) p_μ`.
    pub fn to_power_sum(&self) -> PowerSum {
        let mut out = PowerSum::zero(self.degree);
        if self.terms.is_empty() {
            return out;
        }
        let table = CharacterTable::get(self.degree);
        for (mi, mu) in table.partitions().iter().enumerate() {
            let mut c = Rational::zero();
            for (lambda, cl) in &self.terms {
                let v = table.value_at(table.index_of(lambda), mi);
                if v != 0 {
                    c += cl * rat(v);
                }
            }
            if !c.is_zero() {
                let z = Rational::from_integer(BigInt::from(mu.z()));
                out.terms.insert(mu.clone(), c / z);
            }
        }
        out
    }

    /// Expansion in the complete homogeneous basis, keyed by `μ` for `h_μ`.
    ///
    /// Uses unitriangularity: `h_μ = s_μ + Σ_{ν ▷ μ} K_{νμ} s_ν`, so peeling
    /// off the lexicographically smallest remaining term terminates.
    pub fn to_h_basis(&self) -> BTreeMap<Partition, Rational> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((mu, c)) = rest
            .terms
            .iter()
            .next()
            .map(|(k, v)| (k.clone(), v.clone()))
        {
            let h_mu = complete_product(&mu);
            rest = rest.try_sub(&h_mu.scale(&c)).expect("same degree");
            out.insert(mu, c);
        }
        out
    }

    /// `self · h_k` by Pieri's rule (horizontal strips).
    pub fn mul_h(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree + k);
        for (lambda, c) in &self.terms {
            for nu in horizontal_strips(lambda, k) {
                out.add_term(nu, c.clone());
            }
        }
        out
    }

    /// `self · e_k` by the dual Pieri rule (vertical strips).
    pub fn mul_e(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree + k);
        for (lambda, c) in &self.terms {
            for nu in horizontal_strips(&lambda.conjugate(), k) {
                out.add_term(nu.conjugate(), c.clone());
            }
        }
        out
    }

    /// Ring product. The factor with fewer terms is expanded in the `h`
    /// basis and multiplied in by iterated Pieri steps.
    pub fn multiply(&self, other: &Self) -> Self {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero(self.degree + other.degree);
        for (mu, c) in small.to_h_basis() {
            let mut acc = big.clone();
            for &k in mu.parts() {
                acc = acc.mul_h(k);
            }
            out = out.try_add(&acc.scale(&c)).expect("same degree");
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.multiply(self);
        }
        out
    }

    /// Plethysm `self[g]`, evaluated by substituting `p_n[g]` for each `p_n`
    /// in the power-sum expansion of `self`.
    pub fn plethysm(&self, g: &Self) -> Result<Self, SymError> {
        if self.degree == 0 {
            return Ok(self.clone());
        }
        if g.degree == 0 && !g.is_zero() {
            return Err(SymError::PlethysmIntoConstant);
        }
        let f_ps = self.to_power_sum();
        let g_ps = g.to_power_sum();
        let mut adams: BTreeMap<usize, PowerSum> = BTreeMap::new();
        let mut out = PowerSum::zero(self.degree * g.degree);
        for (mu, c) in f_ps.terms() {
            let mut term = PowerSum::one();
            for &k in mu.parts() {
                let a = adams.entry(k).or_insert_with(|| g_ps.adams(k));
                term = term.mul(a);
            }
            for (nu, d) in term.terms {
                out.add_term(nu, d * c);
            }
        }
        Ok(out.to_schur())
    }

    /// `f|_r`: the Schur terms with exactly `r` parts.
    pub fn restrict_length(&self, r: usize) -> Self {
        SymmetricFunction {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() == r)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// `γ_r`: the linear map `s_λ ↦ s_{λ^{(r)}}`.
    pub fn gamma(&self, r: usize) -> Result<Self, SymError> {
        let mut out = Self::zero(self.degree + r);
        for (lambda, c) in &self.terms {
            let nu = lambda
                .add_first_rows(r)
                .ok_or_else(|| SymError::GammaLength {
                    partition: lambda.clone(),
                    r,
                })?;
            out.add_term(nu, c.clone());
        }
        Ok(out)
    }

    pub fn is_schur_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Hall inner product; the Schur functions are orthonormal.
    pub fn hall_inner_product(&self, other: &Self) -> Rational {
        if self.degree != other.degree {
            return Rational::zero();
        }
        self.terms
            .iter()
            .filter_map(|(k, v)| other.terms.get(k).map(|w| v * w))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Dimension of the (virtual) representation: `Σ c_λ f^λ`.
    pub fn dimension(&self) -> Rational {
        self.terms
            .iter()
            .map(|(k, v)| v * Rational::from_integer(BigInt::from(k.hook_dimension())))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Schur multiplicities as integers, if every coefficient is a nonnegative integer.
    pub fn as_multiplicities(&self) -> Option<BTreeMap<Partition, u64>> {
        self.terms
            .iter()
            .map(|(k, v)| {
                if v.is_integer() && !v.is_negative() {
                    v.to_integer().try_into().ok().map(|m: u64| (k.clone(), m))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (lambda, c)) in self.iter_desc().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&format_rational(&a));
                s.push('*');
            }
            let parts: Vec<String> = lambda.parts().iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("s[{}]", parts.join(",")));
        }
        s
    }

    pub fn to_json_value(&self) -> SymFnJson {
        SymFnJson {
            degree: self.degree,
            basis: "schur".to_string(),
            terms: self
                .iter_desc()
                .map(|(k, v)| TermJson {
                    partition: k.clone(),
                    coeff: format_rational(v),
                })
                .collect(),
        }
    }

    pub fn from_json_value(j: &SymFnJson) -> Result<Self, SymError> {
        if j.basis != "schur" {
            return Err(SymError::BadCoefficient(format!(
                "unsupported basis {}",
                j.basis
            )));
        }
        let terms: Result<Vec<_>, _> = j
            .terms
            .iter()
            .map(|t| parse_rational(&t.coeff).map(|c| (t.partition.clone(), c)))
            .collect();
        Self::from_terms(j.degree, terms?)
    }
}

impl fmt::Display for SymmetricFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the text form, e.g. `"s[5,1,1] - 2*s[3,3,1] + 1/2*s[7]"`. The
/// string `"0"` is the zero function of degree 0.
impl std::str::FromStr for SymmetricFunction {
    type Err = SymError;

    fn from_str(text: &str) -> Result<Self, SymError> {
        let t = text.trim();
        if t == "0" {
            return Ok(SymmetricFunction::zero(0));
        }
        let bad = || SymError::BadCoefficient(text.to_string());
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for ch in t.chars() {
            match ch {
                '[' => depth += 1,
                ']' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') {
                if !cur.trim().is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if !cur.is_empty() || !pieces.is_empty() {
                    return Err(bad());
                }
                neg = ch == '-';
                cur.clear();
                continue;
            }
            cur.push(ch);
        }
        if cur.trim().is_empty() {
            return Err(bad());
        }
        pieces.push((neg, cur));
        let mut out: Option<SymmetricFunction> = None;
        for (neg, piece) in pieces {
            let piece = piece.trim();
            let (coeff, basis) = match piece.split_once('*') {
                Some((c, b)) => (parse_rational(c)?, b.trim()),
                None => (Rational::one(), piece),
            };
            if !basis.starts_with("s[") {
                return Err(bad());
            }
            let lambda: Partition = basis.parse().map_err(|_| bad())?;
            let c = if neg { -coeff } else { coeff };
            let f = out.get_or_insert_with(|| SymmetricFunction::zero(lambda.size()));
            if lambda.size() != f.degree {
                return Err(SymError::BadTerm(lambda, f.degree));
            }
            f.add_term(lambda, c);
        }
        out.ok_or_else(bad)
    }
}

impl Serialize for SymmetricFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymmetricFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = SymFnJson::deserialize(d)?;
        Self::from_json_value(&j).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFnJson {
    pub degree: usize,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coeff: String,
}

/// `"num"` or `"num/den"`.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, SymError> {
    let bad = || SymError::BadCoefficient(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `h_μ = h_{μ_1} h_{μ_2} ⋯` in the Schur basis.
pub fn complete_product(mu: &Partition) -> SymmetricFunction {
    let mut acc = SymmetricFunction::one();
    for &k in mu.parts() {
        acc = acc.mul_h(k);
    }
    acc
}

/// All `ν ⊇ λ` with `ν/λ` a horizontal strip of size `k`.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let mut add = vec![0usize; rows];
    let mut out = Vec::new();
    strips_rec(lambda, 0, k, &mut add, &mut out);
    out
}

fn strips_rec(
    lambda: &Partition,
    row: usize,
    rest: usize,
    add: &mut [usize],
    out: &mut Vec<Partition>,
) {
    if row == add.len() {
        if rest == 0 {
            let parts = (0..add.len()).map(|i| lambda.part(i) + add[i]).collect();
            out.push(Partition::from_multiset(parts));
        }
        return;
    }
    // Row `row` may grow up to the length of the row above it in λ.
    let cap = if row == 0 {
        rest
    } else {
        (lambda.part(row - 1) - lambda.part(row)).min(rest)
    };
    for a in 0..=cap {
        add[row] = a;
        strips_rec(lambda, row + 1, rest - a, add, out);
    }
    add[row] = 0;
}

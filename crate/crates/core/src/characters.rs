//! Characters of symmetric groups and the Frobenius characteristic.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{all_partitions, maj_count, Partition};
use crate::perm::{generate_group, Perm};
use crate::symfunc::{format_rational, parse_rational, rat, Rational, SymError, SymmetricFunction};

/// Version stamp for on-disk character tables; bump when the format changes.
pub const TABLE_CACHE_VERSION: u32 = 1;

/// Largest prime accepted by [`normalizer_character`].
pub const MAX_NORMALIZER_PRIME: usize = 11;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("p = {0} exceeds the brute-force bound {MAX_NORMALIZER_PRIME}")]
    TooLarge(usize),
    #[error("class function is missing cycle type {0}")]
    MissingClass(Partition),
    #[error(transparent)]
    Sym(#[from] SymError),
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The character table of `S_n`, rows and columns in decreasing
/// lexicographic order of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    /// `values[λ][μ] = χ^λ(μ)`.
    values: Vec<Vec<i64>>,
    #[serde(skip)]
    index: HashMap<Partition, usize>,
}

static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

impl CharacterTable {
    /// Process-wide memoized table for `S_n`.
    pub fn get(n: usize) -> Arc<CharacterTable> {
        let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return t.clone();
        }
        let t = Arc::new(Self::compute(n));
        cache.lock().unwrap().entry(n).or_insert(t).clone()
    }

    /// Loads the table from `dir` if a valid file with the current version
    /// stamp exists, otherwise computes it and writes it back. Unreadable or
    /// corrupt files are rebuilt.
    pub fn load_or_compute(n: usize, dir: &Path) -> std::io::Result<Arc<CharacterTable>> {
        let path = dir.join(format!("chartable-n{n}-v{TABLE_CACHE_VERSION}.json"));
        if let Ok(bytes) = fs::read(&path) {
            if let Ok(mut t) = serde_json::from_slice::<CharacterTable>(&bytes) {
                t.rebuild_index();
                if t.n == n && t.is_consistent() {
                    let t = Arc::new(t);
                    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
                    cache.lock().unwrap().entry(n).or_insert_with(|| t.clone());
                    return Ok(t);
                }
            }
        }
        let t = Self::get(n);
        fs::create_dir_all(dir)?;
        fs::write(&path, serde_json::to_vec(&*t)?)?;
        Ok(t)
    }

    fn is_consistent(&self) -> bool {
        let k = self.partitions.len();
        self.partitions == all_partitions(self.n)
            && self.values.len() == k
            && self.values.iter().all(|r| r.len() == k)
    }

    fn rebuild_index(&mut self) {
        self.index = self
            .partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
    }

    pub fn compute(n: usize) -> CharacterTable {
        let partitions = all_partitions(n);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| mn_value(l.parts(), m.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let mut t = CharacterTable {
            n,
            partitions,
            values,
            index: HashMap::new(),
        };
        t.rebuild_index();
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn value_at(&self, lambda_idx: usize, mu_idx: usize) -> i64 {
        self.values[lambda_idx][mu_idx]
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index_of(lambda)][self.index_of(mu)]
    }
}

/// Murnaghan–Nakayama recursion on beta-sets: removing a rim hook of length
/// `k` moves one bead from `b` to `b - k`, with sign `(-1)^{beads jumped}`.
fn mn_value(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &x)| x + len - 1 - i)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let mut nl: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .collect();
        while nl.last() == Some(&0) {
            nl.pop();
        }
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&nl, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^λ(μ)`.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64, CharError> {
    if lambda.size() != mu.size() {
        return Err(CharError::DegreeMismatch(lambda.size(), mu.size()));
    }
    Ok(CharacterTable::get(lambda.size()).value(lambda, mu))
}

/// A rational-valued class function on `S_n`, indexed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = all_partitions(n).into_iter().map(|mu| {
            let v = f(&mu);
            (mu, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn from_values(n: usize, values: BTreeMap<Partition, Rational>) -> Result<Self, CharError> {
        for mu in all_partitions(n) {
            if !values.contains_key(&mu) {
                return Err(CharError::MissingClass(mu));
            }
        }
        if let Some(bad) = values.keys().find(|k| k.size() != n) {
            return Err(CharError::DegreeMismatch(bad.size(), n));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |mu| {
            let odd = mu.parts().iter().filter(|&&x| x % 2 == 0).count() % 2 == 1;
            rat(if odd { -1 } else { 1 })
        })
    }

    /// Character of the regular representation: `n!` at the identity, zero elsewhere.
    pub fn regular(n: usize) -> Self {
        let fact: u128 = (1..=n as u128).product();
        Self::from_fn(n, |mu| {
            if mu.parts().iter().all(|&x| x == 1) {
                Rational::from_integer(BigInt::from(fact))
            } else {
                Rational::zero()
            }
        })
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let table = CharacterTable::get(lambda.size());
        Self::from_fn(lambda.size(), |mu| rat(table.value(lambda, mu)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }

    pub fn value(&self, mu: &Partition) -> Rational {
        self.values.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree_value(&self) -> Rational {
        self.value(&Partition::column(self.n))
    }

    /// `⟨φ, ψ⟩ = Σ_μ z_μ⁻¹ φ(μ) ψ(μ)`; characters of `S_n` are real.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Rational, CharError> {
        if self.n != other.n {
            return Err(CharError::DegreeMismatch(self.n, other.n));
        }
        let mut acc = Rational::zero();
        for (mu, v) in &self.values {
            let w = other.value(mu);
            if v.is_zero() || w.is_zero() {
                continue;
            }
            acc += v * w / Rational::from_integer(BigInt::from(mu.z()));
        }
        Ok(acc)
    }

    /// `ch(φ) = Σ_μ z_μ⁻¹ φ(μ) p_μ`, returned in the Schur basis.
    pub fn frobenius_ch(&self) -> SymmetricFunction {
        let table = CharacterTable::get(self.n);
        let mut terms = Vec::new();
        for (li, lambda) in table.partitions().iter().enumerate() {
            let mut c = Rational::zero();
            for (mu, v) in &self.values {
                let x = table.value_at(li, table.index_of(mu));
                if x != 0 && !v.is_zero() {
                    c += v * rat(x) / Rational::from_integer(BigInt::from(mu.z()));
                }
            }
            terms.push((lambda.clone(), c));
        }
        SymmetricFunction::from_terms(self.n, terms).expect("degrees agree")
    }

    /// Inverse of [`ClassFunction::frobenius_ch`]: `φ(μ) = Σ_λ c_λ χ^λ(μ)`.
    pub fn from_frobenius(f: &SymmetricFunction) -> ClassFunction {
        let n = f.degree();
        let table = CharacterTable::get(n);
        Self::from_fn(n, |mu| {
            let mi = table.index_of(mu);
            f.terms()
                .iter()
                .map(|(lambda, c)| c * rat(table.value_at(table.index_of(lambda), mi)))
                .fold(Rational::zero(), |a, b| a + b)
        })
    }

    pub fn try_add(&self, other: &ClassFunction) -> Result<ClassFunction, CharError> {
        if self.n != other.n {
            return Err(CharError::DegreeMismatch(self.n, other.n));
        }
        Ok(Self::from_fn(self.n, |mu| self.value(mu) + other.value(mu)))
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        Self::from_fn(self.n, |mu| self.value(mu) * c)
    }

    pub fn to_json_value(&self) -> ClassFunctionJson {
        ClassFunctionJson {
            n: self.n,
            values: self
                .values
                .iter()
                .rev()
                .map(|(k, v)| ClassValueJson {
                    cycle_type: k.clone(),
                    value: format_rational(v),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub n: usize,
    pub values: Vec<ClassValueJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValueJson {
    pub cycle_type: Partition,
    pub value: String,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ClassFunctionJson::deserialize(d)?;
        let mut values = BTreeMap::new();
        for v in &j.values {
            let r = parse_rational(&v.value).map_err(serde::de::Error::custom)?;
            values.insert(v.cycle_type.clone(), r);
        }
        ClassFunction::from_values(j.n, values).map_err(serde::de::Error::custom)
    }
}

/// `ψ_{m,n}`: the character induced from the cyclic group of an `n`-cycle `w`
/// by the linear character `w ↦ e^{2πim/n}`, assembled from major-index
/// counts: `ψ_{m,n} = Σ_{λ ⊢ n} #{T ∈ SYT(λ) : maj(T) ≡ m (mod n)} χ^λ`.
pub fn psi_character(m: i64, n: usize) -> ClassFunction {
    assert!(n >= 1, "psi_character needs n >= 1");
    let f = psi_frobenius(m, n);
    ClassFunction::from_frobenius(&f)
}

/// Frobenius characteristic of `ψ_{m,n}`.
pub fn psi_frobenius(m: i64, n: usize) -> SymmetricFunction {
    let terms = all_partitions(n).into_iter().map(|lambda| {
        let c = maj_count(m, n, &lambda);
        (lambda, rat(c as i64))
    });
    SymmetricFunction::from_terms(n, terms).expect("degrees agree")
}

/// The normalizer `N_p` of a Sylow `p`-subgroup of `S_p`, realized as the
/// affine group `x ↦ ax + b` on `Z/p`: generated by the `p`-cycle
/// `x ↦ x + 1` and the `(p-1)`-cycle `x ↦ gx` for a primitive root `g`.
pub fn sylow_normalizer(p: usize) -> Result<Vec<Perm>, CharError> {
    if !is_prime(p) {
        return Err(CharError::NotPrime(p));
    }
    if p > MAX_NORMALIZER_PRIME {
        return Err(CharError::TooLarge(p));
    }
    let shift = Perm((0..p).map(|x| ((x + 1) % p) as u8).collect());
    let g = primitive_root(p);
    let mult = Perm((0..p).map(|x| ((x * g) % p) as u8).collect());
    let group = generate_group(&[shift, mult]);
    debug_assert_eq!(group.len(), p * (p - 1));
    Ok(group)
}

fn primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .expect("every prime has a primitive root")
}

/// The permutation character `1↑_{N_p}^{S_p}`, evaluated class by class with
/// `χ↑(g) = |C(g)| · |g^{S_p} ∩ N_p| / |N_p|` on a concrete `N_p`.
pub fn normalizer_character(p: usize) -> Result<ClassFunction, CharError> {
    let group = sylow_normalizer(p)?;
    let order = group.len();
    let mut counts: HashMap<Partition, usize> = HashMap::new();
    for g in &group {
        *counts.entry(g.cycle_type()).or_default() += 1;
    }
    Ok(ClassFunction::from_fn(p, |mu| {
        let c = counts.get(mu).copied().unwrap_or(0);
        Rational::new(BigInt::from(mu.z()) * BigInt::from(c), BigInt::from(order))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn character_values() {
        for mu in all_partitions(5) {
            assert_eq!(irreducible_character(&p(&[5]), &mu).unwrap(), 1);
        }
        assert_eq!(
            irreducible_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(),
            -1
        );
        assert_eq!(irreducible_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(irreducible_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn degrees_match_hooks() {
        for lambda in all_partitions(8) {
            let d = irreducible_character(&lambda, &Partition::column(8)).unwrap();
            assert_eq!(d as u128, lambda.hook_dimension());
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=7 {
            let t = CharacterTable::get(n);
            let ps = t.partitions();
            for (a, mu) in ps.iter().enumerate() {
                for (b, nu) in ps.iter().enumerate() {
                    let s: i64 = (0..ps.len())
                        .map(|l| t.value_at(l, a) * t.value_at(l, b))
                        .sum();
                    let want = if mu == nu { mu.z() as i64 } else { 0 };
                    assert_eq!(s, want, "n={n} mu={mu} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn frobenius_of_basic_characters() {
        assert_eq!(
            ClassFunction::trivial(4).frobenius_ch(),
            SymmetricFunction::from_h(4)
        );
        assert_eq!(
            ClassFunction::sign(4).frobenius_ch(),
            SymmetricFunction::from_e(4)
        );
        let reg = ClassFunction::regular(2).frobenius_ch();
        assert_eq!(reg.to_text(), "s[2] + s[1,1]");
    }

    #[test]
    fn frobenius_round_trip() {
        let f = ClassFunction::regular(4).frobenius_ch();
        assert_eq!(ClassFunction::from_frobenius(&f), ClassFunction::regular(4));
    }

    #[test]
    fn inner_products() {
        let chi = ClassFunction::irreducible(&p(&[2, 1]));
        assert_eq!(chi.inner_product(&chi).unwrap(), rat(1));
        let triv = ClassFunction::trivial(3);
        assert_eq!(triv.inner_product(&ClassFunction::sign(3)).unwrap(), rat(0));
        assert_eq!(
            ClassFunction::regular(3).inner_product(&chi).unwrap(),
            rat(2)
        );
        assert!(triv.inner_product(&ClassFunction::trivial(2)).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_character(1, 3), ClassFunction::irreducible(&p(&[2, 1])));
        assert_eq!(psi_character(0, 1), ClassFunction::trivial(1));
    }

    #[test]
    fn normalizer_small_primes() {
        assert_eq!(normalizer_character(2).unwrap(), ClassFunction::trivial(2));
        assert_eq!(normalizer_character(3).unwrap(), ClassFunction::trivial(3));
        let five = normalizer_character(5).unwrap();
        assert_eq!(five.degree_value(), rat(6));
        assert!(matches!(
            normalizer_character(4),
            Err(CharError::NotPrime(4))
        ));
        assert!(matches!(
            normalizer_character(13),
            Err(CharError::TooLarge(13))
        ));
    }

    #[test]
    fn normalizer_orders() {
        for q in [2, 3, 5, 7, 11] {
            assert_eq!(sylow_normalizer(q).unwrap().len(), q * (q - 1));
        }
    }

    #[test]
    fn class_function_json() {
        let s = serde_json::to_string(&ClassFunction::sign(2)).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"values":[{"cycle_type":[2],"value":"-1"},{"cycle_type":[1,1],"value":"1"}]}"#
        );
        let back: ClassFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ClassFunction::sign(2));
        assert!(serde_json::from_str::<ClassFunction>(r#"{"n":2,"values":[]}"#).is_err());
    }

    #[test]
    fn disk_cache_rebuilds_corrupt_file() {
        let dir = tempfile::tempdir().unwrap();
        let t = CharacterTable::load_or_compute(5, dir.path()).unwrap();
        let path = dir
            .path()
            .join(format!("chartable-n5-v{TABLE_CACHE_VERSION}.json"));
        assert!(path.exists());
        fs::write(&path, b"{not json").unwrap();
        let again = CharacterTable::load_or_compute(5, dir.path()).unwrap();
        assert_eq!(*t, *again);
        let reread: CharacterTable = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        assert_eq!(reread.values, t.values);
    }
}

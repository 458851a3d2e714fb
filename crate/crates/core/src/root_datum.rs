//! Finite root data of simply connected semisimple type.
//!
//! Weights are stored in the basis of fundamental weights, so the pairing
//! `<λ, α_i^∨>` is simply `λ[i]` and the simple root `α_j` is column `j` of
//! the Cartan matrix. The Weyl group is generated constructively from the
//! simple reflections; each element carries its ShortLex-minimal reduced word.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Upper bound on generated roots and group elements before giving up.
pub const GENERATION_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDatumError {
    #[error("malformed Cartan matrix: {0}")]
    MalformedCartan(String),
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("generator s{} out of range for rank {rank}", .index + 1)]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("generator labels start at 1")]
    ZeroLabel,
}

impl RootDatumError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::MalformedCartan(_) => "root_datum::MalformedCartan",
            Self::NotFiniteType(_) => "root_datum::NotFiniteType",
            Self::UnknownType(_) => "root_datum::UnknownType",
            Self::IndexOutOfRange { .. } => "root_datum::IndexOutOfRange",
            Self::RankMismatch { .. } => "root_datum::RankMismatch",
            Self::NotReduced(_) => "root_datum::NotReduced",
            Self::ZeroLabel => "root_datum::ZeroLabel",
        }
    }
}

type Result<T> = std::result::Result<T, RootDatumError>;

/// An integral weight in fundamental-weight coordinates.
///
/// Ordering is lexicographic on the coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    /// `ρ`, the sum of the fundamental weights.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Generalized Cartan matrix with `entries[i][j] = <α_j, α_i^∨>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    /// Validates the shape and sign pattern. Finiteness is checked later,
    /// during root generation.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(RootDatumError::MalformedCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(RootDatumError::MalformedCartan(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(RootDatumError::MalformedCartan(format!(
                        "diagonal entry ({0},{0}) is {a}, expected 2",
                        i + 1
                    )));
                }
                if i != j && a > 0 {
                    return Err(RootDatumError::MalformedCartan(format!(
                        "off-diagonal entry ({},{}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j && (a == 0) != (entries[j][i] == 0) {
                    return Err(RootDatumError::MalformedCartan(format!(
                        "entries ({},{}) and ({},{}) must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(CartanMatrix(entries))
    }

    /// Cartan matrix for a type label such as `A2`, `B3`, `G2` or a product
    /// like `A1xA1`, in Bourbaki numbering.
    pub fn from_type(label: &str) -> Result<Self> {
        let parts: Vec<&str> = label.split(['x', 'X', '*']).map(str::trim).collect();
        let blocks = parts
            .iter()
            .map(|p| simple_type(p).ok_or_else(|| RootDatumError::UnknownType(label.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut entries = vec![vec![0; n]; n];
        let mut offset = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    entries[offset + i][offset + j] = a;
                }
            }
            offset += b.len();
        }
        CartanMatrix::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }
}

fn simple_type(label: &str) -> Option<Vec<Vec<i64>>> {
    let mut chars = label.chars();
    let family = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    let mut c = vec![vec![0i64; n]; n];
    let chain = |c: &mut Vec<Vec<i64>>, len: usize| {
        for i in 0..len {
            c[i][i] = 2;
            if i + 1 < len {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
    };
    match (family, n) {
        ('A', n) if n >= 1 => chain(&mut c, n),
        ('B', n) if n >= 2 => {
            chain(&mut c, n);
            c[n - 1][n - 2] = -2;
        }
        ('C', n) if n >= 2 => {
            chain(&mut c, n);
            c[n - 2][n - 1] = -2;
        }
        ('D', n) if n >= 3 => {
            chain(&mut c, n - 1);
            c[n - 1][n - 1] = 2;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
        }
        ('E', n) if (6..=8).contains(&n) => {
            // 1-3-4-5-...-n with 2 attached to 4
            for i in 0..n {
                c[i][i] = 2;
            }
            let mut link = |a: usize, b: usize| {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for k in 4..n {
                link(k, k + 1);
            }
        }
        ('F', 4) => {
            chain(&mut c, 4);
            c[2][1] = -2;
        }
        ('G', 2) => {
            chain(&mut c, 2);
            c[0][1] = -3;
        }
        _ => return None,
    }
    Some(c)
}

/// Input description of a root datum: a type label or an explicit Cartan
/// matrix. JSON form is `{"type": "A2"}` or `{"cartan": [[2,-1],[-1,2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumSpec {
    Type {
        #[serde(rename = "type")]
        label: String,
    },
    Cartan {
        cartan: Vec<Vec<i64>>,
    },
}

impl DatumSpec {
    pub fn build(&self) -> Result<RootDatum> {
        match self {
            DatumSpec::Type { label } => RootDatum::from_type(label),
            DatumSpec::Cartan { cartan } => RootDatum::new(CartanMatrix::new(cartan.clone())?),
        }
    }
}

/// A positive root together with its expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Coefficients in the basis of simple roots.
    pub simple_coeffs: Vec<i64>,
    /// Coefficients of the coroot in the basis of simple coroots.
    pub coroot_coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }

    /// `<λ, α^∨>`.
    pub fn pair_coroot(&self, lambda: &Weight) -> i64 {
        self.coroot_coeffs
            .iter()
            .zip(lambda.coords())
            .map(|(d, l)| d * l)
            .sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
    positive_set: HashSet<Weight>,
}

impl RootDatum {
    pub fn from_type(label: &str) -> Result<Self> {
        Self::new(CartanMatrix::from_type(label)?)
    }

    pub fn new(cartan: CartanMatrix) -> Result<Self> {
        let positive_roots = generate_positive_roots(&cartan)?;
        let positive_set = positive_roots.iter().map(|r| r.weight.clone()).collect();
        Ok(RootDatum {
            cartan,
            positive_roots,
            positive_set,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Positive roots; the first `rank` entries are the simple roots.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.positive_roots[i].weight
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(w)
    }

    pub fn is_negative_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(&w.neg())
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(RootDatumError::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(RootDatumError::RankMismatch {
                expected: self.rank(),
                found: w.rank(),
            })
        }
    }

    /// `s_i(λ) = λ - <λ, α_i^∨> α_i`.
    pub fn simple_reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        Ok(self.reflect_unchecked(i, lambda))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, lambda: &Weight) -> Weight {
        let n = lambda.0[i];
        if n == 0 {
            return lambda.clone();
        }
        Weight(
            lambda
                .0
                .iter()
                .enumerate()
                .map(|(r, &l)| l - n * self.cartan.0[r][i])
                .collect(),
        )
    }

    /// Integer matrix of `s_i` acting on fundamental-weight coordinates.
    fn reflection_matrix(&self, i: usize) -> Vec<i64> {
        let r = self.rank();
        let mut m = identity(r);
        for row in 0..r {
            m[row * r + i] -= self.cartan.0[row][i];
        }
        m
    }
}

fn identity(r: usize) -> Vec<i64> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += aik * b[k * r + j];
            }
        }
    }
    out
}

fn generate_positive_roots(cartan: &CartanMatrix) -> Result<Vec<Root>> {
    let r = cartan.rank();
    let c = &cartan.0;
    let overflow = || RootDatumError::NotFiniteType("root coefficients overflow".into());

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut roots: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back((e.clone(), e));
    }
    while let Some((coeffs, co)) = queue.pop_front() {
        for j in 0..r {
            let is_simple_j = coeffs.iter().enumerate().all(|(k, &v)| v == (k == j) as i64);
            if is_simple_j {
                continue;
            }
            // <β, α_j^∨> and <α_j, β^∨>
            let mut n: i64 = 0;
            let mut m: i64 = 0;
            for k in 0..r {
                n = n
                    .checked_add(coeffs[k].checked_mul(c[j][k]).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
                m = m
                    .checked_add(co[k].checked_mul(c[k][j]).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
            if n == 0 {
                continue;
            }
            let mut nc = coeffs.clone();
            nc[j] = nc[j].checked_sub(n).ok_or_else(overflow)?;
            if nc.iter().any(|&v| v < 0) {
                return Err(RootDatumError::NotFiniteType(
                    "reflection of a positive root left the positive cone".into(),
                ));
            }
            if seen.insert(nc.clone()) {
                let mut nco = co.clone();
                nco[j] = nco[j].checked_sub(m).ok_or_else(overflow)?;
                if seen.len() > GENERATION_LIMIT {
                    return Err(RootDatumError::NotFiniteType(format!(
                        "more than {GENERATION_LIMIT} positive roots"
                    )));
                }
                queue.push_back((nc, nco));
            }
        }
        roots.push((coeffs, co));
    }

    let mut out: Vec<Root> = roots
        .into_iter()
        .map(|(coeffs, co)| {
            let weight = (0..r)
                .map(|i| (0..r).map(|k| c[i][k] * coeffs[k]).sum())
                .collect();
            Root {
                weight: Weight(weight),
                simple_coeffs: coeffs,
                coroot_coeffs: co,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.simple_coeffs.cmp(&a.simple_coeffs))
    });
    Ok(out)
}

/// An element of the Weyl group with its canonical reduced word.
///
/// Equality and hashing use the action matrix only.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Vec<i64>,
    rank: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    /// Canonical (ShortLex-minimal) reduced word, 0-based generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Row-major action matrix on fundamental-weight coordinates.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.rank() != self.rank {
            return Err(RootDatumError::RankMismatch {
                expected: self.rank,
                found: lambda.rank(),
            });
        }
        Ok(self.act_unchecked(lambda))
    }

    pub(crate) fn act_unchecked(&self, lambda: &Weight) -> Weight {
        let r = self.rank;
        Weight(
            (0..r)
                .map(|i| (0..r).map(|j| self.matrix[i * r + j] * lambda.0[j]).sum())
                .collect(),
        )
    }

    /// Dot action `w·λ = w(λ + ρ) - ρ`.
    pub fn dot_act(&self, lambda: &Weight) -> Result<Weight> {
        let rho = Weight::rho(self.rank);
        Ok(self.act(&lambda.add(&rho))?.sub(&rho))
    }

    /// The word rendered 1-based and comma separated, `e` for the identity.
    pub fn label(&self) -> String {
        word_label(&self.word)
    }
}

pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// The full Weyl group of a root datum, enumerated in ShortLex order of the
/// canonical reduced words.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    datum: RootDatum,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    simple: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        let r = datum.rank();
        let simple: Vec<Vec<i64>> = (0..r).map(|i| datum.reflection_matrix(i)).collect();
        let id = WeylElement {
            word: vec![],
            matrix: identity(r),
            rank: r,
        };
        let mut index = HashMap::new();
        index.insert(id.matrix.clone(), 0);
        let mut elements = vec![id];
        // BFS by length. Parents are visited in ShortLex order and extended by
        // generators in increasing order, so the first word reaching an
        // element is its ShortLex-minimal reduced word.
        let mut layer_start = 0;
        while layer_start < elements.len() {
            let layer_end = elements.len();
            for p in layer_start..layer_end {
                for (i, s) in simple.iter().enumerate() {
                    let m = mat_mul(&elements[p].matrix, s, r);
                    if index.contains_key(&m) {
                        continue;
                    }
                    if elements.len() >= GENERATION_LIMIT {
                        return Err(RootDatumError::NotFiniteType(format!(
                            "Weyl group has more than {GENERATION_LIMIT} elements"
                        )));
                    }
                    let mut word = elements[p].word.clone();
                    word.push(i);
                    index.insert(m.clone(), elements.len());
                    elements.push(WeylElement {
                        word,
                        matrix: m,
                        rank: r,
                    });
                }
            }
            layer_start = layer_end;
        }
        Ok(WeylGroup {
            datum: datum.clone(),
            elements,
            index,
            simple,
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements in ShortLex order; the identity comes first.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The longest element `w₀`.
    pub fn longest(&self) -> &WeylElement {
        self.elements
            .iter()
            .max_by_key(|w| w.length())
            .expect("group is non-empty")
    }

    /// Position of `w` in [`Self::elements`].
    pub fn position(&self, w: &WeylElement) -> usize {
        self.index[&w.matrix]
    }

    pub fn simple_reflection(&self, i: usize) -> Result<&WeylElement> {
        self.datum.check_index(i)?;
        Ok(&self.elements[self.index[&self.simple[i]]])
    }

    /// The element `s_{a_1} ⋯ s_{a_k}` for an arbitrary (not necessarily
    /// reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let r = self.rank();
        let mut m = identity(r);
        for &i in word {
            self.datum.check_index(i)?;
            m = mat_mul(&m, &self.simple[i], r);
        }
        Ok(self.elements[self.index[&m]].clone())
    }

    pub fn mul(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let m = mat_mul(&u.matrix, &v.matrix, self.rank());
        self.elements[self.index[&m]].clone()
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.from_word(&rev).expect("indices already validated")
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i)` is a negative root.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        let image = w.act_unchecked(self.datum.simple_root(i));
        self.datum.is_negative_root(&image)
    }

    /// `Φ⁺ ∩ w(Φ⁻)`, the torus characters of the Bruhat cell of `w`.
    pub fn cell_characters(&self, w: &WeylElement) -> Vec<Weight> {
        let winv = self.inverse(w);
        self.datum
            .positive_roots()
            .iter()
            .filter(|beta| {
                let image = winv.act_unchecked(&beta.weight);
                self.datum.is_negative_root(&image)
            })
            .map(|beta| beta.weight.clone())
            .collect()
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        let mut memo: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        let mut words = self.reduced_words_rec(self.position(w), &mut memo);
        words.sort();
        words
    }

    fn reduced_words_rec(
        &self,
        pos: usize,
        memo: &mut HashMap<usize, Vec<Vec<usize>>>,
    ) -> Vec<Vec<usize>> {
        if let Some(ws) = memo.get(&pos) {
            return ws.clone();
        }
        let w = &self.elements[pos];
        let out = if w.is_identity() {
            vec![vec![]]
        } else {
            let mut out = Vec::new();
            for i in 0..self.rank() {
                if self.is_right_descent(w, i) {
                    let ws = self.mul(w, &self.elements[self.index[&self.simple[i]]]);
                    for mut prefix in self.reduced_words_rec(self.position(&ws), memo) {
                        prefix.push(i);
                        out.push(prefix);
                    }
                }
            }
            out
        };
        memo.insert(pos, out.clone());
        out
    }

    /// Checks that `word` is a reduced expression and returns its element.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<WeylElement> {
        let w = self.from_word(word)?;
        if w.length() != word.len() {
            return Err(RootDatumError::NotReduced(word.to_vec()));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn a2_cartan_and_counts() {
        let d = RootDatum::from_type("A2").unwrap();
        assert_eq!(d.rank(), 2);
        assert_eq!(d.cartan().rows(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.positive_roots().len(), 3);
        assert_eq!(WeylGroup::new(&d).unwrap().order(), 6);
    }

    #[test]
    fn simple_roots_come_first() {
        for t in ["A3", "B3", "G2", "D4", "F4"] {
            let d = RootDatum::from_type(t).unwrap();
            for i in 0..d.rank() {
                let mut e = vec![0; d.rank()];
                e[i] = 1;
                assert_eq!(d.positive_roots()[i].simple_coeffs, e, "{t}");
            }
        }
    }

    #[test]
    fn classical_counts() {
        for (t, roots, order) in [
            ("A1", 1, 2),
            ("B2", 4, 8),
            ("C3", 9, 48),
            ("G2", 6, 12),
            ("A1xA1", 2, 4),
            ("D4", 12, 192),
            ("F4", 24, 1152),
        ] {
            let d = RootDatum::from_type(t).unwrap();
            assert_eq!(d.positive_roots().len(), roots, "{t}");
            let g = WeylGroup::new(&d).unwrap();
            assert_eq!(g.order(), order, "{t}");
            assert_eq!(g.longest().length(), roots, "{t}");
        }
    }

    #[test]
    fn malformed_cartan_rejected() {
        let e = CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).unwrap_err();
        assert_eq!(e.code(), "root_datum::MalformedCartan");
        let e = CartanMatrix::new(vec![vec![3, -1], vec![-1, 2]]).unwrap_err();
        assert_eq!(e.code(), "root_datum::MalformedCartan");
        let e = CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).unwrap_err();
        assert_eq!(e.code(), "root_datum::MalformedCartan");
    }

    #[test]
    fn infinite_types_rejected() {
        // affine A1 and a hyperbolic rank-2 matrix
        for m in [vec![vec![2, -2], vec![-2, 2]], vec![vec![2, -3], vec![-3, 2]]] {
            let e = RootDatum::new(CartanMatrix::new(m).unwrap()).unwrap_err();
            assert_eq!(e.code(), "root_datum::NotFiniteType");
        }
    }

    #[test]
    fn unknown_type_rejected() {
        assert_eq!(
            RootDatum::from_type("Z9").unwrap_err().code(),
            "root_datum::UnknownType"
        );
        assert!(RootDatum::from_type("E9").is_err());
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = RootDatum::from_type("A2").unwrap();
        assert_eq!(a2.simple_reflect(0, &w(&[1, 0])).unwrap(), w(&[-1, 1]));
        assert_eq!(a2.simple_reflect(0, &w(&[0, 1])).unwrap(), w(&[0, 1]));
        let a1 = RootDatum::from_type("A1").unwrap();
        assert_eq!(a1.simple_reflect(0, &w(&[1])).unwrap(), w(&[-1]));
        assert!(matches!(
            a1.simple_reflect(1, &w(&[1])),
            Err(RootDatumError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            a1.simple_reflect(0, &w(&[1, 2])),
            Err(RootDatumError::RankMismatch { .. })
        ));
    }

    #[test]
    fn rho_shifts_by_simple_roots() {
        for t in ["A2", "B2", "G2", "A3"] {
            let d = RootDatum::from_type(t).unwrap();
            for i in 0..d.rank() {
                assert_eq!(
                    d.simple_reflect(i, &d.rho()).unwrap(),
                    d.rho().sub(d.simple_root(i))
                );
            }
        }
    }

    #[test]
    fn weyl_group_words() {
        let a1 = WeylGroup::new(&RootDatum::from_type("A1").unwrap()).unwrap();
        let lens: Vec<usize> = a1.elements().iter().map(WeylElement::length).collect();
        assert_eq!(lens, vec![0, 1]);

        let a2 = WeylGroup::new(&RootDatum::from_type("A2").unwrap()).unwrap();
        assert_eq!(a2.longest().word(), &[0, 1, 0]);
        assert_eq!(a2.reduced_words(a2.longest()).len(), 2);

        let b2 = WeylGroup::new(&RootDatum::from_type("B2").unwrap()).unwrap();
        assert_eq!(b2.longest().length(), 4);
        assert_eq!(b2.reduced_words(b2.longest()).len(), 2);
    }

    #[test]
    fn weyl_act_examples() {
        let a2 = WeylGroup::new(&RootDatum::from_type("A2").unwrap()).unwrap();
        assert_eq!(a2.longest().act(&w(&[1, 0])).unwrap(), w(&[0, -1]));
        assert_eq!(a2.identity().act(&w(&[4, -2])).unwrap(), w(&[4, -2]));
        let s1 = a2.simple_reflection(0).unwrap();
        assert_eq!(s1.dot_act(&w(&[0, 0])).unwrap(), w(&[-2, 1]));
        assert!(s1.act(&w(&[1])).is_err());

        let a1 = WeylGroup::new(&RootDatum::from_type("A1").unwrap()).unwrap();
        let s = a1.simple_reflection(0).unwrap();
        assert_eq!(s.act(&w(&[3])).unwrap(), w(&[-3]));
        assert_eq!(s.dot_act(&w(&[0])).unwrap(), w(&[-2]));
        assert_eq!(a1.identity().dot_act(&w(&[5])).unwrap(), w(&[5]));
    }

    #[test]
    fn cell_characters_examples() {
        let a2 = WeylGroup::new(&RootDatum::from_type("A2").unwrap()).unwrap();
        let s1 = a2.simple_reflection(0).unwrap();
        assert_eq!(a2.cell_characters(s1), vec![w(&[2, -1])]);
        assert!(a2.cell_characters(a2.identity()).is_empty());
        assert_eq!(a2.cell_characters(a2.longest()).len(), 3);
        for x in a2.elements() {
            assert_eq!(a2.cell_characters(x).len(), x.length());
        }
    }

    #[test]
    fn datum_spec_json() {
        let s: DatumSpec = serde_json::from_str(r#"{"type":"B2"}"#).unwrap();
        assert_eq!(s.build().unwrap().positive_roots().len(), 4);
        let s: DatumSpec = serde_json::from_str(r#"{"cartan":[[2,-1],[-1,2]]}"#).unwrap();
        assert_eq!(s.build().unwrap().positive_roots().len(), 3);
        assert_eq!(serde_json::to_string(&w(&[1, -2])).unwrap(), "[1,-2]");
    }

    #[test]
    fn non_reduced_word_detected() {
        let a1 = WeylGroup::new(&RootDatum::from_type("A1").unwrap()).unwrap();
        assert!(a1.from_reduced_word(&[0, 0]).is_err());
        assert!(a1.from_word(&[0, 0]).unwrap().is_identity());
    }
}

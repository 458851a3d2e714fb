//! Bott–Samelson bimodules `B(x) = R ⊗_{R^{s_1}} R ⊗ ⋯ ⊗_{R^{s_n}} R`.
//!
//! `B(x)` is a free left `R`-module with basis
//! `b_ε = 1 ⊗ z_1 ⊗ ⋯ ⊗ z_n`, `ε ∈ {0,1}^n`, where `z_i = 1` if `ε_i = 0`
//! and `z_i = e^{ω_{s_i}}` otherwise. The basis index of `ε` is
//! `Σ ε_i 2^{i-1}`, so the first tensor slot is the lowest bit.
//!
//! Morphisms are left `R`-linear maps stored as matrices acting on
//! coordinate columns; `f ∘ g` has matrix `F · G`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::demazure::demazure;
use crate::frobenius::{casimir, decompose, FrobeniusError};
use crate::laurent::{LaurentError, LaurentJson, LaurentPoly};
use crate::matrix::{MatrixError, PolyMatrix};
use crate::root_datum::{RootDatum, RootDatumError, Weight, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

impl BimoduleError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::RootDatum(e) => e.code(),
            Self::Laurent(e) => e.code(),
            Self::Frobenius(e) => e.code(),
            Self::Matrix(MatrixError::ShapeMismatch(_)) | Self::ShapeMismatch(_) => {
                "bimodule::ShapeMismatch"
            }
            Self::Matrix(e) => e.code(),
        }
    }
}

type Result<T> = std::result::Result<T, BimoduleError>;

/// A sequence of simple reflections (0-based generator indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BSWord(Vec<usize>);

impl BSWord {
    pub fn new(datum: &RootDatum, letters: Vec<usize>) -> Result<Self> {
        for &s in &letters {
            datum.check_index(s)?;
        }
        Ok(BSWord(letters))
    }

    pub fn empty() -> Self {
        BSWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rank `2^n` of `B(x)` as a free left `R`-module.
    pub fn basis_size(&self) -> usize {
        1 << self.0.len()
    }

    /// 1-based labels, for display and JSON.
    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|s| s + 1).collect()
    }

    pub fn from_labels(datum: &RootDatum, labels: &[usize]) -> Result<Self> {
        let letters = labels
            .iter()
            .map(|&l| l.checked_sub(1).ok_or(RootDatumError::ZeroLabel))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::new(datum, letters)
    }
}

impl std::fmt::Display for BSWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|l| format!("s{l}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `B(x) ⊗_R B(y) = B(xy)`.
pub fn tensor_words(x: &BSWord, y: &BSWord) -> BSWord {
    let mut v = x.0.clone();
    v.extend_from_slice(&y.0);
    BSWord(v)
}

/// Human-readable name of the basis element `b_ε`, e.g. `1⊗x1⊗1`.
pub fn basis_label(datum: &RootDatum, word: &BSWord, index: usize) -> String {
    let r = datum.rank();
    let mut parts = vec!["1".to_string()];
    for (k, &s) in word.letters().iter().enumerate() {
        if index >> k & 1 == 1 {
            parts.push(LaurentPoly::exp(Weight::fundamental(r, s)).to_string());
        } else {
            parts.push("1".to_string());
        }
    }
    parts.join("⊗")
}

/// An element of `B(x)` in the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSElement {
    word: BSWord,
    coeffs: Vec<LaurentPoly>,
}

impl BSElement {
    pub fn new(word: BSWord, coeffs: Vec<LaurentPoly>) -> Result<Self> {
        if coeffs.len() != word.basis_size() {
            return Err(BimoduleError::ShapeMismatch(format!(
                "{} coefficients for a basis of size {}",
                coeffs.len(),
                word.basis_size()
            )));
        }
        Ok(BSElement { word, coeffs })
    }

    /// The basis vector `b_ε`.
    pub fn basis(rank: usize, word: BSWord, index: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(rank); word.basis_size()];
        coeffs[index] = LaurentPoly::one(rank);
        BSElement { word, coeffs }
    }

    pub fn word(&self) -> &BSWord {
        &self.word
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Left multiplication by `r`.
    pub fn left_mul(&self, r: &LaurentPoly) -> BSElement {
        BSElement {
            word: self.word.clone(),
            coeffs: self.coeffs.iter().map(|c| r * c).collect(),
        }
    }
}

fn check_rank(datum: &RootDatum, r: &LaurentPoly) -> Result<()> {
    if r.rank() != datum.rank() {
        return Err(LaurentError::RankMismatch {
            expected: datum.rank(),
            found: r.rank(),
        }
        .into());
    }
    Ok(())
}

/// `b_ε · r` in the canonical basis.
///
/// `r` is absorbed into the rightmost slot; then, slot by slot from right to
/// left, the slot content is split as `a + b·e^{ω_s}` with `a, b ∈ R^s` and
/// the invariant coefficients move across `⊗_{R^s}` into the next slot.
fn right_mul_basis(datum: &RootDatum, word: &BSWord, index: usize, r: &LaurentPoly) -> Result<Vec<LaurentPoly>> {
    let rank = datum.rank();
    let n = word.len();
    let z = |k: usize| -> LaurentPoly {
        // factor k (1-based) of b_ε
        if index >> (k - 1) & 1 == 1 {
            LaurentPoly::var_pow(rank, word.0[k - 1], 1)
        } else {
            LaurentPoly::one(rank)
        }
    };
    let mut out = vec![LaurentPoly::zero(rank); word.basis_size()];
    if n == 0 {
        out[0] = r.clone();
        return Ok(out);
    }
    // suffix bits -> content of slot k
    let mut states: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    states.insert(0, &z(n) * r);
    for k in (1..=n).rev() {
        let s = word.0[k - 1];
        let carry = if k > 1 { z(k - 1) } else { LaurentPoly::one(rank) };
        let mut next: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (suffix, g) in states {
            if g.is_zero() {
                continue;
            }
            let (a, b) = decompose(datum, &g, s)?;
            for (bit, part) in [(0usize, a), (1usize, b)] {
                if part.is_zero() {
                    continue;
                }
                let key = suffix | (bit << (k - 1));
                let content = &carry * &part;
                next.entry(key)
                    .and_modify(|v| *v += &content)
                    .or_insert(content);
            }
        }
        states = next;
    }
    for (idx, g) in states {
        out[idx] = g;
    }
    Ok(out)
}

/// Right action `m · r`.
pub fn right_mul(datum: &RootDatum, m: &BSElement, r: &LaurentPoly) -> Result<BSElement> {
    check_rank(datum, r)?;
    let rank = datum.rank();
    let mut coeffs = vec![LaurentPoly::zero(rank); m.word.basis_size()];
    for (idx, c) in m.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let col = right_mul_basis(datum, &m.word, idx, r)?;
        for (acc, v) in coeffs.iter_mut().zip(col) {
            if !v.is_zero() {
                *acc += &(c * &v);
            }
        }
    }
    Ok(BSElement {
        word: m.word.clone(),
        coeffs,
    })
}

/// Matrix of `m ↦ m · r` on the canonical basis of `B(x)`; column `ε` is
/// `b_ε · r`.
pub fn right_mul_matrix(datum: &RootDatum, word: &BSWord, r: &LaurentPoly) -> Result<PolyMatrix> {
    check_rank(datum, r)?;
    let cols = (0..word.basis_size())
        .map(|idx| right_mul_basis(datum, word, idx, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_columns(datum.rank(), word.basis_size(), cols))
}

/// A left `R`-linear map `B(source) → B(target)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BimoduleMorphism {
    source: BSWord,
    target: BSWord,
    matrix: PolyMatrix,
}

impl BimoduleMorphism {
    pub fn new(source: BSWord, target: BSWord, matrix: PolyMatrix) -> Result<Self> {
        if matrix.rows() != target.basis_size() || matrix.cols() != source.basis_size() {
            return Err(BimoduleError::ShapeMismatch(format!(
                "{}x{} matrix for a map of ranks {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.basis_size(),
                target.basis_size()
            )));
        }
        Ok(BimoduleMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(rank: usize, word: BSWord) -> Self {
        let matrix = PolyMatrix::identity(rank, word.basis_size());
        BimoduleMorphism {
            source: word.clone(),
            target: word,
            matrix,
        }
    }

    pub fn source(&self) -> &BSWord {
        &self.source
    }

    pub fn target(&self) -> &BSWord {
        &self.target
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn apply(&self, m: &BSElement) -> Result<BSElement> {
        if m.word != self.source {
            return Err(BimoduleError::ShapeMismatch(format!(
                "element of B{} given to a map from B{}",
                m.word, self.source
            )));
        }
        Ok(BSElement {
            word: self.target.clone(),
            coeffs: self.matrix.apply(&m.coeffs)?,
        })
    }

    /// `self - other`, for maps with the same source and target.
    pub fn sub(&self, other: &BimoduleMorphism) -> Result<BimoduleMorphism> {
        self.check_parallel(other)?;
        BimoduleMorphism::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.sub(&other.matrix)?,
        )
    }

    pub fn add(&self, other: &BimoduleMorphism) -> Result<BimoduleMorphism> {
        self.check_parallel(other)?;
        BimoduleMorphism::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix)?,
        )
    }

    fn check_parallel(&self, other: &BimoduleMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(BimoduleError::ShapeMismatch(format!(
                "maps {} -> {} and {} -> {} are not parallel",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> MorphismJson {
        MorphismJson {
            source: self.source.labels(),
            target: self.target.labels(),
            matrix: (0..self.matrix.rows())
                .map(|i| self.matrix.row(i).iter().map(LaurentPoly::to_json).collect())
                .collect(),
        }
    }

    pub fn from_json(datum: &RootDatum, json: &MorphismJson) -> Result<Self> {
        let source = BSWord::from_labels(datum, &json.source)?;
        let target = BSWord::from_labels(datum, &json.target)?;
        let rows = json
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| LaurentPoly::from_json(p, datum.rank()))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let matrix = if rows.is_empty() {
            PolyMatrix::zeros(datum.rank(), 0, source.basis_size())
        } else {
            PolyMatrix::from_rows(datum.rank(), rows)?
        };
        BimoduleMorphism::new(source, target, matrix)
    }
}

/// JSON form `{"source": [..], "target": [..], "matrix": [[..]]}` with
/// 1-based generator labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub matrix: Vec<Vec<LaurentJson>>,
}

/// `f ∘ g`.
pub fn morphism_compose(f: &BimoduleMorphism, g: &BimoduleMorphism) -> Result<BimoduleMorphism> {
    if g.target != f.source {
        return Err(BimoduleError::ShapeMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            f.source, f.target, g.source, g.target
        )));
    }
    BimoduleMorphism::new(g.source.clone(), f.target.clone(), f.matrix.mul(&g.matrix)?)
}

/// `f ⊗ g : B(x_f x_g) → B(y_f y_g)`.
///
/// On `b_ε ⊗ b_δ` the output `f(b_ε) ⊗ g(b_δ)` is rewritten in the canonical
/// basis by pushing each coefficient of `g(b_δ)` left across the junction,
/// i.e. right-multiplying `f(b_ε)` by it.
pub fn morphism_tensor(datum: &RootDatum, f: &BimoduleMorphism, g: &BimoduleMorphism) -> Result<BimoduleMorphism> {
    let rank = datum.rank();
    if f.matrix.rank_vars() != rank || g.matrix.rank_vars() != rank {
        return Err(LaurentError::RankMismatch {
            expected: rank,
            found: if f.matrix.rank_vars() != rank { f.matrix.rank_vars() } else { g.matrix.rank_vars() },
        }
        .into());
    }
    let source = tensor_words(&f.source, &g.source);
    let target = tensor_words(&f.target, &g.target);
    let fx = f.source.basis_size();
    let fy = f.target.basis_size();
    let mut matrix = PolyMatrix::zeros(rank, target.basis_size(), source.basis_size());
    for delta in 0..g.source.basis_size() {
        let gcol = g.matrix.column(delta);
        for eps in 0..fx {
            let fcol = BSElement {
                word: f.target.clone(),
                coeffs: f.matrix.column(eps),
            };
            let col = eps + fx * delta;
            for (eta, c) in gcol.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let pushed = right_mul(datum, &fcol, c)?;
                for (kappa, v) in pushed.coeffs.into_iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let row = kappa + fy * eta;
                    let cur = matrix.get(row, col) + &v;
                    matrix.set(row, col, cur);
                }
            }
        }
    }
    BimoduleMorphism::new(source, target, matrix)
}

/// Which structure map of the Frobenius object `B_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `R → B_s`, `1 ↦` Casimir element.
    Unit,
    /// `B_s → R`, `f ⊗ g ↦ fg`.
    Counit,
    /// `B_{ss} → B_s`, `f ⊗ g ⊗ h ↦ f Δ_s(g) ⊗ h`.
    Mult,
    /// `B_s → B_{ss}`, `f ⊗ g ↦ f ⊗ 1 ⊗ g`.
    Comult,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Unit, Generator::Counit, Generator::Mult, Generator::Comult];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Unit => "unit",
            Generator::Counit => "counit",
            Generator::Mult => "mult",
            Generator::Comult => "comult",
        }
    }

    /// Source and target word lengths.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Unit => (0, 1),
            Generator::Counit => (1, 0),
            Generator::Mult => (2, 1),
            Generator::Comult => (1, 2),
        }
    }
}

pub fn generator(datum: &RootDatum, gen: Generator, s: usize) -> Result<BimoduleMorphism> {
    match gen {
        Generator::Unit => unit(datum, s),
        Generator::Counit => counit(datum, s),
        Generator::Mult => mult(datum, s),
        Generator::Comult => comult(datum, s),
    }
}

/// `R → B_s`, `1 ↦ Σ x_i ⊗ g_i`.
pub fn unit(datum: &RootDatum, s: usize) -> Result<BimoduleMorphism> {
    datum.check_index(s)?;
    let rank = datum.rank();
    let word = BSWord(vec![s]);
    let b0 = BSElement::basis(rank, word.clone(), 0);
    let mut col = vec![LaurentPoly::zero(rank); 2];
    for (x, g) in casimir(datum, s)? {
        let term = right_mul(datum, &b0, &g)?.left_mul(&x);
        for (acc, v) in col.iter_mut().zip(&term.coeffs) {
            *acc += v;
        }
    }
    BimoduleMorphism::new(
        BSWord::empty(),
        word,
        PolyMatrix::from_columns(rank, 2, vec![col]),
    )
}

/// `B_s → R`, `f ⊗ g ↦ fg`.
pub fn counit(datum: &RootDatum, s: usize) -> Result<BimoduleMorphism> {
    datum.check_index(s)?;
    let rank = datum.rank();
    let matrix = PolyMatrix::from_rows(
        rank,
        vec![vec![LaurentPoly::one(rank), LaurentPoly::var_pow(rank, s, 1)]],
    )?;
    BimoduleMorphism::new(BSWord(vec![s]), BSWord::empty(), matrix)
}

/// `B_{ss} → B_s`, `f ⊗ g ⊗ h ↦ f Δ_s(g) ⊗ h`.
pub fn mult(datum: &RootDatum, s: usize) -> Result<BimoduleMorphism> {
    datum.check_index(s)?;
    let rank = datum.rank();
    let trace = [
        LaurentPoly::one(rank),
        demazure(datum, s, &LaurentPoly::var_pow(rank, s, 1)).map_err(FrobeniusError::from)?,
    ];
    let mut matrix = PolyMatrix::zeros(rank, 2, 4);
    for idx in 0..4 {
        let (e1, e2) = (idx & 1, idx >> 1);
        matrix.set(e2, idx, trace[e1].clone());
    }
    BimoduleMorphism::new(BSWord(vec![s, s]), BSWord(vec![s]), matrix)
}

/// `B_s → B_{ss}`, `f ⊗ g ↦ f ⊗ 1 ⊗ g`.
pub fn comult(datum: &RootDatum, s: usize) -> Result<BimoduleMorphism> {
    datum.check_index(s)?;
    let rank = datum.rank();
    let mut matrix = PolyMatrix::zeros(rank, 4, 2);
    matrix.set(0, 0, LaurentPoly::one(rank));
    matrix.set(2, 1, LaurentPoly::one(rank));
    BimoduleMorphism::new(BSWord(vec![s]), BSWord(vec![s, s]), matrix)
}

/// The ring generators `e^{±ω_i}` of `R`.
pub fn ring_generators(datum: &RootDatum) -> Vec<LaurentPoly> {
    let r = datum.rank();
    (0..r)
        .flat_map(|i| [LaurentPoly::var_pow(r, i, 1), LaurentPoly::var_pow(r, i, -1)])
        .collect()
}

/// Whether `f` commutes with the right action of every `e^{±ω_i}`.
pub fn is_bimodule_map(datum: &RootDatum, f: &BimoduleMorphism) -> Result<bool> {
    for r in ring_generators(datum) {
        let src = right_mul_matrix(datum, &f.source, &r)?;
        let tgt = right_mul_matrix(datum, &f.target, &r)?;
        if f.matrix.mul(&src)? != tgt.mul(&f.matrix)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `R_w`: `R` with left action `r·m = rm` and right action `m·r = m w(r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedBimodule {
    w: WeylElement,
}

impl TwistedBimodule {
    pub fn new(w: WeylElement) -> Self {
        TwistedBimodule { w }
    }

    pub fn element(&self) -> &WeylElement {
        &self.w
    }

    pub fn right_mul(&self, f: &LaurentPoly, r: &LaurentPoly) -> Result<LaurentPoly> {
        Ok(f.try_mul(&r.weyl_act(&self.w)?)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::WeylGroup;

    fn a1(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(1, terms.iter().map(|&(e, c)| (vec![e], c)))
    }

    fn a1_datum() -> RootDatum {
        RootDatum::from_type("A1").unwrap()
    }

    fn word(d: &RootDatum, l: &[usize]) -> BSWord {
        BSWord::new(d, l.to_vec()).unwrap()
    }

    #[test]
    fn right_mul_examples() {
        let d = a1_datum();
        let b0 = BSElement::basis(1, word(&d, &[0]), 0);
        let m = right_mul(&d, &b0, &a1(&[(1, 1)])).unwrap();
        assert_eq!(m.coeffs(), &[a1(&[]), a1(&[(0, 1)])]);
        let m = right_mul(&d, &b0, &a1(&[(2, 1)])).unwrap();
        assert_eq!(m.coeffs(), &[a1(&[(0, -1)]), a1(&[(1, 1), (-1, 1)])]);
        let g = a1(&[(1, 2), (-1, 2), (0, 5)]);
        assert_eq!(right_mul(&d, &b0, &g).unwrap(), b0.left_mul(&g));
    }

    #[test]
    fn right_mul_matrix_examples() {
        let d = a1_datum();
        let m = right_mul_matrix(&d, &word(&d, &[0]), &a1(&[(1, 1)])).unwrap();
        let expected = PolyMatrix::from_rows(
            1,
            vec![vec![a1(&[]), a1(&[(0, -1)])], vec![a1(&[(0, 1)]), a1(&[(1, 1), (-1, 1)])]],
        )
        .unwrap();
        assert_eq!(m, expected);
        let r = a1(&[(3, 1), (0, -2)]);
        let m = right_mul_matrix(&d, &BSWord::empty(), &r).unwrap();
        assert_eq!(m, PolyMatrix::scalar(&r, 1));
        let g = a1(&[(2, 1), (0, 1), (-2, 1)]);
        let m = right_mul_matrix(&d, &word(&d, &[0, 0, 0]), &g).unwrap();
        assert_eq!(m, PolyMatrix::scalar(&g, 8));
    }

    #[test]
    fn tensor_words_examples() {
        let d = a1_datum();
        let s = word(&d, &[0]);
        assert_eq!(tensor_words(&s, &s), word(&d, &[0, 0]));
        assert_eq!(tensor_words(&BSWord::empty(), &s), s);
        assert_eq!(tensor_words(&s, &word(&d, &[0, 0])).basis_size(), 8);
    }

    #[test]
    fn generator_matrices_a1() {
        let d = a1_datum();
        assert_eq!(
            counit(&d, 0).unwrap().matrix().row(0),
            &[a1(&[(0, 1)]), a1(&[(1, 1)])]
        );
        assert_eq!(
            unit(&d, 0).unwrap().matrix().column(0),
            vec![a1(&[(-2, -1)]), a1(&[(-1, 1)])]
        );
        let m = mult(&d, 0).unwrap();
        let delta_x = a1(&[(1, 1), (-1, 1)]);
        let one = a1(&[(0, 1)]);
        let zero = a1(&[]);
        assert_eq!(m.matrix().row(0), &[one.clone(), delta_x.clone(), zero.clone(), zero.clone()]);
        assert_eq!(m.matrix().row(1), &[zero.clone(), zero.clone(), one, delta_x]);
        let c = comult(&d, 0).unwrap();
        assert!(c.matrix().get(0, 0).is_one() && c.matrix().get(2, 1).is_one());
    }

    #[test]
    fn generators_are_bimodule_maps() {
        for t in ["A1", "A2", "B2"] {
            let d = RootDatum::from_type(t).unwrap();
            for s in 0..d.rank() {
                for gen in Generator::ALL {
                    let f = generator(&d, gen, s).unwrap();
                    assert!(is_bimodule_map(&d, &f).unwrap(), "{t} {} s{}", gen.name(), s + 1);
                }
            }
        }
    }

    #[test]
    fn non_map_detected() {
        let d = a1_datum();
        let w = word(&d, &[0]);
        let m = PolyMatrix::from_rows(1, vec![vec![a1(&[(0, 1)]), a1(&[])], vec![a1(&[]), a1(&[])]]).unwrap();
        let f = BimoduleMorphism::new(w.clone(), w.clone(), m).unwrap();
        assert!(!is_bimodule_map(&d, &f).unwrap());
        assert!(is_bimodule_map(&d, &BimoduleMorphism::identity(1, w)).unwrap());
    }

    #[test]
    fn composition_examples() {
        let d = a1_datum();
        let e = morphism_compose(&counit(&d, 0).unwrap(), &unit(&d, 0).unwrap()).unwrap();
        assert_eq!(e.matrix().get(0, 0), &a1(&[(0, 1), (-2, -1)]));
        let id = morphism_compose(&mult(&d, 0).unwrap(), &comult(&d, 0).unwrap()).unwrap();
        assert!(id.matrix().is_identity());
        assert!(matches!(
            morphism_compose(&unit(&d, 0).unwrap(), &unit(&d, 0).unwrap()),
            Err(BimoduleError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn tensor_examples() {
        let d = RootDatum::from_type("A2").unwrap();
        let x = word(&d, &[0, 1]);
        let y = word(&d, &[1]);
        let t = morphism_tensor(
            &d,
            &BimoduleMorphism::identity(2, x.clone()),
            &BimoduleMorphism::identity(2, y.clone()),
        )
        .unwrap();
        assert!(t.matrix().is_identity());
        assert_eq!(t.source(), &tensor_words(&x, &y));

        let a = a1_datum();
        let s = word(&a, &[0]);
        let f = morphism_tensor(&a, &counit(&a, 0).unwrap(), &BimoduleMorphism::identity(1, s)).unwrap();
        assert_eq!(f.source().len(), 2);
        assert_eq!(f.target().len(), 1);
        assert_eq!(f.matrix().column(0), vec![a1(&[(0, 1)]), a1(&[])]);
    }

    #[test]
    fn twisted_examples() {
        let g = WeylGroup::new(&a1_datum()).unwrap();
        let t = TwistedBimodule::new(g.simple_reflection(0).unwrap().clone());
        assert_eq!(t.right_mul(&a1(&[(0, 1)]), &a1(&[(1, 1)])).unwrap(), a1(&[(-1, 1)]));
        let e = TwistedBimodule::new(g.identity().clone());
        let r = a1(&[(2, 3), (-1, 1)]);
        assert_eq!(e.right_mul(&a1(&[(0, 1)]), &r).unwrap(), r);
    }

    #[test]
    fn morphism_json_roundtrip() {
        let d = RootDatum::from_type("B2").unwrap();
        let f = unit(&d, 1).unwrap();
        let j = serde_json::to_string(&f.to_json()).unwrap();
        assert!(j.starts_with(r#"{"source":[],"target":[2],"matrix":[[{"terms""#));
        let back: MorphismJson = serde_json::from_str(&j).unwrap();
        assert_eq!(BimoduleMorphism::from_json(&d, &back).unwrap(), f);
        assert_eq!(
            BSWord::from_labels(&d, &[1, 0]),
            Err(BimoduleError::RootDatum(RootDatumError::ZeroLabel))
        );
        assert_eq!(BSWord::from_labels(&d, &[2, 1]).unwrap().letters(), &[1, 0]);
    }
}

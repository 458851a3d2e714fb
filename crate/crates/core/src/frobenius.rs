//! Frobenius extensions `R^s ⊂ R` and `R^W ⊂ R`.
//!
//! For a simple reflection `s`, `R` is free over `R^s` with basis
//! `{1, e^{ω_s}}` and trace `Δ_s`; the dual basis is
//! `{-e^{-α_s}, e^{-ω_s}}`. Over `R^W` the trace is `Ind_T^G` and a basis is
//! given by the Steinberg candidates `e_w`, certified by a unimodular Gram
//! matrix.

use serde::Serialize;
use thiserror::Error;

use crate::demazure::{demazure, induction, DemazureError, InductionMethod};
use crate::laurent::{LaurentJson, LaurentPoly};
use crate::matrix::{MatrixError, PolyMatrix};
use crate::root_datum::{RootDatum, Weight, WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error(transparent)]
    Demazure(#[from] DemazureError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("Steinberg candidate basis failed: {0}")]
    CandidateBasisFailed(String),
    #[error("dual basis check failed: {0}")]
    DualityFailed(String),
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
}

impl FrobeniusError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Demazure(e) => e.code(),
            Self::Matrix(e) => e.code(),
            Self::CandidateBasisFailed(_) => "frobenius::CandidateBasisFailed",
            Self::DualityFailed(_) => "frobenius::DualityFailed",
            Self::DecompositionFailed(_) => "frobenius::DecompositionFailed",
        }
    }
}

impl From<crate::root_datum::RootDatumError> for FrobeniusError {
    fn from(e: crate::root_datum::RootDatumError) -> Self {
        FrobeniusError::Demazure(e.into())
    }
}

impl From<crate::laurent::LaurentError> for FrobeniusError {
    fn from(e: crate::laurent::LaurentError) -> Self {
        FrobeniusError::Demazure(e.into())
    }
}

type Result<T> = std::result::Result<T, FrobeniusError>;

/// Bases of `R` over `R^s` dual under `Δ_s`.
#[derive(Debug, Clone)]
pub struct RankOneFrobeniusData {
    s: usize,
    basis: [LaurentPoly; 2],
    dual_basis: [LaurentPoly; 2],
}

impl RankOneFrobeniusData {
    /// Builds and checks `Δ_s(basis_i · dual_j) = δ_ij`.
    pub fn new(datum: &RootDatum, s: usize) -> Result<Self> {
        datum.check_index(s)?;
        let r = datum.rank();
        let omega = Weight::fundamental(r, s);
        let basis = [LaurentPoly::one(r), LaurentPoly::exp(omega.clone())];
        let dual_basis = [
            -LaurentPoly::exp(datum.simple_root(s).neg()),
            LaurentPoly::exp(omega.neg()),
        ];
        for (i, x) in basis.iter().enumerate() {
            for (j, g) in dual_basis.iter().enumerate() {
                let t = demazure(datum, s, &(x * g))?;
                let ok = if i == j { t.is_one() } else { t.is_zero() };
                if !ok {
                    return Err(FrobeniusError::DualityFailed(format!(
                        "Δ_{}(x_{i} g_{j}) = {t}",
                        s + 1
                    )));
                }
            }
        }
        Ok(RankOneFrobeniusData {
            s,
            basis,
            dual_basis,
        })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// `(1, e^{ω_s})`.
    pub fn basis(&self) -> &[LaurentPoly; 2] {
        &self.basis
    }

    /// `(-e^{-α_s}, e^{-ω_s})`.
    pub fn dual_basis(&self) -> &[LaurentPoly; 2] {
        &self.dual_basis
    }
}

/// Writes `f = a + b·e^{ω_s}` with `a, b ∈ R^s`.
pub fn decompose(datum: &RootDatum, f: &LaurentPoly, s: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    datum.check_index(s)?;
    let r = datum.rank();
    let e_omega = LaurentPoly::var_pow(r, s, 1);
    let b = demazure(datum, s, &f.shift(&Weight::fundamental(r, s).neg()))?;
    let a = demazure(datum, s, f)? - &b * &demazure(datum, s, &e_omega)?;
    if &a + &(&b * &e_omega) != *f {
        return Err(FrobeniusError::DecompositionFailed(format!(
            "reconstruction of {f} over R^s{}",
            s + 1
        )));
    }
    Ok((a, b))
}

/// The Casimir element `Σ x_i ⊗ g_i` as a list of pairs.
pub fn casimir(datum: &RootDatum, s: usize) -> Result<Vec<(LaurentPoly, LaurentPoly)>> {
    let data = RankOneFrobeniusData::new(datum, s)?;
    Ok(data
        .basis
        .iter()
        .cloned()
        .zip(data.dual_basis.iter().cloned())
        .collect())
}

/// `<f, g> = Ind_T^G(f g)`.
pub fn pairing(group: &WeylGroup, f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    Ok(induction(group, &f.try_mul(g)?, InductionMethod::Demazure)?)
}

/// Steinberg basis of `R` over `R^W`, its Gram matrix and dual basis.
#[derive(Debug, Clone)]
pub struct SteinbergData {
    elements: Vec<WeylElement>,
    basis: Vec<LaurentPoly>,
    gram: PolyMatrix,
    det: LaurentPoly,
    dual: Vec<LaurentPoly>,
}

impl SteinbergData {
    /// Weyl group elements indexing rows and columns, in ShortLex order.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    pub fn gram(&self) -> &PolyMatrix {
        &self.gram
    }

    pub fn det(&self) -> &LaurentPoly {
        &self.det
    }

    /// `+1` or `-1`.
    pub fn det_sign(&self) -> i32 {
        if self.det.is_one() { 1 } else { -1 }
    }

    pub fn dual(&self) -> &[LaurentPoly] {
        &self.dual
    }

    pub fn to_json(&self) -> SteinbergJson {
        SteinbergJson {
            order: self.elements.iter().map(WeylElement::label).collect(),
            basis: keyed(&self.elements, &self.basis),
            dual: keyed(&self.elements, &self.dual),
            gram: (0..self.gram.rows())
                .map(|i| self.gram.row(i).iter().map(LaurentPoly::to_json).collect())
                .collect(),
            det: self.det.to_json(),
            det_sign: self.det_sign(),
        }
    }
}

/// JSON report for [`steinberg`], keyed by canonical reduced words
/// (1-based, comma separated, `e` for the identity).
#[derive(Debug, Clone, Serialize)]
pub struct SteinbergJson {
    pub order: Vec<String>,
    pub basis: serde_json::Map<String, serde_json::Value>,
    pub dual: serde_json::Map<String, serde_json::Value>,
    pub gram: Vec<Vec<LaurentJson>>,
    pub det: LaurentJson,
    pub det_sign: i32,
}

fn keyed(
    elements: &[WeylElement],
    polys: &[LaurentPoly],
) -> serde_json::Map<String, serde_json::Value> {
    elements
        .iter()
        .zip(polys)
        .map(|(w, p)| {
            let v = serde_json::to_value(p.to_json()).expect("serializable");
            (w.label(), v)
        })
        .collect()
}

/// Steinberg's element `e_w = w⁻¹(e^{λ_w})` with `λ_w` the sum of `ω_i` over
/// simple roots `α_i` sent to negative roots by `w⁻¹`.
pub fn steinberg_candidate(group: &WeylGroup, w: &WeylElement) -> LaurentPoly {
    let r = group.rank();
    let winv = group.inverse(w);
    let lambda = (0..r)
        .filter(|&i| group.is_right_descent(&winv, i))
        .fold(Weight::zero(r), |acc, i| acc.add(&Weight::fundamental(r, i)));
    LaurentPoly::exp(winv.act_unchecked(&lambda))
}

/// Builds the Steinberg basis, certifies it through `det = ±1` and computes
/// the dual basis from the adjugate of the Gram matrix.
pub fn steinberg(group: &WeylGroup) -> Result<SteinbergData> {
    let datum = group.datum();
    let r = datum.rank();
    let elements: Vec<WeylElement> = group.elements().to_vec();
    let n = elements.len();
    let basis: Vec<LaurentPoly> = elements
        .iter()
        .map(|w| steinberg_candidate(group, w))
        .collect();

    let mut gram = PolyMatrix::zeros(r, n, n);
    for i in 0..n {
        for j in i..n {
            let v = pairing(group, &basis[i], &basis[j])?;
            gram.set(j, i, v.clone());
            gram.set(i, j, v);
        }
    }
    let (det, adj) = gram.det_and_adjugate().map_err(|e| match e {
        MatrixError::Singular => {
            FrobeniusError::CandidateBasisFailed("Gram matrix is singular".into())
        }
        other => other.into(),
    })?;
    let unit = det.is_one() || (-&det).is_one();
    if !unit {
        return Err(FrobeniusError::CandidateBasisFailed(format!(
            "Gram determinant is {det}, not ±1"
        )));
    }
    // det = ±1, so det⁻¹ = det
    let inverse = adj.scale(&det);
    if !gram.mul(&inverse)?.is_identity() {
        return Err(FrobeniusError::DualityFailed(
            "Gram matrix times its inverse is not the identity".into(),
        ));
    }
    if !inverse.entries().iter().all(|p| p.is_w_invariant(datum)) {
        return Err(FrobeniusError::DualityFailed(
            "inverse Gram matrix has non-invariant entries".into(),
        ));
    }
    let dual: Vec<LaurentPoly> = (0..n)
        .map(|w| {
            let mut acc = LaurentPoly::zero(r);
            for v in 0..n {
                acc += &(inverse.get(v, w) * &basis[v]);
            }
            acc
        })
        .collect();
    Ok(SteinbergData {
        elements,
        basis,
        gram,
        det,
        dual,
    })
}

/// Coefficients `c_w = <f, e*_w>` so that `f = Σ c_w e_w`, indexed like
/// [`SteinbergData::elements`]. The reconstruction is checked.
pub fn expand_in_steinberg(
    group: &WeylGroup,
    f: &LaurentPoly,
    sd: &SteinbergData,
) -> Result<Vec<LaurentPoly>> {
    let coeffs = sd
        .dual
        .iter()
        .map(|d| pairing(group, f, d))
        .collect::<Result<Vec<_>>>()?;
    let mut recon = LaurentPoly::zero(f.rank());
    for (c, e) in coeffs.iter().zip(&sd.basis) {
        recon += &(c * e);
    }
    if recon != *f {
        return Err(FrobeniusError::DecompositionFailed(format!(
            "Steinberg expansion does not reconstruct {f}"
        )));
    }
    Ok(coeffs)
}

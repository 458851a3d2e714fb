//! K-theoretic Demazure operators, induction from `T` to `G` and Weyl
//! characters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, SpecializationPoint};
use crate::root_datum::{RootDatum, RootDatumError, Weight, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DemazureError {
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("induction pipelines disagree: {0}")]
    MethodMismatch(String),
}

impl DemazureError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::RootDatum(e) => e.code(),
            Self::Laurent(e) => e.code(),
            Self::NotDominant(_) => "demazure::NotDominant",
            Self::MethodMismatch(_) => "demazure::MethodMismatch",
        }
    }
}

type Result<T> = std::result::Result<T, DemazureError>;

/// How to compute `Ind_T^G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InductionMethod {
    /// Compose Demazure operators along the canonical reduced word of `w₀`.
    Demazure,
    /// Alternating sum over the dot-orbit divided by the Weyl denominator.
    WeylFormula,
}

fn check_poly(datum: &RootDatum, f: &LaurentPoly) -> Result<()> {
    if f.rank() != datum.rank() {
        return Err(LaurentError::RankMismatch {
            expected: datum.rank(),
            found: f.rank(),
        }
        .into());
    }
    Ok(())
}

/// `Δ_s(e^λ)` in closed form, with `n = <λ, α_s^∨>`.
fn demazure_monomial(datum: &RootDatum, s: usize, lambda: &Weight, c: &BigRational, out: &mut LaurentPoly) {
    let n = lambda.coords()[s];
    let alpha = datum.simple_root(s);
    if n >= 0 {
        let mut mu = lambda.clone();
        for _ in 0..=n {
            out.add_term(mu.clone(), c.clone());
            mu = mu.sub(alpha);
        }
    } else if n <= -2 {
        let mut mu = lambda.add(alpha);
        for _ in 1..=(-n - 1) {
            out.add_term(mu.clone(), -c.clone());
            mu = mu.add(alpha);
        }
    }
}

/// The Demazure operator `Δ_s = Ind_T^{P_s} Res`, an `R^s`-linear
/// projection onto `s`-invariants.
pub fn demazure(datum: &RootDatum, s: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    datum.check_index(s)?;
    check_poly(datum, f)?;
    let mut out = LaurentPoly::zero(f.rank());
    for (lambda, c) in f.terms() {
        demazure_monomial(datum, s, lambda, c, &mut out);
    }
    Ok(out)
}

/// `Δ_{a_1} ∘ Δ_{a_2} ∘ ⋯ ∘ Δ_{a_k}` applied to `f`; the last letter acts first.
pub fn demazure_word(datum: &RootDatum, word: &[usize], f: &LaurentPoly) -> Result<LaurentPoly> {
    for &s in word {
        datum.check_index(s)?;
    }
    check_poly(datum, f)?;
    let mut g = f.clone();
    for &s in word.iter().rev() {
        g = demazure(datum, s, &g)?;
    }
    Ok(g)
}

/// `∏_{α>0} (1 - e^{-α})`.
pub fn weyl_denominator(datum: &RootDatum) -> LaurentPoly {
    let r = datum.rank();
    datum
        .positive_roots()
        .iter()
        .fold(LaurentPoly::one(r), |acc, root| {
            acc * (LaurentPoly::one(r) - LaurentPoly::exp(root.weight.neg()))
        })
}

/// `Ind_T^G(f)`.
pub fn induction(group: &WeylGroup, f: &LaurentPoly, method: InductionMethod) -> Result<LaurentPoly> {
    let datum = group.datum();
    check_poly(datum, f)?;
    match method {
        InductionMethod::Demazure => demazure_word(datum, group.longest().word(), f),
        InductionMethod::WeylFormula => {
            let mut numerator = LaurentPoly::zero(f.rank());
            for w in group.elements() {
                let sign = if w.length() % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                for (lambda, c) in f.terms() {
                    numerator.add_term(w.dot_act(lambda)?, &sign * c);
                }
            }
            Ok(numerator.exact_divide(&weyl_denominator(datum))?)
        }
    }
}

/// Runs both induction pipelines and fails if they disagree.
pub fn induction_checked(group: &WeylGroup, f: &LaurentPoly) -> Result<LaurentPoly> {
    let a = induction(group, f, InductionMethod::Demazure)?;
    let b = induction(group, f, InductionMethod::WeylFormula)?;
    if a != b {
        return Err(DemazureError::MethodMismatch(format!("{a} vs {b}")));
    }
    Ok(a)
}

/// Character of the irreducible representation of highest weight `λ`.
pub fn irr_character(group: &WeylGroup, lambda: &Weight) -> Result<LaurentPoly> {
    group.datum().check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(DemazureError::NotDominant(lambda.clone()));
    }
    let chi = induction(group, &LaurentPoly::exp(lambda.clone()), InductionMethod::Demazure)?;
    debug_assert!(chi.coeff(lambda).is_one());
    debug_assert!(chi.terms().all(|(_, c)| c.is_integer() && c.is_positive()));
    Ok(chi)
}

/// Dimension of the irreducible of highest weight `λ`: the character
/// evaluated at the identity.
pub fn weyl_dim(group: &WeylGroup, lambda: &Weight) -> Result<BigInt> {
    let chi = irr_character(group, lambda)?;
    let v = chi.specialize(&SpecializationPoint::ones(lambda.rank()))?;
    Ok(v.to_integer())
}

//! Hom-space ranks between Bott–Samelson bimodules.
//!
//! The predicted rank of `Hom(B(x), B(y))` is `Σ_w m_w(x) m_w(y)`, where
//! `m_w(x)` counts the subsequences of `x` whose product is `w`. It is
//! checked against the dimension of the commutant
//! `{M : M ρ_x(r) = ρ_y(r) M}` at random prime specializations of the
//! variables, and against spans of morphisms generated from the Frobenius
//! structure maps.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bimodule::{
    self, morphism_compose, morphism_tensor, right_mul_matrix, ring_generators, BSWord,
    BimoduleError, BimoduleMorphism, Generator,
};
use crate::demazure::{irr_character, DemazureError};
use crate::laurent::{LaurentError, LaurentPoly, SpecializationPoint};
use crate::matrix::{rational_nullity, rational_rank, MatrixError, PolyMatrix};
use crate::root_datum::{RootDatum, RootDatumError, Weight, WeylElement, WeylGroup};

/// Default bound on `|x| + |y|` for specialized rank computations.
pub const DEFAULT_BUDGET: usize = 6;

/// Bound on the number of distinct morphisms kept by [`generate_hom`].
pub const GENERATION_CAP: usize = 50_000;

const PRIMES: [i64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

const MAX_RETRIES: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Demazure(#[from] DemazureError),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("rank {0} is too large for distinct prime specializations")]
    TooManyVariables(usize),
}

impl HomError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Bimodule(e) => e.code(),
            Self::Demazure(e) => e.code(),
            Self::BudgetExceeded(_) => "homspace::BudgetExceeded",
            Self::ShapeMismatch(_) => "homspace::ShapeMismatch",
            Self::TooManyVariables(_) => "homspace::TooManyVariables",
        }
    }
}

impl From<RootDatumError> for HomError {
    fn from(e: RootDatumError) -> Self {
        HomError::Bimodule(e.into())
    }
}

impl From<LaurentError> for HomError {
    fn from(e: LaurentError) -> Self {
        HomError::Bimodule(e.into())
    }
}

impl From<MatrixError> for HomError {
    fn from(e: MatrixError) -> Self {
        HomError::Bimodule(e.into())
    }
}

type Result<T> = std::result::Result<T, HomError>;

/// Multiset of subsequence products `w ↦ m_w(x)`, in group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubseqMultiset {
    counts: Vec<(WeylElement, usize)>,
}

impl SubseqMultiset {
    pub fn count(&self, w: &WeylElement) -> usize {
        self.counts
            .iter()
            .find(|(v, _)| v == w)
            .map_or(0, |(_, m)| *m)
    }

    pub fn entries(&self) -> &[(WeylElement, usize)] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|(_, m)| m).sum()
    }

    /// Whether every subsequence product occurs once.
    pub fn is_multiplicity_free(&self) -> bool {
        self.counts.iter().all(|(_, m)| *m == 1)
    }
}

impl std::fmt::Display for SubseqMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(w, m)| format!("{w}: {m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn subsequence_products(group: &WeylGroup, x: &BSWord) -> Result<SubseqMultiset> {
    let letters = x.letters();
    let mut counts: HashMap<WeylElement, usize> = HashMap::new();
    for eps in 0..x.basis_size() {
        let chosen: Vec<usize> = (0..letters.len())
            .filter(|k| eps >> k & 1 == 1)
            .map(|k| letters[k])
            .collect();
        *counts.entry(group.from_word(&chosen)?).or_default() += 1;
    }
    let mut counts: Vec<(WeylElement, usize)> = counts.into_iter().collect();
    counts.sort_by_key(|(w, _)| group.position(w));
    Ok(SubseqMultiset { counts })
}

/// `Σ_w m_w(x) m_w(y)`.
pub fn hom_rank_predicted(group: &WeylGroup, x: &BSWord, y: &BSWord) -> Result<usize> {
    let mx = subsequence_products(group, x)?;
    let my = subsequence_products(group, y)?;
    Ok(mx.entries().iter().map(|(w, m)| m * my.count(w)).sum())
}

/// Distinct random primes, one per variable.
pub fn random_prime_point(rank: usize, rng: &mut ChaCha8Rng) -> Result<SpecializationPoint> {
    if rank > PRIMES.len() {
        return Err(HomError::TooManyVariables(rank));
    }
    let values: Vec<i64> = PRIMES.choose_multiple(rng, rank).copied().collect();
    Ok(SpecializationPoint::from_integers(&values)?)
}

/// Whether two distinct Weyl elements act identically on the specialized
/// fundamental characters, which would make the commutant jump.
pub fn has_collision(group: &WeylGroup, p: &SpecializationPoint) -> Result<bool> {
    let r = group.rank();
    let mut seen = HashSet::new();
    for w in group.elements() {
        let mut key = Vec::with_capacity(r);
        for i in 0..r {
            let v = LaurentPoly::exp(w.act(&Weight::fundamental(r, i))?).specialize(p)?;
            key.push(v);
        }
        if !seen.insert(key) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Linear system `M A_g - B_g M = 0` in the entries of an `m × n` matrix `M`,
/// one block of rows per pair `(A_g, B_g)`.
fn commutant_system(pairs: &[(Vec<Vec<BigRational>>, Vec<Vec<BigRational>>)], m: usize, n: usize) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::new();
    for (a, b) in pairs {
        for i in 0..m {
            for j in 0..n {
                let mut row = vec![BigRational::zero(); m * n];
                for k in 0..n {
                    if !a[k][j].is_zero() {
                        row[i * n + k] += &a[k][j];
                    }
                }
                for k in 0..m {
                    if !b[i][k].is_zero() {
                        row[k * n + j] -= &b[i][k];
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Right-action matrices of `x` and `y` for a list of ring elements.
struct ActionData {
    m: usize,
    n: usize,
    pairs: Vec<(PolyMatrix, PolyMatrix)>,
}

impl ActionData {
    fn new(datum: &RootDatum, x: &BSWord, y: &BSWord, ring: &[LaurentPoly]) -> Result<Self> {
        let pairs = ring
            .iter()
            .map(|r| Ok((right_mul_matrix(datum, x, r)?, right_mul_matrix(datum, y, r)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ActionData {
            m: y.basis_size(),
            n: x.basis_size(),
            pairs,
        })
    }

    fn nullity_at(&self, p: &SpecializationPoint) -> Result<usize> {
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| Ok((a.specialize(p)?, b.specialize(p)?)))
            .collect::<Result<Vec<_>>>()?;
        let rows = commutant_system(&pairs, self.m, self.n);
        Ok(rational_nullity(&rows, self.m * self.n))
    }
}

/// Which ring acts on the right when computing the commutant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActingRing {
    /// `R ⊗ R`, generated on the right by `e^{±ω_i}`.
    Full,
    /// `R ⊗_{R^W} R`: additionally identify the right action of each
    /// fundamental character `χ_{ω_i} ∈ R^W` with its left action.
    OverInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialResult {
    pub seed: u64,
    pub nullity: usize,
    /// Number of specialization points rejected for collisions.
    pub retries: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomRankReport {
    pub x: BSWord,
    pub y: BSWord,
    pub predicted: usize,
    pub trials: Vec<TrialResult>,
    pub agreed: bool,
}

impl HomRankReport {
    pub fn to_json(&self) -> HomRankJson {
        HomRankJson {
            x: self.x.labels(),
            y: self.y.labels(),
            predicted: self.predicted,
            trials: self
                .trials
                .iter()
                .map(|t| TrialJson {
                    seed: t.seed,
                    nullity: t.nullity,
                })
                .collect(),
            agreed: self.agreed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialJson {
    pub seed: u64,
    pub nullity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomRankJson {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub predicted: usize,
    pub trials: Vec<TrialJson>,
    pub agreed: bool,
}

pub fn check_budget(x: &BSWord, y: &BSWord, budget: usize) -> Result<()> {
    let needed = x.len() + y.len();
    if needed > budget {
        return Err(HomError::BudgetExceeded(format!(
            "|x| + |y| = {needed} exceeds the budget {budget}"
        )));
    }
    Ok(())
}

/// Commutant nullity at `trials` independent prime specializations; trial
/// `t` draws from the stream seeded with `seed + t`.
pub fn hom_rank_specialized(
    group: &WeylGroup,
    x: &BSWord,
    y: &BSWord,
    seed: u64,
    trials: usize,
    budget: usize,
) -> Result<HomRankReport> {
    hom_rank_specialized_over(group, x, y, seed, trials, budget, ActingRing::Full)
}

pub fn hom_rank_specialized_over(
    group: &WeylGroup,
    x: &BSWord,
    y: &BSWord,
    seed: u64,
    trials: usize,
    budget: usize,
    ring: ActingRing,
) -> Result<HomRankReport> {
    check_budget(x, y, budget)?;
    let datum = group.datum();
    let predicted = hom_rank_predicted(group, x, y)?;
    let mut gens = ring_generators(datum);
    let invariants = match ring {
        ActingRing::Full => Vec::new(),
        ActingRing::OverInvariants => (0..datum.rank())
            .map(|i| irr_character(group, &Weight::fundamental(datum.rank(), i)))
            .collect::<std::result::Result<Vec<_>, _>>()?,
    };
    gens.extend(invariants.iter().cloned());
    let data = ActionData::new(datum, x, y, &gens)?;
    let n_plain = gens.len() - invariants.len();

    let results = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let trial_seed = seed.wrapping_add(t);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let mut retries = 0;
            let p = loop {
                let p = random_prime_point(datum.rank(), &mut rng)?;
                if !has_collision(group, &p)? || retries >= MAX_RETRIES {
                    break p;
                }
                retries += 1;
            };
            let nullity = if invariants.is_empty() {
                data.nullity_at(&p)?
            } else {
                let mut pairs = Vec::new();
                for (k, (a, b)) in data.pairs.iter().enumerate() {
                    let (a, b) = (a.specialize(&p)?, b.specialize(&p)?);
                    if k < n_plain {
                        pairs.push((a, b));
                    } else {
                        // M ρ_x(χ) = χ(p) M and χ(p) M = ρ_y(χ) M
                        let chi = invariants[k - n_plain].specialize(&p)?;
                        pairs.push((a, scalar_matrix(&chi, data.m)));
                        pairs.push((scalar_matrix(&chi, data.n), b));
                    }
                }
                rational_nullity(&commutant_system(&pairs, data.m, data.n), data.m * data.n)
            };
            Ok(TrialResult {
                seed: trial_seed,
                nullity,
                retries,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let agreed = results.iter().all(|t| t.nullity == predicted);
    Ok(HomRankReport {
        x: x.clone(),
        y: y.clone(),
        predicted,
        trials: results,
        agreed,
    })
}

/// Options for [`generate_hom_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerationLimits {
    /// Longest intermediate word allowed.
    pub max_word_len: usize,
    /// Largest number of distinct morphisms kept.
    pub cap: usize,
}

/// Morphisms `B(x) → B(y)` obtained by composing at most `depth` elementary
/// maps `id ⊗ g ⊗ id` with `g` a unit, counit, multiplication or
/// comultiplication, starting from `id_x`. Intermediate words are at most
/// one letter longer than `max(|x|, |y|)`.
pub fn generate_hom(datum: &RootDatum, x: &BSWord, y: &BSWord, depth: usize) -> Result<Vec<BimoduleMorphism>> {
    let limits = GenerationLimits {
        max_word_len: x.len().max(y.len()) + 1,
        cap: GENERATION_CAP,
    };
    generate_hom_with(datum, x, y, depth, limits)
}

pub fn generate_hom_with(
    datum: &RootDatum,
    x: &BSWord,
    y: &BSWord,
    depth: usize,
    limits: GenerationLimits,
) -> Result<Vec<BimoduleMorphism>> {
    let rank = datum.rank();
    let mut elementary: HashMap<BSWord, Vec<BimoduleMorphism>> = HashMap::new();
    let start = BimoduleMorphism::identity(rank, x.clone());
    let mut seen: HashSet<BimoduleMorphism> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for f in &frontier {
            if !elementary.contains_key(f.target()) {
                let moves = elementary_maps(datum, f.target(), limits.max_word_len)?;
                elementary.insert(f.target().clone(), moves);
            }
            for g in &elementary[f.target()] {
                let h = morphism_compose(g, f)?;
                if h.matrix().is_zero() || seen.contains(&h) {
                    continue;
                }
                if seen.len() >= limits.cap {
                    return Err(HomError::BudgetExceeded(format!(
                        "more than {} generated morphisms",
                        limits.cap
                    )));
                }
                seen.insert(h.clone());
                next.push(h);
            }
        }
        frontier = next;
    }
    let mut out: Vec<BimoduleMorphism> = seen.into_iter().filter(|f| f.target() == y).collect();
    out.sort_by_cached_key(|f| format!("{:?}", f.matrix()));
    Ok(out)
}

/// All maps `id_a ⊗ g ⊗ id_b` out of `B(u)` whose target has length at most
/// `max_len`.
pub fn elementary_maps(datum: &RootDatum, u: &BSWord, max_len: usize) -> Result<Vec<BimoduleMorphism>> {
    let rank = datum.rank();
    let letters = u.letters();
    let mut out = Vec::new();
    let mut place = |a: usize, consumed: usize, g: BimoduleMorphism| -> Result<()> {
        let left = BimoduleMorphism::identity(rank, BSWord::new(datum, letters[..a].to_vec())?);
        let right = BimoduleMorphism::identity(rank, BSWord::new(datum, letters[a + consumed..].to_vec())?);
        let f = morphism_tensor(datum, &morphism_tensor(datum, &left, &g)?, &right)?;
        out.push(f);
        Ok(())
    };
    for gen in Generator::ALL {
        let (src, tgt) = gen.arity();
        if letters.len() - src.min(letters.len()) + tgt > max_len {
            continue;
        }
        for a in 0..=letters.len() {
            if a + src > letters.len() {
                break;
            }
            match gen {
                Generator::Unit => {
                    for s in 0..rank {
                        place(a, 0, bimodule::unit(datum, s)?)?;
                    }
                }
                Generator::Counit | Generator::Comult => {
                    place(a, 1, bimodule::generator(datum, gen, letters[a])?)?;
                }
                Generator::Mult => {
                    if letters[a] == letters[a + 1] {
                        place(a, 2, bimodule::mult(datum, letters[a])?)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

fn flatten_at(f: &BimoduleMorphism, p: &SpecializationPoint) -> Result<Vec<BigRational>> {
    Ok(f.matrix().specialize(p)?.into_iter().flatten().collect())
}

/// Rank over `R` of the span of `ms`, estimated as the minimum rational rank
/// of the flattened matrices at three seeded prime specializations.
pub fn span_rank(datum: &RootDatum, ms: &[BimoduleMorphism], seed: u64) -> Result<usize> {
    let Some(first) = ms.first() else {
        return Ok(0);
    };
    if let Some(bad) = ms.iter().find(|f| f.source() != first.source() || f.target() != first.target()) {
        return Err(HomError::ShapeMismatch(format!(
            "{} -> {} among maps {} -> {}",
            bad.source(),
            bad.target(),
            first.source(),
            first.target()
        )));
    }
    let ranks = (0..3u64)
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k));
            let p = random_prime_point(datum.rank(), &mut rng)?;
            let rows = ms.iter().map(|f| flatten_at(f, &p)).collect::<Result<Vec<_>>>()?;
            Ok(rational_rank(&rows))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ranks.into_iter().min().unwrap_or(0))
}

/// `e = comult_s ∘ mult_s` on `B(s,s)` and its complement `c = id - e`.
pub fn bs_square_idempotents(datum: &RootDatum, s: usize) -> Result<(BimoduleMorphism, BimoduleMorphism)> {
    let e = morphism_compose(&bimodule::comult(datum, s)?, &bimodule::mult(datum, s)?)?;
    let id = BimoduleMorphism::identity(datum.rank(), e.source().clone());
    let c = id.sub(&e)?;
    Ok((e, c))
}

/// Rank of a single morphism's matrix at a prime specialization.
pub fn specialized_rank(datum: &RootDatum, f: &BimoduleMorphism, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_prime_point(datum.rank(), &mut rng)?;
    Ok(rational_rank(&f.matrix().specialize(&p)?))
}

/// Dimension of `{f : f (r - w(r)) = 0}` at a prime specialization, for
/// `r = e^{±ω_i}`: the rank of `Hom(R, R_w)`.
pub fn hom_to_twisted_rank(datum: &RootDatum, w: &WeylElement, seed: u64) -> Result<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_prime_point(datum.rank(), &mut rng)?;
    let rows = ring_generators(datum)
        .iter()
        .map(|r| {
            let d = r.try_sub(&r.weyl_act(w)?)?;
            Ok(vec![d.specialize(&p)?])
        })
        .collect::<std::result::Result<Vec<_>, LaurentError>>()?;
    Ok(rational_nullity(&rows, 1))
}

fn scalar_matrix(c: &BigRational, n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { c.clone() } else { BigRational::zero() }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(&RootDatum::from_type(t).unwrap()).unwrap()
    }

    fn w(g: &WeylGroup, l: &[usize]) -> BSWord {
        BSWord::new(g.datum(), l.to_vec()).unwrap()
    }

    #[test]
    fn subsequence_examples() {
        let a1 = group("A1");
        let m = subsequence_products(&a1, &w(&a1, &[0, 0])).unwrap();
        assert_eq!(m.to_string(), "{e: 2, s1: 2}");
        let m = subsequence_products(&a1, &BSWord::empty()).unwrap();
        assert_eq!(m.to_string(), "{e: 1}");
        let a2 = group("A2");
        let m = subsequence_products(&a2, &w(&a2, &[0, 1])).unwrap();
        assert_eq!(m.total(), 4);
        assert!(m.is_multiplicity_free());
        assert_eq!(m.count(&a2.from_word(&[0, 1]).unwrap()), 1);
        assert_eq!(m.count(&a2.from_word(&[1, 0]).unwrap()), 0);
    }

    #[test]
    fn predicted_examples() {
        let a1 = group("A1");
        let s = w(&a1, &[0]);
        let ss = w(&a1, &[0, 0]);
        assert_eq!(hom_rank_predicted(&a1, &s, &s).unwrap(), 2);
        assert_eq!(hom_rank_predicted(&a1, &BSWord::empty(), &s).unwrap(), 1);
        assert_eq!(hom_rank_predicted(&a1, &ss, &ss).unwrap(), 8);
        let a2 = group("A2");
        assert_eq!(hom_rank_predicted(&a2, &w(&a2, &[0, 1]), &w(&a2, &[1, 0])).unwrap(), 3);
        let x = w(&a2, &[0, 1, 0]);
        assert_eq!(hom_rank_predicted(&a2, &x, &x).unwrap(), 12);
    }

    #[test]
    fn specialized_examples() {
        let a1 = group("A1");
        let s = w(&a1, &[0]);
        let r = hom_rank_specialized(&a1, &s, &s, 0, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.agreed);
        assert!(r.trials.iter().all(|t| t.nullity == 2));
        let e = BSWord::empty();
        let r = hom_rank_specialized(&a1, &e, &e, 0, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.trials[0].nullity, 1);
        let a2 = group("A2");
        let r = hom_rank_specialized(&a2, &w(&a2, &[0, 1]), &w(&a2, &[1, 0]), 5, 3, DEFAULT_BUDGET).unwrap();
        assert!(r.agreed && r.predicted == 3);
        assert!(matches!(
            hom_rank_specialized(&a2, &w(&a2, &[0, 1, 0]), &w(&a2, &[0, 1]), 0, 1, 4),
            Err(HomError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn invariant_ring_gives_same_nullity() {
        let a2 = group("A2");
        let x = w(&a2, &[0, 1]);
        let y = w(&a2, &[1, 0]);
        let full = hom_rank_specialized(&a2, &x, &y, 1, 2, 6).unwrap();
        let inv = hom_rank_specialized_over(&a2, &x, &y, 1, 2, 6, ActingRing::OverInvariants).unwrap();
        assert_eq!(full, inv);
    }

    #[test]
    fn prime_points_have_no_collisions() {
        let b2 = group("B2");
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let p = random_prime_point(2, &mut rng).unwrap();
            assert!(!has_collision(&b2, &p).unwrap());
        }
        let p = SpecializationPoint::from_integers(&[1, 1]).unwrap();
        assert!(has_collision(&b2, &p).unwrap());
    }

    #[test]
    fn generated_examples() {
        let d = RootDatum::from_type("A1").unwrap();
        let s = BSWord::new(&d, vec![0]).unwrap();
        let ms = generate_hom(&d, &s, &s, 2).unwrap();
        let id = BimoduleMorphism::identity(1, s.clone());
        let uc = morphism_compose(&bimodule::unit(&d, 0).unwrap(), &bimodule::counit(&d, 0).unwrap()).unwrap();
        assert!(ms.contains(&id) && ms.contains(&uc) && id != uc);
        assert!(ms.iter().all(|f| bimodule::is_bimodule_map(&d, f).unwrap()));
        let e = BSWord::empty();
        let ms = generate_hom(&d, &e, &s, 1).unwrap();
        assert!(ms.contains(&bimodule::unit(&d, 0).unwrap()));
        let ms = generate_hom(&d, &e, &e, 2).unwrap();
        let one_minus = LaurentPoly::from_terms(1, [(vec![0], 1), (vec![-2], -1)]);
        assert!(ms.iter().any(|f| f.matrix().get(0, 0) == &one_minus));
        assert!(ms.iter().any(|f| f.matrix().is_identity()));
    }

    #[test]
    fn span_rank_examples() {
        let d = RootDatum::from_type("A1").unwrap();
        let s = BSWord::new(&d, vec![0]).unwrap();
        let id = BimoduleMorphism::identity(1, s.clone());
        let uc = morphism_compose(&bimodule::unit(&d, 0).unwrap(), &bimodule::counit(&d, 0).unwrap()).unwrap();
        assert_eq!(span_rank(&d, &[id.clone()], 0).unwrap(), 1);
        assert_eq!(span_rank(&d, &[id.clone(), id.clone()], 0).unwrap(), 1);
        assert_eq!(span_rank(&d, &[id.clone(), uc], 0).unwrap(), 2);
        assert!(matches!(
            span_rank(&d, &[id, bimodule::unit(&d, 0).unwrap()], 0),
            Err(HomError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn idempotent_examples() {
        let d = RootDatum::from_type("A1").unwrap();
        let (e, c) = bs_square_idempotents(&d, 0).unwrap();
        assert_eq!(morphism_compose(&e, &e).unwrap(), e);
        assert_eq!(morphism_compose(&c, &c).unwrap(), c);
        assert!(morphism_compose(&e, &c).unwrap().matrix().is_zero());
        assert!(e.add(&c).unwrap().matrix().is_identity());
        assert_eq!(specialized_rank(&d, &e, 0).unwrap(), 2);
        assert_eq!(specialized_rank(&d, &c, 0).unwrap(), 2);
    }

    #[test]
    fn twisted_examples() {
        for t in ["A1", "A2"] {
            let g = group(t);
            for v in g.elements() {
                let expected = usize::from(v.is_identity());
                assert_eq!(hom_to_twisted_rank(g.datum(), v, 0).unwrap(), expected);
            }
        }
    }
}

//! Exact multivariate Laurent polynomials over the rationals: the
//! representation ring `R = R(T)` with `e^λ` as the monomial of exponent `λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::root_datum::{RootDatum, Weight, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("specialization entry {0} is zero")]
    ZeroSpecializationEntry(usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

impl LaurentError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::RankMismatch { .. } => "laurent::RankMismatch",
            Self::DivisionByZero => "laurent::DivisionByZero",
            Self::InexactDivision(_) => "laurent::InexactDivision",
            Self::ZeroSpecializationEntry(_) => "laurent::ZeroSpecializationEntry",
            Self::Parse(_) => "laurent::Parse",
            Self::Json(_) => "laurent::Json",
        }
    }
}

type Result<T> = std::result::Result<T, LaurentError>;

/// Laurent polynomial with exact rational coefficients. No zero coefficient
/// is ever stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Weight, BigRational>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), BigRational::one())
    }

    pub fn constant(rank: usize, c: BigRational) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    /// `c · e^λ`.
    pub fn monomial(lambda: Weight, c: BigRational) -> Self {
        let rank = lambda.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        LaurentPoly { rank, terms }
    }

    /// `e^λ`.
    pub fn exp(lambda: Weight) -> Self {
        Self::monomial(lambda, BigRational::one())
    }

    /// `e^{k ω_i}`.
    pub fn var_pow(rank: usize, i: usize, k: i64) -> Self {
        Self::exp(Weight::fundamental(rank, i).scale(k))
    }

    /// Builds from `(exponent, integer coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(rank: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, i64)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "exponent has wrong length");
            p.add_term(Weight::new(e), BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Weight) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// If the polynomial is a constant, return it.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, lambda: Weight, c: BigRational) {
        debug_assert_eq!(lambda.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &LaurentPoly) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            })
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(other)?;
        let mut out = LaurentPoly::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiply by the monomial `e^λ`.
    pub fn shift(&self, lambda: &Weight) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.add(lambda), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.rank);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Image under a Weyl group element, `e^λ ↦ e^{w(λ)}`.
    pub fn weyl_act(&self, w: &WeylElement) -> Result<LaurentPoly> {
        if w.rank() != self.rank {
            return Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            });
        }
        let mut out = LaurentPoly::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(w.act_unchecked(e), c.clone());
        }
        Ok(out)
    }

    /// Image under the simple reflection `s_i` of `datum`.
    pub fn reflect(&self, datum: &RootDatum, i: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(datum.reflect_unchecked(i, e), c.clone());
        }
        out
    }

    /// Whether `s_i(f) = f` for each listed generator.
    pub fn is_invariant(&self, datum: &RootDatum, gens: &[usize]) -> bool {
        gens.iter().all(|&i| self.reflect(datum, i) == *self)
    }

    /// Invariance under the whole Weyl group.
    pub fn is_w_invariant(&self, datum: &RootDatum) -> bool {
        let all: Vec<usize> = (0..datum.rank()).collect();
        self.is_invariant(datum, &all)
    }

    fn leading(&self) -> Option<(&Weight, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Per-coordinate (min, max) of the exponents in the support.
    fn exponent_box(&self) -> Vec<(i64, i64)> {
        let mut b = vec![(i64::MAX, i64::MIN); self.rank];
        for e in self.terms.keys() {
            for (slot, &v) in b.iter_mut().zip(e.coords()) {
                slot.0 = slot.0.min(v);
                slot.1 = slot.1.max(v);
            }
        }
        b
    }

    /// Exact quotient `f / g`, failing if `g` does not divide `f`.
    ///
    /// Division by lexicographically leading terms. Every quotient exponent
    /// must lie in the box `[min f - min g, max f - max g]`, which both
    /// bounds the loop and detects non-divisibility; the result is verified
    /// by multiplying back.
    pub fn exact_divide(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_rank(g)?;
        if g.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let mut quotient = LaurentPoly::zero(self.rank);
        if self.is_zero() {
            return Ok(quotient);
        }
        let fbox = self.exponent_box();
        let gbox = g.exponent_box();
        let qbox: Vec<(i64, i64)> = fbox
            .iter()
            .zip(&gbox)
            .map(|(f, g)| (f.0 - g.0, f.1 - g.1))
            .collect();
        let (glead_e, glead_c) = g.leading().expect("nonzero");
        let glead_e = glead_e.clone();
        let glead_c = glead_c.clone();

        let mut rem = self.clone();
        while let Some((e, c)) = rem.leading() {
            let qe = e.sub(&glead_e);
            let inside = qe
                .coords()
                .iter()
                .zip(&qbox)
                .all(|(&v, &(lo, hi))| lo <= v && v <= hi);
            if !inside {
                return Err(LaurentError::InexactDivision(format!(
                    "remainder term with exponent {e} cannot be cancelled"
                )));
            }
            let qc = c / &glead_c;
            for (ge, gc) in &g.terms {
                rem.add_term(ge.add(&qe), -(gc * &qc));
            }
            quotient.add_term(qe, qc);
        }
        if &quotient * g != *self {
            return Err(LaurentError::InexactDivision(
                "verification multiply failed".into(),
            ));
        }
        Ok(quotient)
    }

    /// Evaluate with `e^{ω_i} ↦ p_i`.
    pub fn specialize(&self, p: &SpecializationPoint) -> Result<BigRational> {
        if p.values.len() != self.rank {
            return Err(LaurentError::RankMismatch {
                expected: self.rank,
                found: p.values.len(),
            });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in p.values.iter().zip(e.coords()) {
                if k != 0 {
                    term *= num_traits::pow::Pow::pow(v, k as i32);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Sum of coefficients, i.e. the value at the all-ones point.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// Random polynomial with up to `max_terms` terms, exponents in
    /// `[-exp_bound, exp_bound]` and nonzero integer coefficients in
    /// `[-coeff_bound, coeff_bound]`.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        rank: usize,
        max_terms: usize,
        exp_bound: i64,
        coeff_bound: i64,
    ) -> LaurentPoly {
        let n = rng.random_range(1..=max_terms.max(1));
        let mut p = LaurentPoly::zero(rank);
        for _ in 0..n {
            let e = (0..rank)
                .map(|_| rng.random_range(-exp_bound..=exp_bound))
                .collect();
            let mut c = 0;
            while c == 0 {
                c = rng.random_range(-coeff_bound..=coeff_bound);
            }
            p.add_term(Weight::new(e), BigRational::from_integer(c.into()));
        }
        p
    }

    /// Random monomial `e^λ` with `|λ_i| <= exp_bound`.
    pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, rank: usize, exp_bound: i64) -> LaurentPoly {
        let e = (0..rank)
            .map(|_| rng.random_range(-exp_bound..=exp_bound))
            .collect();
        LaurentPoly::exp(Weight::new(e))
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.coords().to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    /// Reads the JSON form. The rank is supplied by the caller because the
    /// zero polynomial carries no exponents.
    pub fn from_json(json: &LaurentJson, rank: usize) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero(rank);
        for t in &json.terms {
            if t.exp.len() != rank {
                return Err(LaurentError::RankMismatch {
                    expected: rank,
                    found: t.exp.len(),
                });
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| LaurentError::Json(format!("bad numerator `{}`", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| LaurentError::Json(format!("bad denominator `{}`", t.den)))?;
            if den.is_zero() {
                return Err(LaurentError::Json("zero denominator".into()));
            }
            p.add_term(Weight::new(t.exp.clone()), BigRational::new(num, den));
        }
        Ok(p)
    }

    /// Parses the text rendering produced by `Display`, e.g.
    /// `x1^2*x2^-1 - 3/2*x2 + 1`. For rank one the variable is `x`.
    pub fn parse(s: &str, rank: usize) -> Result<LaurentPoly> {
        parse_poly(s, rank)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.rank, self)
    }
}

fn var_name(rank: usize, i: usize) -> String {
    if rank == 1 {
        "x".to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn monomial_text(rank: usize, e: &Weight) -> String {
    e.coords()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, &k)| {
            if k == 1 {
                var_name(rank, i)
            } else {
                format!("{}^{}", var_name(rank, i), k)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Terms in decreasing lexicographic exponent order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = monomial_text(self.rank, e);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn parse_poly(s: &str, rank: usize) -> Result<LaurentPoly> {
    let err = |m: &str| LaurentError::Parse(format!("{m} in `{s}`"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty input"));
    }
    // split into signed terms; a sign directly after `^` belongs to the exponent
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
            } else if prev.is_some() {
                return Err(err("dangling sign"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if cur.is_empty() {
        return Err(err("trailing sign"));
    }
    terms.push((neg, cur));

    let mut p = LaurentPoly::zero(rank);
    for (neg, body) in terms {
        let mut coeff = BigRational::one();
        let mut exp = vec![0i64; rank];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor.starts_with('x') {
                let (name, power) = match factor.split_once('^') {
                    Some((n, k)) => (n, k.parse::<i64>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let idx = if name == "x" && rank == 1 {
                    0
                } else {
                    let i: usize = name[1..].parse().map_err(|_| err("bad variable"))?;
                    if i == 0 || i > rank {
                        return Err(err("variable index out of range"));
                    }
                    i - 1
                };
                exp[idx] += power;
            } else {
                let c = match factor.split_once('/') {
                    Some((n, d)) => {
                        let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
                        let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
                        if d.is_zero() {
                            return Err(err("zero denominator"));
                        }
                        BigRational::new(n, d)
                    }
                    None => BigRational::from_integer(
                        factor.parse::<BigInt>().map_err(|_| err("bad coefficient"))?,
                    ),
                };
                coeff *= c;
            }
        }
        if neg {
            coeff = -coeff;
        }
        p.add_term(Weight::new(exp), coeff);
    }
    Ok(p)
}

/// One term of the JSON encoding; big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub num: String,
    pub den: String,
}

/// JSON encoding `{"terms": [{"exp": [..], "num": "..", "den": ".."}]}`,
/// terms in increasing lexicographic exponent order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

/// A point at which every Laurent monomial can be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationPoint {
    values: Vec<BigRational>,
}

impl SpecializationPoint {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if let Some(i) = values.iter().position(Zero::is_zero) {
            return Err(LaurentError::ZeroSpecializationEntry(i));
        }
        Ok(SpecializationPoint { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn ones(rank: usize) -> Self {
        SpecializationPoint {
            values: vec![BigRational::one(); rank],
        }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$inner(rhs).expect("rank mismatch in polynomial arithmetic")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in polynomial arithmetic");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in polynomial arithmetic");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

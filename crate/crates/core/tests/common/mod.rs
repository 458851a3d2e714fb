//! Independent oracles shared by the integration tests. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use ksbim::laurent::LaurentPoly;
use ksbim::root_datum::{RootDatum, Weight, WeylGroup};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn datum(t: &str) -> RootDatum {
    RootDatum::from_type(t).unwrap()
}

pub fn group(t: &str) -> WeylGroup {
    WeylGroup::new(&datum(t)).unwrap()
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `(e^λ - e^{s·λ}) / (1 - e^{-α_s})` extended linearly, with `α_s` read
/// off the Cartan matrix and the quotient found by exact division.
pub fn demazure_by_division(d: &RootDatum, s: usize, f: &LaurentPoly) -> LaurentPoly {
    let r = d.rank();
    let alpha = Weight::new((0..r).map(|j| d.cartan().entry(j, s)).collect());
    let denom = LaurentPoly::one(r) - LaurentPoly::exp(alpha.neg());
    let mut out = LaurentPoly::zero(r);
    for (lambda, c) in f.terms() {
        let n = lambda.coords()[s];
        let dot = lambda.sub(&alpha.scale(n + 1));
        let num = (LaurentPoly::exp(lambda.clone()) - LaurentPoly::exp(dot)).scalar_mul(c);
        out += &num.exact_divide(&denom).unwrap();
    }
    out
}

/// Reflection matrices on fundamental-weight coordinates built straight from
/// the Cartan matrix: `s_i(λ)_j = λ_j - λ_i C[j][i]`.
pub fn reflection_matrices(cartan: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let r = cartan.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    (0..r)
                        .map(|k| {
                            let id = i64::from(j == k);
                            if k == i {
                                id - cartan[j][i]
                            } else {
                                id
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    (0..r)
        .map(|i| (0..r).map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn word_matrix(refl: &[Vec<Vec<i64>>], word: &[usize]) -> Vec<Vec<i64>> {
    let r = refl.len();
    let mut m: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    for &i in word {
        m = mat_mul(&m, &refl[i]);
    }
    m
}

/// The group elements as matrices, by closure under right multiplication.
pub fn group_matrices(cartan: &[Vec<i64>]) -> HashSet<Vec<Vec<i64>>> {
    let refl = reflection_matrices(cartan);
    let id = word_matrix(&refl, &[]);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for s in &refl {
            let n = mat_mul(&m, s);
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Every word of length `len` whose product is the same matrix as `target`,
/// by exhaustive enumeration.
pub fn brute_force_words(cartan: &[Vec<i64>], target: &[usize], len: usize) -> BTreeSet<Vec<usize>> {
    let refl = reflection_matrices(cartan);
    let goal = word_matrix(&refl, target);
    let r = cartan.len();
    let mut out = BTreeSet::new();
    let total = r.pow(len as u32);
    for code in 0..total {
        let mut word = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            word.push(c % r);
            c /= r;
        }
        if word_matrix(&refl, &word) == goal {
            out.insert(word);
        }
    }
    out
}

/// Length of the longest element: the largest length reached by a
/// breadth-first search from the identity.
pub fn longest_length(cartan: &[Vec<i64>]) -> usize {
    let refl = reflection_matrices(cartan);
    let id = word_matrix(&refl, &[]);
    let mut seen = HashSet::from([id.clone()]);
    let mut layer = vec![id];
    let mut depth = 0;
    loop {
        let mut next = Vec::new();
        for m in &layer {
            for s in &refl {
                let n = mat_mul(m, s);
                if seen.insert(n.clone()) {
                    next.push(n);
                }
            }
        }
        if next.is_empty() {
            return depth;
        }
        depth += 1;
        layer = next;
    }
}

/// Positive coroots in simple-coroot coordinates, as the positive part of
/// the orbit of the simple coroots under `s_j(c) = c - <α_j, c> α_j^∨`.
pub fn positive_coroots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(c) = queue.pop_front() {
        for j in 0..r {
            // <α_j, Σ c_i α_i^∨> = Σ c_i C[i][j]
            let pair: i64 = (0..r).map(|i| c[i] * cartan[i][j]).sum();
            let mut n = c.clone();
            n[j] -= pair;
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen.into_iter().filter(|c| c.iter().all(|&v| v >= 0)).collect()
}

/// `∏_{α>0} <λ+ρ, α^∨> / <ρ, α^∨>`.
pub fn weyl_dimension_product(cartan: &[Vec<i64>], lambda: &[i64]) -> i64 {
    let mut num = BigRational::one();
    for c in positive_coroots(cartan) {
        let top: i64 = c.iter().zip(lambda).map(|(ci, li)| ci * (li + 1)).sum();
        let bottom: i64 = c.iter().sum();
        num *= BigRational::new(top.into(), bottom.into());
    }
    assert!(num.is_integer());
    num.to_integer().try_into().unwrap()
}

/// Plain rational Gaussian elimination.
pub fn gauss_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn gauss_det(rows: &[Vec<BigRational>]) -> BigRational {
    let mut m = rows.to_vec();
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// A random `s`-invariant polynomial `h + s(h)` or `h · s(h)`.
pub fn random_s_invariant(rng: &mut ChaCha8Rng, d: &RootDatum, s: usize) -> LaurentPoly {
    let h = LaurentPoly::random(rng, d.rank(), 3, 3, 4);
    let sh = h.reflect(d, s);
    if rng.random_bool(0.5) {
        h + sh
    } else {
        h * sh
    }
}

/// A random `W`-invariant polynomial: a sum of orbit sums of monomials.
pub fn random_w_invariant(rng: &mut ChaCha8Rng, g: &WeylGroup) -> LaurentPoly {
    let r = g.rank();
    let mut out = LaurentPoly::zero(r);
    for _ in 0..rng.random_range(1..=2) {
        let m = LaurentPoly::random_monomial(rng, r, 2);
        let c = q(rng.random_range(-3..=3));
        for w in g.elements() {
            out += &m.weyl_act(w).unwrap().scalar_mul(&c);
        }
    }
    out
}

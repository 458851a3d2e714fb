//! Dense matrices over the Laurent ring and fraction-free elimination, both
//! over `R` and over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, SpecializationPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

impl MatrixError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::ShapeMismatch(_) => "matrix::ShapeMismatch",
            Self::Singular => "matrix::Singular",
            Self::Laurent(e) => e.code(),
        }
    }
}

type Result<T> = std::result::Result<T, MatrixError>;

/// Row-major `rows × cols` matrix of Laurent polynomials in `rank` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rank: usize,
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rank: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rank,
            rows,
            cols,
            data: vec![LaurentPoly::zero(rank); rows * cols],
        }
    }

    pub fn identity(rank: usize, n: usize) -> Self {
        let mut m = Self::zeros(rank, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(rank));
        }
        m
    }

    /// Scalar matrix `g · I`.
    pub fn scalar(g: &LaurentPoly, n: usize) -> Self {
        let mut m = Self::zeros(g.rank(), n, n);
        for i in 0..n {
            m.set(i, i, g.clone());
        }
        m
    }

    pub fn from_rows(rank: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::ShapeMismatch("ragged rows".into()));
        }
        if rows.iter().flatten().any(|p| p.rank() != rank) {
            return Err(LaurentError::RankMismatch {
                expected: rank,
                found: rows.iter().flatten().find(|p| p.rank() != rank).map_or(0, |p| p.rank()),
            }
            .into());
        }
        Ok(PolyMatrix {
            rank,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rank: usize, rows: usize, columns: Vec<Vec<LaurentPoly>>) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rank, rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column has wrong length");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rank_vars(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.rank, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * other.cols + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &PolyMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        Ok(out)
    }

    /// Multiply every entry by `g`.
    pub fn scale(&self, g: &LaurentPoly) -> PolyMatrix {
        PolyMatrix {
            rank: self.rank,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * g).collect(),
        }
    }

    /// Apply to a coordinate column.
    pub fn apply(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        if v.len() != self.cols {
            return Err(MatrixError::ShapeMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = LaurentPoly::zero(self.rank);
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn specialize(&self, p: &SpecializationPoint) -> Result<Vec<Vec<BigRational>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.specialize(p).map_err(MatrixError::from))
                    .collect()
            })
            .collect()
    }

    /// Fraction-free Gauss–Jordan elimination of `[A | I]`.
    ///
    /// Returns `(det A, A⁻¹ · det A)`, i.e. the determinant and the adjugate.
    /// Every division is exact by Sylvester's identity.
    pub fn det_and_adjugate(&self) -> Result<(LaurentPoly, PolyMatrix)> {
        if self.rows != self.cols {
            return Err(MatrixError::ShapeMismatch("matrix is not square".into()));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j { LaurentPoly::one(self.rank) } else { LaurentPoly::zero(self.rank) }
                }));
                row
            })
            .collect();
        let mut prev = LaurentPoly::one(self.rank);
        let mut negate = false;
        for k in 0..n {
            let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(MatrixError::Singular)?;
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            let pivot = m[k][k].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = m[i][k].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let v = &(&pivot * &m[i][j]) - &(&factor * &m[k][j]);
                    m[i][j] = if prev.is_one() { v } else { v.exact_divide(&prev)? };
                }
                m[i][k] = LaurentPoly::zero(self.rank);
            }
            prev = pivot;
        }
        // det(PA) = prev; the right block is det(PA)·A⁻¹.
        let mut adj = PolyMatrix::zeros(self.rank, n, n);
        for (i, row) in m.into_iter().enumerate() {
            for (j, v) in row.into_iter().skip(n).enumerate() {
                adj.set(i, j, if negate { -v } else { v });
            }
        }
        let det = if negate { -prev } else { prev };
        Ok((det, adj))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank over the rationals, by fraction-free (Bareiss) row echelon
/// elimination on the denominator-cleared integer matrix.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    bareiss_rank(&mut m)
}

/// Dimension of the right kernel `{v : A v = 0}` over the rationals.
pub fn rational_nullity(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    ncols - rational_rank(rows)
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`; there is no floating point in
//! the crate. Matrices are small and dense, so the routines favour clarity
//! over asymptotics but skip zero entries during elimination.

mod poly;

pub use poly::{eliminate_quadratics, Poly, SmallPolySystem, UPoly, Variety};

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact scalar of the ground field.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system has no solution")]
    Infeasible,
    #[error("{0} free parameters exceed the exact elimination limit of 2")]
    ParamOverflow(usize),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`. The result is always reduced with a positive
/// denominator.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form, the inverse of [`parse_rational`] on reduced input.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Kronecker product of two coordinate vectors, index `i * b.len() + j`.
pub fn kron(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    /// `cols` is needed to describe a matrix with zero rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(cols, data).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", format_vector(self.row(i)))?;
        }
        Ok(())
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub rank: usize,
    pub reduced: Matrix,
    pub pivot_cols: Vec<usize>,
}

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
/// Zero rows are kept at the bottom so `reduced` has the shape of `m`.
pub fn rref(m: &Matrix) -> RowEchelon {
    let mut rows = m.to_rows();
    let ncols = m.cols();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        let support: Vec<usize> = (c..ncols).filter(|&j| !rows[r][j].is_zero()).collect();
        for &j in &support {
            rows[r][j] *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] -= &factor * &pivot_row[j];
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let reduced = Matrix::from_rows(ncols, rows).expect("row lengths preserved");
    RowEchelon {
        rank: pivot_cols.len(),
        reduced,
        pivot_cols,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Canonical nullspace basis: one vector per free column in increasing
/// order, each scaled so that its first nonzero coordinate is 1.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let ech = rref(m);
    let ncols = m.cols();
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivot_cols {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &p) in ech.pivot_cols.iter().enumerate() {
            v[p] = -ech.reduced[(r, free)].clone();
        }
        normalize_leading(&mut v);
        basis.push(v);
    }
    basis
}

fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x /= &lead;
        }
    }
}

/// Exact description of `{x : m x = b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub particular: Vec<Rational>,
    pub directions: Vec<Vec<Rational>>,
}

impl AffineSolutionSet {
    pub fn param_count(&self) -> usize {
        self.directions.len()
    }

    /// `particular + Σ params[i] · directions[i]`.
    pub fn point(&self, params: &[Rational]) -> Vec<Rational> {
        let mut x = self.particular.clone();
        for (t, d) in params.iter().zip(&self.directions) {
            for (xi, di) in x.iter_mut().zip(d) {
                *xi += t * di;
            }
        }
        x
    }
}

pub fn solve_affine(m: &Matrix, b: &[Rational]) -> Result<AffineSolutionSet, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let n = m.cols();
    let augmented: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let ech = rref(&Matrix::from_rows(n + 1, augmented)?);
    if ech.pivot_cols.last() == Some(&n) {
        return Err(LinalgError::Infeasible);
    }
    let mut particular = vec![Rational::zero(); n];
    for (r, &p) in ech.pivot_cols.iter().enumerate() {
        particular[p] = ech.reduced[(r, n)].clone();
    }
    Ok(AffineSolutionSet {
        particular,
        directions: nullspace(m),
    })
}

/// True iff `v` lies in the span of `span`.
pub fn subspace_contains(span: &[Vec<Rational>], v: &[Rational]) -> bool {
    let cols = v.len();
    let base = Matrix::from_rows(cols, span.to_vec()).expect("span vectors share a length");
    let mut extended = span.to_vec();
    extended.push(v.to_vec());
    let ext = Matrix::from_rows(cols, extended).expect("span vectors share a length");
    rank(&base) == rank(&ext)
}

//! Dense integer matrices with fraction-free (Bareiss) elimination.

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;

/// Row-major dense matrix over an exact integer scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Outcome of a forward elimination pass.
struct Echelon<T> {
    rank: usize,
    swaps: usize,
    /// Last pivot (the leading principal minor of order `rank`).
    last_pivot: T,
}

impl<T: ExactScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors. All rows must have equal length;
    /// an empty outer vector gives a `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch(cols, bad.len()));
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows[r], cols[c])].clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Adds column `src` to column `dst`.
    pub fn add_column(&mut self, src: usize, dst: usize) {
        for r in 0..self.rows {
            let v = self[(r, src)].clone();
            self[(r, dst)] = self[(r, dst)].clone() + v;
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch(self.cols, v.len()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Block-diagonal matrix with the given blocks along the diagonal.
    pub fn block_diagonal(blocks: &[Matrix<T>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn try_map<U>(&self, f: impl FnMut(&T) -> Option<U>) -> Option<Matrix<U>> {
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Option<Vec<U>>>()?,
        })
    }

    /// Fraction-free forward elimination in place. Pivots are the first
    /// nonzero entry of each column, scanning top-down. Every intermediate
    /// entry is a minor of the input, so each division is exact.
    ///
    /// Returns `None` if the scalar type overflowed.
    fn bareiss(&mut self) -> Option<Echelon<T>> {
        let mut prev = T::one();
        let mut rank = 0;
        let mut swaps = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot_row) = (rank..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if pivot_row != rank {
                self.swap_rows(pivot_row, rank);
                swaps += 1;
            }
            let pivot = self[(rank, col)].clone();
            for r in rank + 1..self.rows {
                let factor = self[(r, col)].clone();
                for c in col + 1..self.cols {
                    self[(r, c)] =
                        T::cross_div(&pivot, &self[(r, c)], &factor, &self[(rank, c)], &prev)?;
                }
                self[(r, col)] = T::zero();
            }
            prev = pivot;
            rank += 1;
        }
        Some(Echelon {
            rank,
            swaps,
            last_pivot: prev,
        })
    }

    /// Exact rank over the rationals, computed in `T`. `None` on overflow.
    pub fn checked_rank(&self) -> Option<usize> {
        let mut work = self.clone();
        work.bareiss().map(|e| e.rank)
    }

    /// Exact determinant computed in `T`. `None` on overflow.
    pub fn checked_determinant(&self) -> Result<Option<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut work = self.clone();
        let Some(ech) = work.bareiss() else {
            return Ok(None);
        };
        if ech.rank < self.rows {
            return Ok(Some(T::zero()));
        }
        let det = if ech.swaps % 2 == 1 {
            -ech.last_pivot
        } else {
            ech.last_pivot
        };
        Ok(Some(det))
    }
}

impl Matrix<BigInt> {
    /// Exact rank. Runs in `i128` when the entries fit and retries with
    /// arbitrary precision if any intermediate minor overflows.
    pub fn rank(&self) -> usize {
        if let Some(small) = self.try_map(i128::from_bigint) {
            if let Some(r) = small.checked_rank() {
                return r;
            }
        }
        self.checked_rank()
            .expect("bigint elimination cannot overflow")
    }

    /// Exact determinant; the `0 x 0` determinant is 1.
    pub fn determinant(&self) -> Result<BigInt> {
        if let Some(small) = self.try_map(i128::from_bigint) {
            if let Some(d) = small.checked_determinant()? {
                return Ok(BigInt::from(d));
            }
        }
        Ok(self
            .checked_determinant()?
            .expect("bigint elimination cannot overflow"))
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn has_maximal_rank(&self) -> bool {
        self.rank() == self.rows.min(self.cols)
    }
}

/// Serialized as a list of rows.
impl Serialize for Matrix<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<crate::serde_int::Int<'_>> =
                self.row(r).iter().map(crate::serde_int::Int).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Binomial coefficient with the vanishing convention: zero unless
/// `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::InvalidParameter(format!(
            "binomial with n = {n} < 0"
        )));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Ok(acc)
}

/// `d! / prod(parts!)` when the parts are a composition of `d`, zero otherwise.
pub fn multinomial(d: i64, parts: &[i64]) -> BigInt {
    if d < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != d {
        return BigInt::zero();
    }
    let mut remaining = d;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, p).expect("remaining is nonnegative");
        remaining -= p;
    }
    acc
}

//! Maximal-rank certificates for `x (x+y)^d : M_i -> M_(i+d)` on
//! `M = (I + J)/J`, `J = (x^a, y^b)`, without elimination.
//!
//! The map is written as a transposed matrix of binomial coefficients
//! whose rows are degree-`i` monomials and whose columns are the degree
//! `i + d` monomials outside `J`. Row `n` of the restricted matrix reads
//! `C(d, k_n), C(d, k_n + 1), ..., C(d, k_n + c - 1)` for strictly
//! decreasing offsets `k_n`. Repeated Pascal column additions turn it into
//! `C(d + c - j, k_n + c - 1)`, whose leading square block, read backwards,
//! is a binomial matrix of two ascending sequences. A nonzero diagonal there
//! makes its determinant positive, so the matrix has maximal rank.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lgv::{binomial_matrix, lgv_positivity, AscendingSequence, Positivity};
use crate::linalg::binomial;
use crate::monomial::Monomial;
use crate::ExactMatrix;
use num_traits::Zero;
use serde::Serialize;

/// Transposed matrix of `x (x+y)^d : [S/J]_i -> [S/J]_(i+d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClMatrix {
    pub a: u32,
    pub b: u32,
    pub i: u32,
    pub d: u32,
    /// Columns trimmed on the left (`x`-exponent at least `a`).
    pub m1: u32,
    /// Columns trimmed on the right (`y`-exponent at least `b`).
    pub m2: u32,
    pub matrix: ExactMatrix,
    /// `x^(i-j) y^j` outside `J`, in increasing `j`.
    pub row_labels: Vec<Monomial>,
    /// `x^(i+d-k) y^k` for `m1 <= k <= i+d-m2`.
    pub col_labels: Vec<Monomial>,
}

/// Builds the matrix for `S/(x^a, y^b)` in source degree `i`, power `d`.
/// Requires `d >= 1` and `i + d <= a + b - 2`.
pub fn cl_matrix(a: u32, b: u32, i: u32, d: u32) -> Result<ClMatrix> {
    if a == 0 || b == 0 || d == 0 || i + d > (a + b).saturating_sub(2) {
        return Err(Error::InvalidParameter(format!(
            "need d >= 1 and i + d <= a + b - 2; got a={a}, b={b}, i={i}, d={d}"
        )));
    }
    let top = i + d;
    let m1 = (top + 1).saturating_sub(a);
    let m2 = (top + 1).saturating_sub(b);
    let row_js: Vec<u32> = (0..=i).filter(|&j| i - j < a && j < b).collect();
    let col_ks: Vec<u32> = (m1..=top - m2).collect();
    let mut matrix = ExactMatrix::zeros(row_js.len(), col_ks.len());
    for (r, &j) in row_js.iter().enumerate() {
        for (c, &k) in col_ks.iter().enumerate() {
            matrix[(r, c)] = binomial(d as i64, k as i64 - j as i64)?;
        }
    }
    let mono = |xe: u32, ye: u32| Monomial::new(vec![xe, ye]).expect("two variables");
    let row_labels = row_js.iter().map(|&j| mono(i - j, j)).collect();
    let col_labels = col_ks.iter().map(|&k| mono(top - k, k)).collect();
    let out = ClMatrix {
        a,
        b,
        i,
        d,
        m1,
        m2,
        matrix,
        row_labels,
        col_labels,
    };
    debug_assert!((0..out.matrix.rows()).all(|r| out.matrix.row(r).iter().any(|v| !v.is_zero())));
    Ok(out)
}

/// `B`: the rows of a [`ClMatrix`] whose labels lie in `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedMatrix {
    pub d: u32,
    pub matrix: ExactMatrix,
    pub row_labels: Vec<Monomial>,
    pub col_labels: Vec<Monomial>,
    /// `k_n`, strictly decreasing: row `n` starts with `C(d, k_n)`.
    pub offsets: Vec<i64>,
}

pub fn restrict_rows(cl: &ClMatrix, ideal: &MonomialIdeal) -> Result<RestrictedMatrix> {
    if ideal.nvars() != 2 {
        return Err(Error::AmbientMismatch {
            expected: 2,
            found: ideal.nvars(),
        });
    }
    let keep: Vec<usize> = (0..cl.row_labels.len())
        .filter(|&r| ideal.contains_unchecked(&cl.row_labels[r]))
        .collect();
    let cols: Vec<usize> = (0..cl.col_labels.len()).collect();
    let offsets = keep
        .iter()
        .map(|&r| cl.m1 as i64 - cl.row_labels[r].exponent(1) as i64)
        .collect();
    Ok(RestrictedMatrix {
        d: cl.d,
        matrix: cl.matrix.submatrix(&keep, &cols),
        row_labels: keep.iter().map(|&r| cl.row_labels[r].clone()).collect(),
        col_labels: cl.col_labels.clone(),
        offsets,
    })
}

/// Applies the column additions literally: for each `s = 2..=c`, add column
/// `s` to column `s - 1`, then column `s - 1` to `s - 2`, down to column 1.
pub fn pascal_column_transform(b: &ExactMatrix) -> ExactMatrix {
    let mut out = b.clone();
    for s in 1..out.cols() {
        for col in (0..s).rev() {
            out.add_column(col + 1, col);
        }
    }
    out
}

/// Entry `(n, j) = C(d + c - j, k_n + c - 1)` for `j = 1..=c`.
pub fn pascal_closed_form(d: u32, offsets: &[i64], cols: usize) -> Result<ExactMatrix> {
    let c = cols as i64;
    let mut out = ExactMatrix::zeros(offsets.len(), cols);
    for (n, &k) in offsets.iter().enumerate() {
        for j in 1..=c {
            out[(n, j as usize - 1)] = binomial(d as i64 + c - j, k + c - 1)?;
        }
    }
    Ok(out)
}

/// True iff the leftmost-uppermost maximal square block of `B'` has a
/// nonzero main diagonal.
pub fn lgv_rank_certificate(b_prime: &ExactMatrix) -> bool {
    let m = b_prime.rows().min(b_prime.cols());
    (0..m).all(|n| !b_prime[(n, n)].is_zero())
}

/// A certificate together with the checks that tie it to exact rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero diagonal of the leading square block of `B'`.
    pub certified: bool,
    /// `B'` agrees with the closed form `C(d + c - j, k_n + c - 1)`.
    pub closed_form_matches: bool,
    /// The reversed leading block equals `binomial_matrix(a, b)` for the
    /// ascending sequences below.
    pub upper: Vec<i64>,
    pub lower: Vec<i64>,
    pub block_matches: bool,
    pub positivity: Option<Positivity>,
    /// `d >= k_n` and `k_n + c - 1 >= 0` for every row.
    pub offsets_in_range: bool,
    pub rank: usize,
}

impl Certificate {
    pub fn maximal_rank(&self) -> bool {
        self.rank == self.rows.min(self.cols)
    }

    /// Every internal cross-check passed and the verdict matches elimination.
    pub fn sound(&self) -> bool {
        self.closed_form_matches
            && self.block_matches
            && self.offsets_in_range
            && (self.positivity == Some(Positivity::Positive)) == self.certified
            && (!self.certified || self.maximal_rank())
    }
}

pub fn certify(b: &RestrictedMatrix) -> Result<Certificate> {
    let (rows, cols) = (b.matrix.rows(), b.matrix.cols());
    let b_prime = pascal_column_transform(&b.matrix);
    let closed_form_matches = b_prime == pascal_closed_form(b.d, &b.offsets, cols)?;
    let certified = lgv_rank_certificate(&b_prime);
    let c = cols as i64;
    let d = b.d as i64;
    let offsets_in_range = b.offsets.iter().all(|&k| d >= k && k + c > 0);

    let m = rows.min(cols);
    // Column j (1-based) of B' has upper index d + c - j, row n has lower
    // index k_n + c - 1; reversing both gives ascending sequences.
    let upper: Vec<i64> = (1..=m as i64).rev().map(|j| d + c - j).collect();
    let lower: Vec<i64> = b.offsets[..m].iter().rev().map(|&k| k + c - 1).collect();
    let (block_matches, positivity) = if m == 0 {
        (true, None)
    } else {
        let ua = AscendingSequence::new(upper.clone())?;
        let lb = AscendingSequence::new(lower.clone())?;
        let idx: Vec<usize> = (0..m).collect();
        let block = b_prime.submatrix(&idx, &idx);
        let rev: Vec<usize> = (0..m).rev().collect();
        let reversed_t = block.transpose().submatrix(&rev, &rev);
        (
            reversed_t == binomial_matrix(&ua, &lb)?,
            Some(lgv_positivity(&ua, &lb)?.positivity),
        )
    };
    Ok(Certificate {
        rows,
        cols,
        certified,
        closed_form_matches,
        upper,
        lower,
        block_matches,
        positivity,
        offsets_in_range,
        rank: b.matrix.rank(),
    })
}

//! Binomial-coefficient matrices `(C(a_i, b_j))` for strictly increasing
//! `a` and `b`, their positivity test, and a brute-force count of
//! non-intersecting lattice path families used as an independent oracle
//! for their determinants.
//!
//! Path model: path `j` runs from `(-b_j, b_j)` to `(0, a_j)` with unit
//! East and North steps, so there are `C(a_i, b_j)` paths from start `j` to
//! end `i`. Families are non-intersecting when no two paths share a lattice
//! point.

use crate::error::{Error, Result};
use crate::linalg::binomial;
use crate::ExactMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::HashSet;

/// Upper bound on `sum a_i` for the path enumeration.
pub const PATH_ENUMERATION_CAP: i64 = 24;

/// A strictly increasing integer sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AscendingSequence(Vec<i64>);

impl AscendingSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAscending);
        }
        Ok(AscendingSequence(values))
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_pair(a: &AscendingSequence, b: &AscendingSequence) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(Error::InvalidParameter("sequences must be nonempty".into()));
    }
    if a.values().iter().any(|&v| v < 0) {
        return Err(Error::InvalidParameter(
            "upper binomial indices must be nonnegative".into(),
        ));
    }
    Ok(())
}

/// The `m x m` matrix with entry `(i, j) = C(a_i, b_j)`.
pub fn binomial_matrix(a: &AscendingSequence, b: &AscendingSequence) -> Result<ExactMatrix> {
    check_pair(a, b)?;
    let m = a.len();
    let mut mat = ExactMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            mat[(i, j)] = binomial(a.values()[i], b.values()[j])?;
        }
    }
    Ok(mat)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Positivity {
    Positive,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LgvCheck {
    /// Prediction from the diagonal: positive iff every `C(a_i, b_i) != 0`.
    pub positivity: Positivity,
    #[serde(with = "crate::serde_int")]
    pub determinant: BigInt,
}

impl LgvCheck {
    /// The determinant is nonnegative and its sign matches the prediction.
    pub fn consistent(&self) -> bool {
        !self.determinant.is_negative()
            && match self.positivity {
                Positivity::Positive => self.determinant.is_positive(),
                Positivity::Zero => self.determinant.is_zero(),
            }
    }
}

/// Diagonal positivity test, returned with the exact determinant it predicts
/// the sign of.
pub fn lgv_positivity(a: &AscendingSequence, b: &AscendingSequence) -> Result<LgvCheck> {
    let mat = binomial_matrix(a, b)?;
    let diagonal_nonzero = a
        .values()
        .iter()
        .zip(b.values())
        .all(|(&ai, &bi)| 0 <= bi && bi <= ai);
    Ok(LgvCheck {
        positivity: if diagonal_nonzero {
            Positivity::Positive
        } else {
            Positivity::Zero
        },
        determinant: mat.determinant()?,
    })
}

type Point = (i64, i64);

/// Every monotone path from `(-b, b)` to `(0, a)` as its vertex list.
fn all_paths(a: i64, b: i64) -> Vec<Vec<Point>> {
    fn walk(at: Point, end: Point, path: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if at == end {
            out.push(path.clone());
            return;
        }
        for next in [(at.0 + 1, at.1), (at.0, at.1 + 1)] {
            if next.0 <= end.0 && next.1 <= end.1 {
                path.push(next);
                walk(next, end, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if a >= b {
        let start = (-b, b);
        walk(start, (0, a), &mut vec![start], &mut out);
    }
    out
}

/// Number of vertex-disjoint families `(P_1, ..., P_m)` with `P_j` running
/// from `(-b_j, b_j)` to `(0, a_j)`, by exhaustive enumeration.
pub fn count_nonintersecting(a: &AscendingSequence, b: &AscendingSequence) -> Result<BigInt> {
    check_pair(a, b)?;
    if b.values().iter().any(|&v| v < 0) {
        return Err(Error::InvalidParameter("path starts need b_j >= 0".into()));
    }
    let total: i64 = a.values().iter().sum();
    if total > PATH_ENUMERATION_CAP {
        return Err(Error::LimitExceeded(format!(
            "sum of a is {total}, cap is {PATH_ENUMERATION_CAP}"
        )));
    }
    let paths: Vec<Vec<Vec<Point>>> = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(&ai, &bj)| all_paths(ai, bj))
        .collect();

    fn extend(j: usize, paths: &[Vec<Vec<Point>>], used: &mut HashSet<Point>) -> u64 {
        if j == paths.len() {
            return 1;
        }
        let mut count = 0;
        for p in &paths[j] {
            if p.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(p.iter().copied());
            count += extend(j + 1, paths, used);
            for v in p {
                used.remove(v);
            }
        }
        count
    }
    Ok(BigInt::from(extend(0, &paths, &mut HashSet::new())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> AscendingSequence {
        AscendingSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(
            binomial_matrix(&seq(&[1, 2]), &seq(&[0, 1])).unwrap(),
            ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 2]]).unwrap()
        );
        assert_eq!(
            binomial_matrix(&seq(&[7]), &seq(&[3])).unwrap(),
            ExactMatrix::from_i64_rows(&[&[35]]).unwrap()
        );
        assert_eq!(
            binomial_matrix(&seq(&[1, 3]), &seq(&[2, 3])).unwrap(),
            ExactMatrix::from_i64_rows(&[&[0, 0], &[3, 1]]).unwrap()
        );
    }

    #[test]
    fn input_validation() {
        assert_eq!(AscendingSequence::new(vec![1, 1]), Err(Error::NotAscending));
        assert!(matches!(
            binomial_matrix(&seq(&[1, 2]), &seq(&[0])),
            Err(Error::LengthMismatch(2, 1))
        ));
        assert!(count_nonintersecting(&seq(&[3]), &seq(&[-1])).is_err());
        assert!(matches!(
            count_nonintersecting(&seq(&[7, 8, 10]), &seq(&[0, 1, 2])),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn positivity_examples() {
        let p = lgv_positivity(&seq(&[1, 2]), &seq(&[0, 1])).unwrap();
        assert_eq!(p.positivity, Positivity::Positive);
        assert_eq!(p.determinant, BigInt::from(1));
        let z = lgv_positivity(&seq(&[1, 3]), &seq(&[2, 3])).unwrap();
        assert_eq!(z.positivity, Positivity::Zero);
        assert!(z.determinant.is_zero());
        let z = lgv_positivity(&seq(&[5]), &seq(&[6])).unwrap();
        assert_eq!(z.positivity, Positivity::Zero);
        assert!(p.consistent() && z.consistent());
        // negative lower indices follow the vanishing convention
        let neg = lgv_positivity(&seq(&[2, 3]), &seq(&[-1, 1])).unwrap();
        assert_eq!(neg.positivity, Positivity::Zero);
        assert!(neg.consistent());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(
            count_nonintersecting(&seq(&[1, 2]), &seq(&[0, 1])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            count_nonintersecting(&seq(&[2, 3]), &seq(&[0, 1])).unwrap(),
            BigInt::from(1)
        );
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(
                    count_nonintersecting(&seq(&[n]), &seq(&[k])).unwrap(),
                    binomial(n, k).unwrap()
                );
            }
        }
        assert!(count_nonintersecting(&seq(&[1]), &seq(&[2]))
            .unwrap()
            .is_zero());
    }
}

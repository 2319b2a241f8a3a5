use lefschetz::{binomial, ExactMatrix, Matrix};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Determinant by expansion over all permutations.
fn permutation_det(m: &ExactMatrix) -> BigInt {
    fn rec(
        m: &ExactMatrix,
        row: usize,
        used: &mut Vec<bool>,
        sign: i32,
        out: &mut BigInt,
        acc: BigInt,
    ) {
        let n = m.rows();
        if row == n {
            *out += if sign > 0 { acc } else { -acc };
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            // inversions contributed by placing column c at this row
            let inv = used[c + 1..].iter().filter(|&&u| u).count() as i32;
            used[c] = true;
            let s = if inv % 2 == 0 { sign } else { -sign };
            rec(m, row + 1, used, s, out, &acc * &m[(row, c)]);
            used[c] = false;
        }
    }
    let mut out = BigInt::zero();
    rec(m, 0, &mut vec![false; m.cols()], 1, &mut out, BigInt::one());
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest k with a nonzero k x k minor.
fn minor_rank(m: &ExactMatrix) -> usize {
    let max = m.rows().min(m.cols());
    (1..=max)
        .rev()
        .find(|&k| {
            subsets(m.rows(), k).iter().any(|rs| {
                subsets(m.cols(), k)
                    .iter()
                    .any(|cs| !permutation_det(&m.submatrix(rs, cs)).is_zero())
            })
        })
        .unwrap_or(0)
}

fn matrix(max_dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = ExactMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(lo..=hi, r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

fn square(max_dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = ExactMatrix> {
    (0..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(lo..=hi, n * n)
            .prop_map(move |v| Matrix::from_fn(n, n, |i, j| BigInt::from(v[i * n + j])))
    })
}

#[test]
fn worked_examples_against_oracles() {
    let m = ExactMatrix::from_i64_rows(&[&[1, 2, 1], &[1, 3, 3], &[1, 4, 6]]).unwrap();
    assert_eq!(permutation_det(&m), BigInt::from(1));
    assert_eq!(m.determinant().unwrap(), BigInt::from(1));
    assert_eq!(m.rank(), 3);
    let m = ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 2]]).unwrap();
    assert_eq!(m.determinant().unwrap(), BigInt::from(2 - 1));
    assert_eq!(
        ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])
            .unwrap()
            .rank(),
        1
    );
    assert_eq!(
        ExactMatrix::zeros(0, 0).determinant().unwrap(),
        BigInt::one()
    );
    assert_eq!(ExactMatrix::zeros(0, 5).rank(), 0);
    assert_eq!(ExactMatrix::zeros(3, 0).rank(), 0);
}

#[test]
fn large_binomial_matrix_is_exact() {
    // Pascal-type matrix with huge entries: determinant 1 by LU with unit factors
    let n = 30;
    let m = Matrix::from_fn(n, n, |i, j| {
        binomial((i + j) as i64 + 40, j as i64).unwrap()
    });
    assert_eq!(m.rank(), n);
    assert_eq!(m.determinant().unwrap(), BigInt::one());
}

proptest! {
    #[test]
    fn rank_of_transpose(m in matrix(8, -4, 4)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= m.rows().min(m.cols()));
    }

    #[test]
    fn determinant_matches_permutation_expansion(m in square(4, -5, 5)) {
        prop_assert_eq!(m.determinant().unwrap(), permutation_det(&m));
    }

    #[test]
    fn rank_matches_minor_oracle(m in matrix(4, -3, 3)) {
        prop_assert_eq!(m.rank(), minor_rank(&m));
    }

    #[test]
    fn rank_invariant_under_permutations_and_scaling(
        m in matrix(6, -5, 5),
        seed in any::<u64>(),
        factor in prop::sample::select(vec![-7i64, -2, -1, 2, 3, 11]),
    ) {
        let (r, c) = (m.rows(), m.cols());
        let mut rows: Vec<usize> = (0..r).collect();
        let mut cols: Vec<usize> = (0..c).collect();
        rows.rotate_left((seed as usize) % r.max(1));
        cols.reverse();
        cols.rotate_left((seed as usize >> 8) % c.max(1));
        let permuted = m.submatrix(&rows, &cols);
        prop_assert_eq!(permuted.rank(), m.rank());
        if r > 0 {
            let k = (seed as usize >> 16) % r;
            let scaled = Matrix::from_fn(r, c, |i, j| {
                if i == k { &m[(i, j)] * factor } else { m[(i, j)].clone() }
            });
            prop_assert_eq!(scaled.rank(), m.rank());
        }
    }

    #[test]
    fn i64_and_bigint_agree(m in square(5, -9, 9)) {
        let small = m.map(|v| i64::try_from(v).unwrap());
        prop_assert_eq!(small.checked_rank(), Some(m.rank()));
        let det = small.checked_determinant().unwrap().map(BigInt::from);
        prop_assert_eq!(det, Some(m.determinant().unwrap()));
    }
}

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Counts of positive and negative squares, and the rank of the radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Sylvester inertia of a symmetric integer matrix by congruence
/// diagonalisation over ℚ.
///
/// When every remaining diagonal entry vanishes but some off-diagonal entry
/// `a[k][j]` does not, row and column `j` are added to `k`, which makes the
/// new pivot `2·a[k][j]`.
pub(crate) fn inertia(gram: &IntMatrix) -> Inertia {
    let n = gram.rows();
    let mut a = gram.to_rational();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                let one = BigRational::one();
                a.add_row_multiple(k, j, &one);
                a.add_col_multiple(k, j, &one);
            } else {
                // row k is entirely zero in the active block
                out.zero += 1;
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] / &pivot);
            a.add_row_multiple(i, k, &f);
            a.add_col_multiple(i, k, &f);
        }
        if pivot.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
    }
    out
}

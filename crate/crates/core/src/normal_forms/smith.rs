use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`, `dᵢ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal of `D` (length `min(rows, cols)`), zeros included.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().iter().filter(|d| !d.is_zero()).count()
    }
}

// Nonzero entry of least absolute value in the trailing submatrix, ties going
// to the smallest (row, col) in row-major order.
fn min_pivot(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (nr, nc) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(nr);
    let mut v = IntMatrix::identity(nc);

    for k in 0..nr.min(nc) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, k) else {
                return SmithDecomposition { u, v, d };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..nr {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -d[(i, k)].div_floor(&d[(k, k)]);
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                clean &= d[(i, k)].is_zero();
            }
            for j in k + 1..nc {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -d[(k, j)].div_floor(&d[(k, k)]);
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                clean &= d[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // Row and column are clear; the pivot must also divide the rest.
            let pivot = d[(k, k)].clone();
            let offender = (k + 1..nr).find(|&i| (k + 1..nc).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            if let Some(i) = offender {
                let one = BigInt::from(1);
                d.add_row_multiple(k, i, &one);
                u.add_row_multiple(k, i, &one);
                continue;
            }
            if pivot.is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }
            break;
        }
    }
    SmithDecomposition { u, v, d }
}

/// Basis (as columns) of the integer kernel `{x : A x = 0}`. The kernel of an
/// integer matrix is saturated, and the returned basis together with the
/// remaining columns of the Smith transform `V` is a basis of `Z^n`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let cols: Vec<usize> = (r..a.cols()).collect();
    snf.v.select_columns(&cols)
}

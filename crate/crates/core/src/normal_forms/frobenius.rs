use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Congruence normal form of an alternating integer matrix: `c = Uᵀ·D·U`,
/// where `D` carries the blocks `[[0, dᵢ], [−dᵢ, 0]]` down the diagonal
/// followed by zeros, with `0 < d₁ | d₂ | … | dₛ` and `rank(c) = 2s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewFrobeniusDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub divisors: Vec<BigInt>,
}

impl SkewFrobeniusDecomposition {
    pub fn rank(&self) -> usize {
        2 * self.divisors.len()
    }
}

// Tracks P with Pᵀ·c·P = M and its inverse U = P⁻¹ through simultaneous
// row and column operations.
struct Congruence {
    m: IntMatrix,
    p: IntMatrix,
    u: IntMatrix,
}

impl Congruence {
    /// basis[j] += k · basis[i]
    fn add(&mut self, j: usize, i: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        self.m.add_col_multiple(j, i, k);
        self.m.add_row_multiple(j, i, k);
        self.p.add_col_multiple(j, i, k);
        self.u.add_row_multiple(i, j, &-k);
    }

    fn swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.m.swap_cols(i, j);
        self.m.swap_rows(i, j);
        self.p.swap_cols(i, j);
        self.u.swap_rows(i, j);
    }

    fn negate(&mut self, i: usize) {
        self.m.negate_col(i);
        self.m.negate_row(i);
        self.p.negate_col(i);
        self.u.negate_row(i);
    }
}

/// Greedy hyperbolic-pair extraction: bring the entry of least absolute value
/// to position `(k, k+1)`, clear its two rows and columns by congruence, and
/// pull in any trailing entry it fails to divide so that the divisor chain
/// comes out already ordered.
pub fn skew_frobenius(c: &IntMatrix) -> Result<SkewFrobeniusDecomposition> {
    if !c.is_skew() {
        return Err(Error::NotSkew);
    }
    let n = c.rows();
    let mut st = Congruence { m: c.clone(), p: IntMatrix::identity(n), u: IntMatrix::identity(n) };
    let mut divisors = Vec::new();
    let mut k = 0;

    'blocks: while k + 1 < n {
        loop {
            let mut best: Option<(usize, usize, BigInt)> = None;
            for i in k..n {
                for j in i + 1..n {
                    let e = &st.m[(i, j)];
                    if !e.is_zero() && best.as_ref().is_none_or(|(_, _, b)| e.abs() < *b) {
                        best = Some((i, j, e.abs()));
                    }
                }
            }
            let Some((i, j, _)) = best else {
                break 'blocks;
            };
            st.swap(k, i);
            let j = if j == k { i } else { j };
            st.swap(k + 1, j);
            if st.m[(k, k + 1)].is_negative() {
                st.negate(k + 1);
            }

            let d = st.m[(k, k + 1)].clone();
            let mut clean = true;
            for j in k + 2..n {
                // M[k][j] -= q·d via basis[j] -= q·basis[k+1]
                let q = st.m[(k, j)].div_floor(&d);
                st.add(j, k + 1, &-q);
                // M[k+1][j] -= q·(−d) via basis[j] -= q·basis[k]
                let q = st.m[(k + 1, j)].div_floor(&-&d);
                st.add(j, k, &-q);
                clean &= st.m[(k, j)].is_zero() && st.m[(k + 1, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (k + 2..n).find(|&i| (k + 2..n).any(|j| !st.m[(i, j)].is_multiple_of(&d)));
            if let Some(i) = offender {
                st.add(k, i, &BigInt::one());
                continue;
            }
            divisors.push(d);
            k += 2;
            break;
        }
    }

    debug_assert_eq!(&(&st.p.transpose() * c) * &st.p, st.m);
    Ok(SkewFrobeniusDecomposition { u: st.u, d: st.m, divisors })
}

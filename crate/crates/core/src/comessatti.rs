//! Involutions of `Z^n`: eigenlattices, the Comessatti character, and a
//! unimodular basis in which the involution becomes
//! `diag(I_{s₊−λ}, −I_{s₋−λ}, λ × [[0,1],[1,0]])`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{is_involution, IntMatrix};
use crate::normal_forms::{kernel_basis, smith_normal_form};

/// An involution in `GL(n, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlInvolution {
    matrix: IntMatrix,
}

impl GlInvolution {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "an involution needs a nonempty square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !is_involution(&matrix) {
            return Err(Error::NotInvolution);
        }
        Ok(GlInvolution { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }
}

/// Bases (as columns) of `M₊ = ker(S − Id)` and `M₋ = ker(S + Id)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenLattices {
    pub plus: IntMatrix,
    pub minus: IntMatrix,
    pub s_plus: usize,
    pub s_minus: usize,
}

pub fn eigen_lattices(s: &GlInvolution) -> EigenLattices {
    let id = IntMatrix::identity(s.dim());
    let plus = kernel_basis(&s.matrix.sub(&id).expect("square"));
    let minus = kernel_basis(&s.matrix.add(&id).expect("square"));
    let (s_plus, s_minus) = (plus.cols(), minus.cols());
    EigenLattices { plus, minus, s_plus, s_minus }
}

/// `λ = log₂ [M : M₊ ⊕ M₋]`, the index read off as `|det|` of the stacked bases.
pub fn comessatti_character(s: &GlInvolution) -> Result<usize> {
    let e = eigen_lattices(s);
    let stacked = IntMatrix::hstack([&e.plus, &e.minus])?;
    let index = stacked.determinant()?.abs();
    let bits = index.bits();
    if index.is_zero() || index != BigInt::one() << (bits - 1) {
        return Err(Error::InternalVerificationFailure(format!(
            "eigenlattice index {index} is not a power of two"
        )));
    }
    Ok((bits - 1) as usize)
}

/// The matrix `diag(I_{plus}, −I_{minus}, swaps × [[0,1],[1,0]])`.
pub fn comessatti_matrix(plus: usize, minus: usize, swaps: usize) -> IntMatrix {
    let n = plus + minus + 2 * swaps;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..plus {
        m[(i, i)] = BigInt::one();
    }
    for i in plus..plus + minus {
        m[(i, i)] = -BigInt::one();
    }
    for k in 0..swaps {
        let i = plus + minus + 2 * k;
        m[(i, i + 1)] = BigInt::one();
        m[(i + 1, i)] = BigInt::one();
    }
    m
}

/// If `m` already has the shape `diag(I_r, −I_s, l swap blocks)`, returns `(r, s, l)`.
pub fn as_comessatti_form(m: &IntMatrix) -> Option<(usize, usize, usize)> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let r = (0..n).take_while(|&i| m[(i, i)].is_one()).count();
    let s = (r..n).take_while(|&i| m[(i, i)] == -BigInt::one()).count();
    if (n - r - s) % 2 != 0 {
        return None;
    }
    let l = (n - r - s) / 2;
    (comessatti_matrix(r, s, l) == *m).then_some((r, s, l))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComessattiDecomposition {
    /// Unimodular basis change with `B⁻¹·S·B = canonical`.
    pub basis: IntMatrix,
    pub s_plus: usize,
    pub s_minus: usize,
    pub lambda: usize,
    pub canonical: IntMatrix,
}

/// Computes a unimodular `B` with `B⁻¹·S·B` in Comessatti form.
///
/// Extending a basis of `M₊` to a basis of `Z^n` puts `S` in the shape
/// `[[I, W], [0, −I]]`. Smith reduction of `W` and a translation of the
/// complement by multiples of `M₊` reduce `W` to `diag(1, …, 1, 0, …)`; each
/// surviving 1 pairs a `+1` vector `m` with a complement vector `z` such that
/// `z ↦ m − z`, and `(z, m − z)` is a swapped pair.
pub fn comessatti_canonicalize(s: &GlInvolution) -> Result<ComessattiDecomposition> {
    let n = s.dim();
    if let Some((r, m, l)) = as_comessatti_form(&s.matrix) {
        return Ok(ComessattiDecomposition {
            basis: IntMatrix::identity(n),
            s_plus: r + l,
            s_minus: m + l,
            lambda: l,
            canonical: s.matrix.clone(),
        });
    }

    // Basis of Z^n whose leading columns span M₊.
    let id = IntMatrix::identity(n);
    let snf = smith_normal_form(&s.matrix.sub(&id)?);
    let rank = snf.rank();
    let sp = n - rank;
    let sm = rank;
    let order: Vec<usize> = (rank..n).chain(0..rank).collect();
    let y1 = snf.v.select_columns(&order);
    let s1 = &(&y1.inverse_unimodular()? * &s.matrix) * &y1;
    let upper_ok = s1.block(0, 0, sp, sp).is_identity()
        && s1.block(sp, 0, sm, sp).is_zero()
        && (-&s1.block(sp, sp, sm, sm)).is_identity();
    if !upper_ok {
        return Err(Error::InternalVerificationFailure(
            "involution is not block upper triangular over its +1 lattice".into(),
        ));
    }
    let w = s1.block(0, sp, sp, sm);

    // [[I, W], [0, −I]] → [[I, A·W·B], [0, −I]] under diag(A⁻¹, B).
    let wsnf = smith_normal_form(&w);
    let y2 = IntMatrix::direct_sum([&wsnf.u.inverse_unimodular()?, &wsnf.v]);

    // Translating z_j by −⌊δ_j/2⌋·m_j replaces δ_j by δ_j mod 2.
    let deltas = wsnf.divisors();
    let mut y3 = IntMatrix::identity(n);
    for (j, delta) in deltas.iter().enumerate() {
        y3[(j, sp + j)] = -delta.div_floor(&BigInt::from(2));
    }
    let lambda = deltas.iter().filter(|d| d.is_odd()).count();
    if deltas.iter().take(lambda).any(|d| d.is_even()) {
        return Err(Error::InternalVerificationFailure("odd divisors are not leading".into()));
    }

    // Final reordering: +1 vectors, −1 vectors, then the swapped pairs.
    let mut y4 = IntMatrix::zeros(n, n);
    let mut col = 0;
    for i in lambda..sp {
        y4[(i, col)] = BigInt::one();
        col += 1;
    }
    for j in lambda..sm {
        y4[(sp + j, col)] = BigInt::one();
        col += 1;
    }
    for i in 0..lambda {
        y4[(sp + i, col)] = BigInt::one();
        y4[(i, col + 1)] = BigInt::one();
        y4[(sp + i, col + 1)] = -BigInt::one();
        col += 2;
    }

    let basis = &(&(&y1 * &y2) * &y3) * &y4;
    let canonical = comessatti_matrix(sp - lambda, sm - lambda, lambda);
    let check = &(&basis.inverse_unimodular()? * &s.matrix) * &basis;
    if check != canonical {
        return Err(Error::InternalVerificationFailure(
            "constructed basis does not conjugate to the Comessatti form".into(),
        ));
    }
    Ok(ComessattiDecomposition { basis, s_plus: sp, s_minus: sm, lambda, canonical })
}

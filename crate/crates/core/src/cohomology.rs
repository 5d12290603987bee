//! Cohomology of `G = ⟨1, S⟩` acting on `M = Z^n`, read off from the
//! quotients `M₋/(1−S)M` and `M₊/(1+S)M`. Both are elementary abelian
//! 2-groups, which gives a second route to `s₊ − λ` and `s₋ − λ`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::comessatti::{eigen_lattices, GlInvolution};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::normal_forms::smith_normal_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyRanks {
    /// Free rank of `H⁰ = M₊`.
    pub h0_rank: usize,
    /// 2-rank of `H^odd = M₋/(1−S)M`.
    pub h_odd_rank: usize,
    /// 2-rank of `H^even = M₊/(1+S)M` (positive even degrees).
    pub h_even_rank: usize,
}

impl CohomologyRanks {
    /// Rank of `H^i(G, M)`; positive degrees only depend on parity.
    pub fn rank_in_degree(&self, i: usize) -> usize {
        match i {
            0 => self.h0_rank,
            i if i % 2 == 1 => self.h_odd_rank,
            _ => self.h_even_rank,
        }
    }
}

/// Coordinates `X` with `lattice · X = generators`, for a saturated lattice
/// given by a basis of columns.
fn coordinates_in(lattice: &IntMatrix, generators: &IntMatrix) -> Result<IntMatrix> {
    let k = lattice.cols();
    let snf = smith_normal_form(lattice);
    if snf.divisors().iter().any(|d| !d.is_one()) {
        return Err(Error::InternalVerificationFailure("eigenlattice basis is not saturated".into()));
    }
    let ug = &snf.u * generators;
    if !ug.block(k, 0, ug.rows() - k, ug.cols()).is_zero() {
        return Err(Error::InternalVerificationFailure(
            "image lattice is not contained in the eigenlattice".into(),
        ));
    }
    let x = &snf.v * &ug.block(0, 0, k, ug.cols());
    debug_assert_eq!(&(lattice * &x), generators);
    Ok(x)
}

/// Number of `Z/2` factors of `lattice / span(generators)`, failing if the
/// quotient has any other elementary divisor (including a free part).
fn two_rank_of_quotient(lattice: &IntMatrix, generators: &IntMatrix) -> Result<usize> {
    let k = lattice.cols();
    if k == 0 {
        return Ok(0);
    }
    let x = coordinates_in(lattice, generators)?;
    let mut divisors = smith_normal_form(&x).divisors();
    divisors.resize(k, BigInt::zero());
    let two = BigInt::from(2);
    let mut rank = 0;
    for d in divisors {
        if d == two {
            rank += 1;
        } else if !d.is_one() {
            return Err(Error::UnexpectedTorsion { divisor: d.to_string() });
        }
    }
    Ok(rank)
}

pub fn cohomology_ranks(s: &GlInvolution) -> Result<CohomologyRanks> {
    let e = eigen_lattices(s);
    let id = IntMatrix::identity(s.dim());
    let one_minus_s = id.sub(s.matrix())?;
    let one_plus_s = id.add(s.matrix())?;
    Ok(CohomologyRanks {
        h0_rank: e.s_plus,
        h_odd_rank: two_rank_of_quotient(&e.minus, &one_minus_s)?,
        h_even_rank: two_rank_of_quotient(&e.plus, &one_plus_s)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(m: IntMatrix) -> GlInvolution {
        GlInvolution::new(m).unwrap()
    }

    #[test]
    fn examples() {
        let r = cohomology_ranks(&inv(IntMatrix::identity(2))).unwrap();
        assert_eq!(r, CohomologyRanks { h0_rank: 2, h_odd_rank: 0, h_even_rank: 2 });

        let r = cohomology_ranks(&inv(IntMatrix::from_rows([[0, 1], [1, 0]]))).unwrap();
        assert_eq!((r.h_odd_rank, r.h_even_rank), (0, 0));

        let r = cohomology_ranks(&inv(IntMatrix::from_rows([[-1]]))).unwrap();
        assert_eq!(r, CohomologyRanks { h0_rank: 0, h_odd_rank: 1, h_even_rank: 0 });
    }

    #[test]
    fn periodic_in_positive_degrees() {
        let r = cohomology_ranks(&inv(IntMatrix::from_rows([[1, 1], [0, -1]]))).unwrap();
        for i in 1..8 {
            assert_eq!(r.rank_in_degree(i), r.rank_in_degree(i + 2));
        }
    }

    #[test]
    fn free_quotient_is_torsion_error() {
        let lattice = IntMatrix::identity(2);
        let gens = IntMatrix::from_rows([[2], [0]]);
        assert!(matches!(two_rank_of_quotient(&lattice, &gens), Err(Error::UnexpectedTorsion { .. })));
    }
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Finds `U ∈ GL(m, Z)` with `x·U = (d, 0, …, 0)`, `d = gcd(x) ≥ 0`.
///
/// For the zero vector this returns `(Id, 0)`.
pub fn gcd_row_completion(x: &[BigInt]) -> (IntMatrix, BigInt) {
    let m = x.len();
    let mut row = x.to_vec();
    let mut u = IntMatrix::identity(m);
    if m == 0 {
        return (u, BigInt::zero());
    }
    loop {
        let pivot = (0..m)
            .filter(|&j| !row[j].is_zero())
            .min_by(|&i, &j| row[i].abs().cmp(&row[j].abs()).then(i.cmp(&j)));
        let Some(p) = pivot else {
            return (u, BigInt::zero());
        };
        row.swap(0, p);
        u.swap_cols(0, p);
        let mut clean = true;
        for j in 1..m {
            if row[j].is_zero() {
                continue;
            }
            let q = -row[j].div_floor(&row[0]);
            row[j] = &row[j] + &q * &row[0];
            u.add_col_multiple(j, 0, &q);
            clean &= row[j].is_zero();
        }
        if clean {
            break;
        }
    }
    if row[0].is_negative() {
        row[0] = -std::mem::take(&mut row[0]);
        u.negate_col(0);
    }
    (u, row[0].clone())
}

/// Finds `S ∈ Sp(2g, Z)` with `x·S = (d, 0, …, 0)`, `d = gcd(x) ≥ 0`.
///
/// Each conjugate pair `(x_i, x_{g+i})` is first folded into its `a`-slot by
/// an `SL(2, Z)` move acting on that pair, then the surviving `a`-part is
/// reduced by a rotation `diag(U, U⁻ᵀ)`, which leaves the zero `b`-part alone.
pub fn symplectic_gcd_completion(x: &[BigInt]) -> Result<(IntMatrix, BigInt)> {
    if x.is_empty() || x.len() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "symplectic completion needs an even, nonzero length, got {}",
            x.len()
        )));
    }
    let g = x.len() / 2;
    let mut s = IntMatrix::identity(2 * g);
    let mut row = x.to_vec();

    for i in 0..g {
        if row[g + i].is_zero() && !row[i].is_negative() {
            continue;
        }
        let (mut pair, _) = gcd_row_completion(&[row[i].clone(), row[g + i].clone()]);
        if pair.determinant()?.is_negative() {
            // The second column multiplies a zero entry, so flipping it keeps
            // the image and fixes the determinant.
            pair.negate_col(1);
        }
        let mut e = IntMatrix::identity(2 * g);
        let idx = [i, g + i];
        for (r, &ri) in idx.iter().enumerate() {
            for (c, &ci) in idx.iter().enumerate() {
                e[(ri, ci)] = pair[(r, c)].clone();
            }
        }
        let a = std::mem::take(&mut row[i]);
        let b = std::mem::take(&mut row[g + i]);
        row[i] = &a * &pair[(0, 0)] + &b * &pair[(1, 0)];
        row[g + i] = &a * &pair[(0, 1)] + &b * &pair[(1, 1)];
        debug_assert!(row[g + i].is_zero());
        s = &s * &e;
    }

    let (u, d) = gcd_row_completion(&row[..g]);
    if !u.is_identity() {
        let rot = IntMatrix::direct_sum([&u, &u.inverse_unimodular()?.transpose()]);
        s = &s * &rot;
    }
    Ok((s, d))
}

/// Extended gcd returning `(gcd, x, y)` with `a·x + b·y = gcd ≥ 0`.
pub(crate) fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Solves `u·p − v·q = 1` for coprime `p`, `q`, choosing `v` of least absolute
/// value. If `p = 0` then `q = ±1` and `(u, v) = (1, −q)`.
pub(crate) fn bezout_min_v(p: &BigInt, q: &BigInt) -> Option<(BigInt, BigInt)> {
    if p.is_zero() {
        return if q.abs().is_one() { Some((BigInt::one(), -q)) } else { None };
    }
    let (g, _, y) = extended_gcd(p, q);
    if !g.is_one() {
        return None;
    }
    // x·p + y·q = 1 gives v = −y, which is determined modulo |p|.
    let pa = p.abs();
    let mut v = (-y).mod_floor(&pa);
    if &v + &v > pa {
        v -= &pa;
    }
    let num = BigInt::one() + &v * q;
    debug_assert!(num.is_multiple_of(p));
    let u = num / p;
    Some((u, v))
}

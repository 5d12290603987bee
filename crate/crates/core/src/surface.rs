//! Numerical bookkeeping for a conformal involution of a genus-`g` Riemann
//! surface with `k` fixed points: the canonical-form parameters `(p, m, t)`
//! of its action on homology and the genus `g′` of the quotient.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuotientData {
    pub g: usize,
    pub k: usize,
    pub p: usize,
    pub m: usize,
    pub t: usize,
    pub g_quotient: usize,
}

impl QuotientData {
    /// Checks every relation a valid record satisfies.
    pub fn is_consistent(&self) -> bool {
        let (g, k, p, m, t, gq) = (self.g as i64, self.k as i64, self.p as i64, self.m as i64, self.t as i64, self.g_quotient as i64);
        let case_ok = if k > 0 { p == 0 && gq == t && 2 * m == k - 2 } else { p == 1 && m == 0 && gq == t + 1 };
        k % 2 == 0
            && g == p + m + 2 * t
            && gq == p + t
            && 2 * m == 2 * p + k - 2
            && riemann_hurwitz_check(self.g, self.g_quotient, self.k)
            && p <= 1
            && case_ok
    }
}

/// `g − 1 = 2(g′ − 1) + k/2`, evaluated without division.
pub fn riemann_hurwitz_check(g: usize, g_quotient: usize, k: usize) -> bool {
    let (g, gq, k) = (g as i64, g_quotient as i64, k as i64);
    2 * (g - 1) == 4 * (gq - 1) + k
}

/// The unique parameters for genus `g` and `k` fixed points.
///
/// With fixed points (`k > 0`) there are no fixed symplectic pairs, `p = 0`,
/// `m = k/2 − 1` and `g′ = t`. Without them `p = 1`, `m = 0` and `g′ = t + 1`.
/// Either way `t = (g − p − m)/2` must be a nonnegative integer.
pub fn quotient_data(g: usize, k: usize) -> Result<QuotientData> {
    let invalid = |why: String| Err(Error::InvalidInvolutionData(why));
    if g == 0 {
        return invalid("genus must be positive".into());
    }
    if k % 2 != 0 {
        return invalid(format!("fixed-point count {k} is odd"));
    }
    let (p, m) = if k > 0 { (0, k / 2 - 1) } else { (1, 0) };
    let Some(rest) = g.checked_sub(p + m) else {
        return invalid(format!("g = {g}, k = {k} would need t < 0"));
    };
    if rest % 2 != 0 {
        return invalid(format!("g = {g}, k = {k} would need a half-integral t"));
    }
    let t = rest / 2;
    let data = QuotientData { g, k, p, m, t, g_quotient: p + t };
    if !data.is_consistent() {
        return Err(Error::InternalVerificationFailure(format!("inconsistent quotient data {data:?}")));
    }
    Ok(data)
}

/// Every valid `k` for genus `g`, ascending. `m ≤ g` bounds `k ≤ 2g + 2`.
pub fn admissible_involutions(g: usize) -> Vec<QuotientData> {
    (0..=2 * g + 2).step_by(2).filter_map(|k| quotient_data(g, k).ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(d: &QuotientData) -> (usize, usize, usize, usize) {
        (d.p, d.m, d.t, d.g_quotient)
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(triple(&quotient_data(3, 0).unwrap()), (1, 0, 1, 2));
        assert_eq!(triple(&quotient_data(2, 2).unwrap()), (0, 0, 1, 1));
        assert_eq!(triple(&quotient_data(2, 6).unwrap()), (0, 2, 0, 0));
        assert!(matches!(quotient_data(2, 0), Err(Error::InvalidInvolutionData(_))));
        assert!(matches!(quotient_data(2, 3), Err(Error::InvalidInvolutionData(_))));
        assert!(matches!(quotient_data(2, 10), Err(Error::InvalidInvolutionData(_))));
        assert!(matches!(quotient_data(0, 0), Err(Error::InvalidInvolutionData(_))));
    }

    #[test]
    fn hurwitz_examples() {
        assert!(riemann_hurwitz_check(3, 2, 0));
        assert!(riemann_hurwitz_check(2, 1, 2));
        assert!(!riemann_hurwitz_check(2, 1, 4));
    }

    #[test]
    fn admissible_small_genus() {
        let ks: Vec<usize> = admissible_involutions(1).iter().map(|d| d.k).collect();
        assert_eq!(ks, vec![0, 4]);
        assert_eq!(triple(&admissible_involutions(1)[0]), (1, 0, 0, 1));
        assert_eq!(triple(&admissible_involutions(1)[1]), (0, 1, 0, 0));
        let ks: Vec<usize> = admissible_involutions(2).iter().map(|d| d.k).collect();
        assert_eq!(ks, vec![2, 6]);
        for g in 1..12 {
            for d in admissible_involutions(g) {
                assert!(riemann_hurwitz_check(d.g, d.g_quotient, d.k));
            }
        }
    }
}

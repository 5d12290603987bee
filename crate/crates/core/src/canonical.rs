//! Symplectic canonical form of an involution `S ∈ Sp(2g, Z)`.
//!
//! `canonicalize` finds a symplectic `R` with `R·S·R⁻¹ = diag(a, a)`, where
//! `a = diag(I_p, −I_m, t × [[0,1],[1,0]])` and `g = p + m + 2t`. It runs five
//! stages, each a conjugation by an explicit symplectic matrix:
//!
//! 1. clear the lower-left block `c`;
//! 2. put `a` (now an involution of `Z^g`) into Comessatti form by a rotation;
//! 3. translate away every part of `b` except the `+1 × −1` block `x`;
//! 4. reduce `x` to a diagonal 0/1 matrix (Smith form, then parity);
//! 5. fold each linked `(+1, −1)` pair into a swap block and sort the blocks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::comessatti::{
    as_comessatti_form, comessatti_canonicalize, comessatti_character, eigen_lattices, GlInvolution,
};
use crate::error::{Error, Result};
use crate::matrix::{
    is_symplectic, symplectic_conjugate, symplectic_inverse, symplectic_rotation,
    symplectic_translation, IntMatrix, SymplecticInvolution,
};
use crate::normal_forms::{bezout_min_v, skew_frobenius, smith_normal_form};

pub const STAGE_CLEAR_C: &str = "clear_c_block";
pub const STAGE_COMESSATTI: &str = "comessatti_on_a";
pub const STAGE_CLEAR_B_TAIL: &str = "clear_b_tail";
pub const STAGE_REDUCE_X: &str = "reduce_x";
pub const STAGE_FOLD: &str = "fold_s_prime";

/// Upper bound on c-clearing passes, per unit of genus.
const PASSES_PER_GENUS: usize = 64;

/// The `g × g` blocks of `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockView {
    pub a: IntMatrix,
    pub b: IntMatrix,
    pub c: IntMatrix,
    pub d: IntMatrix,
}

impl BlockView {
    pub fn of(m: &IntMatrix) -> Self {
        let g = m.rows() / 2;
        BlockView {
            a: m.block(0, 0, g, g),
            b: m.block(0, g, g, g),
            c: m.block(g, 0, g, g),
            d: m.block(g, g, g, g),
        }
    }

    /// The identities every symplectic involution satisfies:
    /// `d = aᵀ`, `b`, `c` skew, `ab + baᵀ = 0`, `ca + aᵀc = 0`, `a² + bc = Id`.
    pub fn satisfies_involution_identities(&self) -> bool {
        let at = self.a.transpose();
        let g = self.a.rows();
        self.d == at
            && self.b.is_skew()
            && self.c.is_skew()
            && (&self.a * &self.b).add(&(&self.b * &at)).is_ok_and(|m| m.is_zero())
            && (&self.c * &self.a).add(&(&at * &self.c)).is_ok_and(|m| m.is_zero())
            && (&self.a * &self.a).add(&(&self.b * &self.c)).is_ok_and(|m| m == IntMatrix::identity(g))
    }
}

/// `diag(a, a)` with `a = diag(I_p, −I_m, t swap blocks)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub p: usize,
    pub m: usize,
    pub t: usize,
    pub matrix: IntMatrix,
}

impl CanonicalForm {
    pub fn new(p: usize, m: usize, t: usize) -> Self {
        let a = crate::comessatti::comessatti_matrix(p, m, t);
        CanonicalForm { p, m, t, matrix: IntMatrix::direct_sum([&a, &a]) }
    }

    pub fn genus(&self) -> usize {
        self.p + self.m + 2 * self.t
    }

    pub fn invariants(&self) -> (usize, usize, usize) {
        (self.p, self.m, self.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: &'static str,
    pub transform: IntMatrix,
    /// Whether the block identities held after this stage.
    pub identities_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformReport {
    /// Symplectic `R` with `R·S·R⁻¹ = canonical.matrix`.
    pub transform: IntMatrix,
    pub canonical: CanonicalForm,
    pub stage_log: Vec<StageRecord>,
    pub transform_is_symplectic: bool,
    pub conjugation_verified: bool,
}

/// Shape of the `a` block after the Comessatti stage: `diag(I_plus, −I_minus, Q)`
/// with `Q` made of `swaps` swap blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ALayout {
    pub plus: usize,
    pub minus: usize,
    pub swaps: usize,
}

impl ALayout {
    fn swap_offset(&self) -> usize {
        self.plus + self.minus
    }
}

/// The 4×4 involution with `a = diag(1, −1)`, `b = [[0, 1], [−1, 0]]`, `c = 0`:
/// one `+1` and one `−1` direction linked through `x = (1)`.
pub fn linked_pair_involution() -> IntMatrix {
    IntMatrix::from_rows([[1, 0, 0, 1], [0, -1, -1, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
}

/// Symplectic `V` with `V·S₁·V⁻¹ = diag(Q₂, Q₂)`, `S₁` the linked pair involution.
pub fn fold_matrix() -> IntMatrix {
    IntMatrix::from_rows([[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, -1, 0, 0]])
}

fn verify(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InternalVerificationFailure(what.to_string()))
    }
}

/// Stage 1: conjugate until the `c` block vanishes.
///
/// Each pass brings `c` to its skew Frobenius form with a rotation, then
/// applies the `SL(2)` move on the pair `(e₂, f₂)` built from
/// `ν = gcd(a₂₁, d₁)`, `a₂₁ = νp`, `d₁ = νq`, `up − vq = 1`, which kills the
/// leading `d₁` block.
pub fn clear_c_block(s: &SymplecticInvolution) -> Result<(IntMatrix, SymplecticInvolution)> {
    let g = s.genus();
    let max_passes = PASSES_PER_GENUS * g;
    let mut cur = s.clone();
    let mut total = IntMatrix::identity(2 * g);
    for _ in 0..max_passes {
        let view = BlockView::of(cur.matrix());
        if view.c.is_zero() {
            return Ok((total, cur));
        }
        let frob = skew_frobenius(&view.c)?;
        if !frob.u.is_identity() {
            let rot = symplectic_rotation(&frob.u)?;
            cur = cur.conjugate_by(&rot);
            total = &rot * &total;
        }
        let view = BlockView::of(cur.matrix());
        verify(view.c == frob.d, "rotation did not bring c to Frobenius form")?;

        let d1 = &frob.divisors[0];
        let a21 = &view.a[(1, 0)];
        let nu = a21.gcd(d1);
        let (p, q) = (a21 / &nu, d1 / &nu);
        let (u, v) = bezout_min_v(&p, &q)
            .ok_or_else(|| Error::InternalVerificationFailure("Bezout step on non-coprime pair".into()))?;
        let mut t = IntMatrix::identity(2 * g);
        t[(1, 1)] = u;
        t[(1, g + 1)] = v;
        t[(g + 1, 1)] = q;
        t[(g + 1, g + 1)] = p;
        cur = cur.conjugate_by(&t);
        total = &t * &total;

        let c = BlockView::of(cur.matrix()).c;
        verify(c[(0, 1)].is_zero() && c[(1, 0)].is_zero(), "leading c block survived the gcd move")?;
    }
    if BlockView::of(cur.matrix()).c.is_zero() {
        return Ok((total, cur));
    }
    Err(Error::ConvergenceFailure { passes: max_passes })
}

/// Stage 2: with `c = 0`, `a² = Id`; a rotation `diag(U, U⁻ᵀ)` acts on `a` by
/// similarity and brings it into Comessatti form.
pub fn comessatti_on_a(s: &SymplecticInvolution) -> Result<(IntMatrix, SymplecticInvolution, ALayout)> {
    let g = s.genus();
    let view = BlockView::of(s.matrix());
    if !view.c.is_zero() {
        return Err(Error::StructureViolation("c block must be zero before the Comessatti stage".into()));
    }
    let dec = comessatti_canonicalize(&GlInvolution::new(view.a)?)?;
    let layout = ALayout {
        plus: dec.s_plus - dec.lambda,
        minus: dec.s_minus - dec.lambda,
        swaps: dec.lambda,
    };
    if dec.basis.is_identity() {
        return Ok((IntMatrix::identity(2 * g), s.clone(), layout));
    }
    let rot = symplectic_rotation(&dec.basis.inverse_unimodular()?)?;
    let next = s.conjugate_by(&rot);
    verify(BlockView::of(next.matrix()).a == dec.canonical, "rotation missed the Comessatti form")?;
    Ok((rot, next, layout))
}

fn layout_of(s: &SymplecticInvolution) -> Result<ALayout> {
    let view = BlockView::of(s.matrix());
    let (plus, minus, swaps) = as_comessatti_form(&view.a)
        .ok_or_else(|| Error::StructureViolation("a block is not in Comessatti form".into()))?;
    if !view.c.is_zero() {
        return Err(Error::StructureViolation("c block is not zero".into()));
    }
    Ok(ALayout { plus, minus, swaps })
}

/// The symmetric `μ` whose translation clears the `y`, `z` and `γ` parts of `b`:
///
/// ```text
///     [ 0   x   y ]         [ 0    0    μ₃ ]
/// b = [ −xᵀ 0   z ]     μ = [ 0    0    μ₅ ]
///     [ −yᵀ −zᵀ γ ]         [ μ₃ᵀ  μ₅ᵀ  μ₆ ]
/// ```
///
/// Rows of `y` are `(y₁, −y₁, y₂, −y₂, …)` and give `μ₃` rows `(y₁, 0, y₂, 0, …)`;
/// rows of `z` are `(z₁, z₁, …)` and give `μ₅` rows `−(z₁, 0, …)`. The 2×2 blocks
/// of `γ` are `[[0, α], [−α, 0]]` on the diagonal and `[[β, δ], [−δ, −β]]` off it;
/// `μ₆` takes `[[−α, 0], [0, 0]]` and `[[−δ, −β], [0, 0]]` respectively.
pub fn tail_translation(b: &IntMatrix, layout: ALayout) -> Result<IntMatrix> {
    let g = b.rows();
    let (r, s, l) = (layout.plus, layout.minus, layout.swaps);
    let off = layout.swap_offset();
    let violation = |what: &str| Error::StructureViolation(format!("b block: {what}"));
    if !b.is_skew() || r + s + 2 * l != g {
        return Err(violation("not skew or wrong size"));
    }
    if !b.block(0, 0, r, r).is_zero() || !b.block(r, r, s, s).is_zero() {
        return Err(violation("diagonal ±1 blocks must vanish"));
    }
    let mut mu = IntMatrix::zeros(g, g);
    let mut put = |i: usize, j: usize, v: BigInt| {
        mu[(j, i)] = v.clone();
        mu[(i, j)] = v;
    };
    for k in 0..l {
        let (c0, c1) = (off + 2 * k, off + 2 * k + 1);
        for i in 0..r {
            if b[(i, c1)] != -&b[(i, c0)] {
                return Err(violation("y does not satisfy y = −yQ"));
            }
            put(i, c0, b[(i, c0)].clone());
        }
        for j in r..r + s {
            if b[(j, c1)] != b[(j, c0)] {
                return Err(violation("z does not satisfy z = zQ"));
            }
            put(j, c0, -&b[(j, c0)]);
        }
        put(c0, c0, -&b[(c0, c1)]);
        for k2 in k + 1..l {
            let (d0, d1) = (off + 2 * k2, off + 2 * k2 + 1);
            let beta = &b[(c0, d0)];
            let delta = &b[(c0, d1)];
            if b[(c1, d0)] != -delta || b[(c1, d1)] != -beta {
                return Err(violation("γ does not anticommute with Q"));
            }
            put(c0, d0, -delta);
            put(c0, d1, -beta);
        }
    }
    Ok(mu)
}

/// Stage 3: translate so that `b = [[0, x, 0], [−xᵀ, 0, 0], [0, 0, 0]]`.
pub fn clear_b_tail(s: &SymplecticInvolution) -> Result<(IntMatrix, SymplecticInvolution)> {
    let layout = layout_of(s)?;
    let g = s.genus();
    let b = BlockView::of(s.matrix()).b;
    let mu = tail_translation(&b, layout)?;
    if mu.is_zero() {
        return Ok((IntMatrix::identity(2 * g), s.clone()));
    }
    let t = symplectic_translation(&mu)?;
    let next = s.conjugate_by(&t);
    let nb = BlockView::of(next.matrix()).b;
    let (r, m) = (layout.plus, layout.minus);
    let mut expected = IntMatrix::zeros(g, g);
    expected.set_block(0, r, &nb.block(0, r, r, m));
    expected.set_block(r, 0, &nb.block(r, 0, m, r));
    verify(nb == expected, "translation left a nonzero tail in b")?;
    Ok((t, next))
}

/// Stage 4: rotate by `diag(A, B, I)` to replace `x` by its Smith form, then
/// translate by `μ₂` to subtract `2μ₂`, leaving `diag(1, …, 1, 0, …)`.
/// Returns the transform, the result, and `t` = number of odd Smith divisors.
pub fn reduce_x(s: &SymplecticInvolution) -> Result<(IntMatrix, SymplecticInvolution, usize)> {
    let layout = layout_of(s)?;
    let g = s.genus();
    let (r, m, l) = (layout.plus, layout.minus, layout.swaps);
    let x = BlockView::of(s.matrix()).b.block(0, r, r, m);

    let snf = smith_normal_form(&x);
    let mut total = IntMatrix::identity(2 * g);
    let mut cur = s.clone();
    let rot_u = IntMatrix::direct_sum([&snf.u, &snf.v.transpose(), &IntMatrix::identity(2 * l)]);
    if !rot_u.is_identity() {
        let rot = symplectic_rotation(&rot_u)?;
        cur = cur.conjugate_by(&rot);
        total = rot;
    }

    let divisors = snf.divisors();
    let two = BigInt::from(2);
    let mut mu = IntMatrix::zeros(g, g);
    for (i, d) in divisors.iter().enumerate() {
        let half = d.div_floor(&two);
        mu[(i, r + i)] = half.clone();
        mu[(r + i, i)] = half;
    }
    if !mu.is_zero() {
        let t = symplectic_translation(&mu)?;
        cur = cur.conjugate_by(&t);
        total = &t * &total;
    }

    let t = divisors.iter().filter(|d| d.is_odd()).count();
    let mut want_b = IntMatrix::zeros(g, g);
    for i in 0..t {
        want_b[(i, r + i)] = BigInt::one();
        want_b[(r + i, i)] = -BigInt::one();
    }
    let view = BlockView::of(cur.matrix());
    verify(view.b == want_b, "x did not reduce to a leading 0/1 diagonal")?;
    verify(view.a == crate::comessatti::comessatti_matrix(r, m, l), "x reduction disturbed a")?;
    Ok((total, cur, t))
}

/// Stage 5: conjugate each linked pair `(eᵢ, e_{r+i}, fᵢ, f_{r+i})`, `i < t`, by
/// the fold matrix, then permute blocks into `(+1, −1, swaps)` order with
/// `diag(P, P)`.
pub fn fold_s_prime(s: &SymplecticInvolution) -> Result<TransformReport> {
    let layout = layout_of(s)?;
    let g = s.genus();
    let (r, m, l) = (layout.plus, layout.minus, layout.swaps);
    let b = BlockView::of(s.matrix()).b;
    let t = (0..r.min(m)).take_while(|&i| b[(i, r + i)].is_one()).count();

    let v = fold_matrix();
    let mut total = IntMatrix::identity(2 * g);
    for i in 0..t {
        let coords = [i, r + i, g + i, g + r + i];
        let mut w = IntMatrix::identity(2 * g);
        for (a, &ca) in coords.iter().enumerate() {
            for (bb, &cb) in coords.iter().enumerate() {
                w[(ca, cb)] = v[(a, bb)].clone();
            }
        }
        total = &w * &total;
    }

    let mut order: Vec<usize> = (t..r).chain(r + t..r + m).collect();
    for i in 0..t {
        order.extend([i, r + i]);
    }
    order.extend(r + m..g);
    let mut perm = IntMatrix::zeros(g, g);
    for (k, &old) in order.iter().enumerate() {
        perm[(k, old)] = BigInt::one();
    }
    let perm = IntMatrix::direct_sum([&perm, &perm]);
    total = &perm * &total;

    let canonical = CanonicalForm::new(r - t, m - t, l + t);
    let result = symplectic_conjugate(&total, s.matrix());
    let transform_is_symplectic = is_symplectic(&total, g)?;
    let conjugation_verified = result == canonical.matrix;
    verify(transform_is_symplectic && conjugation_verified, "fold did not reach the canonical form")?;
    Ok(TransformReport {
        stage_log: vec![StageRecord { stage: STAGE_FOLD, transform: total.clone(), identities_hold: true }],
        transform: total,
        canonical,
        transform_is_symplectic,
        conjugation_verified,
    })
}

/// Runs all five stages and verifies `R·S·R⁻¹ = canonical` with `R` symplectic.
pub fn canonicalize(s: &SymplecticInvolution) -> Result<TransformReport> {
    let g = s.genus();
    let mut log: Vec<StageRecord> = Vec::new();
    let mut total = IntMatrix::identity(2 * g);
    let wrap = |stage: &'static str, log: &[StageRecord]| {
        let completed: Vec<&'static str> = log.iter().map(|r| r.stage).collect();
        move |e: Error| Error::Stage { stage, completed, source: Box::new(e) }
    };
    let mut record = |stage, t: IntMatrix, cur: &SymplecticInvolution, log: &mut Vec<StageRecord>| {
        let identities_hold = BlockView::of(cur.matrix()).satisfies_involution_identities();
        total = &t * &total;
        log.push(StageRecord { stage, transform: t, identities_hold });
        if identities_hold {
            Ok(())
        } else {
            Err(Error::InternalVerificationFailure(format!("block identities fail after {stage}")))
        }
    };

    let (t, cur) = clear_c_block(s).map_err(wrap(STAGE_CLEAR_C, &log))?;
    record(STAGE_CLEAR_C, t, &cur, &mut log).map_err(wrap(STAGE_CLEAR_C, &log))?;
    let (t, cur, _) = comessatti_on_a(&cur).map_err(wrap(STAGE_COMESSATTI, &log))?;
    record(STAGE_COMESSATTI, t, &cur, &mut log).map_err(wrap(STAGE_COMESSATTI, &log))?;
    let (t, cur) = clear_b_tail(&cur).map_err(wrap(STAGE_CLEAR_B_TAIL, &log))?;
    record(STAGE_CLEAR_B_TAIL, t, &cur, &mut log).map_err(wrap(STAGE_CLEAR_B_TAIL, &log))?;
    let (t, cur, _) = reduce_x(&cur).map_err(wrap(STAGE_REDUCE_X, &log))?;
    record(STAGE_REDUCE_X, t, &cur, &mut log).map_err(wrap(STAGE_REDUCE_X, &log))?;
    let fold = fold_s_prime(&cur).map_err(wrap(STAGE_FOLD, &log))?;
    record(STAGE_FOLD, fold.transform, &SymplecticInvolution::new(fold.canonical.matrix.clone())?, &mut log)
        .map_err(wrap(STAGE_FOLD, &log))?;

    let transform_is_symplectic = is_symplectic(&total, g)?;
    let conjugation_verified = symplectic_conjugate(&total, s.matrix()) == fold.canonical.matrix;
    if !(transform_is_symplectic && conjugation_verified) {
        return Err(Error::InternalVerificationFailure(
            "accumulated transform does not conjugate S to its canonical form".into(),
        ));
    }
    Ok(TransformReport {
        transform: total,
        canonical: fold.canonical,
        stage_log: log,
        transform_is_symplectic,
        conjugation_verified,
    })
}

/// `(p, m, t)` from the `GL(2g, Z)` invariants of `S` alone. The canonical
/// form has `s₊ = 2(p + t)`, `s₋ = 2(m + t)` and `λ = 2t`, and all three are
/// conjugation invariants.
pub fn invariants_from_gl(s: &SymplecticInvolution) -> Result<(usize, usize, usize)> {
    let gl = GlInvolution::new(s.matrix().clone())?;
    let e = eigen_lattices(&gl);
    let lambda = comessatti_character(&gl)?;
    if lambda % 2 != 0 || e.s_plus % 2 != 0 || e.s_minus % 2 != 0 {
        return Err(Error::ParityViolation(format!(
            "s+ = {}, s- = {}, lambda = {}",
            e.s_plus, e.s_minus, lambda
        )));
    }
    let t = lambda / 2;
    Ok((e.s_plus / 2 - t, e.s_minus / 2 - t, t))
}

/// Bases (as columns) of two `S`-stable Lagrangian sublattices `L₁`, `L₂`
/// with `Z^{2g} = L₁ ⊕ L₂`: the pullbacks through `R` of the spans of
/// `e₁…e_g` and `f₁…f_g`, both of which the canonical form preserves.
pub fn stable_lagrangians(report: &TransformReport) -> (IntMatrix, IntMatrix) {
    let g = report.transform.rows() / 2;
    let inv = symplectic_inverse(&report.transform);
    (inv.block(0, 0, 2 * g, g), inv.block(0, g, 2 * g, g))
}

/// Checks that `S` preserves the lattice spanned by the columns of `basis`:
/// the columns of `S·basis` must have integer coordinates in `basis` with a
/// unimodular coordinate matrix. `complement` completes `basis` to a basis
/// of `Z^{2g}`.
pub fn preserves_lattice(s: &IntMatrix, basis: &IntMatrix, complement: &IntMatrix) -> Result<bool> {
    let full = IntMatrix::hstack([basis, complement])?;
    let coords = &full.inverse_unimodular()? * &(s * basis);
    let k = basis.cols();
    Ok(coords.block(k, 0, coords.rows() - k, k).is_zero()
        && coords.block(0, 0, k, k).determinant()?.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{is_symplectic_involution, SymplecticForm};

    fn inv(m: IntMatrix) -> SymplecticInvolution {
        SymplecticInvolution::new(m).unwrap()
    }

    #[test]
    fn fold_matrix_identities() {
        let v = fold_matrix();
        let j = SymplecticForm::new(2);
        assert_eq!(&(&v.transpose() * j.matrix()) * &v, *j.matrix());
        let folded = &(&v * &linked_pair_involution()) * &v.inverse_unimodular().unwrap();
        assert_eq!(
            folded,
            IntMatrix::from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        );
    }

    #[test]
    fn canonical_form_shape() {
        let c = CanonicalForm::new(1, 1, 1);
        assert_eq!(c.genus(), 4);
        assert!(is_symplectic_involution(&c.matrix, 4).unwrap());
        let a = BlockView::of(&c.matrix).a;
        assert_eq!(
            a,
            IntMatrix::from_rows([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        );
    }

    #[test]
    fn already_clear_c() {
        let s = inv(linked_pair_involution());
        let (t, s2) = clear_c_block(&s).unwrap();
        assert!(t.is_identity());
        assert_eq!(s2, s);
    }

    #[test]
    fn clear_c_on_nonzero_block() {
        // Conjugate diag(Q2, Q2) by J-type mixing to get c ≠ 0.
        let base = CanonicalForm::new(0, 0, 1).matrix;
        let mut mix = IntMatrix::identity(4);
        mix[(2, 0)] = BigInt::from(1);
        mix[(3, 1)] = BigInt::from(2);
        mix[(2, 1)] = BigInt::from(3);
        mix[(3, 0)] = BigInt::from(3);
        assert!(is_symplectic(&mix, 2).unwrap());
        let s = inv(symplectic_conjugate(&mix, &base));
        assert!(!BlockView::of(s.matrix()).c.is_zero());
        let (t, s2) = clear_c_block(&s).unwrap();
        assert!(is_symplectic(&t, 2).unwrap());
        assert!(BlockView::of(s2.matrix()).c.is_zero());
        assert_eq!(symplectic_conjugate(&t, s.matrix()), *s2.matrix());
    }

    #[test]
    fn comessatti_stage_on_triangular_a() {
        let a = IntMatrix::from_rows([[1, 1], [0, -1]]);
        let s = inv(IntMatrix::direct_sum([&a, &a.transpose()]));
        let (r, s2, layout) = comessatti_on_a(&s).unwrap();
        assert!(is_symplectic(&r, 2).unwrap());
        assert_eq!(BlockView::of(s2.matrix()).a, IntMatrix::from_rows([[0, 1], [1, 0]]));
        assert_eq!(layout, ALayout { plus: 0, minus: 0, swaps: 1 });

        let s = inv(IntMatrix::identity(4));
        let (r, _, _) = comessatti_on_a(&s).unwrap();
        assert!(r.is_identity());
    }

    #[test]
    fn tail_translation_rows() {
        // r = 1, l = 1: y = (3, −3) gives μ₃ = (3, 0).
        let layout = ALayout { plus: 1, minus: 0, swaps: 1 };
        let b = IntMatrix::from_rows([[0, 3, -3], [-3, 0, 0], [3, 0, 0]]);
        let mu = tail_translation(&b, layout).unwrap();
        assert_eq!(mu.row(0)[1..].to_vec(), vec![BigInt::from(3), BigInt::from(0)]);
        let a = crate::comessatti::comessatti_matrix(1, 0, 1);
        let q = IntMatrix::from_rows([[0, 1], [1, 0]]);
        let y = b.block(0, 1, 1, 2);
        let mu3 = mu.block(0, 1, 1, 2);
        assert!(y.add(&(&mu3 * &q)).unwrap().sub(&mu3).unwrap().is_zero());
        let cleared = b.add(&(&mu * &a)).unwrap().sub(&(&a * &mu)).unwrap();
        assert!(cleared.is_zero());
    }

    #[test]
    fn tail_translation_gamma() {
        // γ = [[0, 5], [−5, 0]] needs μ₆ = [[−5, 0], [0, 0]].
        let layout = ALayout { plus: 0, minus: 0, swaps: 1 };
        let gamma = IntMatrix::from_rows([[0, 5], [-5, 0]]);
        let mu = tail_translation(&gamma, layout).unwrap();
        assert_eq!(mu, IntMatrix::from_rows([[-5, 0], [0, 0]]));
        let q = IntMatrix::from_rows([[0, 1], [1, 0]]);
        assert!(gamma.add(&(&mu * &q)).unwrap().sub(&(&q * &mu)).unwrap().is_zero());
    }

    #[test]
    fn tail_translation_rejects_bad_pattern() {
        let layout = ALayout { plus: 1, minus: 0, swaps: 1 };
        let b = IntMatrix::from_rows([[0, 3, 3], [-3, 0, 0], [-3, 0, 0]]);
        assert!(matches!(tail_translation(&b, layout), Err(Error::StructureViolation(_))));
    }

    fn with_x(x: IntMatrix, r: usize, m: usize) -> SymplecticInvolution {
        let g = r + m;
        let a = crate::comessatti::comessatti_matrix(r, m, 0);
        let mut b = IntMatrix::zeros(g, g);
        b.set_block(0, r, &x);
        b.set_block(r, 0, &-&x.transpose());
        inv(IntMatrix::from_blocks(&a, &b, &IntMatrix::zeros(g, g), &a).unwrap())
    }

    #[test]
    fn reduce_x_examples() {
        let (t, _, count) = reduce_x(&with_x(IntMatrix::zeros(1, 1), 1, 1)).unwrap();
        assert!(t.is_identity());
        assert_eq!(count, 0);

        let (_, s, count) = reduce_x(&with_x(IntMatrix::from_rows([[2]]), 1, 1)).unwrap();
        assert_eq!(count, 0);
        assert!(BlockView::of(s.matrix()).b.is_zero());

        let (t, s, count) = reduce_x(&with_x(IntMatrix::diagonal([3, 4]), 2, 2)).unwrap();
        assert_eq!(count, 1);
        assert!(is_symplectic(&t, 4).unwrap());
        assert_eq!(BlockView::of(s.matrix()).b.block(0, 2, 2, 2), IntMatrix::diagonal([1, 0]));
    }

    #[test]
    fn fold_linked_pair() {
        let report = fold_s_prime(&inv(linked_pair_involution())).unwrap();
        assert_eq!(report.canonical.invariants(), (0, 0, 1));
        assert_eq!(report.transform, fold_matrix());

        let report = fold_s_prime(&inv(CanonicalForm::new(2, 1, 0).matrix)).unwrap();
        assert!(report.transform.is_identity());
    }

    #[test]
    fn canonicalize_trivial() {
        for g in 1..5 {
            let id = IntMatrix::identity(2 * g);
            let rep = canonicalize(&inv(id.clone())).unwrap();
            assert_eq!(rep.canonical.invariants(), (g, 0, 0));
            assert!(rep.transform.is_identity());
            let rep = canonicalize(&inv(-&id)).unwrap();
            assert_eq!(rep.canonical.invariants(), (0, g, 0));
            assert!(rep.transform.is_identity());
        }
    }

    #[test]
    fn canonicalize_linked_pair() {
        let s = inv(linked_pair_involution());
        let rep = canonicalize(&s).unwrap();
        assert_eq!(rep.canonical.invariants(), (0, 0, 1));
        assert_eq!(rep.stage_log.len(), 5);
        assert!(rep.stage_log.iter().all(|r| r.identities_hold));
        assert_eq!(invariants_from_gl(&s).unwrap(), (0, 0, 1));
    }

    #[test]
    fn gl_invariants_of_canonical() {
        let s = inv(CanonicalForm::new(1, 1, 0).matrix);
        assert_eq!(invariants_from_gl(&s).unwrap(), (1, 1, 0));
        assert_eq!(invariants_from_gl(&inv(IntMatrix::identity(6))).unwrap(), (3, 0, 0));
    }

    #[test]
    fn lagrangians_of_identity() {
        let s = inv(IntMatrix::identity(4));
        let rep = canonicalize(&s).unwrap();
        let (l1, l2) = stable_lagrangians(&rep);
        assert_eq!(l1, IntMatrix::identity(4).block(0, 0, 4, 2));
        assert_eq!(l2, IntMatrix::identity(4).block(0, 2, 4, 2));
    }

    #[test]
    fn lagrangians_of_linked_pair() {
        let s = inv(linked_pair_involution());
        let rep = canonicalize(&s).unwrap();
        let (l1, l2) = stable_lagrangians(&rep);
        let j = SymplecticForm::new(2);
        assert!((&(&l1.transpose() * j.matrix()) * &l1).is_zero());
        assert!((&(&l2.transpose() * j.matrix()) * &l2).is_zero());
        assert!(IntMatrix::hstack([&l1, &l2]).unwrap().is_unimodular());
        assert!(preserves_lattice(s.matrix(), &l1, &l2).unwrap());
        assert!(preserves_lattice(s.matrix(), &l2, &l1).unwrap());
    }
}

//! Dense matrices over the integers with arbitrary-precision entries, and the
//! membership predicates for the unimodular and symplectic groups.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors of anything convertible to `BigInt`.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<T, R>(rows: impl IntoIterator<Item = R>) -> Self
    where
        T: Into<BigInt>,
        R: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        IntMatrix { rows: nr, cols: nc, data: rows.into_iter().flatten().collect() }
    }

    pub fn diagonal<T: Into<BigInt>>(entries: impl IntoIterator<Item = T>) -> Self {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact product, or `DimensionMismatch` if the inner dimensions differ.
    pub fn multiply(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| e * k).collect() }
    }

    /// Copies the `nr x nc` block whose top-left corner is `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> IntMatrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "block out of range");
        let mut b = Self::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                b[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        b
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &IntMatrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// `[[a, b], [c, d]]` from four blocks with compatible shapes.
    pub fn from_blocks(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, d: &IntMatrix) -> Result<IntMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch("incompatible block shapes".into()));
        }
        let mut m = Self::zeros(a.rows + c.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols, b);
        m.set_block(a.rows, 0, c);
        m.set_block(a.rows, a.cols, d);
        Ok(m)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum<'a>(blocks: impl IntoIterator<Item = &'a IntMatrix>) -> IntMatrix {
        let blocks: Vec<&IntMatrix> = blocks.into_iter().collect();
        let nr = blocks.iter().map(|b| b.rows).sum();
        let nc = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(nr, nc);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    /// Stacks matrices with equal row counts side by side.
    pub fn hstack<'a>(parts: impl IntoIterator<Item = &'a IntMatrix>) -> Result<IntMatrix> {
        let parts: Vec<&IntMatrix> = parts.into_iter().collect();
        let nr = parts.first().map_or(0, |p| p.rows);
        if parts.iter().any(|p| p.rows != nr) {
            return Err(Error::DimensionMismatch("hstack with unequal row counts".into()));
        }
        let mut m = Self::zeros(nr, parts.iter().map(|p| p.cols).sum());
        let mut c = 0;
        for p in parts {
            m.set_block(0, c, p);
            c += p.cols;
        }
        Ok(m)
    }

    /// Selects the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                m[(i, k)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|e| e.abs()).max().unwrap_or_default()
    }

    // Elementary operations. They mutate in place and are the building blocks
    // of every normal-form routine.

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[target] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        debug_assert_ne!(target, src);
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            self.data[target * self.cols + c] += v;
        }
    }

    /// col[target] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, target: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        debug_assert_ne!(target, src);
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            self.data[r * self.cols + target] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let e = &mut self.data[i * self.cols + c];
            *e = -std::mem::take(e);
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let e = &mut self.data[r * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            for i in rank + 1..m.rows {
                for j in c + 1..m.cols {
                    let v = &m[(rank, c)] * &m[(i, j)] - &m[(i, c)] * &m[(rank, j)];
                    m[(i, j)] = v / &prev;
                }
                m[(i, c)] = BigInt::zero();
            }
            prev = m[(rank, c)].clone();
            rank += 1;
        }
        rank
    }

    /// Exact inverse of a matrix with determinant ±1.
    ///
    /// Reduces `[U | I]` to `[I | U⁻¹]` with unimodular row operations only
    /// (Euclidean elimination per column); a non-unit pivot means |det| ≠ 1.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = IntMatrix::identity(n);
        let not_unimodular = |m: &IntMatrix| Error::NotUnimodular {
            det: m.determinant().map(|d| d.abs().to_string()).unwrap_or_default(),
        };
        for k in 0..n {
            loop {
                let pivot = (k..n)
                    .filter(|&i| !a[(i, k)].is_zero())
                    .min_by(|&i, &j| a[(i, k)].abs().cmp(&a[(j, k)].abs()));
                let Some(p) = pivot else {
                    return Err(not_unimodular(self));
                };
                a.swap_rows(k, p);
                inv.swap_rows(k, p);
                let mut done = true;
                for i in k + 1..n {
                    if a[(i, k)].is_zero() {
                        continue;
                    }
                    let q = -a[(i, k)].div_floor(&a[(k, k)]);
                    a.add_row_multiple(i, k, &q);
                    inv.add_row_multiple(i, k, &q);
                    if !a[(i, k)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !a[(k, k)].abs().is_one() {
                return Err(not_unimodular(self));
            }
            if a[(k, k)].is_negative() {
                a.negate_row(k);
                inv.negate_row(k);
            }
        }
        for k in (0..n).rev() {
            for i in 0..k {
                let q = -a[(i, k)].clone();
                a.add_row_multiple(i, k, &q);
                inv.add_row_multiple(i, k, &q);
            }
        }
        Ok(inv)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.determinant().is_ok_and(|d| d.abs().is_one())
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -&self[(j, i)]))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on a dimension mismatch; use [`IntMatrix::multiply`] for a checked product.
impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.multiply(rhs).expect("matrix product dimension mismatch")
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| -e).collect() }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// The standard pairing `J = [[0, I_g], [-I_g, 0]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    genus: usize,
    matrix: IntMatrix,
}

impl SymplecticForm {
    pub fn new(genus: usize) -> Self {
        let g = genus;
        let mut j = IntMatrix::zeros(2 * g, 2 * g);
        for i in 0..g {
            j[(i, g + i)] = BigInt::one();
            j[(g + i, i)] = -BigInt::one();
        }
        SymplecticForm { genus, matrix: j }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `⟨x, y⟩ = xᵀ J y`.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let g = self.genus;
        let mut s = BigInt::zero();
        for i in 0..g {
            s += &x[i] * &y[g + i] - &x[g + i] * &y[i];
        }
        s
    }
}

fn check_even_square(m: &IntMatrix, g: usize) -> Result<()> {
    if m.rows() != 2 * g || m.cols() != 2 * g {
        return Err(Error::DimensionMismatch(format!(
            "expected a {}x{} matrix for genus {}, got {}x{}",
            2 * g,
            2 * g,
            g,
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `Mᵀ J M = J`.
pub fn is_symplectic(m: &IntMatrix, g: usize) -> Result<bool> {
    check_even_square(m, g)?;
    let j = SymplecticForm::new(g);
    Ok(&(&m.transpose() * j.matrix()) * m == *j.matrix())
}

pub fn is_involution(m: &IntMatrix) -> bool {
    m.is_square() && (m * m).is_identity()
}

pub fn is_symplectic_involution(m: &IntMatrix, g: usize) -> Result<bool> {
    Ok(is_symplectic(m, g)? && is_involution(m))
}

/// Inverse of a symplectic matrix, `M⁻¹ = -J Mᵀ J`. The caller guarantees
/// that `m` is symplectic.
pub fn symplectic_inverse(m: &IntMatrix) -> IntMatrix {
    let g = m.rows() / 2;
    let mt = m.transpose();
    // -J Mᵀ J, written out blockwise: with Mᵀ = [[A, B], [C, D]],
    // the result is [[D, -C], [-B, A]].
    let mut out = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        for j in 0..g {
            out[(i, j)] = mt[(g + i, g + j)].clone();
            out[(i, g + j)] = -&mt[(g + i, j)];
            out[(g + i, j)] = -&mt[(i, g + j)];
            out[(g + i, g + j)] = mt[(i, j)].clone();
        }
    }
    out
}

/// `T·S·T⁻¹` for symplectic `T`.
pub fn symplectic_conjugate(t: &IntMatrix, s: &IntMatrix) -> IntMatrix {
    &(t * s) * &symplectic_inverse(t)
}

/// The rotation `R_U = diag(U, U⁻ᵀ)` for unimodular `U`.
pub fn symplectic_rotation(u: &IntMatrix) -> Result<IntMatrix> {
    let inv_t = u.inverse_unimodular()?.transpose();
    Ok(IntMatrix::direct_sum([u, &inv_t]))
}

/// The translation `T_μ = [[I, μ], [0, I]]` for symmetric `μ`.
pub fn symplectic_translation(mu: &IntMatrix) -> Result<IntMatrix> {
    if !mu.is_square() || *mu != mu.transpose() {
        return Err(Error::StructureViolation("translation needs a symmetric matrix".into()));
    }
    let g = mu.rows();
    let mut t = IntMatrix::identity(2 * g);
    t.set_block(0, g, mu);
    Ok(t)
}

/// A validated element `S` of `Sp(2g, Z)` with `S² = Id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticInvolution {
    genus: usize,
    matrix: IntMatrix,
}

impl SymplecticInvolution {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() % 2 != 0 || matrix.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "a symplectic involution needs a nonempty square matrix of even size, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let genus = matrix.rows() / 2;
        if !is_symplectic(&matrix, genus)? {
            return Err(Error::NotSymplectic);
        }
        if !is_involution(&matrix) {
            return Err(Error::NotInvolution);
        }
        Ok(SymplecticInvolution { genus, matrix })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    /// `T·S·T⁻¹` for a symplectic `T`; the result is again a symplectic involution.
    pub fn conjugate_by(&self, t: &IntMatrix) -> SymplecticInvolution {
        SymplecticInvolution { genus: self.genus, matrix: symplectic_conjugate(t, &self.matrix) }
    }
}

//! Dense row-major matrices over an exact coefficient ring.
//!
//! The coefficient domain is a type parameter, so a rational matrix and a
//! polynomial matrix can never be mixed without an explicit embedding
//! ([`Matrix::to_poly`]) or specialisation ([`Matrix::substitute`]).

use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::poly::{Assignment, MPoly};
use crate::exactmath::rational::Rat;

/// Exact commutative coefficient ring containing ℚ.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn scale(&self, r: &Rat) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Ring::add(&*self, rhs);
    }
}

impl Ring for Rat {
    fn zero() -> Rat {
        Rat::zero()
    }
    fn one() -> Rat {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Rat) -> Rat {
        self + rhs
    }
    fn sub(&self, rhs: &Rat) -> Rat {
        self - rhs
    }
    fn mul(&self, rhs: &Rat) -> Rat {
        self * rhs
    }
    fn neg(&self) -> Rat {
        -self
    }
    fn from_rat(r: &Rat) -> Rat {
        r.clone()
    }
    fn scale(&self, r: &Rat) -> Rat {
        self * r
    }
    fn add_assign(&mut self, rhs: &Rat) {
        *self += rhs;
    }
}

impl Ring for MPoly {
    fn zero() -> MPoly {
        MPoly::zero()
    }
    fn one() -> MPoly {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, rhs: &MPoly) -> MPoly {
        self + rhs
    }
    fn sub(&self, rhs: &MPoly) -> MPoly {
        self - rhs
    }
    fn mul(&self, rhs: &MPoly) -> MPoly {
        self * rhs
    }
    fn neg(&self) -> MPoly {
        -self
    }
    fn from_rat(r: &Rat) -> MPoly {
        MPoly::constant(r.clone())
    }
    fn scale(&self, r: &Rat) -> MPoly {
        MPoly::scale(self, r)
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type QMatrix = Matrix<Rat>;
pub type PolyMatrix = Matrix<MPoly>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: Vec<R>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in diag.into_iter().enumerate() {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds from row vectors; all rows must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Single-column matrix.
    pub fn column_vector(v: Vec<R>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| i == j || self.data[i * self.cols + j].is_zero()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map_entries<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map_entries<S: Ring>(&self, f: impl FnMut(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn check_same_shape(&self, other: &Self, op: &str) {
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "{op}: shape {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other, "add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other, "sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map_entries(|x| x.scale(c))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        self.map_entries(|x| x.mul(c))
    }

    /// Matrix product. Zero entries on either side are skipped, which keeps
    /// products of the permutation-like and diagonal matrices that dominate
    /// functor evaluation close to linear in the number of nonzeros.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "mul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let sparse_rows: Vec<Vec<(usize, &R)>> = (0..other.rows)
            .map(|k| {
                other
                    .row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_rows[k] {
                    out.data[i * other.cols + j].add_assign(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len(), "mul_vec: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign(&a.mul(b));
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; row index `(i, k)` maps to `i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Horizontal concatenation; all blocks need `rows` rows.
    pub fn hstack(rows: usize, blocks: &[Self]) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack: row mismatch");
            for i in 0..rows {
                for j in 0..b.cols {
                    out.set(i, c0 + j, b.get(i, j).clone());
                }
            }
            c0 += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks need `cols` columns.
    pub fn vstack(cols: usize, blocks: &[Self]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack: column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }
}

impl QMatrix {
    /// Embeds a rational matrix as a matrix of constant polynomials.
    pub fn to_poly(&self) -> PolyMatrix {
        self.map_entries(|r| MPoly::constant(r.clone()))
    }

    pub fn from_ints(rows: &[&[i64]]) -> QMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
            cols,
        )
        .expect("ragged integer matrix")
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

impl PolyMatrix {
    /// Entrywise specialisation along `T_i ↦ assignment[i]`.
    pub fn substitute(&self, assignment: &Assignment) -> Result<QMatrix> {
        self.try_map_entries(|p| p.substitute(assignment))
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_kron() {
        let a = QMatrix::from_ints(&[&[1, 2], &[0, 1]]);
        let b = QMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), QMatrix::from_ints(&[&[2, 1], &[1, 0]]));
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(0, 3), Rat::from_int(2));
        assert_eq!(*k.get(1, 1), Rat::from_int(0));
        assert_eq!(*k.get(3, 2), Rat::from_int(1));
        // mixed-product property
        let c = QMatrix::from_ints(&[&[3, -1], &[2, 2]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&a)), a.mul(&c).kron(&b.mul(&a)));
    }

    #[test]
    fn substitution_of_matrix() {
        let m = PolyMatrix::from_rows(
            vec![
                vec![MPoly::var(0), MPoly::one()],
                vec![MPoly::zero(), MPoly::var(0)],
            ],
            2,
        )
        .unwrap();
        let zero: Assignment = [(0, Rat::zero())].into();
        assert_eq!(
            m.substitute(&zero).unwrap(),
            QMatrix::from_ints(&[&[0, 1], &[0, 0]])
        );
        assert_eq!(
            m.substitute(&Assignment::new()),
            Err(Error::MissingVariable(0))
        );
    }

    #[test]
    fn empty_shapes() {
        let a = QMatrix::zeros(0, 3);
        let b = QMatrix::zeros(3, 2);
        assert_eq!(a.mul(&b), QMatrix::zeros(0, 2));
        assert_eq!(QMatrix::identity(0).kron(&b), QMatrix::zeros(0, 0));
    }
}

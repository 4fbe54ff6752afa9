//! Gaussian elimination over ℚ and the subspace/projector machinery built on it.

use crate::error::{Error, Result};
use crate::exactmath::matrix::QMatrix;
use crate::exactmath::rational::Rat;

/// Reduced row-echelon form and the (strictly increasing) pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let ncols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r][col..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        let support: Vec<usize> = (col..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                row[j] -= &(&factor * &pivot_row[j]);
            }
        }
        pivots.push(col);
        r += 1;
    }
    let out = QMatrix::from_rows(rows, ncols).expect("rref keeps shape");
    (out, pivots)
}

pub fn rank(m: &QMatrix) -> usize {
    // eliminate on the smaller side
    if m.rows() > m.cols() {
        rref(&m.transpose()).1.len()
    } else {
        rref(m).1.len()
    }
}

/// A linear subspace of ℚ^ambient, held in reduced column-echelon form:
/// for basis column `j`, row `pivots[j]` is the unit vector `e_j`. Coordinates
/// of a member are therefore read off at the pivot rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: QMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: QMatrix::zeros(ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Subspace {
        Subspace {
            ambient_dim,
            basis: QMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of the columns of `m`.
    pub fn span(m: &QMatrix) -> Subspace {
        image_basis(m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis vectors as columns.
    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.basis.mul_vec(&c) == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim
            && (0..other.dim()).all(|j| self.contains(&other.basis.column(j)))
    }

    /// Coordinates of every column of `m`; fails if some column is outside.
    pub fn coordinates_of_columns(&self, m: &QMatrix) -> Option<QMatrix> {
        let coords = self.pivot_rows(m);
        (self.basis.mul(&coords) == *m).then_some(coords)
    }

    /// Rows of `m` at the pivot positions, i.e. coordinates assuming the
    /// columns of `m` lie in the subspace.
    pub fn pivot_rows(&self, m: &QMatrix) -> QMatrix {
        m.select_rows(&self.pivots)
    }
}

/// Basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &QMatrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = QMatrix::zeros(n, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, Rat::one());
        for (row, &pc) in pivots.iter().enumerate() {
            let x = r.get(row, f);
            if !x.is_zero() {
                basis.set(pc, k, -x);
            }
        }
    }
    Subspace {
        ambient_dim: n,
        basis,
        pivots: free,
    }
}

/// Basis of the column space of `m`.
pub fn image_basis(m: &QMatrix) -> Subspace {
    if m.is_square() && m.is_diagonal() {
        let pivots: Vec<usize> = (0..m.rows()).filter(|&i| !m.get(i, i).is_zero()).collect();
        let mut basis = QMatrix::zeros(m.rows(), pivots.len());
        for (j, &i) in pivots.iter().enumerate() {
            basis.set(i, j, Rat::one());
        }
        return Subspace {
            ambient_dim: m.rows(),
            basis,
            pivots,
        };
    }
    let (r, pivots) = rref(&m.transpose());
    let k = pivots.len();
    Subspace {
        ambient_dim: m.rows(),
        basis: r.select_rows(&(0..k).collect::<Vec<_>>()).transpose(),
        pivots,
    }
}

pub fn inverse(m: &QMatrix) -> Result<QMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(QMatrix::zeros(0, 0));
    }
    let aug = QMatrix::hstack(n, &[m.clone(), QMatrix::identity(n)]);
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Precondition("matrix is singular".into()));
    }
    Ok(QMatrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

pub fn is_invertible(m: &QMatrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

/// The spectral projector `∏_{s≠target} (a − s·I)/(target − s)`.
///
/// The caller guarantees `a` is annihilated by `∏_s (a − s·I)`; under that
/// hypothesis the result is the idempotent onto the `target` eigenspace.
pub fn lagrange_projector(a: &QMatrix, spectrum: &[Rat], target: &Rat) -> Result<QMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    for (i, s) in spectrum.iter().enumerate() {
        if spectrum[..i].contains(s) {
            return Err(Error::SpectrumNotDistinct);
        }
    }
    if !spectrum.contains(target) {
        return Err(Error::TargetOutsideSpectrum);
    }
    let n = a.rows();
    let others: Vec<&Rat> = spectrum.iter().filter(|s| *s != target).collect();
    if a.is_diagonal() {
        // same product, evaluated entrywise
        let diag = (0..n)
            .map(|i| {
                let x = a.get(i, i);
                others
                    .iter()
                    .map(|s| &(x - *s) / &(target - *s))
                    .product::<Rat>()
            })
            .collect();
        return Ok(QMatrix::diagonal(diag));
    }
    let mut p = QMatrix::identity(n);
    for s in others {
        let factor = a
            .sub(&QMatrix::scalar(n, s.clone()))
            .scale(&(target - s).recip());
        p = p.mul(&factor);
    }
    Ok(p)
}

//! Exact linear algebra over the rationals.
//!
//! Everything here is plain Gauss-Jordan elimination on [`Matrix`] values
//! with [`Scalar`] entries. Pivots are chosen to prefer units so that the
//! mostly 0/±1 matrices coming out of quiver representations stay small.

mod matrix;
mod scalar;

pub use matrix::Matrix;
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.matrix.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.matrix.cols()).filter(|&j| !is_pivot[j]).collect()
    }
}

/// Gauss-Jordan elimination restricted to the first `limit` columns.
fn rref_limited(mut m: Matrix, limit: usize) -> Rref {
    let (rows, cols) = m.shape();
    let limit = limit.min(cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..limit {
        if r == rows {
            break;
        }
        let mut best: Option<usize> = None;
        for i in r..rows {
            let x = &m[(i, c)];
            if x.is_zero() {
                continue;
            }
            if x.is_one() || (-x).is_one() {
                best = Some(i);
                break;
            }
            if best.is_none() {
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        if p != r {
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
        }
        let inv = m[(r, c)].recip();
        if !inv.is_one() {
            for j in c..cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
        }
        let pivot_row: Vec<(usize, Scalar)> =
            (c..cols).filter(|&j| !m[(r, j)].is_zero()).map(|j| (j, m[(r, j)].clone())).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m[(i, c)].clone();
            if factor.is_zero() {
                continue;
            }
            let neg = -&factor;
            for (j, v) in &pivot_row {
                let mut e = m[(i, *j)].clone();
                e.add_mul(&neg, v);
                m[(i, *j)] = e;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: m, pivots }
}

pub fn rref(m: &Matrix) -> Rref {
    rref_limited(m.clone(), m.cols())
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank()
}

/// Basis of the null space of `m`. Each basis vector has a 1 in one free
/// column and 0 in every other free column, so the coordinates of a kernel
/// element are its entries at [`kernel_free_columns`].
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    kernel_with_free_columns(m).0
}

pub fn kernel_free_columns(m: &Matrix) -> Vec<usize> {
    kernel_with_free_columns(m).1
}

pub fn kernel_with_free_columns(m: &Matrix) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let red = rref(m);
    let free = red.free_columns();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); m.cols()];
            v[f] = Scalar::one();
            for (r, &p) in red.pivots.iter().enumerate() {
                v[p] = -&red.matrix[(r, f)];
            }
            v
        })
        .collect();
    (basis, free)
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length mismatch");
    let rhs = Matrix::from_columns(m.rows(), &[b.to_vec()]);
    let aug = Matrix::hstack(&[m, &rhs]);
    let red = rref_limited(aug, m.cols());
    let last = m.cols();
    for r in red.rank()..m.rows() {
        if !red.matrix[(r, last)].is_zero() {
            return None;
        }
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (r, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix[(r, last)].clone();
    }
    Some(x)
}

/// Solves `m X = b` column by column for a matrix right-hand side.
pub fn solve_matrix(m: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(b.rows(), m.rows(), "right-hand side row mismatch");
    let aug = Matrix::hstack(&[m, b]);
    let red = rref_limited(aug, m.cols());
    for r in red.rank()..m.rows() {
        for j in 0..b.cols() {
            if !red.matrix[(r, m.cols() + j)].is_zero() {
                return None;
            }
        }
    }
    let mut x = Matrix::zero(m.cols(), b.cols());
    for (r, &p) in red.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x[(p, j)] = red.matrix[(r, m.cols() + j)].clone();
        }
    }
    Some(x)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let x = solve_matrix(m, &Matrix::identity(m.rows()))?;
    if rank(m) == m.rows() {
        Some(x)
    } else {
        None
    }
}

/// Indices of a maximal linearly independent subset of the columns of `m`.
pub fn independent_columns(m: &Matrix) -> Vec<usize> {
    rref(m).pivots
}

/// A basis of the column space, drawn from the columns of `m`.
pub fn image_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    independent_columns(m).into_iter().map(|j| m.column(j)).collect()
}

/// A subspace of `Q^ambient`, kept in reduced echelon form so that membership
/// tests and coordinates modulo the subspace are single reduction passes.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ambient: usize,
    rows: Vec<(usize, Vec<(usize, Scalar)>)>,
    complement: Vec<usize>,
}

impl QuotientMap {
    pub fn new(ambient: usize, subspace: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        for v in subspace {
            if v.len() != ambient {
                return Err(LinalgError::LengthMismatch { expected: ambient, found: v.len() });
            }
        }
        let m = Matrix::from_rows_shaped(subspace.len(), ambient, subspace.to_vec());
        let red = rref(&m);
        let complement = red.free_columns();
        let rows = red
            .pivots
            .iter()
            .enumerate()
            .map(|(r, &p)| {
                let entries = (0..ambient)
                    .filter(|&j| !red.matrix[(r, j)].is_zero())
                    .map(|j| (j, red.matrix[(r, j)].clone()))
                    .collect();
                (p, entries)
            })
            .collect();
        Ok(QuotientMap { ambient, rows, complement })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn subspace_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    /// Ambient indices of the unit vectors spanning the chosen complement.
    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    /// The representative in the complement of the class of `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::LengthMismatch { expected: self.ambient, found: v.len() });
        }
        let mut w = v.to_vec();
        for (p, entries) in &self.rows {
            let c = w[*p].clone();
            if c.is_zero() {
                continue;
            }
            let neg = -&c;
            for (j, x) in entries {
                w[*j].add_mul(&neg, x);
            }
        }
        Ok(w)
    }

    /// Coordinates of the class of `v` with respect to the complement basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        let w = self.reduce(v)?;
        Ok(self.complement.iter().map(|&j| w[j].clone()).collect())
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Ambient vector representing the `k`-th complement basis class.
    pub fn lift(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.ambient];
        v[self.complement[k]] = Scalar::one();
        v
    }

    /// Ambient vector representing the class with the given coordinates.
    pub fn lift_coordinates(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.complement.len());
        let mut v = vec![Scalar::zero(); self.ambient];
        for (c, &j) in coords.iter().zip(&self.complement) {
            v[j] = c.clone();
        }
        v
    }
}

/// Coordinates of the class of `v` in `Q^ambient_dim / span(subspace)`.
pub fn quotient_coordinates(
    ambient_dim: usize,
    subspace: &[Vec<Scalar>],
    v: &[Scalar],
) -> Result<Vec<Scalar>, LinalgError> {
    QuotientMap::new(ambient_dim, subspace)?.coordinates(v)
}

/// Rank of a family of vectors of common length `len`.
pub fn rank_of_vectors(len: usize, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows_shaped(vectors.len(), len, vectors.to_vec()))
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

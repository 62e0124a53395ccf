//! Dense exact matrices.
//!
//! Shape and ring mismatches inside arithmetic are programming errors and panic;
//! constructors that take external data return [`Error`] instead.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::ring::{Scalar, ScalarRing};

/// A row vector or column vector; which one is fixed by context.
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: ScalarRing,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(ring: ScalarRing, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: ScalarRing, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries over `ring`.
    pub fn from_rows(ring: ScalarRing, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for s in row {
                if s.ring() != ring {
                    return Err(Error::RingMismatch {
                        expected: ring,
                        found: s.ring(),
                    });
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            ring,
            rows: n_rows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(ring: ScalarRing, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Self::from_rows(ring, cols, rows).expect("rectangular integer literal")
    }

    /// The `n × n` matrix unit `E_ij`.
    pub fn unit(ring: ScalarRing, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        m[(i, j)] = ring.one();
        m
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
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

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.ring, rhs.ring, "matrix product ring mismatch");
        let mut out = Matrix::zero(self.ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.ring.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix shape mismatch"
        );
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, exp: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.ring, self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(ring: ScalarRing, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    /// Row-major flattening, used to treat `End(M)` as a coordinate space.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn unflatten(ring: ScalarRing, rows: usize, cols: usize, data: Vector) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    /// Rank over the fraction field.
    ///
    /// Over Q and Z this runs fraction-free (Bareiss) elimination on an integer
    /// copy; over GF(p) ordinary Gaussian elimination.
    pub fn rank(&self) -> usize {
        crate::linalg::rank(self)
    }

    /// Inverse over a field; `None` if singular or over Z.
    pub fn inverse(&self) -> Option<Matrix> {
        crate::linalg::inverse(self)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, s) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{s}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `Σ cᵢ vᵢ` over equal-length vectors.
pub fn combine(
    ring: ScalarRing,
    len: usize,
    terms: impl IntoIterator<Item = (Scalar, Vector)>,
) -> Vector {
    let mut acc = vec![ring.zero(); len];
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        for (a, b) in acc.iter_mut().zip(&v) {
            if !b.is_zero() {
                *a = &*a + &(&c * b);
            }
        }
    }
    acc
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn unit_vector(ring: ScalarRing, n: usize, i: usize) -> Vector {
    let mut v = vec![ring.zero(); n];
    v[i] = ring.one();
    v
}

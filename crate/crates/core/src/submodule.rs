//! Submodules of `Rⁿ` in canonical form, and the lattice operations on them.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{echelon_coordinates, reduce};
use crate::matrix::{Matrix, Vector};
use crate::ring::{Scalar, ScalarRing};

/// A submodule of `Rⁿ`, stored by its canonical basis.
///
/// Over fields the basis is the reduced row echelon form of any generating set,
/// over Z its Hermite normal form. Because the form is unique, two submodules
/// are equal as sets iff they compare equal with `==`.
///
/// Over Z a submodule is the span of its generators, not its saturation:
/// `span{(2, 0)}` does not contain `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    ring: ScalarRing,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Submodule {
    /// Canonical basis of the row span of `generators`.
    pub fn span(ring: ScalarRing, ambient: usize, generators: Vec<Vector>) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: g.len(),
                });
            }
            if let Some(s) = g.iter().find(|s| s.ring() != ring) {
                return Err(Error::RingMismatch {
                    expected: ring,
                    found: s.ring(),
                });
            }
        }
        Ok(Self::span_unchecked(ring, ambient, generators))
    }

    pub(crate) fn span_unchecked(
        ring: ScalarRing,
        ambient: usize,
        generators: Vec<Vector>,
    ) -> Self {
        let red = reduce(ring, ambient, generators, false);
        Submodule {
            ring,
            ambient,
            basis: red.basis,
            pivots: red.pivots,
        }
    }

    /// The row span of a matrix.
    pub fn from_matrix(m: &Matrix) -> Self {
        Self::span_unchecked(m.ring(), m.cols(), m.row_vectors())
    }

    pub fn zero(ring: ScalarRing, ambient: usize) -> Self {
        Submodule {
            ring,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ring: ScalarRing, ambient: usize) -> Self {
        Submodule {
            ring,
            ambient,
            basis: (0..ambient)
                .map(|i| crate::matrix::unit_vector(ring, ambient, i))
                .collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Number of basis rows (the rank of the free module).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ring, self.ambient, self.basis.clone())
            .expect("canonical basis is rectangular")
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether this is all of `Rⁿ`.
    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
            && self
                .basis
                .iter()
                .zip(&self.pivots)
                .all(|(row, &p)| row[p].is_one())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if let Some(s) = v.iter().find(|s| s.ring() != self.ring) {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: s.ring(),
            });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Submodule) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the submodule.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        self.check_vector(v)?;
        Ok(echelon_coordinates(&self.basis, &self.pivots, v))
    }

    /// Whether `v` is an `R`-linear combination of the basis rows.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub(crate) fn contains_unchecked(&self, v: &[Scalar]) -> bool {
        echelon_coordinates(&self.basis, &self.pivots, v).is_some()
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Submodule) -> Result<bool> {
        other.check_compatible(self)?;
        Ok(self.basis.iter().all(|v| other.contains_unchecked(v)))
    }

    /// Lattice join.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.ring, self.ambient, gens))
    }

    /// Lattice meet.
    ///
    /// With `A`, `B` the basis matrices, the pairs `(x, y)` with `xA + yB = 0`
    /// form the left kernel of `[A; B]`; the meet is `{xA}` over that kernel.
    /// Over Z the left kernel is the full integer one, so the meet is exact.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compatible(other)?;
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let red = reduce(self.ring, self.ambient, stacked, true);
        let a = self.rank();
        let gens = red
            .left_kernel()
            .iter()
            .map(|t| {
                let terms = t[..a].iter().cloned().zip(self.basis.iter().cloned());
                crate::matrix::combine(self.ring, self.ambient, terms)
            })
            .collect();
        Ok(Self::span_unchecked(self.ring, self.ambient, gens))
    }

    /// The image of the submodule under a linear map (column convention).
    pub fn map(&self, m: &Matrix) -> Result<Submodule> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        let gens = self.basis.iter().map(|v| m.apply(v)).collect();
        Ok(Self::span_unchecked(self.ring, m.rows(), gens))
    }

    /// Whether `m` maps the submodule into `target`.
    pub(crate) fn maps_into(&self, m: &Matrix, target: &Submodule) -> bool {
        self.basis
            .iter()
            .all(|v| target.contains_unchecked(&m.apply(v)))
    }
}

/// `{v : m·v = 0}` in canonical form; over Z the full (saturated) integer kernel.
pub fn kernel(m: &Matrix) -> Submodule {
    // The kernel of m is the left kernel of mᵀ.
    let red = reduce(m.ring(), m.rows(), m.transpose().row_vectors(), true);
    Submodule::span_unchecked(m.ring(), m.cols(), red.left_kernel().to_vec())
}

/// Column span of `m` inside the codomain.
pub fn image(m: &Matrix) -> Submodule {
    Submodule::from_matrix(&m.transpose())
}

/// Outcome of a nilpotency test on a single endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoNilpotency {
    /// `mᵏ = 0` with `k` least.
    Nilpotent { index: usize },
    /// `mⁿ ≠ 0` at the ambient rank `n`, so no power vanishes.
    NotNilpotent { power: Matrix },
}

impl EndoNilpotency {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, EndoNilpotency::Nilpotent { .. })
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            EndoNilpotency::Nilpotent { index } => Some(*index),
            EndoNilpotency::NotNilpotent { .. } => None,
        }
    }
}

/// Least `k ≤ n` with `mᵏ = 0`, or the nonzero power `mⁿ` as refutation.
///
/// Over Z the module sits inside a Q-vector space of the same rank, where
/// Cayley–Hamilton bounds the index of a nilpotent map by `n`.
pub fn is_nilpotent_endo(m: &Matrix) -> Result<EndoNilpotency> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut power = Matrix::identity(m.ring(), n);
    for k in 0..=n {
        if power.is_zero() {
            return Ok(EndoNilpotency::Nilpotent { index: k });
        }
        if k < n {
            power = power.mul(m);
        }
    }
    Ok(EndoNilpotency::NotNilpotent { power })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(ring: ScalarRing, rows: &[&[i64]]) -> Vec<Vector> {
        rows.iter()
            .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
            .collect()
    }

    fn span(ring: ScalarRing, n: usize, rows: &[&[i64]]) -> Submodule {
        Submodule::span(ring, n, vecs(ring, rows)).unwrap()
    }

    #[test]
    fn integer_span_is_not_saturated() {
        let z = ScalarRing::INTEGERS;
        let s = span(z, 2, &[&[2, 0], &[0, 2]]);
        assert_eq!(s.basis(), vecs(z, &[&[2, 0], &[0, 2]]).as_slice());
        assert!(!s.is_full());
        let t = span(z, 2, &[&[2, 0]]);
        assert!(!t.contains(&vecs(z, &[&[1, 0]])[0]).unwrap());
        assert!(t.contains(&vecs(z, &[&[-4, 0]])[0]).unwrap());
    }

    #[test]
    fn rational_dependent_rows_collapse() {
        let q = ScalarRing::RATIONALS;
        let s = span(q, 2, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.basis(), vecs(q, &[&[1, 2]]).as_slice());
        assert!(s.contains(&vecs(q, &[&[1, 0]])[0]).is_ok_and(|b| !b));
        let t = span(q, 2, &[&[2, 0]]);
        assert!(t.contains(&vecs(q, &[&[1, 0]])[0]).unwrap());
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let z = ScalarRing::INTEGERS;
        let s = span(z, 2, &[&[1, 7], &[0, 3]]);
        assert_eq!(s.basis(), vecs(z, &[&[1, 1], &[0, 3]]).as_slice());
        let t = span(z, 2, &[&[-3, 0], &[5, 0]]);
        assert_eq!(t.basis(), vecs(z, &[&[1, 0]]).as_slice());
    }

    #[test]
    fn lattice_identities() {
        let z = ScalarRing::INTEGERS;
        let x = span(z, 2, &[&[2, 4], &[0, 6]]);
        assert_eq!(x.sum(&Submodule::zero(z, 2)).unwrap(), x);
        assert_eq!(x.intersect(&Submodule::full(z, 2)).unwrap(), x);
        let a = span(z, 2, &[&[2, 0]]);
        let b = span(z, 2, &[&[0, 3]]);
        assert_eq!(a.sum(&b).unwrap(), span(z, 2, &[&[2, 0], &[0, 3]]));
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let q = ScalarRing::RATIONALS;
        let a = Submodule::full(q, 2);
        let b = Submodule::full(q, 3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(
            a.contains(&vecs(q, &[&[1]])[0]),
            Err(Error::DimensionMismatch { .. })
        ));
        let z = Submodule::full(ScalarRing::INTEGERS, 2);
        assert!(matches!(a.intersect(&z), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn kernels() {
        let q = ScalarRing::RATIONALS;
        assert!(kernel(&Matrix::identity(q, 3)).is_zero());
        assert_eq!(
            kernel(&Matrix::from_i64(q, &[&[0, 1], &[0, 0]])),
            span(q, 2, &[&[1, 0]])
        );
        let z = ScalarRing::INTEGERS;
        let k = kernel(&Matrix::from_i64(z, &[&[2, 4]]));
        assert_eq!(k, span(z, 2, &[&[2, -1]]));
        // 2·2 + 4·(−1) = 0 and gcd(2, 1) = 1.
        let k = kernel(&Matrix::from_i64(z, &[&[6, 4, 2]]));
        assert_eq!(k.rank(), 2);
        for v in k.basis() {
            assert!(Matrix::from_i64(z, &[&[6, 4, 2]])
                .apply(v)
                .iter()
                .all(Scalar::is_zero));
        }
        // saturation: (1, -1, -1) is in the kernel and must be found
        assert!(k.contains(&vecs(z, &[&[1, -1, -1]])[0]).unwrap());
    }

    #[test]
    fn image_is_column_span() {
        let z = ScalarRing::INTEGERS;
        let m = Matrix::from_i64(z, &[&[2, 0], &[0, 0], &[0, 4]]);
        assert_eq!(image(&m), span(z, 3, &[&[2, 0, 0], &[0, 0, 4]]));
    }

    #[test]
    fn nilpotent_endomorphisms() {
        let q = ScalarRing::RATIONALS;
        assert_eq!(
            is_nilpotent_endo(&Matrix::zero(q, 0, 0)).unwrap().index(),
            Some(0)
        );
        assert_eq!(
            is_nilpotent_endo(&Matrix::zero(q, 2, 2)).unwrap().index(),
            Some(1)
        );
        let j = Matrix::from_i64(q, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(is_nilpotent_endo(&j).unwrap().index(), Some(3));
        let m = Matrix::from_i64(q, &[&[1, 1], &[-1, -1]]);
        assert_eq!(is_nilpotent_endo(&m).unwrap().index(), Some(2));
        let id = Matrix::identity(q, 2);
        assert!(!is_nilpotent_endo(&id).unwrap().is_nilpotent());
        assert!(matches!(
            is_nilpotent_endo(&Matrix::zero(q, 1, 2)),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        ));
    }

    #[test]
    fn gf2_membership() {
        let f = ScalarRing::prime_field(2).unwrap();
        let s = span(f, 3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert!(s.contains(&vecs(f, &[&[1, 1, 0]])[0]).unwrap());
        assert!(!s.contains(&vecs(f, &[&[1, 0, 0]])[0]).unwrap());
    }
}

//! Echelon kernels.
//!
//! Over fields rows are brought to reduced row echelon form with monic pivots.
//! Over Z rows are brought to row-style Hermite normal form with unimodular
//! extended-gcd row operations: positive pivots, entries above a pivot reduced
//! into `[0, pivot)`. In both cases the leftmost available column is pivoted
//! first, so the nonzero rows form a canonical basis of the row span.
//!
//! Both reductions can carry a transform `T` with `T · A = E`; the rows of `T`
//! matching the zero rows of `E` span the left kernel of `A` (over Z the whole
//! integer left kernel, because `T` is unimodular).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{Matrix, Vector};
use crate::ring::{RingKind, Scalar, ScalarRing};

pub(crate) struct Reduction {
    /// Nonzero canonical rows, top to bottom.
    pub basis: Vec<Vector>,
    pub pivots: Vec<usize>,
    /// Transform rows, one per input row; empty unless requested.
    pub transform: Vec<Vector>,
}

impl Reduction {
    /// Transform rows whose image is zero: a basis of the left kernel.
    pub fn left_kernel(&self) -> &[Vector] {
        &self.transform[self.basis.len().min(self.transform.len())..]
    }
}

pub(crate) fn reduce(ring: ScalarRing, cols: usize, rows: Vec<Vector>, track: bool) -> Reduction {
    match ring.kind() {
        RingKind::Integers => reduce_integers(ring, cols, rows, track),
        _ => reduce_field(ring, cols, rows, track),
    }
}

fn augment(ring: ScalarRing, rows: Vec<Vector>, track: bool) -> Vec<Vector> {
    let m = rows.len();
    rows.into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            if track {
                r.extend((0..m).map(|j| if i == j { ring.one() } else { ring.zero() }));
            }
            r
        })
        .collect()
}

fn split(
    rows: Vec<Vector>,
    cols: usize,
    rank: usize,
    pivots: Vec<usize>,
    track: bool,
) -> Reduction {
    let mut basis = Vec::with_capacity(rank);
    let mut transform = Vec::new();
    for (i, mut r) in rows.into_iter().enumerate() {
        let tail = r.split_off(cols);
        if i < rank {
            basis.push(r);
        }
        if track {
            transform.push(tail);
        }
    }
    Reduction {
        basis,
        pivots,
        transform,
    }
}

fn reduce_field(ring: ScalarRing, cols: usize, rows: Vec<Vector>, track: bool) -> Reduction {
    let mut a = augment(ring, rows, track);
    let m = a.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero field element is invertible");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    split(a, cols, r, pivots, track)
}

/// `(g, s, t)` with `g = s·a + t·b`, `g > 0`; requires `(a, b) ≠ (0, 0)`.
fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = core::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = core::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = core::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

fn reduce_integers(ring: ScalarRing, cols: usize, rows: Vec<Vector>, track: bool) -> Reduction {
    let aug = augment(ring, rows, track);
    let mut a: Vec<Vec<BigInt>> = aug
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|s| s.as_integer().expect("integer scalar").clone())
                .collect()
        })
        .collect();
    let m = a.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            let (g, s, t) = egcd(&a[r][c], &a[i][c]);
            let ar = &a[r][c] / &g;
            let ai = &a[i][c] / &g;
            let new_r: Vec<BigInt> = a[r]
                .iter()
                .zip(&a[i])
                .map(|(x, y)| &s * x + &t * y)
                .collect();
            let new_i: Vec<BigInt> = a[r]
                .iter()
                .zip(&a[i])
                .map(|(x, y)| &ai * x - &ar * y)
                .collect();
            a[r] = new_r;
            a[i] = new_i;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let piv = a[r][c].clone();
        for i in 0..r {
            let q = a[i][c].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            let pivot_row = a[r].clone();
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rows = a
        .into_iter()
        .map(|row| row.into_iter().map(|v| ring.from_bigint(v)).collect())
        .collect();
    split(rows, cols, r, pivots, track)
}

/// Coordinates of `v` against an echelon basis, by back-substitution.
///
/// Over Z the quotient at each pivot must be exact, which is what makes
/// membership in a (non-saturated) span decidable from its HNF.
pub(crate) fn echelon_coordinates(
    basis: &[Vector],
    pivots: &[usize],
    v: &[Scalar],
) -> Option<Vector> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (row, &p) in basis.iter().zip(pivots) {
        let c = exact_quotient(&rest[p], &row[p])?;
        if !c.is_zero() {
            for (x, y) in rest.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&c * y);
                }
            }
        }
        coords.push(c);
    }
    rest.iter().all(Scalar::is_zero).then_some(coords)
}

/// `a / b` when it exists in the ring (`b ≠ 0`).
pub(crate) fn exact_quotient(a: &Scalar, b: &Scalar) -> Option<Scalar> {
    match (a.as_integer(), b.as_integer()) {
        (Some(x), Some(y)) => {
            let (q, rem) = x.div_rem(y);
            rem.is_zero().then(|| ScalarRing::INTEGERS.from_bigint(q))
        }
        _ => Some(a * &b.inv()?),
    }
}

/// Solves `c · A = v` for the row vector `c`, where `A` has the given rows.
pub(crate) fn solve_left(
    ring: ScalarRing,
    cols: usize,
    rows: &[Vector],
    v: &[Scalar],
) -> Option<Vector> {
    let red = reduce(ring, cols, rows.to_vec(), true);
    let d = echelon_coordinates(&red.basis, &red.pivots, v)?;
    let n = rows.len();
    let terms = d.into_iter().zip(red.transform.iter().cloned());
    Some(crate::matrix::combine(ring, n, terms))
}

pub(crate) fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() || !m.ring().is_field() {
        return None;
    }
    let n = m.rows();
    // Rows of T with T·M = I give M^{-1} = T.
    let red = reduce(m.ring(), n, m.row_vectors(), true);
    if red.basis.len() != n {
        return None;
    }
    Matrix::from_rows(m.ring(), n, red.transform).ok()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, and the division by the
/// previous pivot is exact, so entries grow only polynomially.
pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Integer copy of a Q- or Z-matrix with each row scaled by the lcm of its denominators.
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            if let Some(first) = row.first() {
                if first.as_integer().is_some() {
                    return row
                        .iter()
                        .map(|s| s.as_integer().unwrap().clone())
                        .collect();
                }
            }
            let lcm = row.iter().fold(BigInt::one(), |acc, s| {
                acc.lcm(s.as_rational().expect("rational scalar").denom())
            });
            row.iter()
                .map(|s| {
                    let q = s.as_rational().unwrap();
                    q.numer() * (&lcm / q.denom())
                })
                .collect()
        })
        .collect()
}

pub(crate) fn rank(m: &Matrix) -> usize {
    match m.ring().kind() {
        RingKind::PrimeField => reduce_field(m.ring(), m.cols(), m.row_vectors(), false)
            .basis
            .len(),
        _ => bareiss_rank(integer_rows(m), m.cols()),
    }
}

/// Determinant over Q or Z (fraction-free), or over GF(p) by elimination.
pub fn determinant(m: &Matrix) -> Scalar {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let ring = m.ring();
    match ring.kind() {
        RingKind::Integers => ring.from_bigint(bareiss_determinant(integer_rows(m))),
        RingKind::Rationals => {
            let denom = (0..m.rows()).fold(BigInt::one(), |acc, r| {
                acc * m.row(r).iter().fold(BigInt::one(), |l, s| {
                    l.lcm(s.as_rational().unwrap().denom())
                })
            });
            let det = ring.from_bigint(bareiss_determinant(integer_rows(m)));
            &det * &ring.from_bigint(denom).inv().expect("nonzero denominator")
        }
        RingKind::PrimeField => {
            let n = m.rows();
            let mut a = m.row_vectors();
            let mut det = ring.one();
            for k in 0..n {
                let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                    return ring.zero();
                };
                if p != k {
                    a.swap(k, p);
                    det = -det;
                }
                det = &det * &a[k][k];
                let inv = a[k][k].inv().unwrap();
                for i in k + 1..n {
                    let f = &a[i][k] * &inv;
                    if f.is_zero() {
                        continue;
                    }
                    let pivot_row = a[k].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            det
        }
    }
}

//! Weight spaces relative to a nilpotent sub-algebra `H`, the zero root
//! sub-algebra `L⁰`, and the check that `H = L⁰` exactly when `H` is Cartan.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{LieAlgebra, LieModule};
use crate::error::{Error, Result};
use crate::lattice::{is_invariant, is_nilpotent, lower_central_series, normalizer, LcsChain, Nilpotency};
use crate::matrix::Matrix;
use crate::ring::{RingKind, Scalar, ScalarRing};
use crate::submodule::{kernel, Submodule};

/// Largest prime for which the eigenvalue scan over GF(p) is attempted.
pub const MAX_SCAN_MODULUS: u64 = 1 << 20;

/// Largest constant term whose divisors are enumerated for rational eigenvalues.
const MAX_DIVISOR_SEARCH: u64 = 1_000_000_000_000;

/// A bracket-closed `H ⊆ L` together with the lower central series of `H`
/// acting on itself, which must terminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentSubalgebra {
    ambient: LieAlgebra,
    carrier: Submodule,
    algebra: LieAlgebra,
    certificate: LcsChain,
}

impl NilpotentSubalgebra {
    pub fn new(ambient: &LieAlgebra, carrier: Submodule) -> Result<Self> {
        let algebra = ambient.subalgebra(&carrier)?;
        let certificate = lower_central_series(&algebra.adjoint());
        if !certificate.is_nilpotent() {
            return Err(Error::Precondition("sub-algebra is not nilpotent"));
        }
        Ok(NilpotentSubalgebra { ambient: ambient.clone(), carrier, algebra, certificate })
    }

    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn carrier(&self) -> &Submodule {
        &self.carrier
    }

    /// `H` as an algebra in the carrier's canonical basis.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn certificate(&self) -> &LcsChain {
        &self.certificate
    }

    pub fn rank(&self) -> usize {
        self.carrier.rank()
    }
}

/// `χ(hᵢ)` for each basis row `hᵢ` of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub values: Vec<Scalar>,
}

impl Weight {
    pub fn zero(h: &NilpotentSubalgebra) -> Self {
        let ring = h.ambient.ring();
        Weight { values: (0..h.rank()).map(|_| ring.zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }
}

/// A module viewed over a nilpotent sub-algebra `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    pub subalgebra: NilpotentSubalgebra,
    pub module: LieModule,
}

/// Restricts the action of `L` on `module` to `H`.
pub fn restrict(module: &LieModule, h: &NilpotentSubalgebra) -> Result<HModule> {
    if module.algebra() != h.ambient() {
        return Err(Error::Precondition("sub-algebra belongs to a different algebra"));
    }
    let restricted = module.restrict_algebra(h.carrier())?;
    Ok(HModule { subalgebra: h.clone(), module: restricted })
}

/// `⋂ᵢ ker (φ_{hᵢ} − χ(hᵢ))ⁿ` with `n = rank M`, checked to be `H`-invariant.
pub fn weight_space(hm: &HModule, weight: &Weight) -> Result<Submodule> {
    let module = &hm.module;
    let ring = module.ring();
    let n = module.rank();
    if weight.values.len() != hm.subalgebra.rank() {
        return Err(Error::DimensionMismatch { expected: hm.subalgebra.rank(), found: weight.values.len() });
    }
    if let Some(s) = weight.values.iter().find(|s| s.ring() != ring) {
        return Err(Error::RingMismatch { expected: ring, found: s.ring() });
    }
    let mut space = Submodule::full(ring, n);
    for (a, chi) in module.action().iter().zip(&weight.values) {
        let shifted = a.sub(&Matrix::identity(ring, n).scale(chi));
        let power = shifted.pow(n);
        let generalized = kernel(&power);
        debug_assert_eq!(generalized, kernel(&power.mul(&shifted)));
        space = space.intersect(&generalized)?;
    }
    if !is_invariant(module.action(), &space) {
        return Err(Error::NotInvariant("weight space"));
    }
    Ok(space)
}

/// `L⁰` with the table of brackets witnessing that it is a sub-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroRootSubalgebra {
    pub carrier: Submodule,
    pub algebra: LieAlgebra,
}

pub fn zero_root_subalgebra(algebra: &LieAlgebra, h: &NilpotentSubalgebra) -> Result<ZeroRootSubalgebra> {
    let hm = restrict(&algebra.adjoint(), h)?;
    let carrier = weight_space(&hm, &Weight::zero(h))?;
    let closed = algebra.subalgebra(&carrier).map_err(|e| match e {
        Error::NotClosed(_) => Error::Internal("zero root space is not bracket-closed"),
        other => other,
    })?;
    Ok(ZeroRootSubalgebra { carrier, algebra: closed })
}

/// `H` is Cartan when it is nilpotent (carried by the type) and self-normalizing.
pub fn is_cartan(algebra: &LieAlgebra, h: &NilpotentSubalgebra) -> Result<bool> {
    Ok(normalizer(algebra, h.carrier())? == *h.carrier())
}

/// Both sides of `H = L⁰ ⟺ H Cartan`, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanReport {
    pub zero_root: Submodule,
    pub normalizer: Submodule,
    pub zero_root_equals_h: bool,
    pub is_cartan: bool,
    pub h_in_zero_root: bool,
    /// `L⁰` as an `H`-module.
    pub zero_weight_nilpotency: Nilpotency,
}

impl CartanReport {
    pub fn equivalent(&self) -> bool {
        self.zero_root_equals_h == self.is_cartan
    }
}

pub fn cartan_iff_zero_root(algebra: &LieAlgebra, h: &NilpotentSubalgebra) -> Result<CartanReport> {
    let zero_root = zero_root_subalgebra(algebra, h)?.carrier;
    let normalizer = normalizer(algebra, h.carrier())?;
    let is_cartan = normalizer == *h.carrier();
    let zero_root_equals_h = zero_root == *h.carrier();
    let h_in_zero_root = h.carrier().is_contained_in(&zero_root)?;
    let over_h = algebra.adjoint().restrict_algebra(h.carrier())?;
    let zero_weight_nilpotency = is_nilpotent(&over_h.restrict_to(&zero_root)?);
    Ok(CartanReport { zero_root, normalizer, zero_root_equals_h, is_cartan, h_in_zero_root, zero_weight_nilpotency })
}

/// Nonzero weight spaces found for `H` acting on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpaceDecomposition {
    pub weights: Vec<(Weight, Submodule)>,
    /// Rank of the sum of all found spaces.
    pub spanned_rank: usize,
    /// Whether the spaces fill the module.
    pub splits: bool,
}

/// Finds the weights of `H` and their spaces. Without supplied weights, `H` must
/// have rank at most 1: eigenvalues come from the roots of the characteristic
/// polynomial in Q, or from a scan of GF(p).
pub fn weight_decomposition(hm: &HModule, supplied: Option<&[Weight]>) -> Result<RootSpaceDecomposition> {
    let ring = hm.module.ring();
    if !ring.is_field() {
        return Err(Error::FieldRequired("weight decomposition"));
    }
    let candidates = match supplied {
        Some(ws) => ws.to_vec(),
        None => match hm.subalgebra.rank() {
            0 => alloc::vec![Weight { values: Vec::new() }],
            1 => eigenvalues(&hm.module.action()[0])?
                .into_iter()
                .map(|v| Weight { values: alloc::vec![v] })
                .collect(),
            _ => return Err(Error::Precondition("weights must be supplied when H has rank above 1")),
        },
    };
    let mut weights = Vec::new();
    for w in candidates {
        if weights.iter().any(|(seen, _): &(Weight, Submodule)| *seen == w) {
            continue;
        }
        let space = weight_space(hm, &w)?;
        if !space.is_zero() {
            weights.push((w, space));
        }
    }
    let mut total = Submodule::zero(ring, hm.module.rank());
    for (_, s) in &weights {
        total = total.sum(s)?;
    }
    let spanned_rank = total.rank();
    Ok(RootSpaceDecomposition { weights, spanned_rank, splits: spanned_rank == hm.module.rank() })
}

/// `det(xI − A)` by Berkowitz's division-free recursion; coefficients from the
/// leading `1` down to the constant term.
pub fn characteristic_polynomial(a: &Matrix) -> Result<Vec<Scalar>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let ring = a.ring();
    let mut poly = alloc::vec![ring.one()];
    for r in 0..a.rows() {
        // Leading (r+1)×(r+1) block: [[M, S], [R, a_rr]].
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(ring.one());
        toeplitz.push(-&a[(r, r)]);
        let mut v: Vec<Scalar> = (0..r).map(|i| a[(i, r)].clone()).collect();
        for _ in 0..r {
            let rv = (0..r).fold(ring.zero(), |acc, j| acc + &a[(r, j)] * &v[j]);
            toeplitz.push(-rv);
            v = (0..r).map(|i| (0..r).fold(ring.zero(), |acc, j| acc + &a[(i, j)] * &v[j])).collect();
        }
        poly = (0..r + 2)
            .map(|i| {
                (0..=i.min(poly.len() - 1)).fold(ring.zero(), |acc, j| acc + &toeplitz[i - j] * &poly[j])
            })
            .collect();
    }
    Ok(poly)
}

fn evaluate(poly: &[Scalar], x: &Scalar) -> Scalar {
    let ring = x.ring();
    poly.iter().fold(ring.zero(), |acc, c| &acc * x + c.clone())
}

/// Distinct eigenvalues of `a` lying in its (field) coefficient ring, ascending.
pub fn eigenvalues(a: &Matrix) -> Result<Vec<Scalar>> {
    let ring = a.ring();
    match ring.kind() {
        RingKind::Integers => Err(Error::FieldRequired("eigenvalues")),
        RingKind::PrimeField => {
            let p = ring.modulus().expect("prime field");
            if p > MAX_SCAN_MODULUS {
                return Err(Error::Precondition("prime too large for an eigenvalue scan"));
            }
            let poly = characteristic_polynomial(a)?;
            Ok((0..p)
                .map(|c| ring.from_i64(c as i64))
                .filter(|c| evaluate(&poly, c).is_zero())
                .collect())
        }
        RingKind::Rationals => rational_eigenvalues(a),
    }
}

/// Scales `a` by the lcm `d` of its denominators; `d·a` has a monic integer
/// characteristic polynomial, so its rational eigenvalues are integers dividing
/// the lowest nonzero coefficient.
fn rational_eigenvalues(a: &Matrix) -> Result<Vec<Scalar>> {
    let q = ScalarRing::RATIONALS;
    let z = ScalarRing::INTEGERS;
    let d = a
        .entries()
        .iter()
        .map(|s| s.as_rational().expect("rational entry").denom().clone())
        .fold(BigInt::from(1), |acc, den| acc.lcm(&den));
    let n = a.rows();
    let mut scaled = Matrix::zero(z, n, n);
    for r in 0..n {
        for c in 0..n {
            let v = a[(r, c)].as_rational().expect("rational entry") * &d;
            scaled[(r, c)] = z.from_bigint(v.to_integer());
        }
    }
    let poly = characteristic_polynomial(&scaled)?;
    let mut roots: Vec<BigInt> = Vec::new();
    let trimmed_len = poly.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    if trimmed_len < poly.len() {
        roots.push(BigInt::zero());
    }
    let trimmed = &poly[..trimmed_len];
    if trimmed.len() > 1 {
        let constant = trimmed[trimmed.len() - 1].as_integer().expect("integer").abs();
        let bound = constant
            .to_u64()
            .filter(|&c| c <= MAX_DIVISOR_SEARCH)
            .ok_or(Error::Precondition("characteristic polynomial too large for a rational root search"))?;
        for div in divisors(bound) {
            for candidate in [BigInt::from(div), -BigInt::from(div)] {
                if evaluate(trimmed, &z.from_bigint(candidate.clone())).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    let mut values: Vec<Scalar> = roots
        .into_iter()
        .map(|r| q.from_bigint(r) * q.from_bigint(d.clone()).inv().expect("nonzero lcm"))
        .collect();
    values.sort_by(|x, y| x.as_rational().cmp(&y.as_rational()));
    values.dedup();
    Ok(values)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

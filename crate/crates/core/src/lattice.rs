//! Lie submodules and ideals, the ideal bracket `[I, N]`, lower central series,
//! nilpotency certificates, maximal trivial submodules, quotients and normalizers.

use alloc::vec::Vec;

use crate::algebra::{LieAlgebra, LieModule};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::submodule::{kernel, Submodule};

/// A submodule of a Lie module that is invariant under every `φ(eₖ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSubmodule {
    carrier: Submodule,
}

impl LieSubmodule {
    /// Rejects carriers that are not invariant under the action.
    pub fn new(module: &LieModule, carrier: Submodule) -> Result<Self> {
        module.check_carrier(&carrier)?;
        if !is_invariant(module.action(), &carrier) {
            return Err(Error::NotInvariant("Lie submodule carrier"));
        }
        Ok(LieSubmodule { carrier })
    }

    pub fn top(module: &LieModule) -> Self {
        LieSubmodule {
            carrier: Submodule::full(module.ring(), module.rank()),
        }
    }

    pub fn bottom(module: &LieModule) -> Self {
        LieSubmodule {
            carrier: Submodule::zero(module.ring(), module.rank()),
        }
    }

    pub fn carrier(&self) -> &Submodule {
        &self.carrier
    }

    pub fn into_carrier(self) -> Submodule {
        self.carrier
    }
}

/// An ideal `I ⊆ L`: `[L, I] ⊆ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieIdeal {
    carrier: Submodule,
}

impl LieIdeal {
    pub fn new(algebra: &LieAlgebra, carrier: Submodule) -> Result<Self> {
        let adjoint = algebra.adjoint();
        adjoint.check_carrier(&carrier)?;
        if !is_invariant(adjoint.action(), &carrier) {
            return Err(Error::NotInvariant("ideal carrier"));
        }
        Ok(LieIdeal { carrier })
    }

    pub fn top(algebra: &LieAlgebra) -> Self {
        LieIdeal {
            carrier: Submodule::full(algebra.ring(), algebra.rank()),
        }
    }

    pub fn bottom(algebra: &LieAlgebra) -> Self {
        LieIdeal {
            carrier: Submodule::zero(algebra.ring(), algebra.rank()),
        }
    }

    pub fn carrier(&self) -> &Submodule {
        &self.carrier
    }
}

pub(crate) fn is_invariant(action: &[Matrix], carrier: &Submodule) -> bool {
    action.iter().all(|a| carrier.maps_into(a, carrier))
}

/// `[I, N]`: the span of all `[x, m]` with `x` in `I` and `m` in `N`.
///
/// For an ideal `I` this span is already a Lie submodule by the Leibniz rule;
/// the result is re-checked and a failure is reported as an error.
pub fn ideal_bracket(
    module: &LieModule,
    ideal: &LieIdeal,
    n: &LieSubmodule,
) -> Result<LieSubmodule> {
    let algebra = module.algebra();
    if ideal.carrier.ambient_rank() != algebra.rank() {
        return Err(Error::DimensionMismatch {
            expected: algebra.rank(),
            found: ideal.carrier.ambient_rank(),
        });
    }
    module.check_carrier(&n.carrier)?;
    let carrier = bracket_span(module, ideal.carrier.basis(), &n.carrier);
    if !is_invariant(module.action(), &carrier) {
        return Err(Error::NotInvariant("ideal bracket"));
    }
    Ok(LieSubmodule { carrier })
}

fn bracket_span(module: &LieModule, ideal_basis: &[Vector], n: &Submodule) -> Submodule {
    let mut gens = Vec::with_capacity(ideal_basis.len() * n.rank());
    for g in ideal_basis {
        let a = module.to_endomorphism(g).expect("checked element");
        gens.extend(n.basis().iter().map(|v| a.apply(v)));
    }
    Submodule::span_unchecked(module.ring(), module.rank(), gens)
}

/// How the lower central series ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcsVerdict {
    /// `C_k = ⊥`: nilpotent of class `k`.
    Terminated(usize),
    /// `C_{k+1} = C_k ≠ ⊥`: a nonzero fixed point of `[⊤, ·]`.
    Stabilized(usize),
    /// Over Z only: `C_{k+1} ⊊ C_k` with equal nonzero rank. The rational spans
    /// agree, so every later term keeps that rank and the series never reaches ⊥.
    RankStabilized(usize),
}

/// The computed lower central series `C₀ = ⊤ ⊇ C₁ ⊇ …`.
///
/// `terms` holds `C₀ … C_k` for `Terminated(k)` and `Stabilized(k)`, and
/// `C₀ … C_{k+1}` for `RankStabilized(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsChain {
    pub terms: Vec<Submodule>,
    pub verdict: LcsVerdict,
}

impl LcsChain {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self.verdict, LcsVerdict::Terminated(_))
    }

    /// Nilpotency class, when nilpotent.
    pub fn class(&self) -> Option<usize> {
        match self.verdict {
            LcsVerdict::Terminated(k) => Some(k),
            _ => None,
        }
    }

    /// The last nonzero term, if any.
    pub fn last_nonzero(&self) -> Option<&Submodule> {
        self.terms.iter().rev().find(|t| !t.is_zero())
    }

    /// Turns the chain into a nilpotency verdict with its certificate.
    pub fn certificate(&self) -> Nilpotency {
        match self.verdict {
            LcsVerdict::Terminated(class) => Nilpotency::Nilpotent {
                class,
                chain: self.terms.clone(),
            },
            LcsVerdict::Stabilized(step) => Nilpotency::NotNilpotent(NonNilpotency::FixedPoint {
                step,
                term: self.terms[step].clone(),
            }),
            LcsVerdict::RankStabilized(step) => {
                Nilpotency::NotNilpotent(NonNilpotency::RankPlateau {
                    step,
                    term: self.terms[step].clone(),
                    next: self.terms[step + 1].clone(),
                })
            }
        }
    }
}

/// Iterates `C_{k+1} = [⊤, C_k]` until ⊥, a fixed point, or (over Z) a rank plateau.
///
/// Ranks never increase, and equal consecutive ranks force the rational spans to
/// coincide from then on, so the loop stops after at most `rank(M) + 1` brackets.
pub fn lower_central_series(module: &LieModule) -> LcsChain {
    let algebra = module.algebra();
    let top_basis: Vec<Vector> = (0..algebra.rank())
        .map(|i| algebra.basis_vector(i))
        .collect();
    let mut terms = alloc::vec![Submodule::full(module.ring(), module.rank())];
    loop {
        let k = terms.len() - 1;
        let current = &terms[k];
        if current.is_zero() {
            return LcsChain {
                terms,
                verdict: LcsVerdict::Terminated(k),
            };
        }
        let next = bracket_span(module, &top_basis, current);
        if next == *current {
            return LcsChain {
                terms,
                verdict: LcsVerdict::Stabilized(k),
            };
        }
        let plateau = next.rank() == current.rank();
        terms.push(next);
        if plateau {
            return LcsChain {
                terms,
                verdict: LcsVerdict::RankStabilized(k),
            };
        }
    }
}

/// `I.lcs M k`: the `k`-fold iterate of `N ↦ [I, N]` starting from ⊤.
pub fn relative_lcs(module: &LieModule, ideal: &LieIdeal, k: usize) -> Result<LieSubmodule> {
    let mut n = LieSubmodule::top(module);
    for _ in 0..k {
        n = ideal_bracket(module, ideal, &n)?;
    }
    Ok(n)
}

/// Evidence that a module is not nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonNilpotency {
    /// `[⊤, N] = N ≠ ⊥`, so `C_j ⊇ N` for every `j`.
    FixedPoint { step: usize, term: Submodule },
    /// `[⊤, N] = N' ⊆ N` with `rank N' = rank N > 0` (integer coefficients).
    RankPlateau {
        step: usize,
        term: Submodule,
        next: Submodule,
    },
}

/// Nilpotency verdict together with a re-checkable certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Nilpotent { class: usize, chain: Vec<Submodule> },
    NotNilpotent(NonNilpotency),
}

impl Nilpotency {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, Nilpotency::Nilpotent { .. })
    }

    /// Re-checks the certificate against `module` from scratch.
    pub fn verify(&self, module: &LieModule) -> bool {
        let top = LieIdeal::top(module.algebra());
        match self {
            Nilpotency::Nilpotent { class, chain } => {
                if chain.len() != class + 1 {
                    return false;
                }
                let mut n = LieSubmodule::top(module);
                if n.carrier != chain[0] {
                    return false;
                }
                for expected in &chain[1..] {
                    match ideal_bracket(module, &top, &n) {
                        Ok(next) if next.carrier == *expected => n = next,
                        _ => return false,
                    }
                }
                n.carrier.is_zero()
            }
            Nilpotency::NotNilpotent(NonNilpotency::FixedPoint { term, .. }) => {
                if term.is_zero() || module.check_carrier(term).is_err() {
                    return false;
                }
                bracket_span(module, &top_basis(module.algebra()), term) == *term
            }
            Nilpotency::NotNilpotent(NonNilpotency::RankPlateau { term, next, .. }) => {
                if term.is_zero() || module.check_carrier(term).is_err() {
                    return false;
                }
                let image = bracket_span(module, &top_basis(module.algebra()), term);
                image == *next
                    && next.rank() == term.rank()
                    && next.is_contained_in(term).unwrap_or(false)
            }
        }
    }
}

fn top_basis(algebra: &LieAlgebra) -> Vec<Vector> {
    (0..algebra.rank())
        .map(|i| algebra.basis_vector(i))
        .collect()
}

/// Decides nilpotency through the lower central series.
pub fn is_nilpotent(module: &LieModule) -> Nilpotency {
    lower_central_series(module).certificate()
}

/// `{m : [x, m] = 0 for all x}`: the common kernel of the basis actions.
pub fn max_triv_submodule(module: &LieModule) -> LieSubmodule {
    let refs: Vec<&Matrix> = module.action().iter().collect();
    let stacked = Matrix::vstack(module.ring(), module.rank(), &refs);
    LieSubmodule {
        carrier: kernel(&stacked),
    }
}

/// A nonzero vector killed by every `φ_x`, taken from the last nonzero term of
/// the lower central series of a nilpotent module.
pub fn nontrivial_max_triv_witness(module: &LieModule) -> Result<Vector> {
    if module.rank() == 0 {
        return Err(Error::Precondition("module must be nonzero"));
    }
    let chain = lower_central_series(module);
    if !chain.is_nilpotent() {
        return Err(Error::Precondition("module must be nilpotent"));
    }
    let term = chain
        .last_nonzero()
        .ok_or(Error::Internal("nonzero module has a nonzero C_0"))?;
    let m0 = term.basis()[0].clone();
    if module
        .action()
        .iter()
        .any(|a| a.apply(&m0).iter().any(|s| !s.is_zero()))
    {
        return Err(Error::Internal(
            "last nonzero lcs term is not killed by the action",
        ));
    }
    Ok(m0)
}

/// `M / N` presented on the complement spanned by the non-pivot coordinates of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientModule {
    /// The induced module, over the acting algebra.
    pub module: LieModule,
    pub denominator: Submodule,
    /// `(m − r) × m`: coordinates of the class of a vector.
    pub projection: Matrix,
    /// `m × (m − r)`: the standard lift of a class.
    pub section: Matrix,
    /// Coordinates (in the ambient algebra) of the acting algebra's basis.
    pub acting_basis: Vec<Vector>,
}

/// The quotient module, optionally over a sub-algebra `acting` that leaves `n` invariant.
pub fn quotient(
    module: &LieModule,
    n: &Submodule,
    acting: Option<&Submodule>,
) -> Result<QuotientModule> {
    let ring = module.ring();
    if !ring.is_field() {
        return Err(Error::FieldRequired("quotient"));
    }
    module.check_carrier(n)?;
    let algebra = module.algebra();
    let (sub, acting_basis) = match acting {
        Some(c) => (algebra.subalgebra(c)?, c.basis().to_vec()),
        None => (algebra.clone(), top_basis(algebra)),
    };
    let endos: Vec<Matrix> = acting_basis
        .iter()
        .map(|g| module.to_endomorphism(g))
        .collect::<Result<_>>()?;
    if !is_invariant(&endos, n) {
        return Err(Error::NotInvariant("quotient denominator"));
    }
    let m = module.rank();
    let complement: Vec<usize> = (0..m).filter(|c| !n.pivots().contains(c)).collect();
    let q = complement.len();
    let mut projection = Matrix::zero(ring, q, m);
    let mut section = Matrix::zero(ring, m, q);
    for (t, &c) in complement.iter().enumerate() {
        projection[(t, c)] = ring.one();
        section[(c, t)] = ring.one();
        for (row, &p) in n.basis().iter().zip(n.pivots()) {
            projection[(t, p)] = -&row[c];
        }
    }
    let action = endos
        .iter()
        .map(|a| projection.mul(a).mul(&section))
        .collect();
    let induced = LieModule::new(sub, q, action)?;
    Ok(QuotientModule {
        module: induced,
        denominator: n.clone(),
        projection,
        section,
        acting_basis,
    })
}

/// `{x ∈ L : [x, hᵢ] ∈ span(h) for every basis row hᵢ}`.
///
/// Solved as one linear system in `x` and auxiliary coefficients `yᵢⱼ` with
/// `[x, hᵢ] = Σⱼ yᵢⱼ hⱼ`, then projected to `x`. Over Z the kernel is the full
/// integer kernel, so membership "mod h" is exact.
pub fn normalizer(algebra: &LieAlgebra, h: &Submodule) -> Result<Submodule> {
    let n = algebra.rank();
    if h.ambient_rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.ambient_rank(),
        });
    }
    if h.ring() != algebra.ring() {
        return Err(Error::RingMismatch {
            expected: algebra.ring(),
            found: h.ring(),
        });
    }
    let ring = algebra.ring();
    let r = h.rank();
    let cols = n + r * r;
    let mut system = Matrix::zero(ring, n * r, cols);
    for (i, hi) in h.basis().iter().enumerate() {
        // [x, hᵢ] = −ad_{hᵢ}(x)
        let ad = algebra.ad(hi)?;
        for a in 0..n {
            let row = i * n + a;
            for b in 0..n {
                system[(row, b)] = -&ad[(a, b)];
            }
            for (j, hj) in h.basis().iter().enumerate() {
                system[(row, n + i * r + j)] = -&hj[a];
            }
        }
    }
    let solutions = kernel(&system);
    let gens = solutions.basis().iter().map(|s| s[..n].to_vec()).collect();
    Ok(Submodule::span_unchecked(ring, n, gens))
}

/// The smallest sub-algebra containing `generators`: spans are closed under
/// brackets with the generators until the rank stops growing.
pub fn generated_subalgebra(algebra: &LieAlgebra, generators: Vec<Vector>) -> Result<Submodule> {
    let n = algebra.rank();
    for g in &generators {
        algebra.bracket(g, g)?;
    }
    let mut span = Submodule::span(algebra.ring(), n, generators)?;
    loop {
        let basis = span.basis();
        let mut gens = basis.to_vec();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                gens.push(algebra.bracket_unchecked(x, y));
            }
        }
        let next = Submodule::span_unchecked(algebra.ring(), n, gens);
        if next == span {
            return Ok(span);
        }
        span = next;
    }
}

//! Engel's theorem in both directions, with checkable certificates.
//!
//! Nilpotency of the action is always decided through the lower central series.
//! The remaining routines produce evidence: a strictly triangular flag, an element
//! acting non-nilpotently, a uniform exponent, and the ascent through sub-algebras
//! of the image of the action.

use alloc::vec::Vec;

use crate::algebra::{default_names, LieAlgebra, LieModule};
use crate::error::{Error, Result};
use crate::lattice::{
    is_nilpotent, lower_central_series, max_triv_submodule, quotient, LcsChain, Nilpotency,
    QuotientModule,
};
use crate::matrix::{Matrix, Vector};
use crate::sample::ElementSampler;
use crate::submodule::{is_nilpotent_endo, EndoNilpotency, Submodule};

/// Where in the search order a witness was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStage {
    Basis,
    Bracket,
    DoubleBracket,
    Random,
}

/// An element `x` with `φ_x` not nilpotent: `φ_xⁿ ≠ 0` at `n = rank M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotencyWitness {
    pub element: Vector,
    pub endo: Matrix,
    pub power: Matrix,
    pub stage: WitnessStage,
}

impl NilpotencyWitness {
    pub fn verify(&self, module: &LieModule) -> bool {
        match module.to_endomorphism(&self.element) {
            Ok(endo) => {
                let power = endo.pow(module.rank());
                endo == self.endo && power == self.power && !power.is_zero()
            }
            Err(_) => false,
        }
    }
}

fn refute(
    module: &LieModule,
    x: &[crate::ring::Scalar],
    stage: WitnessStage,
) -> Option<NilpotencyWitness> {
    let endo = module.to_endomorphism(x).ok()?;
    match is_nilpotent_endo(&endo).ok()? {
        EndoNilpotency::Nilpotent { .. } => None,
        EndoNilpotency::NotNilpotent { power } => Some(NilpotencyWitness {
            element: x.to_vec(),
            endo,
            power,
            stage,
        }),
    }
}

/// Searches for `x` with `φ_x` not nilpotent: basis elements, brackets
/// `[eᵢ, eⱼ]`, brackets `[eᵢ, [eⱼ, eₖ]]`, then `budget` random combinations with
/// coefficients in `{−2, …, 2}`. The budget bounds only the random stage.
pub fn witness_search(module: &LieModule, budget: usize, seed: u64) -> Result<NilpotencyWitness> {
    if is_nilpotent(module).is_nilpotent() {
        return Err(Error::Precondition(
            "witness search needs a non-nilpotent module",
        ));
    }
    let algebra = module.algebra();
    let n = algebra.rank();
    let basis: Vec<Vector> = (0..n).map(|i| algebra.basis_vector(i)).collect();
    for e in &basis {
        if let Some(w) = refute(module, e, WitnessStage::Basis) {
            return Ok(w);
        }
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = algebra.basis_bracket(i, j);
            if let Some(w) = refute(module, &b, WitnessStage::Bracket) {
                return Ok(w);
            }
            pairs.push(b);
        }
    }
    for e in &basis {
        for b in &pairs {
            let x = algebra.bracket(e, b)?;
            if let Some(w) = refute(module, &x, WitnessStage::DoubleBracket) {
                return Ok(w);
            }
        }
    }
    let mut sampler = ElementSampler::new(module.ring(), seed);
    for _ in 0..budget {
        let x = sampler.element(n);
        if let Some(w) = refute(module, &x, WitnessStage::Random) {
            return Ok(w);
        }
    }
    Err(Error::Exhausted { budget })
}

/// The decided statement "every `φ_x` is nilpotent", with its evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForallNilpotent {
    pub holds: bool,
    pub certificate: Nilpotency,
    /// A refuting element when `holds` is false and the search succeeded.
    pub witness: Option<NilpotencyWitness>,
}

/// Decides nilpotency of the action through the lower central series and, when
/// it fails, looks for a concrete refuting element.
pub fn check_forall_nilpotent(module: &LieModule, budget: usize, seed: u64) -> ForallNilpotent {
    let certificate = is_nilpotent(module);
    let holds = certificate.is_nilpotent();
    let witness = if holds {
        None
    } else {
        witness_search(module, budget, seed).ok()
    };
    ForallNilpotent {
        holds,
        certificate,
        witness,
    }
}

/// `⊥ = M₀ ⊂ M₁ ⊂ … ⊂ M_s = ⊤` with `φ_x(Mᵢ₊₁) ⊆ Mᵢ`.
///
/// The columns of `change_of_basis` run through bases of `M₁`, then lifts of
/// `M₂/M₁`, and so on; conjugating any `φ_x` by it gives a strictly block upper
/// triangular matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngelFlag {
    pub flag: Vec<Submodule>,
    pub change_of_basis: Matrix,
}

impl EngelFlag {
    /// Action matrices in the adapted basis.
    pub fn adapted_action(&self, module: &LieModule) -> Vec<Matrix> {
        let inverse = self
            .change_of_basis
            .inverse()
            .expect("adapted basis is invertible");
        module
            .action()
            .iter()
            .map(|a| inverse.mul(a).mul(&self.change_of_basis))
            .collect()
    }

    /// Re-checks the flag and the block shape of every adapted action matrix.
    pub fn verify(&self, module: &LieModule) -> bool {
        let m = module.rank();
        let ring = module.ring();
        let (Some(first), Some(last)) = (self.flag.first(), self.flag.last()) else {
            return false;
        };
        if !first.is_zero() || !last.is_full() || self.flag.len() > m + 1 {
            return false;
        }
        if self.change_of_basis.rows() != m || self.change_of_basis.cols() != m {
            return false;
        }
        if self.change_of_basis.inverse().is_none() {
            return false;
        }
        for pair in self.flag.windows(2) {
            if pair[0].ambient_rank() != m || pair[0].rank() >= pair[1].rank() {
                return false;
            }
            if !pair[0].is_contained_in(&pair[1]).unwrap_or(false) {
                return false;
            }
            if !module
                .action()
                .iter()
                .all(|a| pair[1].maps_into(a, &pair[0]))
            {
                return false;
            }
        }
        // leading columns of the adapted basis span each flag term
        for term in &self.flag {
            let cols: Vec<Vector> = (0..term.rank())
                .map(|c| self.change_of_basis.column(c))
                .collect();
            if Submodule::span_unchecked(ring, m, cols) != *term {
                return false;
            }
        }
        let block_of = |idx: usize| self.flag.iter().position(|t| t.rank() > idx).unwrap_or(0);
        self.adapted_action(module).iter().all(|a| {
            (0..m).all(|r| (0..m).all(|c| block_of(r) < block_of(c) || a[(r, c)].is_zero()))
        })
    }
}

/// A quotient `M / Mᵢ` whose maximal trivial submodule is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagRefutation {
    pub step: usize,
    pub partial: Vec<Submodule>,
    pub quotient: QuotientModule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum FlagOutcome {
    Flag(EngelFlag),
    Refuted(FlagRefutation),
}

/// Builds the flag by repeatedly taking the maximal trivial submodule of `M / Mᵢ`.
pub fn engel_flag(module: &LieModule) -> Result<FlagOutcome> {
    let ring = module.ring();
    if !ring.is_field() {
        return Err(Error::FieldRequired("Engel flag"));
    }
    let m = module.rank();
    let mut flag = alloc::vec![Submodule::zero(ring, m)];
    let mut columns: Vec<Vector> = Vec::with_capacity(m);
    loop {
        let current = flag.last().expect("nonempty");
        if current.is_full() {
            break;
        }
        let quo = quotient(module, current, None)?;
        let triv = max_triv_submodule(&quo.module);
        if triv.carrier().is_zero() {
            return Ok(FlagOutcome::Refuted(FlagRefutation {
                step: flag.len() - 1,
                partial: flag,
                quotient: quo,
            }));
        }
        let lifts: Vec<Vector> = triv
            .carrier()
            .basis()
            .iter()
            .map(|v| quo.section.apply(v))
            .collect();
        let mut gens = current.basis().to_vec();
        gens.extend(lifts.iter().cloned());
        columns.extend(lifts);
        let next = Submodule::span_unchecked(ring, m, gens);
        flag.push(next);
    }
    let change_of_basis = Matrix::from_rows(ring, m, columns)?.transpose();
    Ok(FlagOutcome::Flag(EngelFlag {
        flag,
        change_of_basis,
    }))
}

/// Minimal exponents of sampled elements against the uniform bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformExponentReport {
    /// The class `k` of the module: `φ_x^k = 0` is claimed for every `x`.
    pub exponent: usize,
    pub samples: Vec<Vector>,
    pub minimal_exponents: Vec<usize>,
    pub holds: bool,
}

/// Checks `φ_x^k = 0` for `samples` pseudo-random `x`, with `k` the class.
pub fn uniform_exponent_check(
    module: &LieModule,
    samples: usize,
    seed: u64,
) -> Result<UniformExponentReport> {
    let exponent = lower_central_series(module)
        .class()
        .ok_or(Error::Precondition(
            "uniform exponent needs a nilpotent module",
        ))?;
    let mut sampler = ElementSampler::new(module.ring(), seed);
    let xs = sampler.elements(module.algebra().rank(), samples);
    let mut minimal_exponents = Vec::with_capacity(samples);
    let mut holds = true;
    for x in &xs {
        let endo = module.to_endomorphism(x)?;
        holds &= endo.pow(exponent).is_zero();
        match is_nilpotent_endo(&endo)? {
            EndoNilpotency::Nilpotent { index } => minimal_exponents.push(index),
            EndoNilpotency::NotNilpotent { .. } => {
                holds = false;
                minimal_exponents.push(usize::MAX);
            }
        }
    }
    Ok(UniformExponentReport {
        exponent,
        samples: xs,
        minimal_exponents,
        holds,
    })
}

/// `a^k = 0` forces `ad_a^{2k−1} = 0` on any matrix Lie algebra containing `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdNilpotency {
    /// Least `k` with `a^k = 0`.
    pub index: usize,
    pub bound: usize,
    /// Least `j` with `ad_a^j = 0` on the span of the given matrices.
    pub ad_index: usize,
    pub ad_matrix: Matrix,
    pub within_bound: bool,
}

/// Measures the nilpotency index of `ad_a` on the matrix Lie algebra spanned by
/// `subalgebra`, which must contain the nilpotent matrix `a`.
pub fn nilpotent_ad_of_nilpotent(a: &Matrix, subalgebra: &[Matrix]) -> Result<AdNilpotency> {
    let ring = a.ring();
    let dim = a.rows();
    let index = is_nilpotent_endo(a)?
        .index()
        .ok_or(Error::Precondition("matrix is not nilpotent"))?;
    let flat: Vec<Vector> = subalgebra.iter().map(Matrix::flatten).collect();
    for m in subalgebra {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: m.rows().max(m.cols()),
            });
        }
    }
    let span = Submodule::span(ring, dim * dim, flat)?;
    let basis: Vec<Matrix> = span
        .basis()
        .iter()
        .map(|v| Matrix::unflatten(ring, dim, dim, v.clone()))
        .collect();
    let (algebra, _) =
        LieAlgebra::from_matrices(ring, dim, default_names("b", basis.len()), basis)?;
    let coords = span.coordinates(&a.flatten())?.ok_or(Error::Precondition(
        "matrix is not in the span of the sub-algebra",
    ))?;
    let ad_matrix = algebra.ad(&coords)?;
    let ad_index = is_nilpotent_endo(&ad_matrix)?
        .index()
        .ok_or(Error::Internal("ad of a nilpotent matrix is not nilpotent"))?;
    let bound = (2 * index).saturating_sub(1);
    Ok(AdNilpotency {
        index,
        bound,
        ad_index,
        ad_matrix,
        within_bound: ad_index <= bound,
    })
}

/// `L′ = span{φ_{e₁}, …, φ_{eₙ}} ⊆ End(M)` with `M` as its tautological module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeReduction {
    pub algebra: LieAlgebra,
    pub module: LieModule,
    /// Coordinates of each `φ_{eᵢ}` in the basis of `L′`.
    pub images: Vec<Vector>,
}

pub fn range_reduction(module: &LieModule) -> Result<RangeReduction> {
    let ring = module.ring();
    if !ring.is_field() {
        return Err(Error::FieldRequired("range reduction"));
    }
    let m = module.rank();
    let span = Submodule::span(
        ring,
        m * m,
        module.action().iter().map(Matrix::flatten).collect(),
    )?;
    let basis: Vec<Matrix> = span
        .basis()
        .iter()
        .map(|v| Matrix::unflatten(ring, m, m, v.clone()))
        .collect();
    let (algebra, image_module) =
        LieAlgebra::from_matrices(ring, m, default_names("a", basis.len()), basis).map_err(
            |e| match e {
                Error::NotClosed(_) => {
                    Error::Internal("image of the action is not closed under commutator")
                }
                other => other,
            },
        )?;
    let images = module
        .action()
        .iter()
        .map(|a| {
            span.coordinates(&a.flatten())
                .map(|c| c.expect("image lies in its own span"))
        })
        .collect::<Result<_>>()?;
    Ok(RangeReduction {
        algebra,
        module: image_module,
        images,
    })
}

/// One enlargement `K ⊂ K′ = K + span{x}` of the ascent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscentStep {
    pub k: Submodule,
    pub x: Vector,
    /// Class of `x` in `L′ / K`, in the quotient's coordinates.
    pub class: Vector,
    pub next: Submodule,
}

impl AscentStep {
    /// `x ∉ K`, `[K, x] ⊆ K`, `K′ = K + span{x}` one rank larger, `K` an ideal of `K′`.
    pub fn verify(&self, algebra: &LieAlgebra) -> bool {
        let ring = algebra.ring();
        let n = algebra.rank();
        if self.k.ambient_rank() != n || self.x.len() != n {
            return false;
        }
        if self.k.contains(&self.x).unwrap_or(true) {
            return false;
        }
        let normalizes = self.k.basis().iter().all(|h| {
            algebra
                .bracket(h, &self.x)
                .map(|b| self.k.contains(&b).unwrap_or(false))
                .unwrap_or(false)
        });
        let mut gens = self.k.basis().to_vec();
        gens.push(self.x.clone());
        let expected = Submodule::span_unchecked(ring, n, gens);
        if !normalizes || expected != self.next || self.next.rank() != self.k.rank() + 1 {
            return false;
        }
        self.next.basis().iter().all(|y| {
            self.k.basis().iter().all(|h| {
                algebra
                    .bracket(y, h)
                    .map(|b| self.k.contains(&b).unwrap_or(false))
                    .unwrap_or(false)
            })
        })
    }
}

/// The completed ascent `⊥ = K₀ ⊂ K₁ ⊂ … ⊂ K_r = L′` inside the image algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscentChain {
    pub reduction: RangeReduction,
    pub steps: Vec<AscentStep>,
}

impl AscentChain {
    pub fn verify(&self) -> bool {
        let algebra = &self.reduction.algebra;
        let ring = algebra.ring();
        let n = algebra.rank();
        let mut k = Submodule::zero(ring, n);
        for step in &self.steps {
            if step.k != k || !step.verify(algebra) {
                return false;
            }
            k = step.next.clone();
        }
        k.is_full() && self.steps.len() == n
    }
}

/// The sub-algebra `K` at which `L′ / K` is not a nilpotent `K`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscentFailure {
    pub reduction: RangeReduction,
    pub steps: Vec<AscentStep>,
    pub k: Submodule,
    pub chain: LcsChain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AscentOutcome {
    Complete(AscentChain),
    Failed(AscentFailure),
}

/// Grows `K` one dimension at a time inside `L′`: `L′ / K` is a `K`-module, and
/// when it is nilpotent a lift `x` of a nonzero `K`-invariant class satisfies
/// `[K, x] ⊆ K`.
pub fn engelian_ascent(module: &LieModule) -> Result<AscentOutcome> {
    let reduction = range_reduction(module)?;
    let algebra = reduction.algebra.clone();
    let ring = algebra.ring();
    let n = algebra.rank();
    let adjoint = algebra.adjoint();
    let mut k = Submodule::zero(ring, n);
    let mut steps = Vec::with_capacity(n);
    while !k.is_full() {
        let quo = quotient(&adjoint, &k, Some(&k))?;
        let chain = lower_central_series(&quo.module);
        if !chain.is_nilpotent() {
            return Ok(AscentOutcome::Failed(AscentFailure {
                reduction,
                steps,
                k,
                chain,
            }));
        }
        let triv = max_triv_submodule(&quo.module);
        let class = triv
            .carrier()
            .basis()
            .first()
            .cloned()
            .ok_or(Error::Internal(
                "nilpotent nonzero module has zero trivial part",
            ))?;
        let x = quo.section.apply(&class);
        let mut gens = k.basis().to_vec();
        gens.push(x.clone());
        let next = Submodule::span_unchecked(ring, n, gens);
        let step = AscentStep {
            k,
            x,
            class,
            next: next.clone(),
        };
        if !step.verify(&algebra) {
            return Err(Error::Internal("ascent step failed re-verification"));
        }
        steps.push(step);
        k = next;
    }
    Ok(AscentOutcome::Complete(AscentChain { reduction, steps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ring::ScalarRing;
    use alloc::vec;

    fn q() -> ScalarRing {
        ScalarRing::RATIONALS
    }

    fn vector(ring: ScalarRing, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| ring.from_i64(x)).collect()
    }

    #[test]
    fn forall_examples() {
        let triv = LieModule::trivial(catalog::abelian(q(), 2), 2);
        assert!(check_forall_nilpotent(&triv, 10, 0).holds);
        let (_, natural) = catalog::strictly_upper_triangular(q(), 4).unwrap();
        let verdict = check_forall_nilpotent(&natural, 10, 0);
        assert!(verdict.holds);
        match engel_flag(&natural).unwrap() {
            FlagOutcome::Flag(f) => assert_eq!(f.flag.len(), 5),
            FlagOutcome::Refuted(_) => panic!("expected a flag"),
        }
        let (sl2, _) = catalog::sl2(q()).unwrap();
        let verdict = check_forall_nilpotent(&sl2.adjoint(), 10, 0);
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.element, vector(q(), &[0, 1, 0]));
        assert_eq!(w.stage, WitnessStage::Basis);
        assert!(w.verify(&sl2.adjoint()));
    }

    #[test]
    fn witness_search_examples() {
        let (ut2, _) = catalog::upper_triangular(q(), 2).unwrap();
        let w = witness_search(&ut2.adjoint(), 0, 0).unwrap();
        assert_eq!(w.element, vector(q(), &[1, 0, 0]));

        let (alg, _) = catalog::sl2_nilpotent_basis(q()).unwrap();
        let ad = alg.adjoint();
        for a in ad.action() {
            assert!(a.pow(3).is_zero());
        }
        assert!(!is_nilpotent(&ad).is_nilpotent());
        let w = witness_search(&ad, 0, 0).unwrap();
        assert_eq!(w.stage, WitnessStage::Bracket);
        // h = [e, f] = n − e + f
        assert_eq!(w.element, vector(q(), &[-1, 1, 1]));

        let heis = catalog::heisenberg(q()).adjoint();
        assert!(matches!(
            witness_search(&heis, 5, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn flag_examples() {
        let triv = LieModule::trivial(catalog::abelian(q(), 2), 3);
        let FlagOutcome::Flag(f) = engel_flag(&triv).unwrap() else {
            panic!()
        };
        assert_eq!(f.flag.len(), 2);
        assert!(f.verify(&triv));

        let heis = catalog::heisenberg(q()).adjoint();
        let FlagOutcome::Flag(f) = engel_flag(&heis).unwrap() else {
            panic!()
        };
        assert_eq!(f.flag.len(), 3);
        assert_eq!(
            f.flag[1],
            Submodule::span(q(), 3, vec![vector(q(), &[0, 0, 1])]).unwrap()
        );
        assert!(f.verify(&heis));

        let (sl2, _) = catalog::sl2(q()).unwrap();
        let FlagOutcome::Refuted(r) = engel_flag(&sl2.adjoint()).unwrap() else {
            panic!()
        };
        assert_eq!(r.step, 0);

        let z = ScalarRing::INTEGERS;
        assert!(matches!(
            engel_flag(&catalog::heisenberg(z).adjoint()),
            Err(Error::FieldRequired(_))
        ));
    }

    #[test]
    fn forged_flag_is_rejected() {
        let heis = catalog::heisenberg(q()).adjoint();
        let bad = EngelFlag {
            flag: vec![Submodule::zero(q(), 3), Submodule::full(q(), 3)],
            change_of_basis: Matrix::identity(q(), 3),
        };
        assert!(!bad.verify(&heis));
    }

    #[test]
    fn uniform_exponent_examples() {
        let triv = LieModule::trivial(catalog::abelian(q(), 2), 2);
        let r = uniform_exponent_check(&triv, 20, 1).unwrap();
        assert!(r.holds && r.minimal_exponents.iter().all(|&e| e <= 1));

        let heis = catalog::heisenberg(ScalarRing::INTEGERS).adjoint();
        let r = uniform_exponent_check(&heis, 50, 2).unwrap();
        assert_eq!(r.exponent, 2);
        assert!(r.holds);

        let (_, natural) = catalog::strictly_upper_triangular(q(), 4).unwrap();
        let r = uniform_exponent_check(&natural, 100, 3).unwrap();
        assert_eq!(r.exponent, 4);
        assert!(r.holds);
        assert!(r.minimal_exponents.iter().any(|&e| e < 4));

        let (sl2, _) = catalog::sl2(q()).unwrap();
        assert!(uniform_exponent_check(&sl2.adjoint(), 5, 0).is_err());
    }

    #[test]
    fn ad_bound_examples() {
        let (_, natural) = catalog::strictly_upper_triangular(q(), 3).unwrap();
        let mats = natural.action().to_vec();
        let r = nilpotent_ad_of_nilpotent(&Matrix::zero(q(), 3, 3), &mats).unwrap();
        assert_eq!((r.index, r.bound, r.ad_index), (1, 1, 1));
        let r = nilpotent_ad_of_nilpotent(&mats[0], &mats).unwrap();
        assert_eq!((r.index, r.bound, r.ad_index), (2, 3, 2));

        let (_, gl2) = catalog::gl(q(), 2).unwrap();
        let e12 = Matrix::unit(q(), 2, 0, 1);
        let r = nilpotent_ad_of_nilpotent(&e12, gl2.action()).unwrap();
        assert_eq!((r.index, r.bound, r.ad_index), (2, 3, 3));
        assert!(r.ad_matrix.pow(3).is_zero());

        assert!(nilpotent_ad_of_nilpotent(&Matrix::identity(q(), 2), gl2.action()).is_err());
        assert!(nilpotent_ad_of_nilpotent(&e12, &[Matrix::unit(q(), 2, 1, 0)]).is_err());
    }

    #[test]
    fn range_reduction_examples() {
        let triv = LieModule::trivial(catalog::abelian(q(), 2), 2);
        assert_eq!(range_reduction(&triv).unwrap().algebra.rank(), 0);
        let heis = catalog::heisenberg(q()).adjoint();
        let rr = range_reduction(&heis).unwrap();
        assert_eq!(rr.algebra.rank(), 2);
        assert!(is_nilpotent(&rr.module).is_nilpotent());
        let (sl2, _) = catalog::sl2(q()).unwrap();
        let rr = range_reduction(&sl2.adjoint()).unwrap();
        assert_eq!(rr.algebra.rank(), 3);
        assert!(!is_nilpotent(&rr.module).is_nilpotent());
    }

    #[test]
    fn ascent_examples() {
        // On the abelian algebra the trivial module has L′ = 0; a faithful
        // commuting pair of nilpotent matrices gives a rank-2 image instead.
        let triv = LieModule::trivial(catalog::abelian(q(), 2), 2);
        let AscentOutcome::Complete(c) = engelian_ascent(&triv).unwrap() else {
            panic!()
        };
        assert!(c.steps.is_empty() && c.verify());
        let diag = LieModule::new(
            catalog::abelian(q(), 2),
            3,
            vec![Matrix::unit(q(), 3, 0, 2), Matrix::unit(q(), 3, 1, 2)],
        )
        .unwrap();
        let AscentOutcome::Complete(c) = engelian_ascent(&diag).unwrap() else {
            panic!()
        };
        assert_eq!(c.steps.len(), 2);
        assert!(c.verify());

        let heis = catalog::heisenberg(q()).adjoint();
        let AscentOutcome::Complete(c) = engelian_ascent(&heis).unwrap() else {
            panic!()
        };
        assert_eq!(c.steps.len(), c.reduction.algebra.rank());
        assert!(c.verify());

        let (_, natural) = catalog::strictly_upper_triangular(q(), 3).unwrap();
        let AscentOutcome::Complete(c) = engelian_ascent(&natural).unwrap() else {
            panic!()
        };
        assert_eq!(c.steps.len(), 3);
        assert!(c.verify());

        let (sl2, _) = catalog::sl2(q()).unwrap();
        assert!(matches!(
            engelian_ascent(&sl2.adjoint()).unwrap(),
            AscentOutcome::Failed(_)
        ));
    }
}

//! Lie algebras given by structure constants and Lie modules given by action matrices.
//!
//! Axioms are checked on basis tuples only; multilinearity extends them to all
//! elements. Reports enumerate every failing tuple instead of stopping at the
//! first one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::solve_left;
use crate::matrix::{combine, is_zero_vector, Matrix, Vector};
use crate::ring::{Scalar, ScalarRing};
use crate::submodule::Submodule;

/// Candidate structure constants `[eᵢ, eⱼ] = Σₖ cᵏᵢⱼ eₖ`, before validation.
///
/// Any pair `(i, j)` may be set, including `i = j` and both orders of a pair,
/// so that hand-written tables can be checked for alternation and antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    ring: ScalarRing,
    rank: usize,
    entries: BTreeMap<(usize, usize), Vector>,
}

impl BracketTable {
    pub fn new(ring: ScalarRing, rank: usize) -> Self {
        BracketTable {
            ring,
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Sets the whole coordinate vector of `[eᵢ, eⱼ]`.
    pub fn set(&mut self, i: usize, j: usize, value: Vector) -> Result<()> {
        for idx in [i, j] {
            if idx >= self.rank {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    found: idx,
                });
            }
        }
        if value.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: value.len(),
            });
        }
        if let Some(s) = value.iter().find(|s| s.ring() != self.ring) {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: s.ring(),
            });
        }
        self.entries.insert((i, j), value);
        Ok(())
    }

    /// Sets the single coefficient `cᵏᵢⱼ`.
    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> Result<()> {
        if k >= self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: k,
            });
        }
        let mut v = self
            .entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| vec![self.ring.zero(); self.rank]);
        v[k] = c;
        self.set(i, j, v)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Vector> {
        self.entries.get(&(i, j))
    }

    /// The stored entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.entries.iter()
    }

    /// `[eᵢ, eⱼ]` as the table determines it: `cᵢⱼ` if stored, else `−cⱼᵢ`.
    fn effective(&self, i: usize, j: usize) -> Vector {
        if let Some(v) = self.entries.get(&(i, j)) {
            return v.clone();
        }
        if i != j {
            if let Some(v) = self.entries.get(&(j, i)) {
                return v.iter().map(|s| -s).collect();
            }
        }
        vec![self.ring.zero(); self.rank]
    }
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `[eᵢ, eᵢ] ≠ 0`.
    SelfBracket { index: usize, value: Vector },
    /// Both `[eᵢ, eⱼ]` and `[eⱼ, eᵢ]` were given and do not sum to zero.
    Antisymmetry {
        pair: (usize, usize),
        forward: Vector,
        backward: Vector,
    },
    /// `[eᵢ, [eⱼ, eₖ]] ≠ [[eᵢ, eⱼ], eₖ] + [eⱼ, [eᵢ, eₖ]]`.
    Leibniz {
        triple: (usize, usize, usize),
        lhs: Vector,
        rhs: Vector,
    },
    /// `φ([eᵢ, eⱼ]) ≠ φ(eᵢ)φ(eⱼ) − φ(eⱼ)φ(eᵢ)`.
    Commutator {
        pair: (usize, usize),
        lhs: Matrix,
        rhs: Matrix,
    },
}

impl Violation {
    /// The basis indices the violation is located at.
    pub fn location(&self) -> Vec<usize> {
        match self {
            Violation::SelfBracket { index, .. } => vec![*index],
            Violation::Antisymmetry { pair: (i, j), .. }
            | Violation::Commutator { pair: (i, j), .. } => {
                vec![*i, *j]
            }
            Violation::Leibniz {
                triple: (i, j, k), ..
            } => vec![*i, *j, *k],
        }
    }
}

fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| format!("{s}")).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfBracket { index, value } => {
                write!(
                    f,
                    "lie_self fails at {index}: [e{index}, e{index}] = {}",
                    fmt_vector(value)
                )
            }
            Violation::Antisymmetry {
                pair: (i, j),
                forward,
                backward,
            } => write!(
                f,
                "antisymmetry fails at ({i},{j}): {} vs {}",
                fmt_vector(forward),
                fmt_vector(backward)
            ),
            Violation::Leibniz {
                triple: (i, j, k),
                lhs,
                rhs,
            } => write!(
                f,
                "leibniz_lie fails at triple ({i},{j},{k}): lhs {} rhs {}",
                fmt_vector(lhs),
                fmt_vector(rhs)
            ),
            Violation::Commutator {
                pair: (i, j),
                lhs,
                rhs,
            } => {
                write!(
                    f,
                    "module commutator fails at pair ({i},{j}): lhs {lhs} rhs {rhs}"
                )
            }
        }
    }
}

/// All axiom violations found; empty means the structure is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("all axioms hold");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

/// Checks `lie_self` and `leibniz_lie` on every basis triple.
pub fn validate_algebra(table: &BracketTable) -> ValidationReport {
    let n = table.rank;
    let ring = table.ring;
    let mut violations = Vec::new();
    for i in 0..n {
        if let Some(v) = table.get(i, i) {
            if !is_zero_vector(v) {
                violations.push(Violation::SelfBracket {
                    index: i,
                    value: v.clone(),
                });
            }
        }
        for j in i + 1..n {
            if let (Some(a), Some(b)) = (table.get(i, j), table.get(j, i)) {
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    violations.push(Violation::Antisymmetry {
                        pair: (i, j),
                        forward: a.clone(),
                        backward: b.clone(),
                    });
                }
            }
        }
    }
    let full: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| table.effective(i, j)).collect())
        .collect();
    // [u, e_k] and [e_k, u] for a coordinate vector u, through the table.
    let left = |u: &Vector, k: usize| {
        combine(
            ring,
            n,
            u.iter().cloned().zip((0..n).map(|l| full[l][k].clone())),
        )
    };
    let right =
        |k: usize, u: &Vector| combine(ring, n, u.iter().cloned().zip(full[k].iter().cloned()));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = right(i, &full[j][k]);
                let a = left(&full[i][j], k);
                let b = right(j, &full[i][k]);
                let rhs: Vector = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    violations.push(Violation::Leibniz {
                        triple: (i, j, k),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    ValidationReport { violations }
}

/// A validated finite-rank Lie algebra.
///
/// Only `[eᵢ, eⱼ]` with `i < j` is stored; `[eᵢ, eᵢ] = 0` and antisymmetry hold
/// by representation. Basis names are labels only; all computation is by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    ring: ScalarRing,
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vector>,
}

impl LieAlgebra {
    /// Validates `table` and stores its upper triangle.
    pub fn new(names: Vec<String>, table: BracketTable) -> Result<Self> {
        if names.len() != table.rank {
            return Err(Error::DimensionMismatch {
                expected: table.rank,
                found: names.len(),
            });
        }
        validate_algebra(&table).into_result()?;
        let mut brackets = BTreeMap::new();
        for i in 0..table.rank {
            for j in i + 1..table.rank {
                let v = table.effective(i, j);
                if !is_zero_vector(&v) {
                    brackets.insert((i, j), v);
                }
            }
        }
        Ok(LieAlgebra {
            ring: table.ring,
            names,
            brackets,
        })
    }

    /// The abelian algebra with default basis names `x0, x1, …`.
    pub fn abelian(ring: ScalarRing, rank: usize) -> Self {
        LieAlgebra {
            ring,
            names: default_names("x", rank),
            brackets: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Nonzero `[eᵢ, eⱼ]` with `i < j`.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn table(&self) -> BracketTable {
        BracketTable {
            ring: self.ring,
            rank: self.rank(),
            entries: self.brackets.clone(),
        }
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.rank();
        match i.cmp(&j) {
            core::cmp::Ordering::Less => self.brackets.get(&(i, j)).cloned(),
            core::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|s| -s).collect()),
            core::cmp::Ordering::Equal => None,
        }
        .unwrap_or_else(|| vec![self.ring.zero(); n])
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::matrix::unit_vector(self.ring, self.rank(), i)
    }

    pub(crate) fn check_element(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.len(),
            });
        }
        if let Some(s) = x.iter().find(|s| s.ring() != self.ring) {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: s.ring(),
            });
        }
        Ok(())
    }

    /// `[x, y]` by bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let terms = self
            .brackets
            .iter()
            .map(|(&(i, j), v)| (&(&x[i] * &y[j]) - &(&x[j] * &y[i]), v.clone()));
        combine(self.ring, self.rank(), terms)
    }

    /// Matrix of `ad_x = [x, ·]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_element(x)?;
        let n = self.rank();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.bracket_unchecked(x, &self.basis_vector(j)))
            .collect();
        Ok(Matrix::from_rows(self.ring, n, cols)?.transpose())
    }

    /// The adjoint module `ad : L → End(L)`.
    pub fn adjoint(&self) -> LieModule {
        let action = (0..self.rank())
            .map(|k| self.ad(&self.basis_vector(k)).expect("basis vector"))
            .collect();
        LieModule {
            algebra: self.clone(),
            rank: self.rank(),
            action,
        }
    }

    /// The sub-algebra spanned by `carrier`, in the carrier's canonical basis.
    pub fn subalgebra(&self, carrier: &Submodule) -> Result<LieAlgebra> {
        if carrier.ambient_rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: carrier.ambient_rank(),
            });
        }
        let basis = carrier.basis();
        let r = basis.len();
        let mut table = BracketTable::new(self.ring, r);
        for i in 0..r {
            for j in i + 1..r {
                let b = self.bracket_unchecked(&basis[i], &basis[j]);
                let coords = carrier
                    .coordinates(&b)?
                    .ok_or(Error::NotClosed("sub-algebra carrier"))?;
                if !is_zero_vector(&coords) {
                    table.set(i, j, coords)?;
                }
            }
        }
        LieAlgebra::new(default_names("k", r), table)
    }

    /// The Lie algebra spanned by linearly independent `dim × dim` matrices under
    /// the commutator, together with its tautological module.
    pub fn from_matrices(
        ring: ScalarRing,
        dim: usize,
        names: Vec<String>,
        matrices: Vec<Matrix>,
    ) -> Result<(LieAlgebra, LieModule)> {
        for m in &matrices {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.rows().max(m.cols()),
                });
            }
            if m.ring() != ring {
                return Err(Error::RingMismatch {
                    expected: ring,
                    found: m.ring(),
                });
            }
        }
        let flat: Vec<Vector> = matrices.iter().map(Matrix::flatten).collect();
        if Submodule::span(ring, dim * dim, flat.clone())?.rank() != matrices.len() {
            return Err(Error::Precondition("matrices must be linearly independent"));
        }
        let n = matrices.len();
        let mut table = BracketTable::new(ring, n);
        for i in 0..n {
            for j in i + 1..n {
                let c = matrices[i].commutator(&matrices[j]).flatten();
                if is_zero_vector(&c) {
                    continue;
                }
                let coords = solve_left(ring, dim * dim, &flat, &c)
                    .ok_or(Error::NotClosed("matrix span"))?;
                table.set(i, j, coords)?;
            }
        }
        let algebra = LieAlgebra::new(names, table)?;
        let module = LieModule::new(algebra.clone(), dim, matrices)?;
        Ok((algebra, module))
    }
}

pub(crate) fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Checks `φ([eᵢ, eⱼ]) = [φ(eᵢ), φ(eⱼ)]` for every basis pair `i < j`.
pub fn validate_module(
    algebra: &LieAlgebra,
    rank: usize,
    action: &[Matrix],
) -> Result<ValidationReport> {
    check_action_shape(algebra, rank, action)?;
    let n = algebra.rank();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = algebra.basis_bracket(i, j);
            let lhs = endomorphism(algebra.ring, rank, action, &c);
            let rhs = action[i].commutator(&action[j]);
            if lhs != rhs {
                violations.push(Violation::Commutator {
                    pair: (i, j),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(ValidationReport { violations })
}

fn check_action_shape(algebra: &LieAlgebra, rank: usize, action: &[Matrix]) -> Result<()> {
    if action.len() != algebra.rank() {
        return Err(Error::DimensionMismatch {
            expected: algebra.rank(),
            found: action.len(),
        });
    }
    for m in action {
        if m.ring() != algebra.ring {
            return Err(Error::RingMismatch {
                expected: algebra.ring,
                found: m.ring(),
            });
        }
        if m.rows() != rank || m.cols() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: if m.rows() != rank { m.rows() } else { m.cols() },
            });
        }
    }
    Ok(())
}

fn endomorphism(ring: ScalarRing, rank: usize, action: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut acc = Matrix::zero(ring, rank, rank);
    for (c, a) in x.iter().zip(action) {
        if !c.is_zero() {
            acc = acc.add(&a.scale(c));
        }
    }
    acc
}

/// A validated finite-rank Lie module: one action matrix `φ(eₖ)` per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    algebra: LieAlgebra,
    rank: usize,
    action: Vec<Matrix>,
}

impl LieModule {
    pub fn new(algebra: LieAlgebra, rank: usize, action: Vec<Matrix>) -> Result<Self> {
        validate_module(&algebra, rank, &action)?.into_result()?;
        Ok(LieModule {
            algebra,
            rank,
            action,
        })
    }

    /// The module of the given rank on which everything acts by zero.
    pub fn trivial(algebra: LieAlgebra, rank: usize) -> Self {
        let action = vec![Matrix::zero(algebra.ring, rank, rank); algebra.rank()];
        LieModule {
            algebra,
            rank,
            action,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> ScalarRing {
        self.algebra.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `φ(eₖ)` for every basis element.
    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `φ_x = Σᵢ xᵢ φ(eᵢ)`.
    pub fn to_endomorphism(&self, x: &[Scalar]) -> Result<Matrix> {
        self.algebra.check_element(x)?;
        Ok(endomorphism(self.ring(), self.rank, &self.action, x))
    }

    /// `[x, v]`.
    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_vector(v)?;
        Ok(self.to_endomorphism(x)?.apply(v))
    }

    pub(crate) fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: v.len(),
            });
        }
        if let Some(s) = v.iter().find(|s| s.ring() != self.ring()) {
            return Err(Error::RingMismatch {
                expected: self.ring(),
                found: s.ring(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_carrier(&self, carrier: &Submodule) -> Result<()> {
        if carrier.ring() != self.ring() {
            return Err(Error::RingMismatch {
                expected: self.ring(),
                found: carrier.ring(),
            });
        }
        if carrier.ambient_rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: carrier.ambient_rank(),
            });
        }
        Ok(())
    }

    /// The same space viewed as a module over the sub-algebra spanned by `carrier`.
    pub fn restrict_algebra(&self, carrier: &Submodule) -> Result<LieModule> {
        let sub = self.algebra.subalgebra(carrier)?;
        let action = carrier
            .basis()
            .iter()
            .map(|g| endomorphism(self.ring(), self.rank, &self.action, g))
            .collect();
        LieModule::new(sub, self.rank, action)
    }

    /// The invariant submodule `carrier` as a module in its own canonical basis.
    pub fn restrict_to(&self, carrier: &Submodule) -> Result<LieModule> {
        self.check_carrier(carrier)?;
        let r = carrier.rank();
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let mut cols = Vec::with_capacity(r);
            for b in carrier.basis() {
                let image = a.apply(b);
                cols.push(
                    carrier
                        .coordinates(&image)?
                        .ok_or(Error::NotInvariant("submodule carrier"))?,
                );
            }
            action.push(Matrix::from_rows(self.ring(), r, cols)?.transpose());
        }
        LieModule::new(self.algebra.clone(), r, action)
    }
}

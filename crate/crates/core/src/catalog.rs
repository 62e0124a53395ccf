//! Built-in example algebras.
//!
//! Matrix families are built from matrix units `E_ij` (1-based labels) and ship
//! with their natural column module. Strictly upper triangular units are
//! ordered by distance from the diagonal, so `strictly_upper_triangular(3)` has
//! exactly the Heisenberg table `[E12, E23] = E13`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{BracketTable, LieAlgebra, LieModule};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::ScalarRing;
use crate::submodule::Submodule;

pub const NAMES: &[&str] = &[
    "abelian",
    "heisenberg",
    "strictly_upper_triangular",
    "upper_triangular",
    "sl2",
    "sl2_nilpotent_basis",
    "gl",
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub algebra: LieAlgebra,
    pub natural: Option<LieModule>,
    /// Named sub-algebra carriers of interest (Cartan candidates, centres, …).
    pub subalgebras: Vec<(String, Submodule)>,
}

/// Looks up a catalog member; sized families take `1..=12` and default to a small size.
pub fn catalog(name: &str, ring: ScalarRing, size: Option<usize>) -> Result<CatalogEntry> {
    let sized = |default: usize| -> Result<usize> {
        let n = size.unwrap_or(default);
        if (1..=12).contains(&n) {
            Ok(n)
        } else {
            Err(Error::ParameterOutOfRange(n))
        }
    };
    let unsized_ = || -> Result<()> {
        match size {
            None => Ok(()),
            Some(_) => Err(Error::Precondition(
                "this catalog entry takes no size parameter",
            )),
        }
    };
    match name {
        "abelian" => {
            let n = sized(2)?;
            let algebra = abelian(ring, n);
            let axis = Submodule::span(ring, n, vec![algebra.basis_vector(0)])?;
            Ok(CatalogEntry {
                algebra,
                natural: None,
                subalgebras: vec![("axis".to_string(), axis)],
            })
        }
        "heisenberg" => {
            unsized_()?;
            let algebra = heisenberg(ring);
            let center = Submodule::span(ring, 3, vec![algebra.basis_vector(2)])?;
            Ok(CatalogEntry {
                algebra,
                natural: None,
                subalgebras: vec![("center".to_string(), center)],
            })
        }
        "strictly_upper_triangular" => {
            let (algebra, module) = strictly_upper_triangular(ring, sized(3)?)?;
            Ok(CatalogEntry {
                algebra,
                natural: Some(module),
                subalgebras: Vec::new(),
            })
        }
        "upper_triangular" => {
            let (algebra, module) = upper_triangular(ring, sized(2)?)?;
            Ok(CatalogEntry {
                algebra,
                natural: Some(module),
                subalgebras: Vec::new(),
            })
        }
        "gl" => {
            let (algebra, module) = gl(ring, sized(2)?)?;
            Ok(CatalogEntry {
                algebra,
                natural: Some(module),
                subalgebras: Vec::new(),
            })
        }
        "sl2" => {
            unsized_()?;
            let (algebra, module) = sl2(ring)?;
            let h = Submodule::span(ring, 3, vec![algebra.basis_vector(1)])?;
            let borel = Submodule::span(
                ring,
                3,
                vec![algebra.basis_vector(0), algebra.basis_vector(1)],
            )?;
            Ok(CatalogEntry {
                algebra,
                natural: Some(module),
                subalgebras: vec![("H".to_string(), h), ("borel".to_string(), borel)],
            })
        }
        "sl2_nilpotent_basis" => {
            unsized_()?;
            let (algebra, module) = sl2_nilpotent_basis(ring)?;
            Ok(CatalogEntry {
                algebra,
                natural: Some(module),
                subalgebras: Vec::new(),
            })
        }
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}

pub fn abelian(ring: ScalarRing, n: usize) -> LieAlgebra {
    LieAlgebra::abelian(ring, n)
}

/// Basis `(e, f, z)` with `[e, f] = z`.
pub fn heisenberg(ring: ScalarRing) -> LieAlgebra {
    let mut table = BracketTable::new(ring, 3);
    table
        .set_coefficient(0, 1, 2, ring.one())
        .expect("in range");
    let names = ["e", "f", "z"].iter().map(|s| s.to_string()).collect();
    LieAlgebra::new(names, table).expect("Heisenberg table is valid")
}

fn unit_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("E{}{}", i + 1, j + 1)
    } else {
        format!("E{}_{}", i + 1, j + 1)
    }
}

fn from_units(
    ring: ScalarRing,
    n: usize,
    units: Vec<(usize, usize)>,
) -> Result<(LieAlgebra, LieModule)> {
    let names = units.iter().map(|&(i, j)| unit_name(n, i, j)).collect();
    let mats = units
        .iter()
        .map(|&(i, j)| Matrix::unit(ring, n, i, j))
        .collect();
    LieAlgebra::from_matrices(ring, n, names, mats)
}

fn strict_units(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|d| (0..n - d).map(move |i| (i, i + d)))
        .collect()
}

pub fn strictly_upper_triangular(ring: ScalarRing, n: usize) -> Result<(LieAlgebra, LieModule)> {
    from_units(ring, n, strict_units(n))
}

/// Diagonal units first, then the strictly upper units.
pub fn upper_triangular(ring: ScalarRing, n: usize) -> Result<(LieAlgebra, LieModule)> {
    let mut units: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    units.extend(strict_units(n));
    from_units(ring, n, units)
}

pub fn gl(ring: ScalarRing, n: usize) -> Result<(LieAlgebra, LieModule)> {
    from_units(
        ring,
        n,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
    )
}

/// Basis `(e, h, f)` of 2×2 trace-zero matrices: `[e, h] = −2e`, `[e, f] = h`, `[h, f] = −2f`.
pub fn sl2(ring: ScalarRing) -> Result<(LieAlgebra, LieModule)> {
    let e = Matrix::from_i64(ring, &[&[0, 1], &[0, 0]]);
    let h = Matrix::from_i64(ring, &[&[1, 0], &[0, -1]]);
    let f = Matrix::from_i64(ring, &[&[0, 0], &[1, 0]]);
    let names = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
    LieAlgebra::from_matrices(ring, 2, names, vec![e, h, f])
}

/// `sl2` in the basis `(e, f, n)` with `n = [[1, 1], [−1, −1]]`; every basis
/// element acts nilpotently in the adjoint representation, the algebra does not.
pub fn sl2_nilpotent_basis(ring: ScalarRing) -> Result<(LieAlgebra, LieModule)> {
    let e = Matrix::from_i64(ring, &[&[0, 1], &[0, 0]]);
    let f = Matrix::from_i64(ring, &[&[0, 0], &[1, 0]]);
    let n = Matrix::from_i64(ring, &[&[1, 1], &[-1, -1]]);
    let names = ["e", "f", "n"].iter().map(|s| s.to_string()).collect();
    LieAlgebra::from_matrices(ring, 2, names, vec![e, f, n])
}

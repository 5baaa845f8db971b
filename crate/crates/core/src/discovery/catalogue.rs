//! Built-in example structures.
//!
//! Bases: `N2`/`NA2` use `(u, v)`, `Dx2 = k[x]/(x²)` uses `(1, x)`, and `M2`
//! uses the matrix units `(e11, e12, e21, e22)`.

use crate::constructions::delta_r;
use crate::error::Result;
use crate::exactlin::{s, BilinearOp, Comultiplication, LinearMap, Scalar, Tensor2, Vector};
use crate::structures::{
    check_bihom_associative, check_inf_hom_bialgebra, BiHomAlgebra, HomAlgebra, HomLie,
    InfHomBialgebra,
};
use crate::verdict::CheckVerdict;

pub const E11: usize = 0;
pub const E12: usize = 1;
pub const E21: usize = 2;
pub const E22: usize = 3;

/// `uu = v`, all other products zero.
pub fn n2_product() -> BilinearOp {
    BilinearOp::from_entries(2, &[(0, 0, 1, 1)])
}

/// `uu = v`, `vu = u`: not associative.
pub fn na2_product() -> BilinearOp {
    BilinearOp::from_entries(2, &[(0, 0, 1, 1), (1, 0, 0, 1)])
}

/// Multiplication of `k[x]/(x²)` in the basis `(1, x)`.
pub fn dx2_product() -> BilinearOp {
    BilinearOp::from_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

/// 2×2 matrix multiplication on matrix units.
pub fn m2_product() -> BilinearOp {
    let mut entries = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                entries.push((2 * a + b, 2 * b + d, 2 * a + d, 1));
            }
        }
    }
    BilinearOp::from_entries(4, &entries)
}

/// `u ↦ −u`, `v ↦ v`.
pub fn sgn() -> LinearMap {
    LinearMap::diagonal_ints(&[-1, 1])
}

/// `1 ↦ 1`, `x ↦ −x` on `Dx2`.
pub fn neg_x() -> LinearMap {
    LinearMap::diagonal_ints(&[1, -1])
}

/// `1 ↦ 1`, `x ↦ 0` on `Dx2`.
pub fn kill_x() -> LinearMap {
    LinearMap::diagonal_ints(&[1, 0])
}

/// Conjugation by `diag(1, −1)` on `M2`: negates `e12` and `e21`.
pub fn conj_d() -> LinearMap {
    LinearMap::diagonal_ints(&[1, -1, -1, 1])
}

/// `u ↦ 0`, `v ↦ v`: a weight-zero Rota-Baxter operator on `N2`.
pub fn r_n2() -> LinearMap {
    LinearMap::diagonal_ints(&[0, 1])
}

/// `R(a) = e12 · a · e12` on `M2`.
pub fn m2_sandwich() -> LinearMap {
    LinearMap::from_fn(4, 4, |i, j| {
        if i == E12 && j == E21 {
            s(1)
        } else {
            Scalar::zero()
        }
    })
}

/// `Δ(1) = 0`, `Δ(x) = x ⊗ x` on `Dx2`.
pub fn dx2_delta() -> Comultiplication {
    Comultiplication::from_entries(2, &[(1, 1, 1, 1)])
}

/// `e12 ⊗ e12`.
pub fn m2_qt_r() -> Tensor2 {
    Tensor2::elementary(4, E12, E12, s(1))
}

pub fn n2() -> BiHomAlgebra {
    BiHomAlgebra::classical(n2_product())
}

pub fn na2() -> BiHomAlgebra {
    BiHomAlgebra::classical(na2_product())
}

pub fn dx2() -> BiHomAlgebra {
    BiHomAlgebra::classical(dx2_product()).with_unit(Vector::basis(2, 0))
}

pub fn m2() -> BiHomAlgebra {
    BiHomAlgebra::classical(m2_product()).with_unit(Vector::from_ints(&[1, 0, 0, 1]))
}

pub fn dx2_infbialg() -> InfHomBialgebra {
    InfHomBialgebra::classical(dx2_product(), dx2_delta())
}

/// `M2` with the comultiplication `Δ_r` of `r = e12 ⊗ e12`.
pub fn m2_qt() -> Result<InfHomBialgebra> {
    let h = HomAlgebra::classical(m2_product());
    let delta = delta_r(&h, &m2_qt_r())?;
    Ok(InfHomBialgebra::classical(m2_product(), delta))
}

/// Commutator bracket of `M2` with `α = id`.
pub fn m2_lie() -> HomLie {
    HomLie::classical(m2_product().commutator())
}

/// A structure bundle held by the catalogue or read from a document.
#[derive(Clone, PartialEq, Debug)]
pub enum Structure {
    Algebra(BiHomAlgebra),
    InfBialgebra(InfHomBialgebra),
    /// An infinitesimal Hom-bialgebra together with the tensor `r` whose
    /// principal derivation is its comultiplication.
    Quasitriangular(InfHomBialgebra, Tensor2),
    Lie(HomLie),
    Map(LinearMap),
}

impl Structure {
    /// Full validation of the bundle; maps have no laws and always pass.
    pub fn validate(&self) -> Result<CheckVerdict> {
        match self {
            Structure::Algebra(a) => check_bihom_associative(a),
            Structure::InfBialgebra(b) | Structure::Quasitriangular(b, _) => {
                check_inf_hom_bialgebra(b)
            }
            Structure::Lie(l) => crate::structures::check_hom_lie(l),
            Structure::Map(_) => Ok(CheckVerdict::pass()),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct CatalogueEntry {
    pub id: String,
    pub structure: Structure,
    pub provenance: String,
    /// Negative controls are expected to fail validation.
    pub negative_control: bool,
}

fn entry(id: &str, structure: Structure, provenance: &str) -> CatalogueEntry {
    CatalogueEntry {
        id: id.to_string(),
        structure,
        provenance: provenance.to_string(),
        negative_control: false,
    }
}

/// The built-in catalogue. Each entry's validation status is asserted:
/// positives must pass and negative controls must fail.
pub fn catalogue() -> Vec<CatalogueEntry> {
    let m2_qt = m2_qt().expect("e12 ⊗ e12 solves the associative Yang-Baxter equation on M2");
    let entries = vec![
        entry(
            "n2",
            Structure::Algebra(n2()),
            "2-dim commutative associative non-unital algebra, uu = v",
        ),
        CatalogueEntry {
            negative_control: true,
            ..entry(
                "na2",
                Structure::Algebra(na2()),
                "uu = v, vu = u; fails associativity at (u, u, u)",
            )
        },
        entry(
            "dx2",
            Structure::Algebra(dx2()),
            "unital k[x]/(x^2), basis (1, x)",
        ),
        entry(
            "m2",
            Structure::Algebra(m2()),
            "2x2 matrices, basis e11, e12, e21, e22",
        ),
        entry(
            "dx2-infbialg",
            Structure::InfBialgebra(dx2_infbialg()),
            "k[x]/(x^2) with D(1) = 0, D(x) = x (x) x as an infinitesimal bialgebra",
        ),
        entry(
            "m2-qt",
            Structure::Quasitriangular(m2_qt, m2_qt_r()),
            "M2 with the principal derivation of r = e12 (x) e12",
        ),
        entry(
            "m2-lie",
            Structure::Lie(m2_lie()),
            "commutator bracket of M2",
        ),
        entry(
            "id2",
            Structure::Map(LinearMap::identity(2)),
            "identity on a 2-dim space",
        ),
        entry(
            "id4",
            Structure::Map(LinearMap::identity(4)),
            "identity on a 4-dim space",
        ),
        entry("sgn", Structure::Map(sgn()), "u -> -u, v -> v on N2"),
        entry("neg-x", Structure::Map(neg_x()), "1 -> 1, x -> -x on Dx2"),
        entry("kill-x", Structure::Map(kill_x()), "1 -> 1, x -> 0 on Dx2"),
        entry(
            "conj-d",
            Structure::Map(conj_d()),
            "conjugation by diag(1, -1) on M2",
        ),
        entry(
            "r-n2",
            Structure::Map(r_n2()),
            "u -> 0, v -> v, a Rota-Baxter operator on N2",
        ),
        entry(
            "m2-sandwich",
            Structure::Map(m2_sandwich()),
            "a -> e12 a e12 on M2",
        ),
    ];
    for e in &entries {
        let passed = e.structure.validate().map(|v| v.passed).unwrap_or(false);
        assert_eq!(
            passed, !e.negative_control,
            "catalogue entry `{}` has unexpected validation status",
            e.id
        );
    }
    entries
}

/// Looks up a catalogue entry by id.
pub fn lookup(id: &str) -> Option<CatalogueEntry> {
    catalogue().into_iter().find(|e| e.id == id)
}

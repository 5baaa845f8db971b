use super::algebra::BiHomAlgebra;
use crate::constructions::aybe_residue;
use crate::error::{ensure_dim, Result};
use crate::exactlin::{map_tensor2, LinearMap, Scalar, Tensor2};
use crate::verdict::{check_laws, CheckVerdict, Law};

fn invariance_law(name: &str, f: &LinearMap, r: &Tensor2) -> Result<Law<'static>> {
    let mapped = map_tensor2(f, f, r)?;
    let r = r.clone();
    Ok(Law::new(name, r.dim(), 2, move |t| {
        (
            vec![mapped.get(t[0], t[1]).clone()],
            vec![r.get(t[0], t[1]).clone()],
        )
    }))
}

/// Passes iff `(α⊗α)(r) = r`, `(β⊗β)(r) = r` and the associative BiHom-
/// Yang-Baxter residue `A(r)` vanishes. The witness names the broken
/// condition (`alpha-invariant`, `beta-invariant` or `aybe-residue`).
pub fn check_aybe(a: &BiHomAlgebra, r: &Tensor2) -> Result<CheckVerdict> {
    a.check_shapes()?;
    ensure_dim("tensor r", a.dim(), r.dim())?;
    let residue = aybe_residue(a, r)?;
    let laws = vec![
        invariance_law("alpha-invariant", &a.alpha, r)?,
        invariance_law("beta-invariant", &a.beta, r)?,
        Law::new("aybe-residue", a.dim(), 3, move |t| {
            (
                vec![residue.get(t[0], t[1], t[2]).clone()],
                vec![Scalar::zero()],
            )
        }),
    ];
    Ok(check_laws(&laws))
}

//! The associative BiHom-Yang-Baxter residue and the Rota-Baxter operator
//! induced by a solution.

use super::require;
use crate::error::{ensure_dim, Error, Result};
use crate::exactlin::{map_tensor2, LinearMap, Tensor2, Tensor3, Vector};
use crate::structures::{check_aybe, check_bihom_associative, BiHomAlgebra};
use crate::verdict::{CheckVerdict, Law};

/// `A(r) = r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃` for `r = Σ x_i ⊗ y_i`, where
///
/// * `r₁₂r₂₃ = Σ α(x_i) ⊗ y_i x_j ⊗ β(y_j)`
/// * `r₁₃r₁₂ = Σ x_i x_j ⊗ β(y_j) ⊗ β(y_i)`
/// * `r₂₃r₁₃ = Σ α(x_i) ⊗ α(x_j) ⊗ y_j y_i`
///
/// The last two are not triple products in `A⊗A⊗A`.
pub fn aybe_residue(a: &BiHomAlgebra, r: &Tensor2) -> Result<Tensor3> {
    a.check_shapes()?;
    ensure_dim("tensor r", a.dim(), r.dim())?;
    let d = a.dim();
    let mu = &a.mu;
    let ac = a.alpha.columns();
    let bc = a.beta.columns();
    let mut out = Tensor3::zero(d);
    let terms: Vec<_> = r.terms().collect();
    for &(xi, yi, ci) in &terms {
        for &(xj, yj, cj) in &terms {
            let c = ci * cj;
            out.add_outer(
                &c,
                mu.basis_product(xi, xj),
                bc[yj].coords(),
                bc[yi].coords(),
            );
            out.add_outer(
                &-&c,
                ac[xi].coords(),
                mu.basis_product(yi, xj),
                bc[yj].coords(),
            );
            out.add_outer(
                &c,
                ac[xi].coords(),
                ac[xj].coords(),
                mu.basis_product(yj, yi),
            );
        }
    }
    Ok(out)
}

/// `α^p β^q`.
fn power(a: &BiHomAlgebra, p: u32, q: u32) -> Result<LinearMap> {
    a.alpha.pow(p)?.compose(&a.beta.pow(q)?)
}

/// The linear map sending `e_k` to `Σ c · f(k, x, y)` over the terms
/// `c · e_x ⊗ e_y` of `r`.
fn sum_over_r(
    r: &Tensor2,
    d: usize,
    f: impl Fn(usize, usize, usize) -> Vector,
) -> Result<LinearMap> {
    let cols = (0..d)
        .map(|k| {
            let mut v = Vector::zeros(d);
            for (x, y, c) in r.terms() {
                v.axpy(c, f(k, x, y).coords());
            }
            v
        })
        .collect::<Vec<_>>();
    LinearMap::from_columns(&cols)
}

/// The operator `R(a) = Σ αβ³(x_i)(a α³(y_i)) = Σ (β³(x_i) a) α³β(y_i)`,
/// an αβ-Rota-Baxter operator when `r` solves the associative BiHom-Yang-
/// Baxter equation and is fixed by `α⊗α` and `β⊗β`. Both forms are
/// computed; when `α = β` the shorter forms `Σ α(x_i)(a y_i)` and
/// `Σ (x_i a) α(y_i)` are computed too. Any disagreement is an
/// [`Error::Inconsistent`].
pub fn abrb_operator(a: &BiHomAlgebra, r: &Tensor2) -> Result<LinearMap> {
    a.check_shapes()?;
    ensure_dim("tensor r", a.dim(), r.dim())?;
    require("BiHom-associative", check_bihom_associative(a)?)?;
    require("associative BiHom-Yang-Baxter solution", check_aybe(a, r)?)?;
    let d = a.dim();
    let mu = &a.mu;
    let left1 = power(a, 1, 3)?.columns();
    let right1 = power(a, 3, 0)?.columns();
    let left2 = power(a, 0, 3)?.columns();
    let right2 = power(a, 3, 1)?.columns();
    let e = |i| Vector::basis(d, i);

    let first = sum_over_r(r, d, |k, x, y| {
        let inner = mu.mul(e(k).coords(), right1[y].coords());
        mu.mul(left1[x].coords(), inner.coords())
    })?;
    let second = sum_over_r(r, d, |k, x, y| {
        let inner = mu.mul(left2[x].coords(), e(k).coords());
        mu.mul(inner.coords(), right2[y].coords())
    })?;
    if first != second {
        return Err(Error::Inconsistent(
            "the two closed forms of the Yang-Baxter operator differ".into(),
        ));
    }
    if a.is_hom() {
        let ac = a.alpha.columns();
        let hom_left = sum_over_r(r, d, |k, x, y| {
            mu.mul(ac[x].coords(), mu.basis_product(k, y))
        })?;
        let hom_right = sum_over_r(r, d, |k, x, y| {
            mu.mul(mu.basis_product(x, k), ac[y].coords())
        })?;
        if hom_left != first || hom_right != first {
            return Err(Error::Inconsistent(
                "the Hom forms of the Yang-Baxter operator differ from the BiHom form".into(),
            ));
        }
    }
    Ok(first)
}

/// Exponents `(p, q, s, t)` of `α^p β^q ⊗ α^s β^t` applied to `r`.
type Twist = (u32, u32, u32, u32);

/// Identities `(α^p β^q ⊗ α^s β^t)(r) = (…)(r)` that follow from
/// `(α⊗α)(r) = r = (β⊗β)(r)` and are used when proving that the operator
/// of [`abrb_operator`] is Rota-Baxter.
const INVARIANCE_IDENTITIES: [(Twist, Twist); 7] = [
    ((1, 4, 5, 1), (0, 3, 4, 0)),
    ((1, 4, 3, 2), (0, 2, 2, 0)),
    ((1, 4, 5, 0), (0, 4, 4, 0)),
    ((4, 2, 5, 0), (0, 2, 1, 0)),
    ((0, 4, 4, 1), (0, 3, 4, 0)),
    ((2, 3, 4, 1), (0, 2, 2, 0)),
    ((2, 4, 3, 2), (0, 2, 1, 0)),
];

fn twist_name(t: Twist) -> String {
    let part = |p: u32, q: u32| match (p, q) {
        (0, 0) => "id".to_string(),
        (p, 0) => format!("α^{p}"),
        (0, q) => format!("β^{q}"),
        (p, q) => format!("α^{p}β^{q}"),
    };
    format!("{}⊗{}", part(t.0, t.1), part(t.2, t.3))
}

/// Checks each invariance identity on `r`, one verdict per identity.
pub fn invariance_identities(a: &BiHomAlgebra, r: &Tensor2) -> Result<Vec<(String, CheckVerdict)>> {
    a.check_shapes()?;
    ensure_dim("tensor r", a.dim(), r.dim())?;
    INVARIANCE_IDENTITIES
        .iter()
        .map(|&(lhs, rhs)| {
            let apply = |t: Twist| -> Result<Tensor2> {
                map_tensor2(&power(a, t.0, t.1)?, &power(a, t.2, t.3)?, r)
            };
            let (l, rt) = (apply(lhs)?, apply(rhs)?);
            let name = format!("{} = {}", twist_name(lhs), twist_name(rhs));
            let verdict = Law::new(name.clone(), a.dim(), 2, |t| {
                (
                    vec![l.get(t[0], t[1]).clone()],
                    vec![rt.get(t[0], t[1]).clone()],
                )
            })
            .check();
            Ok((name, verdict))
        })
        .collect()
}

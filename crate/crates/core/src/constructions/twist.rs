//! Yau twists: deforming a classical structure along structure maps.

use super::{require, require_algebra_map, require_pairwise_commuting};
use crate::error::{Error, Result};
use crate::exactlin::{ensure_endo, map_tensor2, BilinearOp, Comultiplication, LinearMap};
use crate::structures::{
    check_associative, check_bihom_dendriform, check_hom_prelie, check_inf_hom_bialgebra,
    BiHomAlgebra, BiHomDendriform, HomPreLie, InfHomBialgebra,
};
use crate::verdict::Law;

/// `(A, μ∘(α⊗β), α, β)` for an associative `μ` and commuting algebra maps
/// `α`, `β`. With `β = α` this is the Hom-associative twist.
pub fn yau_twist_assoc(
    m: &BilinearOp,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Result<BiHomAlgebra> {
    ensure_endo("twisting map α", alpha, m.dim())?;
    ensure_endo("twisting map β", beta, m.dim())?;
    require("associative", check_associative(m)?)?;
    require_algebra_map("α is an algebra map", alpha, m)?;
    require_algebra_map("β is an algebra map", beta, m)?;
    require_pairwise_commuting(&[("α", alpha), ("β", beta)])?;
    Ok(BiHomAlgebra::new(
        m.precompose(alpha, beta)?,
        alpha.clone(),
        beta.clone(),
    ))
}

/// `x ≺' y = α(x) ≺ β(y)`, `x ≻' y = α(x) ≻ β(y)` with structure maps
/// `α`, `β`.
pub fn yau_twist_dendriform(
    d: &BiHomDendriform,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Result<BiHomDendriform> {
    d.check_shapes()?;
    ensure_endo("twisting map α", alpha, d.dim())?;
    ensure_endo("twisting map β", beta, d.dim())?;
    if !d.alpha.is_identity() || !d.beta.is_identity() {
        return Err(Error::InvalidParameter(
            "the dendriform algebra to twist must be classical".into(),
        ));
    }
    require("dendriform", check_bihom_dendriform(d)?)?;
    require_algebra_map("α is multiplicative for ≺", alpha, &d.prec)?;
    require_algebra_map("α is multiplicative for ≻", alpha, &d.succ)?;
    require_algebra_map("β is multiplicative for ≺", beta, &d.prec)?;
    require_algebra_map("β is multiplicative for ≻", beta, &d.succ)?;
    require_pairwise_commuting(&[("α", alpha), ("β", beta)])?;
    Ok(BiHomDendriform::new(
        d.prec.precompose(alpha, beta)?,
        d.succ.precompose(alpha, beta)?,
        alpha.clone(),
        beta.clone(),
    ))
}

/// `(A, α∘μ, α)` for a classical left pre-Lie product `μ` and a morphism `α`.
pub fn yau_twist_prelie(p: &BilinearOp, alpha: &LinearMap) -> Result<HomPreLie> {
    ensure_endo("twisting map α", alpha, p.dim())?;
    require(
        "pre-Lie",
        check_hom_prelie(&HomPreLie::classical(p.clone()))?,
    )?;
    require_algebra_map("α is a pre-Lie morphism", alpha, p)?;
    Ok(HomPreLie::new(p.then_map(alpha)?, alpha.clone()))
}

/// `(A, α∘μ, Δ∘α, α)` for a classical infinitesimal bialgebra `(μ, Δ)` and a
/// morphism of infinitesimal bialgebras `α`.
pub fn yau_twist_inf_bialgebra(
    mu: &BilinearOp,
    delta: &Comultiplication,
    alpha: &LinearMap,
) -> Result<InfHomBialgebra> {
    let classical = InfHomBialgebra::classical(mu.clone(), delta.clone());
    classical.check_shapes()?;
    ensure_endo("twisting map α", alpha, mu.dim())?;
    require(
        "infinitesimal bialgebra",
        check_inf_hom_bialgebra(&classical)?,
    )?;
    require_algebra_map("α is an algebra map", alpha, mu)?;
    let comultiplicative = Law::new("comultiplicative", mu.dim(), 1, |t| {
        let lhs = map_tensor2(alpha, alpha, &delta.image(t[0])).expect("shapes checked");
        let rhs = delta.apply_coords(alpha.column(t[0]).coords());
        (lhs.coeffs().to_vec(), rhs.coeffs().to_vec())
    });
    require("α is a coalgebra map", comultiplicative.check())?;
    Ok(InfHomBialgebra::new(
        mu.then_map(alpha)?,
        delta.after_map(alpha)?,
        alpha.clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::catalogue::*;
    use crate::exactlin::{bilinear_equal, s};
    use crate::structures::check_bihom_associative;

    #[test]
    fn identity_twist_is_unchanged() {
        let id = LinearMap::identity(4);
        let t = yau_twist_assoc(&m2_product(), &id, &id).unwrap();
        assert_eq!(t.mu, m2_product());
        assert!(check_bihom_associative(&t).unwrap().passed);
    }

    #[test]
    fn dx2_twist_by_neg_x_on_the_left() {
        let t = yau_twist_assoc(&dx2_product(), &neg_x(), &LinearMap::identity(2)).unwrap();
        // x∗x = 0, 1∗x = x, x∗1 = −x
        assert!(t.mu.basis_product(1, 1).iter().all(|c| c.is_zero()));
        assert_eq!(t.mu.basis_product(0, 1), &[s(0), s(1)]);
        assert_eq!(t.mu.basis_product(1, 0), &[s(0), s(-1)]);
        assert!(check_bihom_associative(&t).unwrap().passed);
    }

    #[test]
    fn twisting_a_non_associative_product_is_refused() {
        let id = LinearMap::identity(2);
        let err = yau_twist_assoc(&na2_product(), &id, &id).unwrap_err();
        assert!(
            matches!(err, Error::Precondition { ref hypothesis, .. } if hypothesis == "associative")
        );
    }

    #[test]
    fn dendriform_twists() {
        let zero = BiHomDendriform::classical(BilinearOp::zero(2), BilinearOp::zero(2));
        let t = yau_twist_dendriform(&zero, &sgn(), &sgn()).unwrap();
        assert!(t.prec.is_zero() && t.succ.is_zero());

        let bad = BiHomDendriform::classical(na2_product(), BilinearOp::zero(2));
        assert!(matches!(
            yau_twist_dendriform(&bad, &LinearMap::identity(2), &LinearMap::identity(2)),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn prelie_twists() {
        let t = yau_twist_prelie(&n2_product(), &LinearMap::identity(2)).unwrap();
        assert!(bilinear_equal(&t.mu, &n2_product()).unwrap().passed);
        assert!(yau_twist_prelie(&na2_product(), &LinearMap::identity(2)).is_err());
    }

    #[test]
    fn inf_bialgebra_twist_by_kill_x() {
        let t = yau_twist_inf_bialgebra(&dx2_product(), &dx2_delta(), &kill_x()).unwrap();
        assert!(check_inf_hom_bialgebra(&t).unwrap().passed);
        assert!(t.delta.is_zero());
    }
}

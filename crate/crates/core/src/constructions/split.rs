//! Splitting products with Rota-Baxter type operators: dendriform
//! structures, their associated associative and pre-Lie products, and the
//! Lie analogue.

use super::{require, require_algebra_map, require_pairwise_commuting};
use crate::error::{Error, Result};
use crate::exactlin::{ensure_endo, BilinearOp, LinearMap};
use crate::structures::{
    check_associative, check_bihom_associative, check_bihom_dendriform, check_hom_associative,
    check_hom_lie, check_rota_baxter, BiHomAlgebra, BiHomDendriform, HomAlgebra, HomLie, HomPreLie,
    RotaBaxterKind,
};

/// `x ∗ y = x ≺ y + x ≻ y`, a BiHom-associative product with the same
/// structure maps.
pub fn dendriform_sum(d: &BiHomDendriform) -> Result<BiHomAlgebra> {
    require("BiHom-dendriform", check_bihom_dendriform(d)?)?;
    Ok(BiHomAlgebra::new(
        d.prec.add(&d.succ)?,
        d.alpha.clone(),
        d.beta.clone(),
    ))
}

/// `x ∘ y = x ≻ y − y ≺ x`, a left Hom-pre-Lie product. Requires `α = β`.
pub fn dendriform_circ(d: &BiHomDendriform) -> Result<HomPreLie> {
    d.check_shapes()?;
    if d.alpha != d.beta {
        return Err(Error::InvalidParameter(
            "the circle product needs α = β".into(),
        ));
    }
    require("BiHom-dendriform", check_bihom_dendriform(d)?)?;
    Ok(HomPreLie::new(
        d.succ.sub(&d.prec.opposite())?,
        d.alpha.clone(),
    ))
}

/// `a ≺ b = aτ(R(b))`, `a ≻ b = σ(R(a))b` for a (σ,τ)-Rota-Baxter operator
/// `R` on an associative algebra; a classical dendriform algebra.
pub fn dendriform_from_paren_rb(
    m: &BilinearOp,
    sigma: &LinearMap,
    tau: &LinearMap,
    r: &LinearMap,
) -> Result<BiHomDendriform> {
    ensure_endo("σ", sigma, m.dim())?;
    ensure_endo("τ", tau, m.dim())?;
    ensure_endo("Rota-Baxter operator", r, m.dim())?;
    require("associative", check_associative(m)?)?;
    require_algebra_map("σ is an algebra map", sigma, m)?;
    require_algebra_map("τ is an algebra map", tau, m)?;
    let kind = RotaBaxterKind::Paren {
        sigma: sigma.clone(),
        tau: tau.clone(),
    };
    require(
        "(σ,τ)-Rota-Baxter operator",
        check_rota_baxter(r, m, &kind)?,
    )?;
    let id = LinearMap::identity(m.dim());
    Ok(BiHomDendriform::classical(
        m.precompose(&id, &tau.compose(r)?)?,
        m.precompose(&sigma.compose(r)?, &id)?,
    ))
}

/// `x ≺ y = σ(x)Rη(y)`, `x ≻ y = R(x)τη(y)` with structure maps `ασ` and
/// `βτη`, for a {σ,τ}-Rota-Baxter operator `R` on a BiHom-associative
/// algebra where any two of `α, β, σ, τ, η, R` commute. `η` defaults to the
/// identity.
pub fn simprop_dendriform(
    a: &BiHomAlgebra,
    sigma: &LinearMap,
    tau: &LinearMap,
    eta: Option<&LinearMap>,
    r: &LinearMap,
) -> Result<BiHomDendriform> {
    a.check_shapes()?;
    let id = LinearMap::identity(a.dim());
    let eta = eta.unwrap_or(&id);
    for f in [sigma, tau, eta, r] {
        ensure_endo("parameter map", f, a.dim())?;
    }
    require("BiHom-associative", check_bihom_associative(a)?)?;
    require_algebra_map("σ is an algebra map", sigma, &a.mu)?;
    require_algebra_map("τ is an algebra map", tau, &a.mu)?;
    require_algebra_map("η is an algebra map", eta, &a.mu)?;
    let kind = RotaBaxterKind::Brace {
        sigma: sigma.clone(),
        tau: tau.clone(),
    };
    require(
        "{σ,τ}-Rota-Baxter operator",
        check_rota_baxter(r, &a.mu, &kind)?,
    )?;
    require_pairwise_commuting(&[
        ("α", &a.alpha),
        ("β", &a.beta),
        ("σ", sigma),
        ("τ", tau),
        ("η", eta),
        ("R", r),
    ])?;
    let tau_eta = tau.compose(eta)?;
    Ok(BiHomDendriform::new(
        a.mu.precompose(sigma, &r.compose(eta)?)?,
        a.mu.precompose(r, &tau_eta)?,
        a.alpha.compose(sigma)?,
        a.beta.compose(&tau_eta)?,
    ))
}

/// The three structures built from an `α^n`-Rota-Baxter operator on a
/// Hom-associative algebra, all with structure map `α^{n+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoregendendTriple {
    /// `x ≺ y = α^n(x)R(y)`, `x ≻ y = R(x)α^n(y)`.
    pub dendriform: BiHomDendriform,
    /// `x ∗ y = α^n(x)R(y) + R(x)α^n(y)`.
    pub sum: HomAlgebra,
    /// `x ∘ y = R(x)α^n(y) − α^n(y)R(x)`.
    pub circ: HomPreLie,
}

pub fn moregendend_triple(h: &HomAlgebra, n: u32, r: &LinearMap) -> Result<MoregendendTriple> {
    ensure_endo("Rota-Baxter operator", r, h.dim())?;
    require("Hom-associative", check_hom_associative(h)?)?;
    let kind = RotaBaxterKind::AlphaPower {
        alpha: h.alpha.clone(),
        n,
    };
    require(
        "α^n-Rota-Baxter operator",
        check_rota_baxter(r, &h.mu, &kind)?,
    )?;
    let an = h.alpha.pow(n)?;
    let dendriform = simprop_dendriform(&h.to_bihom(), &an, &an, None, r)?;
    let sum = dendriform_sum(&dendriform)?;
    let circ = dendriform_circ(&dendriform)?;
    Ok(MoregendendTriple {
        sum: HomAlgebra::new(sum.mu, sum.alpha),
        circ,
        dendriform,
    })
}

/// `a · b = [R(a), α^n(b)]` with structure map `α^{n+1}`, for a Lie-kind
/// `α^n`-Rota-Baxter operator on a Hom-Lie algebra.
pub fn analoglie_prelie(l: &HomLie, n: u32, r: &LinearMap) -> Result<HomPreLie> {
    ensure_endo("Rota-Baxter operator", r, l.dim())?;
    require("Hom-Lie", check_hom_lie(l)?)?;
    let kind = RotaBaxterKind::LieAlphaPower {
        alpha: l.alpha.clone(),
        n,
    };
    require(
        "Lie α^n-Rota-Baxter operator",
        check_rota_baxter(r, &l.bracket, &kind)?,
    )?;
    let an = l.alpha.pow(n)?;
    Ok(HomPreLie::new(
        l.bracket.precompose(r, &an)?,
        l.alpha.compose(&an)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::catalogue::*;
    use crate::exactlin::s;
    use crate::structures::{check_hom_prelie, HomAlgebra};

    fn id(d: usize) -> LinearMap {
        LinearMap::identity(d)
    }

    #[test]
    fn zero_operator_gives_zero_structures() {
        let d = dendriform_from_paren_rb(&m2_product(), &id(4), &id(4), &LinearMap::zero(4, 4))
            .unwrap();
        assert!(d.prec.is_zero() && d.succ.is_zero());
        let d = simprop_dendriform(&m2(), &id(4), &id(4), None, &LinearMap::zero(4, 4)).unwrap();
        assert!(d.prec.is_zero() && d.succ.is_zero());
        let t = moregendend_triple(
            &HomAlgebra::classical(n2_product()),
            0,
            &LinearMap::zero(2, 2),
        )
        .unwrap();
        assert!(t.sum.mu.is_zero() && t.circ.mu.is_zero());
        let p = analoglie_prelie(&m2_lie(), 0, &LinearMap::zero(4, 4)).unwrap();
        assert!(p.mu.is_zero());
    }

    #[test]
    fn rota_baxter_dendriform_on_n2() {
        let d = dendriform_from_paren_rb(&n2_product(), &id(2), &id(2), &r_n2()).unwrap();
        // u ≺ v = uR(v) = uv = 0, v ≺ v = 0, u ≻ u = R(u)u = 0
        assert!(d.prec.basis_product(0, 1).iter().all(|c| c.is_zero()));
        assert!(d.prec.basis_product(1, 1).iter().all(|c| c.is_zero()));
        assert!(d.succ.basis_product(0, 0).iter().all(|c| c.is_zero()));
        assert!(check_bihom_dendriform(&d).unwrap().passed);
        let sum = dendriform_sum(&d).unwrap();
        assert!(check_bihom_associative(&sum).unwrap().passed);
    }

    #[test]
    fn rota_baxter_dendriform_on_m2() {
        let d = dendriform_from_paren_rb(&m2_product(), &id(4), &id(4), &m2_sandwich()).unwrap();
        assert!(check_bihom_dendriform(&d).unwrap().passed);
        let circ = dendriform_circ(&d).unwrap();
        assert!(check_hom_prelie(&circ).unwrap().passed);
    }

    #[test]
    fn circ_needs_equal_structure_maps() {
        let zero = BilinearOp::zero(2);
        let d = BiHomDendriform::new(zero.clone(), zero, id(2), sgn());
        assert!(matches!(
            dendriform_circ(&d),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn simprop_with_conjugation_as_eta() {
        let d = simprop_dendriform(&m2(), &id(4), &id(4), Some(&conj_d()), &m2_sandwich()).unwrap();
        assert!(check_bihom_dendriform(&d).unwrap().passed);
        assert_eq!(d.beta, conj_d());
    }

    #[test]
    fn simprop_names_the_failed_hypothesis() {
        let err =
            simprop_dendriform(&na2(), &id(2), &id(2), None, &LinearMap::zero(2, 2)).unwrap_err();
        assert!(
            matches!(err, Error::Precondition { ref hypothesis, .. } if hypothesis == "BiHom-associative")
        );
        // R = diag(1, 0) on M2 is not a Rota-Baxter operator
        let r = LinearMap::diagonal_ints(&[1, 0, 0, 0]);
        let err = simprop_dendriform(&m2(), &id(4), &id(4), None, &r).unwrap_err();
        assert!(
            matches!(err, Error::Precondition { ref hypothesis, .. } if hypothesis == "{σ,τ}-Rota-Baxter operator")
        );
    }

    #[test]
    fn moregendend_on_n2_is_commutative_zero_circle() {
        let t = moregendend_triple(&HomAlgebra::classical(n2_product()), 0, &r_n2()).unwrap();
        assert!(t.circ.mu.is_zero());
        assert!(check_hom_prelie(&t.circ).unwrap().passed);
        assert!(check_hom_associative(&t.sum).unwrap().passed);
    }

    #[test]
    fn analoglie_on_m2() {
        let p = analoglie_prelie(&m2_lie(), 0, &m2_sandwich()).unwrap();
        assert!(check_hom_prelie(&p).unwrap().passed);
        // e21 · e21 = [R(e21), e21] = [e12, e21] = e11 − e22
        assert_eq!(p.mu.basis_product(E21, E21), &[s(1), s(0), s(0), s(-1)]);
    }
}

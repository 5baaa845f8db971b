//! Pre-Lie and Novikov products from derivations and infinitesimal
//! Hom-bialgebras, and the comultiplication of a Yang-Baxter solution.

use super::require;
use crate::error::{ensure_dim, Error, Result};
use crate::exactlin::{ensure_endo, BilinearOp, Comultiplication, LinearMap, Tensor2, Vector};
use crate::structures::{
    check_aybe, check_commutative, check_derivation, check_hom_associative,
    check_inf_hom_bialgebra, DerivationKind, HomAlgebra, HomPreLie, InfHomBialgebra,
};

/// `x • y = α^k(x)D(y)` with structure map `α^{k+1}`, a Hom-Novikov product
/// for a commutative Hom-associative algebra and an `α^k`-derivation `D`.
pub fn gengd_novikov(h: &HomAlgebra, k: u32, d: &LinearMap) -> Result<HomPreLie> {
    ensure_endo("derivation", d, h.dim())?;
    require("Hom-associative", check_hom_associative(h)?)?;
    require("commutative", check_commutative(&h.mu))?;
    let kind = DerivationKind::AlphaPower {
        alpha: h.alpha.clone(),
        k,
    };
    require("α^k-derivation", check_derivation(d, &h.mu, &kind)?)?;
    let ak = h.alpha.pow(k)?;
    Ok(HomPreLie::new(
        h.mu.precompose(&ak, d)?,
        h.alpha.compose(&ak)?,
    ))
}

/// `D = μ∘Δ`, an `α²`-derivation of an infinitesimal Hom-bialgebra.
pub fn mu_delta_map(b: &InfHomBialgebra) -> Result<LinearMap> {
    require("infinitesimal Hom-bialgebra", check_inf_hom_bialgebra(b)?)?;
    b.delta.contract(&b.mu)
}

/// The product whose `(x, y)` entry is `Σ c · form(x, p, q)` over the terms
/// `c · e_p ⊗ e_q` of `Δ(e_y)`.
fn over_coproduct(
    delta: &Comultiplication,
    form: impl Fn(usize, usize, usize) -> Vector,
) -> Result<BilinearOp> {
    let d = delta.dim();
    BilinearOp::from_products(d, |x, y| {
        let mut v = Vector::zeros(d);
        for (p, q, c) in delta.image(y).terms() {
            v.axpy(c, form(x, p, q).coords());
        }
        v
    })
}

/// `x • y = α(y₁)(α(x)y₂) = (y₁α(x))α(y₂)` with structure map `α³`, a left
/// Hom-pre-Lie product. Both forms are computed and must agree.
pub fn infprelie_bullet(b: &InfHomBialgebra) -> Result<HomPreLie> {
    require("infinitesimal Hom-bialgebra", check_inf_hom_bialgebra(b)?)?;
    let d = b.dim();
    let mu = &b.mu;
    let ac = b.alpha.columns();
    let e = |i| Vector::basis(d, i);
    let left = over_coproduct(&b.delta, |x, p, q| {
        let inner = mu.mul(ac[x].coords(), e(q).coords());
        mu.mul(ac[p].coords(), inner.coords())
    })?;
    let right = over_coproduct(&b.delta, |x, p, q| {
        let inner = mu.mul(e(p).coords(), ac[x].coords());
        mu.mul(inner.coords(), ac[q].coords())
    })?;
    if left != right {
        return Err(Error::Inconsistent(
            "the two forms of the bullet product differ".into(),
        ));
    }
    Ok(HomPreLie::new(left, b.alpha.pow(3)?))
}

/// The classical product `a • b = b₁ a b₂` of an infinitesimal bialgebra.
pub fn aguiar_bullet(mu: &BilinearOp, delta: &Comultiplication) -> Result<HomPreLie> {
    let b = InfHomBialgebra::classical(mu.clone(), delta.clone());
    b.check_shapes()?;
    require("infinitesimal bialgebra", check_inf_hom_bialgebra(&b)?)?;
    let d = mu.dim();
    let e = |i| Vector::basis(d, i);
    let product = over_coproduct(delta, |x, p, q| {
        let inner = mu.basis_product(p, x);
        mu.mul(inner, e(q).coords())
    })?;
    Ok(HomPreLie::classical(product))
}

/// `Δ_r(b) = Σ α(x_i) ⊗ y_i b − Σ b x_i ⊗ α(y_i)` for a solution `r` of the
/// associative Hom-Yang-Baxter equation fixed by `α⊗α`.
///
/// That `(μ, Δ_r, α)` is an infinitesimal Hom-bialgebra is not assumed;
/// callers validate it with
/// [`check_inf_hom_bialgebra`](crate::structures::check_inf_hom_bialgebra).
pub fn delta_r(h: &HomAlgebra, r: &Tensor2) -> Result<Comultiplication> {
    ensure_endo("structure map α", &h.alpha, h.dim())?;
    ensure_dim("tensor r", h.dim(), r.dim())?;
    require("Hom-associative", check_hom_associative(h)?)?;
    require(
        "associative Hom-Yang-Baxter solution",
        check_aybe(&h.to_bihom(), r)?,
    )?;
    let d = h.dim();
    let mu = &h.mu;
    let ac = h.alpha.columns();
    let images: Vec<Tensor2> = (0..d)
        .map(|b| {
            let mut t = Tensor2::zero(d);
            for (x, y, c) in r.terms() {
                t.add_outer(c, ac[x].coords(), mu.basis_product(y, b));
                t.add_outer(&-c, mu.basis_product(b, x), ac[y].coords());
            }
            t
        })
        .collect();
    Comultiplication::from_images(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::catalogue::*;
    use crate::exactlin::{bilinear_equal, s};
    use crate::structures::{check_hom_novikov, check_hom_prelie};

    #[test]
    fn gengd_on_n2() {
        let h = HomAlgebra::classical(n2_product());
        let p = gengd_novikov(&h, 0, &LinearMap::diagonal_ints(&[1, 2])).unwrap();
        // u•u = v, every other product 0
        assert!(bilinear_equal(&p.mu, &n2_product()).unwrap().passed);
        assert!(check_hom_novikov(&p).unwrap().passed);
        assert!(gengd_novikov(&h, 0, &LinearMap::zero(2, 2))
            .unwrap()
            .mu
            .is_zero());
    }

    #[test]
    fn gengd_refuses_non_commutative_algebras() {
        let h = HomAlgebra::classical(m2_product());
        let err = gengd_novikov(&h, 0, &LinearMap::zero(4, 4)).unwrap_err();
        assert!(
            matches!(err, Error::Precondition { ref hypothesis, .. } if hypothesis == "commutative")
        );
    }

    #[test]
    fn mu_delta_examples() {
        assert!(mu_delta_map(&dx2_infbialg()).unwrap().is_zero());
        let zero = InfHomBialgebra::classical(m2_product(), Comultiplication::zero(4));
        assert!(mu_delta_map(&zero).unwrap().is_zero());
    }

    #[test]
    fn bullet_examples() {
        assert!(infprelie_bullet(&dx2_infbialg()).unwrap().mu.is_zero());
        assert!(aguiar_bullet(&dx2_product(), &dx2_delta())
            .unwrap()
            .mu
            .is_zero());

        let qt = m2_qt().unwrap();
        let bullet = infprelie_bullet(&qt).unwrap();
        assert_eq!(
            bullet.mu.basis_product(E21, E21),
            &[s(1), s(0), s(0), s(-1)]
        );
        assert!(check_hom_prelie(&bullet).unwrap().passed);
        let aguiar = aguiar_bullet(&qt.mu, &qt.delta).unwrap();
        assert!(bilinear_equal(&aguiar.mu, &bullet.mu).unwrap().passed);
    }

    #[test]
    fn delta_r_examples() {
        let h = HomAlgebra::classical(m2_product());
        assert!(delta_r(&h, &Tensor2::zero(4)).unwrap().is_zero());
        let delta = delta_r(&h, &m2_qt_r()).unwrap();
        // Δ(e21) = e12 ⊗ e11 − e22 ⊗ e12
        let mut expected = Tensor2::zero(4);
        expected.add_outer(
            &s(1),
            Vector::basis(4, E12).coords(),
            Vector::basis(4, E11).coords(),
        );
        expected.add_outer(
            &s(-1),
            Vector::basis(4, E22).coords(),
            Vector::basis(4, E12).coords(),
        );
        assert_eq!(delta.image(E21), expected);
        assert!(delta.image(E12).is_zero());

        let dx2h = HomAlgebra::classical(dx2_product());
        assert!(delta_r(&dx2h, &Tensor2::elementary(2, 1, 1, s(1)))
            .unwrap()
            .is_zero());
    }
}

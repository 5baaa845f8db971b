//! Structure bundles and one checker per axiom system.
//!
//! Bundles do not enforce their axioms on construction: search needs to hold
//! candidates that fail. Every checker evaluates its identities on all basis
//! tuples (sufficient by multilinearity) and reports the lexicographically
//! smallest failing tuple of the first failing law. Laws run in a fixed
//! order: commutation of structure maps, then multiplicativity, then the
//! main axiom, then unit laws.

mod algebra;
mod aybe;
mod coalgebra;
mod dendriform;
mod lie;
mod operators;
mod prelie;

pub use algebra::{
    check_associative, check_bihom_associative, check_commutative, check_hom_associative,
    BiHomAlgebra, HomAlgebra,
};
pub use aybe::check_aybe;
pub use coalgebra::{
    check_hom_coassociative, check_inf_hom_bialgebra, check_infinitesimal_compat, HomCoalgebra,
    InfHomBialgebra,
};
pub use dendriform::{check_bihom_dendriform, BiHomDendriform};
pub use lie::{check_hom_lie, hom_lie_derivation_law, HomLie};
pub use operators::{check_derivation, check_rota_baxter, DerivationKind, RotaBaxterKind};
pub use prelie::{check_hom_novikov, check_hom_prelie, HomPreLie};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::catalogue::*;
    use crate::exactlin::{s, BilinearOp, Comultiplication, LinearMap, Tensor2, Vector};
    use crate::Error;

    #[test]
    fn bihom_associative_examples() {
        let alpha = LinearMap::diagonal_ints(&[2, 3]);
        let beta = LinearMap::diagonal_ints(&[-1, 5]);
        let zero = BiHomAlgebra::new(BilinearOp::zero(2), alpha, beta);
        assert!(check_bihom_associative(&zero).unwrap().passed);
        assert!(check_bihom_associative(&m2()).unwrap().passed);

        let v = check_bihom_associative(&na2()).unwrap();
        let w = v.witness.expect("NA2 is not associative");
        assert_eq!(w.law, "bihom-associativity");
        assert_eq!(w.indices, vec![0, 0, 0]);
        // u(uu) = uv = 0, (uu)u = vu = u
        assert_eq!(w.lhs, vec![s(0), s(0)]);
        assert_eq!(w.rhs, vec![s(1), s(0)]);
    }

    #[test]
    fn bihom_associative_checks_maps_first() {
        let swap = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let a = BiHomAlgebra::new(BilinearOp::zero(2), swap, LinearMap::diagonal_ints(&[1, 2]));
        assert_eq!(
            check_bihom_associative(&a).unwrap().failed_law(),
            Some("structure-maps-commute")
        );
        let a = BiHomAlgebra::hom(n2_product(), LinearMap::diagonal_ints(&[1, 2]));
        assert_eq!(
            check_bihom_associative(&a).unwrap().failed_law(),
            Some("alpha-multiplicative")
        );
    }

    #[test]
    fn unit_laws() {
        assert!(check_bihom_associative(&dx2()).unwrap().passed);
        let wrong = BiHomAlgebra::classical(dx2_product()).with_unit(Vector::basis(2, 1));
        assert_eq!(
            check_bihom_associative(&wrong).unwrap().failed_law(),
            Some("right-unit")
        );
        let bad_shape = BiHomAlgebra::classical(dx2_product()).with_unit(Vector::basis(3, 1));
        assert!(matches!(
            check_bihom_associative(&bad_shape),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn hom_coassociative_examples() {
        let id = LinearMap::identity(2);
        assert!(
            check_hom_coassociative(&HomCoalgebra::new(Comultiplication::zero(2), sgn()))
                .unwrap()
                .passed
        );
        assert!(
            check_hom_coassociative(&HomCoalgebra::new(dx2_delta(), id.clone()))
                .unwrap()
                .passed
        );
        // Δ(u) = v ⊗ u
        let delta = Comultiplication::from_entries(2, &[(0, 1, 0, 1)]);
        let v = check_hom_coassociative(&HomCoalgebra::new(delta, id)).unwrap();
        assert_eq!(v.failed_law(), Some("hom-coassociativity"));
        assert_eq!(v.failed_indices(), Some(&[0][..]));
        let w = v.witness.unwrap();
        assert!(w.lhs.iter().all(|c| c.is_zero()));
        // v ⊗ v ⊗ u at flat index (1·2 + 1)·2 + 0
        assert_eq!(w.rhs[6], s(1));
    }

    #[test]
    fn infinitesimal_compat_examples() {
        let zero = InfHomBialgebra::classical(m2_product(), Comultiplication::zero(4));
        assert!(check_infinitesimal_compat(&zero).unwrap().passed);
        assert!(check_inf_hom_bialgebra(&dx2_infbialg()).unwrap().passed);

        let delta = Comultiplication::from_entries(2, &[(0, 0, 0, 1)]);
        let b = InfHomBialgebra::classical(dx2_product(), delta);
        let v = check_infinitesimal_compat(&b).unwrap();
        assert_eq!(v.failed_indices(), Some(&[0, 0][..]));
        let w = v.witness.unwrap();
        assert_eq!(w.lhs[0], s(1));
        assert_eq!(w.rhs[0], s(2));
    }

    #[test]
    fn dendriform_examples() {
        let zero = BiHomDendriform::classical(BilinearOp::zero(2), BilinearOp::zero(2));
        assert!(check_bihom_dendriform(&zero).unwrap().passed);
        // An associative product with a zero second operation satisfies all
        // three axioms.
        let assoc = BiHomDendriform::classical(m2_product(), BilinearOp::zero(4));
        assert!(check_bihom_dendriform(&assoc).unwrap().passed);
        let bad = BiHomDendriform::classical(na2_product(), BilinearOp::zero(2));
        let v = check_bihom_dendriform(&bad).unwrap();
        assert_eq!(v.failed_law(), Some("dendriform-left"));
        assert_eq!(v.failed_indices(), Some(&[0, 0, 0][..]));
    }

    #[test]
    fn prelie_examples() {
        assert!(
            check_hom_prelie(&HomPreLie::classical(n2_product()))
                .unwrap()
                .passed
        );
        let twisted = HomPreLie::new(dx2_product().then_map(&kill_x()).unwrap(), kill_x());
        assert!(check_hom_prelie(&twisted).unwrap().passed);
        // untwisted: the associator is x at (x, 1, 1) but 0 at (1, x, 1)
        assert!(
            !check_hom_prelie(&HomPreLie::new(dx2_product(), kill_x()))
                .unwrap()
                .passed
        );
        assert!(
            check_hom_prelie(&HomPreLie::new(
                BilinearOp::zero(3),
                LinearMap::diagonal_ints(&[1, 2, 3])
            ))
            .unwrap()
            .passed
        );
        let v = check_hom_prelie(&HomPreLie::classical(na2_product())).unwrap();
        assert_eq!(v.failed_law(), Some("hom-pre-lie"));
        assert_eq!(v.failed_indices(), Some(&[0, 1, 0][..]));
        let w = v.witness.unwrap();
        assert_eq!(w.lhs, vec![s(0), s(1)]);
        assert_eq!(w.rhs, vec![s(0), s(-1)]);
    }

    #[test]
    fn novikov_examples() {
        assert!(
            check_hom_novikov(&HomPreLie::new(BilinearOp::zero(2), sgn()))
                .unwrap()
                .passed
        );
        let v = check_hom_novikov(&HomPreLie::classical(m2_product())).unwrap();
        assert_eq!(v.failed_law(), Some("hom-novikov"));
        assert_eq!(v.failed_indices(), Some(&[E11, E11, E12][..]));
    }

    #[test]
    fn hom_lie_examples() {
        assert!(
            check_hom_lie(&HomLie::new(BilinearOp::zero(2), sgn()))
                .unwrap()
                .passed
        );
        assert!(check_hom_lie(&m2_lie()).unwrap().passed);
        // [u, v] = u = −[v, u]
        let bracket = BilinearOp::from_entries(2, &[(0, 1, 0, 1), (1, 0, 0, -1)]);
        let swap = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let v = check_hom_lie(&HomLie::new(bracket, swap)).unwrap();
        assert_eq!(v.failed_law(), Some("alpha-multiplicative"));
        assert_eq!(v.failed_indices(), Some(&[0, 1][..]));
        let w = v.witness.unwrap();
        assert_eq!(w.lhs, vec![s(0), s(1)]);
        assert_eq!(w.rhs, vec![s(-1), s(0)]);
    }

    #[test]
    fn derivation_examples() {
        let m = n2_product();
        let ord = DerivationKind::ordinary(2);
        assert!(
            check_derivation(&LinearMap::zero(2, 2), &m, &ord)
                .unwrap()
                .passed
        );
        assert!(
            check_derivation(&LinearMap::diagonal_ints(&[1, 2]), &m, &ord)
                .unwrap()
                .passed
        );
        assert!(
            !check_derivation(&LinearMap::diagonal_ints(&[1, 1]), &m, &ord)
                .unwrap()
                .passed
        );
        let twisted = DerivationKind::Twisted {
            tau: sgn(),
            sigma: sgn(),
        };
        assert!(
            check_derivation(&LinearMap::zero(2, 2), &m, &twisted)
                .unwrap()
                .passed
        );
        let not_algebra_map = DerivationKind::AlphaPower {
            alpha: LinearMap::diagonal_ints(&[1, 2]),
            k: 1,
        };
        assert!(matches!(
            check_derivation(&LinearMap::zero(2, 2), &m, &not_algebra_map),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn alpha_power_derivation_must_commute() {
        let swap = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let kind = DerivationKind::AlphaPower { alpha: swap, k: 0 };
        let v = check_derivation(
            &LinearMap::diagonal_ints(&[1, 2]),
            &BilinearOp::zero(2),
            &kind,
        )
        .unwrap();
        assert_eq!(v.failed_law(), Some("commutes-with-alpha"));
    }

    #[test]
    fn rota_baxter_examples() {
        let zero = LinearMap::zero(2, 2);
        let kinds = [
            RotaBaxterKind::ordinary(2),
            RotaBaxterKind::Paren {
                sigma: sgn(),
                tau: LinearMap::identity(2),
            },
            RotaBaxterKind::Brace {
                sigma: sgn(),
                tau: sgn(),
            },
            RotaBaxterKind::AlphaPower { alpha: sgn(), n: 3 },
            RotaBaxterKind::AlphaBeta {
                alpha: sgn(),
                beta: sgn(),
            },
        ];
        for kind in &kinds {
            assert!(
                check_rota_baxter(&zero, &n2_product(), kind)
                    .unwrap()
                    .passed,
                "{kind:?}"
            );
        }
        assert!(
            check_rota_baxter(&r_n2(), &n2_product(), &RotaBaxterKind::ordinary(2))
                .unwrap()
                .passed
        );
        assert!(
            check_rota_baxter(&m2_sandwich(), &m2_product(), &RotaBaxterKind::ordinary(4))
                .unwrap()
                .passed
        );
        // the identity is not a weight-zero Rota-Baxter operator on M2
        let v = check_rota_baxter(
            &LinearMap::identity(4),
            &m2_product(),
            &RotaBaxterKind::ordinary(4),
        )
        .unwrap();
        assert_eq!(v.failed_law(), Some("alpha-power-rota-baxter"));
        assert_eq!(v.failed_indices(), Some(&[0, 0][..]));
    }

    #[test]
    fn aybe_examples() {
        assert!(check_aybe(&m2(), &Tensor2::zero(4)).unwrap().passed);
        assert!(check_aybe(&m2(), &m2_qt_r()).unwrap().passed);
        let v = check_aybe(&dx2(), &Tensor2::elementary(2, 0, 0, s(1))).unwrap();
        assert_eq!(v.failed_law(), Some("aybe-residue"));
        assert_eq!(v.failed_indices(), Some(&[0, 0, 0][..]));
        assert_eq!(v.witness.unwrap().lhs, vec![s(1)]);

        let twisted = BiHomAlgebra::hom(dx2_product(), neg_x());
        let v = check_aybe(&twisted, &Tensor2::elementary(2, 0, 1, s(1))).unwrap();
        assert_eq!(v.failed_law(), Some("alpha-invariant"));
    }
}

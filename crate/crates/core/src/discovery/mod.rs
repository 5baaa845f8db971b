//! Certified exhaustive search, the built-in catalogue, and a factory for
//! genuinely twisted instances.

pub mod catalogue;
mod search;

pub use catalogue::{catalogue, lookup, CatalogueEntry, Structure};
pub use search::{
    search, search_streaming, Found, SearchSpec, SearchTarget, DEFAULT_BUDGET, MAX_DIM,
};

use crate::constructions::{yau_twist_assoc, yau_twist_inf_bialgebra};
use crate::error::{Error, Result};
use crate::exactlin::LinearMap;
use crate::structures::check_bihom_associative;

/// The Yau twist of a catalogue entry along `maps`.
///
/// Algebras are twisted to `(μ∘(α⊗β), α, β)`, with `β = α` when the second
/// map is absent; the unit is kept when both maps fix it. Infinitesimal
/// bialgebras take a single map `α` and become `(α∘μ, Δ∘α, α)`. The twisted
/// structure is validated before it is returned.
pub fn twist_factory(
    base: &CatalogueEntry,
    maps: (&LinearMap, Option<&LinearMap>),
) -> Result<Structure> {
    let (alpha, beta) = maps;
    let twisted = match &base.structure {
        Structure::Algebra(a) => {
            if !a.is_classical() {
                return Err(Error::InvalidParameter(format!(
                    "`{}` is already twisted",
                    base.id
                )));
            }
            let beta = beta.unwrap_or(alpha);
            let mut t = yau_twist_assoc(&a.mu, alpha, beta)?;
            if let Some(unit) = &a.unit {
                if &alpha.apply(unit)? == unit && &beta.apply(unit)? == unit {
                    t.unit = Some(unit.clone());
                }
            }
            let verdict = check_bihom_associative(&t)?;
            if !verdict.passed {
                return Err(Error::Inconsistent(format!(
                    "twist of `{}` is not BiHom-associative",
                    base.id
                )));
            }
            Structure::Algebra(t)
        }
        Structure::InfBialgebra(b) | Structure::Quasitriangular(b, _) => {
            if beta.is_some_and(|beta| beta != alpha) {
                return Err(Error::InvalidParameter(
                    "infinitesimal bialgebras are twisted along a single map".into(),
                ));
            }
            if !b.alpha.is_identity() {
                return Err(Error::InvalidParameter(format!(
                    "`{}` is already twisted",
                    base.id
                )));
            }
            Structure::InfBialgebra(yau_twist_inf_bialgebra(&b.mu, &b.delta, alpha)?)
        }
        Structure::Lie(_) | Structure::Map(_) => {
            return Err(Error::InvalidParameter(format!(
                "`{}` has no Yau twist",
                base.id
            )));
        }
    };
    if !twisted.validate()?.passed {
        return Err(Error::Inconsistent(format!(
            "twist of `{}` fails validation",
            base.id
        )));
    }
    Ok(twisted)
}

#[cfg(test)]
mod tests {
    use super::catalogue::*;
    use super::*;
    use crate::exactlin::s;

    fn entry(id: &str) -> CatalogueEntry {
        lookup(id).unwrap()
    }

    #[test]
    fn catalogue_statuses() {
        let entries = catalogue();
        let na2 = entries.iter().find(|e| e.id == "na2").unwrap();
        assert!(na2.negative_control);
        let v = na2.structure.validate().unwrap();
        assert_eq!(v.failed_indices(), Some(&[0, 0, 0][..]));
        for id in ["n2", "dx2", "m2", "dx2-infbialg", "m2-qt", "m2-lie"] {
            assert!(entry(id).structure.validate().unwrap().passed, "{id}");
        }
    }

    #[test]
    fn dx2_hom_twist_by_neg_x() {
        let Structure::Algebra(t) = twist_factory(&entry("dx2"), (&neg_x(), None)).unwrap() else {
            panic!("expected an algebra");
        };
        // 1∗x = α(x) = −x, x∗x = 0
        assert_eq!(t.mu.basis_product(0, 1), &[s(0), s(-1)]);
        assert!(t.mu.basis_product(1, 1).iter().all(|c| c.is_zero()));
        assert_eq!(t.unit, Some(crate::exactlin::Vector::from_ints(&[1, 0])));
    }

    #[test]
    fn m2_bihom_twist() {
        let id = LinearMap::identity(4);
        let t = twist_factory(&entry("m2"), (&conj_d(), Some(&id))).unwrap();
        assert!(matches!(t, Structure::Algebra(ref a) if a.alpha == conj_d() && a.beta == id));
    }

    #[test]
    fn inf_bialgebra_twist_by_kill_x() {
        let t = twist_factory(&entry("dx2-infbialg"), (&kill_x(), None)).unwrap();
        assert!(matches!(t, Structure::InfBialgebra(ref b) if b.alpha == kill_x()));
    }

    #[test]
    fn twist_refusals() {
        let id = LinearMap::identity(2);
        assert!(matches!(
            twist_factory(&entry("na2"), (&id, None)),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(
            twist_factory(&entry("sgn"), (&id, None)),
            Err(Error::InvalidParameter(_))
        ));
        // swapping 1 and x sends x·x = 0 to 0 but maps x, x to 1·1 = 1
        let swap = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(matches!(
            twist_factory(&entry("dx2"), (&swap, None)),
            Err(Error::Precondition { .. })
        ));
    }
}

//! Constructions that turn verified structures into new ones, and a registry
//! running each theorem as a verification pipeline.
//!
//! Every construction verifies its hypotheses first and refuses to build on
//! failure with [`Error::Precondition`](crate::Error::Precondition) naming the
//! broken hypothesis. Where a result has two closed forms, both are computed
//! and compared.

mod aybe;
mod infinitesimal;
mod split;
mod theorems;
mod twist;

pub use aybe::{abrb_operator, aybe_residue, invariance_identities};
pub use infinitesimal::{aguiar_bullet, delta_r, gengd_novikov, infprelie_bullet, mu_delta_map};
pub use split::{
    analoglie_prelie, dendriform_circ, dendriform_from_paren_rb, dendriform_sum,
    moregendend_triple, simprop_dendriform, MoregendendTriple,
};
pub use theorems::{
    catalogue_instances, verify_instances, verify_theorem, Instance, TheoremId, TheoremReport,
};
pub use twist::{yau_twist_assoc, yau_twist_dendriform, yau_twist_inf_bialgebra, yau_twist_prelie};

use crate::error::{Error, Result};
use crate::exactlin::{is_algebra_map, BilinearOp, LinearMap};
use crate::verdict::CheckVerdict;

/// Turns a failed verdict into a precondition error named `hypothesis`.
pub(crate) fn require(hypothesis: &str, verdict: CheckVerdict) -> Result<()> {
    if verdict.passed {
        Ok(())
    } else {
        Err(Error::precondition(hypothesis, verdict))
    }
}

pub(crate) fn require_algebra_map(hypothesis: &str, f: &LinearMap, m: &BilinearOp) -> Result<()> {
    require(hypothesis, is_algebra_map(f, m)?)
}

/// Every pair of `maps` commutes; the failing pair is named in the
/// hypothesis.
pub(crate) fn require_pairwise_commuting(maps: &[(&str, &LinearMap)]) -> Result<()> {
    for (i, (name_f, f)) in maps.iter().enumerate() {
        for (name_g, g) in &maps[i + 1..] {
            let verdict = crate::exactlin::commute_law("commute", f, g).check();
            require(&format!("{name_f} and {name_g} commute"), verdict)?;
        }
    }
    Ok(())
}

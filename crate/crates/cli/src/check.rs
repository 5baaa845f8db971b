//! `check <law> <file>`.

use std::io::Write;
use std::path::Path;

use bihom_core::exactlin::{is_algebra_map, LinearMap};
use bihom_core::io::{self, Document};
use bihom_core::structures::{
    check_associative, check_aybe, check_bihom_associative, check_bihom_dendriform,
    check_commutative, check_derivation, check_hom_associative, check_hom_coassociative,
    check_hom_lie, check_hom_novikov, check_hom_prelie, check_inf_hom_bialgebra,
    check_infinitesimal_compat, check_rota_baxter, BiHomAlgebra, DerivationKind, HomAlgebra,
    RotaBaxterKind,
};
use bihom_core::CheckVerdict;
use clap::ValueEnum;
use serde_json::Value;

use crate::{
    opt_map, read_document, read_tensor, required_map, value_name, CliResult, Failure, Params,
    EXIT_FAIL, EXIT_PASS,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub(crate) enum LawName {
    Assoc,
    HomAssoc,
    BihomAssoc,
    Commutative,
    HomCoassoc,
    InfCompat,
    InfHomBialgebra,
    Dendriform,
    HomPrelie,
    HomNovikov,
    HomLie,
    Aybe,
    RotaBaxter,
    Derivation,
    AlgebraMap,
}

/// Variant of the Rota-Baxter or derivation identity. The α^n kinds use the
/// structure map of the document and `--power`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub(crate) enum OperatorKind {
    AlphaPower,
    Paren,
    Brace,
    AlphaBeta,
    Lie,
    Twisted,
}

fn algebra(doc: &Document, law: LawName) -> CliResult<&BiHomAlgebra> {
    doc.as_algebra().ok_or_else(|| mismatch(law, doc))
}

fn hom_algebra(doc: &Document, law: LawName) -> CliResult<HomAlgebra> {
    algebra(doc, law)?.as_hom().ok_or_else(|| {
        Failure::Usage(format!(
            "`{}` needs an algebra with α = β",
            value_name(&law)
        ))
    })
}

fn mismatch(law: LawName, doc: &Document) -> Failure {
    Failure::Usage(format!(
        "law `{}` does not apply to a `{}` document",
        value_name(&law),
        doc.kind()
    ))
}

fn verdict(
    law: LawName,
    doc: &Document,
    kind: Option<OperatorKind>,
    params: &Params,
) -> CliResult<CheckVerdict> {
    let map = |flag: &str| required_map(&params.map, flag);
    Ok(match (law, doc) {
        (LawName::Assoc, _) => check_associative(&algebra(doc, law)?.mu)?,
        (LawName::HomAssoc, _) => check_hom_associative(&hom_algebra(doc, law)?)?,
        (LawName::BihomAssoc, _) => check_bihom_associative(algebra(doc, law)?)?,
        (LawName::Commutative, _) => check_commutative(&algebra(doc, law)?.mu),
        (LawName::HomCoassoc, Document::HomCoalgebra(c)) => check_hom_coassociative(c)?,
        (LawName::HomCoassoc, Document::InfHomBialgebra(b, _)) => {
            check_hom_coassociative(&b.coalgebra())?
        }
        (LawName::InfCompat, Document::InfHomBialgebra(b, _)) => check_infinitesimal_compat(b)?,
        (LawName::InfHomBialgebra, Document::InfHomBialgebra(b, _)) => check_inf_hom_bialgebra(b)?,
        (LawName::Dendriform, Document::Dendriform(d)) => check_bihom_dendriform(d)?,
        (LawName::HomPrelie, Document::HomPreLie(p)) => check_hom_prelie(p)?,
        (LawName::HomNovikov, Document::HomPreLie(p)) => check_hom_novikov(p)?,
        (LawName::HomLie, Document::HomLie(l)) => check_hom_lie(l)?,
        (LawName::Aybe, _) => {
            let path = params
                .r
                .as_deref()
                .ok_or_else(|| Failure::Usage("--r is required".into()))?;
            check_aybe(algebra(doc, law)?, &read_tensor(path)?)?
        }
        (LawName::RotaBaxter, Document::HomLie(l)) => {
            if !matches!(kind, None | Some(OperatorKind::Lie)) {
                return Err(Failure::Usage("Hom-Lie algebras take --kind lie".into()));
            }
            let kind = RotaBaxterKind::LieAlphaPower {
                alpha: l.alpha.clone(),
                n: params.power,
            };
            check_rota_baxter(&map("map")?, &l.bracket, &kind)?
        }
        (LawName::RotaBaxter, _) => {
            let a = algebra(doc, law)?;
            let id = LinearMap::identity(a.dim());
            let sigma = opt_map(&params.sigma)?.unwrap_or_else(|| id.clone());
            let tau = opt_map(&params.tau)?.unwrap_or(id);
            let kind = match kind.unwrap_or(OperatorKind::AlphaPower) {
                OperatorKind::AlphaPower => RotaBaxterKind::AlphaPower {
                    alpha: hom_algebra(doc, law)?.alpha,
                    n: params.power,
                },
                OperatorKind::Paren => RotaBaxterKind::Paren { sigma, tau },
                OperatorKind::Brace => RotaBaxterKind::Brace { sigma, tau },
                OperatorKind::AlphaBeta => RotaBaxterKind::AlphaBeta {
                    alpha: a.alpha.clone(),
                    beta: a.beta.clone(),
                },
                other => {
                    return Err(Failure::Usage(format!(
                        "--kind {} does not apply to algebras",
                        value_name(&other)
                    )))
                }
            };
            check_rota_baxter(&map("map")?, &a.mu, &kind)?
        }
        (LawName::Derivation, _) => {
            let a = algebra(doc, law)?;
            let kind = match kind.unwrap_or(OperatorKind::AlphaPower) {
                OperatorKind::AlphaPower => DerivationKind::AlphaPower {
                    alpha: hom_algebra(doc, law)?.alpha,
                    k: params.power,
                },
                OperatorKind::Twisted => DerivationKind::Twisted {
                    tau: required_map(&params.tau, "tau")?,
                    sigma: required_map(&params.sigma, "sigma")?,
                },
                other => {
                    return Err(Failure::Usage(format!(
                        "--kind {} does not apply to derivations",
                        value_name(&other)
                    )))
                }
            };
            check_derivation(&map("map")?, &a.mu, &kind)?
        }
        (LawName::AlgebraMap, _) => is_algebra_map(&map("map")?, &algebra(doc, law)?.mu)?,
        _ => return Err(mismatch(law, doc)),
    })
}

pub(crate) fn run(
    law: LawName,
    file: &Path,
    kind: Option<OperatorKind>,
    params: &Params,
    stdout: &mut dyn Write,
) -> CliResult<i32> {
    let doc = read_document(file)?;
    let v = verdict(law, &doc, kind, params)?;
    let mut out = io::check_verdict_value(&v);
    if let Value::Object(m) = &mut out {
        m.insert("law".into(), value_name(&law).into());
    }
    let _ = writeln!(stdout, "{out}");
    Ok(if v.passed { EXIT_PASS } else { EXIT_FAIL })
}

//! `construct <recipe> <files...> [-o <out>]`.

use std::io::Write;
use std::path::{Path, PathBuf};

use bihom_core::constructions::{
    abrb_operator, analoglie_prelie, delta_r, dendriform_circ, dendriform_from_paren_rb,
    dendriform_sum, gengd_novikov, infprelie_bullet, moregendend_triple, mu_delta_map,
    simprop_dendriform, yau_twist_assoc, yau_twist_dendriform, yau_twist_inf_bialgebra,
    yau_twist_prelie,
};
use bihom_core::exactlin::{LinearMap, Tensor2};
use bihom_core::io::{self, Document};
use bihom_core::structures::{BiHomAlgebra, HomAlgebra, InfHomBialgebra};
use clap::ValueEnum;

use crate::{
    opt_map, read_document, read_tensor, required_map, value_name, CliResult, Failure, Params,
    EXIT_PASS,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub(crate) enum Recipe {
    YauTwist,
    DendriformSum,
    DendriformCirc,
    DendriformFromRb,
    Simprop,
    Moregendend,
    Analoglie,
    Abrb,
    Gengd,
    MuDelta,
    Bullet,
    DeltaR,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub(crate) enum Part {
    Dendriform,
    Sum,
    Circ,
}

/// The positional inputs: one structure and optionally a tensor.
struct Inputs {
    structure: Document,
    structure_path: PathBuf,
    r: Option<Tensor2>,
}

fn inputs(files: &[PathBuf], params: &Params) -> CliResult<Inputs> {
    let mut structure = None;
    let mut r = None;
    for path in files {
        match read_document(path)? {
            Document::Tensor2(t) if r.is_none() => r = Some(t),
            doc if structure.is_none() => structure = Some((doc, path.clone())),
            _ => {
                return Err(Failure::Usage(format!(
                    "unexpected extra input {}",
                    path.display()
                )))
            }
        }
    }
    let (structure, structure_path) =
        structure.ok_or_else(|| Failure::Usage("no structure document given".into()))?;
    if let Some(path) = &params.r {
        r = Some(read_tensor(path)?);
    }
    if params.negate_r {
        r = r.map(|t| t.neg());
    }
    Ok(Inputs {
        structure,
        structure_path,
        r,
    })
}

impl Inputs {
    fn wrong(&self, recipe: Recipe) -> Failure {
        Failure::File(
            self.structure_path.clone(),
            format!(
                "recipe `{}` does not take a `{}` document",
                value_name(&recipe),
                self.structure.kind()
            ),
        )
    }

    fn algebra(&self, recipe: Recipe) -> CliResult<&BiHomAlgebra> {
        self.structure
            .as_algebra()
            .ok_or_else(|| self.wrong(recipe))
    }

    fn hom_algebra(&self, recipe: Recipe) -> CliResult<HomAlgebra> {
        self.algebra(recipe)?.as_hom().ok_or_else(|| {
            Failure::Usage(format!(
                "recipe `{}` needs an algebra with α = β",
                value_name(&recipe)
            ))
        })
    }

    fn bialgebra(&self, recipe: Recipe) -> CliResult<&InfHomBialgebra> {
        match &self.structure {
            Document::InfHomBialgebra(b, _) => Ok(b),
            _ => Err(self.wrong(recipe)),
        }
    }

    fn r(&self) -> CliResult<&Tensor2> {
        self.r
            .as_ref()
            .ok_or_else(|| Failure::Usage("a tensor2 document or --r is required".into()))
    }

    fn identity(&self) -> CliResult<LinearMap> {
        let dim = match &self.structure {
            Document::Algebra(a) | Document::BiHomAlgebra(a) => a.dim(),
            Document::InfHomBialgebra(b, _) => b.dim(),
            Document::Dendriform(d) => d.dim(),
            Document::HomPreLie(p) => p.dim(),
            Document::HomLie(l) => l.dim(),
            Document::HomCoalgebra(c) => c.dim(),
            _ => return Err(Failure::Usage("the first input must be a structure".into())),
        };
        Ok(LinearMap::identity(dim))
    }
}

fn build(recipe: Recipe, inp: &Inputs, part: Part, params: &Params) -> CliResult<Document> {
    let or_id =
        |map: Option<LinearMap>| -> CliResult<LinearMap> { map.map_or_else(|| inp.identity(), Ok) };
    Ok(match recipe {
        Recipe::YauTwist => {
            let alpha = required_map(&params.sigma, "sigma")?;
            let beta = opt_map(&params.tau)?;
            let single = |beta: &Option<LinearMap>| -> CliResult<()> {
                match beta {
                    Some(b) if b != &alpha => Err(Failure::Usage(
                        "this twist takes a single map; omit --tau".into(),
                    )),
                    _ => Ok(()),
                }
            };
            match &inp.structure {
                Document::Algebra(a) => {
                    let beta = beta.unwrap_or_else(|| alpha.clone());
                    Document::from_algebra(yau_twist_assoc(&a.mu, &alpha, &beta)?)
                }
                Document::Dendriform(d) => {
                    let beta = beta.unwrap_or_else(|| alpha.clone());
                    Document::Dendriform(yau_twist_dendriform(d, &alpha, &beta)?)
                }
                Document::InfHomBialgebra(b, _) if b.alpha.is_identity() => {
                    single(&beta)?;
                    Document::InfHomBialgebra(yau_twist_inf_bialgebra(&b.mu, &b.delta, &alpha)?, None)
                }
                Document::HomPreLie(p) if p.alpha.is_identity() => {
                    single(&beta)?;
                    Document::HomPreLie(yau_twist_prelie(&p.mu, &alpha)?)
                }
                _ => {
                    return Err(Failure::File(
                        inp.structure_path.clone(),
                        "yau-twist needs a classical algebra, dendriform, infinitesimal bialgebra or pre-Lie document"
                            .into(),
                    ))
                }
            }
        }
        Recipe::DendriformSum | Recipe::DendriformCirc => {
            let Document::Dendriform(d) = &inp.structure else {
                return Err(inp.wrong(recipe));
            };
            if recipe == Recipe::DendriformSum {
                Document::from_algebra(dendriform_sum(d)?)
            } else {
                Document::HomPreLie(dendriform_circ(d)?)
            }
        }
        Recipe::DendriformFromRb => {
            let a = inp.algebra(recipe)?;
            let sigma = or_id(opt_map(&params.sigma)?)?;
            let tau = or_id(opt_map(&params.tau)?)?;
            let r = required_map(&params.map, "map")?;
            Document::Dendriform(dendriform_from_paren_rb(&a.mu, &sigma, &tau, &r)?)
        }
        Recipe::Simprop => {
            let a = inp.algebra(recipe)?;
            let sigma = or_id(opt_map(&params.sigma)?)?;
            let tau = or_id(opt_map(&params.tau)?)?;
            let eta = opt_map(&params.eta)?;
            let r = required_map(&params.map, "map")?;
            Document::Dendriform(simprop_dendriform(a, &sigma, &tau, eta.as_ref(), &r)?)
        }
        Recipe::Moregendend => {
            let h = inp.hom_algebra(recipe)?;
            let triple = moregendend_triple(&h, params.power, &required_map(&params.map, "map")?)?;
            match part {
                Part::Dendriform => Document::Dendriform(triple.dendriform),
                Part::Sum => Document::from_algebra(triple.sum.to_bihom()),
                Part::Circ => Document::HomPreLie(triple.circ),
            }
        }
        Recipe::Analoglie => {
            let Document::HomLie(l) = &inp.structure else {
                return Err(inp.wrong(recipe));
            };
            Document::HomPreLie(analoglie_prelie(
                l,
                params.power,
                &required_map(&params.map, "map")?,
            )?)
        }
        Recipe::Abrb => Document::LinearMap(abrb_operator(inp.algebra(recipe)?, inp.r()?)?),
        Recipe::Gengd => {
            let h = inp.hom_algebra(recipe)?;
            Document::HomPreLie(gengd_novikov(
                &h,
                params.power,
                &required_map(&params.map, "map")?,
            )?)
        }
        Recipe::MuDelta => Document::LinearMap(mu_delta_map(inp.bialgebra(recipe)?)?),
        Recipe::Bullet => Document::HomPreLie(infprelie_bullet(inp.bialgebra(recipe)?)?),
        Recipe::DeltaR => {
            let h = inp.hom_algebra(recipe)?;
            let r = inp.r()?;
            let delta = delta_r(&h, r)?;
            Document::InfHomBialgebra(InfHomBialgebra::new(h.mu, delta, h.alpha), Some(r.clone()))
        }
    })
}

pub(crate) fn run(
    recipe: Recipe,
    files: &[PathBuf],
    output: Option<&Path>,
    part: Part,
    params: &Params,
    stdout: &mut dyn Write,
) -> CliResult<i32> {
    let inp = inputs(files, params)?;
    let doc = build(recipe, &inp, part, params)?;
    let text = io::serialize(&doc);
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::File(path.to_path_buf(), e.to_string()))?,
        None => {
            let _ = write!(stdout, "{text}");
        }
    }
    Ok(EXIT_PASS)
}

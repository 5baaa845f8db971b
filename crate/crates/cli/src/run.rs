//! `search`, `verify-theorem` and `catalogue`.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use bihom_core::constructions::{catalogue_instances, verify_instances, Instance, TheoremId};
use bihom_core::discovery::{catalogue, search_streaming, Found};
use bihom_core::io::{self, Document};

use crate::{
    compact, opt_map, read_document, read_tensor, CliResult, Failure, Params, EXIT_FAIL, EXIT_PASS,
    EXIT_PRECONDITION, EXIT_USAGE,
};

fn found_line(found: &Found) -> String {
    match found {
        Found::Tensor(t) => compact(&Document::Tensor2(t.clone())),
        Found::Map(f) => compact(&Document::LinearMap(f.clone())),
        Found::MapPair(f, g) => {
            let pair = vec![
                io::to_value(&Document::LinearMap(f.clone())),
                io::to_value(&Document::LinearMap(g.clone())),
            ];
            serde_json::Value::Array(pair).to_string()
        }
    }
}

pub(crate) fn search(
    path: &Path,
    budget: Option<u64>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let Document::SearchSpec(mut doc) = read_document(path)? else {
        return Err(Failure::File(
            path.to_path_buf(),
            "expected a `search-spec` document".into(),
        ));
    };
    if let Some(b) = budget {
        doc.spec.budget = u128::from(b);
    }
    let mut count = 0usize;
    search_streaming(&doc.spec, &doc.ambient, |found| {
        count += 1;
        let _ = writeln!(stdout, "{}", found_line(found));
        let _ = stdout.flush();
    })?;
    let _ = writeln!(stderr, "{count} certified results");
    Ok(EXIT_PASS)
}

/// The instance described by the input files and flags.
fn file_instance(files: &[PathBuf], params: &Params) -> CliResult<Instance> {
    let names: Vec<String> = files.iter().map(|p| p.display().to_string()).collect();
    let mut inst = Instance::new(names.join(" + "));
    for path in files {
        match read_document(path)? {
            Document::Algebra(a) | Document::BiHomAlgebra(a) => inst.algebra = Some(a),
            Document::InfHomBialgebra(b, r) => {
                inst.bialgebra = Some(b);
                if r.is_some() {
                    inst.r = r;
                }
            }
            Document::HomLie(l) => inst.lie = Some(l),
            Document::Dendriform(d) => inst.dendriform = Some(d),
            Document::LinearMap(f) => inst.operator = Some(f),
            Document::Tensor2(t) => inst.r = Some(t),
            other => {
                return Err(Failure::File(
                    path.clone(),
                    format!("a `{}` document is not a theorem input", other.kind()),
                ))
            }
        }
    }
    if let Some(f) = opt_map(&params.map)? {
        inst.operator = Some(f);
    }
    inst.sigma = opt_map(&params.sigma)?.or(inst.sigma);
    inst.tau = opt_map(&params.tau)?.or(inst.tau);
    inst.eta = opt_map(&params.eta)?.or(inst.eta);
    if let Some(path) = &params.r {
        inst.r = Some(read_tensor(path)?);
    }
    inst.power = params.power;
    Ok(inst)
}

pub(crate) fn verify_theorem(
    theorem: &str,
    files: &[PathBuf],
    all_catalogue: bool,
    params: &Params,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let id = TheoremId::from_str(theorem)?;
    let mut instances = Vec::new();
    if !files.is_empty() {
        instances.push(file_instance(files, params)?);
    } else if params.map.is_some() || params.r.is_some() || params.sigma.is_some() {
        return Err(Failure::Usage(
            "map and tensor flags need an input document".into(),
        ));
    }
    if all_catalogue {
        instances.extend(catalogue_instances(id));
    }
    if instances.is_empty() {
        return Err(Failure::Usage(
            "give input documents or --all-catalogue".into(),
        ));
    }
    if params.negate_r {
        instances = instances.into_iter().map(Instance::negate_r).collect();
    }
    let mut code = EXIT_PASS;
    for (inst, outcome) in instances.iter().zip(verify_instances(id, &instances)) {
        let this = match outcome {
            Ok(report) => {
                let _ = writeln!(stdout, "{}", compact(&Document::Report(report.clone())));
                if report.failed_precondition.is_some() {
                    EXIT_PRECONDITION
                } else if report.passed {
                    EXIT_PASS
                } else {
                    EXIT_FAIL
                }
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", inst.description);
                EXIT_USAGE
            }
        };
        code = severity(code).max(severity(this)).1;
    }
    Ok(code)
}

/// Exit codes ranked: usage errors over precondition failures over failures.
fn severity(code: i32) -> (u8, i32) {
    let rank = match code {
        EXIT_USAGE => 3,
        EXIT_PRECONDITION => 2,
        EXIT_FAIL => 1,
        _ => 0,
    };
    (rank, code)
}

pub(crate) fn catalogue_list(stdout: &mut dyn Write) -> CliResult<i32> {
    for e in catalogue() {
        let kind = Document::from_structure(&e.structure).kind();
        let status = if e.negative_control {
            "negative-control"
        } else {
            "validated"
        };
        let _ = writeln!(stdout, "{}\t{kind}\t{status}\t{}", e.id, e.provenance);
    }
    Ok(EXIT_PASS)
}

pub(crate) fn catalogue_export(dir: &Path, stdout: &mut dyn Write) -> CliResult<i32> {
    std::fs::create_dir_all(dir).map_err(|e| Failure::File(dir.to_path_buf(), e.to_string()))?;
    for e in catalogue() {
        let path = dir.join(format!("{}.json", e.id));
        let text = io::serialize(&Document::from_structure(&e.structure));
        std::fs::write(&path, text).map_err(|err| Failure::File(path.clone(), err.to_string()))?;
        let _ = writeln!(stdout, "{}", path.display());
    }
    Ok(EXIT_PASS)
}

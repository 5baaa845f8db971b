//! The versioned JSON document format.
//!
//! Every document is an object
//! `{"schema_version": "1", "kind": …, "convention": …, "payload": {…}}`.
//! Scalars are strings `"p"` or `"p/q"` in lowest terms. Matrices are lists
//! of rows, column `j` holding the image of `e_j`. Structure-constant cubes
//! are nested `[i][j][k]`: for a product the `e_k` coefficient of `e_i e_j`,
//! for a comultiplication the `e_j ⊗ e_k` coefficient of `Δ(e_i)`. A tensor
//! `Σ c_ij e_i ⊗ e_j` is the matrix `[i][j]`.
//!
//! Parsing rejects unknown fields and cross-checks all dimensions; errors
//! carry the JSON-pointer path of the offending value. Serialization is
//! canonical: keys are sorted and scalars are in lowest terms, so
//! `serialize(parse(text))` canonicalizes and `parse(serialize(doc)) = doc`.

mod value;

use std::str::FromStr;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::constructions::{TheoremId, TheoremReport};
use crate::discovery::{SearchSpec, SearchTarget, Structure};
use crate::exactlin::{LinearMap, Tensor2, Vector};
use crate::structures::{
    BiHomAlgebra, BiHomDendriform, DerivationKind, HomCoalgebra, HomLie, HomPreLie,
    InfHomBialgebra, RotaBaxterKind,
};
use value::{
    array, bilinear, boolean, child_path, comultiplication, cube_value, endomorphism, index,
    linear_map, rows_value, scalar, scalars_value, schema, small, string, tensor2, unsigned,
    verdict, verdict_value, Node, Object,
};

pub const SCHEMA_VERSION: &str = "1";

/// The value of the mandatory `convention` field.
pub const CONVENTION: &str = "columns-are-images";

/// Why a document was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("dimension mismatch at {path}: {message}")]
    Dimension { path: String, message: String },
}

impl DocumentError {
    /// JSON-pointer path of the offending value, if the JSON was well formed.
    pub fn path(&self) -> Option<&str> {
        match self {
            DocumentError::Json(_) => None,
            DocumentError::Schema { path, .. } | DocumentError::Dimension { path, .. } => {
                Some(path)
            }
        }
    }
}

type Res<T> = Result<T, DocumentError>;

/// A search specification together with the algebra it searches over.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchDocument {
    pub spec: SearchSpec,
    pub ambient: BiHomAlgebra,
}

/// A parsed document. Parsing does not validate algebraic laws.
#[derive(Clone, PartialEq, Debug)]
pub enum Document {
    /// A classical algebra (`α = β = id`).
    Algebra(BiHomAlgebra),
    BiHomAlgebra(BiHomAlgebra),
    HomCoalgebra(HomCoalgebra),
    /// An infinitesimal Hom-bialgebra, with the Yang-Baxter tensor `r`
    /// when it is quasitriangular.
    InfHomBialgebra(InfHomBialgebra, Option<Tensor2>),
    Dendriform(BiHomDendriform),
    HomPreLie(HomPreLie),
    HomLie(HomLie),
    LinearMap(LinearMap),
    Tensor2(Tensor2),
    SearchSpec(SearchDocument),
    Report(TheoremReport),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::BiHomAlgebra(_) => "bihom-algebra",
            Document::HomCoalgebra(_) => "hom-coalgebra",
            Document::InfHomBialgebra(..) => "inf-hom-bialgebra",
            Document::Dendriform(_) => "dendriform",
            Document::HomPreLie(_) => "hom-prelie",
            Document::HomLie(_) => "hom-lie",
            Document::LinearMap(_) => "linear-map",
            Document::Tensor2(_) => "tensor2",
            Document::SearchSpec(_) => "search-spec",
            Document::Report(_) => "report",
        }
    }

    /// Wraps an algebra, as kind `algebra` when it is classical.
    pub fn from_algebra(a: BiHomAlgebra) -> Self {
        if a.is_classical() {
            Document::Algebra(a)
        } else {
            Document::BiHomAlgebra(a)
        }
    }

    pub fn from_structure(s: &Structure) -> Self {
        match s {
            Structure::Algebra(a) => Document::from_algebra(a.clone()),
            Structure::InfBialgebra(b) => Document::InfHomBialgebra(b.clone(), None),
            Structure::Quasitriangular(b, r) => {
                Document::InfHomBialgebra(b.clone(), Some(r.clone()))
            }
            Structure::Lie(l) => Document::HomLie(l.clone()),
            Structure::Map(f) => Document::LinearMap(f.clone()),
        }
    }

    /// The algebra held by an `algebra` or `bihom-algebra` document.
    pub fn as_algebra(&self) -> Option<&BiHomAlgebra> {
        match self {
            Document::Algebra(a) | Document::BiHomAlgebra(a) => Some(a),
            _ => None,
        }
    }
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Res<Document> {
    let root: Value = serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
    from_value(&root)
}

/// Canonical pretty-printed JSON: sorted keys, two-space indent, and arrays
/// of plain values (matrix rows, index lists) on one line.
pub fn serialize(doc: &Document) -> String {
    let mut text = String::new();
    pretty(&to_value(doc), 0, &mut text);
    text.push('\n');
    text
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn pretty(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if !is_flat(v) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                pretty(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (key, item)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                pretty(item, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

/// `serialize(parse(text))`.
pub fn canonical(text: &str) -> Res<String> {
    parse(text).map(|d| serialize(&d))
}

/// Decodes a document from an already parsed JSON value.
pub fn from_value(root: &Value) -> Res<Document> {
    let o = Object::new(
        Node {
            value: root,
            path: "",
        },
        &["schema_version", "kind", "convention", "payload"],
        &[],
    )?;
    let version = o.field("schema_version", string)?;
    if version != SCHEMA_VERSION {
        return Err(schema(
            "/schema_version",
            format!("unsupported schema version `{version}`"),
        ));
    }
    let convention = o.field("convention", string)?;
    if convention != CONVENTION {
        return Err(schema(
            "/convention",
            format!("expected `{CONVENTION}`, found `{convention}`"),
        ));
    }
    let kind = o.field("kind", string)?;
    o.field("payload", |p| payload(&kind, p))
}

pub fn to_value(doc: &Document) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), SCHEMA_VERSION.into());
    m.insert("kind".into(), doc.kind().into());
    m.insert("convention".into(), CONVENTION.into());
    m.insert("payload".into(), Value::Object(payload_value(doc)));
    Value::Object(m)
}

fn payload(kind: &str, node: Node<'_>) -> Res<Document> {
    match kind {
        "algebra" => {
            let o = Object::new(node, &["product"], &["unit"])?;
            let mu = o.field("product", |n| bilinear(n, None))?;
            let d = mu.dim();
            let a = BiHomAlgebra::classical(mu);
            Ok(Document::Algebra(with_unit(a, &o, d)?))
        }
        "bihom-algebra" => Ok(Document::BiHomAlgebra(bihom_algebra(node)?)),
        "hom-coalgebra" => {
            let o = Object::new(node, &["coproduct", "alpha"], &[])?;
            let delta = o.field("coproduct", |n| comultiplication(n, None))?;
            let alpha = o.field("alpha", |n| endomorphism(n, delta.dim()))?;
            Ok(Document::HomCoalgebra(HomCoalgebra::new(delta, alpha)))
        }
        "inf-hom-bialgebra" => {
            let o = Object::new(node, &["product", "coproduct", "alpha"], &["r"])?;
            let mu = o.field("product", |n| bilinear(n, None))?;
            let d = mu.dim();
            let delta = o.field("coproduct", |n| comultiplication(n, Some(d)))?;
            let alpha = o.field("alpha", |n| endomorphism(n, d))?;
            let r = o.opt_field("r", |n| tensor2(n, Some(d)))?;
            Ok(Document::InfHomBialgebra(
                InfHomBialgebra::new(mu, delta, alpha),
                r,
            ))
        }
        "dendriform" => {
            let o = Object::new(node, &["prec", "succ", "alpha", "beta"], &[])?;
            let prec = o.field("prec", |n| bilinear(n, None))?;
            let d = prec.dim();
            let succ = o.field("succ", |n| bilinear(n, Some(d)))?;
            let alpha = o.field("alpha", |n| endomorphism(n, d))?;
            let beta = o.field("beta", |n| endomorphism(n, d))?;
            Ok(Document::Dendriform(BiHomDendriform::new(
                prec, succ, alpha, beta,
            )))
        }
        "hom-prelie" => {
            let o = Object::new(node, &["product", "alpha"], &[])?;
            let mu = o.field("product", |n| bilinear(n, None))?;
            let alpha = o.field("alpha", |n| endomorphism(n, mu.dim()))?;
            Ok(Document::HomPreLie(HomPreLie::new(mu, alpha)))
        }
        "hom-lie" => {
            let o = Object::new(node, &["bracket", "alpha"], &[])?;
            let bracket = o.field("bracket", |n| bilinear(n, None))?;
            let alpha = o.field("alpha", |n| endomorphism(n, bracket.dim()))?;
            Ok(Document::HomLie(HomLie::new(bracket, alpha)))
        }
        "linear-map" => {
            let o = Object::new(node, &["matrix"], &[])?;
            Ok(Document::LinearMap(o.field("matrix", linear_map)?))
        }
        "tensor2" => {
            let o = Object::new(node, &["coefficients"], &[])?;
            Ok(Document::Tensor2(
                o.field("coefficients", |n| tensor2(n, None))?,
            ))
        }
        "search-spec" => search_spec(node).map(Document::SearchSpec),
        "report" => report(node).map(Document::Report),
        other => Err(schema("/kind", format!("unknown kind `{other}`"))),
    }
}

fn with_unit(a: BiHomAlgebra, o: &Object<'_>, d: usize) -> Res<BiHomAlgebra> {
    let unit = o.opt_field("unit", |n| {
        let coords = array(n, scalar)?;
        if coords.len() != d {
            return Err(value::dimension(
                n.path,
                format!("expected {d} entries, found {}", coords.len()),
            ));
        }
        Ok(Vector::new(coords))
    })?;
    Ok(match unit {
        Some(u) => a.with_unit(u),
        None => a,
    })
}

fn bihom_algebra(node: Node<'_>) -> Res<BiHomAlgebra> {
    let o = Object::new(node, &["product", "alpha", "beta"], &["unit"])?;
    let mu = o.field("product", |n| bilinear(n, None))?;
    let d = mu.dim();
    let alpha = o.field("alpha", |n| endomorphism(n, d))?;
    let beta = o.field("beta", |n| endomorphism(n, d))?;
    with_unit(BiHomAlgebra::new(mu, alpha, beta), &o, d)
}

fn rota_baxter_kind(node: Node<'_>, d: usize) -> Res<RotaBaxterKind> {
    let tag = Object::new(node, &["type"], &["sigma", "tau", "alpha", "beta", "n"])?
        .field("type", string)?;
    let map = |o: &Object<'_>, key: &str| o.field(key, |n| endomorphism(n, d));
    Ok(match tag.as_str() {
        "paren" | "brace" => {
            let o = Object::new(node, &["type", "sigma", "tau"], &[])?;
            let (sigma, tau) = (map(&o, "sigma")?, map(&o, "tau")?);
            if tag == "paren" {
                RotaBaxterKind::Paren { sigma, tau }
            } else {
                RotaBaxterKind::Brace { sigma, tau }
            }
        }
        "alpha-power" | "lie-alpha-power" => {
            let o = Object::new(node, &["type", "alpha", "n"], &[])?;
            let (alpha, n) = (map(&o, "alpha")?, o.field("n", small)?);
            if tag == "alpha-power" {
                RotaBaxterKind::AlphaPower { alpha, n }
            } else {
                RotaBaxterKind::LieAlphaPower { alpha, n }
            }
        }
        "alpha-beta" => {
            let o = Object::new(node, &["type", "alpha", "beta"], &[])?;
            RotaBaxterKind::AlphaBeta {
                alpha: map(&o, "alpha")?,
                beta: map(&o, "beta")?,
            }
        }
        other => {
            return Err(schema(
                &child_path(node.path, "type"),
                format!("unknown Rota-Baxter kind `{other}`"),
            ))
        }
    })
}

fn derivation_kind(node: Node<'_>, d: usize) -> Res<DerivationKind> {
    let tag =
        Object::new(node, &["type"], &["sigma", "tau", "alpha", "k"])?.field("type", string)?;
    Ok(match tag.as_str() {
        "twisted" => {
            let o = Object::new(node, &["type", "tau", "sigma"], &[])?;
            DerivationKind::Twisted {
                tau: o.field("tau", |n| endomorphism(n, d))?,
                sigma: o.field("sigma", |n| endomorphism(n, d))?,
            }
        }
        "alpha-power" => {
            let o = Object::new(node, &["type", "alpha", "k"], &[])?;
            DerivationKind::AlphaPower {
                alpha: o.field("alpha", |n| endomorphism(n, d))?,
                k: o.field("k", small)?,
            }
        }
        other => {
            return Err(schema(
                &child_path(node.path, "type"),
                format!("unknown derivation kind `{other}`"),
            ))
        }
    })
}

fn search_target(node: Node<'_>, d: usize) -> Res<SearchTarget> {
    let tag = Object::new(node, &["type"], &["kind"])?.field("type", string)?;
    Ok(match tag.as_str() {
        "aybe" | "algebra-map-pair" => {
            Object::new(node, &["type"], &[])?;
            if tag == "aybe" {
                SearchTarget::Aybe
            } else {
                SearchTarget::AlgebraMapPair
            }
        }
        "rota-baxter" => {
            let o = Object::new(node, &["type", "kind"], &[])?;
            SearchTarget::RotaBaxter(o.field("kind", |n| rota_baxter_kind(n, d))?)
        }
        "derivation" => {
            let o = Object::new(node, &["type", "kind"], &[])?;
            SearchTarget::Derivation(o.field("kind", |n| derivation_kind(n, d))?)
        }
        other => {
            return Err(schema(
                &child_path(node.path, "type"),
                format!("unknown search target `{other}`"),
            ))
        }
    })
}

fn search_spec(node: Node<'_>) -> Res<SearchDocument> {
    let o = Object::new(
        node,
        &["target", "ambient"],
        &["coefficients", "max_dim", "support", "budget"],
    )?;
    let ambient = o.field("ambient", bihom_algebra)?;
    let d = ambient.dim();
    let mut spec = SearchSpec::new(o.field("target", |n| search_target(n, d))?);
    if let Some(cs) = o.opt_field("coefficients", |n| array(n, scalar))? {
        spec.coefficients = cs;
    }
    if let Some(m) = o.opt_field("max_dim", index)? {
        spec.max_dim = m;
    }
    spec.support = o.opt_field("support", |n| {
        array(n, |pair| {
            let p = array(pair, index)?;
            match p.as_slice() {
                &[a, b] => Ok((a, b)),
                _ => Err(value::dimension(
                    pair.path,
                    "support entries are index pairs",
                )),
            }
        })
    })?;
    if let Some(b) = o.opt_field("budget", unsigned)? {
        spec.budget = u128::from(b);
    }
    spec.validate(d)
        .map_err(|e| schema(node.path, e.to_string()))?;
    Ok(SearchDocument { spec, ambient })
}

fn named_verdicts(node: Node<'_>) -> Res<Vec<(String, crate::verdict::CheckVerdict)>> {
    array(node, |item| {
        let o = Object::new(item, &["name", "passed"], &["witness"])?;
        Ok((o.field("name", string)?, verdict(&o)?))
    })
}

fn report(node: Node<'_>) -> Res<TheoremReport> {
    let o = Object::new(
        node,
        &[
            "theorem",
            "instance",
            "passed",
            "sub_verdicts",
            "observations",
        ],
        &["failed_precondition"],
    )?;
    let theorem = o.field("theorem", |n| {
        TheoremId::from_str(&string(n)?).map_err(|e| schema(n.path, e.to_string()))
    })?;
    Ok(TheoremReport {
        theorem_id: theorem,
        instance_description: o.field("instance", string)?,
        sub_verdicts: o.field("sub_verdicts", named_verdicts)?,
        observations: o.field("observations", named_verdicts)?,
        failed_precondition: o.opt_field("failed_precondition", string)?,
        passed: o.field("passed", boolean)?,
    })
}

fn map_value(f: &LinearMap) -> Value {
    rows_value(&f.rows())
}

fn algebra_fields(a: &BiHomAlgebra, m: &mut Map<String, Value>) {
    m.insert("product".into(), cube_value(&a.mu.nested()));
    if let Some(u) = &a.unit {
        m.insert("unit".into(), scalars_value(u.coords()));
    }
}

fn rota_baxter_kind_value(kind: &RotaBaxterKind) -> Value {
    let mut m = Map::new();
    let (tag, maps, n): (&str, Vec<(&str, &LinearMap)>, Option<u32>) = match kind {
        RotaBaxterKind::Paren { sigma, tau } => {
            ("paren", vec![("sigma", sigma), ("tau", tau)], None)
        }
        RotaBaxterKind::Brace { sigma, tau } => {
            ("brace", vec![("sigma", sigma), ("tau", tau)], None)
        }
        RotaBaxterKind::AlphaPower { alpha, n } => {
            ("alpha-power", vec![("alpha", alpha)], Some(*n))
        }
        RotaBaxterKind::AlphaBeta { alpha, beta } => {
            ("alpha-beta", vec![("alpha", alpha), ("beta", beta)], None)
        }
        RotaBaxterKind::LieAlphaPower { alpha, n } => {
            ("lie-alpha-power", vec![("alpha", alpha)], Some(*n))
        }
    };
    m.insert("type".into(), tag.into());
    for (key, f) in maps {
        m.insert(key.into(), map_value(f));
    }
    if let Some(n) = n {
        m.insert("n".into(), n.into());
    }
    Value::Object(m)
}

fn derivation_kind_value(kind: &DerivationKind) -> Value {
    let mut m = Map::new();
    match kind {
        DerivationKind::Twisted { tau, sigma } => {
            m.insert("type".into(), "twisted".into());
            m.insert("tau".into(), map_value(tau));
            m.insert("sigma".into(), map_value(sigma));
        }
        DerivationKind::AlphaPower { alpha, k } => {
            m.insert("type".into(), "alpha-power".into());
            m.insert("alpha".into(), map_value(alpha));
            m.insert("k".into(), (*k).into());
        }
    }
    Value::Object(m)
}

fn search_target_value(target: &SearchTarget) -> Value {
    let mut m = Map::new();
    match target {
        SearchTarget::Aybe => {
            m.insert("type".into(), "aybe".into());
        }
        SearchTarget::AlgebraMapPair => {
            m.insert("type".into(), "algebra-map-pair".into());
        }
        SearchTarget::RotaBaxter(kind) => {
            m.insert("type".into(), "rota-baxter".into());
            m.insert("kind".into(), rota_baxter_kind_value(kind));
        }
        SearchTarget::Derivation(kind) => {
            m.insert("type".into(), "derivation".into());
            m.insert("kind".into(), derivation_kind_value(kind));
        }
    }
    Value::Object(m)
}

fn named_verdicts_value(vs: &[(String, crate::verdict::CheckVerdict)]) -> Value {
    Value::Array(
        vs.iter()
            .map(|(name, v)| {
                let mut m = verdict_value(v);
                m.insert("name".into(), name.clone().into());
                Value::Object(m)
            })
            .collect(),
    )
}

/// The JSON encoding of a theorem report, as used in `report` documents.
pub fn report_value(r: &TheoremReport) -> Value {
    let mut m = Map::new();
    m.insert("theorem".into(), r.theorem_id.to_string().into());
    m.insert("instance".into(), r.instance_description.clone().into());
    m.insert("passed".into(), r.passed.into());
    m.insert("sub_verdicts".into(), named_verdicts_value(&r.sub_verdicts));
    m.insert("observations".into(), named_verdicts_value(&r.observations));
    if let Some(h) = &r.failed_precondition {
        m.insert("failed_precondition".into(), h.clone().into());
    }
    Value::Object(m)
}

/// The JSON encoding of a verdict: `passed` and, on failure, `witness`.
pub fn check_verdict_value(v: &crate::verdict::CheckVerdict) -> Value {
    Value::Object(verdict_value(v))
}

fn payload_value(doc: &Document) -> Map<String, Value> {
    let mut m = Map::new();
    match doc {
        Document::Algebra(a) => algebra_fields(a, &mut m),
        Document::BiHomAlgebra(a) => {
            algebra_fields(a, &mut m);
            m.insert("alpha".into(), map_value(&a.alpha));
            m.insert("beta".into(), map_value(&a.beta));
        }
        Document::HomCoalgebra(c) => {
            m.insert("coproduct".into(), cube_value(&c.delta.nested()));
            m.insert("alpha".into(), map_value(&c.alpha));
        }
        Document::InfHomBialgebra(b, r) => {
            m.insert("product".into(), cube_value(&b.mu.nested()));
            m.insert("coproduct".into(), cube_value(&b.delta.nested()));
            m.insert("alpha".into(), map_value(&b.alpha));
            if let Some(r) = r {
                m.insert("r".into(), rows_value(&r.rows()));
            }
        }
        Document::Dendriform(d) => {
            m.insert("prec".into(), cube_value(&d.prec.nested()));
            m.insert("succ".into(), cube_value(&d.succ.nested()));
            m.insert("alpha".into(), map_value(&d.alpha));
            m.insert("beta".into(), map_value(&d.beta));
        }
        Document::HomPreLie(p) => {
            m.insert("product".into(), cube_value(&p.mu.nested()));
            m.insert("alpha".into(), map_value(&p.alpha));
        }
        Document::HomLie(l) => {
            m.insert("bracket".into(), cube_value(&l.bracket.nested()));
            m.insert("alpha".into(), map_value(&l.alpha));
        }
        Document::LinearMap(f) => {
            m.insert("matrix".into(), map_value(f));
        }
        Document::Tensor2(t) => {
            m.insert("coefficients".into(), rows_value(&t.rows()));
        }
        Document::SearchSpec(s) => {
            let mut ambient = Map::new();
            algebra_fields(&s.ambient, &mut ambient);
            ambient.insert("alpha".into(), map_value(&s.ambient.alpha));
            ambient.insert("beta".into(), map_value(&s.ambient.beta));
            m.insert("ambient".into(), Value::Object(ambient));
            m.insert("target".into(), search_target_value(&s.spec.target));
            m.insert("coefficients".into(), scalars_value(&s.spec.coefficients));
            m.insert("max_dim".into(), s.spec.max_dim.into());
            if let Some(support) = &s.spec.support {
                let pairs = support
                    .iter()
                    .map(|&(a, b)| Value::from(vec![a, b]))
                    .collect();
                m.insert("support".into(), Value::Array(pairs));
            }
            let budget = u64::try_from(s.spec.budget).unwrap_or(u64::MAX);
            m.insert("budget".into(), budget.into());
        }
        Document::Report(r) => {
            if let Value::Object(o) = report_value(r) {
                m = o;
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discovery::catalogue;

    fn wrap(kind: &str, payload: &str) -> String {
        format!(
            r#"{{"schema_version": "1", "kind": "{kind}", "convention": "{CONVENTION}", "payload": {payload}}}"#
        )
    }

    #[test]
    fn catalogue_round_trips() {
        for e in catalogue() {
            let doc = Document::from_structure(&e.structure);
            let text = serialize(&doc);
            assert_eq!(parse(&text).unwrap(), doc, "{}", e.id);
            assert_eq!(canonical(&text).unwrap(), text, "{}", e.id);
        }
    }

    #[test]
    fn rejects_non_lowest_terms() {
        let err = parse(&wrap("linear-map", r#"{"matrix": [["2/4"]]}"#)).unwrap_err();
        assert_eq!(err.path(), Some("/payload/matrix/0/0"));
        assert!(err.to_string().contains("lowest terms"), "{err}");
    }

    #[test]
    fn rejects_ragged_cubes() {
        let err = parse(&wrap(
            "algebra",
            r#"{"product": [[["0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]}"#,
        ))
        .unwrap_err();
        assert!(
            matches!(err, DocumentError::Dimension { ref path, .. } if path == "/payload/product/0/0")
        );
    }

    #[test]
    fn rejects_unknown_fields_and_bad_headers() {
        let err = parse(&wrap("linear-map", r#"{"matrix": [["1"]], "extra": 1}"#)).unwrap_err();
        assert_eq!(err.path(), Some("/payload/extra"));
        let err = parse(
            r#"{"schema_version": "1", "kind": "linear-map", "payload": {"matrix": [["1"]]}}"#,
        )
        .unwrap_err();
        assert_eq!(err.path(), Some("/convention"));
        let err = parse(&wrap("matrix", "{}")).unwrap_err();
        assert_eq!(err.path(), Some("/kind"));
        assert!(matches!(parse("{"), Err(DocumentError::Json(_))));
    }

    #[test]
    fn rejects_mismatched_structure_maps() {
        let err = parse(&wrap(
            "hom-prelie",
            r#"{"product": [[["0"]]], "alpha": [["1", "0"], ["0", "1"]]}"#,
        ))
        .unwrap_err();
        assert_eq!(err.path(), Some("/payload/alpha"));
    }

    #[test]
    fn canonicalizes_key_order() {
        let text = r#"{"payload": {"matrix": [["1", "0"], ["-1/2", "3"]]}, "kind": "linear-map",
            "convention": "columns-are-images", "schema_version": "1"}"#;
        let canon = canonical(text).unwrap();
        assert!(canon.find("\"convention\"").unwrap() < canon.find("\"kind\"").unwrap());
        assert_eq!(canonical(&canon).unwrap(), canon);
    }

    #[test]
    fn search_spec_and_report_round_trip() {
        let spec = SearchSpec::new(SearchTarget::RotaBaxter(RotaBaxterKind::ordinary(2)))
            .with_support(vec![(1, 1)])
            .with_budget(1000);
        let doc = Document::SearchSpec(SearchDocument {
            spec,
            ambient: catalogue::n2(),
        });
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);

        let instance = crate::constructions::catalogue_instances(TheoremId::T12).remove(0);
        let report = crate::constructions::verify_theorem(TheoremId::T12, &instance).unwrap();
        let doc = Document::Report(report);
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    }
}

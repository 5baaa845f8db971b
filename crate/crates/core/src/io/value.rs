//! Path-tracking readers and writers for the JSON encoding of scalars,
//! matrices and structure-constant cubes.

use serde_json::{Map, Value};

use super::DocumentError;
use crate::exactlin::{BilinearOp, Comultiplication, LinearMap, Scalar, Tensor2};
use crate::verdict::{CheckVerdict, Witness};

type Res<T> = Result<T, DocumentError>;

/// A JSON value together with its JSON-pointer path.
#[derive(Clone, Copy)]
pub(super) struct Node<'a> {
    pub value: &'a Value,
    pub path: &'a str,
}

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

pub(super) fn child_path(path: &str, key: &str) -> String {
    format!("{path}/{}", escape(key))
}

pub(super) fn schema(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Schema {
        path: if path.is_empty() {
            "/".into()
        } else {
            path.into()
        },
        message: message.into(),
    }
}

pub(super) fn dimension(path: &str, message: impl Into<String>) -> DocumentError {
    DocumentError::Dimension {
        path: if path.is_empty() {
            "/".into()
        } else {
            path.into()
        },
        message: message.into(),
    }
}

/// An object whose field set has been checked against the allowed keys.
pub(super) struct Object<'a> {
    map: &'a Map<String, Value>,
    path: &'a str,
}

impl<'a> Object<'a> {
    pub fn new(node: Node<'a>, required: &[&str], optional: &[&str]) -> Res<Self> {
        let map = node
            .value
            .as_object()
            .ok_or_else(|| schema(node.path, "expected an object"))?;
        for key in map.keys() {
            if !required.contains(&key.as_str()) && !optional.contains(&key.as_str()) {
                return Err(schema(&child_path(node.path, key), "unknown field"));
            }
        }
        for key in required {
            if !map.contains_key(*key) {
                return Err(schema(&child_path(node.path, key), "missing field"));
            }
        }
        Ok(Object {
            map,
            path: node.path,
        })
    }

    /// Runs `read` on a present field with its path.
    pub fn field<T>(&self, key: &str, read: impl FnOnce(Node<'_>) -> Res<T>) -> Res<T> {
        self.opt_field(key, read)?
            .ok_or_else(|| schema(&child_path(self.path, key), "missing field"))
    }

    pub fn opt_field<T>(&self, key: &str, read: impl FnOnce(Node<'_>) -> Res<T>) -> Res<Option<T>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(value) => {
                let path = child_path(self.path, key);
                read(Node { value, path: &path }).map(Some)
            }
        }
    }

    pub fn path(&self) -> &str {
        self.path
    }
}

pub(super) fn string(node: Node<'_>) -> Res<String> {
    node.value
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| schema(node.path, "expected a string"))
}

pub(super) fn boolean(node: Node<'_>) -> Res<bool> {
    node.value
        .as_bool()
        .ok_or_else(|| schema(node.path, "expected a boolean"))
}

pub(super) fn unsigned(node: Node<'_>) -> Res<u64> {
    node.value
        .as_u64()
        .ok_or_else(|| schema(node.path, "expected a non-negative integer"))
}

pub(super) fn small(node: Node<'_>) -> Res<u32> {
    u32::try_from(unsigned(node)?).map_err(|_| schema(node.path, "integer is too large"))
}

pub(super) fn index(node: Node<'_>) -> Res<usize> {
    usize::try_from(unsigned(node)?).map_err(|_| schema(node.path, "integer is too large"))
}

/// Runs `read` on each element of an array.
pub(super) fn array<T>(node: Node<'_>, mut read: impl FnMut(Node<'_>) -> Res<T>) -> Res<Vec<T>> {
    let items = node
        .value
        .as_array()
        .ok_or_else(|| schema(node.path, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, value)| {
            let path = child_path(node.path, &i.to_string());
            read(Node { value, path: &path })
        })
        .collect()
}

pub(super) fn scalar(node: Node<'_>) -> Res<Scalar> {
    let text = node
        .value
        .as_str()
        .ok_or_else(|| schema(node.path, "scalars must be strings \"p\" or \"p/q\""))?;
    Scalar::parse_strict(text).map_err(|e| schema(node.path, e.to_string()))
}

/// Runs `read` on each element and requires exactly `len` elements.
fn sized<T>(node: Node<'_>, len: usize, read: impl FnMut(Node<'_>) -> Res<T>) -> Res<Vec<T>> {
    let found = node
        .value
        .as_array()
        .ok_or_else(|| schema(node.path, "expected an array"))?
        .len();
    if found != len {
        return Err(dimension(
            node.path,
            format!("expected {len} entries, found {found}"),
        ));
    }
    array(node, read)
}

fn nonempty_len(node: Node<'_>) -> Res<usize> {
    let len = node
        .value
        .as_array()
        .ok_or_else(|| schema(node.path, "expected an array"))?
        .len();
    if len == 0 {
        return Err(dimension(node.path, "dimension must be positive"));
    }
    Ok(len)
}

/// A rectangular list of rows of scalars.
pub(super) fn rows(node: Node<'_>) -> Res<Vec<Vec<Scalar>>> {
    nonempty_len(node)?;
    let first = node.value[0].as_array().map_or(0, Vec::len);
    if first == 0 {
        return Err(dimension(
            &child_path(node.path, "0"),
            "rows must be nonempty",
        ));
    }
    array(node, |row| sized(row, first, scalar))
}

/// A square matrix of size `dim`, if given.
pub(super) fn square(node: Node<'_>, dim: Option<usize>) -> Res<Vec<Vec<Scalar>>> {
    let d = match dim {
        Some(d) => d,
        None => nonempty_len(node)?,
    };
    sized(node, d, |row| sized(row, d, scalar))
}

pub(super) fn linear_map(node: Node<'_>) -> Res<LinearMap> {
    let r = rows(node)?;
    LinearMap::from_rows(r).map_err(|e| dimension(node.path, e.to_string()))
}

pub(super) fn endomorphism(node: Node<'_>, dim: usize) -> Res<LinearMap> {
    LinearMap::from_rows(square(node, Some(dim))?).map_err(|e| dimension(node.path, e.to_string()))
}

pub(super) fn tensor2(node: Node<'_>, dim: Option<usize>) -> Res<Tensor2> {
    Tensor2::from_rows(square(node, dim)?).map_err(|e| dimension(node.path, e.to_string()))
}

/// A `d×d×d` cube; `d` is read from the outer length unless given.
pub(super) fn cube(node: Node<'_>, dim: Option<usize>) -> Res<Vec<Vec<Vec<Scalar>>>> {
    let d = match dim {
        Some(d) => d,
        None => nonempty_len(node)?,
    };
    sized(node, d, |plane| {
        sized(plane, d, |row| sized(row, d, scalar))
    })
}

pub(super) fn bilinear(node: Node<'_>, dim: Option<usize>) -> Res<BilinearOp> {
    BilinearOp::from_nested(cube(node, dim)?).map_err(|e| dimension(node.path, e.to_string()))
}

pub(super) fn comultiplication(node: Node<'_>, dim: Option<usize>) -> Res<Comultiplication> {
    Comultiplication::from_nested(cube(node, dim)?).map_err(|e| dimension(node.path, e.to_string()))
}

pub(super) fn scalar_value(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

pub(super) fn scalars_value(cs: &[Scalar]) -> Value {
    Value::Array(cs.iter().map(scalar_value).collect())
}

pub(super) fn rows_value(rows: &[Vec<Scalar>]) -> Value {
    Value::Array(rows.iter().map(|r| scalars_value(r)).collect())
}

pub(super) fn cube_value(cube: &[Vec<Vec<Scalar>>]) -> Value {
    Value::Array(cube.iter().map(|plane| rows_value(plane)).collect())
}

pub(super) fn witness_value(w: &Witness) -> Value {
    let mut m = Map::new();
    m.insert("law".into(), Value::String(w.law.clone()));
    m.insert(
        "indices".into(),
        Value::Array(w.indices.iter().map(|&i| Value::from(i)).collect()),
    );
    m.insert("lhs".into(), scalars_value(&w.lhs));
    m.insert("rhs".into(), scalars_value(&w.rhs));
    Value::Object(m)
}

/// `{"passed": …, "witness": …}`, the witness omitted on success.
pub(super) fn verdict_value(v: &CheckVerdict) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("passed".into(), Value::Bool(v.passed));
    if let Some(w) = &v.witness {
        m.insert("witness".into(), witness_value(w));
    }
    m
}

pub(super) fn witness(node: Node<'_>) -> Res<Witness> {
    let o = Object::new(node, &["law", "indices", "lhs", "rhs"], &[])?;
    Ok(Witness {
        law: o.field("law", string)?,
        indices: o.field("indices", |n| array(n, index))?,
        lhs: o.field("lhs", |n| array(n, scalar))?,
        rhs: o.field("rhs", |n| array(n, scalar))?,
    })
}

/// Reads the verdict fields of `o`; a witness is required exactly when the
/// verdict failed.
pub(super) fn verdict(o: &Object<'_>) -> Res<CheckVerdict> {
    let passed = o.field("passed", boolean)?;
    let witness = o.opt_field("witness", witness)?;
    match (passed, witness) {
        (true, None) => Ok(CheckVerdict::pass()),
        (false, Some(w)) => Ok(CheckVerdict::fail(w)),
        (true, Some(_)) => Err(schema(
            &child_path(o.path(), "witness"),
            "a passing verdict has no witness",
        )),
        (false, None) => Err(schema(
            &child_path(o.path(), "witness"),
            "a failing verdict needs a witness",
        )),
    }
}

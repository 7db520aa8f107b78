//! JSON documents for algebras and modules.
//!
//! ```json
//! {"name": "dual", "operad": "comm", "basis": ["x"],
//!  "products": {"mul": [[1, 1, []]]}, "weights": [1]}
//! ```
//!
//! Each product entry is `[i, j, [[k, "p/q"], …]]` with 1-based indices and
//! means x_i·x_j = Σ (p/q)·x_k. Missing pairs are zero. A module document
//! names its algebra and either lists `actions` (`left` entries are
//! `[alg, mod, terms]`, `right` entries `[mod, alg, terms]`) or uses a
//! `preset` of `"regular"` or `"trivial"`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::module::{ModulePresentation, Side};
use super::presentation::{AlgebraPresentation, OperadTag};
use super::table::Table;
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, rational::fmt_rational};

type Entry = (usize, usize, Vec<(usize, String)>);

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub operad: String,
    pub basis: Vec<String>,
    pub products: BTreeMap<String, Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ActionsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Entry>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(default)]
    pub symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<ActionsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

fn field(name: &str, message: String) -> Error {
    Error::Field {
        field: name.into(),
        message,
    }
}

fn build_table(entries: &[Entry], dims: (usize, usize, usize), name: &str) -> Result<Table> {
    let (p, q, r) = dims;
    let mut t = Table::zero(p, q, r);
    let mut seen = HashSet::new();
    for (i, j, terms) in entries {
        if *i == 0 || *i > p || *j == 0 || *j > q {
            return Err(field(name, format!("index pair ({i}, {j}) outside 1..{p} × 1..{q}")));
        }
        if !seen.insert((*i, *j)) {
            return Err(field(name, format!("pair ({i}, {j}) listed twice")));
        }
        let mut v = Vec::new();
        for (k, c) in terms {
            if *k == 0 || *k > r {
                return Err(field(name, format!("output index {k} outside 1..{r}")));
            }
            let c = parse_rational(c).map_err(|e| field(name, e.to_string()))?;
            v.push((k - 1, c));
        }
        t.set(i - 1, j - 1, v);
    }
    Ok(t)
}

fn table_entries(t: &Table) -> Vec<Entry> {
    let (p, q, _) = t.dims();
    let mut out = Vec::new();
    for i in 0..p {
        for j in 0..q {
            let e = t.entry(i, j);
            if !e.is_empty() {
                out.push((i + 1, j + 1, e.iter().map(|(k, c)| (k + 1, fmt_rational(c))).collect()));
            }
        }
    }
    out
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<AlgebraPresentation> {
    let tag = OperadTag::parse(&doc.operad)?;
    let n = doc.basis.len();
    let mut products = BTreeMap::new();
    for (op, entries) in &doc.products {
        products.insert(op.clone(), build_table(entries, (n, n, n), &format!("products.{op}"))?);
    }
    AlgebraPresentation::new(&doc.name, tag, doc.basis.clone(), products, doc.weights.clone())
}

pub fn parse_algebra(text: &str) -> Result<AlgebraPresentation> {
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    algebra_from_doc(&doc)
}

pub fn algebra_to_doc(a: &AlgebraPresentation) -> AlgebraDoc {
    AlgebraDoc {
        name: a.name.clone(),
        operad: a.tag.as_str().into(),
        basis: a.basis.clone(),
        products: a.products.iter().map(|(k, t)| (k.clone(), table_entries(t))).collect(),
        weights: a.weights.clone(),
    }
}

pub fn algebra_to_json(a: &AlgebraPresentation) -> String {
    serde_json::to_string_pretty(&algebra_to_doc(a)).expect("serializable")
}

pub fn module_from_doc(doc: &ModuleDoc, alg: &AlgebraPresentation) -> Result<ModulePresentation> {
    if doc.algebra != alg.name {
        return Err(field("algebra", format!("module is for `{}`, not `{}`", doc.algebra, alg.name)));
    }
    if let Some(p) = &doc.preset {
        return match p.as_str() {
            "regular" => Ok(ModulePresentation::regular(alg)),
            "trivial" => Ok(ModulePresentation::trivial(alg, doc.dim.unwrap_or(1))),
            _ => Err(field("preset", format!("`{p}` is not one of regular, trivial"))),
        };
    }
    let basis = doc.basis.clone().ok_or_else(|| field("basis", "missing".into()))?;
    let side = Side::parse(doc.side.as_deref().ok_or_else(|| field("side", "missing".into()))?)?;
    let (n, d) = (alg.dim(), basis.len());
    let actions = doc.actions.as_ref().ok_or_else(|| field("actions", "missing".into()))?;
    let left = actions
        .left
        .as_ref()
        .map(|e| build_table(e, (n, d, d), "actions.left"))
        .transpose()?;
    let right = actions
        .right
        .as_ref()
        .map(|e| build_table(e, (d, n, d), "actions.right"))
        .transpose()?;
    ModulePresentation::new(alg, side, doc.symmetric, basis, left, right, doc.weights.clone())
}

pub fn parse_module(text: &str, alg: &AlgebraPresentation) -> Result<ModulePresentation> {
    let doc: ModuleDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    module_from_doc(&doc, alg)
}

pub fn module_to_json(m: &ModulePresentation) -> String {
    let doc = ModuleDoc {
        algebra: m.algebra.clone(),
        preset: None,
        dim: None,
        side: Some(m.side.as_str().into()),
        symmetric: m.symmetric,
        basis: Some(m.basis.clone()),
        actions: Some(ActionsDoc {
            left: m.left.as_ref().map(table_entries),
            right: m.right.as_ref().map(table_entries),
        }),
        weights: m.weights.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers() {
        let a = parse_algebra(r#"{"name":"d","operad":"comm","basis":["x"],"products":{"mul":[[1,1,[]]]}}"#).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.primary().is_zero());
    }

    #[test]
    fn rejects_bad_documents() {
        let bad_rat = r#"{"name":"d","operad":"comm","basis":["x"],"products":{"mul":[[1,1,[[1,"1/0"]]]]}}"#;
        assert!(matches!(parse_algebra(bad_rat), Err(Error::Field { .. })));
        let bad_idx = r#"{"name":"d","operad":"comm","basis":["x"],"products":{"mul":[[2,1,[]]]}}"#;
        assert!(matches!(parse_algebra(bad_idx), Err(Error::Field { .. })));
        let unknown = r#"{"name":"d","operad":"comm","basis":["x"],"products":{"mul":[]},"extra":1}"#;
        assert!(matches!(parse_algebra(unknown), Err(Error::Malformed(_))));
        let tag = r#"{"name":"d","operad":"jordan","basis":["x"],"products":{"mul":[]}}"#;
        assert!(matches!(parse_algebra(tag), Err(Error::Field { .. })));
    }

    #[test]
    fn nonassociative_rejected_with_defect() {
        let doc = r#"{"name":"b","operad":"assoc","basis":["x","y"],
            "products":{"mul":[[1,1,[[2,"1"]]],[1,2,[[1,"1"]]]]}}"#;
        match parse_algebra(doc) {
            Err(Error::AxiomViolation { triple, defect, .. }) => {
                assert_eq!(triple.len(), 3);
                assert_ne!(defect, "0");
            }
            other => panic!("expected an axiom violation, got {other:?}"),
        }
    }
}

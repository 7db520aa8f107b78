//! Complex documents.
//!
//! ```json
//! {"name": "toy", "direction": "homological",
//!  "degrees": [{"degree": 0, "basis": ["a"], "levels": [0]},
//!              {"degree": 1, "basis": ["b"], "levels": [1]}],
//!  "differentials": [{"from": 1, "entries": [[1, 1, "1"]]}]}
//! ```
//!
//! Entries are `[target, source, "p/q"]`, 1-based within their degrees.
//! Missing degrees between the smallest and largest listed one are zero;
//! missing `levels` default to 0.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::chain::{ChainComplex, Direction};
use super::filtered::FilteredComplex;
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, rational::fmt_rational, Matrix};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeDoc {
    pub degree: i64,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialDoc {
    pub from: i64,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(default)]
    pub name: String,
    pub direction: String,
    pub degrees: Vec<DegreeDoc>,
    #[serde(default)]
    pub differentials: Vec<DifferentialDoc>,
}

fn field(name: &str, message: String) -> Error {
    Error::Field {
        field: name.into(),
        message,
    }
}

pub fn filtered_from_doc(doc: &ComplexDoc) -> Result<FilteredComplex> {
    let direction = match doc.direction.as_str() {
        "homological" => Direction::Homological,
        "cohomological" => Direction::Cohomological,
        d => return Err(field("direction", format!("`{d}` is not homological or cohomological"))),
    };
    if doc.degrees.is_empty() {
        return Err(field("degrees", "no degrees listed".into()));
    }
    let mut by_degree: BTreeMap<i64, &DegreeDoc> = BTreeMap::new();
    for d in &doc.degrees {
        if by_degree.insert(d.degree, d).is_some() {
            return Err(field("degrees", format!("degree {} listed twice", d.degree)));
        }
        if let Some(l) = &d.levels {
            if l.len() != d.basis.len() {
                return Err(field("degrees.levels", format!("degree {} has {} levels for {} basis vectors", d.degree, l.len(), d.basis.len())));
            }
        }
    }
    let lo = *by_degree.keys().next().expect("nonempty");
    let hi = *by_degree.keys().next_back().expect("nonempty");
    let dim = |n: i64| by_degree.get(&n).map_or(0, |d| d.basis.len());
    let mut triplets: BTreeMap<i64, Vec<(usize, usize, crate::Rational)>> = BTreeMap::new();
    for d in &doc.differentials {
        if !(lo..=hi).contains(&d.from) {
            return Err(field("differentials.from", format!("degree {} outside {lo}..{hi}", d.from)));
        }
        let t = d.from + direction.step();
        let (rows, cols) = (if (lo..=hi).contains(&t) { dim(t) } else { 0 }, dim(d.from));
        let slot = triplets.entry(d.from).or_default();
        for (i, j, c) in &d.entries {
            if *i == 0 || *i > rows || *j == 0 || *j > cols {
                return Err(field(
                    "differentials.entries",
                    format!("entry ({i}, {j}) of the differential from degree {} outside 1..{rows} × 1..{cols}", d.from),
                ));
            }
            let c = parse_rational(c).map_err(|e| field("differentials.entries", e.to_string()))?;
            slot.push((i - 1, j - 1, c));
        }
    }
    let dims: Vec<usize> = (lo..=hi).map(dim).collect();
    let diffs = (lo..=hi)
        .map(|n| {
            let t = n + direction.step();
            let rows = if (lo..=hi).contains(&t) { dim(t) } else { 0 };
            Matrix::from_triplets(rows, dim(n), triplets.remove(&n).unwrap_or_default())
        })
        .collect();
    let labels = (lo..=hi).map(|n| by_degree.get(&n).map_or(Vec::new(), |d| d.basis.clone())).collect();
    let complex = ChainComplex::new(direction, lo, dims, diffs)?.with_labels(labels)?;
    let levels = (lo..=hi)
        .map(|n| {
            let l = by_degree
                .get(&n)
                .map_or(Vec::new(), |d| d.levels.clone().unwrap_or_else(|| vec![0; d.basis.len()]));
            (n, l)
        })
        .collect();
    FilteredComplex::new(complex, levels)
}

pub fn parse_filtered_complex(text: &str) -> Result<FilteredComplex> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    filtered_from_doc(&doc)
}

pub fn filtered_to_doc(f: &FilteredComplex, name: &str) -> ComplexDoc {
    let c = f.complex();
    let degrees = c
        .degrees()
        .map(|n| DegreeDoc {
            degree: n,
            basis: c.labels(n).to_vec(),
            levels: Some(f.levels(n).to_vec()),
        })
        .collect();
    let differentials = c
        .degrees()
        .filter_map(|n| {
            let d = c.differential_ref(n)?;
            let entries: Vec<_> = d
                .row_vecs()
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().map(move |(j, x)| (i + 1, j + 1, fmt_rational(x))))
                .collect();
            (!entries.is_empty()).then_some(DifferentialDoc { from: n, entries })
        })
        .collect();
    ComplexDoc {
        name: name.into(),
        direction: c.direction().as_str().into(),
        degrees,
        differentials,
    }
}

pub fn filtered_to_json(f: &FilteredComplex, name: &str) -> String {
    serde_json::to_string_pretty(&filtered_to_doc(f, name)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOY: &str = r#"{"name":"toy","direction":"homological",
        "degrees":[{"degree":0,"basis":["a"],"levels":[0]},
                   {"degree":1,"basis":["b1","b2"],"levels":[1,2]},
                   {"degree":2,"basis":["c"],"levels":[2]}],
        "differentials":[{"from":1,"entries":[[1,1,"1"]]},{"from":2,"entries":[[2,1,"1"]]}]}"#;

    #[test]
    fn round_trip() {
        let f = parse_filtered_complex(TOY).unwrap();
        assert_eq!(f.complex().homology_dims().values().sum::<usize>(), 0);
        let back = parse_filtered_complex(&filtered_to_json(&f, "toy")).unwrap();
        assert_eq!(back.complex(), f.complex());
        assert_eq!(back.page(1), f.page(1));
    }

    #[test]
    fn rejects_bad_entries() {
        let bad = TOY.replace("[[1,1,\"1\"]]", "[[2,1,\"1\"]]");
        assert!(matches!(parse_filtered_complex(&bad), Err(Error::Field { .. })));
        let not_complex = TOY.replace("[[2,1,\"1\"]]", "[[1,1,\"1\"]]");
        assert_eq!(parse_filtered_complex(&not_complex).unwrap_err(), Error::NotAComplex { degree: 2 });
    }
}

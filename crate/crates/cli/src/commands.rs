use std::collections::BTreeSet;
use std::path::Path;

use opcohom::algebra::{algebra_to_doc, parse_algebra, parse_module, AlgebraPresentation, ModulePresentation, OperadTag};
use opcohom::complexes::{parse_filtered_complex, ChainComplex, SpectralPage};
use opcohom::hodge::{
    bar_complex, connes_complex, cotangent_complex, hochschild_complex, hodge_pieces, CotangentSide, CyclicSign,
    HochschildSpec, Variant, WeightWindow,
};
use opcohom::lie_postlie::{postlie_split_check, PostLieSpec, SplitReport};
use opcohom::opcalc::{dims_table, egf_compose, law_dim_check, DimSeries, OperadName};
use opcohom::symgroup::{shuffle_element, shuffle_spectrum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::report::{Input, Report, Table};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn read(report: &mut Report, role: &str, path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("--{role} {}: {e}", path.display())))?;
    let digest: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    report.inputs.push(Input {
        role: role.into(),
        path: path.display().to_string(),
        sha256: digest,
    });
    String::from_utf8(bytes).map_err(|_| CliError::Input(format!("--{role} {}: not UTF-8", path.display())))
}

/// A file that fails to parse is an input error whatever the reason.
fn bad_file(role: &str, path: &Path, e: opcohom::Error) -> CliError {
    CliError::Input(format!("--{role} {}: {e}", path.display()))
}

fn operad(flag: &str, name: &str) -> Result<OperadName> {
    OperadName::parse(name).map_err(|e| {
        let known: Vec<&str> = OperadName::ALL.iter().map(|o| o.as_str()).collect();
        CliError::Input(format!("--{flag}: {e} (known: {})", known.join(", ")))
    })
}

fn load_algebra(report: &mut Report, path: &Path) -> Result<AlgebraPresentation> {
    let text = read(report, "algebra", path)?;
    parse_algebra(&text).map_err(|e| bad_file("algebra", path, e))
}

fn load_module(report: &mut Report, path: &Path, alg: &AlgebraPresentation) -> Result<ModulePresentation> {
    let text = read(report, "module", path)?;
    parse_module(&text, alg).map_err(|e| bad_file("module", path, e))
}

fn window(report: &mut Report, cutoff: Option<i64>) -> Option<WeightWindow> {
    cutoff.map(|w| {
        report.param("weight_cutoff", w);
        WeightWindow::at_most(w)
    })
}

/// Rows (degree, dim, homology) for degrees ≤ top, plus the (degree,
/// weight) homology when the complex is graded and a window is set.
fn complex_tables(report: &mut Report, c: &ChainComplex, top: i64, by_weight: bool) -> Result<()> {
    let h = c.homology_dims();
    let mut t = Table::new("degrees", &["degree", "dim", "homology"]);
    let mut rows = Vec::new();
    for n in c.degrees().filter(|&n| n <= top) {
        t.push([n.to_string(), c.dim(n).to_string(), h[&n].to_string()]);
        rows.push(json!({"degree": n, "dim": c.dim(n), "homology": h[&n]}));
    }
    report.tables.push(t);
    let mut result = json!({"direction": c.direction().as_str(), "degrees": rows});
    if by_weight && c.has_weights() {
        let hw = c.homology_by_weight()?;
        let mut t = Table::new("homology by weight", &["degree", "weight", "homology"]);
        let mut rows = Vec::new();
        for (&(n, w), &d) in hw.iter().filter(|((n, _), _)| *n <= top) {
            t.push([n, w, d as i64]);
            rows.push(json!({"degree": n, "weight": w, "homology": d}));
        }
        report.tables.push(t);
        result["by_weight"] = Value::Array(rows);
    }
    report.result = result;
    Ok(())
}

/// Records an axiom failure as a defect table instead of an error.
fn defect(r: &mut Report, e: opcohom::Error, role: &str, path: &Path) -> Result<()> {
    let opcohom::Error::AxiomViolation {
        axiom,
        operation,
        triple,
        defect,
    } = &e
    else {
        return Err(bad_file(role, path, e));
    };
    let mut t = Table::new("defect", &["axiom", "operation", "triple", "defect"]);
    t.push([axiom.as_str(), operation, &triple.join(" "), defect]);
    r.tables.push(t);
    r.note("valid", false);
    r.passed = false;
    r.invalid_input = true;
    r.result = json!({"valid": false, "axiom": axiom, "operation": operation, "triple": triple, "defect": defect});
    Ok(())
}

pub fn validate(algebra: &Path, module: Option<&Path>) -> Result<Report> {
    let mut r = Report::new("validate");
    let text = read(&mut r, "algebra", algebra)?;
    let a = match parse_algebra(&text) {
        Ok(a) => a,
        Err(e) => {
            defect(&mut r, e, "algebra", algebra)?;
            return Ok(r);
        }
    };
    let mut t = Table::new("algebra", &["field", "value"]);
    t.push(["name", a.name.as_str()]);
    t.push(["operad", a.tag.as_str()]);
    t.push(["dim", &a.dim().to_string()]);
    t.push(["weighted", &a.weights.is_some().to_string()]);
    r.tables.push(t);
    let mut result = json!({"valid": true, "algebra": algebra_to_doc(&a)});
    if let Some(p) = module {
        let text = read(&mut r, "module", p)?;
        let m = match parse_module(&text, &a) {
            Ok(m) => m,
            Err(e) => {
                defect(&mut r, e, "module", p)?;
                return Ok(r);
            }
        };
        let mut t = Table::new("module", &["field", "value"]);
        t.push(["side", m.side.as_str()]);
        t.push(["symmetric", &m.symmetric.to_string()]);
        t.push(["dim", &m.dim().to_string()]);
        r.tables.push(t);
        result["module"] = json!({"side": m.side.as_str(), "symmetric": m.symmetric, "dim": m.dim(), "basis": m.basis});
    }
    r.note("valid", true);
    r.result = result;
    Ok(r)
}

pub fn shuffle(n: usize, matrix: bool) -> Result<Report> {
    let mut r = Report::new("shuffle");
    r.param("n", n);
    let sh = shuffle_element(n)?;
    let mut t = Table::new("terms", &["permutation", "coefficient"]);
    let mut terms = Vec::new();
    for (p, c) in sh.terms() {
        t.push([p.to_string(), c.to_string()]);
        terms.push(json!({"permutation": p.images(), "coefficient": c.to_string()}));
    }
    r.tables.push(t);
    r.note("element", &sh);
    let mut result = json!({"n": n, "element": sh.to_string(), "terms": terms});
    if matrix {
        if n > 7 {
            return Err(CliError::Input("--matrix is limited to n ≤ 7".into()));
        }
        let spec = shuffle_spectrum(n)?;
        let mut t = Table::new("eigenvalues", &["eigenvalue", "multiplicity"]);
        let mut rows = Vec::new();
        for (i, d) in spec.iter().enumerate() {
            let lambda = 1u64 << (i + 1);
            t.push([lambda, *d as u64]);
            rows.push(json!({"eigenvalue": lambda, "multiplicity": d}));
        }
        r.tables.push(t);
        let total: usize = spec.iter().sum();
        let fact: usize = (1..=n).product();
        r.note("multiplicity sum", format!("{total} of {fact}"));
        r.passed = total == fact;
        result["eigenvalues"] = Value::Array(rows);
    }
    r.result = result;
    Ok(r)
}

pub fn bar(algebra: &Path, max_length: usize, cutoff: Option<i64>) -> Result<Report> {
    let mut r = Report::new("bar");
    let a = load_algebra(&mut r, algebra)?;
    r.param("max_length", max_length);
    let w = window(&mut r, cutoff);
    if max_length < 1 {
        return Err(CliError::Input("--max-length must be at least 1".into()));
    }
    let c = bar_complex(&a, max_length + 1, w)?;
    complex_tables(&mut r, &c, max_length as i64 - 1, w.is_some())?;
    Ok(r)
}

fn hochschild_spec(
    r: &mut Report,
    algebra: &Path,
    module: &Path,
    max_degree: usize,
    variant: Variant,
    cutoff: Option<i64>,
) -> Result<HochschildSpec> {
    let a = load_algebra(r, algebra)?;
    let m = load_module(r, module, &a)?;
    r.param("max_degree", max_degree);
    r.param("variant", if variant == Variant::Cochain { "cochain" } else { "chain" });
    let mut spec = HochschildSpec::new(&a, &m, variant, max_degree);
    if let Some(w) = window(r, cutoff) {
        spec = spec.with_window(w);
    }
    Ok(spec)
}

pub fn hochschild(algebra: &Path, module: &Path, max_degree: usize, variant: Variant, cutoff: Option<i64>) -> Result<Report> {
    let mut r = Report::new("hochschild");
    let spec = hochschild_spec(&mut r, algebra, module, max_degree, variant, cutoff)?;
    let c = hochschild_complex(&spec.with_n_max(max_degree + 1))?;
    complex_tables(&mut r, &c, max_degree as i64, cutoff.is_some())?;
    Ok(r)
}

pub fn hodge(algebra: &Path, module: &Path, max_degree: usize, variant: Variant, cutoff: Option<i64>) -> Result<Report> {
    let mut r = Report::new("hodge");
    let spec = hochschild_spec(&mut r, algebra, module, max_degree, variant, cutoff)?;
    let table = hodge_pieces(&spec)?;
    let mut cells = Table::new("pieces", &["degree", "piece", "dim"]);
    let mut totals = Table::new("totals", &["degree", "total", "piece_sum"]);
    let mut rows = Vec::new();
    for (n, row) in &table.pieces {
        for (i, d) in row.iter().enumerate() {
            cells.push([*n, i, *d]);
        }
        let sum: usize = row.iter().sum();
        totals.push([*n, table.totals[n], sum]);
        rows.push(json!({"degree": n, "pieces": row, "total": table.totals[n]}));
    }
    r.tables.push(cells);
    r.tables.push(totals);
    let additive = table.additive();
    r.note("additive", additive);
    r.passed = additive;
    r.result = json!({"rows": rows, "additive": additive});
    Ok(r)
}

pub fn cyclic(algebra: &Path, max_length: usize, sign: CyclicSign) -> Result<Report> {
    let mut r = Report::new("cyclic");
    let a = load_algebra(&mut r, algebra)?;
    r.param("max_length", max_length);
    r.param("cyclic_sign", if sign == CyclicSign::Degree { "degree" } else { "tensor-length" });
    if max_length < 1 {
        return Err(CliError::Input("--max-length must be at least 1".into()));
    }
    let c = connes_complex(&a, max_length + 1, sign)?;
    complex_tables(&mut r, &c, max_length as i64 - 1, false)?;
    Ok(r)
}

pub fn cotangent(
    tag: OperadTag,
    algebra: &Path,
    module: &Path,
    max_degree: usize,
    side: CotangentSide,
    cutoff: Option<i64>,
) -> Result<Report> {
    let mut r = Report::new("cotangent");
    let a = load_algebra(&mut r, algebra)?;
    let m = load_module(&mut r, module, &a)?;
    r.param("tag", tag.as_str());
    r.param("side", if side == CotangentSide::Hom { "hom" } else { "tensor" });
    r.param("max_degree", max_degree);
    let w = window(&mut r, cutoff);
    let c = cotangent_complex(tag, &a, &m, side, max_degree + 1, w)?;
    complex_tables(&mut r, &c, max_degree as i64, w.is_some())?;
    Ok(r)
}

pub fn postlie_check(
    algebra: &Path,
    module: &Path,
    max_degree: Option<usize>,
    side: CotangentSide,
    cutoff: Option<i64>,
) -> Result<Report> {
    let mut r = Report::new("postlie-check");
    let a = load_algebra(&mut r, algebra)?;
    let m = load_module(&mut r, module, &a)?;
    r.param("side", if side == CotangentSide::Hom { "hom" } else { "tensor" });
    let mut spec = PostLieSpec::new(&a, &m, side);
    if let Some(d) = max_degree {
        r.param("max_degree", d);
        spec.k_max = spec.k_max.min(d + 2);
    }
    if let Some(w) = window(&mut r, cutoff) {
        spec = spec.with_window(w);
    }
    let rep: SplitReport = postlie_split_check(&spec)?;
    let keys: BTreeSet<(i64, i64)> = rep
        .lhs
        .keys()
        .chain(rep.rhs.keys())
        .copied()
        .filter(|(d, _)| rep.max_degree.map_or(true, |top| *d <= top))
        .collect();
    let mut t = Table::new("comparison", &["degree", "weight", "lhs", "rhs"]);
    let mut rows = Vec::new();
    for k in keys {
        let (x, y) = (rep.lhs.get(&k).copied().unwrap_or(0), rep.rhs.get(&k).copied().unwrap_or(0));
        t.push([k.0, k.1, x as i64, y as i64]);
        rows.push(json!({"degree": k.0, "weight": k.1, "lhs": x, "rhs": y}));
    }
    r.tables.push(t);
    r.note("equal", rep.equal);
    if let Some(top) = rep.max_degree {
        r.note("compared through degree", top);
    }
    r.passed = rep.equal;
    r.result = json!({"rows": rows, "max_degree": rep.max_degree, "equal": rep.equal});
    Ok(r)
}

fn series_table(r: &mut Report, s: &DimSeries) {
    let mut t = Table::new("dimensions", &["arity", "dim"]);
    for (i, d) in s.dims.iter().enumerate() {
        t.push([(i + 1).to_string(), d.to_string()]);
    }
    r.tables.push(t);
    r.result = json!({"dims": s.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>()});
}

pub fn dims(name: &str, max: usize) -> Result<Report> {
    let mut r = Report::new("dims");
    let o = operad("operad", name)?;
    r.param("operad", o.as_str());
    r.param("max", max);
    series_table(&mut r, &dims_table(o, max));
    Ok(r)
}

pub fn compose_dims(outer: &str, inner: &str, max: usize) -> Result<Report> {
    let mut r = Report::new("compose-dims");
    let (a, b) = (operad("outer", outer)?, operad("inner", inner)?);
    r.param("outer", a.as_str());
    r.param("inner", b.as_str());
    r.param("max", max);
    series_table(&mut r, &egf_compose(&dims_table(a, max), &dims_table(b, max), max)?);
    Ok(r)
}

pub fn law_check(p: &str, q: &str, o: &str, max: usize) -> Result<Report> {
    let mut r = Report::new("law-check");
    let (p, q, o) = (operad("p", p)?, operad("q", q)?, operad("o", o)?);
    r.param("p", p.as_str());
    r.param("q", q.as_str());
    r.param("o", o.as_str());
    r.param("max", max);
    let c = law_dim_check(p, q, o, max)?;
    let mut t = Table::new("comparison", &["arity", "lhs", "rhs"]);
    let mut rows = Vec::new();
    for n in 1..=max {
        let (x, y) = (c.lhs.get(n).to_string(), c.rhs.get(n).to_string());
        t.push([n.to_string(), x.clone(), y.clone()]);
        rows.push(json!({"arity": n, "lhs": x, "rhs": y}));
    }
    r.tables.push(t);
    r.note("product", if c.hadamard { "hadamard" } else { "composite" });
    r.note("equal", c.equal);
    r.passed = c.equal;
    r.result = json!({"rows": rows, "hadamard": c.hadamard, "equal": c.equal});
    Ok(r)
}

fn page_rows(t: &mut Table, rows: &mut Vec<Value>, label: &str, page: &SpectralPage) {
    for (&(p, q), &d) in &page.dims {
        t.push([label.to_string(), p.to_string(), q.to_string(), d.to_string()]);
        rows.push(json!({"page": label, "p": p, "q": q, "dim": d}));
    }
}

pub fn spectral(input: &Path, pages: usize) -> Result<Report> {
    let mut r = Report::new("spectral");
    let text = read(&mut r, "input", input)?;
    r.param("pages", pages);
    let f = parse_filtered_complex(&text).map_err(|e| bad_file("input", input, e))?;
    let mut t = Table::new("pages", &["page", "p", "q", "dim"]);
    let mut rows = Vec::new();
    for page in f.spectral_pages(pages) {
        page_rows(&mut t, &mut rows, &page.r.to_string(), &page);
    }
    let inf = f.e_infinity();
    page_rows(&mut t, &mut rows, "inf", &inf);
    r.tables.push(t);
    let homology: std::collections::BTreeMap<i64, usize> =
        f.complex().homology_dims().into_iter().filter(|(_, d)| *d > 0).collect();
    let converges = inf.total_by_degree() == homology && inf == f.e_infinity_direct();
    let degeneration = f.degeneration_page();
    r.note("degenerates at page", degeneration);
    r.note("converges", converges);
    r.passed = converges;
    r.result = json!({
        "entries": rows,
        "homology": homology.iter().map(|(n, d)| json!({"degree": n, "dim": d})).collect::<Vec<_>>(),
        "degeneration_page": degeneration,
        "converges": converges,
    });
    Ok(r)
}

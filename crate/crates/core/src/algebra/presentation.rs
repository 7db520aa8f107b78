use std::collections::BTreeMap;
use std::fmt;

use super::table::{unit, Table};
use crate::error::{Error, Result};
use crate::linalg::{normalize, Rational, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperadTag {
    Assoc,
    Comm,
    Lie,
    PostLie,
}

impl OperadTag {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "assoc" => Ok(OperadTag::Assoc),
            "comm" => Ok(OperadTag::Comm),
            "lie" => Ok(OperadTag::Lie),
            "postlie" => Ok(OperadTag::PostLie),
            _ => Err(Error::Field {
                field: "operad".into(),
                message: format!("`{s}` is not one of assoc, comm, lie, postlie"),
            }),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OperadTag::Assoc => "assoc",
            OperadTag::Comm => "comm",
            OperadTag::Lie => "lie",
            OperadTag::PostLie => "postlie",
        }
    }

    /// Names of the binary operations an algebra of this type carries.
    pub fn operations(self) -> &'static [&'static str] {
        match self {
            OperadTag::Assoc | OperadTag::Comm => &["mul"],
            OperadTag::Lie => &["bracket"],
            OperadTag::PostLie => &["bracket", "circ"],
        }
    }
}

impl fmt::Display for OperadTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite-dimensional (non-unital) algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub name: String,
    pub tag: OperadTag,
    pub basis: Vec<String>,
    pub products: BTreeMap<String, Table>,
    pub weights: Option<Vec<i64>>,
}

impl AlgebraPresentation {
    /// Assembles and validates.
    pub fn new(
        name: &str,
        tag: OperadTag,
        basis: Vec<String>,
        products: BTreeMap<String, Table>,
        weights: Option<Vec<i64>>,
    ) -> Result<Self> {
        let a = AlgebraPresentation {
            name: name.to_string(),
            tag,
            basis,
            products,
            weights,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn op(&self, name: &str) -> &Table {
        self.products
            .get(name)
            .unwrap_or_else(|| panic!("algebra `{}` has no operation `{name}`", self.name))
    }

    /// The multiplication of an assoc/comm algebra, or the bracket otherwise.
    pub fn primary(&self) -> &Table {
        self.op(self.tag.operations()[0])
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights.as_ref().map_or(0, |w| w[i])
    }

    /// Human-readable linear combination of basis labels.
    pub fn show(&self, v: &[(usize, Rational)]) -> String {
        show_combination(&self.basis, v)
    }

    /// Checks shapes, weight additivity, and every axiom of the tag on all
    /// basis triples. The first violation is reported.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let mut seen = std::collections::HashSet::new();
        for b in &self.basis {
            if !seen.insert(b) {
                return Err(Error::Field {
                    field: "basis".into(),
                    message: format!("duplicate label `{b}`"),
                });
            }
        }
        for op in self.products.keys() {
            if !self.tag.operations().contains(&op.as_str()) {
                return Err(Error::Field {
                    field: "products".into(),
                    message: format!("operation `{op}` is not part of a {} algebra", self.tag),
                });
            }
        }
        for op in self.tag.operations() {
            let Some(t) = self.products.get(*op) else {
                return Err(Error::Field {
                    field: "products".into(),
                    message: format!("missing operation `{op}`"),
                });
            };
            if t.dims() != (n, n, n) {
                return Err(Error::Shape(format!("operation `{op}` is not {n}×{n}→{n}")));
            }
        }
        if let Some(w) = &self.weights {
            if w.len() != n {
                return Err(Error::Field {
                    field: "weights".into(),
                    message: format!("expected {n} weights, found {}", w.len()),
                });
            }
            if w.iter().any(|&x| x <= 0) {
                return Err(Error::Field {
                    field: "weights".into(),
                    message: "weights must be positive".into(),
                });
            }
            for (op, t) in &self.products {
                for i in 0..n {
                    for j in 0..n {
                        if let Some((k, _)) = t.entry(i, j).iter().find(|(k, _)| w[*k] != w[i] + w[j]) {
                            return Err(Error::Weight(format!(
                                "`{op}`({}, {}) has a component on `{}` of weight {} ≠ {} + {}",
                                self.basis[i], self.basis[j], self.basis[*k], w[*k], w[i], w[j]
                            )));
                        }
                    }
                }
            }
        }
        match self.tag {
            OperadTag::Assoc => self.check_associative("mul"),
            OperadTag::Comm => {
                self.check_commutative("mul")?;
                self.check_associative("mul")
            }
            OperadTag::Lie => self.check_lie("bracket"),
            OperadTag::PostLie => {
                self.check_lie("bracket")?;
                self.check_postlie()
            }
        }
    }

    fn violation(&self, axiom: &str, op: &str, triple: &[usize], defect: &SparseVec) -> Error {
        Error::AxiomViolation {
            axiom: axiom.into(),
            operation: op.into(),
            triple: triple.iter().map(|&i| self.basis[i].clone()).collect(),
            defect: self.show(defect),
        }
    }

    /// Runs `f` over all basis triples in parallel, returning the first
    /// (lexicographically) nonzero defect.
    fn scan_triples<F>(&self, f: F) -> Option<([usize; 3], SparseVec)>
    where
        F: Fn(usize, usize, usize) -> SparseVec + Sync + Send,
    {
        let n = self.dim();
        crate::par::find_first(n * n * n, |t| {
            let (i, j, k) = (t / (n * n), t / n % n, t % n);
            let d = f(i, j, k);
            (!d.is_empty()).then_some(([i, j, k], d))
        })
    }

    fn check_associative(&self, op: &str) -> Result<()> {
        let m = self.op(op);
        let found = self.scan_triples(|i, j, k| {
            let left = m.apply(m.entry(i, j), &unit(k));
            let right = m.apply(&unit(i), m.entry(j, k));
            sub(&left, &right)
        });
        match found {
            Some((t, d)) => Err(self.violation("associativity (xy)z = x(yz)", op, &t, &d)),
            None => Ok(()),
        }
    }

    fn check_commutative(&self, op: &str) -> Result<()> {
        let m = self.op(op);
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let d = sub(m.entry(i, j), m.entry(j, i));
                if !d.is_empty() {
                    return Err(self.violation("commutativity xy = yx", op, &[i, j], &d));
                }
            }
        }
        Ok(())
    }

    fn check_lie(&self, op: &str) -> Result<()> {
        let b = self.op(op);
        let n = self.dim();
        for i in 0..n {
            if !b.entry(i, i).is_empty() {
                return Err(self.violation("alternating [x,x] = 0", op, &[i, i], b.entry(i, i)));
            }
            for j in i + 1..n {
                let d = add(b.entry(i, j), b.entry(j, i));
                if !d.is_empty() {
                    return Err(self.violation("antisymmetry [x,y] = −[y,x]", op, &[i, j], &d));
                }
            }
        }
        let found = self.scan_triples(|i, j, k| {
            let a = b.apply(&unit(i), b.entry(j, k));
            let c = b.apply(&unit(j), b.entry(k, i));
            let e = b.apply(&unit(k), b.entry(i, j));
            add(&add(&a, &c), &e)
        });
        match found {
            Some((t, d)) => Err(self.violation("Jacobi identity", op, &t, &d)),
            None => Ok(()),
        }
    }

    fn check_postlie(&self) -> Result<()> {
        let b = self.op("bracket");
        let c = self.op("circ");
        // a∘[b,c] = (a∘b)∘c − a∘(b∘c) − (a∘c)∘b + a∘(c∘b)
        let found = self.scan_triples(|i, j, k| {
            let (x, y, z) = (unit(i), unit(j), unit(k));
            let lhs = c.apply(&x, b.entry(j, k));
            let t1 = c.apply(c.entry(i, j), &z);
            let t2 = c.apply(&x, c.entry(j, k));
            let t3 = c.apply(c.entry(i, k), &y);
            let t4 = c.apply(&x, c.entry(k, j));
            sub(&lhs, &add(&sub(&sub(&t1, &t2), &t3), &t4))
        });
        if let Some((t, d)) = found {
            return Err(self.violation("a∘[b,c] = (a∘b)∘c − a∘(b∘c) − (a∘c)∘b + a∘(c∘b)", "circ", &t, &d));
        }
        // [a,b]∘c = [a,b∘c] + [a∘c,b]
        let found = self.scan_triples(|i, j, k| {
            let (x, y) = (unit(i), unit(j));
            let lhs = c.apply(b.entry(i, j), &unit(k));
            let r1 = b.apply(&x, c.entry(j, k));
            let r2 = b.apply(c.entry(i, k), &y);
            sub(&lhs, &add(&r1, &r2))
        });
        if let Some((t, d)) = found {
            return Err(self.violation("[a,b]∘c = [a,b∘c] + [a∘c,b]", "circ", &t, &d));
        }
        Ok(())
    }
}

pub(crate) fn add(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseVec {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    normalize(v)
}

pub(crate) fn sub(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseVec {
    let mut v = a.to_vec();
    v.extend(b.iter().map(|(i, x)| (*i, -x)));
    normalize(v)
}

pub fn show_combination(labels: &[String], v: &[(usize, Rational)]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let neg = *c < 0u32;
        let abs = if neg { -c } else { c.clone() };
        s += match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        if abs != 1u32 {
            s += &format!("{abs}·");
        }
        s += &labels[*i];
    }
    s
}

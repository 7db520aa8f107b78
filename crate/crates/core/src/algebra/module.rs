use std::fmt;

use super::presentation::{show_combination, sub, AlgebraPresentation, OperadTag};
use super::table::{unit, Table};
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Bi,
}

impl Side {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "bi" => Ok(Side::Bi),
            _ => Err(Error::Field {
                field: "side".into(),
                message: format!("`{s}` is not one of left, right, bi"),
            }),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Bi => "bi",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Coefficients for an algebra. `left` is indexed (algebra, module) and
/// `right` is indexed (module, algebra). For Lie-type algebras only `left`
/// is used (x·m); the induced right action is m·x = −x·m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub algebra: String,
    pub side: Side,
    pub symmetric: bool,
    pub basis: Vec<String>,
    pub left: Option<Table>,
    pub right: Option<Table>,
    pub weights: Option<Vec<i64>>,
}

impl ModulePresentation {
    /// Assembles, fills in derived actions, and validates against `alg`.
    pub fn new(
        alg: &AlgebraPresentation,
        side: Side,
        symmetric: bool,
        basis: Vec<String>,
        left: Option<Table>,
        right: Option<Table>,
        weights: Option<Vec<i64>>,
    ) -> Result<Self> {
        let mut m = ModulePresentation {
            algebra: alg.name.clone(),
            side,
            symmetric,
            basis,
            left,
            right,
            weights,
        };
        if symmetric && m.right.is_none() {
            m.right = m.left.as_ref().map(Table::flipped);
        }
        if symmetric && m.left.is_none() {
            m.left = m.right.as_ref().map(Table::flipped);
        }
        m.validate(alg)?;
        Ok(m)
    }

    /// A as a module over itself (adjoint module for Lie types).
    pub fn regular(alg: &AlgebraPresentation) -> Self {
        let p = alg.primary().clone();
        let (side, right) = match alg.tag {
            OperadTag::Assoc | OperadTag::Comm => (Side::Bi, Some(p.clone())),
            OperadTag::Lie | OperadTag::PostLie => (Side::Left, None),
        };
        ModulePresentation {
            algebra: alg.name.clone(),
            side,
            symmetric: alg.tag == OperadTag::Comm,
            basis: alg.basis.clone(),
            left: Some(p),
            right,
            weights: alg.weights.clone(),
        }
    }

    /// `dim`-dimensional module with all actions zero, in weight 0.
    pub fn trivial(alg: &AlgebraPresentation, dim: usize) -> Self {
        let n = alg.dim();
        let basis = if dim == 1 {
            vec!["1".to_string()]
        } else {
            (1..=dim).map(|i| format!("m{i}")).collect()
        };
        let (side, right) = match alg.tag {
            OperadTag::Assoc | OperadTag::Comm => (Side::Bi, Some(Table::zero(dim, n, dim))),
            OperadTag::Lie | OperadTag::PostLie => (Side::Left, None),
        };
        ModulePresentation {
            algebra: alg.name.clone(),
            side,
            symmetric: alg.tag == OperadTag::Comm,
            basis,
            left: Some(Table::zero(n, dim, dim)),
            right,
            weights: alg.weights.as_ref().map(|_| vec![0; dim]),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn weight(&self, j: usize) -> i64 {
        self.weights.as_ref().map_or(0, |w| w[j])
    }

    pub fn left_action(&self) -> &Table {
        self.left.as_ref().expect("module has no left action")
    }

    pub fn right_action(&self) -> &Table {
        self.right.as_ref().expect("module has no right action")
    }

    /// Right action n·x. For Lie-type modules this is −x·n.
    pub fn right_or_induced(&self, tag: OperadTag) -> Table {
        match tag {
            OperadTag::Lie | OperadTag::PostLie => {
                let l = self.left_action();
                let (a, m, _) = l.dims();
                let mut t = Table::zero(m, a, m);
                for i in 0..a {
                    for j in 0..m {
                        t.set(j, i, l.entry(i, j).iter().map(|(k, c)| (*k, -c)).collect());
                    }
                }
                t
            }
            _ => self.right_action().clone(),
        }
    }

    /// The linear dual M* with the contragredient actions
    /// (a·φ)(m) = φ(m·a) and (φ·a)(m) = φ(a·m); for Lie types
    /// (x·φ)(m) = −φ(x·m). Weights are negated.
    pub fn dual(&self, tag: OperadTag) -> ModulePresentation {
        let d = self.dim();
        let (left, right) = match tag {
            OperadTag::Lie | OperadTag::PostLie => (Some(contragredient(self.left_action(), true, d, true, true)), None),
            _ => (
                self.right.as_ref().map(|r| contragredient(r, false, d, false, true)),
                self.left.as_ref().map(|l| contragredient(l, true, d, false, false)),
            ),
        };
        ModulePresentation {
            algebra: self.algebra.clone(),
            side: self.side,
            symmetric: self.symmetric,
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
            left,
            right,
            weights: self.weights.as_ref().map(|w| w.iter().map(|x| -x).collect()),
        }
    }

    pub fn show(&self, v: &[(usize, Rational)]) -> String {
        show_combination(&self.basis, v)
    }

    fn violation(&self, alg: &AlgebraPresentation, axiom: &str, op: &str, a: &[usize], m: usize, d: &SparseVec) -> Error {
        let mut triple: Vec<String> = a.iter().map(|&i| alg.basis[i].clone()).collect();
        triple.push(self.basis[m].clone());
        Error::AxiomViolation {
            axiom: axiom.into(),
            operation: op.into(),
            triple,
            defect: self.show(d),
        }
    }

    pub fn validate(&self, alg: &AlgebraPresentation) -> Result<()> {
        if self.algebra != alg.name {
            return Err(Error::Field {
                field: "algebra".into(),
                message: format!("module is for `{}`, not `{}`", self.algebra, alg.name),
            });
        }
        let (n, d) = (alg.dim(), self.dim());
        if let Some(l) = &self.left {
            if l.dims() != (n, d, d) {
                return Err(Error::Shape("left action has the wrong shape".into()));
            }
        }
        if let Some(r) = &self.right {
            if r.dims() != (d, n, d) {
                return Err(Error::Shape("right action has the wrong shape".into()));
            }
        }
        let need_left = matches!(self.side, Side::Left | Side::Bi);
        let need_right = matches!(self.side, Side::Right | Side::Bi);
        match alg.tag {
            OperadTag::Lie | OperadTag::PostLie => {
                if self.side != Side::Left || self.left.is_none() {
                    return Err(Error::Field {
                        field: "actions".into(),
                        message: "a Lie module needs side `left` and a left action".into(),
                    });
                }
            }
            _ => {
                if need_left && self.left.is_none() || need_right && self.right.is_none() {
                    return Err(Error::Field {
                        field: "actions".into(),
                        message: format!("a {} module needs the matching action tables", self.side),
                    });
                }
                if self.symmetric && alg.tag != OperadTag::Comm {
                    return Err(Error::Field {
                        field: "symmetric".into(),
                        message: "symmetric coefficients only make sense for comm algebras".into(),
                    });
                }
            }
        }
        if let Some(w) = &self.weights {
            if w.len() != d {
                return Err(Error::Field {
                    field: "weights".into(),
                    message: format!("expected {d} weights, found {}", w.len()),
                });
            }
            let check = |t: &Table, alg_first: bool| -> Result<()> {
                for i in 0..n {
                    for j in 0..d {
                        let img = if alg_first { t.entry(i, j) } else { t.entry(j, i) };
                        if img.iter().any(|(k, _)| w[*k] != w[j] + alg.weight(i)) {
                            return Err(Error::Weight(format!(
                                "action of `{}` on `{}` is not weight-additive",
                                alg.basis[i], self.basis[j]
                            )));
                        }
                    }
                }
                Ok(())
            };
            if let Some(l) = &self.left {
                check(l, true)?;
            }
            if let Some(r) = &self.right {
                check(r, false)?;
            }
        }
        let pairs = n * n * d;
        let at = |t: usize| (t / (n * d), t / d % n, t % d);
        match alg.tag {
            OperadTag::Lie | OperadTag::PostLie => {
                let b = alg.op("bracket");
                let l = self.left_action();
                let found = crate::par::find_first(pairs, |t| {
                    let (i, j, m) = at(t);
                    let lhs = l.apply(b.entry(i, j), &unit(m));
                    let xy = l.apply(&unit(i), l.entry(j, m));
                    let yx = l.apply(&unit(j), l.entry(i, m));
                    let def = sub(&lhs, &sub(&xy, &yx));
                    (!def.is_empty()).then_some((i, j, m, def))
                });
                if let Some((i, j, m, def)) = found {
                    return Err(self.violation(alg, "[x,y]·m = x·(y·m) − y·(x·m)", "action", &[i, j], m, &def));
                }
            }
            _ => {
                let mul = alg.op("mul");
                if let Some(l) = &self.left {
                    let found = crate::par::find_first(pairs, |t| {
                        let (i, j, m) = at(t);
                        let def = sub(&l.apply(mul.entry(i, j), &unit(m)), &l.apply(&unit(i), l.entry(j, m)));
                        (!def.is_empty()).then_some((i, j, m, def))
                    });
                    if let Some((i, j, m, def)) = found {
                        return Err(self.violation(alg, "(xy)·m = x·(y·m)", "left", &[i, j], m, &def));
                    }
                }
                if let Some(r) = &self.right {
                    let found = crate::par::find_first(pairs, |t| {
                        let (i, j, m) = at(t);
                        let def = sub(&r.apply(&unit(m), mul.entry(i, j)), &r.apply(r.entry(m, i), &unit(j)));
                        (!def.is_empty()).then_some((i, j, m, def))
                    });
                    if let Some((i, j, m, def)) = found {
                        return Err(self.violation(alg, "m·(xy) = (m·x)·y", "right", &[i, j], m, &def));
                    }
                }
                if let (Some(l), Some(r)) = (&self.left, &self.right) {
                    let found = crate::par::find_first(pairs, |t| {
                        let (i, j, m) = at(t);
                        let def = sub(&r.apply(l.entry(i, m), &unit(j)), &l.apply(&unit(i), r.entry(m, j)));
                        (!def.is_empty()).then_some((i, j, m, def))
                    });
                    if let Some((i, j, m, def)) = found {
                        return Err(self.violation(alg, "(x·m)·y = x·(m·y)", "bimodule", &[i, j], m, &def));
                    }
                }
                if self.symmetric {
                    let (l, r) = (self.left_action(), self.right_action());
                    for i in 0..n {
                        for m in 0..d {
                            let def = sub(l.entry(i, m), r.entry(m, i));
                            if !def.is_empty() {
                                return Err(self.violation(alg, "x·m = m·x", "symmetric", &[i], m, &def));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Transposes an action table onto the dual basis: the output entry for
/// (a, e^j) is Σ_k [t(a, e_k)]_j e^k, where `alg_first` says whether `t` is
/// indexed (algebra, module) and `out_alg_first` picks the output indexing.
fn contragredient(t: &Table, alg_first: bool, d: usize, negate: bool, out_alg_first: bool) -> Table {
    let (p, q, _) = t.dims();
    let a = if alg_first { p } else { q };
    let mut acc: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); d]; a];
    for i in 0..a {
        for k in 0..d {
            let img = if alg_first { t.entry(i, k) } else { t.entry(k, i) };
            for (j, c) in img {
                acc[i][*j].push((k, if negate { -c } else { c.clone() }));
            }
        }
    }
    let mut out = if out_alg_first { Table::zero(a, d, d) } else { Table::zero(d, a, d) };
    for (i, row) in acc.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            if out_alg_first {
                out.set(i, j, v);
            } else {
                out.set(j, i, v);
            }
        }
    }
    out
}

use std::collections::{BTreeMap, HashMap};

use malachite_base::num::basic::traits::{One, Zero};

use super::presentation::{AlgebraPresentation, OperadTag};
use super::table::Table;
use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};

pub type Word = Vec<u8>;

/// Element of the free associative algebra: word → coefficient.
pub type Poly = BTreeMap<Word, Rational>;

fn letter_names(g: usize) -> Vec<String> {
    if g <= 3 {
        ["x", "y", "z"][..g].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=g).map(|i| format!("x{i}")).collect()
    }
}

/// Lyndon words of length ≤ `max_len` on `g` letters, in lexicographic
/// order (Duval's algorithm).
pub fn lyndon_words(g: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if g == 0 || max_len == 0 {
        return out;
    }
    let top = (g - 1) as u8;
    let mut w: Word = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => return out,
        }
    }
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorization w = uv, v the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| (&w[..i], &w[i..]))
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            *out.entry(w).or_insert(Rational::ZERO) += x * y;
        }
    }
    out.retain(|_, c| *c != 0u32);
    out
}

pub fn poly_bracket(a: &Poly, b: &Poly) -> Poly {
    let mut out = poly_mul(a, b);
    for (w, c) in poly_mul(b, a) {
        *out.entry(w).or_insert(Rational::ZERO) -= c;
    }
    out.retain(|_, c| *c != 0u32);
    out
}

/// The standard bracketing P_w of a Lyndon word, expanded in the free
/// associative algebra.
pub fn standard_bracketing(w: &[u8]) -> Poly {
    match standard_factorization(w) {
        None => [(w.to_vec(), Rational::ONE)].into(),
        Some((u, v)) => poly_bracket(&standard_bracketing(u), &standard_bracketing(v)),
    }
}

fn bracket_label(w: &[u8], names: &[String]) -> String {
    match standard_factorization(w) {
        None => names[w[0] as usize].clone(),
        Some((u, v)) => format!("[{},{}]", bracket_label(u, names), bracket_label(v, names)),
    }
}

/// Lyndon basis of the free Lie algebra truncated at a weight.
pub struct LyndonBasis {
    pub words: Vec<Word>,
    pub polys: Vec<Poly>,
    index: HashMap<Word, usize>,
}

impl LyndonBasis {
    /// Basis ordered by length, then lexicographically.
    pub fn new(g: usize, max_len: usize) -> Self {
        let mut words = lyndon_words(g, max_len);
        words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let polys: Vec<Poly> = crate::par::map(&words, |w| standard_bracketing(w));
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        LyndonBasis { words, polys, index }
    }

    /// Writes a Lie polynomial in the basis. The smallest word in the support
    /// of a Lie polynomial is Lyndon, and P_w = w + (larger words), so
    /// peeling off the smallest word terminates.
    pub fn decompose(&self, f: &Poly) -> Result<SparseVec> {
        let mut f = f.clone();
        let mut out: SparseVec = Vec::new();
        while let Some((w, c)) = f.first_key_value().map(|(w, c)| (w.clone(), c.clone())) {
            let Some(&i) = self.index.get(&w) else {
                return Err(Error::InvalidArgument(format!("{w:?} leads a polynomial but is not a basis word")));
            };
            for (u, x) in &self.polys[i] {
                *f.entry(u.clone()).or_insert(Rational::ZERO) -= &c * x;
            }
            f.retain(|_, v| *v != 0u32);
            out.push((i, c));
        }
        out.sort_by_key(|e| e.0);
        Ok(out)
    }
}

/// Free algebra on `g` generators modulo everything of weight > `cutoff`.
pub fn free_algebra_truncation(tag: OperadTag, g: usize, cutoff: usize) -> Result<AlgebraPresentation> {
    if g == 0 || cutoff == 0 {
        return Err(Error::InvalidArgument("need at least one generator and cutoff ≥ 1".into()));
    }
    let names = letter_names(g);
    let name = format!("free_{}_{g}_w{cutoff}", tag.as_str());
    match tag {
        OperadTag::Assoc => {
            let mut words: Vec<Word> = vec![Vec::new()];
            let mut basis: Vec<Word> = Vec::new();
            for _ in 0..cutoff {
                words = words
                    .iter()
                    .flat_map(|w| {
                        (0..g as u8).map(move |c| {
                            let mut v = w.clone();
                            v.push(c);
                            v
                        })
                    })
                    .collect();
                basis.extend(words.iter().cloned());
            }
            let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let mut t = Table::zero(basis.len(), basis.len(), basis.len());
            for (i, u) in basis.iter().enumerate() {
                for (j, v) in basis.iter().enumerate() {
                    if u.len() + v.len() <= cutoff {
                        let mut w = u.clone();
                        w.extend_from_slice(v);
                        t.set(i, j, vec![(index[&w], Rational::ONE)]);
                    }
                }
            }
            let labels = basis.iter().map(|w| w.iter().map(|&c| names[c as usize].as_str()).collect()).collect();
            let weights = basis.iter().map(|w| w.len() as i64).collect();
            AlgebraPresentation::new(&name, tag, labels, [("mul".to_string(), t)].into(), Some(weights))
        }
        OperadTag::Comm => {
            let mut monos: Vec<Vec<u32>> = Vec::new();
            for deg in 1..=cutoff as u32 {
                let mut level = Vec::new();
                exponent_vectors(g, deg, &mut Vec::new(), &mut level);
                level.sort_by(|a, b| b.cmp(a));
                monos.extend(level);
            }
            let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let deg = |m: &Vec<u32>| m.iter().sum::<u32>() as usize;
            let mut t = Table::zero(monos.len(), monos.len(), monos.len());
            for (i, a) in monos.iter().enumerate() {
                for (j, b) in monos.iter().enumerate() {
                    if deg(a) + deg(b) <= cutoff {
                        let p: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        t.set(i, j, vec![(index[&p], Rational::ONE)]);
                    }
                }
            }
            let labels = monos
                .iter()
                .map(|m| {
                    m.iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(v, &e)| if e == 1 { names[v].clone() } else { format!("{}^{e}", names[v]) })
                        .collect::<String>()
                })
                .collect();
            let weights = monos.iter().map(|m| deg(m) as i64).collect();
            AlgebraPresentation::new(&name, tag, labels, [("mul".to_string(), t)].into(), Some(weights))
        }
        OperadTag::Lie => {
            let lb = LyndonBasis::new(g, cutoff);
            let n = lb.words.len();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
            let entries: Vec<Result<SparseVec>> = crate::par::map(&pairs, |&(i, j)| {
                if lb.words[i].len() + lb.words[j].len() > cutoff {
                    return Ok(Vec::new());
                }
                lb.decompose(&poly_bracket(&lb.polys[i], &lb.polys[j]))
            });
            let mut t = Table::zero(n, n, n);
            for (&(i, j), e) in pairs.iter().zip(entries) {
                t.set(i, j, e?);
            }
            let labels = lb.words.iter().map(|w| bracket_label(w, &names)).collect();
            let weights = lb.words.iter().map(|w| w.len() as i64).collect();
            AlgebraPresentation::new(&name, tag, labels, [("bracket".to_string(), t)].into(), Some(weights))
        }
        OperadTag::PostLie => Err(Error::InvalidArgument("free post-Lie truncations are not supported".into())),
    }
}

fn exponent_vectors(g: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == g {
        prefix.push(deg);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in 0..=deg {
        prefix.push(e);
        exponent_vectors(g, deg - e, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duval_order_and_counts() {
        let w = lyndon_words(2, 4);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        assert!(w.iter().all(|x| is_lyndon(x)));
        assert_eq!(w.len(), 2 + 1 + 2 + 3);
    }

    #[test]
    fn triangularity() {
        let lb = LyndonBasis::new(3, 5);
        for (w, p) in lb.words.iter().zip(&lb.polys) {
            let (lead, c) = p.first_key_value().unwrap();
            assert_eq!(lead, w);
            assert_eq!(*c, Rational::ONE);
        }
    }

    #[test]
    fn weight_profiles() {
        let by_weight = |a: &AlgebraPresentation| {
            let mut c = vec![0; 1 + *a.weights.as_ref().unwrap().iter().max().unwrap() as usize];
            for &w in a.weights.as_ref().unwrap() {
                c[w as usize] += 1;
            }
            c[1..].to_vec()
        };
        let c = free_algebra_truncation(OperadTag::Comm, 1, 3).unwrap();
        assert_eq!(by_weight(&c), vec![1, 1, 1]);
        assert_eq!(c.basis, vec!["x", "x^2", "x^3"]);
        assert_eq!(by_weight(&free_algebra_truncation(OperadTag::Assoc, 2, 3).unwrap()), vec![2, 4, 8]);
        assert_eq!(by_weight(&free_algebra_truncation(OperadTag::Lie, 2, 4).unwrap()), vec![2, 1, 2, 3]);
    }
}

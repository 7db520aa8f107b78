//! Bases of N ⊗ X where X is spanned by words: tensor words, increasing
//! wedge words, or pairs of wedge words split by a separator.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::par;

pub(crate) const SEP: u16 = u16::MAX;

/// Basis of `module ⊗ span(words)`, ordered by (word, module index).
#[derive(Clone, Debug)]
pub(crate) struct PairBasis {
    pub words: Vec<Vec<u16>>,
    word_index: HashMap<Vec<u16>, u32>,
    pub pairs: Vec<(u32, u16)>,
    lookup: Vec<u32>,
    mdim: usize,
}

impl PairBasis {
    pub fn new(words: Vec<Vec<u16>>, mdim: usize, keep: impl Fn(&[u16], usize) -> bool) -> Self {
        let word_index = words.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        let mut pairs = Vec::new();
        let mut lookup = vec![u32::MAX; words.len() * mdim];
        for (i, w) in words.iter().enumerate() {
            for m in 0..mdim {
                if keep(w, m) {
                    lookup[i * mdim + m] = pairs.len() as u32;
                    pairs.push((i as u32, m as u16));
                }
            }
        }
        PairBasis {
            words,
            word_index,
            pairs,
            lookup,
            mdim,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn index(&self, w: &[u16], m: usize) -> Option<usize> {
        let &i = self.word_index.get(w)?;
        let k = self.lookup[i as usize * self.mdim + m];
        (k != u32::MAX).then_some(k as usize)
    }

    pub fn pair(&self, k: usize) -> (&[u16], usize) {
        let (w, m) = self.pairs[k];
        (&self.words[w as usize], m as usize)
    }
}

/// Inclusive weight window on basis vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightWindow {
    pub min: i64,
    pub max: i64,
}

impl WeightWindow {
    pub fn at_most(max: i64) -> Self {
        WeightWindow { min: i64::MIN, max }
    }

    pub fn exactly(w: i64) -> Self {
        WeightWindow { min: w, max: w }
    }

    pub fn contains(&self, w: i64) -> bool {
        (self.min..=self.max).contains(&w)
    }
}

/// Letter weights and module weights used to enumerate a windowed basis.
pub(crate) struct Grading<'a> {
    pub letters: &'a [i64],
    pub module: Vec<i64>,
    pub window: Option<WeightWindow>,
}

impl Grading<'_> {
    pub fn check(letters: Option<&[i64]>, window: Option<WeightWindow>) -> Result<()> {
        if window.is_some() && letters.is_none() {
            return Err(Error::Weight("a weight window needs a weight-graded algebra".into()));
        }
        Ok(())
    }

    /// Largest word weight that can still land in the window.
    fn budget(&self) -> Option<i64> {
        let w = self.window?;
        let lo = self.module.iter().copied().min().unwrap_or(0);
        Some(w.max.saturating_sub(lo))
    }

    pub fn word_weight(&self, w: &[u16]) -> i64 {
        w.iter().filter(|&&c| c != SEP).map(|&c| self.letters.get(c as usize).copied().unwrap_or(0)).sum()
    }

    pub fn keeps(&self, w: &[u16], m: usize) -> bool {
        self.window
            .map_or(true, |win| win.contains(self.word_weight(w) + self.module.get(m).copied().unwrap_or(0)))
    }

    pub fn weight(&self, w: &[u16], m: usize) -> i64 {
        self.word_weight(w) + self.module.get(m).copied().unwrap_or(0)
    }

    pub fn tensor_words(&self, d: usize, k: usize) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        self.dfs(d, k, false, 0, &mut Vec::new(), 0, &mut out);
        out
    }

    pub fn wedge_words(&self, d: usize, k: usize) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        self.dfs(d, k, true, 0, &mut Vec::new(), 0, &mut out);
        out
    }

    /// Words `u SEP v` with u ∈ Λ^k, v ∈ Λ^l (both increasing), in
    /// lexicographic order of (u, v).
    pub fn wedge_pairs(&self, d: usize, k: usize, l: usize) -> Vec<Vec<u16>> {
        let left = self.wedge_words(d, k);
        let right = self.wedge_words(d, l);
        let budget = self.budget();
        let mut out = Vec::new();
        for u in &left {
            let wu = self.word_weight(u);
            for v in &right {
                if budget.map_or(true, |b| wu + self.word_weight(v) <= b) {
                    let mut w = u.clone();
                    w.push(SEP);
                    w.extend_from_slice(v);
                    out.push(w);
                }
            }
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(&self, d: usize, k: usize, strict: bool, start: usize, prefix: &mut Vec<u16>, acc: i64, out: &mut Vec<Vec<u16>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let budget = self.budget();
        for c in start..d {
            let w = acc + self.letters.get(c).copied().unwrap_or(0);
            // letters have positive weight, so the remaining slots only add
            let rest = (k - prefix.len() - 1) as i64;
            if budget.is_some_and(|b| w + rest > b) {
                continue;
            }
            prefix.push(c as u16);
            self.dfs(d, k, strict, if strict { c + 1 } else { 0 }, prefix, w, out);
            prefix.pop();
        }
    }
}

/// Sorts `w` in place; returns the permutation sign, or `None` on a repeat.
pub(crate) fn sort_wedge(w: &mut [u16]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && w[j - 1] == w[j] {
            return None;
        }
    }
    Some(sign)
}

pub(crate) fn join_labels(w: &[u16], names: &[String], sep: &str) -> String {
    w.iter().map(|&c| names[c as usize].as_str()).collect::<Vec<_>>().join(sep)
}

/// Matrix of the linear map sending each basis pair (w, m) of `src` to the
/// combination `f(w, m)` of pairs of `tgt`. Every image must lie in `tgt`.
pub(crate) fn word_map<F>(src: &PairBasis, tgt: &PairBasis, f: F) -> Matrix
where
    F: Fn(&[u16], usize) -> Vec<(Vec<u16>, usize, Rational)> + Sync + Send,
{
    let cols: Vec<Vec<(usize, usize, Rational)>> = par::map_range(src.len(), |j| {
        let (w, m) = src.pair(j);
        f(w, m)
            .into_iter()
            .map(|(w2, m2, c)| (tgt.index(&w2, m2).expect("image inside the target basis"), j, c))
            .collect()
    });
    Matrix::from_triplets(tgt.len(), src.len(), cols.into_iter().flatten())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windowed_enumeration() {
        let letters = [1, 1, 2];
        let g = Grading {
            letters: &letters,
            module: vec![0],
            window: Some(WeightWindow::at_most(3)),
        };
        let t = g.tensor_words(3, 2);
        assert_eq!(t.len(), 8);
        assert!(t.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(g.wedge_words(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(g.wedge_words(3, 3), Vec::<Vec<u16>>::new());
    }

    #[test]
    fn wedge_sorting() {
        let mut w = [2, 0, 1];
        assert_eq!(sort_wedge(&mut w), Some(1));
        assert_eq!(w, [0, 1, 2]);
        let mut w = [1, 0];
        assert_eq!(sort_wedge(&mut w), Some(-1));
        assert_eq!(sort_wedge(&mut [1, 2, 1]), None);
    }
}

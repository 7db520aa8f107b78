use std::fmt;

use crate::error::{Error, Result};

/// A permutation of {1,…,n} in one-line notation: `images[k−1] = σ(k)`.
/// Stored 0-based; every public accessor speaks 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n < 256, "arity too large");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// σ(k), 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different arity");
        Permutation {
            images: other.images.iter().map(|&k| self.images[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
            }
        }
        cycles
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position of this permutation in the lexicographic order of S_n.
    pub fn lex_index(&self) -> usize {
        let n = self.n();
        let mut idx = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            idx = idx * (n - i) + smaller;
        }
        idx
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation { images: cur.clone() });
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(usize::to_string).collect();
        if self.n() < 10 {
            write!(f, "[{}]", parts.concat())
        } else {
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_index() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        for (i, p) in all.iter().enumerate() {
            assert_eq!(p.lex_index(), i);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn compose_applies_right_first() {
        let s = Permutation::from_images(&[2, 3, 1]).unwrap();
        let t = Permutation::from_images(&[2, 1, 3]).unwrap();
        // (s∘t)(1) = s(2) = 3
        assert_eq!(s.compose(&t).apply(1), 3);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(s.sign(), 1);
        assert_eq!(t.sign(), -1);
        assert_eq!(s.to_string(), "[231]");
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[3, 1]).is_err());
    }
}

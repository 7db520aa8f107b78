//! Brute-force oracles shared by the integration tests. Everything here is
//! dense and written from the textbook formulas; nothing goes through the
//! library's algebra or complex code.

#![allow(dead_code)]

use opcohom::complexes::ChainComplex;
use opcohom::Rational;

/// Associative algebra by dense structure constants: `mul[i][j][k]` is the
/// coefficient of e_k in e_i·e_j.
pub struct Alg {
    pub dim: usize,
    pub mul: Vec<Vec<Vec<i64>>>,
}

/// Span of the monomials of degree 1..top in `vars` variables, truncated
/// above `top`.
pub fn truncated_monomials(vars: usize, top: usize) -> Alg {
    let mut basis: Vec<Vec<usize>> = Vec::new();
    fn exps(vars: usize, top: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == vars {
            let d: usize = prefix.iter().sum();
            if (1..=top).contains(&d) {
                out.push(prefix.clone());
            }
            return;
        }
        for e in 0..=top {
            prefix.push(e);
            exps(vars, top, prefix, out);
            prefix.pop();
        }
    }
    exps(vars, top, &mut Vec::new(), &mut basis);
    let n = basis.len();
    let mut mul = vec![vec![vec![0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let e: Vec<usize> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
            if let Some(k) = basis.iter().position(|b| *b == e) {
                mul[i][j][k] = 1;
            }
        }
    }
    Alg { dim: n, mul }
}

/// e·e = e, e·n = n, other products zero.
pub fn upper_triangular() -> Alg {
    let mut mul = vec![vec![vec![0; 2]; 2]; 2];
    mul[0][0][0] = 1;
    mul[0][1][1] = 1;
    Alg { dim: 2, mul }
}

fn words(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn word_index(w: &[usize], d: usize) -> usize {
    w.iter().fold(0, |acc, &c| acc * d + c)
}

/// Dense matrix of δ: CC^n(A, A) → CC^{n+1}(A, A), where a cochain f is
/// stored as its values f(w)_m, index word_index(w)·d + m, and
///
/// δf(a₁…a_{n+1}) = a₁f(a₂…) + Σ_{i=1}^{n} (−1)^i f(…a_i a_{i+1}…) + (−1)^{n+1} f(a₁…a_n)a_{n+1}.
pub fn hochschild_delta(a: &Alg, n: usize) -> Vec<Vec<i64>> {
    let d = a.dim;
    let cols = d.pow(n as u32) * d;
    let rows = d.pow(n as u32 + 1) * d;
    let mut m = vec![vec![0i64; cols]; rows];
    for w in words(d, n + 1) {
        let r0 = word_index(&w, d) * d;
        // a₁·f(a₂…a_{n+1})
        let tail = word_index(&w[1..], d) * d;
        for x in 0..d {
            for k in 0..d {
                m[r0 + k][tail + x] += a.mul[w[0]][x][k];
            }
        }
        for i in 0..n {
            let s = if (i + 1) % 2 == 0 { 1 } else { -1 };
            for c in 0..d {
                let coef = a.mul[w[i]][w[i + 1]][c];
                if coef == 0 {
                    continue;
                }
                let mut v = w[..i].to_vec();
                v.push(c);
                v.extend_from_slice(&w[i + 2..]);
                let src = word_index(&v, d) * d;
                for k in 0..d {
                    m[r0 + k][src + k] += s * coef;
                }
            }
        }
        let s = if (n + 1) % 2 == 0 { 1 } else { -1 };
        let head = word_index(&w[..n], d) * d;
        for x in 0..d {
            for k in 0..d {
                m[r0 + k][head + x] += s * a.mul[x][w[n]][k];
            }
        }
    }
    m
}

/// Matrix of sh_n on CC^n(A, A): (sh f)(a) = Σ_p Σ f(a₁…a_p ш a_{p+1}…a_n),
/// the signed shuffle product with the first p letters.
pub fn shuffle_on_cochains(d: usize, n: usize) -> Vec<Vec<i64>> {
    let size = d.pow(n as u32) * d;
    let mut m = vec![vec![0i64; size]; size];
    for w in words(d, n) {
        let r0 = word_index(&w, d) * d;
        for positions in 0u32..(1 << n) {
            // positions of the first p letters in the output word
            let p = positions.count_ones() as usize;
            let mut u = vec![0; n];
            let (mut a, mut b) = (0, p);
            let mut inversions = 0;
            for (slot, u_slot) in u.iter_mut().enumerate() {
                if positions >> slot & 1 == 1 {
                    *u_slot = w[a];
                    a += 1;
                } else {
                    *u_slot = w[b];
                    b += 1;
                    // each later letter of the first block jumps over this one
                    inversions += p - a;
                }
            }
            let s = if inversions % 2 == 0 { 1 } else { -1 };
            let src = word_index(&u, d) * d;
            for k in 0..d {
                m[r0 + k][src + k] += s;
            }
        }
    }
    m
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![0i64; cols];
            for k in 0..inner {
                if row[k] != 0 {
                    for (o, x) in out.iter_mut().zip(&b[k]) {
                        *o += row[k] * x;
                    }
                }
            }
            out
        })
        .collect()
}

/// Rank by plain Gaussian elimination over ℚ.
pub fn dense_rank(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let prow = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = &row[c] / &pivot;
                for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// dim HH^n(A, A) for n = 0..=n_max from the dense δ.
pub fn hochschild_oracle(a: &Alg, n_max: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=n_max).map(|n| dense_rank(&hochschild_delta(a, n))).collect();
    (0..=n_max)
        .map(|n| a.dim.pow(n as u32 + 1) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect()
}

/// Whether δ∘sh_n = sh_{n+1}∘δ on CC^n(A, A).
pub fn barr_commutes(a: &Alg, n: usize) -> bool {
    let delta = hochschild_delta(a, n);
    mat_mul(&delta, &shuffle_on_cochains(a.dim, n)) == mat_mul(&shuffle_on_cochains(a.dim, n + 1), &delta)
}

/// First degree n with d_{n±1} ∘ d_n ≠ 0, if any.
pub fn d_squared_failure(c: &ChainComplex) -> Option<i64> {
    c.degrees().find(|&n| {
        let t = c.target_degree(n);
        if c.dim(n) == 0 || c.dim(t) == 0 || !c.degrees().any(|m| m == t) {
            return false;
        }
        let dd = c.differential(t).mul(&c.differential(n)).expect("shapes agree");
        !dd.is_zero()
    })
}

/// n! by brute force over cycle counts: c(n, k) permutations with k cycles.
pub fn stirling_first(n: usize) -> Vec<usize> {
    let mut c = vec![0; n + 1];
    for p in opcohom::symgroup::Permutation::all(n) {
        c[p.cycle_count()] += 1;
    }
    c
}

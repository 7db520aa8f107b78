use std::collections::BTreeMap;

use super::basis::{join_labels, Grading, PairBasis, WeightWindow};
use super::tensor::{tensor_map, TensorTerms};
use crate::algebra::{AlgebraPresentation, ModulePresentation, OperadTag};
use crate::complexes::{ChainComplex, Direction, FilteredComplex};
use crate::error::{Error, Result};
use crate::linalg::{normalize, rank, span_dim, rational::pow2, Matrix, Rational, SparseVec, Subspace};
use crate::par;
use crate::symgroup::{shuffle_element, shuffle_permutation, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// CC^n = Hom(A^{⊗n}, M), cohomological.
    Cochain,
    /// C_n = M ⊗ A^{⊗n}, homological.
    Chain,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "cochain" => Ok(Variant::Cochain),
            "chain" => Ok(Variant::Chain),
            _ => Err(Error::InvalidArgument(format!("`{s}` is not cochain or chain"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HochschildSpec {
    pub algebra: AlgebraPresentation,
    pub coefficients: ModulePresentation,
    pub variant: Variant,
    pub n_max: usize,
    pub window: Option<WeightWindow>,
}

impl HochschildSpec {
    pub fn new(algebra: &AlgebraPresentation, coefficients: &ModulePresentation, variant: Variant, n_max: usize) -> Self {
        HochschildSpec {
            algebra: algebra.clone(),
            coefficients: coefficients.clone(),
            variant,
            n_max,
            window: None,
        }
    }

    pub fn with_window(mut self, window: WeightWindow) -> Self {
        self.window = Some(window);
        self
    }

    pub fn with_n_max(&self, n_max: usize) -> Self {
        HochschildSpec { n_max, ..self.clone() }
    }
}

/// The algebra and the module N of the tensor-side picture: N = M for
/// chains and N = M* for cochains, since Hom(A^{⊗n}, M) = (M* ⊗ A^{⊗n})*.
pub(crate) struct TensorSide {
    pub alg: AlgebraPresentation,
    pub module: ModulePresentation,
    pub bases: Vec<PairBasis>,
    pub grading: Vec<i64>,
    pub module_weights: Vec<i64>,
    pub window: Option<WeightWindow>,
}

impl TensorSide {
    /// Bases of N ⊗ A^{⊗k} for k in `lengths`.
    pub fn new(
        alg: &AlgebraPresentation,
        module: ModulePresentation,
        lengths: std::ops::RangeInclusive<usize>,
        window: Option<WeightWindow>,
    ) -> Result<Self> {
        if !matches!(alg.tag, OperadTag::Assoc | OperadTag::Comm) {
            return Err(Error::InvalidArgument(format!(
                "tensor complexes need an assoc or comm algebra, got {}",
                alg.tag.as_str()
            )));
        }
        Grading::check(alg.weights.as_deref(), window)?;
        let grading = alg.weights.clone().unwrap_or_else(|| vec![0; alg.dim()]);
        let module_weights = (0..module.dim()).map(|j| module.weight(j)).collect::<Vec<_>>();
        let g = Grading {
            letters: &grading,
            module: module_weights.clone(),
            window,
        };
        let mut bases = Vec::new();
        for k in lengths {
            let words = g.tensor_words(alg.dim(), k);
            bases.push(PairBasis::new(words, module.dim(), |w, m| g.keeps(w, m)));
        }
        Ok(TensorSide {
            alg: alg.clone(),
            module,
            bases,
            grading,
            module_weights,
            window,
        })
    }

    pub fn grading(&self) -> Grading<'_> {
        Grading {
            letters: &self.grading,
            module: self.module_weights.clone(),
            window: self.window,
        }
    }

    pub fn weights(&self, i: usize) -> Vec<i64> {
        let g = self.grading();
        (0..self.bases[i].len())
            .map(|j| {
                let (w, m) = self.bases[i].pair(j);
                g.weight(w, m)
            })
            .collect()
    }

    pub fn labels(&self, i: usize, style: LabelStyle, coeff_names: &[String]) -> Vec<String> {
        let b = &self.bases[i];
        (0..b.len())
            .map(|j| {
                let (w, m) = b.pair(j);
                let word = join_labels(w, &self.alg.basis, style.sep());
                match style {
                    LabelStyle::Bar => format!("[{word}]"),
                    LabelStyle::Chain if w.is_empty() => coeff_names[m].clone(),
                    LabelStyle::Chain => format!("{}⊗{word}", coeff_names[m]),
                    LabelStyle::Hom if w.is_empty() => coeff_names[m].clone(),
                    LabelStyle::Hom => format!("{word} ↦ {}", coeff_names[m]),
                    LabelStyle::BarChain => format!("{}⊗[{word}]", coeff_names[m]),
                    LabelStyle::BarHom => format!("[{word}] ↦ {}", coeff_names[m]),
                }
            })
            .collect()
    }

    pub fn map(&self, from: usize, terms: &TensorTerms) -> Matrix {
        tensor_map(terms, &self.bases[from], &self.bases[from - 1])
    }
}

#[derive(Clone, Copy)]
pub(crate) enum LabelStyle {
    Bar,
    Chain,
    Hom,
    BarChain,
    BarHom,
}

impl LabelStyle {
    fn sep(self) -> &'static str {
        match self {
            LabelStyle::Chain | LabelStyle::Hom => "⊗",
            _ => "|",
        }
    }
}

pub(crate) fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_coefficients(spec: &HochschildSpec) -> Result<()> {
    let m = &spec.coefficients;
    if m.algebra != spec.algebra.name {
        return Err(Error::InvalidArgument(format!(
            "module is for `{}`, not `{}`",
            m.algebra, spec.algebra.name
        )));
    }
    if m.left.is_none() || m.right.is_none() {
        return Err(Error::InvalidArgument("Hochschild coefficients need both a left and a right action".into()));
    }
    Ok(())
}

pub(crate) fn tensor_module(spec: &HochschildSpec) -> ModulePresentation {
    match spec.variant {
        Variant::Chain => spec.coefficients.clone(),
        Variant::Cochain => spec.coefficients.dual(spec.algebra.tag),
    }
}

/// Hochschild boundary on N ⊗ A^{⊗k}:
/// b(n⊗a₁…a_k) = n a₁⊗a₂… + Σ_{i<k} (−1)^i n⊗…a_i a_{i+1}… + (−1)^k a_k n⊗a₁…a_{k−1}.
pub(crate) fn hochschild_terms<'a>(alg: &'a AlgebraPresentation, n: &'a ModulePresentation, k: usize) -> TensorTerms<'a> {
    TensorTerms {
        mul: alg.primary(),
        first: Some((n.right_action(), 1)),
        merge: (1..k).map(sign).collect(),
        last: Some((n.left_action(), sign(k))),
        wrap: None,
    }
}

fn build_chain_side(spec: &HochschildSpec) -> Result<(TensorSide, ChainComplex)> {
    check_coefficients(spec)?;
    let side = TensorSide::new(&spec.algebra, tensor_module(spec), 0..=spec.n_max, spec.window)?;
    let mut diffs = vec![Matrix::zeros(0, side.bases[0].len())];
    let maps = par::map_range(spec.n_max, |i| side.map(i + 1, &hochschild_terms(&side.alg, &side.module, i + 1)));
    diffs.extend(maps);
    let dims = side.bases.iter().map(PairBasis::len).collect();
    let c = ChainComplex::new(Direction::Homological, 0, dims, diffs)?;
    Ok((side, c))
}

/// The Hochschild complex in degrees 0..=n_max. Cochains are built as the
/// dual of the chain complex with coefficients M*, so the cochain basis
/// vector `x⊗y ↦ m` is dual to `m*⊗x⊗y`.
pub fn hochschild_complex(spec: &HochschildSpec) -> Result<ChainComplex> {
    let (side, c) = build_chain_side(spec)?;
    finish(spec, &side, c)
}

/// dim HH^n (or HH_n) for n = 0..=n_max. The complex is built one degree
/// further so that the top row is exact.
pub fn hochschild_dims(spec: &HochschildSpec) -> Result<BTreeMap<usize, usize>> {
    let c = hochschild_complex(&spec.with_n_max(spec.n_max + 1))?;
    Ok(c.homology_dims()
        .into_iter()
        .filter(|(n, _)| *n <= spec.n_max as i64)
        .map(|(n, d)| (n as usize, d))
        .collect())
}

fn finish(spec: &HochschildSpec, side: &TensorSide, c: ChainComplex) -> Result<ChainComplex> {
    let names = &spec.coefficients.basis;
    let (c, style) = match spec.variant {
        Variant::Chain => (c, LabelStyle::Chain),
        Variant::Cochain => (c.dual(), LabelStyle::Hom),
    };
    let labels = (0..side.bases.len()).map(|i| side.labels(i, style, names)).collect();
    let weights = (0..side.bases.len()).map(|i| side.weights(i)).collect();
    c.with_labels(labels)?.with_weights(weights)
}

/// sh_n acting on words: t ↦ Σ_A sgn(σ_A)·t∘σ_A⁻¹ where (t∘π)_k = t_{π(k)}.
/// The summand for |A| = p places t₁…t_p at the positions of A and the rest
/// at the complement, so the p-part is the signed shuffle product of
/// (t₁…t_p) and (t_{p+1}…t_n). On cochains the operator is the transpose,
/// (sh·f)(t) = Σ_A sgn(σ_A)·f(t∘σ_A⁻¹), and cochains killing all shuffle
/// products (Harrison cochains) have eigenvalue 2.
pub(crate) struct WordAction {
    terms: Vec<(Vec<u8>, Rational)>,
}

impl WordAction {
    pub fn shuffle(n: usize, transpose: bool) -> Self {
        if n == 0 {
            return WordAction {
                terms: vec![(Vec::new(), Rational::from(1))],
            };
        }
        let sh = shuffle_element(n).expect("n ≥ 1");
        let terms = sh
            .terms()
            .map(|(p, c): (&Permutation, &Rational)| {
                let q = if transpose { p.clone() } else { p.inverse() };
                let images = q.images().iter().map(|&x| (x - 1) as u8).collect();
                (images, c * Rational::from(p.sign()))
            })
            .collect();
        WordAction { terms }
    }

    pub fn apply_word<'a>(&'a self, t: &'a [u16]) -> impl Iterator<Item = (Vec<u16>, &'a Rational)> + 'a {
        self.terms
            .iter()
            .map(move |(p, c)| (p.iter().map(|&k| t[k as usize]).collect(), c))
    }

    pub fn apply(&self, basis: &PairBasis, v: &[(usize, Rational)]) -> SparseVec {
        let mut out = Vec::new();
        for (j, x) in v {
            let (t, m) = basis.pair(*j);
            for (w, c) in self.apply_word(t) {
                out.push((basis.index(&w, m).expect("permuting letters keeps the weight"), x * c));
            }
        }
        normalize(out)
    }

    pub fn matrix(&self, basis: &PairBasis) -> Matrix {
        let cols = par::map_range(basis.len(), |j| self.apply(basis, &[(j, Rational::from(1))]));
        Matrix::from_sparse_cols(basis.len(), &cols)
    }
}

/// Matrices of sh_n on degrees 0..=n_max, in the basis of
/// [`hochschild_complex`]. sh₀ is the identity.
pub fn shuffle_endomorphism(spec: &HochschildSpec) -> Result<Vec<Matrix>> {
    check_coefficients(spec)?;
    let side = TensorSide::new(&spec.algebra, tensor_module(spec), 0..=spec.n_max, spec.window)?;
    Ok(shuffle_matrices(spec, &side, spec.n_max))
}

fn shuffle_matrices(spec: &HochschildSpec, side: &TensorSide, top: usize) -> Vec<Matrix> {
    let transpose = spec.variant == Variant::Cochain;
    (0..=top)
        .map(|n| WordAction::shuffle(n, transpose).matrix(&side.bases[n]))
        .collect()
}

/// First degree n at which the differential leaving degree n fails to
/// intertwine sh, or `None` when δ∘sh_n = sh_{n+1}∘δ (cochains) or
/// b∘sh_n = sh_{n−1}∘b (chains) holds throughout. The operator is applied
/// vector by vector, so the top degree is never materialized.
pub fn shuffle_commutation_defect(spec: &HochschildSpec) -> Result<Option<usize>> {
    let (side, chain) = build_chain_side(spec)?;
    let transpose = spec.variant == Variant::Cochain;
    let c = match spec.variant {
        Variant::Chain => chain,
        Variant::Cochain => chain.dual(),
    };
    let actions: Vec<WordAction> = (0..=spec.n_max).map(|n| WordAction::shuffle(n, transpose)).collect();
    for n in 0..=spec.n_max {
        let t = c.target_degree(n as i64);
        if t < 0 || t > spec.n_max as i64 {
            continue;
        }
        let t = t as usize;
        let d = c.differential(n as i64);
        let dcols = d.transpose();
        let bad = par::find_first(side.bases[n].len(), |j| {
            let s = actions[n].apply(&side.bases[n], &[(j, Rational::from(1))]);
            let mut lhs = Vec::new();
            for (i, x) in &s {
                lhs.extend(dcols.row(*i).iter().map(|(r, y)| (*r, x * y)));
            }
            let lhs = normalize(lhs);
            let rhs = actions[t].apply(&side.bases[t], dcols.row(j));
            (lhs != rhs).then_some(())
        });
        if bad.is_some() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Hodge table: `pieces[n][i]` = dim HH^n_{(i)}, the homology of the
/// 2^i-eigenspace subcomplex, with piece 0 living in degree 0 only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeTable {
    pub pieces: BTreeMap<usize, Vec<usize>>,
    pub totals: BTreeMap<usize, usize>,
}

impl HodgeTable {
    pub fn additive(&self) -> bool {
        self.pieces
            .iter()
            .all(|(n, row)| row.iter().sum::<usize>() == self.totals[n])
    }
}

/// Splits the complex along sh and returns homology dims per piece for
/// degrees 0..=n_max. Degree n_max + 1 is built so the top row is exact.
pub fn hodge_pieces(spec: &HochschildSpec) -> Result<HodgeTable> {
    let top = spec.n_max;
    let big = spec.with_n_max(top + 1);
    let (side, chain) = build_chain_side(&big)?;
    let full = finish(&big, &side, chain)?;
    let totals: BTreeMap<usize, usize> = full
        .homology_dims()
        .into_iter()
        .filter(|(n, _)| *n <= top as i64)
        .map(|(n, d)| (n as usize, d))
        .collect();
    let c = full.truncated(0, top as i64)?;
    let ops = shuffle_matrices(spec, &side, top);
    let eigen: Vec<Rational> = (0..=top as u32).map(pow2).collect();
    let spaces = c.eigenspaces(&ops, &eigen)?;
    let transpose = spec.variant == Variant::Cochain;
    let top_action = WordAction::shuffle(top, transpose);
    let next = top as i64 + 1;
    let mut pieces: BTreeMap<usize, Vec<usize>> = (0..=top).map(|n| (n, vec![0; n + 1])).collect();
    for (i, bases) in spaces.iter().enumerate() {
        let sub = c.subcomplex(bases)?;
        let mut h = sub.homology_dims();
        // the degree-(top+1) differential is missing from the truncation
        let extra = match spec.variant {
            Variant::Cochain => {
                let d = full.differential(top as i64);
                let images: Vec<SparseVec> = bases[top].vectors().iter().map(|v| d.mul_vec(v)).collect();
                rank(&Matrix::from_sparse_rows(full.dim(next), images))
            }
            Variant::Chain => {
                // image of b from degree top+1, projected onto the piece
                let d = full.differential(next);
                let cols = d.transpose();
                let projected: Vec<SparseVec> = par::map(cols.row_vecs(), |v| {
                    project(&top_action, &side.bases[top], v, i, top)
                });
                rank(&Matrix::from_sparse_rows(full.dim(top as i64), projected))
            }
        };
        if let Some(x) = h.get_mut(&(top as i64)) {
            *x -= extra;
        }
        for (n, d) in h {
            if d > 0 {
                let n = n as usize;
                if i > n {
                    return Err(Error::EigenspacesDoNotSpan {
                        degree: n as i64,
                        found: i,
                        expected: n,
                    });
                }
                pieces.get_mut(&n).expect("degree in range")[i] = d;
            }
        }
    }
    Ok(HodgeTable { pieces, totals })
}

/// The complex of degrees 0..=n_max rewritten in a basis of sh-eigenvectors,
/// each vector at the level of its Hodge piece. The differential keeps every
/// level, so the spectral sequence has E¹ = E^∞.
pub fn hodge_filtered_complex(spec: &HochschildSpec) -> Result<FilteredComplex> {
    let c = hochschild_complex(spec)?;
    let ops = shuffle_endomorphism(spec)?;
    let eigen: Vec<Rational> = (0..=spec.n_max as u32).map(pow2).collect();
    let spaces = c.eigenspaces(&ops, &eigen)?;
    let mut levels: BTreeMap<i64, Vec<i64>> = c.degrees().map(|n| (n, Vec::new())).collect();
    let mut sum: Option<ChainComplex> = None;
    for (i, bases) in spaces.iter().enumerate() {
        let piece = c.subcomplex(bases)?;
        for n in piece.degrees() {
            levels.get_mut(&n).expect("same degrees").extend(std::iter::repeat(i as i64).take(piece.dim(n)));
        }
        sum = Some(match sum {
            None => piece,
            Some(s) => s.direct_sum(&piece)?,
        });
    }
    FilteredComplex::new(sum.expect("at least one eigenvalue"), levels)
}

/// Lagrange projection onto the 2^i-eigenspace of sh_n:
/// Π_{j≠i} (sh − 2^j)/(2^i − 2^j) over the spectrum of degree n.
fn project(action: &WordAction, basis: &PairBasis, v: &[(usize, Rational)], i: usize, n: usize) -> SparseVec {
    let spectrum: Vec<usize> = if n == 0 { vec![0] } else { (1..=n).collect() };
    if !spectrum.contains(&i) {
        return Vec::new();
    }
    let mut acc: SparseVec = v.to_vec();
    for &j in spectrum.iter().filter(|&&j| j != i) {
        let lj = pow2(j as u32);
        let denom = pow2(i as u32) - &lj;
        let s = action.apply(basis, &acc);
        let mut next: SparseVec = s;
        next.extend(acc.iter().map(|(k, x)| (*k, -(x * &lj))));
        acc = normalize(next).into_iter().map(|(k, x)| (k, x / &denom)).collect();
    }
    acc
}

/// Span of the signed shuffle products n ⊗ (u ⧢ v), |u|, |v| ≥ 1, inside
/// each N ⊗ A^{⊗k} of `side`.
pub(crate) fn shuffle_subspaces(side: &TensorSide) -> Vec<Subspace> {
    par::map(&side.bases, |b| {
        let Some(k) = b.words.first().map(Vec::len) else {
            return Subspace::zero(b.len());
        };
        if k < 2 {
            return Subspace::zero(b.len());
        }
        let vectors: Vec<SparseVec> = (0..b.len())
            .flat_map(|j| (1..k).map(move |p| (j, p)))
            .map(|(j, p)| {
                let (t, m) = b.pair(j);
                let mut v = Vec::new();
                for mask in 0u32..(1 << k) {
                    if mask.count_ones() as usize != p {
                        continue;
                    }
                    let sigma = shuffle_permutation(k, mask);
                    let inv = sigma.inverse().images();
                    let w: Vec<u16> = inv.iter().map(|&x| t[x - 1]).collect();
                    v.push((b.index(&w, m).expect("same letters"), Rational::from(sigma.sign())));
                }
                normalize(v)
            })
            .collect();
        Subspace::span(b.len(), &vectors)
    })
}

/// Harrison complex in degrees 1..=n_max: the Hochschild complex with the
/// shuffle products divided out (chains), or the cochains that vanish on
/// them (cochains). Built without the shuffle operator.
pub fn harrison_complex(spec: &HochschildSpec) -> Result<ChainComplex> {
    if spec.n_max < 1 {
        return Err(Error::InvalidArgument("Harrison complex needs n_max ≥ 1".into()));
    }
    let (side, chain) = build_chain_side(spec)?;
    let mut subs = shuffle_subspaces(&side);
    subs.remove(0);
    let trunc = chain.truncated(1, spec.n_max as i64)?;
    let labels = (1..side.bases.len())
        .map(|i| side.labels(i, if spec.variant == Variant::Chain { LabelStyle::Chain } else { LabelStyle::Hom }, &spec.coefficients.basis))
        .collect();
    let weights = (1..side.bases.len()).map(|i| side.weights(i)).collect();
    let q = trunc.with_labels(labels)?.with_weights(weights)?.quotient(&subs)?;
    Ok(match spec.variant {
        Variant::Chain => q,
        Variant::Cochain => q.dual(),
    })
}

/// Harrison (co)homology dims for n = 1..=n_max. Only the chains of
/// degree n_max + 1 are built there, not their quotient: the boundaries
/// reaching the top degree are reduced modulo the shuffle products.
pub fn harrison_dims(spec: &HochschildSpec) -> Result<BTreeMap<usize, usize>> {
    let top = spec.n_max;
    if top < 1 {
        return Err(Error::InvalidArgument("Harrison complex needs n_max ≥ 1".into()));
    }
    let (side, chain) = build_chain_side(&spec.with_n_max(top + 1))?;
    let subs = shuffle_subspaces(&side);
    let q = chain.truncated(1, top as i64)?.quotient(&subs[1..=top])?;
    let mut h = q.homology_dims();
    let boundaries = chain.differential(top as i64 + 1).columns();
    let reduced = subs[top].reduce_all(&boundaries);
    let extra = span_dim(side.bases[top].len(), &reduced);
    *h.get_mut(&(top as i64)).expect("top degree present") -= extra;
    Ok(h.into_iter().map(|(n, d)| (n as usize, d)).collect())
}

//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::*;
use opcohom::algebra::{examples, free_algebra_truncation, AlgebraPresentation, ModulePresentation, OperadTag};
use opcohom::complexes::{parse_filtered_complex, ChainComplex, FilteredComplex};
use opcohom::hodge::*;
use opcohom::lie_postlie::{chevalley_eilenberg, postlie_complex, postlie_split_check, CESpec, PostLieSpec};
use opcohom::opcalc::*;
use opcohom::symgroup::*;
use opcohom::{Rational, Result};

type Check = fn() -> Result<Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

fn regular_spec(a: &AlgebraPresentation, n_max: usize) -> HochschildSpec {
    HochschildSpec::new(a, &ModulePresentation::regular(a), Variant::Cochain, n_max)
}

fn commutative_corpus() -> Vec<AlgebraPresentation> {
    vec![examples::dual_numbers(), examples::truncated_polynomial(3), examples::plane_cubic_truncation()]
}

fn c1() -> Result<Outcome> {
    let p = |s: &[usize]| Permutation::from_images(s).unwrap();
    let mut want = GroupAlgebraElement::zero(3);
    want.add_term(p(&[1, 2, 3]), Rational::from(4));
    for s in [[2, 1, 3], [2, 3, 1], [3, 1, 2], [1, 3, 2]] {
        want.add_term(p(&s), Rational::from(1));
    }
    let got = shuffle_element(3)?;
    outcome(got == want, format!("sh_3 = {got}"))
}

fn c2() -> Result<Outcome> {
    let mut ok = true;
    let mut shown = Vec::new();
    for n in 1..=6 {
        let dims = shuffle_spectrum(n)?;
        let fact: usize = (1..=n).product();
        ok &= dims.iter().all(|&d| d > 0) && dims.iter().sum::<usize>() == fact && dims == stirling_first(n)[1..];
        shown.push(format!("n={n}: {dims:?}"));
    }
    outcome(ok, shown.join("; "))
}

fn c3() -> Result<Outcome> {
    let mut ok = true;
    for n in 1..=7 {
        let s = symmetrizer(n)?;
        ok &= shuffle_element(n)?.mul(&s) == s.scale(&Rational::from(1u64 << n));
    }
    outcome(ok, "n = 1..7")
}

fn c4() -> Result<Outcome> {
    let mut failures = Vec::new();
    for n in 1..=5 {
        for i in 1..=n {
            if !check_bimodule_identity(n, i)? {
                failures.push((n, i));
            }
        }
    }
    outcome(failures.is_empty(), format!("15 pairs (n, i), failures {failures:?}"))
}

fn c5() -> Result<Outcome> {
    let mut ok = true;
    for a in commutative_corpus() {
        ok &= shuffle_commutation_defect(&regular_spec(&a, 6))?.is_none();
    }
    for n in 1..=5 {
        ok &= barr_commutes(&truncated_monomials(1, 1), n) && barr_commutes(&truncated_monomials(1, 2), n);
    }
    ok &= (1..=2).all(|n| barr_commutes(&truncated_monomials(2, 2), n));
    let ut = examples::upper_triangular();
    let defect = shuffle_commutation_defect(&regular_spec(&ut, 3))?;
    let failing: Vec<usize> = (0..=3).filter(|&n| !barr_commutes(&upper_triangular(), n)).collect();
    ok &= defect.is_some() && defect == failing.first().copied();
    outcome(ok, format!("commutes on the commutative corpus; upper triangular fails at n ∈ {failing:?}"))
}

fn c6() -> Result<Outcome> {
    let mut ok = true;
    let mut shown = Vec::new();
    for a in commutative_corpus() {
        let spec = regular_spec(&a, 5);
        let table = hodge_pieces(&spec)?;
        let hh = hochschild_dims(&spec)?;
        let harrison = harrison_dims(&spec)?;
        ok &= table.additive() && table.totals == hh;
        for n in 1..=5 {
            ok &= table.pieces[&n][1] == harrison[&n];
        }
        let piece1: Vec<usize> = (1..=5).map(|n| table.pieces[&n][1]).collect();
        shown.push(format!("{}: HH {:?}, Harr {piece1:?}", a.name, hh.values().collect::<Vec<_>>()));
    }
    outcome(ok, shown.join("; "))
}

fn c7() -> Result<Outcome> {
    let oracle = hochschild_oracle(&truncated_monomials(1, 1), 6);
    let lib: Vec<usize> = hochschild_dims(&regular_spec(&examples::dual_numbers(), 6))?.into_values().collect();
    outcome(oracle == vec![1; 7] && lib == oracle, format!("library {lib:?}, dense oracle {oracle:?}"))
}

fn c8() -> Result<Outcome> {
    let mut ok = true;
    let mut corpus = commutative_corpus();
    corpus.push(examples::upper_triangular());
    for a in corpus {
        let m = ModulePresentation::regular(&a);
        let h = cotangent_complex(OperadTag::Assoc, &a, &m, CotangentSide::Hom, 5, None)?.homology_dims();
        let hh = hochschild_dims(&regular_spec(&a, 5))?;
        ok &= (2..=5usize).all(|i| h[&(i as i64 - 1)] == hh[&i]);
    }
    outcome(ok, "i = 2..5 on dual numbers, k[x]/(x³), k[x,y]/(x,y)³, upper triangular")
}

fn complexes_over_corpus() -> Result<Vec<(String, ChainComplex)>> {
    let mut out = Vec::new();
    let assoc = [
        examples::dual_numbers(),
        examples::truncated_polynomial(3),
        examples::plane_cubic_truncation(),
        examples::upper_triangular(),
        examples::zero_algebra(OperadTag::Comm, 2),
        free_algebra_truncation(OperadTag::Comm, 2, 4)?,
    ];
    let w = |a: &AlgebraPresentation| a.weights.as_ref().map(|_| WeightWindow::at_most(4));
    for a in &assoc {
        let big = a.dim() > 3;
        let n = if big { 3 } else { 4 };
        for m in [ModulePresentation::regular(a), ModulePresentation::trivial(a, 1)] {
            for v in [Variant::Cochain, Variant::Chain] {
                let mut spec = HochschildSpec::new(a, &m, v, n);
                if let Some(win) = w(a) {
                    spec = spec.with_window(win);
                }
                out.push((format!("hochschild {} {v:?}", a.name), hochschild_complex(&spec)?));
            }
            for side in [CotangentSide::Hom, CotangentSide::Tensor] {
                out.push((format!("cotangent assoc {}", a.name), cotangent_complex(OperadTag::Assoc, a, &m, side, n, w(a))?));
                if a.tag == OperadTag::Comm {
                    out.push((format!("cotangent comm {}", a.name), cotangent_complex(OperadTag::Comm, a, &m, side, n, w(a))?));
                }
            }
        }
        out.push((format!("bar {}", a.name), bar_complex(a, n + 1, w(a))?));
        out.push((format!("cyclic {}", a.name), connes_complex(a, n + 1, CyclicSign::Degree)?));
        if a.primary().is_zero() {
            out.push((format!("cyclic {} by length", a.name), connes_complex(a, n + 1, CyclicSign::TensorLength)?));
        }
    }
    let lie = [
        examples::abelian_lie(2),
        examples::affine_line(),
        examples::heisenberg(),
        examples::sl2(),
        free_algebra_truncation(OperadTag::Lie, 2, 4)?,
    ];
    for g in &lie {
        for m in [ModulePresentation::regular(g), ModulePresentation::trivial(g, 1)] {
            for v in [Variant::Cochain, Variant::Chain] {
                out.push((format!("CE {}", g.name), chevalley_eilenberg(&CESpec::new(g, &m, v))?));
            }
            for side in [CotangentSide::Hom, CotangentSide::Tensor] {
                out.push((format!("cotangent lie {}", g.name), cotangent_complex(OperadTag::Lie, g, &m, side, 3, None)?));
                out.push((format!("post-Lie {}", g.name), postlie_complex(&PostLieSpec::new(g, &m, side))?));
            }
        }
    }
    Ok(out)
}

fn c9() -> Result<Outcome> {
    let all = complexes_over_corpus()?;
    let bad: Vec<&str> = all.iter().filter(|(_, c)| d_squared_failure(c).is_some()).map(|(n, _)| n.as_str()).collect();
    outcome(bad.is_empty(), format!("{} complexes, failures {bad:?}", all.len()))
}

fn c10() -> Result<Outcome> {
    let g = examples::affine_line();
    let c = chevalley_eilenberg(&CESpec::new(&g, &ModulePresentation::trivial(&g, 1), Variant::Chain))?;
    let h: Vec<usize> = c.homology_dims().into_values().collect();
    outcome(h == [1, 1, 0], format!("H_* = {h:?}"))
}

fn c11() -> Result<Outcome> {
    let mut algebras = vec![
        examples::abelian_lie(1),
        examples::abelian_lie(2),
        examples::abelian_lie(3),
        examples::affine_line(),
        examples::heisenberg(),
    ];
    algebras.push(free_algebra_truncation(OperadTag::Lie, 2, 4)?);
    let mut bad = Vec::new();
    let mut runs = 0;
    for g in &algebras {
        for m in [ModulePresentation::trivial(g, 1), ModulePresentation::regular(g)] {
            for side in [CotangentSide::Tensor, CotangentSide::Hom] {
                runs += 1;
                if !postlie_split_check(&PostLieSpec::new(g, &m, side))?.equal {
                    bad.push(format!("{} {side:?}", g.name));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{runs} runs, unequal {bad:?}"))
}

fn c12() -> Result<Outcome> {
    let a = free_algebra_truncation(OperadTag::Comm, 2, 4)?;
    let m = ModulePresentation::trivial(&a, 1);
    let c = cotangent_complex(OperadTag::Assoc, &a, &m, CotangentSide::Hom, 5, Some(WeightWindow::at_most(4)))?;
    let got: BTreeMap<(i64, i64), usize> = c.homology_by_weight()?.into_iter().filter(|&((_, w), _)| w <= 4).collect();
    // Lie^¡(n) is one-dimensional, so (Lie^¡ ∘ V)(n) = Λ^n V sits in degree
    // n − 1 and weight Σ of the chosen generators' weights.
    let weights = a.weights.clone().unwrap();
    let gens: Vec<i64> = weights.iter().copied().filter(|&w| w == 1).collect();
    let mut want = BTreeMap::new();
    for mask in 1u32..(1 << gens.len()) {
        let n = mask.count_ones() as i64;
        let w: i64 = (0..gens.len()).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).sum();
        if w <= 4 {
            *want.entry((n - 1, w)).or_insert(0) += 1;
        }
    }
    outcome(got == want, format!("H by (degree, weight) = {got:?}, Hom(Lie^¡∘V, M) = {want:?}"))
}

fn c13() -> Result<Outcome> {
    let fact = |n: usize| -> u64 { (1..=n as u64).product() };
    let nat = |s: &DimSeries| -> Vec<String> { s.dims.iter().map(|d| d.to_string()).collect() };
    let com_lie = egf_compose(&dims_table(OperadName::Com, 8), &dims_table(OperadName::Lie, 8), 8)?;
    let mut ok = nat(&com_lie) == (1..=8).map(|n| fact(n).to_string()).collect::<Vec<_>>();
    let lie_mag = egf_compose(&dims_table(OperadName::Lie, 6), &dims_table(OperadName::Mag, 6), 6)?;
    ok &= lie_mag == dims_table(OperadName::PostLie, 6);
    let dias = hadamard(&dims_table(OperadName::As, 7), &dims_table(OperadName::Perm, 7), 7);
    ok &= nat(&dias) == (1..=7).map(|n| (n as u64 * fact(n)).to_string()).collect::<Vec<_>>();
    ok &= law_dim_check(OperadName::As, OperadName::Perm, OperadName::Dias, 7)?.equal;
    for o in [OperadName::As, OperadName::Com, OperadName::Lie, OperadName::Perm, OperadName::PreLie, OperadName::Mag, OperadName::Nil] {
        ok &= koszul_dual_dim_check(o, 6)?;
    }
    outcome(ok, format!("Lie∘Mag = {:?}", nat(&lie_mag)))
}

fn weight_filtered(c: &ChainComplex) -> Result<FilteredComplex> {
    let levels = c.degrees().map(|n| (n, c.weights(n).map_or(vec![0; c.dim(n)], <[i64]>::to_vec))).collect();
    FilteredComplex::new(c.clone(), levels)
}

fn c14() -> Result<Outcome> {
    let mut tests: Vec<(String, FilteredComplex)> = Vec::new();
    let toy = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/toy.cx")).expect("corpus");
    tests.push(("toy".into(), parse_filtered_complex(&toy)?));
    for a in [examples::dual_numbers(), examples::truncated_polynomial(3)] {
        for v in [Variant::Cochain, Variant::Chain] {
            let spec = HochschildSpec::new(&a, &ModulePresentation::regular(&a), v, 4);
            tests.push((format!("hodge {} {v:?}", a.name), hodge_filtered_complex(&spec)?));
        }
        tests.push((format!("bar {} by weight", a.name), weight_filtered(&bar_complex(&a, 5, None)?)?));
    }
    let mut ok = true;
    for (_, f) in &tests {
        let homology: BTreeMap<i64, usize> = f.complex().homology_dims().into_iter().filter(|&(_, d)| d > 0).collect();
        let inf = f.e_infinity();
        ok &= inf.total_by_degree() == homology && inf == f.e_infinity_direct();
    }
    let a = examples::truncated_polynomial(3);
    let spec = HochschildSpec::new(&a, &ModulePresentation::regular(&a), Variant::Cochain, 5);
    let page = hodge_filtered_complex(&spec)?.degeneration_page();
    ok &= page <= 1;
    outcome(ok, format!("{} filtered complexes; Hodge filtration of k[x]/(x³) degenerates at E_{page}", tests.len()))
}

fn c15() -> Result<Outcome> {
    let a = examples::zero_algebra(OperadTag::Comm, 1);
    let c = connes_complex(&a, 8, CyclicSign::TensorLength)?;
    // A^{⊗k} is one-dimensional and the generator of ℤ/k acts by (−1)^k, so
    // the coinvariants are ℚ/(1 − (−1)^k)ℚ, in degree k − 1.
    let oracle: Vec<usize> = (1..=7i64).map(|k| if k % 2 == 0 { 1 } else { 0 }).collect();
    let dims: Vec<usize> = (0..=6).map(|n| c.dim(n)).collect();
    let zero = (0..=7).all(|n| c.differential(n).is_zero());
    outcome(dims == oracle && zero, format!("dims {dims:?}, zero differential {zero}"))
}

fn main() {
    let checks: [(&str, Check); 15] = [
        ("sh_3 worked example", c1),
        ("sh_n spectrum, n ≤ 6", c2),
        ("sh_n s_n = 2^n s_n, n ≤ 7", c3),
        ("bimodule identity, i ≤ n ≤ 5", c4),
        ("Barr commutation and counterexample", c5),
        ("Hodge additivity, piece 1 = Harrison", c6),
        ("HH(k[x]/(x²)) against brute force", c7),
        ("cotangent shift identity", c8),
        ("d∘d = 0 over the corpus", c9),
        ("CE homology of aff", c10),
        ("post-Lie splitting", c11),
        ("free commutative algebra as assoc", c12),
        ("EGF identities and Koszul equation", c13),
        ("spectral sequences and Hodge collapse", c14),
        ("Connes complex of the zero line", c15),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let t = Instant::now();
        let (passed, detail) = match check() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!passed);
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {name} ({:.1?}): {detail}", i + 1, t.elapsed());
    }
    println!("{} of 15 criteria pass", 15 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

use opcohom::symgroup::*;

/// Unsigned Stirling numbers of the first kind c(n, k): permutations of n
/// with k cycles, counted by brute force.
fn cycle_counts(n: usize) -> Vec<usize> {
    let mut c = vec![0; n + 1];
    for p in Permutation::all(n) {
        c[p.cycle_count()] += 1;
    }
    c
}

#[test]
fn blockwise_spectrum_agrees_with_direct() {
    for n in 1..=5 {
        assert_eq!(shuffle_spectrum(n).unwrap(), shuffle_spectrum_direct(n).unwrap(), "n={n}");
    }
}

#[test]
fn shuffle_spectrum_matches_cycle_counts() {
    for n in 1..=6 {
        let t = std::time::Instant::now();
        let dims = shuffle_spectrum(n).unwrap();
        eprintln!("n={n} {:?} {:?}", dims, t.elapsed());
        assert_eq!(dims, cycle_counts(n)[1..].to_vec());
    }
}

//! Multi-indexed Whitney numbers split over the top flat of the chain:
//! `W(i_r, ..., i_1) = sum over crk F = i_r of W_{M^F}(i_{r-1}, ..., i_1)`,
//! with each contraction built as its own lattice.

use num_bigint::BigInt;
use zpoly::corpus::small_corpus;

fn profiles(rk: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in -1..=rk + 1 {
        out.push(vec![a]);
        for b in -1..=rk + 1 {
            out.push(vec![a, b]);
            for c in 0..=rk {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

#[test]
fn whitney_numbers_split_over_contractions() {
    let mut checked = 0;
    for entry in small_corpus().into_iter().filter(|e| e.spec.ground_size() <= 8) {
        let lat = entry.lattice().unwrap();
        let contractions: Vec<_> = (0..lat.len()).map(|f| lat.contraction(f).unwrap()).collect();
        for profile in profiles(lat.rk() as i64) {
            let (&top, rest) = profile.split_first().unwrap();
            let split: BigInt = (0..lat.len())
                .filter(|&f| lat.corank(f) as i64 == top)
                .map(|f| contractions[f].whitney_multi(rest))
                .sum();
            assert_eq!(lat.whitney_multi(&profile), split, "{} {profile:?}", entry.name);
            checked += 1;
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn single_corank_counts_flats() {
    for entry in small_corpus() {
        let lat = entry.lattice().unwrap();
        let counts = lat.rank_counts();
        for (r, &n) in counts.iter().enumerate() {
            let corank = (lat.rk() - r) as i64;
            assert_eq!(lat.whitney_multi(&[corank]), BigInt::from(n), "{}", entry.name);
        }
        assert_eq!(lat.whitney_multi(&[]), BigInt::from(1));
    }
}

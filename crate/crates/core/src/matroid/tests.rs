use num_bigint::BigInt;

use super::*;
use crate::IntPolynomial;

fn lattice(spec: MatroidSpec) -> FlatLattice {
    enumerate_flats(&spec).unwrap()
}

/// Brute-force multichain count over all r-tuples of flats.
fn chains_brute_force(lat: &FlatLattice, profile: &[i64]) -> u64 {
    fn go(lat: &FlatLattice, profile: &[i64], below: Option<FlatId>) -> u64 {
        let Some((&c, rest)) = profile.split_first() else {
            return 1;
        };
        (0..lat.len())
            .filter(|&f| lat.corank(f) as i64 == c)
            .filter(|&f| below.is_none_or(|b| lat.leq(b, f)))
            .map(|f| go(lat, rest, Some(f)))
            .sum()
    }
    go(lat, profile, None)
}

#[test]
fn contraction_and_localization_extremes() {
    let k4 = lattice(MatroidSpec::complete_graph(4));
    let at_top = k4.contraction(k4.top()).unwrap();
    assert_eq!((at_top.len(), at_top.rk()), (1, 0));
    let at_bottom = k4.contraction(k4.bottom()).unwrap();
    assert_eq!(at_bottom.rank_counts(), k4.rank_counts());
    assert_eq!(k4.localization(k4.bottom()).unwrap().len(), 1);
    assert_eq!(k4.localization(k4.top()).unwrap().rank_counts(), k4.rank_counts());
    assert!(matches!(k4.contraction(99), Err(crate::Error::InvalidFlat(99))));
    assert!(k4.localization(15).is_err());
}

#[test]
fn contraction_of_partition_lattice_at_atom() {
    let k4 = lattice(MatroidSpec::complete_graph(4));
    for atom in k4.flats_of_rank(1) {
        let c = k4.contraction(atom).unwrap();
        assert_eq!(c.rank_counts(), vec![1, 3, 1]);
        c.check_lattice().unwrap();
    }
}

#[test]
fn localization_of_u13_at_rank_two_flat() {
    let u13 = lattice(MatroidSpec::Uniform { m: 1, d: 3 });
    for f in u13.flats_of_rank(2) {
        let l = u13.localization(f).unwrap();
        assert_eq!(l.rank_counts(), vec![1, 2, 1]);
        l.check_lattice().unwrap();
    }
}

#[test]
fn mobius_values() {
    let b2 = lattice(MatroidSpec::boolean(2));
    let mu = b2.mobius_from_bottom();
    assert_eq!(mu[b2.top()], BigInt::from(1));
    for a in b2.flats_of_rank(1) {
        assert_eq!(mu[a], BigInt::from(-1));
    }
    let u12 = lattice(MatroidSpec::Uniform { m: 1, d: 2 });
    assert_eq!(u12.mobius_from_bottom()[u12.top()], BigInt::from(2));
    let point = lattice(MatroidSpec::boolean(0));
    assert_eq!(point.mobius_from_bottom(), &[BigInt::from(1)]);
}

#[test]
fn characteristic_polynomials() {
    let chi = |spec| lattice(spec).characteristic_polynomial();
    assert_eq!(
        chi(MatroidSpec::boolean(2)),
        IntPolynomial::from_i64s(&[1, -2, 1])
    );
    assert_eq!(
        chi(MatroidSpec::Uniform { m: 1, d: 2 }),
        IntPolynomial::from_i64s(&[2, -3, 1])
    );
    assert_eq!(chi(MatroidSpec::boolean(0)), IntPolynomial::one());
    // (t-1)(t-2)(t-3) for K4
    assert_eq!(
        chi(MatroidSpec::complete_graph(4)),
        IntPolynomial::from_i64s(&[-6, 11, -6, 1])
    );
    // (t-1)(t-3)(t-5) for B3
    assert_eq!(
        chi(MatroidSpec::type_b(3)),
        IntPolynomial::from_i64s(&[-15, 23, -9, 1])
    );
}

#[test]
fn whitney_examples() {
    let k4 = lattice(MatroidSpec::complete_graph(4));
    assert_eq!(k4.whitney_multi(&[0]), BigInt::from(1));
    assert_eq!(k4.whitney_multi(&[1]), BigInt::from(7));
    assert_eq!(k4.whitney_multi(&[2]), BigInt::from(6));
    assert_eq!(k4.whitney_multi(&[1, 1]), BigInt::from(7));
    assert_eq!(k4.whitney_multi(&[2, 1]), BigInt::from(18));
    assert_eq!(k4.whitney_multi(&[]), BigInt::from(1));
    assert_eq!(k4.whitney_multi(&[1, 2]), BigInt::from(0));
    assert_eq!(k4.whitney_multi(&[-1]), BigInt::from(0));
    assert_eq!(k4.whitney_multi(&[7]), BigInt::from(0));
}

#[test]
fn whitney_matches_brute_force() {
    let lats = [
        lattice(MatroidSpec::complete_graph(5)),
        lattice(MatroidSpec::Uniform { m: 2, d: 3 }),
        lattice(MatroidSpec::type_b(3)),
    ];
    for lat in &lats {
        let rk = lat.rk() as i64;
        for a in -1..=rk + 1 {
            assert_eq!(
                lat.whitney_multi(&[a]),
                BigInt::from(lat.flats_of_corank(a).len())
            );
            for b in 0..=rk {
                for c in 0..=rk {
                    let p = [a, b, c];
                    assert_eq!(
                        lat.whitney_multi(&p),
                        BigInt::from(chains_brute_force(lat, &p)),
                        "{p:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn restricted_counter_only_uses_allowed_flats() {
    let k4 = lattice(MatroidSpec::complete_graph(4));
    let allowed: Vec<bool> = (0..k4.len()).map(|f| k4.flat(f).len() != 1).collect();
    let mut counter = WhitneyCounter::restricted(&k4, allowed);
    // the six single-edge flats are excluded
    assert_eq!(counter.count(&[2]), BigInt::from(0));
    assert_eq!(counter.count(&[1]), BigInt::from(7));
}

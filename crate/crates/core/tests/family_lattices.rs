//! Each family realised as a lattice is closed under contraction: the interval
//! above a rank-`k` flat of the rank-`d` member looks like the rank-`d - k` member.

use num_bigint::BigInt;
use zpoly::families::{family_matroid_spec, FamilySolver};
use zpoly::klz::kl_all_contractions;
use zpoly::matroid::enumerate_flats;
use zpoly::{NiceFamily, WhitneyTables};

fn cases() -> Vec<(NiceFamily, usize)> {
    vec![
        (NiceFamily::Braid, 6),
        (NiceFamily::TypeB, 4),
        (NiceFamily::Uniform(1), 7),
        (NiceFamily::Uniform(3), 6),
        (NiceFamily::QVec(2), 3),
        (NiceFamily::QVec(3), 3),
    ]
}

#[test]
fn contractions_stay_in_the_family() {
    for (family, d_max) in cases() {
        let tables = WhitneyTables::build(family, d_max).unwrap();
        for d in 0..=d_max {
            let lat = enumerate_flats(&family_matroid_spec(family, d).unwrap()).unwrap();
            for f in 0..lat.len() {
                let up = lat.contraction(f).unwrap();
                let e = up.rk();
                assert_eq!(e, lat.corank(f));
                let counts = up.rank_counts();
                let chi = up.characteristic_polynomial();
                for k in 0..=e {
                    assert_eq!(
                        tables.whitney(e, k as i64).unwrap(),
                        BigInt::from(counts[e - k]),
                        "{family} d={d}"
                    );
                    assert_eq!(
                        tables.char_coeff(e, k as i64).unwrap(),
                        chi.coeff(k),
                        "{family} d={d}"
                    );
                }
            }
        }
    }
}

#[test]
fn every_contraction_polynomial_matches_the_recursion() {
    for (family, d_max) in cases() {
        let solver = FamilySolver::new(WhitneyTables::build(family, d_max).unwrap());
        let lat = enumerate_flats(&family_matroid_spec(family, d_max).unwrap()).unwrap();
        for (f, p) in kl_all_contractions(&lat).iter().enumerate() {
            assert_eq!(
                p,
                solver.kl(lat.corank(f)).unwrap(),
                "{family} d={d_max} flat {f}"
            );
        }
    }
}

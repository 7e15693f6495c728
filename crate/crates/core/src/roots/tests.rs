use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::families::{z_family, NiceFamily};

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// `prod (den_i t + num_i)`, whose roots are `-num_i / den_i`.
fn from_roots(roots: &[(i64, i64)]) -> IntPolynomial {
    roots
        .iter()
        .fold(IntPolynomial::one(), |acc, &(num, den)| &acc * &poly(&[num, den]))
}

fn contains(iv: &RootInterval, x: BigRational) -> bool {
    iv.lo.to_rational() < x && x <= iv.hi.to_rational()
}

#[test]
fn squarefree_examples() {
    assert_eq!(
        squarefree_part(&poly(&[1, 2, 1])).unwrap(),
        poly(&[1, 1]).to_rational()
    );
    assert_eq!(
        squarefree_part(&poly(&[1, 3, 1])).unwrap(),
        poly(&[1, 3, 1]).to_rational()
    );
    assert_eq!(
        squarefree_part(&poly(&[0, 0, 0, 1])).unwrap(),
        poly(&[0, 1]).to_rational()
    );
    assert!(matches!(
        squarefree_part(&IntPolynomial::zero()),
        Err(Error::ZeroPolynomial)
    ));
}

#[test]
fn negative_root_counts() {
    assert_eq!(count_negative_real_roots(&poly(&[1, 3, 1])).unwrap(), (2, 2));
    assert_eq!(count_negative_real_roots(&poly(&[1, 0, 1])).unwrap(), (0, 0));
    assert_eq!(count_negative_real_roots(&poly(&[1, 3, 3, 1])).unwrap(), (1, 3));
    // (t + 1)(t - 2): one negative, one positive
    assert_eq!(count_negative_real_roots(&poly(&[-2, -1, 1])).unwrap(), (1, 1));
    assert!(matches!(
        count_negative_real_roots(&poly(&[0, 1])),
        Err(Error::ZeroAtOrigin)
    ));
}

#[test]
fn real_rootedness_examples() {
    let z = z_family(NiceFamily::QVec(2), 2).unwrap();
    assert!(is_negative_real_rooted(&z).unwrap());
    assert!(!is_negative_real_rooted(&poly(&[1, 1, 1])).unwrap());
    assert!(is_negative_real_rooted(&poly(&[1])).unwrap());
}

#[test]
fn isolation_examples() {
    let ivs = isolate_roots(&poly(&[1, 3, 1])).unwrap();
    assert_eq!(ivs.len(), 2);
    let f = poly(&[1, 3, 1]);
    for iv in &ivs {
        assert_eq!(sturm::sign_at(&f, &iv.lo) * sturm::sign_at(&f, &iv.hi), -1);
    }
    // -2.618... and -0.381...
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    assert!(ivs[0].lo.to_rational() >= r(-4, 1) && ivs[0].hi.to_rational() <= r(-2, 1));
    let lin = isolate_roots(&poly(&[1, 1])).unwrap();
    assert!(contains(&lin[0], r(-1, 1)));
    let half = isolate_roots(&poly(&[1, 2])).unwrap();
    assert!(contains(&half[0], r(-1, 2)));
    assert!(matches!(
        isolate_roots(&poly(&[1, 1, 1])),
        Err(Error::NonRealRoots { real: 0, degree: 2 })
    ));
}

#[test]
fn refinement_narrows_to_the_root() {
    let f = poly(&[1, 3, 1]);
    let cert = sturm_certificate(&f).unwrap();
    for iv in &cert.isolating {
        let fine = sturm::refine(&f, iv, 60).unwrap();
        let width = fine.hi.to_rational() - fine.lo.to_rational();
        assert!(width <= BigRational::new(1.into(), BigInt::from(1u64) << 60));
        assert_eq!(sturm::sign_at(&f, &fine.lo) * sturm::sign_at(&f, &fine.hi), -1);
    }
}

#[test]
fn certificates_verify() {
    for d in [3, 10, 20] {
        let z = z_family(NiceFamily::Braid, d).unwrap();
        let cert = sturm_certificate(&z).unwrap();
        assert!(cert.verify(), "braid d = {d}");
        assert_eq!(cert.isolating.len(), d);
    }
    let mut cert = sturm_certificate(&poly(&[1, 3, 1])).unwrap();
    cert.isolating.pop();
    assert!(!cert.verify());
}

#[test]
fn interlacing_examples() {
    assert_eq!(
        interlaces(&poly(&[1, 3, 1]), &poly(&[1, 2])).unwrap(),
        InterlaceVerdict::StrictInterlace
    );
    assert_eq!(
        interlaces(&poly(&[1, 2, 1]), &poly(&[1, 1])).unwrap(),
        InterlaceVerdict::WeakInterlace
    );
    assert_eq!(
        interlaces(&poly(&[1, 6, 6, 1]), &poly(&[1, 3, 1])).unwrap(),
        InterlaceVerdict::StrictInterlace
    );
    // roots -1, -2 against -3: -2 <= -3 fails
    assert_eq!(
        interlaces(&from_roots(&[(1, 1), (2, 1)]), &poly(&[3, 1])).unwrap(),
        InterlaceVerdict::NoInterlace { witness: 1 }
    );
    assert!(matches!(
        interlaces(&poly(&[1, 3, 1]), &poly(&[1, 3, 1])),
        Err(Error::DegreeMismatch { f: 2, g: 2 })
    ));
    assert!(matches!(
        interlaces(&poly(&[1, 1, 1]), &poly(&[1, 1])),
        Err(Error::NonRealRoots { .. })
    ));
}

#[test]
fn log_concavity() {
    assert!(is_log_concave(&poly(&[1, 3, 1])));
    assert!(!is_log_concave(&poly(&[1, 1, 2])));
    assert!(is_log_concave(&poly(&[1])));
    assert!(!is_log_concave(&poly(&[1, -1])));
}

#[test]
fn sweeps() {
    for (family, d_max) in [
        (NiceFamily::QVec(2), 10),
        (NiceFamily::Uniform(1), 12),
        (NiceFamily::Braid, 12),
    ] {
        let report = conjecture_sweep(family, d_max, false).unwrap();
        assert!(report.all_passed(), "{family}: {:?}", report.failures());
        assert_eq!(report.rows.len(), d_max + 1);
    }
    let with_certs = conjecture_sweep(NiceFamily::TypeB, 5, true).unwrap();
    assert_eq!(with_certs.rows[5].certificate.as_ref().unwrap().len(), 5);
}

#[test]
fn qvec_separation() {
    for q in [2, 3] {
        for d in 0..=10 {
            assert!(qvec_root_separation(q, d).unwrap(), "q = {q}, d = {d}");
        }
    }
}

proptest! {
    #[test]
    fn sturm_counts_match_constructed_roots(
        roots in proptest::collection::btree_set(-40i64..40, 1..6),
        lo in -50i64..50,
        width in 1i64..60,
    ) {
        // distinct roots r/4 so some land on quarter points
        let f = from_roots(&roots.iter().map(|&r| (-r, 4)).collect::<Vec<_>>());
        let chain = sturm_chain(&f);
        let lo_d = Dyadic { num: BigInt::from(4 * lo + 1), exp: 3 };
        let hi_d = Dyadic { num: BigInt::from(4 * (lo + width) + 1), exp: 3 };
        let expected = roots
            .iter()
            .filter(|&&r| {
                let x = BigRational::new(r.into(), 4.into());
                lo_d.to_rational() < x && x <= hi_d.to_rational()
            })
            .count();
        prop_assert_eq!(sturm::count_in(&chain, &lo_d, &hi_d), expected);
    }

    #[test]
    fn multiplicities_are_recovered(
        roots in proptest::collection::vec(1i64..6, 1..6),
    ) {
        let f = from_roots(&roots.iter().map(|&r| (r, 1)).collect::<Vec<_>>());
        let distinct = roots.iter().collect::<std::collections::BTreeSet<_>>().len();
        prop_assert_eq!(count_negative_real_roots(&f).unwrap(), (distinct, roots.len()));
        prop_assert!(is_negative_real_rooted(&f).unwrap());
    }
}

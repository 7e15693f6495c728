use num_bigint::BigInt;

use super::*;

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

const SAMPLE: [NiceFamily; 6] = [
    NiceFamily::Braid,
    NiceFamily::TypeB,
    NiceFamily::Uniform(1),
    NiceFamily::Uniform(3),
    NiceFamily::QVec(2),
    NiceFamily::QVec(4),
];

#[test]
fn kl_examples() {
    assert_eq!(kl_family(NiceFamily::Braid, 3).unwrap(), poly(&[1, 1]));
    assert_eq!(kl_family(NiceFamily::Uniform(1), 3).unwrap(), poly(&[1, 2]));
    assert_eq!(
        kl_family(NiceFamily::Braid, 8).unwrap(),
        poly(&[1, 219, 6769, 16065])
    );
    for q in [2, 3, 4, 5] {
        for d in 0..8 {
            assert!(
                kl_family(NiceFamily::QVec(q), d).unwrap().is_one(),
                "q = {q}, d = {d}"
            );
        }
    }
}

#[test]
fn z_examples() {
    assert_eq!(z_family(NiceFamily::Uniform(1), 3).unwrap(), poly(&[1, 6, 6, 1]));
    assert_eq!(z_family(NiceFamily::QVec(2), 2).unwrap(), poly(&[1, 3, 1]));
    assert_eq!(z_family(NiceFamily::Braid, 3).unwrap(), poly(&[1, 7, 7, 1]));
    assert_eq!(z_family(NiceFamily::TypeB, 0).unwrap(), poly(&[1]));
}

#[test]
fn whitney_products() {
    assert_eq!(
        whitney_multi_family(NiceFamily::Braid, 3, &[1]).unwrap(),
        BigInt::from(7)
    );
    assert_eq!(
        whitney_multi_family(NiceFamily::Braid, 3, &[2, 1]).unwrap(),
        BigInt::from(18)
    );
    assert_eq!(
        whitney_multi_family(NiceFamily::Braid, 3, &[1, 2]).unwrap(),
        BigInt::from(0)
    );
    assert_eq!(
        whitney_multi_family(NiceFamily::QVec(3), 4, &[]).unwrap(),
        BigInt::from(1)
    );
    assert_eq!(
        whitney_multi_family(NiceFamily::TypeB, 2, &[-1]).unwrap(),
        BigInt::from(0)
    );
}

#[test]
fn closed_formula_matches_recursion() {
    assert_eq!(
        kl_closed_family(NiceFamily::Braid, 3, 1).unwrap(),
        BigInt::from(1)
    );
    assert_eq!(
        kl_closed_family(NiceFamily::Braid, 5, 1).unwrap(),
        BigInt::from(16)
    );
    assert_eq!(
        kl_closed_family(NiceFamily::Uniform(1), 3, 2).unwrap(),
        BigInt::from(0)
    );
    assert!(kl_closed_family(NiceFamily::Braid, 5, -1).is_err());
    for family in SAMPLE {
        let s = FamilySolver::new(build_tables(family, 14).unwrap());
        for d in 0..=14 {
            let p = s.kl(d).unwrap();
            for i in 0..=(d as i64 / 2 + 1) {
                assert_eq!(
                    s.kl_coeff_closed(d, i).unwrap(),
                    p.coeff_at(i),
                    "{family} d={d} i={i}"
                );
            }
        }
    }
}

#[test]
fn eq1_inversion_and_palindromes() {
    for family in SAMPLE {
        let s = FamilySolver::new(build_tables(family, 25).unwrap());
        for d in 0..=25 {
            assert_eq!(&s.kl_from_z(d).unwrap(), s.kl(d).unwrap(), "{family} d={d}");
            let z = s.z(d).unwrap();
            assert!(z.is_palindromic(d) && z.degree() == Some(d), "{family} d={d}");
            let p = s.kl(d).unwrap();
            assert!(d == 0 || 2 * p.degree().unwrap() < d);
        }
        assert!(matches!(s.kl(26), Err(Error::RangeExceeded { d: 26, d_max: 25 })));
        assert!(s.z(26).is_err());
    }
}

#[test]
fn narayana_and_gaussian_coefficients() {
    for d in 0..=8i64 {
        let z = z_family(NiceFamily::Uniform(1), d as usize).unwrap();
        for i in 0..=d {
            assert_eq!(z.coeff(i as usize), narayana(d + 1, i + 1));
        }
        let z = z_family(NiceFamily::QVec(3), d as usize).unwrap();
        for i in 0..=d {
            assert_eq!(z.coeff(i as usize), gaussian_binomial(d, i, 3));
        }
    }
}

#[test]
fn q_shift_identity() {
    assert!(q_shift_check(2, 10).unwrap());
    assert!(q_shift_check(3, 1).unwrap());
    let z1 = z_family(NiceFamily::QVec(2), 1).unwrap();
    let spot = &z1.scale_variable(&BigInt::from(2)) + &z1.mul_t_power(1);
    assert_eq!(spot, poly(&[1, 3, 1]));
    assert!(q_shift_check(6, 3).is_err());
}

#[test]
fn family_names() {
    for family in SAMPLE {
        assert_eq!(family.to_string().parse::<NiceFamily>().unwrap(), family);
    }
    for bad in [
        "",
        "braid:1",
        "uniform",
        "uniform:x",
        "uniform:0",
        "qvec:6",
        "qvec:1",
        "typeA",
    ] {
        assert!(bad.parse::<NiceFamily>().is_err(), "{bad}");
    }
    assert_eq!(serde_json::to_string(&NiceFamily::QVec(9)).unwrap(), "\"qvec:9\"");
}

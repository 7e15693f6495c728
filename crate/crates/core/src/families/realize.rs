use std::collections::{BTreeSet, HashMap};

use super::NiceFamily;
use crate::matroid::{ElementSet, MatroidSpec};
use crate::{Error, Result};

/// A concrete matroid of rank `d` in the family, for comparison with the generic path.
///
/// `QVec(q)` is realised for prime `q` by the projective points of `F_q^d`
/// with the subspaces as explicit flats.
pub fn family_matroid_spec(family: NiceFamily, d: usize) -> Result<MatroidSpec> {
    family.validate()?;
    Ok(match family {
        NiceFamily::Braid => MatroidSpec::complete_graph(d + 1),
        NiceFamily::TypeB => MatroidSpec::type_b(d),
        NiceFamily::Uniform(m) => MatroidSpec::Uniform { m: m as usize, d },
        NiceFamily::QVec(q) => projective_space(q, d)?,
    })
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..q).take_while(|p| p * p <= q).all(|p| !q.is_multiple_of(p))
}

fn projective_space(q: u64, d: usize) -> Result<MatroidSpec> {
    if !is_prime(q) {
        return Err(Error::InvalidFamily(format!(
            "qvec:{q} can only be realised for prime q"
        )));
    }
    let p = q as usize;
    let points_count = (0..d).map(|e| p.pow(e as u32)).sum::<usize>();
    if points_count > ElementSet::MAX_ELEMENTS {
        return Err(Error::GroundTooLarge(points_count));
    }
    let vectors = p.pow(d as u32);
    let digits = |code: usize| -> Vec<usize> { (0..d).map(|i| code / p.pow(i as u32) % p).collect() };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &x| acc * p + x) };
    // A point is a nonzero vector whose last nonzero coordinate is 1.
    let point_of: HashMap<usize, usize> = (1..vectors)
        .filter(|&c| digits(c).iter().rev().find(|&&x| x != 0) == Some(&1))
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let add_scaled = |a: usize, b: usize, s: usize| -> usize {
        let (x, y) = (digits(a), digits(b));
        encode(&x.iter().zip(&y).map(|(u, v)| (u + s * v) % p).collect::<Vec<_>>())
    };
    let span_with = |space: &BTreeSet<usize>, v: usize| -> BTreeSet<usize> {
        space
            .iter()
            .flat_map(|&a| (0..p).map(move |s| (a, s)))
            .map(|(a, s)| add_scaled(a, v, s))
            .collect()
    };
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier = vec![BTreeSet::from([0usize])];
    while let Some(space) = frontier.pop() {
        if !seen.insert(space.clone()) {
            continue;
        }
        for &v in point_of.keys() {
            if !space.contains(&v) {
                frontier.push(span_with(&space, v));
            }
        }
    }
    let flats = seen
        .iter()
        .map(|space| {
            let mut pts: Vec<usize> = space.iter().filter_map(|c| point_of.get(c).copied()).collect();
            pts.sort_unstable();
            pts
        })
        .collect();
    Ok(MatroidSpec::ExplicitFlats {
        n: points_count,
        flats,
    })
}

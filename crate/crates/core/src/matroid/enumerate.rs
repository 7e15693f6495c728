use std::collections::HashSet;

use num_bigint::BigInt;

use super::{bareiss_rank, ElementSet, FlatLattice, MatroidSpec};
use crate::{Error, Result};

/// Default upper bound on the number of flats a single enumeration may produce.
pub const DEFAULT_FLAT_CAP: usize = 2_000_000;

pub fn enumerate_flats(spec: &MatroidSpec) -> Result<FlatLattice> {
    enumerate_flats_capped(spec, DEFAULT_FLAT_CAP)
}

/// Enumerates the lattice of flats, failing as soon as more than `cap` flats appear.
pub fn enumerate_flats_capped(spec: &MatroidSpec, cap: usize) -> Result<FlatLattice> {
    let n = spec.ground_size();
    let ground = ElementSet::full(n)?;
    match spec {
        MatroidSpec::Graph { vertices, edges } => {
            for &(u, v) in edges {
                if u >= *vertices || v >= *vertices {
                    return Err(Error::InvalidSpec(format!(
                        "edge ({u}, {v}) references a vertex outside 0..{vertices}"
                    )));
                }
            }
            let oracle = GraphClosure {
                vertices: *vertices,
                edges,
            };
            closure_bfs(ground, cap, |s| oracle.closure(s))
        }
        MatroidSpec::Uniform { d, .. } => {
            let d = *d;
            closure_bfs(ground, cap, |s| if s.len() < d { s } else { ground })
        }
        MatroidSpec::LinearVectors { vectors } => {
            let dim = vectors.first().map_or(0, Vec::len);
            if vectors.iter().any(|v| v.len() != dim) {
                return Err(Error::InvalidSpec("vectors have different lengths".into()));
            }
            let rows: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let rank = |s: ElementSet| {
                let sub: Vec<Vec<BigInt>> = s.iter().map(|e| rows[e].clone()).collect();
                bareiss_rank(&sub)
            };
            closure_bfs(ground, cap, |s| closure_from_rank(ground, s, &rank))
        }
        MatroidSpec::ExplicitBases { n, bases } => {
            let bases = validate_bases(*n, bases)?;
            let rank = |s: ElementSet| bases.iter().map(|b| b.intersection(s).len()).max().unwrap_or(0);
            closure_bfs(ground, cap, |s| closure_from_rank(ground, s, &rank))
        }
        MatroidSpec::ExplicitFlats { n, flats } => from_explicit_flats(*n, ground, flats, cap),
    }
}

/// Level-by-level enumeration: the flats covering `F` are the closures `cl(F + e)`.
fn closure_bfs(
    ground: ElementSet,
    cap: usize,
    closure: impl Fn(ElementSet) -> ElementSet,
) -> Result<FlatLattice> {
    let bottom = closure(ElementSet::empty());
    let mut seen: HashSet<ElementSet> = HashSet::from([bottom]);
    let mut all = vec![(bottom, 0usize)];
    let mut level = vec![bottom];
    let mut rank = 0;
    while !level.is_empty() {
        rank += 1;
        let mut next = Vec::new();
        for &f in &level {
            let mut covered = f;
            for e in ground.difference(f).iter() {
                if covered.contains(e) {
                    continue;
                }
                let g = closure(f.with(e));
                covered = covered.union(g);
                if seen.insert(g) {
                    if seen.len() > cap {
                        return Err(Error::TooManyFlats { cap });
                    }
                    next.push(g);
                    all.push((g, rank));
                }
            }
        }
        level = next;
    }
    Ok(FlatLattice::from_ranked(ground, all))
}

fn closure_from_rank(ground: ElementSet, s: ElementSet, rank: &impl Fn(ElementSet) -> usize) -> ElementSet {
    let r = rank(s);
    ground
        .difference(s)
        .iter()
        .filter(|&e| rank(s.with(e)) == r)
        .fold(s, ElementSet::with)
}

struct GraphClosure<'a> {
    vertices: usize,
    edges: &'a [(usize, usize)],
}

impl GraphClosure<'_> {
    /// Edges whose endpoints are connected by edges of `s`.
    fn closure(&self, s: ElementSet) -> ElementSet {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in s.iter() {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let mut out = s;
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if find(&mut parent, u) == find(&mut parent, v) {
                out = out.with(e);
            }
        }
        out
    }
}

fn validate_bases(n: usize, bases: &[Vec<usize>]) -> Result<Vec<ElementSet>> {
    if bases.is_empty() {
        return Err(Error::InvalidSpec("a matroid needs at least one basis".into()));
    }
    let mut sets = Vec::with_capacity(bases.len());
    for b in bases {
        if let Some(&e) = b.iter().find(|&&e| e >= n) {
            return Err(Error::InvalidSpec(format!("basis element {e} is outside 0..{n}")));
        }
        let set = ElementSet::from_elements(b.iter().copied())?;
        if set.len() != b.len() {
            return Err(Error::InvalidSpec(format!("basis {b:?} repeats an element")));
        }
        sets.push(set);
    }
    sets.sort();
    sets.dedup();
    let r = sets[0].len();
    if let Some(b) = sets.iter().find(|b| b.len() != r) {
        return Err(Error::InvalidSpec(format!(
            "bases have different sizes: {:?} vs {:?}",
            sets[0], b
        )));
    }
    let lookup: HashSet<ElementSet> = sets.iter().copied().collect();
    for &b1 in &sets {
        for &b2 in &sets {
            for x in b1.difference(b2).iter() {
                let exchanged = b2
                    .difference(b1)
                    .iter()
                    .any(|y| lookup.contains(&b1.difference(ElementSet::singleton(x)).with(y)));
                if !exchanged {
                    return Err(Error::BasisExchange(format!(
                        "B1 = {b1:?}, B2 = {b2:?}, x = {x}: no y in B2 - B1 makes B1 - x + y a basis"
                    )));
                }
            }
        }
    }
    Ok(sets)
}

fn from_explicit_flats(
    n: usize,
    ground: ElementSet,
    flats: &[Vec<usize>],
    cap: usize,
) -> Result<FlatLattice> {
    let mut sets = Vec::with_capacity(flats.len());
    for f in flats {
        if let Some(&e) = f.iter().find(|&&e| e >= n) {
            return Err(Error::InvalidSpec(format!("flat element {e} is outside 0..{n}")));
        }
        sets.push(ElementSet::from_elements(f.iter().copied())?);
    }
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    if sets.len() > cap {
        return Err(Error::TooManyFlats { cap });
    }
    if !sets.contains(&ground) {
        return Err(Error::InvalidSpec(
            "flats must include the full ground set".into(),
        ));
    }
    let lookup: HashSet<ElementSet> = sets.iter().copied().collect();
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            if !lookup.contains(&a.intersection(b)) {
                return Err(Error::InvalidSpec(format!(
                    "flats are not closed under intersection: {a:?} and {b:?}"
                )));
            }
        }
    }
    // Rank is the length of the longest chain down to the bottom; sets are
    // sorted by size so every proper subset comes first.
    let mut ranks = vec![0usize; sets.len()];
    for i in 0..sets.len() {
        ranks[i] = (0..i)
            .filter(|&j| sets[j] != sets[i] && sets[j].is_subset(sets[i]))
            .map(|j| ranks[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let lattice = FlatLattice::from_ranked(ground, sets.into_iter().zip(ranks).collect());
    lattice.check_lattice()?;
    Ok(lattice)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: set partitions of [n] by brute force.
    fn bell(n: usize) -> usize {
        fn go(i: usize, n: usize, blocks: usize) -> usize {
            if i == n {
                return 1;
            }
            (0..=blocks).map(|b| go(i + 1, n, blocks.max(b + 1))).sum()
        }
        if n == 0 {
            1
        } else {
            go(0, n, 0)
        }
    }

    #[test]
    fn uniform_one_two() {
        let lat = enumerate_flats(&MatroidSpec::Uniform { m: 1, d: 2 }).unwrap();
        assert_eq!(lat.len(), 5);
        assert_eq!(lat.rk(), 2);
        assert_eq!(lat.rank_counts(), vec![1, 3, 1]);
        lat.check_lattice().unwrap();
    }

    #[test]
    fn complete_graph_is_partition_lattice() {
        for n in 1..=6 {
            let lat = enumerate_flats(&MatroidSpec::complete_graph(n)).unwrap();
            assert_eq!(lat.len(), bell(n), "K{n}");
            assert_eq!(lat.rk(), n.saturating_sub(1));
        }
        let k4 = enumerate_flats(&MatroidSpec::complete_graph(4)).unwrap();
        assert_eq!(k4.len(), 15);
        assert_eq!(k4.rank_counts(), vec![1, 6, 7, 1]);
        k4.check_lattice().unwrap();
    }

    #[test]
    fn explicit_boolean_rank_two() {
        let spec = MatroidSpec::ExplicitFlats {
            n: 2,
            flats: vec![vec![], vec![0], vec![1], vec![0, 1]],
        };
        let lat = enumerate_flats(&spec).unwrap();
        assert_eq!((lat.len(), lat.rk()), (4, 2));
    }

    #[test]
    fn explicit_flats_validation() {
        let missing_meet = MatroidSpec::ExplicitFlats {
            n: 3,
            flats: vec![vec![], vec![0, 1], vec![1, 2], vec![0, 1, 2]],
        };
        assert!(enumerate_flats(&missing_meet).is_err());
        let no_top = MatroidSpec::ExplicitFlats {
            n: 2,
            flats: vec![vec![], vec![0]],
        };
        assert!(enumerate_flats(&no_top).is_err());
        // {0} < {0,1} < {0,1,2,3} but {2,3} sits directly under the top: not graded
        let ungraded = MatroidSpec::ExplicitFlats {
            n: 4,
            flats: vec![vec![], vec![0], vec![0, 1], vec![2, 3], vec![0, 1, 2, 3]],
        };
        assert!(enumerate_flats(&ungraded).is_err());
    }

    #[test]
    fn bases_and_exchange() {
        let u23 = MatroidSpec::ExplicitBases {
            n: 3,
            bases: vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        };
        let lat = enumerate_flats(&u23).unwrap();
        assert_eq!(lat.rank_counts(), vec![1, 3, 1]);
        let bad = MatroidSpec::ExplicitBases {
            n: 4,
            bases: vec![vec![0, 1], vec![2, 3]],
        };
        match enumerate_flats(&bad) {
            Err(Error::BasisExchange(w)) => assert!(w.contains("x =")),
            other => panic!("expected exchange failure, got {other:?}"),
        }
        let ragged = MatroidSpec::ExplicitBases {
            n: 3,
            bases: vec![vec![0], vec![1, 2]],
        };
        assert!(enumerate_flats(&ragged).is_err());
    }

    #[test]
    fn loops_and_parallels_simplify() {
        // triangle with a doubled edge and a loop has the lattice of K3
        let spec = MatroidSpec::Graph {
            vertices: 3,
            edges: vec![(0, 1), (1, 2), (0, 2), (0, 1), (2, 2)],
        };
        let lat = enumerate_flats(&spec).unwrap();
        assert_eq!(lat.rank_counts(), vec![1, 3, 1]);
        assert_eq!(lat.flat(0), ElementSet::singleton(4));
    }

    #[test]
    fn type_b_lattices() {
        // Whitney numbers of the second kind of B_2 and B_3
        let b2 = enumerate_flats(&MatroidSpec::type_b(2)).unwrap();
        assert_eq!(b2.rank_counts(), vec![1, 4, 1]);
        let b3 = enumerate_flats(&MatroidSpec::type_b(3)).unwrap();
        assert_eq!(b3.rank_counts(), vec![1, 9, 13, 1]);
    }

    #[test]
    fn vector_matroid_with_zero_and_parallel() {
        let spec = MatroidSpec::LinearVectors {
            vectors: vec![vec![1, 0], vec![2, 0], vec![0, 0], vec![0, 3]],
        };
        let lat = enumerate_flats(&spec).unwrap();
        assert_eq!(lat.rank_counts(), vec![1, 2, 1]);
    }

    #[test]
    fn flat_cap() {
        let err = enumerate_flats_capped(&MatroidSpec::complete_graph(6), 100).unwrap_err();
        assert!(matches!(err, Error::TooManyFlats { cap: 100 }));
    }

    #[test]
    fn invalid_inputs() {
        let spec = MatroidSpec::Graph {
            vertices: 2,
            edges: vec![(0, 5)],
        };
        assert!(enumerate_flats(&spec).is_err());
        let big = MatroidSpec::Uniform { m: 100, d: 29 };
        assert!(matches!(enumerate_flats(&big), Err(Error::GroundTooLarge(129))));
    }
}

//! The fixed collection of small matroids, and of matroids with symmetry, that the
//! verification suites run over.

use std::collections::{BTreeSet, HashMap};

use crate::equivariant::PermGroup;
use crate::families::{family_matroid_spec, NiceFamily};
use crate::matroid::{enumerate_flats, FlatLattice, MatroidSpec};
use crate::Result;

/// Largest group order used in [`equivariant_corpus`].
pub const MAX_CORPUS_GROUP: usize = 5040;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: MatroidSpec,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, spec: MatroidSpec) -> Self {
        Self {
            name: name.into(),
            spec,
        }
    }

    pub fn lattice(&self) -> Result<FlatLattice> {
        enumerate_flats(&self.spec)
    }
}

/// Uniform `U_{m,d}` with `m + d <= 9`, connected graphs on at most five vertices
/// up to isomorphism, braid matroids to rank 6, type-B arrangements to rank 4 and
/// the projective spaces over `F_2` to rank 3.
pub fn small_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 0..=9 {
        for d in 0..=n {
            out.push(CorpusEntry::new(
                format!("U({},{d})", n - d),
                MatroidSpec::Uniform { m: n - d, d },
            ));
        }
    }
    for n in 1..=5 {
        for (k, edges) in connected_graphs(n).into_iter().enumerate() {
            out.push(CorpusEntry::new(
                format!("graph{n}.{k}"),
                MatroidSpec::Graph { vertices: n, edges },
            ));
        }
    }
    for d in 0..=6 {
        out.push(CorpusEntry::new(
            format!("braid{d}"),
            MatroidSpec::complete_graph(d + 1),
        ));
    }
    for d in 0..=4 {
        out.push(CorpusEntry::new(format!("typeb{d}"), MatroidSpec::type_b(d)));
    }
    for d in 0..=3 {
        let spec = family_matroid_spec(NiceFamily::QVec(2), d).expect("F_2 spaces are realisable");
        out.push(CorpusEntry::new(format!("qvec2.{d}"), spec));
    }
    out
}

/// Matroids paired with a symmetry group of order at most [`MAX_CORPUS_GROUP`]:
/// `S_n` on uniform matroids with `n <= 7`, `S_{d+1}` on the edges of `K_{d+1}`
/// for `d <= 6`, and the signed permutations on the type-B vectors for `d <= 4`.
pub fn equivariant_corpus() -> Result<Vec<(CorpusEntry, PermGroup)>> {
    let mut out = Vec::new();
    for n in 1..=7 {
        let group = PermGroup::symmetric(n)?;
        for d in 1..=n {
            out.push((
                CorpusEntry::new(format!("U({},{d})", n - d), MatroidSpec::Uniform { m: n - d, d }),
                group.clone(),
            ));
        }
    }
    for d in 1..=6 {
        let spec = MatroidSpec::complete_graph(d + 1);
        let group = complete_graph_symmetry(d + 1)?;
        out.push((CorpusEntry::new(format!("braid{d}"), spec), group));
    }
    for d in 1..=4 {
        out.push((
            CorpusEntry::new(format!("typeb{d}"), MatroidSpec::type_b(d)),
            signed_permutations(d)?,
        ));
    }
    Ok(out)
}

/// `S_n` acting on the edges of `K_n`, in the edge order of [`MatroidSpec::complete_graph`].
pub fn complete_graph_symmetry(n: usize) -> Result<PermGroup> {
    let MatroidSpec::Graph { edges, .. } = MatroidSpec::complete_graph(n) else {
        unreachable!()
    };
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let induced = |perm: &[usize]| -> Vec<usize> {
        edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                index[&(x.min(y), x.max(y))]
            })
            .collect()
    };
    PermGroup::generate(
        edges.len(),
        &vertex_generators(n)
            .iter()
            .map(|g| induced(g))
            .collect::<Vec<_>>(),
    )
}

/// The hyperoctahedral group acting on the vectors of [`MatroidSpec::type_b`],
/// each vector taken up to sign (so modulo `-1`, which fixes every line).
pub fn signed_permutations(d: usize) -> Result<PermGroup> {
    let MatroidSpec::LinearVectors { vectors } = MatroidSpec::type_b(d) else {
        unreachable!()
    };
    let normalize = |mut v: Vec<i64>| {
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        v
    };
    let index: HashMap<Vec<i64>, usize> = vectors.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
    let induced = |perm: &[usize], flip: Option<usize>| -> Vec<usize> {
        vectors
            .iter()
            .map(|v| {
                let mut w = vec![0; d];
                for (i, &x) in v.iter().enumerate() {
                    w[perm[i]] = if flip == Some(i) { -x } else { x };
                }
                index[&normalize(w)]
            })
            .collect()
    };
    let mut gens: Vec<Vec<usize>> = vertex_generators(d).iter().map(|g| induced(g, None)).collect();
    if d > 0 {
        gens.push(induced(&(0..d).collect::<Vec<_>>(), Some(0)));
    }
    PermGroup::generate(vectors.len(), &gens)
}

/// A transposition and an `n`-cycle, which generate `S_n`.
fn vertex_generators(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle = (0..n).map(|i| (i + 1) % n).collect();
    vec![swap, cycle]
}

/// Connected simple graphs on `n` labelled vertices, one per isomorphism class.
fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = PermGroup::symmetric(n).expect("n <= 5");
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        if !is_connected(n, &edges) {
            continue;
        }
        let canonical = perms
            .elements()
            .iter()
            .map(|p| {
                let mut image: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                    .collect();
                image.sort_unstable();
                image
            })
            .min()
            .expect("group is nonempty");
        if seen.insert(canonical) {
            out.push(edges);
        }
    }
    out
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !reached[other] {
                reached[other] = true;
                stack.push(other);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

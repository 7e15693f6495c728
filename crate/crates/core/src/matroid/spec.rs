use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A matroid in one of the supported presentations.
///
/// JSON form, with 0-based ground elements:
///
/// ```json
/// {"type": "bases",   "n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
/// {"type": "graph",   "vertices": 4, "edges": [[0, 1], [0, 2], [1, 2]]}
/// {"type": "uniform", "m": 1, "d": 3}
/// {"type": "vectors", "vectors": [[1, 0], [0, 1], [1, 1]]}
/// {"type": "flats",   "n": 2, "flats": [[], [0], [1], [0, 1]]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", try_from = "RawSpec")]
pub enum MatroidSpec {
    #[serde(rename = "bases")]
    ExplicitBases { n: usize, bases: Vec<Vec<usize>> },
    #[serde(rename = "graph")]
    Graph {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Rank `d` on `m + d` elements.
    #[serde(rename = "uniform")]
    Uniform { m: usize, d: usize },
    /// Column vectors over the rationals, given with integer entries.
    #[serde(rename = "vectors")]
    LinearVectors { vectors: Vec<Vec<i64>> },
    #[serde(rename = "flats")]
    ExplicitFlats { n: usize, flats: Vec<Vec<usize>> },
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn ground_size(&self) -> usize {
        match self {
            Self::ExplicitBases { n, .. } | Self::ExplicitFlats { n, .. } => *n,
            Self::Graph { edges, .. } => edges.len(),
            Self::Uniform { m, d } => m + d,
            Self::LinearVectors { vectors } => vectors.len(),
        }
    }

    /// Graph of the complete graph on `n` vertices; its flats are the set partitions of `[n]`.
    pub fn complete_graph(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::Graph { vertices: n, edges }
    }

    /// Free matroid of rank `n`, whose lattice of flats is Boolean.
    pub fn boolean(n: usize) -> Self {
        Self::Uniform { m: 0, d: n }
    }

    /// Vectors `e_i` and `e_i ± e_j` spanning the type-B reflection arrangement of rank `d`.
    pub fn type_b(d: usize) -> Self {
        let unit = |i: usize| {
            let mut v = vec![0i64; d];
            v[i] = 1;
            v
        };
        let mut vectors: Vec<Vec<i64>> = (0..d).map(unit).collect();
        for i in 0..d {
            for j in i + 1..d {
                let mut plus = unit(i);
                plus[j] = 1;
                let mut minus = unit(i);
                minus[j] = -1;
                vectors.push(plus);
                vectors.push(minus);
            }
        }
        Self::LinearVectors { vectors }
    }
}

/// Untagged mirror used for deserialization; internally tagged enums cannot
/// read numbers under serde_json's `arbitrary_precision`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    #[serde(rename = "type")]
    kind: String,
    n: Option<usize>,
    bases: Option<Vec<Vec<usize>>>,
    vertices: Option<usize>,
    edges: Option<Vec<(usize, usize)>>,
    m: Option<usize>,
    d: Option<usize>,
    vectors: Option<Vec<Vec<i64>>>,
    flats: Option<Vec<Vec<usize>>>,
}

fn field<T>(value: Option<T>, kind: &str, name: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidSpec(format!("\"{kind}\" matroid needs field \"{name}\"")))
}

impl TryFrom<RawSpec> for MatroidSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let kind = raw.kind.as_str();
        let spec = match kind {
            "bases" => Self::ExplicitBases {
                n: field(raw.n, kind, "n")?,
                bases: field(raw.bases, kind, "bases")?,
            },
            "graph" => Self::Graph {
                vertices: field(raw.vertices, kind, "vertices")?,
                edges: field(raw.edges, kind, "edges")?,
            },
            "uniform" => Self::Uniform {
                m: field(raw.m, kind, "m")?,
                d: field(raw.d, kind, "d")?,
            },
            "vectors" => Self::LinearVectors {
                vectors: field(raw.vectors, kind, "vectors")?,
            },
            "flats" => Self::ExplicitFlats {
                n: field(raw.n, kind, "n")?,
                flats: field(raw.flats, kind, "flats")?,
            },
            other => {
                return Err(Error::InvalidSpec(format!(
                    "unknown matroid type \"{other}\" (expected bases, graph, uniform, vectors or flats)"
                )))
            }
        };
        Ok(spec)
    }
}

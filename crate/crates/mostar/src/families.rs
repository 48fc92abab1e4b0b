//! Deterministic generators for the named graph families used as factors
//! and examples throughout the toolkit.
//!
//! Layout conventions: paths are chained in id order, the cycle closes
//! with the edge `(s-1, 0)`, bipartite part A is `0..r`, and the hub of a
//! star, wheel, or fan is always vertex 0.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::operators::{cartesian, cartesian_power, join};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Empty,
    Star,
    Wheel,
    Fan,
    Hypercube,
    Hamming,
    Grid,
    Ladder,
    Friendship,
    Cone,
    BridgePath,
    BridgeCycle,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Empty,
        Family::Star,
        Family::Wheel,
        Family::Fan,
        Family::Hypercube,
        Family::Hamming,
        Family::Grid,
        Family::Ladder,
        Family::Friendship,
        Family::Cone,
        Family::BridgePath,
        Family::BridgeCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Empty => "empty",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Fan => "fan",
            Family::Hypercube => "hypercube",
            Family::Hamming => "hamming",
            Family::Grid => "grid",
            Family::Ladder => "ladder",
            Family::Friendship => "friendship",
            Family::Cone => "cone",
            Family::BridgePath => "bridge-path",
            Family::BridgeCycle => "bridge-cycle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} takes {expected}, got {got} parameter(s)")]
    BadArity {
        family: Family,
        expected: &'static str,
        got: usize,
    },
    #[error("{family}: {reason}")]
    BadParam { family: Family, reason: String },
}

/// A family plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<u32>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<u32>) -> Self {
        FamilySpec { family, params }
    }
}

fn arity<const N: usize>(spec: &FamilySpec) -> Result<[u32; N], FamilyError> {
    <[u32; N]>::try_from(spec.params.as_slice()).map_err(|_| FamilyError::BadArity {
        family: spec.family,
        expected: match N {
            1 => "1 parameter",
            2 => "2 parameters",
            _ => "a fixed parameter count",
        },
        got: spec.params.len(),
    })
}

fn require(cond: bool, family: Family, reason: &str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::BadParam {
            family,
            reason: reason.to_string(),
        })
    }
}

pub fn path(s: u32) -> Graph {
    Graph::from_canonical(s, (0..s.saturating_sub(1)).map(|i| (i, i + 1)).collect())
}

pub fn cycle(s: u32) -> Graph {
    debug_assert!(s >= 3);
    let mut e: Vec<(Vertex, Vertex)> = (0..s - 1).map(|i| (i, i + 1)).collect();
    e.push((0, s - 1));
    Graph::from_canonical(s, e)
}

pub fn complete(s: u32) -> Graph {
    Graph::from_canonical(
        s,
        (0..s)
            .flat_map(|u| (u + 1..s).map(move |v| (u, v)))
            .collect(),
    )
}

pub fn empty(s: u32) -> Graph {
    Graph::from_canonical(s, Vec::new())
}

pub fn complete_bipartite(r: u32, s: u32) -> Graph {
    Graph::from_canonical(
        r + s,
        (0..r)
            .flat_map(|u| (0..s).map(move |v| (u, r + v)))
            .collect(),
    )
}

/// Disjoint union of `k` copies of `K2`, the matching the flower graph is
/// built on.
fn k2_copies(k: u32) -> Graph {
    Graph::from_canonical(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)).collect())
}

/// Generates the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let fam = spec.family;
    let graph = match fam {
        Family::Path => {
            let [s] = arity(spec)?;
            require(s >= 1, fam, "path needs s >= 1")?;
            path(s)
        }
        Family::Cycle => {
            let [s] = arity(spec)?;
            require(s >= 3, fam, "cycle needs s >= 3")?;
            cycle(s)
        }
        Family::Complete => {
            let [s] = arity(spec)?;
            require(s >= 1, fam, "complete graph needs s >= 1")?;
            complete(s)
        }
        Family::CompleteBipartite => {
            let [r, s] = arity(spec)?;
            require(r >= 1 && s >= 1, fam, "both parts need >= 1 vertices")?;
            complete_bipartite(r, s)
        }
        Family::Empty => {
            let [s] = arity(spec)?;
            require(s >= 1, fam, "empty graph needs s >= 1")?;
            empty(s)
        }
        Family::Star => {
            // parameter = number of leaves; order is s+1, hub 0
            let [s] = arity(spec)?;
            require(s >= 1, fam, "star needs >= 1 leaves")?;
            complete_bipartite(1, s)
        }
        Family::Wheel => {
            let [rim] = arity(spec)?;
            require(rim >= 3, fam, "wheel rim needs >= 3 vertices")?;
            join(&complete(1), &cycle(rim))
        }
        Family::Fan => {
            let [s] = arity(spec)?;
            require(s >= 1, fam, "fan path needs >= 1 vertices")?;
            join(&complete(1), &path(s))
        }
        Family::Hypercube => {
            let [k] = arity(spec)?;
            require(k >= 1, fam, "hypercube dimension needs k >= 1")?;
            require(k <= 16, fam, "hypercube dimension capped at 16")?;
            cartesian_power(&complete(2), k).expect("k >= 1")
        }
        Family::Hamming => {
            require(!spec.params.is_empty(), fam, "needs >= 1 coordinate")?;
            let mut acc: Option<Graph> = None;
            let mut order: u64 = 1;
            for &s in &spec.params {
                require(s >= 2, fam, "each coordinate needs >= 2 symbols")?;
                order *= u64::from(s);
                require(order <= 1 << 16, fam, "order capped at 2^16")?;
                acc = Some(match acc {
                    None => complete(s),
                    Some(g) => cartesian(&g, &complete(s)),
                });
            }
            acc.expect("nonempty")
        }
        Family::Grid => {
            let [a, b] = arity(spec)?;
            require(a >= 1 && b >= 1, fam, "grid sides need >= 1 vertices")?;
            cartesian(&path(a), &path(b))
        }
        Family::Ladder => {
            let [a] = arity(spec)?;
            require(a >= 1, fam, "ladder needs >= 1 squares")?;
            cartesian(&path(2), &path(a + 1))
        }
        Family::Friendship => {
            let [g] = arity(spec)?;
            require(g >= 1, fam, "friendship needs >= 1 triangles")?;
            join(&complete(1), &k2_copies(g))
        }
        Family::Cone => {
            let [f, g] = arity(spec)?;
            require(f >= 3, fam, "cone cycle needs >= 3 vertices")?;
            require(g >= 1, fam, "cone needs >= 1 apex vertices")?;
            join(&cycle(f), &empty(g))
        }
        Family::BridgePath => {
            let [k] = arity(spec)?;
            require(k >= 1, fam, "needs >= 1 segments")?;
            let parts: Vec<Graph> = (0..k).map(|_| path(3)).collect();
            let anchors = vec![1u32; k as usize];
            bridge_graph(&parts, &anchors).expect("anchors valid")
        }
        Family::BridgeCycle => {
            let [k, c] = arity(spec)?;
            require(k >= 1, fam, "needs >= 1 segments")?;
            require(c >= 3, fam, "cycle segments need >= 3 vertices")?;
            let parts: Vec<Graph> = (0..k).map(|_| cycle(c)).collect();
            let anchors = vec![0u32; k as usize];
            bridge_graph(&parts, &anchors).expect("anchors valid")
        }
    };
    Ok(graph)
}

/// Bridge graph: the disjoint union of `parts` plus a linking edge between
/// the anchors of consecutive parts.
pub fn bridge_graph(parts: &[Graph], anchors: &[Vertex]) -> Result<Graph, GraphError> {
    assert_eq!(parts.len(), anchors.len(), "one anchor per part");
    assert!(!parts.is_empty(), "at least one part");
    let mut offsets = Vec::with_capacity(parts.len());
    let mut order = 0u32;
    let mut edges = Vec::new();
    for (part, &anchor) in parts.iter().zip(anchors) {
        if anchor >= part.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: anchor,
                order: part.order(),
            });
        }
        offsets.push(order);
        edges.extend(part.edges().iter().map(|&(u, v)| (order + u, order + v)));
        order += part.order();
    }
    for i in 0..parts.len() - 1 {
        let a = offsets[i] + anchors[i];
        let b = offsets[i + 1] + anchors[i + 1];
        edges.push((a.min(b), a.max(b)));
    }
    Ok(Graph::from_canonical(order, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::mostar;
    use crate::operators::corona;

    fn gen(family: Family, params: &[u32]) -> Graph {
        generate(&FamilySpec::new(family, params.to_vec())).unwrap()
    }

    #[test]
    fn basic_orders_and_sizes() {
        let cases: &[(Family, &[u32], u32, u32)] = &[
            (Family::Path, &[4], 4, 3),
            (Family::Path, &[1], 1, 0),
            (Family::Cycle, &[5], 5, 5),
            (Family::Complete, &[5], 5, 10),
            (Family::CompleteBipartite, &[2, 3], 5, 6),
            (Family::Empty, &[4], 4, 0),
            (Family::Star, &[5], 6, 5),
            (Family::Wheel, &[5], 6, 10),
            (Family::Fan, &[4], 5, 7),
            (Family::Hypercube, &[3], 8, 12),
            (Family::Hamming, &[2, 3], 6, 9),
            (Family::Grid, &[2, 3], 6, 7),
            (Family::Ladder, &[3], 8, 10),
            (Family::Friendship, &[3], 7, 9),
            (Family::Cone, &[3, 2], 5, 9),
            (Family::BridgePath, &[2], 6, 5),
            (Family::BridgeCycle, &[3, 3], 9, 11),
        ];
        for &(family, params, order, size) in cases {
            let g = gen(family, params);
            assert_eq!((g.order(), g.size()), (order, size), "{family} {params:?}");
        }
    }

    #[test]
    fn hub_is_vertex_zero() {
        assert_eq!(gen(Family::Star, &[7]).degree(0), 7);
        assert_eq!(gen(Family::Wheel, &[5]).degree(0), 5);
        assert_eq!(gen(Family::Fan, &[5]).degree(0), 5);
    }

    #[test]
    fn hypercube_is_regular() {
        for k in 1..=5 {
            let q = gen(Family::Hypercube, &[k]);
            assert_eq!(q.order(), 1 << k);
            assert_eq!(q.regularity(), Some(k));
        }
    }

    #[test]
    fn hamming_of_twos_matches_hypercube() {
        for k in 1..=5usize {
            let h = gen(Family::Hamming, &vec![2u32; k]);
            let q = gen(Family::Hypercube, &[k as u32]);
            assert_eq!(h.order(), q.order());
            assert_eq!(h.size(), q.size());
            let (mut dh, mut dq) = (h.degrees(), q.degrees());
            dh.sort_unstable();
            dq.sort_unstable();
            assert_eq!(dh, dq);
        }
    }

    #[test]
    fn connectivity_of_generated_families() {
        for (family, params) in [
            (Family::Path, vec![6]),
            (Family::Cycle, vec![6]),
            (Family::Wheel, vec![6]),
            (Family::Friendship, vec![2]),
            (Family::Cone, vec![4, 3]),
            (Family::BridgeCycle, vec![2, 4]),
            (Family::Hamming, vec![2, 2, 3]),
        ] {
            assert!(generate(&FamilySpec::new(family, params))
                .unwrap()
                .is_connected());
        }
        assert!(!gen(Family::Empty, &[3]).is_connected());
    }

    #[test]
    fn arity_and_param_errors() {
        assert!(matches!(
            generate(&FamilySpec::new(Family::Path, vec![])),
            Err(FamilyError::BadArity { .. })
        ));
        assert!(matches!(
            generate(&FamilySpec::new(Family::Cycle, vec![2])),
            Err(FamilyError::BadParam { .. })
        ));
        assert!(matches!(
            generate(&FamilySpec::new(Family::Hamming, vec![2, 1])),
            Err(FamilyError::BadParam { .. })
        ));
        assert!(matches!(
            generate(&FamilySpec::new(Family::Grid, vec![3])),
            Err(FamilyError::BadArity { .. })
        ));
        assert!(matches!(
            "nope".parse::<Family>(),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert_eq!(
            "bridge-cycle".parse::<Family>().unwrap(),
            Family::BridgeCycle
        );
    }

    #[test]
    fn bridge_graph_shapes() {
        let p3 = path(3);
        let b = bridge_graph(&[p3.clone(), p3.clone()], &[1, 1]).unwrap();
        assert_eq!((b.order(), b.size()), (6, 5));

        let single = bridge_graph(&[complete(1)], &[0]).unwrap();
        assert_eq!((single.order(), single.size()), (1, 0));

        let t33 = bridge_graph(&[cycle(3), cycle(3), cycle(3)], &[0, 0, 0]).unwrap();
        assert_eq!((t33.order(), t33.size()), (9, 11));

        assert!(matches!(
            bridge_graph(&[p3], &[5]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    /// The chain of pendant-pair segments and the corona of a path with two
    /// isolated vertices are the same graph up to relabeling; their Mostar
    /// indices must agree.
    #[test]
    fn bridge_path_matches_corona_of_path() {
        for k in 1..=8u32 {
            let b = gen(Family::BridgePath, &[k]);
            let c = corona(&path(k), &empty(2));
            assert_eq!((b.order(), b.size()), (c.order(), c.size()));
            assert_eq!(mostar(&b).unwrap(), mostar(&c).unwrap(), "k={k}");
        }
    }
}

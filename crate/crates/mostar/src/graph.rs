//! Immutable simple graphs and the BFS distance engine.
//!
//! Vertices are dense ids `0..order-1`. A [`Graph`] is validated and frozen
//! at construction: no self-loops, no duplicate edges, symmetric adjacency.
//! Everything downstream (generators, products, invariants, the verifier)
//! works on this one representation.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Dense vertex id.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Order-zero graphs are rejected; every formula here assumes at least
    /// one vertex.
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: u32 },
    #[error("graph is disconnected")]
    Disconnected,
}

/// An immutable, undirected, simple graph.
///
/// Edges are stored canonically (`u < v`, lexicographically sorted) next to
/// a CSR adjacency table, so edge iteration order and neighbor order are
/// reproducible everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: u32,
    edges: Vec<(Vertex, Vertex)>,
    offsets: Vec<u32>,
    targets: Vec<Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, size={})", self.order, self.size())
    }
}

impl Graph {
    /// Builds a validated graph from an edge list.
    ///
    /// Duplicate pairs and `(u,v)`/`(v,u)` repeats collapse to a single
    /// edge. Fails on self-loops, out-of-range endpoints, and order 0.
    pub fn build(
        order: usize,
        edge_list: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Graph, GraphError> {
        if order == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let order = u32::try_from(order).expect("order fits u32");
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_canonical(order, edges))
    }

    /// Internal constructor for callers that already hold edges over valid
    /// vertex ids (generators and product constructors).
    pub(crate) fn from_canonical(order: u32, mut edges: Vec<(Vertex, Vertex)>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < order));
        let mut deg = vec![0u32; order as usize];
        for &(u, v) in &edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(order as usize + 1);
        let mut acc = 0u32;
        offsets.push(0);
        for &d in &deg {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor: Vec<u32> = offsets[..order as usize].to_vec();
        let mut targets = vec![0u32; acc as usize];
        for &(u, v) in &edges {
            targets[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        Graph {
            order,
            edges,
            offsets,
            targets,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> u32 {
        self.edges.len() as u32
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[u as usize] as usize..self.offsets[u as usize + 1] as usize]
    }

    pub fn degree(&self, u: Vertex) -> u32 {
        self.offsets[u as usize + 1] - self.offsets[u as usize]
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.order).map(|u| self.degree(u)).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Degree if the graph is regular, `None` otherwise.
    pub fn regularity(&self) -> Option<u32> {
        let d = self.degree(0);
        (1..self.order).all(|u| self.degree(u) == d).then_some(d)
    }

    /// Size of `N(u) ∩ N(v)`. For an edge `uv` this is the number of
    /// triangles through that edge.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> u32 {
        let (mut a, mut b) = (self.neighbors(u).iter(), self.neighbors(v).iter());
        let (mut x, mut y) = (a.next(), b.next());
        let mut count = 0;
        while let (Some(&p), Some(&q)) = (x, y) {
            match p.cmp(&q) {
                std::cmp::Ordering::Less => x = a.next(),
                std::cmp::Ordering::Greater => y = b.next(),
                std::cmp::Ordering::Equal => {
                    count += 1;
                    x = a.next();
                    y = b.next();
                }
            }
        }
        count
    }

    /// BFS hop counts from `src` into a reusable buffer; unreached vertices
    /// are left at `u32::MAX`.
    pub(crate) fn bfs_into(&self, src: Vertex, dist: &mut [u32], queue: &mut VecDeque<Vertex>) {
        dist.fill(u32::MAX);
        queue.clear();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let next = dist[u as usize] + 1;
            for &v in self.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = next;
                    queue.push_back(v);
                }
            }
        }
    }

    /// True iff one BFS from vertex 0 reaches every vertex. A single vertex
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        let mut dist = vec![u32::MAX; self.order as usize];
        let mut queue = VecDeque::new();
        self.bfs_into(0, &mut dist, &mut queue);
        dist.iter().all(|&d| d != u32::MAX)
    }

    /// All-pairs hop counts, one BFS per source; `O(s·(s+t))` total.
    pub fn distances(&self) -> Result<DistanceMatrix, GraphError> {
        let n = self.order as usize;
        let mut dist = vec![0u32; n * n];
        let mut queue = VecDeque::new();
        for src in 0..self.order {
            let row = &mut dist[src as usize * n..(src as usize + 1) * n];
            self.bfs_into(src, row, &mut queue);
            if row.contains(&u32::MAX) {
                return Err(GraphError::Disconnected);
            }
        }
        Ok(DistanceMatrix {
            order: self.order,
            dist,
        })
    }
}

/// Disjoint union; the second operand's vertex ids are shifted by
/// `a.order()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let order = a.order() + b.order();
    let mut edges = a.edges.clone();
    edges.extend(b.edges.iter().map(|&(u, v)| (u + a.order, v + a.order)));
    Graph::from_canonical(order, edges)
}

/// All-pairs unweighted shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: u32,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> u32 {
        self.order
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u as usize * self.order as usize + v as usize]
    }

    /// Row of distances from `u` to every vertex.
    pub fn row(&self, u: Vertex) -> &[u32] {
        let n = self.order as usize;
        &self.dist[u as usize * n..(u as usize + 1) * n]
    }

    /// Largest entry (the diameter for a connected graph).
    pub fn eccentricity_max(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn build_dedups_and_orients() {
        let g = Graph::build(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::build(0, []), Err(GraphError::ZeroOrder));
        assert_eq!(Graph::build(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
    }

    #[test]
    fn p3_degrees() {
        let g = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.degrees().iter().sum::<u32>(), 2 * g.size());
    }

    #[test]
    fn k1_is_connected_with_no_edges() {
        let g = Graph::build(1, []).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(p4().is_connected());
        assert!(!Graph::build(3, []).unwrap().is_connected());
        let two_k2 = Graph::build(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
    }

    #[test]
    fn distances_p4_and_k5() {
        let d = p4().distances().unwrap();
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(3, 0), 3);
        assert_eq!(d.get(1, 1), 0);

        let k5 = Graph::build(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        let d = k5.distances().unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn distances_c4_diameter() {
        let c4 = Graph::build(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.distances().unwrap().eccentricity_max(), 2);
    }

    #[test]
    fn distances_reject_disconnected() {
        let g = Graph::build(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distances().unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn common_neighbors_examples() {
        let k3 = Graph::build(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.common_neighbors(0, 1), 1);
        let p3 = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.common_neighbors(0, 1), 0);
        let k4 = Graph::build(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(k4.common_neighbors(1, 3), 2);
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let k2 = Graph::build(2, [(0, 1)]).unwrap();
        let u = disjoint_union(&k2, &k2);
        assert_eq!((u.order(), u.size()), (4, 2));
        assert_eq!(u.edges(), &[(0, 1), (2, 3)]);
        let k1 = Graph::build(1, []).unwrap();
        let e2 = disjoint_union(&k1, &k1);
        assert_eq!((e2.order(), e2.size()), (2, 0));
    }

    /// Independent Floyd–Warshall oracle for the distance engine.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
        let n = g.order() as usize;
        const INF: u64 = u64::MAX / 4;
        let mut d = vec![vec![INF; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0;
        }
        for &(u, v) in g.edges() {
            d[u as usize][v as usize] = 1;
            d[v as usize][u as usize] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        d
    }

    #[test]
    fn bfs_matches_floyd_warshall() {
        let samples = [
            Graph::build(1, []).unwrap(),
            p4(),
            Graph::build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap(),
            Graph::build(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap(),
        ];
        for g in &samples {
            let bfs = g.distances().unwrap();
            let fw = floyd_warshall(g);
            for u in 0..g.order() {
                for v in 0..g.order() {
                    assert_eq!(u64::from(bfs.get(u, v)), fw[u as usize][v as usize]);
                }
            }
        }
    }
}

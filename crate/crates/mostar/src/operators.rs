//! Product constructors: corona, Cartesian, join, lexicographic, Indu-Bala,
//! subdivision, and the subdivision vertex-edge join.
//!
//! Every operator documents its vertex-id layout so tests and external
//! tools can address the factor blocks of a result (see PRODUCT_LAYOUTS.md
//! at the repository root). All constructors are pure: they take immutable
//! inputs and return fresh graphs.

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("n-ary cartesian product needs at least one factor")]
    NoFactors,
}

/// The operations with documented layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOp {
    Corona,
    Cartesian,
    Join,
    Lexicographic,
    InduBala,
    Subdivision,
    SveJoin,
    Thorn,
}

/// A contiguous block of vertex ids in a product, tagged with its role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub label: String,
    pub start: Vertex,
    pub len: u32,
}

/// How a product's vertex ids decompose into factor blocks. Blocks are
/// disjoint, contiguous, and cover `0..order` exactly.
#[derive(Debug, Clone)]
pub struct ProductLayout {
    pub op: ProductOp,
    pub blocks: Vec<Block>,
}

impl ProductLayout {
    pub fn order(&self) -> u32 {
        self.blocks.iter().map(|b| b.len).sum()
    }

    fn new(op: ProductOp, blocks: Vec<(String, Vertex, u32)>) -> Self {
        let blocks = blocks
            .into_iter()
            .map(|(label, start, len)| Block { label, start, len })
            .collect();
        ProductLayout { op, blocks }
    }
}

/// Corona product `G ∘ H`: one copy of `G` and `order(G)` copies of `H`,
/// vertex `i` of `G` joined to every vertex of copy `i`.
///
/// Layout: ids `0..s1` are `G`; copy `i` of `H` occupies
/// `s1 + i*s2 .. s1 + (i+1)*s2`.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let (s1, s2) = (g.order(), h.order());
    let order = s1 * (1 + s2);
    let mut edges = Vec::with_capacity((g.size() + s1 * (h.size() + s2)) as usize);
    edges.extend_from_slice(g.edges());
    for i in 0..s1 {
        let base = s1 + i * s2;
        edges.extend(h.edges().iter().map(|&(u, v)| (base + u, base + v)));
        edges.extend((0..s2).map(|j| (i, base + j)));
    }
    Graph::from_canonical(order, edges)
}

pub fn corona_layout(s1: u32, s2: u32) -> ProductLayout {
    let mut blocks = vec![("first-factor".to_string(), 0, s1)];
    for i in 0..s1 {
        blocks.push((format!("copy-{i}"), s1 + i * s2, s2));
    }
    ProductLayout::new(ProductOp::Corona, blocks)
}

/// Thorn graph: `m` pendant vertices attached to every vertex of `G`,
/// i.e. the corona of `G` with the edgeless graph on `m` vertices.
/// `m = 0` returns `G` unchanged.
pub fn thorn(g: &Graph, m: u32) -> Graph {
    if m == 0 {
        return g.clone();
    }
    let empty = Graph::from_canonical(m, Vec::new());
    corona(g, &empty)
}

/// Cartesian product: vertex `(a, b)` maps to id `a*order(H) + b`; edges
/// move in exactly one coordinate along an edge of that factor.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    let (s1, s2) = (g.order(), h.order());
    let vid = |a: Vertex, b: Vertex| a * s2 + b;
    let mut edges = Vec::with_capacity((s1 * h.size() + s2 * g.size()) as usize);
    for a in 0..s1 {
        edges.extend(h.edges().iter().map(|&(u, v)| (vid(a, u), vid(a, v))));
    }
    for b in 0..s2 {
        edges.extend(g.edges().iter().map(|&(u, v)| (vid(u, b), vid(v, b))));
    }
    Graph::from_canonical(s1 * s2, edges)
}

/// Left-associated Cartesian product of one or more factors.
pub fn cartesian_n(factors: &[&Graph]) -> Result<Graph, ProductError> {
    let (first, rest) = factors.split_first().ok_or(ProductError::NoFactors)?;
    let mut acc = (*first).clone();
    for f in rest {
        acc = cartesian(&acc, f);
    }
    Ok(acc)
}

/// `k`-th Cartesian power of `G`, `k >= 1`.
pub fn cartesian_power(g: &Graph, k: u32) -> Result<Graph, ProductError> {
    if k == 0 {
        return Err(ProductError::NoFactors);
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = cartesian(&acc, g);
    }
    Ok(acc)
}

/// Join `G + H`: disjoint union plus all cross edges.
///
/// Layout: ids `0..s1` are `G`, `s1..s1+s2` are `H`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (s1, s2) = (g.order(), h.order());
    let mut edges = Vec::with_capacity((g.size() + h.size() + s1 * s2) as usize);
    edges.extend_from_slice(g.edges());
    edges.extend(h.edges().iter().map(|&(u, v)| (s1 + u, s1 + v)));
    edges.extend((0..s1).flat_map(|u| (0..s2).map(move |v| (u, s1 + v))));
    Graph::from_canonical(s1 + s2, edges)
}

pub fn join_layout(s1: u32, s2: u32) -> ProductLayout {
    ProductLayout::new(
        ProductOp::Join,
        vec![
            ("first-factor".to_string(), 0, s1),
            ("second-factor".to_string(), s1, s2),
        ],
    )
}

/// Lexicographic product `G[H]`: `(a,x)` adjacent to `(b,y)` iff `ab` is an
/// edge of `G`, or `a = b` and `xy` is an edge of `H`. Vertex `(a, b)` maps
/// to id `a*order(H) + b`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    let (s1, s2) = (g.order(), h.order());
    let vid = |a: Vertex, b: Vertex| a * s2 + b;
    let mut edges = Vec::with_capacity((s1 * h.size() + g.size() * s2 * s2) as usize);
    for a in 0..s1 {
        edges.extend(h.edges().iter().map(|&(u, v)| (vid(a, u), vid(a, v))));
    }
    for &(a, b) in g.edges() {
        for x in 0..s2 {
            for y in 0..s2 {
                edges.push((vid(a, x), vid(b, y)));
            }
        }
    }
    Graph::from_canonical(s1 * s2, edges)
}

/// Indu-Bala product `G ▼ H`: two disjoint copies of `G + H` with vertex
/// `j` of `H` in copy one matched to vertex `j` of `H` in copy two.
///
/// Layout: copy one occupies `0..s1+s2` (as in [`join`]); copy two is
/// shifted by `s1+s2`.
pub fn indu_bala(g: &Graph, h: &Graph) -> Graph {
    let (s1, s2) = (g.order(), h.order());
    let one = join(g, h);
    let off = s1 + s2;
    let mut edges = one.edges().to_vec();
    edges.extend(one.edges().iter().map(|&(u, v)| (off + u, off + v)));
    edges.extend((0..s2).map(|j| (s1 + j, off + s1 + j)));
    Graph::from_canonical(2 * off, edges)
}

pub fn indu_bala_layout(s1: u32, s2: u32) -> ProductLayout {
    let off = s1 + s2;
    ProductLayout::new(
        ProductOp::InduBala,
        vec![
            ("copy1-first-factor".to_string(), 0, s1),
            ("copy1-second-factor".to_string(), s1, s2),
            ("copy2-first-factor".to_string(), off, s1),
            ("copy2-second-factor".to_string(), off + s1, s2),
        ],
    )
}

/// Subdivision `S(G)`: every edge `uv` is replaced by `u–w, w–v` with a
/// fresh inserted vertex `w`.
///
/// Layout: ids `0..s1` are the primary vertices; `s1 + k` is the inserted
/// vertex of the `k`-th edge in canonical order.
pub fn subdivision(g: &Graph) -> Graph {
    let s1 = g.order();
    let t1 = g.size();
    let mut edges = Vec::with_capacity(2 * t1 as usize);
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        let w = s1 + k as u32;
        edges.push((u, w));
        edges.push((v, w));
    }
    Graph::from_canonical(s1 + t1, edges)
}

pub fn subdivision_layout(s1: u32, t1: u32) -> ProductLayout {
    ProductLayout::new(
        ProductOp::Subdivision,
        vec![
            ("primary".to_string(), 0, s1),
            ("inserted".to_string(), s1, t1),
        ],
    )
}

/// Subdivision vertex-edge join: starts from `S(G1)`, joins every vertex
/// of `G2` to all primary vertices, and every vertex of `G3` to all
/// inserted vertices. Either side may be absent.
///
/// Layout: `0..s1` primary, `s1..s1+t1` inserted, then the `G2` block,
/// then the `G3` block.
pub fn sve_join(g1: &Graph, g2: Option<&Graph>, g3: Option<&Graph>) -> Graph {
    let (s1, t1) = (g1.order(), g1.size());
    let sub = subdivision(g1);
    let mut order = sub.order();
    let mut edges = sub.edges().to_vec();
    if let Some(h) = g2 {
        let base = order;
        edges.extend(h.edges().iter().map(|&(u, v)| (base + u, base + v)));
        edges.extend((0..s1).flat_map(|p| (0..h.order()).map(move |j| (p, base + j))));
        order += h.order();
    }
    if let Some(h) = g3 {
        let base = order;
        edges.extend(h.edges().iter().map(|&(u, v)| (base + u, base + v)));
        edges.extend((0..t1).flat_map(|i| (0..h.order()).map(move |j| (s1 + i, base + j))));
        order += h.order();
    }
    Graph::from_canonical(order, edges)
}

pub fn sve_layout(s1: u32, t1: u32, s2: u32, s3: u32) -> ProductLayout {
    let mut blocks = vec![
        ("primary".to_string(), 0, s1),
        ("inserted".to_string(), s1, t1),
    ];
    if s2 > 0 {
        blocks.push(("vertex-joined".to_string(), s1 + t1, s2));
    }
    if s3 > 0 {
        blocks.push(("edge-joined".to_string(), s1 + t1 + s2, s3));
    }
    ProductLayout::new(ProductOp::SveJoin, blocks)
}

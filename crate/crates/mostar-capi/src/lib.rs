//! C ABI for the mostar toolkit.
//!
//! Graphs are opaque handles created by `mostar_graph_build`,
//! `mostar_graph_parse`, `mostar_generate`, or one of the product
//! constructors, and released with `mostar_graph_free`. Every fallible
//! call returns a `MostarStatus`; results travel through out-pointers.
//! The C header is generated into `include/mostar.h` at build time.
//!
//! Thread safety: handles are immutable after construction, so concurrent
//! reads of the same handle from multiple threads are safe; freeing a
//! handle while another thread uses it is not.

use std::ffi::{c_char, CStr};
use std::ptr;
use std::slice;

use mostar::edgelist;
use mostar::families::{generate, Family, FamilySpec};
use mostar::graph::{Graph, GraphError};
use mostar::invariants;
use mostar::operators;

/// Opaque graph handle.
pub struct MostarGraph {
    inner: Graph,
}

impl MostarGraph {
    fn boxed(inner: Graph) -> *mut MostarGraph {
        Box::into_raw(Box::new(MostarGraph { inner }))
    }
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MostarStatus {
    MostarOk = 0,
    /// A required pointer argument was null.
    MostarNullArgument = 1,
    /// A parameter was out of range for the operation.
    MostarInvalidArgument = 2,
    /// The edge list contained a self-loop.
    MostarSelfLoop = 3,
    /// An endpoint was outside `0..order`.
    MostarVertexOutOfRange = 4,
    /// The requested index is undefined on a disconnected graph.
    MostarDisconnected = 5,
    /// Unknown family name or bad family parameters.
    MostarBadFamily = 6,
    /// The edge-list text did not parse.
    MostarParseError = 7,
    /// The caller-provided buffer is too small; the required size is
    /// reported through the out-parameter.
    MostarBufferTooSmall = 8,
}

use MostarStatus::*;

/// One row of the per-edge contribution table.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MostarEdgeContribution {
    pub u: u32,
    pub v: u32,
    pub n_u: u64,
    pub n_v: u64,
    pub contribution: u64,
}

fn graph_error_status(e: &GraphError) -> MostarStatus {
    match e {
        GraphError::ZeroOrder => MostarInvalidArgument,
        GraphError::SelfLoop(_) => MostarSelfLoop,
        GraphError::VertexOutOfRange { .. } => MostarVertexOutOfRange,
        GraphError::Disconnected => MostarDisconnected,
    }
}

/// # Safety
/// `handle` must be null or a pointer previously returned by one of this
/// library's constructors and not yet freed.
unsafe fn borrow<'a>(handle: *const MostarGraph) -> Option<&'a Graph> {
    handle.as_ref().map(|h| &h.inner)
}

/// Library version string; static storage, do not free.
#[no_mangle]
pub extern "C" fn mostar_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph from `edge_count` vertex pairs laid out as
/// `u0, v0, u1, v1, ...`. Duplicate pairs collapse; self-loops are
/// rejected. `edges` may be null when `edge_count` is zero.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `uint32_t`s (or be
/// null when `edge_count == 0`), and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_build(
    order: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        return MostarNullArgument;
    }
    let pairs = if edge_count == 0 {
        &[][..]
    } else {
        slice::from_raw_parts(edges, 2 * edge_count)
    };
    let list = pairs.chunks_exact(2).map(|c| (c[0], c[1]));
    match Graph::build(order as usize, list) {
        Ok(g) => {
            *out = MostarGraph::boxed(g);
            MostarOk
        }
        Err(e) => {
            *out = ptr::null_mut();
            graph_error_status(&e)
        }
    }
}

/// Parses the canonical edge-list text format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_parse(
    text: *const c_char,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    if text.is_null() || out.is_null() {
        return MostarNullArgument;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return MostarParseError;
    };
    match edgelist::parse(text) {
        Ok(g) => {
            *out = MostarGraph::boxed(g);
            MostarOk
        }
        Err(_) => {
            *out = ptr::null_mut();
            MostarParseError
        }
    }
}

/// Generates a named family member. `name` is one of the CLI family names
/// (`path`, `cycle`, `complete`, `complete-bipartite`, `empty`, `star`,
/// `wheel`, `fan`, `hypercube`, `hamming`, `grid`, `ladder`, `friendship`,
/// `cone`, `bridge-path`, `bridge-cycle`).
///
/// # Safety
/// `name` must be NUL-terminated, `params` must point to `param_count`
/// readable values (or be null when `param_count == 0`), and `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn mostar_generate(
    name: *const c_char,
    params: *const u32,
    param_count: usize,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    if name.is_null() || out.is_null() || (params.is_null() && param_count > 0) {
        return MostarNullArgument;
    }
    let Ok(name) = CStr::from_ptr(name).to_str() else {
        return MostarBadFamily;
    };
    let Ok(family) = name.parse::<Family>() else {
        return MostarBadFamily;
    };
    let params = if param_count == 0 {
        Vec::new()
    } else {
        slice::from_raw_parts(params, param_count).to_vec()
    };
    match generate(&FamilySpec::new(family, params)) {
        Ok(g) => {
            *out = MostarGraph::boxed(g);
            MostarOk
        }
        Err(_) => {
            *out = ptr::null_mut();
            MostarBadFamily
        }
    }
}

/// Frees a handle; null is a no-op.
///
/// # Safety
/// `handle` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_free(handle: *mut MostarGraph) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Vertex count; zero if the handle is null.
///
/// # Safety
/// See [`mostar_graph_free`] for handle validity.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_order(handle: *const MostarGraph) -> u32 {
    borrow(handle).map_or(0, Graph::order)
}

/// Edge count; zero if the handle is null.
///
/// # Safety
/// See [`mostar_graph_free`] for handle validity.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_size(handle: *const MostarGraph) -> u32 {
    borrow(handle).map_or(0, Graph::size)
}

/// # Safety
/// Valid handle (or null) and valid `out`.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_degree(
    handle: *const MostarGraph,
    vertex: u32,
    out: *mut u32,
) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), out.is_null()) else {
        return MostarNullArgument;
    };
    if vertex >= g.order() {
        return MostarVertexOutOfRange;
    }
    *out = g.degree(vertex);
    MostarOk
}

/// # Safety
/// Valid handle (or null) and valid `out`.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_is_connected(
    handle: *const MostarGraph,
    out: *mut bool,
) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = g.is_connected();
    MostarOk
}

/// The Mostar index of a connected graph.
///
/// # Safety
/// Valid handle (or null) and valid `out`.
#[no_mangle]
pub unsafe extern "C" fn mostar_index(handle: *const MostarGraph, out: *mut u64) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), out.is_null()) else {
        return MostarNullArgument;
    };
    match invariants::mostar(g) {
        Ok(v) => {
            *out = v;
            MostarOk
        }
        Err(e) => graph_error_status(&e),
    }
}

/// Albertson irregularity (defined for disconnected graphs too).
///
/// # Safety
/// Valid handle (or null) and valid `out`.
#[no_mangle]
pub unsafe extern "C" fn mostar_albertson_irregularity(
    handle: *const MostarGraph,
    out: *mut u64,
) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = invariants::albertson_irregularity(g);
    MostarOk
}

/// Total irregularity (defined for disconnected graphs too).
///
/// # Safety
/// Valid handle (or null) and valid `out`.
#[no_mangle]
pub unsafe extern "C" fn mostar_total_irregularity(
    handle: *const MostarGraph,
    out: *mut u64,
) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = invariants::total_irregularity(g);
    MostarOk
}

/// Fills `rows` with the per-edge contribution table. `capacity` is the
/// row capacity of `rows`; on return `written` holds the number of rows
/// the table needs. Returns `MostarBufferTooSmall` (after setting
/// `written`) when the capacity does not suffice.
///
/// # Safety
/// `rows` must point to `capacity` writable rows (or be null when
/// `capacity == 0`); `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mostar_edge_contributions(
    handle: *const MostarGraph,
    rows: *mut MostarEdgeContribution,
    capacity: usize,
    written: *mut usize,
) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), written.is_null()) else {
        return MostarNullArgument;
    };
    if rows.is_null() && capacity > 0 {
        return MostarNullArgument;
    }
    let needed = g.size() as usize;
    *written = needed;
    if capacity < needed {
        return MostarBufferTooSmall;
    }
    match invariants::edge_contribution_table(g) {
        Ok(table) => {
            for (i, row) in table.iter().enumerate() {
                *rows.add(i) = MostarEdgeContribution {
                    u: row.edge.0,
                    v: row.edge.1,
                    n_u: row.n_u,
                    n_v: row.n_v,
                    contribution: row.contribution,
                };
            }
            MostarOk
        }
        Err(e) => graph_error_status(&e),
    }
}

/// Renders the canonical edge-list text into `buf` (NUL-terminated).
/// `written` receives the required byte count including the terminator;
/// returns `MostarBufferTooSmall` when `capacity` does not suffice.
///
/// # Safety
/// `buf` must point to `capacity` writable bytes (or be null when
/// `capacity == 0`); `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mostar_graph_render(
    handle: *const MostarGraph,
    buf: *mut c_char,
    capacity: usize,
    written: *mut usize,
) -> MostarStatus {
    let (Some(g), false) = (borrow(handle), written.is_null()) else {
        return MostarNullArgument;
    };
    if buf.is_null() && capacity > 0 {
        return MostarNullArgument;
    }
    let text = edgelist::render(g);
    let needed = text.len() + 1;
    *written = needed;
    if capacity < needed {
        return MostarBufferTooSmall;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast(), text.len());
    *buf.add(text.len()) = 0;
    MostarOk
}

/// Corona product: one copy of `a`, `order(a)` copies of `b`.
///
/// # Safety
/// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_corona(
    a: *const MostarGraph,
    b: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(ga), Some(gb), false) = (borrow(a), borrow(b), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::corona(ga, gb));
    MostarOk
}

/// Cartesian product.
///
/// # Safety
/// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_cartesian(
    a: *const MostarGraph,
    b: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(ga), Some(gb), false) = (borrow(a), borrow(b), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::cartesian(ga, gb));
    MostarOk
}

/// Join: disjoint union plus all cross edges.
///
/// # Safety
/// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_join(
    a: *const MostarGraph,
    b: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(ga), Some(gb), false) = (borrow(a), borrow(b), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::join(ga, gb));
    MostarOk
}

/// Lexicographic product `a[b]`.
///
/// # Safety
/// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_lexicographic(
    a: *const MostarGraph,
    b: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(ga), Some(gb), false) = (borrow(a), borrow(b), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::lexicographic(ga, gb));
    MostarOk
}

/// Indu-Bala product: two joined copies with matched second factors.
///
/// # Safety
/// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_indu_bala(
    a: *const MostarGraph,
    b: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(ga), Some(gb), false) = (borrow(a), borrow(b), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::indu_bala(ga, gb));
    MostarOk
}

/// Disjoint union; ids of `b` are shifted by `order(a)`.
///
/// # Safety
/// Both handles must be valid (see [`mostar_graph_free`]) and `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_disjoint_union(
    a: *const MostarGraph,
    b: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(ga), Some(gb), false) = (borrow(a), borrow(b), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(mostar::graph::disjoint_union(ga, gb));
    MostarOk
}

/// Thorn graph: `m` pendant vertices on every vertex of `a`.
///
/// # Safety
/// Valid handle and out-pointer (see `mostar_graph_free`).
#[no_mangle]
pub unsafe extern "C" fn mostar_thorn(
    a: *const MostarGraph,
    m: u32,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(g), false) = (borrow(a), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::thorn(g, m));
    MostarOk
}

/// Subdivision: one inserted vertex per edge.
///
/// # Safety
/// Valid handle and out-pointer (see `mostar_graph_free`).
#[no_mangle]
pub unsafe extern "C" fn mostar_subdivision(
    a: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(g), false) = (borrow(a), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::subdivision(g));
    MostarOk
}

/// Subdivision vertex-edge join of `a` with `b` (joined to primary
/// vertices) and `c` (joined to inserted vertices). `b` and `c` may each
/// be null for the one-sided joins.
///
/// # Safety
/// Non-null handles must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mostar_sve_join(
    a: *const MostarGraph,
    b: *const MostarGraph,
    c: *const MostarGraph,
    out: *mut *mut MostarGraph,
) -> MostarStatus {
    let (Some(g), false) = (borrow(a), out.is_null()) else {
        return MostarNullArgument;
    };
    *out = MostarGraph::boxed(operators::sve_join(g, borrow(b), borrow(c)));
    MostarOk
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn build(order: u32, edges: &[u32]) -> *mut MostarGraph {
        let mut out = ptr::null_mut();
        let status = mostar_graph_build(order, edges.as_ptr(), edges.len() / 2, &mut out);
        assert_eq!(status, MostarOk);
        out
    }

    #[test]
    fn build_compute_free() {
        unsafe {
            let p4 = build(4, &[0, 1, 1, 2, 2, 3]);
            assert_eq!(mostar_graph_order(p4), 4);
            assert_eq!(mostar_graph_size(p4), 3);
            let mut mo = 0u64;
            assert_eq!(mostar_index(p4, &mut mo), MostarOk);
            assert_eq!(mo, 4);
            let mut irr = 0u64;
            assert_eq!(mostar_albertson_irregularity(p4, &mut irr), MostarOk);
            assert_eq!(irr, 2);
            mostar_graph_free(p4);
        }
    }

    #[test]
    fn error_codes() {
        unsafe {
            let mut out = ptr::null_mut();
            assert_eq!(
                mostar_graph_build(3, [0u32, 0].as_ptr(), 1, &mut out),
                MostarSelfLoop
            );
            assert!(out.is_null());
            assert_eq!(
                mostar_graph_build(2, [0u32, 5].as_ptr(), 1, &mut out),
                MostarVertexOutOfRange
            );
            assert_eq!(
                mostar_graph_build(0, ptr::null(), 0, &mut out),
                MostarInvalidArgument
            );
            assert_eq!(
                mostar_graph_build(2, ptr::null(), 0, ptr::null_mut()),
                MostarNullArgument
            );

            let disc = build(4, &[0, 1, 2, 3]);
            let mut mo = 0u64;
            assert_eq!(mostar_index(disc, &mut mo), MostarDisconnected);
            let mut connected = true;
            assert_eq!(mostar_graph_is_connected(disc, &mut connected), MostarOk);
            assert!(!connected);
            mostar_graph_free(disc);

            assert_eq!(mostar_index(ptr::null(), &mut mo), MostarNullArgument);
            mostar_graph_free(ptr::null_mut());
        }
    }

    #[test]
    fn generate_and_products() {
        unsafe {
            let name = CString::new("cycle").unwrap();
            let mut c5 = ptr::null_mut();
            assert_eq!(
                mostar_generate(name.as_ptr(), [5u32].as_ptr(), 1, &mut c5),
                MostarOk
            );
            let name = CString::new("complete").unwrap();
            let mut k1 = ptr::null_mut();
            assert_eq!(
                mostar_generate(name.as_ptr(), [1u32].as_ptr(), 1, &mut k1),
                MostarOk
            );

            let mut wheel = ptr::null_mut();
            assert_eq!(mostar_join(k1, c5, &mut wheel), MostarOk);
            let mut mo = 0u64;
            assert_eq!(mostar_index(wheel, &mut mo), MostarOk);
            assert_eq!(mo, 10);

            let bad = CString::new("nope").unwrap();
            let mut out = ptr::null_mut();
            assert_eq!(
                mostar_generate(bad.as_ptr(), ptr::null(), 0, &mut out),
                MostarBadFamily
            );

            let mut sub = ptr::null_mut();
            assert_eq!(mostar_subdivision(c5, &mut sub), MostarOk);
            assert_eq!(mostar_graph_order(sub), 10);

            let mut sve = ptr::null_mut();
            assert_eq!(mostar_sve_join(c5, k1, ptr::null(), &mut sve), MostarOk);
            assert_eq!(mostar_graph_order(sve), 11);

            for h in [c5, k1, wheel, sub, sve] {
                mostar_graph_free(h);
            }
        }
    }

    #[test]
    fn edge_table_and_render() {
        unsafe {
            let p3 = build(3, &[0, 1, 1, 2]);
            let mut needed = 0usize;
            assert_eq!(
                mostar_edge_contributions(p3, ptr::null_mut(), 0, &mut needed),
                MostarBufferTooSmall
            );
            assert_eq!(needed, 2);
            let mut rows = vec![
                MostarEdgeContribution {
                    u: 0,
                    v: 0,
                    n_u: 0,
                    n_v: 0,
                    contribution: 0
                };
                needed
            ];
            assert_eq!(
                mostar_edge_contributions(p3, rows.as_mut_ptr(), rows.len(), &mut needed),
                MostarOk
            );
            assert_eq!((rows[0].n_u, rows[0].n_v, rows[0].contribution), (1, 2, 1));

            let mut len = 0usize;
            assert_eq!(
                mostar_graph_render(p3, ptr::null_mut(), 0, &mut len),
                MostarBufferTooSmall
            );
            let mut buf = vec![0u8; len];
            assert_eq!(
                mostar_graph_render(p3, buf.as_mut_ptr().cast(), buf.len(), &mut len),
                MostarOk
            );
            let text = CStr::from_ptr(buf.as_ptr().cast()).to_str().unwrap();
            assert_eq!(text, "3 2\n0 1\n1 2\n");

            // and the text parses back
            let ctext = CString::new(text).unwrap();
            let mut back = ptr::null_mut();
            assert_eq!(mostar_graph_parse(ctext.as_ptr(), &mut back), MostarOk);
            assert_eq!(mostar_graph_order(back), 3);
            mostar_graph_free(back);
            mostar_graph_free(p3);
        }
    }

    #[test]
    fn version_is_static() {
        let v = mostar_version();
        assert!(!v.is_null());
        let s = unsafe { CStr::from_ptr(v) }.to_str().unwrap();
        assert_eq!(s, env!("CARGO_PKG_VERSION"));
    }
}

//! Property tests: structural invariants of graphs, the distance engine
//! against an independent Floyd–Warshall oracle, and invariance of the
//! index under relabeling.

use proptest::prelude::*;

use mostar::edgelist;
use mostar::graph::{disjoint_union, Graph};
use mostar::invariants::{
    albertson_irregularity, edge_contribution_table, mostar, total_irregularity,
};

/// A random simple graph: order 1..=12, each pair an independent coin.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e);
            Graph::build(n, edges).unwrap()
        })
    })
}

/// As above but with a random spanning tree added, so the result is
/// connected.
fn arb_connected() -> impl Strategy<Value = Graph> {
    (arb_graph(), any::<u64>()).prop_map(|(g, salt)| {
        let n = g.order();
        let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
        for v in 1..n {
            // attach v to an arbitrary earlier vertex
            let u = (salt.wrapping_mul(0x9E37_79B9_7F4A_7C15 ^ u64::from(v)) % u64::from(v)) as u32;
            edges.push((u, v));
        }
        Graph::build(n as usize, edges).unwrap()
    })
}

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
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn degree_sum_is_twice_size(g in arb_graph()) {
        let total: u64 = g.degrees().iter().map(|&d| u64::from(d)).sum();
        prop_assert_eq!(total, 2 * u64::from(g.size()));
    }

    #[test]
    fn adjacency_is_symmetric(g in arb_graph()) {
        for u in 0..g.order() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
                prop_assert!(g.has_edge(u, v) && g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn union_is_associative_up_to_relabeling(
        a in arb_graph(), b in arb_graph(), c in arb_graph()
    ) {
        let left = disjoint_union(&disjoint_union(&a, &b), &c);
        let right = disjoint_union(&a, &disjoint_union(&b, &c));
        prop_assert_eq!(left.order(), right.order());
        prop_assert_eq!(left.size(), right.size());
        let (mut dl, mut dr) = (left.degrees(), right.degrees());
        dl.sort_unstable();
        dr.sort_unstable();
        prop_assert_eq!(dl, dr);
    }

    #[test]
    fn distances_satisfy_matrix_invariants(g in arb_connected()) {
        let d = g.distances().unwrap();
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn distances_match_floyd_warshall(g in arb_connected()) {
        let bfs = g.distances().unwrap();
        let fw = floyd_warshall(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(u64::from(bfs.get(u, v)), fw[u as usize][v as usize]);
            }
        }
    }

    #[test]
    fn edge_contributions_are_bounded(g in arb_connected()) {
        let order = u64::from(g.order());
        for row in edge_contribution_table(&g).unwrap() {
            prop_assert!(row.n_u >= 1 && row.n_v >= 1);
            prop_assert!(row.n_u + row.n_v <= order);
            prop_assert_eq!(row.contribution, row.n_u.abs_diff(row.n_v));
        }
    }

    #[test]
    fn mostar_is_invariant_under_relabeling(
        (g, perm) in arb_connected().prop_flat_map(|g| {
            let n = g.order();
            let ids: Vec<u32> = (0..n).collect();
            (Just(g), Just(ids).prop_shuffle())
        })
    ) {
        let relabeled = Graph::build(
            perm.len(),
            g.edges().iter().map(|&(u, v)| (perm[u as usize], perm[v as usize])),
        ).unwrap();
        prop_assert_eq!(mostar(&relabeled).unwrap(), mostar(&g).unwrap());
    }

    #[test]
    fn total_irregularity_dominates_albertson(g in arb_graph()) {
        prop_assert!(total_irregularity(&g) >= albertson_irregularity(&g));
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph()) {
        let text = edgelist::render(&g);
        prop_assert_eq!(edgelist::parse(&text).unwrap(), g);
    }
}

use biclique_core::certify::{
    check_partition, partition_from_solution, solution_from_partition, verify_solution, Bipartition,
};
use biclique_core::fpt::FptSolver;
use biclique_core::graph::{find_forbidden, is_biclique, Graph, VertexSet};
use biclique_core::io::{parse_edge_list, write_edge_list};
use biclique_core::kernel::kernelize_bbc;
use biclique_core::oracle::{oracle_bbc, oracle_min_k, Oracle, OracleConfig};
use proptest::prelude::*;

/// Graph on `1..=max_n` vertices with each pair present independently.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

/// Connects the components of `g` with a path through their first vertices.
fn connect(mut g: Graph) -> Graph {
    let firsts: Vec<usize> = g
        .components(&g.vertices().clone())
        .iter()
        .map(|c| c.first().unwrap())
        .collect();
    for w in firsts.windows(2) {
        g.add_edge(w[0], w[1]).unwrap();
    }
    g
}

fn split(g: &Graph, mask: u32) -> Bipartition {
    let left: VertexSet = g
        .vertices()
        .iter()
        .filter(|&v| mask >> v & 1 == 1)
        .collect();
    Bipartition::new(left.clone(), g.vertices().difference(&left))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn components_partition_the_set(g in graph(10)) {
        let comps = g.components(g.vertices());
        let mut union = VertexSet::new();
        for c in &comps {
            prop_assert!(union.is_disjoint(c));
            union.union_with(c);
        }
        prop_assert_eq!(&union, g.vertices());
        prop_assert_eq!(g.sf_size(g.vertices()) == g.n() - 1, g.is_connected());
    }

    #[test]
    fn biclique_iff_no_forbidden_subgraph(g in graph(8)) {
        prop_assert_eq!(is_biclique(&g).is_some(), find_forbidden(&g).is_none());
    }

    #[test]
    fn partition_check_is_symmetric(g in graph(8), mask in any::<u32>(), k in 0usize..6, balanced in any::<bool>()) {
        let p = split(&g, mask);
        let a = check_partition(&g, &p, k, balanced).unwrap().is_valid();
        let b = check_partition(&g, &p.swapped(), k, balanced).unwrap().is_valid();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn valid_partitions_give_verified_solutions(g in graph(8).prop_map(connect), mask in any::<u32>(), balanced in any::<bool>()) {
        let p = split(&g, mask);
        let cost = g.sf_size(&p.left) + g.sf_size(&p.right);
        if check_partition(&g, &p, cost, balanced).unwrap().is_valid() {
            let s = solution_from_partition(&g, &p, balanced);
            prop_assert_eq!(s.edges.len(), cost);
            prop_assert!(verify_solution(&g, &s, cost));
            let back = partition_from_solution(&g, &s.edges).unwrap().unwrap();
            prop_assert!(check_partition(&g, &back, cost, false).unwrap().is_valid());
        }
    }

    #[test]
    fn solver_matches_oracle(g in graph(9).prop_map(connect), k in 0usize..5, balanced in any::<bool>()) {
        let (verdict, _) = FptSolver::default().solve(&g, k, balanced).unwrap();
        let expected = Oracle::new(OracleConfig::default()).decide(&g, k, balanced).unwrap().answer;
        prop_assert_eq!(verdict.is_yes(), expected);
        if let Some(c) = verdict.certificate() {
            prop_assert!(verify_solution(&g, &c.solution, k));
        }
    }

    #[test]
    fn answers_are_monotone_in_k(g in graph(8).prop_map(connect), balanced in any::<bool>()) {
        let min = oracle_min_k(&g, balanced).unwrap();
        let oracle = Oracle::new(OracleConfig::default());
        for k in 0..g.n() {
            let yes = oracle.decide(&g, k, balanced).unwrap().answer;
            prop_assert_eq!(yes, min.is_some_and(|m| m <= k));
        }
    }

    #[test]
    fn kernel_preserves_the_answer(g in graph(11).prop_map(connect), k in 0usize..4) {
        let st = kernelize_bbc(&g, k).unwrap();
        let (h, k2) = st.instance();
        prop_assert!(k2 <= k);
        prop_assert_eq!(oracle_bbc(&g, k).unwrap().answer, oracle_bbc(&h, k2).unwrap().answer);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}

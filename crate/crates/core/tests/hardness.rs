mod common;

use common::*;
use proptest::prelude::*;
use trienum::hardness::{build_gp_gadget, verify_gadget};
use trienum::oracle::enumerate_edge_intersect;
use trienum::{Graph, Triangle};

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        graph_from_pairs(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
    })
}

fn check(g: &Graph) {
    let gg = build_gp_gadget(g);
    let report = verify_gadget(&gg, g);
    assert!(report.all_ok(), "{g:?}\n{report}");
    // every gadget triangle uses each copy once and projects to an input
    // triangle; every input triangle lifts in all orientations
    let input = enumerate_edge_intersect(g);
    let lifted: Vec<Triangle> = enumerate_edge_intersect(&gg.g_prime)
        .iter()
        .map(|t| gg.project(t).expect("one vertex per copy"))
        .collect();
    assert_eq!(lifted.len(), 6 * input.len());
    assert!(lifted.iter().all(|t| input.iter().any(|s| s == t)));
}

#[test]
fn every_graph_up_to_six_vertices() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            check(&g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_graphs_up_to_eight_vertices(g in arb_graph(8)) {
        check(&g);
    }

    #[test]
    fn larger_random_graphs(g in arb_graph(30)) {
        let report = verify_gadget(&build_gp_gadget(&g), &g);
        prop_assert!(report.all_ok(), "{}", report);
    }
}

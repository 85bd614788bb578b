//! Instance families, solver runners and kernel checks shared by the
//! integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;
use trienum::cliquewidth::{cotree_to_kexpression, cw_enumerate};
use trienum::cotree::{build_cotree, is_cograph};
use trienum::deletion::{greedy_ddeg_deletion_set, DeletionSet};
use trienum::kernels::{dtdd_kernelize, dtdd_maxdeg_kernelize, fes_kernelize, EnumAdviceKernel};
use trienum::oracle::{enumerate_edge_intersect, enumerate_triples};
use trienum::solvers::*;
use trienum::triangle::within_triangle_bound;
use trienum::{generate, Error, Graph, TriangleSet, Vertex};

pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

impl Instance {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }
}

pub fn graph_from_pairs(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    let edges: BTreeSet<(Vertex, Vertex)> = pairs
        .into_iter()
        .filter(|&(u, v)| u != v)
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edges(n, edges).expect("deduplicated simple edges")
}

/// Arbitrary simple graphs on at most `max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = if n < 2 {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec((0..n, 0..n), 0..=n * (n - 1) / 2).boxed()
        };
        pairs.prop_map(move |p| graph_from_pairs(n, p))
    })
}

pub fn gnp_instances<R: Rng>(count: usize, rng: &mut R) -> Vec<Instance> {
    let ps = [0.1, 0.3, 0.7];
    (0..count)
        .map(|i| {
            let n = rng.gen_range(5..=60);
            let p = ps[i % 3];
            Instance::new(format!("gnp(n={n},p={p})#{i}"), generate::gnp(n, p, rng))
        })
        .collect()
}

pub fn structured_instances<R: Rng>(rng: &mut R) -> Vec<Instance> {
    let mut out = vec![
        Instance::new("empty0", Graph::empty(0)),
        Instance::new("empty5", Graph::empty(5)),
        Instance::new("K4", generate::complete(4)),
        Instance::new("K7", generate::complete(7)),
        Instance::new("K33", generate::complete_bipartite(3, 3)),
        Instance::new("petersen", generate::petersen()),
        Instance::new("C5", generate::cycle(5)),
        Instance::new("star9", generate::star(9)),
    ];
    for k in 0..=12 {
        let n = rng.gen_range(5..=60);
        out.push(Instance::new(
            format!("tree+{k}"),
            generate::tree_with_chords(n, k, rng),
        ));
    }
    for rim in 3..=12 {
        out.push(Instance::new(format!("wheel{rim}"), generate::wheel(rim)));
    }
    for i in 0..20 {
        let n = rng.gen_range(2..=40);
        out.push(Instance::new(
            format!("cograph#{i}"),
            generate::random_cograph(n, rng),
        ));
    }
    for i in 0..20 {
        let n = rng.gen_range(2..=50);
        out.push(Instance::new(
            format!("interval#{i}"),
            generate::random_interval(n, 100, 20, rng),
        ));
    }
    for i in 0..20 {
        let (a, b) = (rng.gen_range(1..=20), rng.gen_range(1..=20));
        let apexes = rng.gen_range(0..=4);
        out.push(Instance::new(
            format!("apex{apexes}-bipartite#{i}"),
            generate::apex_over_bipartite(a, b, 0.3, apexes, rng),
        ));
    }
    for i in 0..20 {
        let leaves = rng.gen_range(1..=40);
        let width = rng.gen_range(1..=4);
        let e = generate::random_kexpression(leaves, width, rng);
        out.push(Instance::new(format!("kexpr(w={width})#{i}"), e.evaluate()));
    }
    for i in 0..10 {
        let n = rng.gen_range(5..=60);
        let d = rng.gen_range(1..=5);
        let g = generate::random_degenerate(n, d, rng);
        out.push(Instance::new(
            format!("degenerate{d}+apex#{i}"),
            generate::with_apexes(&g, 2),
        ));
    }
    out
}

/// Vertices outside a greedily grown induced subgraph in a hereditary class.
pub fn greedy_deletion(g: &Graph, in_class: impl Fn(&Graph) -> bool) -> Vec<Vertex> {
    let mut keep = vec![false; g.vertex_count()];
    for v in g.vertices() {
        keep[v] = true;
        if !in_class(&g.induced_subgraph(&keep).graph) {
            keep[v] = false;
        }
    }
    g.vertices().filter(|&v| !keep[v]).collect()
}

/// Deletion set to `d`-degenerate graphs for the smallest `d` whose greedy
/// set has at most `limit` vertices.
pub fn small_deletion_set(g: &Graph, limit: usize) -> DeletionSet {
    (0..)
        .map(|d| greedy_ddeg_deletion_set(g, d))
        .find(|ds| ds.len() <= limit)
        .expect("d = degeneracy gives the empty set")
}

/// Every solver that applies to `g`, with deletion sets computed greedily.
pub fn solver_results(g: &Graph) -> Vec<(&'static str, Result<TriangleSet, Error>)> {
    let ds = small_deletion_set(g, 8);
    let mut out = vec![
        ("degeneracy", Ok(solve_degeneracy(g))),
        ("edge-intersect", Ok(enumerate_edge_intersect(g))),
        ("fes", Ok(solve_fes(g))),
        ("dtdd", solve_dtdd(g, &ds)),
        ("dtdd-maxdeg", solve_dtdd_maxdeg(g, &ds)),
        (
            "bipartite-deletion",
            solve_bipartite_deletion(g, &greedy_deletion(g, trienum::bipartite::is_bipartite)),
        ),
        (
            "chordal-deletion",
            solve_chordal_deletion(g, &greedy_deletion(g, trienum::chordal::is_chordal)),
        ),
        ("cograph-deletion", solve_cograph(g)),
    ];
    if is_cograph(g) {
        let tree = build_cotree(g).expect("cograph");
        out.push(("cotree", cotree_dp(&tree, g)));
        if let Some((e, leaves)) = cotree_to_kexpression(&tree) {
            let t = cw_enumerate(&e)
                .into_iter()
                .map(|t| t.map(|x| leaves[x]))
                .collect();
            out.push(("cliquewidth", Ok(t)));
        }
    }
    out
}

/// Compares every applicable solver with the brute-force oracle and checks
/// the global count bound.
pub fn check_solvers(g: &Graph) -> Result<(), String> {
    let oracle = enumerate_triples(g).map_err(|e| e.to_string())?;
    if !within_triangle_bound(oracle.len(), g.edge_count()) {
        return Err(format!(
            "{} triangles exceed m^1.5 for m={}",
            oracle.len(),
            g.edge_count()
        ));
    }
    for (name, result) in solver_results(g) {
        let got = result.map_err(|e| format!("{name}: {e}"))?;
        if !got.set_eq(&oracle) {
            let (extra, missing) = got.symmetric_difference(&oracle, 10);
            return Err(format!("{name}: extra {extra:?} missing {missing:?}"));
        }
    }
    Ok(())
}

/// Size bounds plus the enum-advice axioms: the kernel has a triangle iff
/// the input has one, expansions are pairwise disjoint and cover exactly
/// the triangles of the input.
pub fn check_kernel(g: &Graph, kernel: &EnumAdviceKernel) -> Result<(), String> {
    if let Some(c) = kernel.checks.iter().find(|c| !c.holds()) {
        return Err(format!("{} = {} exceeds {}", c.name, c.actual, c.bound));
    }
    let oracle = enumerate_triples(g).map_err(|e| e.to_string())?;
    let in_kernel = enumerate_edge_intersect(&kernel.graph);
    if in_kernel.is_empty() != oracle.is_empty() {
        return Err(format!(
            "kernel has {} triangles, input has {}",
            in_kernel.len(),
            oracle.len()
        ));
    }
    let mut expanded = TriangleSet::new();
    for t in in_kernel.iter() {
        expanded.extend(kernel.expand(t));
    }
    if !expanded.is_duplicate_free() {
        return Err("expansions overlap".into());
    }
    if !expanded.set_eq(&oracle) {
        let (extra, missing) = expanded.symmetric_difference(&oracle, 10);
        return Err(format!("expansion: extra {extra:?} missing {missing:?}"));
    }
    Ok(())
}

/// The kernels that apply to `g`: feedback edges always, the two deletion
/// set kernels with a greedy set of at most `limit` vertices.
pub fn kernels_for(g: &Graph, limit: usize) -> Vec<(&'static str, EnumAdviceKernel)> {
    let ds = small_deletion_set(g, limit);
    vec![
        ("fes", fes_kernelize(g)),
        (
            "dtdd",
            dtdd_kernelize(g, &ds).expect("verified set within limit"),
        ),
        (
            "dtdd-maxdeg",
            dtdd_maxdeg_kernelize(g, &ds).expect("verified set"),
        ),
    ]
}

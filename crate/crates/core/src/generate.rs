//! Named graphs and random graph families.

use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashSet;

use crate::cliquewidth::{KExprBuilder, KExpression, Label};
use crate::graph::{edge, Edge, Graph, Vertex};

fn build(n: usize, edges: impl IntoIterator<Item = Edge>) -> Graph {
    Graph::from_edges_dedup(n, edges)
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// `C_n` on `0..n`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    build(n, (0..n).map(|v| edge(v, (v + 1) % n)))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Hub 0 joined to the cycle `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    assert!(rim >= 3);
    let spokes = (1..=rim).map(|v| (0, v));
    let ring = (0..rim).map(|i| edge(1 + i, 1 + (i + 1) % rim));
    build(rim + 1, spokes.chain(ring))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| edge(i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| edge(5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Disjoint union; vertices of `h` are shifted by `g.vertex_count()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.vertex_count();
    build(
        off + h.vertex_count(),
        g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))),
    )
}

/// Adds `apexes` new vertices, each adjacent to every old vertex.
pub fn with_apexes(g: &Graph, apexes: usize) -> Graph {
    let n = g.vertex_count();
    let extra = (n..n + apexes).flat_map(|a| (0..n).map(move |v| (v, a)));
    build(n + apexes, g.edges().chain(extra))
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Uniform random recursive tree: vertex `v > 0` attaches to a random
/// earlier vertex.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    build(n, (1..n).map(|v| (rng.gen_range(0..v), v)))
}

/// A random tree plus up to `chords` extra edges, so the feedback edge
/// number is at most `chords`.
pub fn tree_with_chords<R: Rng>(n: usize, chords: usize, rng: &mut R) -> Graph {
    let mut edges: HashSet<Edge> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let possible = n * n.saturating_sub(1) / 2;
    let target = (edges.len() + chords).min(possible);
    while edges.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert(edge(u, v));
        }
    }
    let mut edges: Vec<Edge> = edges.into_iter().collect();
    edges.sort_unstable();
    build(n, edges)
}

/// Every vertex `v` picks `min(v, d)` distinct earlier neighbors, so the
/// graph is `d`-degenerate.
pub fn random_degenerate<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    let mut earlier: Vec<Vertex> = Vec::new();
    for v in 0..n {
        for &u in earlier.choose_multiple(rng, d.min(v)) {
            edges.push((u, v));
        }
        earlier.push(v);
    }
    build(n, edges)
}

/// Random cograph from a random binary cotree.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut vertices: Vec<Vertex> = (0..n).collect();
    vertices.shuffle(rng);
    let mut edges = Vec::new();
    let mut work = vec![vertices];
    while let Some(set) = work.pop() {
        if set.len() <= 1 {
            continue;
        }
        let cut = rng.gen_range(1..set.len());
        let (left, right) = set.split_at(cut);
        if rng.gen_bool(0.5) {
            for &x in left {
                for &y in right {
                    edges.push(edge(x, y));
                }
            }
        }
        work.push(left.to_vec());
        work.push(right.to_vec());
    }
    build(n, edges)
}

/// Intersection graph of `n` random intervals in `[0, span)`.
pub fn random_interval<R: Rng>(n: usize, span: u32, max_len: u32, rng: &mut R) -> Graph {
    let intervals: Vec<(u32, u32)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..span);
            (a, a + rng.gen_range(0..=max_len))
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = intervals[u];
            let (c, d) = intervals[v];
            if a <= d && c <= b {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Random bipartite graph on sides `a` and `b` with edge probability `p`,
/// plus `apexes` vertices adjacent to everything before them.
pub fn apex_over_bipartite<R: Rng>(
    a: usize,
    b: usize,
    p: f64,
    apexes: usize,
    rng: &mut R,
) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    with_apexes(&build(a + b, edges), apexes)
}

/// Random k-expression with `leaves` vertices and labels in `1..=width`.
/// Each union is followed by up to three random joins and relabelings.
pub fn random_kexpression<R: Rng>(leaves: usize, width: Label, rng: &mut R) -> KExpression {
    assert!(leaves >= 1 && width >= 1);
    let mut b = KExprBuilder::new();
    let mut parts: Vec<usize> = (0..leaves)
        .map(|_| b.vertex(rng.gen_range(1..=width)))
        .collect();
    while parts.len() > 1 {
        let i = rng.gen_range(0..parts.len() - 1);
        let right = parts.remove(i + 1);
        let mut node = b.union(parts[i], right);
        for _ in 0..rng.gen_range(0..=3) {
            let x = rng.gen_range(1..=width);
            let y = rng.gen_range(1..=width);
            if x == y {
                continue;
            }
            node = if rng.gen_bool(0.7) {
                b.eta(x, y, node)
            } else {
                b.rho(x, y, node)
            };
        }
        parts[i] = node;
    }
    b.finish(parts[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::is_bipartite;
    use crate::degeneracy::degeneracy;
    use crate::forest::feedback_edge_number;
    use rand::SeedableRng;

    #[test]
    fn named_graph_sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(wheel(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
    }

    #[test]
    fn random_families_have_their_structure() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        assert_eq!(feedback_edge_number(&random_tree(30, &mut rng)), 0);
        assert!(feedback_edge_number(&tree_with_chords(30, 4, &mut rng)) <= 4);
        assert!(degeneracy(&random_degenerate(50, 3, &mut rng)) <= 3);
        assert!(is_bipartite(&apex_over_bipartite(5, 6, 0.5, 0, &mut rng)));
    }
}

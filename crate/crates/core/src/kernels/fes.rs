//! Kernel for the feedback edge number.

use std::collections::HashSet;

use super::{kernel_graph, Advice, EnumAdviceKernel, SizeCheck, TriangleAdvice};
use crate::error::Error;
use crate::forest::{feedback_edge_number, feedback_edge_set, rooted_forest_without};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::triangle::{Triangle, TriangleSet};

/// Lists the triangles with at least one edge outside `f`, each once.
///
/// With `p` the parent map of the forest `g - f`, every such triangle has
/// the form `{u, v, p(v)}`. Triangles with two edges in `f` are found from
/// the vertex both of those edges share; triangles with one edge `{u, v}`
/// in `f` satisfy `p(u) = p(v)`, `p(p(u)) = v` or `p(p(v)) = u`. There are
/// at most `2|f|` of them.
pub fn lemma_festri(g: &Graph, f: &[Edge]) -> Result<TriangleSet, Error> {
    let mut f: Vec<Edge> = f.iter().map(|&(u, v)| edge(u, v)).collect();
    f.sort_unstable();
    f.dedup();
    let in_f: HashSet<Edge> = f.iter().copied().collect();
    let forest = rooted_forest_without(g, &in_f)?;
    let p = |v: Vertex| forest.parent[v];
    let mut out = TriangleSet::new();

    // two edges in F, both at v
    let mut marked = vec![false; g.vertex_count()];
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            if in_f.contains(&edge(v, w)) {
                marked[w] = true;
            }
        }
        for &w in g.neighbors(v) {
            if let Some(pw) = p(w) {
                if marked[w] && marked[pw] {
                    out.push(Triangle::new(v, w, pw));
                }
            }
        }
        for &w in g.neighbors(v) {
            marked[w] = false;
        }
    }

    // exactly one edge in F
    for &(u, v) in &f {
        let (pu, pv) = (p(u), p(v));
        if let Some(w) = pu.filter(|_| pu == pv) {
            out.push(Triangle::new(u, v, w));
        } else if let Some(pu) = pu.filter(|&x| p(x) == Some(v)) {
            out.push(Triangle::new(u, pu, v));
        } else if let Some(pv) = pv.filter(|&x| p(x) == Some(u)) {
            out.push(Triangle::new(v, pv, u));
        }
    }
    Ok(out)
}

/// Kernel with at most `2k + 3` vertices and `k + 3` edges, where `k` is
/// the feedback edge number.
///
/// The kernel keeps the feedback edges and their endpoints. All other
/// triangles go into the advice, released by a fresh triangle that exists
/// only when the advice is nonempty.
pub fn fes_kernelize(g: &Graph) -> EnumAdviceKernel {
    let f = feedback_edge_set(g);
    let k = f.len();
    let triangles =
        lemma_festri(g, &f).expect("a spanning-forest complement is a feedback edge set");

    let mut kept: Vec<Vertex> = f.iter().flat_map(|&(u, v)| [u, v]).collect();
    kept.sort_unstable();
    kept.dedup();
    let with_sentinel = !triangles.is_empty();
    let kg = kernel_graph(g, &kept, f.iter().copied(), with_sentinel, with_sentinel);
    let sentinel = kg.sentinel_ids.map(|[a, b, c]| Triangle::new(a, b, c));

    let checks = vec![
        SizeCheck {
            name: "vertices",
            actual: kg.graph.vertex_count(),
            bound: 2 * k + 3,
        },
        SizeCheck {
            name: "edges",
            actual: kg.graph.edge_count(),
            bound: k + 3,
        },
        SizeCheck {
            name: "advice",
            actual: triangles.len(),
            bound: 2 * k,
        },
    ];
    EnumAdviceKernel {
        param_out: feedback_edge_number(&kg.graph),
        graph: kg.graph,
        origin: kg.origin,
        advice: Advice::Triangles(TriangleAdvice { triangles }),
        param_in: k,
        sentinel,
        checks,
    }
}

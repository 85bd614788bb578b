//! Kernels for a vertex set `D` whose removal leaves a `d`-degenerate graph.

use std::collections::HashMap;

use super::{kernel_graph, Advice, DtddAdvice, EnumAdviceKernel, SizeCheck, TriangleAdvice};
use crate::degeneracy::{degeneracy, degeneracy_ordering};
use crate::deletion::DeletionSet;
use crate::error::Error;
use crate::graph::{Edge, Graph, Vertex};
use crate::modules::modules_wrt;
use crate::solvers::solve_degeneracy;
use crate::triangle::{Triangle, TriangleSet};

/// Largest `|D|` the module kernel accepts; its size grows as `2^|D|`.
pub const DTDD_LIMIT: usize = 20;

fn membership(n: usize, d: &[Vertex]) -> Vec<bool> {
    let mut in_d = vec![false; n];
    for &v in d {
        in_d[v] = true;
    }
    in_d
}

/// Kernel on `D ∪ N(D)` for the parameter `|D|` plus the maximum degree
/// `Δ_D` inside `D`.
///
/// Triangles of `g - D` with a vertex that has no neighbor in `D` are moved
/// into the advice; every other triangle lies inside `D ∪ N(D)` and stays in
/// the kernel. A fresh triangle releasing the advice is added when the
/// advice is nonempty, which keeps the kernel triangle-free exactly when the
/// input is.
pub fn dtdd_maxdeg_kernelize(g: &Graph, ds: &DeletionSet) -> Result<EnumAdviceKernel, Error> {
    ds.verify(g)?;
    let n = g.vertex_count();
    let d_set = ds.vertices();
    let in_d = membership(n, d_set);
    let mut near_d = in_d.clone();
    for &v in d_set {
        for &w in g.neighbors(v) {
            near_d[w] = true;
        }
    }

    let rest = g.without_vertices(d_set);
    let triangles: TriangleSet = solve_degeneracy(&rest.graph)
        .iter()
        .map(|t| t.map(|x| rest.to_parent[x]))
        .filter(|t| t.vertices().iter().any(|&x| !near_d[x]))
        .collect();

    let kept: Vec<Vertex> = g.vertices().filter(|&v| near_d[v]).collect();
    let edges: Vec<Edge> = g.edges().filter(|&(u, v)| near_d[u] && near_d[v]).collect();
    let with_sentinel = !triangles.is_empty();
    let kg = kernel_graph(g, &kept, edges, with_sentinel, with_sentinel);
    let sentinel = kg.sentinel_ids.map(|[a, b, c]| Triangle::new(a, b, c));

    let k = d_set.len();
    let delta_d = d_set.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    let d = degeneracy(&rest.graph);
    let checks = vec![
        SizeCheck {
            name: "vertices",
            actual: kg.graph.vertex_count(),
            bound: k * (delta_d + 1) + 3,
        },
        SizeCheck {
            name: "edges",
            actual: kg.graph.edge_count(),
            bound: k * delta_d + k * delta_d * d + 3,
        },
    ];
    Ok(EnumAdviceKernel {
        // the sentinel triangle needs two of its vertices in the set
        param_out: if with_sentinel { k + 2 } else { k },
        graph: kg.graph,
        origin: kg.origin,
        advice: Advice::Triangles(TriangleAdvice { triangles }),
        param_in: k,
        sentinel,
        checks,
    })
}

/// All triangles with at most one vertex in `D`: those of `g - D` plus, for
/// each `v ∈ D`, the pairs `u, w ∈ N(v) \ D` where `w` is a later neighbor of
/// `u` in the degeneracy ordering of `g - D`.
fn triangles_with_at_most_one_in_d(g: &Graph, d_set: &[Vertex], in_d: &[bool]) -> TriangleSet {
    let rest = g.without_vertices(d_set);
    let lift = |x: Vertex| rest.to_parent[x];
    let mut out: TriangleSet = solve_degeneracy(&rest.graph)
        .iter()
        .map(|t| t.map(lift))
        .collect();

    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in rest.to_parent.iter().enumerate() {
        local[v] = i;
    }
    let order = degeneracy_ordering(&rest.graph);
    let mut marked = vec![false; rest.graph.vertex_count()];
    for &v in d_set {
        let outside = || {
            g.neighbors(v)
                .iter()
                .filter(|&&u| !in_d[u])
                .map(|&u| local[u])
        };
        for u in outside() {
            marked[u] = true;
        }
        for u in outside() {
            for w in order.later_neighbors(&rest.graph, u) {
                if marked[w] {
                    out.push(Triangle::new(v, lift(u), lift(w)));
                }
            }
        }
        for u in outside() {
            marked[u] = false;
        }
    }
    out
}

/// Kernel with at most `|D| + 2^|D| + 3` vertices.
///
/// Triangles with at most one vertex in `D` go into the advice. After that
/// only edges touching `D` matter, so the vertices outside `D` are grouped
/// by their neighborhood in `D` and each group is kept as one
/// representative. Groups with no neighbor in `D` cannot be in any remaining
/// triangle and are dropped. Three fresh vertices form a triangle releasing
/// the advice when it is nonempty.
pub fn dtdd_kernelize(g: &Graph, ds: &DeletionSet) -> Result<EnumAdviceKernel, Error> {
    let d_set = ds.vertices();
    if d_set.len() > DTDD_LIMIT {
        return Err(Error::ParameterTooLarge {
            size: d_set.len(),
            limit: DTDD_LIMIT,
        });
    }
    ds.verify(g)?;
    let n = g.vertex_count();
    let in_d = membership(n, d_set);
    let t1 = triangles_with_at_most_one_in_d(g, d_set, &in_d);

    let touching: Vec<Edge> = g.edges().filter(|&(u, v)| in_d[u] || in_d[v]).collect();
    let reduced =
        Graph::from_edges(n, touching.iter().copied()).expect("subgraph of a simple graph");
    let modules: Vec<_> = modules_wrt(&reduced, d_set)?
        .into_iter()
        .filter(|m| !m.d_neighbors.is_empty())
        .collect();

    let mut is_rep = vec![false; n];
    let mut module_of = HashMap::with_capacity(modules.len());
    for (i, m) in modules.iter().enumerate() {
        is_rep[m.representative] = true;
        module_of.insert(m.representative, i);
    }
    let kept: Vec<Vertex> = g.vertices().filter(|&v| in_d[v] || is_rep[v]).collect();
    let edges = touching
        .into_iter()
        .filter(|&(u, v)| (in_d[u] || is_rep[u]) && (in_d[v] || is_rep[v]));
    let kg = kernel_graph(g, &kept, edges, true, !t1.is_empty());
    let sentinel_ids = kg.sentinel_ids.expect("sentinel vertices are always added");
    let sentinel =
        (!t1.is_empty()).then(|| Triangle::new(sentinel_ids[0], sentinel_ids[1], sentinel_ids[2]));

    let k = d_set.len();
    let checks = vec![SizeCheck {
        name: "vertices",
        actual: kg.graph.vertex_count(),
        bound: k + (1usize << k) + 3,
    }];
    Ok(EnumAdviceKernel {
        graph: kg.graph,
        origin: kg.origin,
        advice: Advice::Dtdd(DtddAdvice {
            t1,
            modules,
            sentinel_ids,
            module_of,
        }),
        param_in: k,
        // every kernel edge touches D or one of two sentinel vertices
        param_out: k + 2,
        sentinel,
        checks,
    })
}

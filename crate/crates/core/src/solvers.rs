//! End-to-end triangle enumeration algorithms.

use crate::bipartite::two_coloring;
use crate::chordal::perfect_elimination_ordering;
use crate::cotree::{build_cotree, Cotree, CotreeNode};
use crate::degeneracy::degeneracy_ordering;
use crate::deletion::{cograph_deletion_set, lift_error, DeletionSet};
use crate::error::Error;
use crate::graph::{Edge, Graph, Vertex};
use crate::kernels::{dtdd_kernelize, fes_kernelize};
use crate::shared::SharedList;
use crate::triangle::{Triangle, TriangleSet};

/// Chiba–Nishizeki style listing in `O(m·d)` time: orient every edge
/// forward in a degeneracy ordering, and for each vertex `v` mark its later
/// neighbors and look for marked later neighbors of each of them.
pub fn solve_degeneracy(g: &Graph) -> TriangleSet {
    let order = degeneracy_ordering(g);
    let forward = order.oriented_adjacency(g);
    let mut marked = vec![false; g.vertex_count()];
    let mut out = TriangleSet::new();
    for &v in &order.order {
        for &u in &forward[v] {
            marked[u] = true;
        }
        for &u in &forward[v] {
            for &w in &forward[u] {
                if marked[w] {
                    out.push(Triangle::new(v, u, w));
                }
            }
        }
        for &u in &forward[v] {
            marked[u] = false;
        }
    }
    out
}

/// Feedback-edge kernel, then edge-intersect on the kernel, then expansion.
pub fn solve_fes(g: &Graph) -> TriangleSet {
    fes_kernelize(g).enumerate()
}

/// Module kernel for a deletion set to `d`-degenerate graphs, then
/// enumeration of the kernel and expansion.
pub fn solve_dtdd(g: &Graph, ds: &DeletionSet) -> Result<TriangleSet, Error> {
    Ok(dtdd_kernelize(g, ds)?.enumerate())
}

/// Two steps: triangles of `g - D` by [`solve_degeneracy`], then the
/// triangles meeting `D` by scanning neighbor pairs of each `u ∈ D`.
///
/// The second step uses the order with `D` first (ascending ids) followed
/// by the rest (ascending ids), and keeps `{u, v, w}` only when
/// `u < v < w` in that order, so each triangle is listed from its first
/// vertex only.
pub fn solve_dtdd_maxdeg(g: &Graph, ds: &DeletionSet) -> Result<TriangleSet, Error> {
    ds.verify(g)?;
    let d_set = ds.vertices();
    let rest = g.without_vertices(d_set);
    let mut out: TriangleSet = solve_degeneracy(&rest.graph)
        .iter()
        .map(|t| t.map(|x| rest.to_parent[x]))
        .collect();

    let n = g.vertex_count();
    let mut rank = vec![0usize; n];
    let mut next = 0;
    for &v in d_set {
        rank[v] = next;
        next += 1;
    }
    let mut in_d = vec![false; n];
    for &v in d_set {
        in_d[v] = true;
    }
    for v in g.vertices().filter(|&v| !in_d[v]) {
        rank[v] = next;
        next += 1;
    }

    for &u in d_set {
        let nu = g.neighbors(u);
        for (i, &v) in nu.iter().enumerate() {
            for &w in &nu[i + 1..] {
                let (v, w) = if rank[v] < rank[w] { (v, w) } else { (w, v) };
                if rank[u] < rank[v] && g.has_edge(v, w) {
                    out.push(Triangle::new(u, v, w));
                }
            }
        }
    }
    Ok(out)
}

/// Triangles with at least one vertex in `k`, each listed once.
///
/// For every `v ∈ k` (ascending) the neighbors of `v` are marked and every
/// edge with two marked endpoints closes a triangle; it is kept only when
/// `v` is the smallest vertex of `k` in it. `O(m·|k| + n)` time.
pub fn triangles_touching(g: &Graph, k: &[Vertex]) -> TriangleSet {
    let n = g.vertex_count();
    let mut in_k = vec![false; n];
    for &v in k {
        in_k[v] = true;
    }
    let mut sorted: Vec<Vertex> = k.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    let edges: Vec<Edge> = g.edges().collect();
    let mut marked = vec![false; n];
    let mut out = TriangleSet::new();
    for &v in &sorted {
        for &w in g.neighbors(v) {
            marked[w] = true;
        }
        for &(a, b) in &edges {
            if marked[a] && marked[b] && (!in_k[a] || v < a) && (!in_k[b] || v < b) {
                out.push(Triangle::new(a, b, v));
            }
        }
        for &w in g.neighbors(v) {
            marked[w] = false;
        }
    }
    out
}

/// Combines [`triangles_touching`] for `k` with a class solver `inner` run
/// on `g - k`. `inner` sees the subgraph's own ids; its triangles and
/// errors are translated back to the ids of `g`.
pub fn solve_with_deletion_set<F>(g: &Graph, k: &[Vertex], inner: F) -> Result<TriangleSet, Error>
where
    F: FnOnce(&Graph) -> Result<TriangleSet, Error>,
{
    let rest = g.without_vertices(k);
    let inside = inner(&rest.graph).map_err(|e| lift_error(e, &rest.to_parent))?;
    let mut out = triangles_touching(g, k);
    let touching = out.len();
    out.extend(inside.iter().map(|t| t.map(|x| rest.to_parent[x])));
    debug_assert_eq!(
        out.sorted().windows(2).filter(|w| w[0] == w[1]).count(),
        0,
        "the two phases overlap"
    );
    debug_assert_eq!(touching + inside.len(), out.len());
    Ok(out)
}

/// Bipartite graphs have no triangles, so only triangles meeting `k` exist.
pub fn enumerate_bipartite(g: &Graph) -> Result<TriangleSet, Error> {
    two_coloring(g)?;
    Ok(TriangleSet::new())
}

/// Walks a perfect elimination ordering; each vertex forms a triangle with
/// every pair of its not yet processed neighbors, which form a clique.
pub fn enumerate_chordal(g: &Graph) -> Result<TriangleSet, Error> {
    let peo = perfect_elimination_ordering(g)?;
    let mut processed = vec![false; g.vertex_count()];
    let mut out = TriangleSet::new();
    let mut later = Vec::new();
    for v in peo {
        later.clear();
        later.extend(g.neighbors(v).iter().copied().filter(|&w| !processed[w]));
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                out.push(Triangle::new(v, x, y));
            }
        }
        processed[v] = true;
    }
    Ok(out)
}

/// Triangles of a cograph from its cotree.
pub fn enumerate_cograph(g: &Graph) -> Result<TriangleSet, Error> {
    let tree = build_cotree(g)?;
    cotree_dp(&tree, g)
}

pub fn solve_bipartite_deletion(g: &Graph, k: &[Vertex]) -> Result<TriangleSet, Error> {
    solve_with_deletion_set(g, k, enumerate_bipartite)
}

pub fn solve_chordal_deletion(g: &Graph, k: &[Vertex]) -> Result<TriangleSet, Error> {
    solve_with_deletion_set(g, k, enumerate_chordal)
}

/// Deletes whole induced P4s until a cograph is left, then runs the cotree
/// dynamic program on the rest.
pub fn solve_cograph(g: &Graph) -> Result<TriangleSet, Error> {
    let k = cograph_deletion_set(g)?;
    solve_with_deletion_set(g, k.vertices(), enumerate_cograph)
}

/// Bottom-up over the cotree. A join node keeps its children's triangles
/// and adds every vertex of one side combined with every edge of the other;
/// a triangle is created only at the lowest node containing all three of
/// its vertices. Lists are shared, not copied.
pub fn cotree_dp(t: &Cotree, g: &Graph) -> Result<TriangleSet, Error> {
    let Some(root) = t.root else {
        return Ok(TriangleSet::new());
    };
    struct Tables {
        vertices: SharedList<Vertex>,
        edges: SharedList<Edge>,
        triangles: SharedList<Triangle>,
    }
    let mut tables: Vec<Option<Tables>> = (0..t.nodes.len()).map(|_| None).collect();
    for i in t.post_order() {
        let table = match t.node(i) {
            CotreeNode::Leaf(v) => {
                if v >= g.vertex_count() {
                    return Err(Error::TreeGraphMismatch(format!(
                        "leaf {v} is not a vertex"
                    )));
                }
                Tables {
                    vertices: SharedList::single(v),
                    edges: SharedList::default(),
                    triangles: SharedList::default(),
                }
            }
            CotreeNode::Union(a, b) => {
                let a = tables[a].take().expect("children come first");
                let b = tables[b].take().expect("children come first");
                Tables {
                    vertices: SharedList::new(Vec::new(), vec![a.vertices, b.vertices]),
                    edges: SharedList::new(Vec::new(), vec![a.edges, b.edges]),
                    triangles: SharedList::new(Vec::new(), vec![a.triangles, b.triangles]),
                }
            }
            CotreeNode::Join(a, b) => {
                let a = tables[a].take().expect("children come first");
                let b = tables[b].take().expect("children come first");
                let mut new_edges = Vec::with_capacity(a.vertices.len() * b.vertices.len());
                for &x in &a.vertices {
                    for &y in &b.vertices {
                        if !g.has_edge(x, y) {
                            return Err(Error::TreeGraphMismatch(format!(
                                "join needs edge {{{x}, {y}}}"
                            )));
                        }
                        new_edges.push((x, y));
                    }
                }
                let mut new_triangles = Vec::new();
                for (side, other) in [(&a, &b), (&b, &a)] {
                    for &x in &side.vertices {
                        for &(y, z) in &other.edges {
                            new_triangles.push(Triangle::new(x, y, z));
                        }
                    }
                }
                Tables {
                    vertices: SharedList::new(Vec::new(), vec![a.vertices, b.vertices]),
                    edges: SharedList::new(new_edges, vec![a.edges, b.edges]),
                    triangles: SharedList::new(new_triangles, vec![a.triangles, b.triangles]),
                }
            }
        };
        tables[i] = Some(table);
    }
    let root = tables[root].take().expect("root is computed last");
    if root.edges.len() != g.edge_count() || root.vertices.len() != g.vertex_count() {
        return Err(Error::TreeGraphMismatch(format!(
            "cotree has {} vertices and {} edges, graph has {} and {}",
            root.vertices.len(),
            root.edges.len(),
            g.vertex_count(),
            g.edge_count()
        )));
    }
    Ok(root.triangles.iter().copied().collect())
}

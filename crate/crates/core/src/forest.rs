//! Spanning forests and feedback edge sets.

use std::collections::{HashSet, VecDeque};

use crate::error::Error;
use crate::graph::{edge, Edge, Graph, Vertex};

/// A rooted spanning forest: `parent[v]` is `None` exactly for roots.
#[derive(Clone, Debug)]
pub struct RootedForest {
    pub parent: Vec<Option<Vertex>>,
    pub depth: Vec<usize>,
}

impl RootedForest {
    fn path_to_ancestor(&self, mut v: Vertex, ancestor: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        while v != ancestor {
            v = self.parent[v].expect("ancestor lies on the root path");
            path.push(v);
        }
        path
    }

    /// The tree path between two vertices of the same tree.
    pub fn tree_path(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let (mut x, mut y) = (a, b);
        while self.depth[x] > self.depth[y] {
            x = self.parent[x].unwrap();
        }
        while self.depth[y] > self.depth[x] {
            y = self.parent[y].unwrap();
        }
        while x != y {
            x = self.parent[x].unwrap();
            y = self.parent[y].unwrap();
        }
        let mut path = self.path_to_ancestor(a, x);
        let mut back = self.path_to_ancestor(b, x);
        back.pop();
        back.reverse();
        path.extend(back);
        path
    }
}

/// BFS forest of `g` ignoring the edges in `skip`, roots chosen by smallest
/// unvisited id. Returns the forest and the edges outside `skip` that close
/// a cycle.
fn bfs_forest(g: &Graph, skip: Option<&HashSet<Edge>>) -> (RootedForest, Vec<Edge>) {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut closing = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if skip.is_some_and(|s| s.contains(&edge(u, w))) {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if u < w && parent[u] != Some(w) && parent[w] != Some(u) {
                    // Every vertex is processed, so each non-tree edge is
                    // reported exactly once, from its smaller endpoint.
                    closing.push((u, w));
                }
            }
        }
    }
    closing.sort_unstable();
    (RootedForest { parent, depth }, closing)
}

/// The non-tree edges of a breadth-first spanning forest; its size is
/// the feedback edge number `m - n + c`.
pub fn feedback_edge_set(g: &Graph) -> Vec<Edge> {
    bfs_forest(g, None).1
}

pub fn feedback_edge_number(g: &Graph) -> usize {
    g.edge_count() + g.component_count() - g.vertex_count()
}

/// Roots the forest `g - f`. Fails with a surviving cycle when `f` is not a
/// feedback edge set.
pub fn rooted_forest_without(g: &Graph, f: &HashSet<Edge>) -> Result<RootedForest, Error> {
    let (forest, closing) = bfs_forest(g, Some(f));
    if let Some(&(u, w)) = closing.first() {
        return Err(Error::NotFeedbackSet(forest.tree_path(u, w)));
    }
    Ok(forest)
}

/// Whether `g` with the edges in `removed` deleted is acyclic.
pub fn is_acyclic_without(g: &Graph, removed: &[Edge]) -> bool {
    let set: HashSet<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
    bfs_forest(g, Some(&set)).1.is_empty()
}

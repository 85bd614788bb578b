//! Two-coloring with odd-cycle witnesses.

use std::collections::VecDeque;

use crate::error::Error;
use crate::graph::{Graph, Vertex};

/// Returns a proper 2-coloring (colors 0 and 1), or an odd cycle.
pub fn two_coloring(g: &Graph) -> Result<Vec<u8>, Error> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Err(Error::NotBipartite(odd_cycle(&parent, &depth, u, w)));
                }
            }
        }
    }
    Ok(color)
}

fn odd_cycle(parent: &[usize], depth: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_ok()
}

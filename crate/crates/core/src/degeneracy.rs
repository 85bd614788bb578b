//! Degeneracy orderings by min-degree peeling.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, Vertex};

/// Elimination order with at most `degeneracy` later neighbors per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<Vertex>,
    /// `position[v]` is the index of `v` in `order`.
    pub position: Vec<usize>,
    pub degeneracy: usize,
}

impl DegeneracyOrdering {
    /// Neighbors of `v` that come after it in the ordering, ascending by id.
    pub fn later_neighbors<'g>(
        &'g self,
        g: &'g Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'g {
        let p = self.position[v];
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.position[w] > p)
    }

    /// For every vertex, the list of its later neighbors.
    pub fn oriented_adjacency(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        g.vertices()
            .map(|v| self.later_neighbors(g, v).collect())
            .collect()
    }
}

/// Repeatedly removes a vertex of minimum remaining degree, smallest id
/// first. The degeneracy is the largest degree seen at removal time.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, Vertex)>> =
        g.vertices().map(|v| Reverse((degree[v], v))).collect();
    let mut order = Vec::with_capacity(n);
    let mut position = vec![0; n];
    let mut degeneracy = 0;

    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v] || d != degree[v] {
            continue;
        }
        removed[v] = true;
        position[v] = order.len();
        order.push(v);
        degeneracy = degeneracy.max(d);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                heap.push(Reverse((degree[w], w)));
            }
        }
    }

    DegeneracyOrdering {
        order,
        position,
        degeneracy,
    }
}

pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).degeneracy
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn complete_graph() {
        assert_eq!(degeneracy(&generate::complete(4)), 3);
    }

    #[test]
    fn trees_are_one_degenerate() {
        assert_eq!(degeneracy(&generate::path(2)), 1);
        assert_eq!(degeneracy(&generate::path(7)), 1);
        assert_eq!(degeneracy(&generate::star(5)), 1);
    }

    #[test]
    fn cycle() {
        assert_eq!(degeneracy(&generate::cycle(5)), 2);
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(degeneracy(&Graph::empty(3)), 0);
        assert_eq!(degeneracy(&Graph::empty(0)), 0);
    }

    #[test]
    fn smallest_id_tie_break() {
        // Path 0-1-2: both ends have degree 1, vertex 0 goes first.
        let o = degeneracy_ordering(&generate::path(3));
        assert_eq!(o.order, vec![0, 1, 2]);
    }

    #[test]
    fn later_neighbor_count_is_bounded() {
        let g = generate::wheel(6);
        let o = degeneracy_ordering(&g);
        for v in g.vertices() {
            assert!(o.later_neighbors(&g, v).count() <= o.degeneracy);
        }
    }
}

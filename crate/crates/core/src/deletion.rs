//! Vertex deletion sets to graph classes and the heuristics that build them.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bipartite::two_coloring;
use crate::chordal::perfect_elimination_ordering;
use crate::cotree::{build_cotree, find_induced_p4};
use crate::degeneracy::degeneracy;
use crate::error::{ChordalWitness, Error};
use crate::graph::{Graph, Vertex};

/// Largest graph the repeated-P4 heuristic accepts.
pub const P4_SEARCH_LIMIT: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetClass {
    Degenerate(usize),
    Bipartite,
    Chordal,
    Cograph,
}

/// A vertex set `D` (sorted, no repeats) whose removal should leave a graph
/// of `target` class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionSet {
    vertices: Vec<Vertex>,
    target: TargetClass,
}

impl DeletionSet {
    pub fn new(mut vertices: Vec<Vertex>, target: TargetClass) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        DeletionSet { vertices, target }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn target(&self) -> TargetClass {
        self.target
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Membership mask over the vertices of `g`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.vertices {
            m[v] = true;
        }
        m
    }

    /// Checks that `g - D` belongs to the target class. Witnesses are
    /// reported in the ids of `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), Error> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.vertex_count(),
            });
        }
        let rest = g.without_vertices(&self.vertices);
        let result = match self.target {
            TargetClass::Degenerate(d) => {
                let actual = degeneracy(&rest.graph);
                if actual > d {
                    Err(Error::NotDeletionSet {
                        expected: d,
                        actual,
                    })
                } else {
                    Ok(())
                }
            }
            TargetClass::Bipartite => two_coloring(&rest.graph).map(drop),
            TargetClass::Chordal => perfect_elimination_ordering(&rest.graph).map(drop),
            TargetClass::Cograph => build_cotree(&rest.graph).map(drop),
        };
        result.map_err(|e| lift_error(e, &rest.to_parent))
    }
}

/// Rewrites the vertex ids in a witness through `to_parent`.
pub fn lift_error(e: Error, to_parent: &[Vertex]) -> Error {
    let lift = |v: Vertex| to_parent[v];
    match e {
        Error::NotBipartite(c) => Error::NotBipartite(c.into_iter().map(lift).collect()),
        Error::NotCograph(p) => Error::NotCograph(p.map(lift)),
        Error::NotChordal(ChordalWitness::ChordlessCycle(c)) => Error::NotChordal(
            ChordalWitness::ChordlessCycle(c.into_iter().map(lift).collect()),
        ),
        Error::NotChordal(ChordalWitness::FailedVertex {
            vertex,
            left,
            right,
        }) => Error::NotChordal(ChordalWitness::FailedVertex {
            vertex: lift(vertex),
            left: lift(left),
            right: lift(right),
        }),
        Error::NotFeedbackSet(c) => Error::NotFeedbackSet(c.into_iter().map(lift).collect()),
        other => other,
    }
}

/// Greedy deletion set to `d`-degenerate graphs.
///
/// Deletes a vertex of maximum remaining degree (smallest id on ties) until
/// the remainder is `d`-degenerate. The remainder is `d`-degenerate exactly
/// when its `(d+1)`-core is empty; the core only shrinks under deletions, so
/// it is maintained by incremental peeling instead of being recomputed.
pub fn greedy_ddeg_deletion_set(g: &Graph, d: usize) -> DeletionSet {
    let n = g.vertex_count();
    let mut deleted = vec![false; n];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();

    let mut in_core = vec![true; n];
    let mut core_degree = degree.clone();
    let mut core_size = n;
    let mut peel: Vec<Vertex> = g.vertices().filter(|&v| core_degree[v] <= d).collect();

    fn drain_peel(
        g: &Graph,
        d: usize,
        peel: &mut Vec<Vertex>,
        in_core: &mut [bool],
        core_degree: &mut [usize],
        core_size: &mut usize,
    ) {
        while let Some(v) = peel.pop() {
            if !in_core[v] {
                continue;
            }
            in_core[v] = false;
            *core_size -= 1;
            for &w in g.neighbors(v) {
                if in_core[w] {
                    core_degree[w] -= 1;
                    if core_degree[w] == d {
                        peel.push(w);
                    }
                }
            }
        }
    }

    drain_peel(
        g,
        d,
        &mut peel,
        &mut in_core,
        &mut core_degree,
        &mut core_size,
    );

    let mut heap: BinaryHeap<(usize, Reverse<Vertex>)> =
        g.vertices().map(|v| (degree[v], Reverse(v))).collect();
    let mut chosen = Vec::new();
    while core_size > 0 {
        let (deg, Reverse(v)) = heap.pop().expect("a non-empty core has vertices left");
        if deleted[v] || deg != degree[v] {
            continue;
        }
        deleted[v] = true;
        chosen.push(v);
        for &w in g.neighbors(v) {
            if !deleted[w] {
                degree[w] -= 1;
                heap.push((degree[w], Reverse(w)));
            }
        }
        if in_core[v] {
            peel.push(v);
            drain_peel(
                g,
                d,
                &mut peel,
                &mut in_core,
                &mut core_degree,
                &mut core_size,
            );
        }
    }
    DeletionSet::new(chosen, TargetClass::Degenerate(d))
}

/// Deletion set to cographs: delete all four vertices of an induced P4
/// until none is left. At most four times the optimum.
pub fn cograph_deletion_set(g: &Graph) -> Result<DeletionSet, Error> {
    let n = g.vertex_count();
    if n > P4_SEARCH_LIMIT {
        return Err(Error::Unsupported {
            what: "cograph deletion set",
            n,
            limit: P4_SEARCH_LIMIT,
        });
    }
    let mut alive = vec![true; n];
    let mut chosen = Vec::new();
    while let Some(p4) = find_induced_p4(g, &alive) {
        for v in p4 {
            alive[v] = false;
            chosen.push(v);
        }
    }
    Ok(DeletionSet::new(chosen, TargetClass::Cograph))
}

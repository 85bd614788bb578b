//! Chordality via Maximum Cardinality Search.
//!
//! MCS numbers vertices in decreasing weight order; its reverse is a perfect
//! elimination ordering exactly when the graph is chordal. The candidate is
//! always checked explicitly, and only that check decides chordality.

use std::cmp::Reverse;
use std::collections::{BTreeSet, VecDeque};

use crate::error::{ChordalWitness, Error};
use crate::graph::{Graph, Vertex};

fn maximum_cardinality_search(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut queue: BTreeSet<(Reverse<usize>, Vertex)> =
        g.vertices().map(|v| (Reverse(0), v)).collect();
    let mut visit = Vec::with_capacity(n);
    while let Some((_, v)) = queue.pop_first() {
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                queue.remove(&(Reverse(weight[w]), w));
                weight[w] += 1;
                queue.insert((Reverse(weight[w]), w));
            }
        }
    }
    visit
}

/// Checks that every vertex's later neighbors form a clique.
///
/// Uses the standard parent test: the earliest later neighbor `p` of `v`
/// must be adjacent to every other later neighbor of `v`. Returns the first
/// failing `(vertex, parent, other)` triple.
pub fn check_elimination_ordering(
    g: &Graph,
    order: &[Vertex],
) -> Result<(), (Vertex, Vertex, Vertex)> {
    let n = g.vertex_count();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in order {
        let pv = position[v];
        let position = &position;
        let later = || {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(move |&w| position[w] > pv)
        };
        let Some(parent) = later().min_by_key(|&w| position[w]) else {
            continue;
        };
        if let Some(x) = later().find(|&x| x != parent && !g.has_edge(parent, x)) {
            return Err((v, parent, x));
        }
    }
    Ok(())
}

/// Shortest path from `from` to `to` avoiding `v` and the rest of its
/// neighborhood. Together with `v` it closes a chordless cycle.
fn chordless_cycle_through(g: &Graph, v: Vertex, from: Vertex, to: Vertex) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = w != from && w != to;
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[x];
                path.push(x);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if !blocked[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// A perfect elimination ordering, or a witness that `g` is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Result<Vec<Vertex>, Error> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    match check_elimination_ordering(g, &order) {
        Ok(()) => Ok(order),
        Err((vertex, left, right)) => {
            let witness = match chordless_cycle_through(g, vertex, left, right) {
                Some(cycle) => ChordalWitness::ChordlessCycle(cycle),
                None => ChordalWitness::FailedVertex {
                    vertex,
                    left,
                    right,
                },
            };
            Err(Error::NotChordal(witness))
        }
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_ok()
}

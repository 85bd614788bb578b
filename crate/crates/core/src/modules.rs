//! Grouping vertices by their neighborhood inside a vertex set.

use crate::error::Error;
use crate::graph::{Graph, Vertex};

/// A part of the partition of `V \ D`: all members see exactly
/// `d_neighbors` inside `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub representative: Vertex,
    pub members: Vec<Vertex>,
    pub d_neighbors: Vec<Vertex>,
}

/// Partitions `V \ D` by neighborhood in `D` using partition refinement.
///
/// Every edge of `g` must have an endpoint in `D`. Parts are ordered by
/// their smallest member, which is also the representative.
pub fn modules_wrt(g: &Graph, d_set: &[Vertex]) -> Result<Vec<Module>, Error> {
    let n = g.vertex_count();
    let mut in_d = vec![false; n];
    for &v in d_set {
        in_d[v] = true;
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !in_d[u] && !in_d[v]) {
        return Err(Error::EdgeOutsideD { u, v });
    }

    let mut sorted_d: Vec<Vertex> = d_set.to_vec();
    sorted_d.sort_unstable();
    sorted_d.dedup();

    // part[v] for v outside D; refined once per vertex of D
    let mut part = vec![0usize; n];
    let mut part_count = 1;
    let mut split_stamp = vec![usize::MAX];
    let mut split_into = vec![0usize];
    for (round, &x) in sorted_d.iter().enumerate() {
        for &y in g.neighbors(x) {
            if in_d[y] {
                continue;
            }
            let old = part[y];
            if split_stamp[old] != round {
                split_stamp[old] = round;
                split_into[old] = part_count;
                part_count += 1;
                split_stamp.push(usize::MAX);
                split_into.push(0);
            }
            part[y] = split_into[old];
        }
    }

    let mut groups: Vec<Vec<Vertex>> = vec![Vec::new(); part_count];
    for v in g.vertices().filter(|&v| !in_d[v]) {
        groups[part[v]].push(v);
    }
    let mut modules: Vec<Module> = groups
        .into_iter()
        .filter(|members| !members.is_empty())
        .map(|members| {
            let representative = members[0];
            let d_neighbors = g
                .neighbors(representative)
                .iter()
                .copied()
                .filter(|&w| in_d[w])
                .collect();
            Module {
                representative,
                members,
                d_neighbors,
            }
        })
        .collect();
    modules.sort_unstable_by_key(|m| m.representative);
    Ok(modules)
}

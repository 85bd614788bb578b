//! Reference triangle enumerators.

use crate::error::Error;
use crate::graph::Graph;
use crate::triangle::{Triangle, TriangleSet};

/// Largest graph the triple scan accepts.
pub const TRIPLES_LIMIT: usize = 500;

/// Checks every three-vertex subset. Output is in ascending order.
pub fn enumerate_triples(g: &Graph) -> Result<TriangleSet, Error> {
    let n = g.vertex_count();
    if n > TRIPLES_LIMIT {
        return Err(Error::Unsupported {
            what: "triple enumeration",
            n,
            limit: TRIPLES_LIMIT,
        });
    }
    let mut out = TriangleSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push(Triangle::new(a, b, c));
                }
            }
        }
    }
    Ok(out)
}

/// For every edge `u < v`, emits `{u, v, w}` for each common neighbor
/// `w > v`, found by merging the sorted adjacency lists.
pub fn enumerate_edge_intersect(g: &Graph) -> TriangleSet {
    let mut out = TriangleSet::new();
    for (u, v) in g.edges() {
        let a = g.neighbors(u);
        let b = g.neighbors(v);
        let mut i = a.partition_point(|&w| w <= v);
        let mut j = b.partition_point(|&w| w <= v);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(Triangle::new(u, v, a[i]));
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out
}

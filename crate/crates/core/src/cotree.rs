//! Cograph recognition and binary cotrees.
//!
//! The builder splits a vertex set into connected components (union node) or
//! into co-components (join node); a set that is connected and co-connected
//! has an induced P4. Multi-way splits are turned into right-leaning binary
//! chains.

use crate::error::Error;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(Vertex),
    Union(usize, usize),
    Join(usize, usize),
}

/// A binary cotree. `root` is `None` only for the empty graph.
#[derive(Clone, Debug)]
pub struct Cotree {
    pub nodes: Vec<CotreeNode>,
    pub root: Option<usize>,
}

impl Cotree {
    pub fn node(&self, i: usize) -> CotreeNode {
        self.nodes[i]
    }

    /// Node indices in post-order (children before parents).
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let Some(root) = self.root else {
            return out;
        };
        let mut stack = vec![(root, false)];
        while let Some((i, expanded)) = stack.pop() {
            match self.nodes[i] {
                CotreeNode::Leaf(_) => out.push(i),
                CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => {
                    if expanded {
                        out.push(i);
                    } else {
                        stack.push((i, true));
                        stack.push((b, false));
                        stack.push((a, false));
                    }
                }
            }
        }
        out
    }

    /// Leaf vertices of every node, indexed by node.
    pub fn leaf_sets(&self) -> Vec<Vec<Vertex>> {
        let mut sets: Vec<Vec<Vertex>> = vec![Vec::new(); self.nodes.len()];
        for i in self.post_order() {
            sets[i] = match self.nodes[i] {
                CotreeNode::Leaf(v) => vec![v],
                CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => {
                    let mut s = std::mem::take(&mut sets[a]);
                    s.extend(std::mem::take(&mut sets[b]));
                    s
                }
            };
        }
        sets
    }

    /// The graph on `n` vertices described by union/join semantics.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        let mut sets: Vec<Vec<Vertex>> = vec![Vec::new(); self.nodes.len()];
        for i in self.post_order() {
            sets[i] = match self.nodes[i] {
                CotreeNode::Leaf(v) => vec![v],
                CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => {
                    let left = std::mem::take(&mut sets[a]);
                    let right = std::mem::take(&mut sets[b]);
                    if matches!(self.nodes[i], CotreeNode::Join(..)) {
                        for &x in &left {
                            for &y in &right {
                                edges.push((x, y));
                            }
                        }
                    }
                    let mut s = left;
                    s.extend(right);
                    s
                }
            };
        }
        Graph::from_edges(n, edges).expect("cotree leaves are distinct vertices")
    }
}

/// Scratch marks with generation stamps so they never need clearing.
struct Marks {
    stamp: Vec<u32>,
    now: u32,
}

impl Marks {
    fn new(n: usize) -> Self {
        Marks {
            stamp: vec![0; n],
            now: 0,
        }
    }
    fn reset(&mut self) {
        self.now += 1;
    }
    fn set(&mut self, v: Vertex) {
        self.stamp[v] = self.now;
    }
    fn get(&self, v: Vertex) -> bool {
        self.stamp[v] == self.now
    }
}

fn components(g: &Graph, set: &[Vertex], inside: &mut Marks, seen: &mut Marks) -> Vec<Vec<Vertex>> {
    inside.reset();
    for &v in set {
        inside.set(v);
    }
    seen.reset();
    let mut parts = Vec::new();
    for &s in set {
        if seen.get(s) {
            continue;
        }
        seen.set(s);
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let v = part[i];
            i += 1;
            for &w in g.neighbors(v) {
                if inside.get(w) && !seen.get(w) {
                    seen.set(w);
                    part.push(w);
                }
            }
        }
        parts.push(part);
    }
    parts
}

/// Connected components of the complement of `g[set]`, in
/// `O(|set| + m(set))` time: every vertex left behind is charged to an edge.
fn co_components(g: &Graph, set: &[Vertex], adjacent: &mut Marks) -> Vec<Vec<Vertex>> {
    let mut remaining: Vec<Vertex> = set.to_vec();
    let mut parts = Vec::new();
    while let Some(s) = remaining.first().copied() {
        remaining.swap_remove(0);
        let mut part = vec![s];
        let mut i = 0;
        while i < part.len() {
            let v = part[i];
            i += 1;
            adjacent.reset();
            for &w in g.neighbors(v) {
                adjacent.set(w);
            }
            let (keep, take): (Vec<Vertex>, Vec<Vertex>) =
                remaining.iter().partition(|&&w| adjacent.get(w));
            remaining = keep;
            part.extend(take);
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts.sort_unstable_by_key(|p| p[0]);
    parts
}

/// Finds an induced path `a - b - c - d` among the vertices with
/// `alive[v] == true`, scanning middle edges `(b, c)` in ascending order.
pub fn find_induced_p4(g: &Graph, alive: &[bool]) -> Option<[Vertex; 4]> {
    let n = g.vertex_count();
    let mut in_d = Marks::new(n);
    for b in g.vertices().filter(|&b| alive[b]) {
        for &c in g.neighbors(b) {
            if !alive[c] {
                continue;
            }
            // a ∈ N(b) \ N[c], d ∈ N(c) \ N[b], a and d not adjacent
            in_d.reset();
            let mut d_count = 0;
            for &d in g.neighbors(c) {
                if alive[d] && d != b && !g.has_edge(b, d) {
                    in_d.set(d);
                    d_count += 1;
                }
            }
            if d_count == 0 {
                continue;
            }
            for &a in g.neighbors(b) {
                if !alive[a] || a == c || g.has_edge(a, c) {
                    continue;
                }
                let seen = g.neighbors(a).iter().filter(|&&x| in_d.get(x)).count();
                if seen < d_count {
                    let d = g
                        .neighbors(c)
                        .iter()
                        .copied()
                        .find(|&d| in_d.get(d) && !g.has_edge(a, d))
                        .expect("counted a non-neighbor");
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Builds a binary cotree or returns an induced P4.
pub fn build_cotree(g: &Graph) -> Result<Cotree, Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Cotree {
            nodes: Vec::new(),
            root: None,
        });
    }
    let mut nodes = vec![CotreeNode::Leaf(usize::MAX)];
    let mut inside = Marks::new(n);
    let mut seen = Marks::new(n);
    let mut adjacent = Marks::new(n);
    // (vertex set, slot to fill)
    let mut work: Vec<(Vec<Vertex>, usize)> = vec![(g.vertices().collect(), 0)];

    while let Some((set, slot)) = work.pop() {
        if set.len() == 1 {
            nodes[slot] = CotreeNode::Leaf(set[0]);
            continue;
        }
        let parts = components(g, &set, &mut inside, &mut seen);
        let (parts, join) = if parts.len() > 1 {
            (parts, false)
        } else {
            let co = co_components(g, &set, &mut adjacent);
            if co.len() == 1 {
                let mut alive = vec![false; n];
                for &v in &set {
                    alive[v] = true;
                }
                let p4 = find_induced_p4(g, &alive)
                    .expect("connected and co-connected sets contain a P4");
                return Err(Error::NotCograph(p4));
            }
            (co, true)
        };
        // parts[0] op (parts[1] op (... op parts[k-1]))
        let k = parts.len();
        let mut current = slot;
        for (i, part) in parts.into_iter().enumerate() {
            if i + 1 == k {
                work.push((part, current));
                break;
            }
            let left = nodes.len();
            nodes.push(CotreeNode::Leaf(usize::MAX));
            let right = nodes.len();
            nodes.push(CotreeNode::Leaf(usize::MAX));
            nodes[current] = if join {
                CotreeNode::Join(left, right)
            } else {
                CotreeNode::Union(left, right)
            };
            work.push((part, left));
            current = right;
        }
    }
    Ok(Cotree {
        nodes,
        root: Some(0),
    })
}

pub fn is_cograph(g: &Graph) -> bool {
    build_cotree(g).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn assert_binary_roundtrip(g: &Graph) -> Cotree {
        let t = build_cotree(g).unwrap();
        assert_eq!(&t.evaluate(g.vertex_count()), g);
        assert_eq!(t.post_order().len(), 2 * g.vertex_count() - 1);
        t
    }

    #[test]
    fn complete_graph_is_a_join_chain() {
        let t = assert_binary_roundtrip(&generate::complete(4));
        let joins = t
            .nodes
            .iter()
            .filter(|n| matches!(n, CotreeNode::Join(..)))
            .count();
        assert_eq!(joins, 3);
    }

    #[test]
    fn p4_is_rejected() {
        let g = generate::path(4);
        match build_cotree(&g) {
            Err(Error::NotCograph(p)) => {
                let mut s = p;
                s.sort_unstable();
                assert_eq!(s, [0, 1, 2, 3]);
                assert!(g.has_edge(p[0], p[1]) && g.has_edge(p[1], p[2]) && g.has_edge(p[2], p[3]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_disjoint_edges() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let t = assert_binary_roundtrip(&g);
        let root = t.root.unwrap();
        let CotreeNode::Union(a, b) = t.node(root) else {
            panic!("root must be a union");
        };
        assert!(matches!(t.node(a), CotreeNode::Join(..)));
        assert!(matches!(t.node(b), CotreeNode::Join(..)));
    }

    #[test]
    fn single_vertex_and_empty() {
        let t = build_cotree(&Graph::empty(1)).unwrap();
        assert_eq!(t.nodes, vec![CotreeNode::Leaf(0)]);
        assert!(build_cotree(&Graph::empty(0)).unwrap().root.is_none());
        assert_binary_roundtrip(&Graph::empty(5));
    }

    #[test]
    fn p4_search_respects_alive_mask() {
        let g = generate::path(5);
        let mut alive = vec![true; 5];
        assert!(find_induced_p4(&g, &alive).is_some());
        alive[1] = false;
        assert!(find_induced_p4(&g, &alive).is_none());
    }
}

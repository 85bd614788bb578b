use std::fmt;

use crate::cotree::{Cotree, CotreeNode};
use crate::graph::{Edge, Graph, Vertex};

pub type Label = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KNode {
    /// A new vertex with the given label.
    Vertex(Label),
    Union(usize, usize),
    /// Joins every vertex labeled `i` to every vertex labeled `j`; `i != j`.
    Eta(Label, Label, usize),
    /// Relabels `i` to `j`.
    Rho(Label, Label, usize),
}

/// A k-expression stored as an arena of nodes. Vertices are numbered in
/// left-to-right leaf order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KExpression {
    nodes: Vec<KNode>,
    root: usize,
}

/// Builds expressions bottom-up; every node must be used exactly once as a
/// child or as the root.
#[derive(Default)]
pub struct KExprBuilder {
    nodes: Vec<KNode>,
}

impl KExprBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, node: KNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn vertex(&mut self, label: Label) -> usize {
        assert!(label >= 1, "labels start at 1");
        self.push(KNode::Vertex(label))
    }

    pub fn union(&mut self, a: usize, b: usize) -> usize {
        self.push(KNode::Union(a, b))
    }

    /// Panics when `i == j`.
    pub fn eta(&mut self, i: Label, j: Label, child: usize) -> usize {
        assert!(i != j && i >= 1 && j >= 1, "eta needs two distinct labels");
        self.push(KNode::Eta(i, j, child))
    }

    pub fn rho(&mut self, i: Label, j: Label, child: usize) -> usize {
        assert!(i >= 1 && j >= 1, "labels start at 1");
        self.push(KNode::Rho(i, j, child))
    }

    pub fn finish(self, root: usize) -> KExpression {
        assert!(root < self.nodes.len());
        KExpression {
            nodes: self.nodes,
            root,
        }
    }
}

impl KExpression {
    pub fn nodes(&self) -> &[KNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node(&self, i: usize) -> KNode {
        self.nodes[i]
    }

    /// Largest label in use.
    pub fn width(&self) -> Label {
        self.nodes
            .iter()
            .map(|n| match *n {
                KNode::Vertex(i) => i,
                KNode::Union(..) => 0,
                KNode::Eta(i, j, _) | KNode::Rho(i, j, _) => i.max(j),
            })
            .max()
            .unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, KNode::Vertex(_)))
            .count()
    }

    /// Nodes reachable from the root, children before parents, left child
    /// before right child.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((i, expanded)) = stack.pop() {
            match self.nodes[i] {
                KNode::Vertex(_) => out.push(i),
                KNode::Union(a, b) => {
                    if expanded {
                        out.push(i);
                    } else {
                        stack.push((i, true));
                        stack.push((b, false));
                        stack.push((a, false));
                    }
                }
                KNode::Eta(_, _, c) | KNode::Rho(_, _, c) => {
                    if expanded {
                        out.push(i);
                    } else {
                        stack.push((i, true));
                        stack.push((c, false));
                    }
                }
            }
        }
        out
    }

    /// Vertex id of every `Vertex` node, `usize::MAX` for other nodes.
    pub fn leaf_ids(&self) -> Vec<Vertex> {
        let mut ids = vec![usize::MAX; self.nodes.len()];
        let mut next = 0;
        for i in self.post_order() {
            if let KNode::Vertex(_) = self.nodes[i] {
                ids[i] = next;
                next += 1;
            }
        }
        ids
    }

    /// The graph the expression describes. Repeated edge insertions between
    /// the same pair add nothing.
    pub fn evaluate(&self) -> Graph {
        let ids = self.leaf_ids();
        // per node: vertex lists grouped by current label
        let mut groups: Vec<Vec<(Label, Vec<Vertex>)>> = vec![Vec::new(); self.nodes.len()];
        let mut edges: Vec<Edge> = Vec::new();
        let mut n = 0;
        for i in self.post_order() {
            let current = match self.nodes[i] {
                KNode::Vertex(l) => {
                    n += 1;
                    vec![(l, vec![ids[i]])]
                }
                KNode::Union(a, b) => {
                    let mut left = std::mem::take(&mut groups[a]);
                    for (l, vs) in std::mem::take(&mut groups[b]) {
                        match left.iter_mut().find(|(x, _)| *x == l) {
                            Some((_, into)) => into.extend(vs),
                            None => left.push((l, vs)),
                        }
                    }
                    left
                }
                KNode::Eta(p, q, c) => {
                    let current = std::mem::take(&mut groups[c]);
                    let side = |l: Label| {
                        current
                            .iter()
                            .find(|(x, _)| *x == l)
                            .map(|(_, vs)| vs.as_slice())
                    };
                    if let (Some(xs), Some(ys)) = (side(p), side(q)) {
                        for &x in xs {
                            for &y in ys {
                                edges.push((x, y));
                            }
                        }
                    }
                    current
                }
                KNode::Rho(p, q, c) => {
                    let mut current = std::mem::take(&mut groups[c]);
                    if p != q {
                        if let Some(pos) = current.iter().position(|(x, _)| *x == p) {
                            let (_, moved) = current.swap_remove(pos);
                            match current.iter_mut().find(|(x, _)| *x == q) {
                                Some((_, into)) => into.extend(moved),
                                None => current.push((q, moved)),
                            }
                        }
                    }
                    current
                }
            };
            groups[i] = current;
        }
        Graph::from_edges_dedup(n, edges)
    }
}

impl fmt::Display for KExpression {
    /// Prefix notation, written without recursion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Step {
            Node(usize),
            Text(&'static str),
        }
        let mut stack = vec![Step::Node(self.root)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Text(s) => f.write_str(s)?,
                Step::Node(i) => match self.nodes[i] {
                    KNode::Vertex(l) => write!(f, "v({l})")?,
                    KNode::Union(a, b) => {
                        f.write_str("u(")?;
                        stack.extend([
                            Step::Text(")"),
                            Step::Node(b),
                            Step::Text(","),
                            Step::Node(a),
                        ]);
                    }
                    KNode::Eta(p, q, c) => {
                        write!(f, "eta({p},{q},")?;
                        stack.extend([Step::Text(")"), Step::Node(c)]);
                    }
                    KNode::Rho(p, q, c) => {
                        write!(f, "rho({p},{q},")?;
                        stack.extend([Step::Text(")"), Step::Node(c)]);
                    }
                },
            }
        }
        Ok(())
    }
}

/// A 2-expression for a cograph. Every subterm leaves all of its vertices
/// with label 1; a join is `rho(2,1,eta(1,2,u(A,rho(1,2,B))))`.
///
/// Returns the expression and, for each leaf in order, the cotree vertex it
/// creates. `None` for the empty cotree.
pub fn cotree_to_kexpression(t: &Cotree) -> Option<(KExpression, Vec<Vertex>)> {
    let root = t.root?;
    let mut b = KExprBuilder::new();
    let mut built = vec![usize::MAX; t.nodes.len()];
    let mut leaves = Vec::new();
    for i in t.post_order() {
        built[i] = match t.node(i) {
            CotreeNode::Leaf(v) => {
                leaves.push(v);
                b.vertex(1)
            }
            CotreeNode::Union(x, y) => b.union(built[x], built[y]),
            CotreeNode::Join(x, y) => {
                let right = b.rho(1, 2, built[y]);
                let both = b.union(built[x], right);
                let joined = b.eta(1, 2, both);
                b.rho(2, 1, joined)
            }
        };
    }
    Some((b.finish(built[root]), leaves))
}

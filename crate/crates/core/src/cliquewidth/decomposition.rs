//! Binary module decomposition of a k-expression and the triangle DP over it.
//!
//! Unary operations are folded into the union or leaf below them, leaving a
//! full binary tree whose leaves are the vertices. At every node the vertices
//! below it are split into twin classes by their label at the top of the
//! node's chain of unary operations: vertices with equal labels there are
//! treated alike by every later operation, so every vertex outside the node
//! sees all of a class or none of it.

use super::expr::{KExpression, KNode, Label};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::shared::SharedList;
use crate::triangle::{Triangle, TriangleSet};

#[derive(Clone, Debug)]
pub struct TwinClass {
    pub label: Label,
    pub members: SharedList<Vertex>,
    pub representative: Vertex,
    /// Index of the class of the parent node containing this one; `None`
    /// at the root.
    pub parent_class: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct DecompNode {
    pub children: Option<(usize, usize)>,
    pub classes: Vec<TwinClass>,
}

/// Nodes are stored children first; the root is the last node.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub nodes: Vec<DecompNode>,
    pub width: Label,
}

impl Decomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// `M_{u,b}`: classes of `u` contained in class `b` of its parent.
    pub fn class_map(&self, u: usize, b: usize) -> Vec<usize> {
        let classes = &self.nodes[u].classes;
        (0..classes.len())
            .filter(|&i| classes[i].parent_class == Some(b))
            .collect()
    }

    pub fn max_class_count(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.classes.len())
            .max()
            .unwrap_or(0)
    }

    /// Checks against `g` that each pair of classes of two sibling nodes is
    /// either completely joined or not joined at all.
    pub fn cross_sets_all_or_nothing(&self, g: &Graph) -> bool {
        self.nodes.iter().all(|node| {
            let Some((u, w)) = node.children else {
                return true;
            };
            self.nodes[u].classes.iter().all(|a| {
                self.nodes[w].classes.iter().all(|b| {
                    let probe = g.has_edge(a.representative, b.representative);
                    a.members
                        .iter()
                        .all(|&x| b.members.iter().all(|&y| g.has_edge(x, y) == probe))
                })
            })
        })
    }
}

struct Group {
    label: Label,
    own: Vec<Vertex>,
    parts: Vec<SharedList<Vertex>>,
    from_children: Vec<(usize, usize)>,
}

struct Pending {
    decomp: usize,
    groups: Vec<Group>,
}

fn add_to_groups(groups: &mut Vec<Group>, group: Group) {
    match groups.iter_mut().find(|g| g.label == group.label) {
        Some(into) => {
            into.own.extend(group.own);
            into.parts.extend(group.parts);
            into.from_children.extend(group.from_children);
        }
        None => groups.push(group),
    }
}

fn finalize(nodes: &mut [DecompNode], pending: Pending, width: Label) {
    let mut groups = pending.groups;
    groups.sort_unstable_by_key(|g| g.label);
    assert!(
        groups.len() <= width as usize,
        "more twin classes than labels"
    );
    let mut classes = Vec::with_capacity(groups.len());
    for (index, g) in groups.into_iter().enumerate() {
        for (child, ci) in g.from_children {
            nodes[child].classes[ci].parent_class = Some(index);
        }
        let members = SharedList::new(g.own, g.parts);
        let representative = *members.first().expect("classes are nonempty");
        classes.push(TwinClass {
            label: g.label,
            members,
            representative,
            parent_class: None,
        });
    }
    nodes[pending.decomp].classes = classes;
}

/// Folds unary operations into their child and computes twin classes and
/// class maps for every node.
pub fn binarize_decomposition(e: &KExpression) -> Decomposition {
    let width = e.width();
    let ids = e.leaf_ids();
    let mut nodes: Vec<DecompNode> = Vec::new();
    let mut pending: Vec<Option<Pending>> = (0..e.nodes().len()).map(|_| None).collect();
    for i in e.post_order() {
        let state = match e.node(i) {
            KNode::Vertex(l) => {
                nodes.push(DecompNode {
                    children: None,
                    classes: Vec::new(),
                });
                Pending {
                    decomp: nodes.len() - 1,
                    groups: vec![Group {
                        label: l,
                        own: vec![ids[i]],
                        parts: Vec::new(),
                        from_children: Vec::new(),
                    }],
                }
            }
            KNode::Eta(_, _, c) => pending[c].take().expect("child first"),
            KNode::Rho(p, q, c) => {
                let mut state = pending[c].take().expect("child first");
                if let Some(pos) = state.groups.iter().position(|g| g.label == p) {
                    if p != q {
                        let mut moved = state.groups.swap_remove(pos);
                        moved.label = q;
                        add_to_groups(&mut state.groups, moved);
                    }
                }
                state
            }
            KNode::Union(a, b) => {
                let left = pending[a].take().expect("child first");
                let right = pending[b].take().expect("child first");
                let (da, db) = (left.decomp, right.decomp);
                finalize(&mut nodes, left, width);
                finalize(&mut nodes, right, width);
                let mut groups = Vec::new();
                for child in [da, db] {
                    for (ci, class) in nodes[child].classes.iter().enumerate() {
                        add_to_groups(
                            &mut groups,
                            Group {
                                label: class.label,
                                own: Vec::new(),
                                parts: vec![class.members.clone()],
                                from_children: vec![(child, ci)],
                            },
                        );
                    }
                }
                nodes.push(DecompNode {
                    children: Some((da, db)),
                    classes: Vec::new(),
                });
                Pending {
                    decomp: nodes.len() - 1,
                    groups,
                }
            }
        };
        pending[i] = Some(state);
    }
    let root = pending[e.root()].take().expect("root is processed last");
    debug_assert_eq!(root.decomp, nodes.len() - 1);
    finalize(&mut nodes, root, width);
    Decomposition { nodes, width }
}

struct Tables {
    /// `E_{i,j}` for `i <= j`, stored at `i * h + j`.
    edges: Vec<SharedList<Edge>>,
    triangles: SharedList<Triangle>,
}

/// Lists the triangles of the graph `e` describes.
///
/// Each triangle is created once, at the lowest node holding all three of
/// its vertices: two of them lie in one child, in classes `o` and `p`, and
/// the third in class `q` of the other child, joined to both classes.
pub fn cw_enumerate(e: &KExpression) -> TriangleSet {
    let g = e.evaluate();
    let dec = binarize_decomposition(e);
    let mut tables: Vec<Option<Tables>> = (0..dec.nodes.len()).map(|_| None).collect();

    for (v, node) in dec.nodes.iter().enumerate() {
        let Some((u, w)) = node.children else {
            tables[v] = Some(Tables {
                edges: vec![SharedList::default()],
                triangles: SharedList::default(),
            });
            continue;
        };
        let tu = tables[u].take().expect("children first");
        let tw = tables[w].take().expect("children first");
        let (cu, cw) = (&dec.nodes[u].classes, &dec.nodes[w].classes);
        let (hu, hw, hv) = (cu.len(), cw.len(), node.classes.len());
        let slot = |a: usize, b: usize| a.min(b) * hv + a.max(b);

        let mut own: Vec<Vec<Edge>> = vec![Vec::new(); hv * hv];
        let mut parts: Vec<Vec<SharedList<Edge>>> = vec![Vec::new(); hv * hv];
        for (classes, t) in [(cu, &tu), (cw, &tw)] {
            let h = classes.len();
            for l in 0..h {
                for m in l..h {
                    let list = &t.edges[l * h + m];
                    if !list.is_empty() {
                        let i = classes[l].parent_class.expect("inner classes have parents");
                        let j = classes[m].parent_class.expect("inner classes have parents");
                        parts[slot(i, j)].push(list.clone());
                    }
                }
            }
        }

        // F_{u,a,w,b} is all or nothing; one probe decides it
        let mut joined = vec![false; hu * hw];
        for (a, qa) in cu.iter().enumerate() {
            for (b, qb) in cw.iter().enumerate() {
                let probe = g.has_edge(qa.representative, qb.representative);
                if cfg!(debug_assertions) {
                    for &x in &qa.members {
                        for &y in &qb.members {
                            assert_eq!(
                                g.has_edge(x, y),
                                probe,
                                "twin classes are not all-or-nothing"
                            );
                        }
                    }
                }
                if probe {
                    joined[a * hw + b] = true;
                    let target = &mut own[slot(qa.parent_class.unwrap(), qb.parent_class.unwrap())];
                    for &x in &qa.members {
                        for &y in &qb.members {
                            target.push(edge(x, y));
                        }
                    }
                }
            }
        }

        let mut new_triangles = Vec::new();
        for (x_is_u, tx) in [(true, &tu), (false, &tw)] {
            let (cx, cy) = if x_is_u { (cu, cw) } else { (cw, cu) };
            let hx = cx.len();
            let f = |o: usize, q: usize| {
                if x_is_u {
                    joined[o * hw + q]
                } else {
                    joined[q * hw + o]
                }
            };
            let mut seen_by = Vec::with_capacity(hx);
            for (q, qy) in cy.iter().enumerate() {
                seen_by.clear();
                seen_by.extend((0..hx).filter(|&o| f(o, q)));
                for (a, &o) in seen_by.iter().enumerate() {
                    for &p in &seen_by[a..] {
                        for &(s, t) in &tx.edges[o * hx + p] {
                            for &c in &qy.members {
                                new_triangles.push(Triangle::new(s, t, c));
                            }
                        }
                    }
                }
            }
        }

        let mut edges = vec![SharedList::default(); hv * hv];
        for i in 0..hv {
            for j in i..hv {
                let k = i * hv + j;
                edges[k] =
                    SharedList::new(std::mem::take(&mut own[k]), std::mem::take(&mut parts[k]));
            }
        }
        tables[v] = Some(Tables {
            edges,
            triangles: SharedList::new(new_triangles, vec![tu.triangles, tw.triangles]),
        });
    }

    match dec.nodes.len() {
        0 => TriangleSet::new(),
        _ => {
            let root = tables[dec.root()].take().expect("root is computed");
            debug_assert_eq!(
                root.edges.iter().map(SharedList::len).sum::<usize>(),
                g.edge_count()
            );
            root.triangles.iter().copied().collect()
        }
    }
}

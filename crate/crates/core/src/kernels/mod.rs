//! Enumerative kernels with advice.
//!
//! A kernelization shrinks the input to a small kernel graph and stores
//! whatever it learned on the way as advice. Every triangle of the kernel
//! expands into a set of input triangles; the expansions of distinct kernel
//! triangles are disjoint and together they are exactly the triangles of the
//! input. The kernel has a triangle iff the input has one.

mod dtdd;
mod fes;

pub use dtdd::{dtdd_kernelize, dtdd_maxdeg_kernelize, DTDD_LIMIT};
pub use fes::{fes_kernelize, lemma_festri};

use std::collections::HashMap;

use crate::graph::{Edge, Graph, Vertex};
use crate::modules::Module;
use crate::oracle::enumerate_edge_intersect;
use crate::triangle::{Triangle, TriangleSet};

/// Advice that is a plain list of input triangles, released by the sentinel.
#[derive(Clone, Debug, Default)]
pub struct TriangleAdvice {
    pub triangles: TriangleSet,
}

/// Advice of the feedback-edge kernel: the triangles with at least one edge
/// outside the feedback edge set.
pub type FesAdvice = TriangleAdvice;

/// Advice of the deletion-set kernel.
#[derive(Clone, Debug)]
pub struct DtddAdvice {
    /// Triangles with at most one vertex in `D`.
    pub t1: TriangleSet,
    /// Vertices of `V \ D` grouped by their neighborhood in `D`; each
    /// representative is a kernel vertex standing for its whole module.
    pub modules: Vec<Module>,
    /// Kernel ids of the three fresh vertices.
    pub sentinel_ids: [Vertex; 3],
    module_of: HashMap<Vertex, usize>,
}

impl DtddAdvice {
    /// `M(x)`: the input vertices a kernel vertex stands for.
    fn members<'a>(&'a self, x: &'a Vertex) -> &'a [Vertex] {
        match self.module_of.get(x) {
            Some(&i) => &self.modules[i].members,
            None => std::slice::from_ref(x),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Advice {
    Triangles(TriangleAdvice),
    Dtdd(DtddAdvice),
}

/// One size guarantee of a kernelization, checked against the actual kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCheck {
    pub name: &'static str,
    pub actual: usize,
    pub bound: usize,
}

impl SizeCheck {
    pub fn holds(&self) -> bool {
        self.actual <= self.bound
    }
}

#[derive(Clone, Debug)]
pub struct EnumAdviceKernel {
    /// The kernel graph with dense ids of its own. Labels are the input
    /// labels; sentinel vertices get fresh labels above the largest one.
    pub graph: Graph,
    /// Kernel id to input id. Sentinel vertices map to `n`, `n + 1`, `n + 2`
    /// where `n` is the input vertex count.
    pub origin: Vec<Vertex>,
    pub advice: Advice,
    pub param_in: usize,
    pub param_out: usize,
    /// The fresh marker triangle, in kernel ids.
    pub sentinel: Option<Triangle>,
    pub checks: Vec<SizeCheck>,
}

impl EnumAdviceKernel {
    /// Whether every size guarantee holds.
    pub fn bounds_hold(&self) -> bool {
        self.checks.iter().all(SizeCheck::holds)
    }

    /// Streams the input triangles that kernel triangle `t` stands for.
    pub fn expand(&self, t: &Triangle) -> Expansion<'_> {
        let is_sentinel = self.sentinel == Some(*t);
        match &self.advice {
            Advice::Triangles(a) => {
                if is_sentinel {
                    assert!(
                        !a.triangles.is_empty(),
                        "sentinel present with empty advice"
                    );
                    Expansion::List(a.triangles.iter())
                } else {
                    Expansion::Single(Some(t.map(|x| self.origin[x])))
                }
            }
            Advice::Dtdd(a) => {
                if is_sentinel {
                    Expansion::List(a.t1.iter())
                } else {
                    let [x, y, z] = t.vertices().map(|x| &self.origin[x]);
                    Expansion::product([a.members(x), a.members(y), a.members(z)])
                }
            }
        }
    }

    /// All input triangles: enumerate the kernel, then expand.
    pub fn enumerate(&self) -> TriangleSet {
        let mut out = TriangleSet::new();
        for t in enumerate_edge_intersect(&self.graph).iter() {
            out.extend(self.expand(t));
        }
        out
    }
}

/// Constant-delay stream of the triangles behind one kernel triangle.
pub enum Expansion<'a> {
    List(std::slice::Iter<'a, Triangle>),
    Single(Option<Triangle>),
    Product {
        sets: [&'a [Vertex]; 3],
        index: [usize; 3],
        done: bool,
    },
}

impl<'a> Expansion<'a> {
    fn product(sets: [&'a [Vertex]; 3]) -> Self {
        let done = sets.iter().any(|s| s.is_empty());
        Expansion::Product {
            sets,
            index: [0; 3],
            done,
        }
    }
}

impl Iterator for Expansion<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        match self {
            Expansion::List(it) => it.next().copied(),
            Expansion::Single(t) => t.take(),
            Expansion::Product { sets, index, done } => {
                if *done {
                    return None;
                }
                let t = Triangle::new(sets[0][index[0]], sets[1][index[1]], sets[2][index[2]]);
                *done = true;
                for i in (0..3).rev() {
                    index[i] += 1;
                    if index[i] < sets[i].len() {
                        *done = false;
                        break;
                    }
                    index[i] = 0;
                }
                Some(t)
            }
        }
    }
}

/// Builds the kernel graph on `kept` input vertices (ascending) plus three
/// fresh vertices when `with_sentinel_vertices`; the fresh triangle's edges
/// are added only when `sentinel_edges`.
struct KernelGraph {
    graph: Graph,
    origin: Vec<Vertex>,
    sentinel_ids: Option<[Vertex; 3]>,
}

fn kernel_graph(
    g: &Graph,
    kept: &[Vertex],
    edges: impl IntoIterator<Item = Edge>,
    with_sentinel_vertices: bool,
    sentinel_edges: bool,
) -> KernelGraph {
    let n = g.vertex_count();
    let mut local = HashMap::with_capacity(kept.len());
    for (i, &v) in kept.iter().enumerate() {
        local.insert(v, i);
    }
    let mut origin = kept.to_vec();
    let mut labels: Vec<u64> = kept.iter().map(|&v| g.label(v)).collect();
    let mut kernel_edges: Vec<Edge> = edges
        .into_iter()
        .map(|(u, v)| (local[&u], local[&v]))
        .collect();
    let mut sentinel_ids = None;
    if with_sentinel_vertices {
        let fresh = g.labels().iter().max().map_or(0, |&l| l + 1);
        let base = origin.len();
        for i in 0..3 {
            origin.push(n + i);
            labels.push(fresh + i as u64);
        }
        let ids = [base, base + 1, base + 2];
        if sentinel_edges {
            kernel_edges.extend([(ids[0], ids[1]), (ids[0], ids[2]), (ids[1], ids[2])]);
        }
        sentinel_ids = Some(ids);
    }
    let graph = Graph::from_edges(origin.len(), kernel_edges)
        .expect("kernel edges come from a simple graph")
        .with_labels(labels);
    KernelGraph {
        graph,
        origin,
        sentinel_ids,
    }
}

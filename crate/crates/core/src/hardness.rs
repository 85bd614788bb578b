//! A linear-size reduction from triangle detection on arbitrary graphs to
//! graphs whose domination number, chromatic number and diameter are all at
//! most three.
//!
//! Layout of the gadget for an input on `n` vertices: copy `i` (1 to 3) of
//! vertex `v` is `(i - 1) * n + v`, then `l_1, l_2, l_3` are `3n..3n+3` and
//! `r_1, r_2, r_3` are `3n+3..3n+6`.

use std::fmt;

use crate::graph::{bfs_distances, Graph, Vertex};
use crate::oracle::enumerate_edge_intersect;
use crate::triangle::Triangle;

#[derive(Clone, Debug)]
pub struct GpGadget {
    pub g_prime: Graph,
    n: usize,
}

impl GpGadget {
    /// Vertex count of the input graph.
    pub fn original_size(&self) -> usize {
        self.n
    }

    /// Copy `i` (1 to 3) of `v`.
    pub fn copy(&self, v: Vertex, i: usize) -> Vertex {
        assert!((1..=3).contains(&i) && v < self.n);
        (i - 1) * self.n + v
    }

    pub fn apex_l(&self, i: usize) -> Vertex {
        assert!((1..=3).contains(&i));
        3 * self.n + i - 1
    }

    pub fn apex_r(&self, i: usize) -> Vertex {
        assert!((1..=3).contains(&i));
        3 * self.n + 2 + i
    }

    /// Copy index and original vertex of `x`, or `None` for an apex.
    pub fn origin(&self, x: Vertex) -> Option<(usize, Vertex)> {
        (x < 3 * self.n).then(|| (x / self.n + 1, x % self.n))
    }

    /// Color of `x` in the construction's 3-coloring: copy `i` gets `i`,
    /// `l_i` and `r_i` get `1 + (i mod 3)`.
    pub fn color(&self, x: Vertex) -> usize {
        match self.origin(x) {
            Some((i, _)) => i,
            None => {
                let i = (x - 3 * self.n) % 3 + 1;
                1 + i % 3
            }
        }
    }

    /// The input triangle a gadget triangle comes from, or `None` if the
    /// triangle does not have exactly one vertex in each copy.
    pub fn project(&self, t: &Triangle) -> Option<Triangle> {
        let mut seen = [false; 4];
        let mut orig = [0; 3];
        for (slot, &x) in orig.iter_mut().zip(t.vertices().iter()) {
            let (i, v) = self.origin(x)?;
            if seen[i] {
                return None;
            }
            seen[i] = true;
            *slot = v;
        }
        Some(Triangle::new(orig[0], orig[1], orig[2]))
    }
}

pub fn build_gp_gadget(g: &Graph) -> GpGadget {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(6 * g.edge_count() + 6 * n + 6);
    for (x, y) in g.edges() {
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    edges.push((i * n + x, j * n + y));
                }
            }
        }
    }
    for i in 0..3 {
        let (l, r) = (3 * n + i, 3 * n + 3 + i);
        for v in 0..n {
            edges.push((l, i * n + v));
            edges.push((r, i * n + v));
        }
        for j in 0..3 {
            if i != j {
                edges.push((l, 3 * n + 3 + j));
            }
        }
    }
    let g_prime = Graph::from_edges(3 * n + 6, edges).expect("gadget edges are distinct");
    GpGadget { g_prime, n }
}

/// Outcome of checking a gadget against its input. The domination and
/// coloring checks use the construction's own witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub vertices: usize,
    pub edges: usize,
    pub expected_vertices: usize,
    pub expected_edges: usize,
    pub input_has_triangle: bool,
    pub gadget_has_triangle: bool,
    pub triangle_equiv: bool,
    /// Every gadget triangle has one vertex per copy and projects onto an
    /// input triangle, and every input triangle lifts.
    pub triangles_project: bool,
    /// Copies and apex neighborhoods are independent sets.
    pub independence_ok: bool,
    pub dominating_ok: bool,
    pub coloring_ok: bool,
    /// `None` if the gadget is disconnected.
    pub diameter: Option<usize>,
}

impl Report {
    pub fn size_ok(&self) -> bool {
        self.vertices == self.expected_vertices && self.edges == self.expected_edges
    }

    pub fn diameter_ok(&self) -> bool {
        self.diameter.is_some_and(|d| d <= 3)
    }

    pub fn all_ok(&self) -> bool {
        self.size_ok()
            && self.triangle_equiv
            && self.triangles_project
            && self.independence_ok
            && self.dominating_ok
            && self.coloring_ok
            && self.diameter_ok()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "vertices: {} (expected {})",
            self.vertices, self.expected_vertices
        )?;
        writeln!(
            f,
            "edges: {} (expected {})",
            self.edges, self.expected_edges
        )?;
        writeln!(f, "size_ok: {}", self.size_ok())?;
        match self.diameter {
            Some(d) => writeln!(f, "diameter: {d} (≤3)")?,
            None => writeln!(f, "diameter: infinite (≤3)")?,
        }
        writeln!(f, "diameter_ok: {}", self.diameter_ok())?;
        writeln!(f, "dominating_ok: {}", self.dominating_ok)?;
        writeln!(f, "coloring_ok: {}", self.coloring_ok)?;
        writeln!(f, "independence_ok: {}", self.independence_ok)?;
        writeln!(f, "input_has_triangle: {}", self.input_has_triangle)?;
        writeln!(f, "gadget_has_triangle: {}", self.gadget_has_triangle)?;
        writeln!(f, "triangles_project: {}", self.triangles_project)?;
        write!(f, "triangle_equiv: {}", self.triangle_equiv)
    }
}

fn is_triangle(g: &Graph, t: &Triangle) -> bool {
    let [x, y, z] = t.vertices();
    g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)
}

fn independent(g: &Graph, set: &[Vertex]) -> bool {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    set.iter()
        .all(|&v| g.neighbors(v).iter().all(|&w| !inside[w]))
}

pub fn verify_gadget(gg: &GpGadget, g: &Graph) -> Report {
    let n = g.vertex_count();
    let h = &gg.g_prime;
    assert_eq!(gg.n, n, "gadget was built from a different graph");

    let input = enumerate_edge_intersect(g);
    let gadget = enumerate_edge_intersect(h);
    let lifted = input.iter().all(|t| {
        let [x, y, z] = t.vertices();
        [
            (x, y, z),
            (x, z, y),
            (y, x, z),
            (y, z, x),
            (z, x, y),
            (z, y, x),
        ]
        .into_iter()
        .all(|(a, b, c)| {
            is_triangle(
                h,
                &Triangle::new(gg.copy(a, 1), gg.copy(b, 2), gg.copy(c, 3)),
            )
        })
    });
    let projected = gadget
        .iter()
        .all(|t| gg.project(t).is_some_and(|p| is_triangle(g, &p)));

    let mut independence_ok = true;
    for i in 1..=3 {
        let copy: Vec<Vertex> = (0..n).map(|v| gg.copy(v, i)).collect();
        independence_ok &= independent(h, &copy);
        independence_ok &= independent(h, h.neighbors(gg.apex_l(i)));
        independence_ok &= independent(h, h.neighbors(gg.apex_r(i)));
    }

    let mut dominated = vec![false; h.vertex_count()];
    for i in 1..=3 {
        let l = gg.apex_l(i);
        dominated[l] = true;
        for &w in h.neighbors(l) {
            dominated[w] = true;
        }
    }
    let coloring_ok = h.edges().all(|(x, y)| gg.color(x) != gg.color(y));

    let mut diameter = Some(0);
    for s in h.vertices() {
        let far = bfs_distances(h, s).into_iter().max().unwrap_or(0);
        diameter = if far == usize::MAX {
            None
        } else {
            diameter.map(|d: usize| d.max(far))
        };
        if diameter.is_none() {
            break;
        }
    }

    Report {
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        expected_vertices: 3 * n + 6,
        expected_edges: 6 * g.edge_count() + 6 * n + 6,
        input_has_triangle: !input.is_empty(),
        gadget_has_triangle: !gadget.is_empty(),
        triangle_equiv: input.is_empty() == gadget.is_empty(),
        triangles_project: lifted && projected,
        independence_ok,
        dominating_ok: dominated.iter().all(|&d| d),
        coloring_ok,
        diameter,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn figure_graph() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn figure_graph_sizes() {
        let gg = build_gp_gadget(&figure_graph());
        assert_eq!(gg.g_prime.vertex_count(), 18);
        assert_eq!(gg.g_prime.edge_count(), 54);
        let report = verify_gadget(&gg, &figure_graph());
        assert!(report.all_ok(), "{report}");
        assert!(report.input_has_triangle && report.gadget_has_triangle);
    }

    #[test]
    fn edgeless_input() {
        let g = Graph::empty(3);
        let gg = build_gp_gadget(&g);
        assert_eq!(
            (gg.g_prime.vertex_count(), gg.g_prime.edge_count()),
            (15, 24)
        );
        let report = verify_gadget(&gg, &g);
        assert!(report.all_ok(), "{report}");
        assert!(!report.gadget_has_triangle);
    }

    #[test]
    fn triangle_lifts_across_copies() {
        let g = generate::complete(3);
        let gg = build_gp_gadget(&g);
        let (a, b, c) = (gg.copy(0, 1), gg.copy(1, 2), gg.copy(2, 3));
        assert!(
            gg.g_prime.has_edge(a, b) && gg.g_prime.has_edge(b, c) && gg.g_prime.has_edge(a, c)
        );
        assert_eq!(
            gg.project(&Triangle::new(a, b, c)),
            Some(Triangle::new(0, 1, 2))
        );
        assert_eq!(
            gg.project(&Triangle::new(gg.copy(0, 1), gg.copy(1, 1), c)),
            None
        );
    }

    #[test]
    fn five_cycle_stays_triangle_free() {
        let g = generate::cycle(5);
        let report = verify_gadget(&build_gp_gadget(&g), &g);
        assert!(report.all_ok(), "{report}");
        assert!(!report.input_has_triangle && !report.gadget_has_triangle);
        assert!(report.diameter.unwrap() <= 3);
    }

    #[test]
    fn layout_and_colors() {
        let gg = build_gp_gadget(&generate::path(2));
        assert_eq!(
            [gg.apex_l(1), gg.apex_l(3), gg.apex_r(1), gg.apex_r(3)],
            [6, 8, 9, 11]
        );
        assert_eq!(gg.origin(3), Some((2, 1)));
        assert_eq!(gg.origin(6), None);
        assert_eq!([gg.color(0), gg.color(2), gg.color(5)], [1, 2, 3]);
        assert_eq!([gg.color(6), gg.color(7), gg.color(8)], [2, 3, 1]);
        assert_eq!([gg.color(9), gg.color(10), gg.color(11)], [2, 3, 1]);
    }

    #[test]
    fn empty_input_gives_six_cycle() {
        let g = Graph::empty(0);
        let report = verify_gadget(&build_gp_gadget(&g), &g);
        assert_eq!((report.vertices, report.edges), (6, 6));
        assert_eq!(report.diameter, Some(3));
        assert!(report.all_ok());
    }

    #[test]
    fn report_lines() {
        let g = generate::complete(3);
        let text = verify_gadget(&build_gp_gadget(&g), &g).to_string();
        assert!(text.lines().all(|l| l.contains(": ")));
        assert!(text.contains("triangle_equiv: true"));
    }
}

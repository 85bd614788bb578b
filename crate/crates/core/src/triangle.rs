//! Canonical triangles and triangle collections.

use std::fmt;

use crate::graph::{Graph, Vertex};

/// A triangle as a strictly increasing vertex triple.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle([Vertex; 3]);

impl Triangle {
    /// Builds the canonical form of `{a, b, c}`. The three ids must differ.
    #[inline]
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        debug_assert!(t[0] < t[1] && t[1] < t[2], "triangle needs three vertices");
        Triangle(t)
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// True when all three pairs are edges of `g`.
    pub fn is_in(&self, g: &Graph) -> bool {
        let [a, b, c] = self.0;
        c < g.vertex_count() && g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)
    }

    /// Applies a vertex map and re-canonicalizes.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        let [a, b, c] = self.0;
        Triangle::new(f(a), f(b), f(c))
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "{{{a},{b},{c}}}")
    }
}

impl From<[Vertex; 3]> for Triangle {
    fn from(t: [Vertex; 3]) -> Self {
        Triangle::new(t[0], t[1], t[2])
    }
}

/// An ordered sequence of triangles; its length is the triangle count #T.
///
/// Solvers emit each triangle once, so the sequence is a set. Comparison
/// helpers ignore the emission order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TriangleSet(Vec<Triangle>);

impl TriangleSet {
    pub fn new() -> Self {
        TriangleSet(Vec::new())
    }

    pub fn with_capacity(n: usize) -> Self {
        TriangleSet(Vec::with_capacity(n))
    }

    #[inline]
    pub fn push(&mut self, t: Triangle) {
        self.0.push(t);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Triangle> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Triangle] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Triangle> {
        self.0
    }

    pub fn extend_from(&mut self, other: &TriangleSet) {
        self.0.extend_from_slice(&other.0);
    }

    /// The triangles in ascending lexicographic order.
    pub fn sorted(&self) -> Vec<Triangle> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// True when no triangle appears twice.
    pub fn is_duplicate_free(&self) -> bool {
        let v = self.sorted();
        v.windows(2).all(|w| w[0] != w[1])
    }

    /// Set equality, ignoring order.
    pub fn set_eq(&self, other: &TriangleSet) -> bool {
        self.len() == other.len() && self.sorted() == other.sorted()
    }

    /// Up to `limit` triangles from each side of the symmetric difference.
    pub fn symmetric_difference(
        &self,
        other: &TriangleSet,
        limit: usize,
    ) -> (Vec<Triangle>, Vec<Triangle>) {
        let a = self.sorted();
        let b = other.sorted();
        let only_a = a
            .iter()
            .filter(|t| b.binary_search(t).is_err())
            .take(limit)
            .copied()
            .collect();
        let only_b = b
            .iter()
            .filter(|t| a.binary_search(t).is_err())
            .take(limit)
            .copied()
            .collect();
        (only_a, only_b)
    }
}

impl fmt::Debug for TriangleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<Triangle> for TriangleSet {
    fn from_iter<I: IntoIterator<Item = Triangle>>(iter: I) -> Self {
        TriangleSet(iter.into_iter().collect())
    }
}

impl Extend<Triangle> for TriangleSet {
    fn extend<I: IntoIterator<Item = Triangle>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for TriangleSet {
    type Item = Triangle;
    type IntoIter = std::vec::IntoIter<Triangle>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a TriangleSet {
    type Item = &'a Triangle;
    type IntoIter = std::slice::Iter<'a, Triangle>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// The Itai–Rodeh bound: a graph with `m` edges has at most `m^{3/2}`
/// triangles.
pub fn within_triangle_bound(count: usize, m: usize) -> bool {
    // count^2 <= m^3 avoids floating point.
    (count as u128) * (count as u128) <= (m as u128).pow(3)
}

/// Formats a triangle with the external labels of `g`, ascending by label.
pub fn format_with_labels(t: &Triangle, g: &Graph) -> String {
    let mut l = t.vertices().map(|v| g.label(v));
    l.sort_unstable();
    format!("{} {} {}", l[0], l[1], l[2])
}

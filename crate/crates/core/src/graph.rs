//! Simple undirected graphs with dense vertex ids and sorted adjacency.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, ParseError};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// An undirected edge, always stored with `0 < 1`.
pub type Edge = (Vertex, Vertex);

/// Normalizes an edge so the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple undirected graph.
///
/// Vertices are `0..n`. Every adjacency list is strictly ascending and the
/// adjacency relation is symmetric. Each dense id carries an external label,
/// which is the integer it had in the input file (or the id itself for graphs
/// built in code).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("m", &self.edge_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
            labels: (0..n as u64).collect(),
        }
    }

    /// Builds a graph from an edge list over `0..n`.
    ///
    /// Self-loops, parallel edges and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge { u, v: w[0] });
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
            labels: (0..n as u64).collect(),
        })
    }

    /// Builds a graph from edges that are known to be valid; duplicates are
    /// dropped. Used by constructions whose output is simple by design.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adjacency,
            edge_count: twice / 2,
            labels: (0..n as u64).collect(),
        }
    }

    /// Replaces the external labels. `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Self {
        assert_eq!(labels.len(), self.vertex_count(), "one label per vertex");
        self.labels = labels;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Ascending neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Membership test by binary search on the shorter list.
    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// The subgraph induced by the vertices with `keep[v] == true`.
    ///
    /// Vertices are renumbered densely in ascending order; labels are carried
    /// over from `self`.
    pub fn induced_subgraph(&self, keep: &[bool]) -> Subgraph {
        assert_eq!(keep.len(), self.vertex_count());
        let mut to_parent = Vec::new();
        let mut to_sub = vec![usize::MAX; self.vertex_count()];
        for v in self.vertices().filter(|&v| keep[v]) {
            to_sub[v] = to_parent.len();
            to_parent.push(v);
        }
        let mut edge_count = 0;
        let adjacency: Vec<Vec<Vertex>> = to_parent
            .iter()
            .map(|&v| {
                let list: Vec<Vertex> = self
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| to_sub[w])
                    .collect();
                edge_count += list.len();
                list
            })
            .collect();
        let labels = to_parent.iter().map(|&v| self.labels[v]).collect();
        Subgraph {
            graph: Graph {
                adjacency,
                edge_count: edge_count / 2,
                labels,
            },
            to_parent,
        }
    }

    /// `self - removed`, as an induced subgraph.
    pub fn without_vertices(&self, removed: &[Vertex]) -> Subgraph {
        let mut keep = vec![true; self.vertex_count()];
        for &v in removed {
            keep[v] = false;
        }
        self.induced_subgraph(&keep)
    }

    /// Writes the edge list with external labels, one `u v` pair per line,
    /// smaller dense id first, edges in ascending lexicographic order.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", self.labels[u], self.labels[v])?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("edge list is ASCII")
    }
}

/// An induced subgraph together with the map back to the parent's ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_parent: Vec<Vertex>,
}

/// Parses the edge-list format.
///
/// Each non-blank, non-`#` line holds two whitespace-separated non-negative
/// integer labels. Labels are renumbered to dense ids in order of first
/// appearance. Self-loops and repeated edges are fatal.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    let mut ids: HashMap<u64, Vertex> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut adjacency: Vec<Vec<Vertex>> = Vec::new();
    let mut seen: std::collections::HashSet<Edge> = std::collections::HashSet::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| ParseError::Io {
            line: line_no,
            source: e,
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (a, b) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(ParseError::Malformed {
                    line: line_no,
                    content: line.clone(),
                })
            }
        };
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| ParseError::Malformed {
                line: line_no,
                content: line.clone(),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a == b {
            return Err(ParseError::SelfLoop {
                line: line_no,
                label: a,
            });
        }
        let mut intern = |label: u64| {
            *ids.entry(label).or_insert_with(|| {
                labels.push(label);
                adjacency.push(Vec::new());
                labels.len() - 1
            })
        };
        let (u, v) = (intern(a), intern(b));
        if !seen.insert(edge(u, v)) {
            return Err(ParseError::DuplicateEdge {
                line: line_no,
                u: a,
                v: b,
            });
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }

    for list in adjacency.iter_mut() {
        list.sort_unstable();
    }
    Ok(Graph {
        adjacency,
        edge_count: seen.len(),
        labels,
    })
}

/// Convenience wrapper around [`parse_edge_list`] for in-memory text.
pub fn parse_edge_list_str(text: &str) -> Result<Graph, ParseError> {
    parse_edge_list(text.as_bytes())
}

/// Breadth-first search distances from `source`; `usize::MAX` marks
/// unreachable vertices.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

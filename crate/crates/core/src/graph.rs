//! Immutable undirected simple graphs and the edge-list text format.
//!
//! Vertices are dense indices `0..n`. Every graph also carries the external
//! label of each vertex, which is what appears in all user-facing output.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// An undirected simple graph stored as sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` isolated vertices labelled `1..=n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            labels: (1..=n as u64).collect(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph on `n` vertices labelled `1..=n` from index pairs.
    /// Duplicate edges collapse; self-loops and out-of-range indices are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (1..=n as u64).collect();
        Self::with_labels(labels, edges)
    }

    /// Builds a graph with explicit external labels (one per index).
    pub fn with_labels<I>(labels: Vec<u64>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::VertexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: labels[u],
                });
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            labels,
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Builds a graph from labelled edges. Labels are mapped to indices in
    /// order of first appearance.
    pub fn from_labelled_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut interner = LabelInterner::default();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop { line: 0, label: a });
            }
            pairs.push((interner.intern(a), interner.intern(b)));
        }
        Self::with_labels(interner.labels, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Sorted neighbour indices of `v`. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                n: self.adj.len(),
            })
        }
    }

    /// Same graph with vertices re-indexed in ascending label order.
    pub fn sorted_by_label(&self) -> Graph {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by_key(|&v| self.labels[v]);
        let mut position = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let adj = order
            .iter()
            .map(|&old| {
                let mut ns: Vec<usize> = self.adj[old].iter().map(|&w| position[w]).collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph {
            labels: order.iter().map(|&old| self.labels[old]).collect(),
            adj,
        }
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Edge-list text using external labels. Edges are sorted by label pair;
    /// isolated vertices follow as single-label lines.
    pub fn to_edge_list(&self) -> String {
        let mut pairs: Vec<(u64, u64)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u], self.labels[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let mut isolated: Vec<u64> = (0..self.vertex_count())
            .filter(|&v| self.adj[v].is_empty())
            .map(|v| self.labels[v])
            .collect();
        isolated.sort_unstable();

        let mut out = String::new();
        for (a, b) in pairs {
            let _ = writeln!(out, "{a} {b}");
        }
        for v in isolated {
            let _ = writeln!(out, "{v}");
        }
        out
    }
}

#[derive(Default)]
struct LabelInterner {
    labels: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl LabelInterner {
    fn intern(&mut self, label: u64) -> usize {
        *self.index.entry(label).or_insert_with(|| {
            self.labels.push(label);
            self.labels.len() - 1
        })
    }
}

/// Parses the edge-list text format.
///
/// Each non-blank line that does not start with `#` holds two non-negative
/// integer labels `u v`. A line with a single label declares a vertex without
/// adding an edge, which keeps isolated vertices representable. Labels are
/// assigned dense indices in order of first appearance and duplicate edges
/// collapse. Errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut interner = LabelInterner::default();
    let mut pairs = Vec::new();

    for (offset, raw) in text.lines().enumerate() {
        let line = offset + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let parse = |token: &str| {
            token.parse::<u64>().map_err(|_| Error::InvalidToken {
                line,
                token: token.to_string(),
            })
        };
        match tokens.as_slice() {
            [single] => {
                interner.intern(parse(single)?);
            }
            [a, b] => {
                let (a, b) = (parse(a)?, parse(b)?);
                if a == b {
                    return Err(Error::SelfLoop { line, label: a });
                }
                pairs.push((interner.intern(a), interner.intern(b)));
            }
            _ => {
                return Err(Error::TokenCount {
                    line,
                    count: tokens.len(),
                })
            }
        }
    }
    Graph::with_labels(interner.labels, pairs)
}

/// `N(u) ∩ N(v)` as sorted indices. With `u == v` this is `N(u)`.
pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out)
}

/// `N(u) \ N(v)` as sorted indices. Argument order matters.
pub fn exclusive_neighbors(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let other = g.neighbors(v);
    Ok(g.neighbors(u)
        .iter()
        .copied()
        .filter(|w| other.binary_search(w).is_err())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEVEN_VERTEX: &str = "1 2\n1 6\n2 5\n3 4\n4 5\n5 6\n5 7\n6 7\n";

    fn labels_of(g: &Graph, vs: &[usize]) -> Vec<u64> {
        let mut out: Vec<u64> = vs.iter().map(|&v| g.label(v)).collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn parses_seven_vertex_graph() {
        let g = parse_edge_list(SEVEN_VERTEX).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 8);
        let five = g.index_of(5).unwrap();
        assert_eq!(labels_of(&g, g.neighbors(five)), vec![2, 4, 6, 7]);
        // first-appearance order
        assert_eq!(g.labels(), &[1, 2, 6, 5, 3, 4, 7]);
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let g = parse_edge_list("").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        let g = parse_edge_list("# just a comment\n\n   \n").unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_edge_list("1 2\n\n3 3\n").unwrap_err();
        assert_eq!(err, Error::SelfLoop { line: 3, label: 3 });
    }

    #[test]
    fn bad_token_reports_line() {
        let err = parse_edge_list("1 2\n2 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::InvalidToken {
                line: 2,
                token: "x".into()
            }
        );
        assert!(matches!(
            parse_edge_list("-1 2").unwrap_err(),
            Error::InvalidToken { line: 1, .. }
        ));
        assert_eq!(
            parse_edge_list("1 2 3").unwrap_err(),
            Error::TokenCount { line: 1, count: 3 }
        );
    }

    #[test]
    fn duplicate_edges_collapse_and_isolated_vertices_survive() {
        let g = parse_edge_list("1 2\n2 1\n1 2\n9\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(g.index_of(9).unwrap()), 0);
    }

    #[test]
    fn neighbour_set_operations() {
        let g = parse_edge_list(SEVEN_VERTEX).unwrap().sorted_by_label();
        // labels 1..=7 map to indices 0..=6
        assert_eq!(
            labels_of(&g, &common_neighbors(&g, 0, 4).unwrap()),
            vec![2, 6]
        );
        assert_eq!(common_neighbors(&g, 4, 4).unwrap(), g.neighbors(4).to_vec());
        assert!(common_neighbors(&g, 2, 5).unwrap().is_empty());

        assert_eq!(
            labels_of(&g, &exclusive_neighbors(&g, 5, 0).unwrap()),
            vec![1, 5, 7]
        );
        assert!(exclusive_neighbors(&g, 3, 3).unwrap().is_empty());
        assert_eq!(
            labels_of(&g, &exclusive_neighbors(&g, 1, 4).unwrap()),
            vec![1, 5]
        );

        assert_eq!(
            common_neighbors(&g, 0, 7).unwrap_err(),
            Error::VertexOutOfRange { index: 7, n: 7 }
        );
        assert!(exclusive_neighbors(&g, 9, 0).is_err());
    }

    #[test]
    fn edge_list_output_is_sorted_by_label() {
        let g = parse_edge_list("7 6\n6 5\n5 7\n2 5\n1 6\n1 2\n4 5\n3 4\n").unwrap();
        assert_eq!(g.to_edge_list(), SEVEN_VERTEX);
        let g = parse_edge_list("3\n1 2\n").unwrap();
        assert_eq!(g.to_edge_list(), "1 2\n3\n");
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_labelled_edges([(4, 4)]).is_err());
    }
}

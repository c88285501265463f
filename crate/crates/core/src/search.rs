//! Breadth-first traversal primitives: level decomposition, components,
//! diameter and girth. These are the classical ground truth for the
//! matrix-derived characterizations.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

/// A path or cycle length that may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }

    pub fn is_at_most(self, bound: usize) -> bool {
        matches!(self, Length::Finite(v) if v <= bound)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(v) => write!(f, "{v}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

/// BFS distances from a root. `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelAssignment {
    pub root: usize,
    pub level: Vec<Option<usize>>,
}

impl LevelAssignment {
    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.level[v]
    }

    /// Vertices at exactly distance `k`, ascending.
    pub fn at_level(&self, k: usize) -> Vec<usize> {
        self.level
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Some(k))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn eccentricity(&self) -> usize {
        self.level.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn reaches_all(&self) -> bool {
        self.level.iter().all(Option::is_some)
    }
}

pub fn bfs_levels(g: &Graph, root: usize) -> Result<LevelAssignment> {
    g.check_vertex(root)?;
    let mut level = vec![None; g.vertex_count()];
    level[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let next = level[u].map(|l| l + 1);
        for &w in g.neighbors(u) {
            if level[w].is_none() {
                level[w] = next;
                queue.push_back(w);
            }
        }
    }
    Ok(LevelAssignment { root, level })
}

/// Connected components with ids assigned in order of lowest member index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub count: usize,
    pub membership: Vec<usize>,
}

impl ComponentPartition {
    pub fn members(&self, component: usize) -> Vec<usize> {
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == component)
            .map(|(v, _)| v)
            .collect()
    }

    /// True when every component is regular (all members share one degree).
    pub fn all_regular(&self, g: &Graph) -> bool {
        let mut degree: Vec<Option<usize>> = vec![None; self.count];
        for (v, &c) in self.membership.iter().enumerate() {
            let d = g.degree(v);
            match degree[c] {
                None => degree[c] = Some(d),
                Some(existing) if existing != d => return false,
                _ => {}
            }
        }
        true
    }
}

pub fn connected_components(g: &Graph) -> ComponentPartition {
    let n = g.vertex_count();
    let mut membership = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if membership[start] != usize::MAX {
            continue;
        }
        membership[start] = count;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if membership[w] == usize::MAX {
                    membership[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    ComponentPartition { count, membership }
}

/// Largest pairwise distance. Disconnected graphs and graphs with fewer than
/// two vertices have no meaningful diameter and report `Infinite`.
pub fn diameter(g: &Graph) -> Length {
    let n = g.vertex_count();
    if n < 2 {
        return Length::Infinite;
    }
    let mut best = 0;
    for root in 0..n {
        let levels = bfs_levels(g, root).expect("root in range");
        if !levels.reaches_all() {
            return Length::Infinite;
        }
        best = best.max(levels.eccentricity());
    }
    Length::Finite(best)
}

/// Length of a shortest cycle, `Infinite` for forests.
///
/// Runs a BFS from every vertex; a non-tree edge `(u, w)` seen from root `r`
/// closes a closed walk of length `d(u) + d(w) + 1`, and the minimum over all
/// roots is attained by a root lying on a shortest cycle.
pub fn girth(g: &Graph) -> Length {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Length::Infinite
    } else {
        Length::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn levels_from_vertex_five() {
        let g = fixtures::seven_vertex();
        let five = g.index_of(5).unwrap();
        let levels = bfs_levels(&g, five).unwrap();
        let labels = |vs: Vec<usize>| vs.into_iter().map(|v| g.label(v)).collect::<Vec<_>>();
        assert_eq!(labels(levels.at_level(0)), vec![5]);
        assert_eq!(labels(levels.at_level(1)), vec![2, 4, 6, 7]);
        assert_eq!(labels(levels.at_level(2)), vec![1, 3]);
    }

    #[test]
    fn single_vertex_levels() {
        let g = Graph::empty(1);
        let levels = bfs_levels(&g, 0).unwrap();
        assert_eq!(levels.level, vec![Some(0)]);
        assert!(bfs_levels(&g, 1).is_err());
    }

    #[test]
    fn cube_has_one_antipode() {
        let g = fixtures::cube();
        for root in 0..8 {
            let levels = bfs_levels(&g, root).unwrap();
            assert_eq!(levels.at_level(3).len(), 1);
            assert_eq!(levels.at_level(1).len(), 3);
            assert_eq!(levels.at_level(2).len(), 3);
        }
    }

    #[test]
    fn unreachable_vertices_are_marked() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let levels = bfs_levels(&g, 0).unwrap();
        assert_eq!(levels.level, vec![Some(0), Some(1), None, None]);
    }

    #[test]
    fn components() {
        let g = fixtures::two_squares();
        let parts = connected_components(&g);
        assert_eq!(parts.count, 2);
        let labels = |c| {
            parts
                .members(c)
                .into_iter()
                .map(|v| g.label(v))
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(0), vec![1, 2, 5, 6]);
        assert_eq!(labels(1), vec![3, 4, 7, 8]);

        assert_eq!(connected_components(&fixtures::seven_vertex()).count, 1);
        let parts = connected_components(&Graph::empty(3));
        assert_eq!(parts.count, 3);
        assert_eq!(parts.membership, vec![0, 1, 2]);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&fixtures::cube()), Length::Finite(3));
        assert_eq!(diameter(&fixtures::complete(4)), Length::Finite(1));
        assert_eq!(diameter(&fixtures::seven_vertex()), Length::Finite(4));
        assert_eq!(diameter(&fixtures::two_squares()), Length::Infinite);
        assert_eq!(diameter(&Graph::empty(1)), Length::Infinite);
        assert_eq!(diameter(&Graph::empty(0)), Length::Infinite);
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&fixtures::seven_vertex()), Length::Finite(3));
        assert_eq!(girth(&fixtures::two_squares()), Length::Finite(4));
        assert_eq!(girth(&fixtures::path(6)), Length::Infinite);
        assert_eq!(girth(&fixtures::petersen()), Length::Finite(5));
        assert_eq!(girth(&fixtures::cycle(7)), Length::Finite(7));
        assert_eq!(girth(&fixtures::cube()), Length::Finite(4));
        // star plus disjoint edge: still a forest
        let forest = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap();
        assert_eq!(girth(&forest), Length::Infinite);
    }

    #[test]
    fn length_ordering() {
        assert!(Length::Finite(5) < Length::Infinite);
        assert!(Length::Finite(2).is_at_most(2));
        assert!(!Length::Infinite.is_at_most(100));
        assert_eq!(Length::Infinite.to_string(), "infinite");
    }
}

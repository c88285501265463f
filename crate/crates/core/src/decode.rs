//! Reading the first two BFS levels around a vertex out of a single matrix row.
//!
//! In row `i`, a positive entry `c` at `j` means `j` is a neighbour of `i`
//! with `c - 1` neighbours of its own at distance two from `i`. A negative
//! off-diagonal entry `-c` means `j` sits at distance two and is reached by
//! `c` paths of length two. Zero means distance at least three, or an
//! isolated endpoint.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::nm::NeighborhoodMatrix;
use crate::search::bfs_levels;

/// What one row of a neighbourhood matrix says about its vertex.
/// Positions are 0-based matrix indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowProfile {
    pub row_index: usize,
    pub level1: BTreeSet<usize>,
    /// Level-2 position to the number of its edges into level 1.
    pub level2: BTreeMap<usize, u64>,
    /// Level-1 position to the number of its edges into level 2.
    pub out_edge_count: BTreeMap<usize, u64>,
    /// Every position attaining the row minimum. The diagonal is always one.
    pub diagonal_candidates: BTreeSet<usize>,
    pub zero_positions: BTreeSet<usize>,
    /// `-(row minimum)`, shared by every candidate.
    pub degree: u64,
}

impl RowProfile {
    pub fn diagonal_is_unique(&self) -> bool {
        self.diagonal_candidates.len() == 1
    }

    /// Edges from level 1 into level 2 counted from both sides.
    pub fn crossing_edge_counts(&self) -> (u64, u64) {
        (
            self.out_edge_count.values().sum(),
            self.level2.values().sum(),
        )
    }
}

/// Decodes row `i` of `m`.
///
/// A row without any negative entry is rejected unless it is entirely zero,
/// which is the row of an isolated vertex.
pub fn row_profile(m: &NeighborhoodMatrix, i: usize) -> Result<RowProfile> {
    if i >= m.dimension() {
        return Err(Error::VertexOutOfRange {
            index: i,
            n: m.dimension(),
        });
    }
    let row = m.row(i);
    let not_row = |reason: &str| Error::NotNeighborhoodRow {
        row: i,
        reason: reason.to_string(),
    };

    let minimum = row.iter().copied().min().unwrap_or(0);
    let all_zero = row.iter().all(|&v| v == 0);
    if minimum >= 0 && !all_zero {
        return Err(not_row("no negative entry"));
    }
    if row[i] != minimum {
        return Err(not_row("diagonal entry is not the row minimum"));
    }

    let mut profile = RowProfile {
        row_index: i,
        level1: BTreeSet::new(),
        level2: BTreeMap::new(),
        out_edge_count: BTreeMap::new(),
        diagonal_candidates: BTreeSet::new(),
        zero_positions: BTreeSet::new(),
        degree: minimum.unsigned_abs(),
    };
    for (j, &v) in row.iter().enumerate() {
        if v == minimum {
            profile.diagonal_candidates.insert(j);
        }
        match v {
            0 => {
                profile.zero_positions.insert(j);
            }
            v if v > 0 => {
                profile.level1.insert(j);
                profile.out_edge_count.insert(j, (v - 1) as u64);
            }
            v if j != i => {
                profile.level2.insert(j, v.unsigned_abs());
            }
            _ => {}
        }
    }
    if profile.level1.len() as u64 != profile.degree {
        return Err(not_row("positive entry count differs from the degree"));
    }
    Ok(profile)
}

/// Root, its neighbours and the vertices at distance two, with only the
/// edges that cross between consecutive levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLevelSubgraph {
    pub root: usize,
    pub level1: BTreeSet<usize>,
    pub level2: BTreeSet<usize>,
    /// `(upper, lower)` pairs: root→level1 first, then level1→level2.
    pub edges: BTreeSet<(usize, usize)>,
}

impl TwoLevelSubgraph {
    /// Level-2 neighbours of a level-1 vertex inside the subgraph.
    pub fn down_degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v && self.level2.contains(&b))
            .count() as u64
    }

    /// Level-1 neighbours of a level-2 vertex inside the subgraph.
    pub fn up_degree(&self, v: usize) -> u64 {
        self.edges.iter().filter(|&&(_, b)| b == v).count() as u64
    }

    /// Checks the incidence counts against row `root` of the matrix:
    /// `η_root,j - 1` down-edges per level-1 `j`, `|η_root,k|` up-edges per
    /// level-2 `k`, and nothing else non-zero.
    pub fn matches_row(&self, row: &[i64]) -> bool {
        row.iter().enumerate().all(|(j, &v)| {
            if j == self.root {
                v == -(self.level1.len() as i64)
            } else if self.level1.contains(&j) {
                v > 0 && self.down_degree(j) == (v - 1) as u64
            } else if self.level2.contains(&j) {
                v < 0 && self.up_degree(j) == v.unsigned_abs()
            } else {
                v == 0
            }
        })
    }
}

pub fn two_level_subgraph(g: &Graph, root: usize) -> Result<TwoLevelSubgraph> {
    let levels = bfs_levels(g, root)?;
    let level1: BTreeSet<usize> = levels.at_level(1).into_iter().collect();
    let level2: BTreeSet<usize> = levels.at_level(2).into_iter().collect();
    let mut edges: BTreeSet<(usize, usize)> = level1.iter().map(|&v| (root, v)).collect();
    for &v in &level1 {
        for &w in g.neighbors(v) {
            if level2.contains(&w) {
                edges.insert((v, w));
            }
        }
    }
    Ok(TwoLevelSubgraph {
        root,
        level1,
        level2,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nm::build_nm;

    #[test]
    fn decodes_row_five() {
        let rows = fixtures::SEVEN_VERTEX_NM
            .iter()
            .map(|r| r.to_vec())
            .collect();
        let m = NeighborhoodMatrix::from_rows(rows, None).unwrap();
        let p = row_profile(&m, 4).unwrap();
        assert_eq!(p.level1, BTreeSet::from([1, 3, 5, 6]));
        assert_eq!(p.level2, BTreeMap::from([(0, 2), (2, 1)]));
        assert_eq!(p.degree, 4);
        assert_eq!(p.diagonal_candidates, BTreeSet::from([4]));
        assert!(p.diagonal_is_unique());
        assert_eq!(
            p.out_edge_count,
            BTreeMap::from([(1, 1), (3, 1), (5, 1), (6, 0)])
        );
        assert_eq!(p.crossing_edge_counts(), (3, 3));
        assert!(p.zero_positions.is_empty());
    }

    #[test]
    fn isolated_vertex_row() {
        let m = build_nm(&Graph::empty(3));
        let p = row_profile(&m, 1).unwrap();
        assert!(p.level1.is_empty());
        assert!(p.level2.is_empty());
        assert_eq!(p.degree, 0);
        assert_eq!(p.zero_positions.len(), 3);
    }

    #[test]
    fn path_row_has_tied_minimum() {
        let m = build_nm(&fixtures::path(3));
        assert_eq!(m.row(0), &[-1, 2, -1]);
        let p = row_profile(&m, 0).unwrap();
        assert_eq!(p.diagonal_candidates, BTreeSet::from([0, 2]));
        assert!(!p.diagonal_is_unique());
        assert_eq!(p.level2, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn malformed_rows() {
        let m = NeighborhoodMatrix::from_rows(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert!(matches!(
            row_profile(&m, 0),
            Err(Error::NotNeighborhoodRow { row: 0, .. })
        ));
        let m = NeighborhoodMatrix::from_rows(vec![vec![-1, -2], vec![1, -1]], None).unwrap();
        assert!(row_profile(&m, 0).is_err());
        assert!(row_profile(&m, 2).is_err());
    }

    #[test]
    fn two_level_subgraph_of_five() {
        let g = fixtures::seven_vertex();
        let sub = two_level_subgraph(&g, 4).unwrap();
        let labelled: BTreeSet<(u64, u64)> = sub
            .edges
            .iter()
            .map(|&(a, b)| (g.label(a), g.label(b)))
            .collect();
        let expected = BTreeSet::from([(5, 2), (5, 4), (5, 6), (5, 7), (2, 1), (4, 3), (6, 1)]);
        assert_eq!(labelled, expected);
        assert!(sub.matches_row(build_nm(&g).row(4)));
    }

    #[test]
    fn isolated_root_subgraph() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let sub = two_level_subgraph(&g, 2).unwrap();
        assert!(sub.level1.is_empty() && sub.level2.is_empty() && sub.edges.is_empty());
        assert!(sub.matches_row(build_nm(&g).row(2)));
    }

    #[test]
    fn cube_subgraph() {
        let g = fixtures::cube();
        let m = build_nm(&g);
        for root in 0..8 {
            let sub = two_level_subgraph(&g, root).unwrap();
            assert_eq!(sub.level1.len(), 3);
            assert_eq!(sub.level2.len(), 3);
            let crossing = sub.edges.iter().filter(|(a, _)| *a != root).count();
            assert_eq!(crossing, 6);
            assert!(sub.matches_row(m.row(root)));
        }
    }
}

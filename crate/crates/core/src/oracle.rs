//! Brute-force ground truth. Nothing here touches the neighbourhood matrix:
//! counts come from dense matrix powers or from enumerating vertex subsets.

use serde::Serialize;

use crate::dense;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for subset enumeration; `C(64, 4)` is about 6.4e5.
pub const CENSUS_LIMIT: usize = 64;

/// `trace(A³) / 6` computed from dense integer powers of the adjacency matrix.
pub fn triangle_count_trace(g: &Graph) -> u64 {
    let a = g.adjacency_matrix();
    let squared = dense::multiply(&a, &a);
    let cubed = dense::multiply(&squared, &a);
    let trace = dense::trace(&cubed);
    debug_assert_eq!(trace % 6, 0);
    (trace / 6) as u64
}

/// `A²`: common-neighbour counts off the diagonal, degrees on it.
pub fn all_pairs_common_neighbors(g: &Graph) -> dense::Dense {
    let a = g.adjacency_matrix();
    dense::multiply(&a, &a)
}

/// Small-subgraph counts obtained by classifying every 3- and 4-vertex subset.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubgraphCensus {
    /// 4-cycles as subgraphs, induced or not.
    pub c4_total: u64,
    /// 4-sets whose induced subgraph is exactly a 4-cycle.
    pub c4_induced: u64,
    pub k4_count: u64,
    pub k4_minus_edge_count: u64,
    pub triangle_count: u64,
}

impl SubgraphCensus {
    /// `c4_total = c4_induced + k4_minus_edge + 3·k4`.
    pub fn is_consistent(&self) -> bool {
        self.c4_total == self.c4_induced + self.k4_minus_edge_count + 3 * self.k4_count
    }
}

pub fn subgraph_census(g: &Graph) -> Result<SubgraphCensus> {
    subgraph_census_with_limit(g, Some(CENSUS_LIMIT))
}

/// Census with an explicit vertex limit; `None` lifts the guard.
pub fn subgraph_census_with_limit(g: &Graph, limit: Option<usize>) -> Result<SubgraphCensus> {
    let n = g.vertex_count();
    if let Some(limit) = limit {
        if n > limit {
            return Err(Error::EnumerationLimit { n, limit });
        }
    }
    let adj = g.adjacency_matrix();
    let e = |u: usize, v: usize| adj[u][v] == 1;
    let mut census = SubgraphCensus::default();

    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if e(a, b) && e(b, c) && e(a, c) {
                    census.triangle_count += 1;
                }
                for d in c + 1..n {
                    classify_quad(&e, [a, b, c, d], &mut census);
                }
            }
        }
    }
    Ok(census)
}

fn classify_quad(
    e: &impl Fn(usize, usize) -> bool,
    [a, b, c, d]: [usize; 4],
    out: &mut SubgraphCensus,
) {
    // the three Hamiltonian cycles on {a, b, c, d}
    let cycles = [
        e(a, b) && e(b, c) && e(c, d) && e(d, a),
        e(a, b) && e(b, d) && e(d, c) && e(c, a),
        e(a, c) && e(c, b) && e(b, d) && e(d, a),
    ];
    let present = cycles.iter().filter(|&&x| x).count() as u64;
    out.c4_total += present;

    let pairs = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)];
    let edges = pairs.iter().filter(|&&(u, v)| e(u, v)).count();
    match edges {
        6 => out.k4_count += 1,
        5 => out.k4_minus_edge_count += 1,
        4 if present == 1 => out.c4_induced += 1,
        _ => {}
    }
}

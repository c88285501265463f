//! Structural quantities read straight off a neighbourhood matrix.
//!
//! Adjacency is taken from the matrix itself (`i ~ j ⇔ η_ij > 0`), and for
//! an edge `(i, j)` the common-neighbour count is `|η_jj| - η_ij`; for a
//! non-edge it is `|η_ij|`. Only [`strong_regularity_profile`] and
//! [`StructuralReport::new`] also consult the graph, to check regularity
//! directly.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{common_neighbors, Graph};
use crate::nm::NeighborhoodMatrix;
use crate::oracle::SubgraphCensus;

/// A non-negative rational with denominator 4, stored as its numerator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quarters(pub u64);

impl Quarters {
    pub fn from_whole(v: u64) -> Self {
        Quarters(4 * v)
    }

    pub fn from_halves(v: u64) -> Self {
        Quarters(2 * v)
    }

    pub fn numerator(self) -> u64 {
        self.0
    }

    /// The value as an integer, if it is one.
    pub fn whole(self) -> Option<u64> {
        self.0.is_multiple_of(4).then_some(self.0 / 4)
    }
}

impl std::ops::Add for Quarters {
    type Output = Quarters;
    fn add(self, rhs: Quarters) -> Quarters {
        Quarters(self.0 + rhs.0)
    }
}

impl fmt::Display for Quarters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/4", self.0)
    }
}

impl Serialize for Quarters {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Common neighbours of an adjacent pair, `|η_jj| - η_ij`.
fn edge_common(m: &NeighborhoodMatrix, i: usize, j: usize) -> Result<u64> {
    let value = m.get(j, j).abs() - m.get(i, j);
    u64::try_from(value).map_err(|_| {
        Error::NotNeighborhoodMatrix(format!(
            "entry ({i}, {j}) exceeds the degree of its column vertex"
        ))
    })
}

/// Number of triangles: `(1/6) Σ_i Σ_{j ∈ N(i)} (|η_jj| - η_ij)`.
pub fn triangle_count(m: &NeighborhoodMatrix) -> Result<u64> {
    let n = m.dimension();
    let mut total = 0u64;
    for i in 0..n {
        for j in (0..n).filter(|&j| m.is_adjacent(i, j)) {
            total += edge_common(m, i, j)?;
        }
    }
    if !total.is_multiple_of(6) {
        return Err(Error::NotNeighborhoodMatrix(format!(
            "triangle double sum {total} is not divisible by 6"
        )));
    }
    Ok(total / 6)
}

/// 4-cycle count split into its two summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FourCycleCount {
    pub total: u64,
    /// `(1/4) Σ_i Σ_{j ≁ i, j ≠ i} C(|η_ij|, 2)`: induced C4 plus half of K4−e.
    pub s1: Quarters,
    /// `(1/4) Σ_i Σ_{j ~ i} C(|η_jj| - η_ij, 2)`: three per K4 plus half of K4−e.
    pub s2: Quarters,
}

/// Number of 4-cycle subgraphs, induced or not.
///
/// Each cycle is counted once per ordered pair of opposite vertices, hence
/// four times overall. The diagonal is excluded from the non-adjacent sum.
pub fn four_cycle_count(m: &NeighborhoodMatrix) -> Result<FourCycleCount> {
    let n = m.dimension();
    let (mut apart, mut adjacent) = (0u64, 0u64);
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            if m.is_adjacent(i, j) {
                adjacent += choose2(edge_common(m, i, j)?);
            } else {
                apart += choose2(m.get(i, j).unsigned_abs());
            }
        }
    }
    let (s1, s2) = (Quarters(apart), Quarters(adjacent));
    let total = (s1 + s2).whole().ok_or_else(|| {
        Error::NotNeighborhoodMatrix(format!(
            "4-cycle sum {} is not divisible by 4",
            apart + adjacent
        ))
    })?;
    Ok(FourCycleCount { total, s1, s2 })
}

/// Outcome of comparing the two 4-cycle summands with a subgraph census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub s1: Quarters,
    pub s2: Quarters,
    pub expected_s1: Quarters,
    pub expected_s2: Quarters,
}

impl DecompositionCheck {
    pub fn holds(&self) -> bool {
        self.s1 == self.expected_s1 && self.s2 == self.expected_s2
    }
}

impl fmt::Display for DecompositionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s1 = {} (census {}), s2 = {} (census {})",
            self.s1, self.expected_s1, self.s2, self.expected_s2
        )
    }
}

/// Checks `s1 = #inducedC4 + ½#(K4−e)` and `s2 = 3#K4 + ½#(K4−e)`.
pub fn c4_decomposition_check(
    m: &NeighborhoodMatrix,
    census: &SubgraphCensus,
) -> Result<DecompositionCheck> {
    let count = four_cycle_count(m)?;
    let half_diamonds = Quarters::from_halves(census.k4_minus_edge_count);
    Ok(DecompositionCheck {
        s1: count.s1,
        s2: count.s2,
        expected_s1: Quarters::from_whole(census.c4_induced) + half_diamonds,
        expected_s2: Quarters::from_whole(3 * census.k4_count) + half_diamonds,
    })
}

/// `η_ij = |η_jj|` on every edge.
pub fn is_triangle_free(m: &NeighborhoodMatrix) -> bool {
    let n = m.dimension();
    (0..n).all(|i| {
        (0..n)
            .filter(|&j| m.is_adjacent(i, j))
            .all(|j| m.get(i, j) == m.get(j, j).abs())
    })
}

/// Every off-diagonal non-edge entry is at least `-1`.
///
/// This rules out induced 4-cycles, but it also rejects a `K4 - e` (the two
/// non-adjacent vertices share two neighbours), so it is exactly "no induced
/// `C4` and no `K4 - e`".
pub fn is_induced_c4_free(m: &NeighborhoodMatrix) -> bool {
    let n = m.dimension();
    (0..n).all(|i| {
        (0..n)
            .filter(|&j| j != i && !m.is_adjacent(i, j))
            .all(|j| m.get(i, j) >= -1)
    })
}

pub fn girth_at_least_5(m: &NeighborhoodMatrix) -> bool {
    is_triangle_free(m) && is_induced_c4_free(m)
}

/// No zero entry anywhere.
pub fn diameter_at_most_2(m: &NeighborhoodMatrix) -> bool {
    m.entries().iter().all(|&v| v != 0)
}

/// Some row has no zero entry, which bounds the diameter by 4.
pub fn some_row_has_no_zero(m: &NeighborhoodMatrix) -> bool {
    m.rows().any(|r| r.iter().all(|&v| v != 0))
}

pub fn zero_counts_per_row(m: &NeighborhoodMatrix) -> Vec<usize> {
    m.rows()
        .map(|r| r.iter().filter(|&&v| v == 0).count())
        .collect()
}

pub fn distinct_entry_values(m: &NeighborhoodMatrix) -> Vec<i64> {
    m.entries()
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Parameters of a strongly regular graph. `mu2` is absent for complete
/// graphs, which have no non-adjacent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParameters {
    pub k: usize,
    pub mu1: usize,
    pub mu2: Option<usize>,
}

impl SrgParameters {
    /// Entry values the matrix of such a graph must take.
    pub fn expected_values(&self) -> BTreeSet<i64> {
        let mut values = BTreeSet::from([-(self.k as i64)]);
        values.insert(self.k as i64 - self.mu1 as i64);
        if let Some(mu2) = self.mu2 {
            values.insert(-(mu2 as i64));
        }
        values
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SrgProfile {
    pub distinct_values: Vec<i64>,
    pub parameters: Option<SrgParameters>,
}

impl SrgProfile {
    pub fn is_strongly_regular(&self) -> bool {
        self.parameters.is_some()
    }
}

/// Strong regularity checked on the graph itself: `k`-regular, a constant
/// `mu1` common neighbours on every edge, a constant `mu2` on every
/// non-adjacent pair. Graphs without edges are not counted as strongly
/// regular.
pub fn strong_regularity(g: &Graph) -> Option<SrgParameters> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return None;
    }
    let k = g.degree(0);
    if (0..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let (mut mu1, mut mu2) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let common = common_neighbors(g, u, v).expect("in range").len();
            let slot = if g.has_edge(u, v) { &mut mu1 } else { &mut mu2 };
            match *slot {
                None => *slot = Some(common),
                Some(existing) if existing != common => return None,
                _ => {}
            }
        }
    }
    Some(SrgParameters {
        k,
        mu1: mu1.expect("graph has an edge"),
        mu2,
    })
}

/// Distinct matrix entries alongside a direct strong-regularity check.
///
/// Errors if the graph is strongly regular but the entries disagree with
/// `{-k, k - mu1, -mu2}`.
pub fn strong_regularity_profile(m: &NeighborhoodMatrix, g: &Graph) -> Result<SrgProfile> {
    if m.dimension() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            matrix: m.dimension(),
            graph: g.vertex_count(),
        });
    }
    let distinct_values = distinct_entry_values(m);
    let parameters = strong_regularity(g);
    if let Some(p) = parameters {
        let expected = p.expected_values();
        let actual: BTreeSet<i64> = distinct_values.iter().copied().collect();
        if expected != actual {
            return Err(Error::NotNeighborhoodMatrix(format!(
                "strongly regular graph {p:?} should give entries {expected:?}, found {actual:?}"
            )));
        }
    }
    Ok(SrgProfile {
        distinct_values,
        parameters,
    })
}

/// Everything extracted from one matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StructuralReport {
    pub triangle_count: u64,
    pub four_cycle_count: u64,
    pub s1_term: Quarters,
    pub s2_term: Quarters,
    pub triangle_free: bool,
    pub induced_c4_free: bool,
    pub girth_at_least5: bool,
    pub diameter_at_most2: bool,
    pub diameter_upper_bound4: bool,
    pub distinct_entry_values: Vec<i64>,
    pub srg_consistent: bool,
    pub srg_parameters: Option<SrgParameters>,
}

impl StructuralReport {
    pub fn new(m: &NeighborhoodMatrix, g: &Graph) -> Result<Self> {
        let cycles = four_cycle_count(m)?;
        let srg = strong_regularity_profile(m, g)?;
        Ok(StructuralReport {
            triangle_count: triangle_count(m)?,
            four_cycle_count: cycles.total,
            s1_term: cycles.s1,
            s2_term: cycles.s2,
            triangle_free: is_triangle_free(m),
            induced_c4_free: is_induced_c4_free(m),
            girth_at_least5: girth_at_least_5(m),
            diameter_at_most2: diameter_at_most_2(m),
            diameter_upper_bound4: some_row_has_no_zero(m),
            srg_consistent: srg.is_strongly_regular(),
            srg_parameters: srg.parameters,
            distinct_entry_values: srg.distinct_values,
        })
    }
}

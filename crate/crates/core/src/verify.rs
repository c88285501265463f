//! The invariant suite: every matrix identity and every matrix-derived
//! characterization checked against the graph and the brute-force oracles.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::analytics::{
    c4_decomposition_check, diameter_at_most_2, four_cycle_count, girth_at_least_5,
    is_induced_c4_free, is_triangle_free, some_row_has_no_zero, strong_regularity_profile,
    triangle_count,
};
use crate::decode::{row_profile, two_level_subgraph};
use crate::det::determinant_exact;
use crate::graph::Graph;
use crate::nm::{
    build_mn, build_nm_product, build_nm_sequential, column_sums, is_symmetric,
    reconstruct_adjacency, row_sums, NeighborhoodMatrix,
};
use crate::oracle::{
    all_pairs_common_neighbors, subgraph_census_with_limit, triangle_count_trace, CENSUS_LIMIT,
};
use crate::search::{connected_components, diameter, girth, Length};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    DegreeSum,
    ProductIdentity,
    ParallelDeterminism,
    TransposeIdentity,
    ReconstructionRoundTrip,
    RowSumsZero,
    ColumnSumFormula,
    DeterminantZero,
    SymmetryIffRegularComponents,
    CommonNeighbourEntries,
    RowDecoding,
    TwoLevelSubgraph,
    TriangleCount,
    FourCycleCount,
    TriangleFreeIffGirth,
    InducedC4FreeIffCensus,
    GirthAtLeast5Iff,
    DiameterAtMost2Iff,
    DiameterAtMost4Implication,
    StrongRegularityValues,
}

impl Invariant {
    pub const ALL: [Invariant; 20] = [
        Invariant::DegreeSum,
        Invariant::ProductIdentity,
        Invariant::ParallelDeterminism,
        Invariant::TransposeIdentity,
        Invariant::ReconstructionRoundTrip,
        Invariant::RowSumsZero,
        Invariant::ColumnSumFormula,
        Invariant::DeterminantZero,
        Invariant::SymmetryIffRegularComponents,
        Invariant::CommonNeighbourEntries,
        Invariant::RowDecoding,
        Invariant::TwoLevelSubgraph,
        Invariant::TriangleCount,
        Invariant::FourCycleCount,
        Invariant::TriangleFreeIffGirth,
        Invariant::InducedC4FreeIffCensus,
        Invariant::GirthAtLeast5Iff,
        Invariant::DiameterAtMost2Iff,
        Invariant::DiameterAtMost4Implication,
        Invariant::StrongRegularityValues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::DegreeSum => "degree_sum",
            Invariant::ProductIdentity => "nm_equals_a_times_laplacian",
            Invariant::ParallelDeterminism => "parallel_build_deterministic",
            Invariant::TransposeIdentity => "mn_equals_nm_transpose",
            Invariant::ReconstructionRoundTrip => "reconstruction_round_trip",
            Invariant::RowSumsZero => "row_sums_zero",
            Invariant::ColumnSumFormula => "column_sum_formula",
            Invariant::DeterminantZero => "determinant_zero",
            Invariant::SymmetryIffRegularComponents => "symmetric_iff_regular_components",
            Invariant::CommonNeighbourEntries => "entries_match_common_neighbours",
            Invariant::RowDecoding => "row_decoding_balance",
            Invariant::TwoLevelSubgraph => "two_level_subgraph_matches_row",
            Invariant::TriangleCount => "triangle_count_oracles",
            Invariant::FourCycleCount => "four_cycle_count_and_decomposition",
            Invariant::TriangleFreeIffGirth => "triangle_free_iff_girth",
            Invariant::InducedC4FreeIffCensus => "entry_bound_iff_no_induced_c4_or_diamond",
            Invariant::GirthAtLeast5Iff => "girth_at_least_5_iff",
            Invariant::DiameterAtMost2Iff => "no_zero_iff_diameter_at_most_2",
            Invariant::DiameterAtMost4Implication => "zero_free_row_implies_diameter_at_most_4",
            Invariant::StrongRegularityValues => "strongly_regular_entry_values",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(&'static str),
}

impl Outcome {
    fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

/// Limits for the expensive checks.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub determinant_max_n: usize,
    pub census_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            determinant_max_n: 64,
            census_max_n: CENSUS_LIMIT,
        }
    }
}

/// Runs every invariant for the pair `(g, m)`. Normally `m = build_nm(g)`;
/// passing anything else is how the suite's own negative control works.
pub fn check_instance(
    g: &Graph,
    m: &NeighborhoodMatrix,
    limits: Limits,
) -> Vec<(Invariant, Outcome)> {
    let n = g.vertex_count();
    if m.dimension() != n {
        let detail = format!("matrix dimension {} for {n} vertices", m.dimension());
        return Invariant::ALL
            .iter()
            .map(|&inv| (inv, Outcome::Fail(detail.clone())))
            .collect();
    }
    let census = (n <= limits.census_max_n)
        .then(|| subgraph_census_with_limit(g, None).expect("no limit applied"));
    let girth = girth(g);
    let diameter = diameter(g);

    Invariant::ALL
        .iter()
        .map(|&inv| {
            let outcome = match inv {
                Invariant::DegreeSum => {
                    let total: usize = g.degrees().iter().sum();
                    Outcome::check(total == 2 * g.edge_count(), || {
                        format!("degree sum {total} vs {} edges", g.edge_count())
                    })
                }
                Invariant::ProductIdentity => {
                    Outcome::check(build_nm_product(g) == *m, || "differs from A(D-A)".into())
                }
                Invariant::ParallelDeterminism => {
                    Outcome::check(build_nm_sequential(g) == *m, || {
                        "differs from the single-threaded build".into()
                    })
                }
                Invariant::TransposeIdentity => {
                    Outcome::check(build_mn(g) == m.transpose(), || "MN != NM^T".into())
                }
                Invariant::ReconstructionRoundTrip => match reconstruct_adjacency(m) {
                    Ok(h) => Outcome::check(h.edges().eq(g.edges()), || "edge sets differ".into()),
                    Err(e) => Outcome::Fail(e.to_string()),
                },
                Invariant::RowSumsZero => {
                    let sums = row_sums(m);
                    Outcome::check(sums.iter().all(|&s| s == 0), || {
                        format!("row sums {sums:?}")
                    })
                }
                Invariant::ColumnSumFormula => match column_sums(m, g) {
                    Ok(_) => Outcome::Pass,
                    Err(e) => Outcome::Fail(e.to_string()),
                },
                Invariant::DeterminantZero => {
                    if n == 0 {
                        Outcome::Skipped("empty matrix")
                    } else if n > limits.determinant_max_n {
                        Outcome::Skipped("above determinant size limit")
                    } else {
                        let det = determinant_exact(m);
                        Outcome::check(det.is_zero(), || format!("determinant {det}"))
                    }
                }
                Invariant::SymmetryIffRegularComponents => {
                    let regular = connected_components(g).all_regular(g);
                    let symmetric = is_symmetric(m);
                    Outcome::check(regular == symmetric, || {
                        format!("symmetric={symmetric}, regular components={regular}")
                    })
                }
                Invariant::CommonNeighbourEntries => check_common_neighbours(g, m),
                Invariant::RowDecoding => check_row_decoding(g, m),
                Invariant::TwoLevelSubgraph => {
                    let bad = (0..n).find(|&r| {
                        !two_level_subgraph(g, r)
                            .map(|s| s.matches_row(m.row(r)))
                            .unwrap_or(false)
                    });
                    Outcome::check(bad.is_none(), || {
                        format!("row {} disagrees", bad.unwrap_or(0))
                    })
                }
                Invariant::TriangleCount => match triangle_count(m) {
                    Ok(count) => {
                        let trace = triangle_count_trace(g);
                        let enumerated = census.map(|c| c.triangle_count).unwrap_or(trace);
                        Outcome::check(count == trace && count == enumerated, || {
                            format!("matrix {count}, trace {trace}, enumeration {enumerated}")
                        })
                    }
                    Err(e) => Outcome::Fail(e.to_string()),
                },
                Invariant::FourCycleCount => match census {
                    None => Outcome::Skipped("above enumeration limit"),
                    Some(c) => match (four_cycle_count(m), c4_decomposition_check(m, &c)) {
                        (Ok(count), Ok(split)) => Outcome::check(
                            count.total == c.c4_total && c.is_consistent() && split.holds(),
                            || format!("matrix total {}, census {:?}, {split}", count.total, c),
                        ),
                        (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
                    },
                },
                Invariant::TriangleFreeIffGirth => {
                    let predicate = is_triangle_free(m);
                    Outcome::check(predicate == (girth != Length::Finite(3)), || {
                        format!("predicate {predicate}, girth {girth}")
                    })
                }
                Invariant::InducedC4FreeIffCensus => match census {
                    None => Outcome::Skipped("above enumeration limit"),
                    Some(c) => {
                        // a diamond also has a non-adjacent pair with two common neighbours
                        let predicate = is_induced_c4_free(m);
                        let expected = c.c4_induced == 0 && c.k4_minus_edge_count == 0;
                        Outcome::check(predicate == expected, || {
                            format!(
                                "predicate {predicate}, induced C4 {}, K4-e {}",
                                c.c4_induced, c.k4_minus_edge_count
                            )
                        })
                    }
                },
                Invariant::GirthAtLeast5Iff => {
                    let predicate = girth_at_least_5(m);
                    Outcome::check(predicate == (girth >= Length::Finite(5)), || {
                        format!("predicate {predicate}, girth {girth}")
                    })
                }
                Invariant::DiameterAtMost2Iff => {
                    let predicate = diameter_at_most_2(m);
                    // an empty matrix has no zero entry; one vertex has a zero diagonal
                    let expected = if n == 0 { true } else { diameter.is_at_most(2) };
                    Outcome::check(predicate == expected, || {
                        format!("predicate {predicate}, diameter {diameter}")
                    })
                }
                Invariant::DiameterAtMost4Implication => {
                    let predicate = some_row_has_no_zero(m);
                    Outcome::check(!predicate || diameter.is_at_most(4), || {
                        format!("zero-free row but diameter {diameter}")
                    })
                }
                Invariant::StrongRegularityValues => match strong_regularity_profile(m, g) {
                    Ok(p) => Outcome::check(
                        !p.is_strongly_regular() || (2..=3).contains(&p.distinct_values.len()),
                        || format!("strongly regular with values {:?}", p.distinct_values),
                    ),
                    Err(e) => Outcome::Fail(e.to_string()),
                },
            };
            (inv, outcome)
        })
        .collect()
}

fn check_common_neighbours(g: &Graph, m: &NeighborhoodMatrix) -> Outcome {
    let a2 = all_pairs_common_neighbors(g);
    for (i, shared) in a2.iter().enumerate() {
        for (j, &common) in shared.iter().enumerate() {
            let expected = if i == j {
                -common
            } else if g.has_edge(i, j) {
                g.degree(j) as i64 - common
            } else {
                -common
            };
            if m.get(i, j) != expected {
                return Outcome::Fail(format!(
                    "entry ({}, {}) is {}, common-neighbour oracle gives {expected}",
                    g.label(i),
                    g.label(j),
                    m.get(i, j)
                ));
            }
        }
    }
    Outcome::Pass
}

fn check_row_decoding(g: &Graph, m: &NeighborhoodMatrix) -> Outcome {
    for i in 0..g.vertex_count() {
        let profile = match row_profile(m, i) {
            Ok(p) => p,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let (down, up) = profile.crossing_edge_counts();
        let ok = down == up
            && profile.diagonal_candidates.contains(&i)
            && profile.degree == g.degree(i) as u64
            && profile
                .level1
                .iter()
                .copied()
                .eq(g.neighbors(i).iter().copied());
        if !ok {
            return Outcome::Fail(format!("row {} decodes inconsistently", g.label(i)));
        }
    }
    Outcome::Pass
}

/// Aggregated results over many instances.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub instances: usize,
    pub tallies: BTreeMap<Invariant, Tally>,
    /// First failing instance, as edge-list text, with its failures.
    pub counterexample: Option<(String, Vec<(Invariant, String)>)>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerifyReport {
    pub fn record(&mut self, g: &Graph, outcomes: Vec<(Invariant, Outcome)>) {
        self.instances += 1;
        let mut failures = Vec::new();
        for (inv, outcome) in outcomes {
            let tally = self.tallies.entry(inv).or_default();
            match outcome {
                Outcome::Pass => tally.passed += 1,
                Outcome::Skipped(_) => tally.skipped += 1,
                Outcome::Fail(detail) => {
                    tally.failed += 1;
                    failures.push((inv, detail));
                }
            }
        }
        if !failures.is_empty() && self.counterexample.is_none() {
            self.counterexample = Some((g.to_edge_list(), failures));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.tallies.values().all(|t| t.failed == 0)
    }
}

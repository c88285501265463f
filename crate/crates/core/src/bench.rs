//! Wall-clock comparison of the two triangle-counting routes.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analytics::triangle_count;
use crate::graph::Graph;
use crate::nm::build_nm;
use crate::oracle::triangle_count_trace;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PathTiming {
    pub method: &'static str,
    pub triangles: u64,
    pub median_micros: u128,
    pub samples_micros: Vec<u128>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TriangleBench {
    pub n: usize,
    pub m: usize,
    pub repetitions: usize,
    pub counts_equal: bool,
    pub rows: Vec<PathTiming>,
}

impl TriangleBench {
    pub fn row(&self, method: &str) -> Option<&PathTiming> {
        self.rows.iter().find(|r| r.method == method)
    }
}

pub fn median(samples: &[Duration]) -> Duration {
    let mut sorted = samples.to_vec();
    sorted.sort_unstable();
    match sorted.len() {
        0 => Duration::ZERO,
        len if len % 2 == 1 => sorted[len / 2],
        len => (sorted[len / 2 - 1] + sorted[len / 2]) / 2,
    }
}

fn time_path(reps: usize, mut run: impl FnMut() -> u64) -> (u64, Vec<Duration>) {
    let mut count = 0;
    let samples = (0..reps)
        .map(|_| {
            let start = Instant::now();
            count = std::hint::black_box(run());
            start.elapsed()
        })
        .collect();
    (count, samples)
}

fn timing(method: &'static str, triangles: u64, samples: &[Duration]) -> PathTiming {
    PathTiming {
        method,
        triangles,
        median_micros: median(samples).as_micros(),
        samples_micros: samples.iter().map(Duration::as_micros).collect(),
    }
}

/// Times the matrix route (building the matrix included) against the dense
/// `trace(A³)/6` route. An empty graph yields an empty table.
pub fn compare_triangle_paths(g: &Graph, repetitions: usize) -> TriangleBench {
    let reps = repetitions.max(1);
    if g.vertex_count() == 0 {
        return TriangleBench {
            n: 0,
            m: 0,
            repetitions: reps,
            counts_equal: true,
            rows: Vec::new(),
        };
    }
    let (nm_count, nm_samples) = time_path(reps, || {
        triangle_count(&build_nm(g)).expect("matrix built from a graph")
    });
    let (trace_count, trace_samples) = time_path(reps, || triangle_count_trace(g));
    TriangleBench {
        n: g.vertex_count(),
        m: g.edge_count(),
        repetitions: reps,
        counts_equal: nm_count == trace_count,
        rows: vec![
            timing("neighbourhood_matrix", nm_count, &nm_samples),
            timing("dense_trace", trace_count, &trace_samples),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::with_average_degree;

    #[test]
    fn medians() {
        let ms = |v: u64| Duration::from_millis(v);
        assert_eq!(median(&[ms(3), ms(1), ms(2)]), ms(2));
        assert_eq!(
            median(&[ms(4), ms(1), ms(2), ms(3)]),
            Duration::from_micros(2500)
        );
        assert_eq!(median(&[]), Duration::ZERO);
    }

    #[test]
    fn small_graph_counts_agree() {
        let g = with_average_degree(16, 6.0, 5);
        let bench = compare_triangle_paths(&g, 3);
        assert!(bench.counts_equal);
        assert_eq!(bench.rows.len(), 2);
        assert_eq!(bench.row("dense_trace").unwrap().samples_micros.len(), 3);
    }

    #[test]
    fn empty_graph_gives_empty_table() {
        let bench = compare_triangle_paths(&Graph::empty(0), 5);
        assert!(bench.rows.is_empty());
    }
}

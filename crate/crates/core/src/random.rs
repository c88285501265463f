//! Seeded random graphs and exhaustive enumeration of small graphs.
//!
//! Generator contract: a `ChaCha8Rng` seeded with `seed_from_u64(seed)`. A
//! `G(n, p)` graph visits the pairs `(u, v)`, `u < v`, in lexicographic order
//! and keeps each edge when a uniform `f64` draw in `[0, 1)` is below `p`.
//! A corpus draws, per graph, `n` uniformly from `0..=max_n`, then `p` as a
//! uniform `f64`, then the edges as above, all from the one stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(&mut rng_from_seed(seed), n, p)
}

/// `G(n, p)` with `p` chosen for the requested expected average degree.
pub fn with_average_degree(n: usize, degree: f64, seed: u64) -> Graph {
    let p = if n > 1 {
        (degree / (n - 1) as f64).clamp(0.0, 1.0)
    } else {
        0.0
    };
    gnp(n, p, seed)
}

/// Endless stream of random graphs of varying size and density.
pub struct Corpus {
    rng: ChaCha8Rng,
    max_n: usize,
}

impl Corpus {
    pub fn new(seed: u64, max_n: usize) -> Self {
        Corpus {
            rng: rng_from_seed(seed),
            max_n,
        }
    }
}

impl Iterator for Corpus {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let n = self.rng.gen_range(0..=self.max_n);
        let p: f64 = self.rng.gen();
        Some(gnp_with(&mut self.rng, n, p))
    }
}

/// Every labelled simple graph on `n` vertices, `2^C(n,2)` of them. Bit `k`
/// of the index selects the `k`-th pair in lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(
        pairs.len() < 32,
        "exhaustive enumeration is for tiny graphs"
    );
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("valid pairs")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        assert_eq!(gnp(20, 0.3, 7), gnp(20, 0.3, 7));
        let a: Vec<Graph> = Corpus::new(11, 12).take(5).collect();
        let b: Vec<Graph> = Corpus::new(11, 12).take(5).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.vertex_count() <= 12));
    }

    #[test]
    fn density_extremes() {
        assert_eq!(gnp(10, 0.0, 1).edge_count(), 0);
        assert_eq!(gnp(10, 1.0, 1).edge_count(), 45);
        assert_eq!(with_average_degree(1, 8.0, 1).edge_count(), 0);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(1).count(), 1);
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(5).count(), 1024);
        let edges: usize = all_graphs(3).map(|g| g.edge_count()).sum();
        assert_eq!(edges, 12);
    }
}

//! Small named graphs used throughout the tests, the verifier and the CLI.
//! Every fixture is labelled `1..=n` with index `i` carrying label `i + 1`.

use crate::graph::Graph;

/// Neighbourhood matrix of [`seven_vertex`], rows and columns in label order.
pub const SEVEN_VERTEX_NM: [[i64; 7]; 7] = [
    [-2, 2, 0, 0, -2, 3, -1],
    [2, -2, 0, -1, 4, -2, -1],
    [0, 0, -1, 2, -1, 0, 0],
    [0, -1, 1, -2, 4, -1, -1],
    [-2, 2, -1, 2, -4, 2, 1],
    [2, -2, 0, -1, 3, -3, 1],
    [-1, -1, 0, -1, 3, 2, -2],
];

/// Adjacency matrix of [`seven_vertex`] as recovered from [`SEVEN_VERTEX_NM`].
pub const SEVEN_VERTEX_ADJACENCY: [[i64; 7]; 7] = [
    [0, 1, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 1, 1],
    [1, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 1, 0],
];

/// Neighbourhood matrix of [`two_squares`].
pub const TWO_SQUARES_NM: [[i64; 8]; 8] = [
    [-2, 2, 0, 0, 2, -2, 0, 0],
    [2, -2, 0, 0, -2, 2, 0, 0],
    [0, 0, -2, 2, 0, 0, 2, -2],
    [0, 0, 2, -2, 0, 0, -2, 2],
    [2, -2, 0, 0, -2, 2, 0, 0],
    [-2, 2, 0, 0, 2, -2, 0, 0],
    [0, 0, 2, -2, 0, 0, -2, 2],
    [0, 0, -2, 2, 0, 0, 2, -2],
];

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("fixture edges are valid")
}

/// Seven vertices, eight edges, a single triangle `5-6-7`.
pub fn seven_vertex() -> Graph {
    let labelled = [
        (1, 2),
        (1, 6),
        (2, 5),
        (3, 4),
        (4, 5),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    build(7, &labelled.map(|(a, b): (usize, usize)| (a - 1, b - 1)))
}

/// Two disjoint 4-cycles `1-2-6-5` and `3-4-8-7`.
pub fn two_squares() -> Graph {
    let labelled = [
        (1, 2),
        (5, 1),
        (6, 2),
        (3, 4),
        (3, 7),
        (4, 8),
        (7, 8),
        (5, 6),
    ];
    build(8, &labelled.map(|(a, b): (usize, usize)| (a - 1, b - 1)))
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(n, &edges)
}

/// `K4` with the edge between the first two vertices removed.
pub fn k4_minus_edge() -> Graph {
    build(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// The 3-dimensional hypercube `Q3`.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        assert_eq!(seven_vertex().edge_count(), 8);
        assert_eq!(two_squares().edge_count(), 8);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(k4_minus_edge().edge_count(), 5);
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(cube().edge_count(), 12);
        assert_eq!(path(3).edge_count(), 2);
        assert_eq!(cycle(5).edge_count(), 5);
    }
}

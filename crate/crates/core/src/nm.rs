//! The neighbourhood matrix `NM(G)` and its transpose companion `MN(G)`.
//!
//! For a simple graph with neighbourhoods `N(v)`:
//!
//! * `η_ii = -|N(i)|`
//! * `η_ij = |N(j) \ N(i)|` when `i ~ j`
//! * `η_ij = -|N(i) ∩ N(j)|` otherwise
//!
//! which is the integer product `A · (D - A)` of the adjacency matrix and the
//! Laplacian. [`build_nm`] evaluates the definition directly on neighbour
//! sets; [`build_nm_product`] forms the dense product and exists as an
//! independent check.

use rayon::prelude::*;

use crate::dense;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense `n × n` matrix of signed entries with the external vertex labels of
/// its rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodMatrix {
    n: usize,
    entries: Vec<i64>,
    labels: Vec<u64>,
}

impl NeighborhoodMatrix {
    /// Wraps explicit rows. `labels` defaults to `1..=n`.
    pub fn from_rows(rows: Vec<Vec<i64>>, labels: Option<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotNeighborhoodMatrix(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        let labels = labels.unwrap_or_else(|| (1..=n as u64).collect());
        if labels.len() != n {
            return Err(Error::NotNeighborhoodMatrix(format!(
                "{} labels for dimension {n}",
                labels.len()
            )));
        }
        Ok(NeighborhoodMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
            labels,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        // chunks(0) panics, so an empty matrix iterates nothing explicitly
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(<[i64]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        NeighborhoodMatrix {
            n,
            entries,
            labels: self.labels.clone(),
        }
    }

    /// Non-zero entries as 0-based `(row, column, value)` triplets, row-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(k, &v)| (k / n, k % n, v))
    }

    /// Adjacency as encoded by the matrix: `i ~ j` exactly when `η_ij > 0`.
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j) > 0
    }

    /// Same matrix with one entry overwritten. Used for negative controls.
    pub fn with_entry(&self, i: usize, j: usize, value: i64) -> Self {
        let mut out = self.clone();
        out.entries[i * self.n + j] = value;
        out
    }
}

#[derive(Clone, Copy)]
enum Orientation {
    /// `A · (D - A)`: edge entries count `N(j) \ N(i)`.
    AdjacencyLaplacian,
    /// `(D - A) · A`: edge entries count `N(i) \ N(j)`.
    LaplacianAdjacency,
}

/// Row `i` evaluated from neighbour sets. `mark` is an all-false scratch
/// buffer of length `n`; it is restored before returning.
fn set_row(g: &Graph, i: usize, orientation: Orientation, mark: &mut [bool]) -> Vec<i64> {
    let n = g.vertex_count();
    let own = g.neighbors(i);
    let mut row = vec![0i64; n];
    row[i] = -(own.len() as i64);

    for &k in own {
        mark[k] = true;
    }
    // only vertices within two hops can have a non-zero entry
    let mut touched: Vec<usize> = own
        .iter()
        .flat_map(|&k| g.neighbors(k).iter().copied())
        .chain(own.iter().copied())
        .filter(|&j| j != i)
        .collect();
    touched.sort_unstable();
    touched.dedup();

    for j in touched {
        let theirs = g.neighbors(j);
        let common = theirs.iter().filter(|&&w| mark[w]).count() as i64;
        row[j] = if mark[j] {
            match orientation {
                Orientation::AdjacencyLaplacian => theirs.len() as i64 - common,
                Orientation::LaplacianAdjacency => own.len() as i64 - common,
            }
        } else {
            -common
        };
    }

    for &k in own {
        mark[k] = false;
    }
    row
}

fn assemble(g: &Graph, orientation: Orientation) -> NeighborhoodMatrix {
    let n = g.vertex_count();
    let rows: Vec<Vec<i64>> = (0..n)
        .into_par_iter()
        .map_init(
            || vec![false; n],
            |mark, i| set_row(g, i, orientation, mark),
        )
        .collect();
    NeighborhoodMatrix {
        n,
        entries: rows.into_iter().flatten().collect(),
        labels: g.labels().to_vec(),
    }
}

/// Builds `NM(G)` from neighbour sets, rows in parallel.
pub fn build_nm(g: &Graph) -> NeighborhoodMatrix {
    assemble(g, Orientation::AdjacencyLaplacian)
}

/// Single-threaded [`build_nm`]; the output is identical.
pub fn build_nm_sequential(g: &Graph) -> NeighborhoodMatrix {
    let n = g.vertex_count();
    let mut mark = vec![false; n];
    let entries = (0..n)
        .flat_map(|i| set_row(g, i, Orientation::AdjacencyLaplacian, &mut mark))
        .collect();
    NeighborhoodMatrix {
        n,
        entries,
        labels: g.labels().to_vec(),
    }
}

/// Builds `MN(G)` from neighbour sets. Equals the transpose of `NM(G)`.
pub fn build_mn(g: &Graph) -> NeighborhoodMatrix {
    assemble(g, Orientation::LaplacianAdjacency)
}

/// `A · (D - A)` with dense integer arithmetic.
pub fn build_nm_product(g: &Graph) -> NeighborhoodMatrix {
    let a = g.adjacency_matrix();
    let degrees: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    let laplacian = dense::subtract(&dense::diagonal(&degrees), &a);
    let product = dense::multiply(&a, &laplacian);
    NeighborhoodMatrix::from_rows(product, Some(g.labels().to_vec()))
        .expect("square product of a square matrix")
}

/// Recovers the graph from its neighbourhood matrix: `i ~ j ⇔ η_ij > 0`.
///
/// The matrix is accepted only if it is exactly the neighbourhood matrix of
/// the recovered graph.
pub fn reconstruct_adjacency(m: &NeighborhoodMatrix) -> Result<Graph> {
    let n = m.dimension();
    let mut edges = Vec::new();
    for i in 0..n {
        if m.get(i, i) > 0 {
            return Err(Error::NotNeighborhoodMatrix(format!(
                "diagonal entry {} is positive",
                m.labels()[i]
            )));
        }
        for j in i + 1..n {
            match (m.get(i, j) > 0, m.get(j, i) > 0) {
                (true, true) => edges.push((i, j)),
                (false, false) => {}
                _ => {
                    return Err(Error::NotNeighborhoodMatrix(format!(
                        "positivity of entries ({}, {}) and ({}, {}) disagrees",
                        m.labels()[i],
                        m.labels()[j],
                        m.labels()[j],
                        m.labels()[i]
                    )))
                }
            }
        }
    }
    let g = Graph::with_labels(m.labels().to_vec(), edges)?;
    let rebuilt = build_nm(&g);
    if let Some(k) = (0..n * n).find(|&k| rebuilt.entries[k] != m.entries[k]) {
        let (i, j) = (k / n, k % n);
        return Err(Error::NotNeighborhoodMatrix(format!(
            "entry ({}, {}) is {} but the encoded graph implies {}",
            m.labels()[i],
            m.labels()[j],
            m.entries[k],
            rebuilt.entries[k]
        )));
    }
    Ok(g)
}

pub fn row_sums(m: &NeighborhoodMatrix) -> Vec<i64> {
    m.rows().map(|r| r.iter().sum()).collect()
}

/// Column totals of `m`, checked against `Σ_{j∈N(i)} (deg i - deg j)`.
pub fn column_sums(m: &NeighborhoodMatrix, g: &Graph) -> Result<Vec<i64>> {
    if m.dimension() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            matrix: m.dimension(),
            graph: g.vertex_count(),
        });
    }
    let n = m.dimension();
    let mut summed = vec![0i64; n];
    for row in m.rows() {
        for (total, &v) in summed.iter_mut().zip(row) {
            *total += v;
        }
    }
    for (column, &total) in summed.iter().enumerate() {
        let formula = column_sum_formula(g, column);
        if formula != total {
            return Err(Error::ColumnSumMismatch {
                column,
                summed: total,
                formula,
            });
        }
    }
    Ok(summed)
}

pub fn column_sum_formula(g: &Graph, i: usize) -> i64 {
    let own = g.degree(i) as i64;
    g.neighbors(i)
        .iter()
        .map(|&j| own - g.degree(j) as i64)
        .sum()
}

pub fn is_symmetric(m: &NeighborhoodMatrix) -> bool {
    let n = m.dimension();
    (0..n).all(|i| (i + 1..n).all(|j| m.get(i, j) == m.get(j, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rows<const N: usize>(m: [[i64; N]; N]) -> Vec<Vec<i64>> {
        m.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn seven_vertex_matrix() {
        let g = fixtures::seven_vertex();
        let m = build_nm(&g);
        assert_eq!(m.to_rows(), rows(fixtures::SEVEN_VERTEX_NM));
        assert_eq!(m.row(4), &[-2, 2, -1, 2, -4, 2, 1]);
        assert_eq!(build_nm_product(&g), m);
        assert_eq!(build_nm_sequential(&g), m);
    }

    #[test]
    fn tiny_graphs() {
        let zero = build_nm(&Graph::empty(4));
        assert!(zero.entries().iter().all(|&v| v == 0));
        assert_eq!(build_nm_product(&Graph::empty(4)), zero);
        assert_eq!(build_mn(&Graph::empty(4)), zero);

        let k2 = build_nm(&fixtures::complete(2));
        assert_eq!(k2.to_rows(), vec![vec![-1, 1], vec![1, -1]]);

        let none = build_nm(&Graph::empty(0));
        assert_eq!(none.dimension(), 0);
        assert_eq!(none.rows().count(), 0);
    }

    #[test]
    fn mn_is_transpose() {
        let g = fixtures::seven_vertex();
        assert_eq!(build_mn(&g), build_nm(&g).transpose());
        let c5 = fixtures::cycle(5);
        assert_eq!(build_mn(&c5), build_nm(&c5));
    }

    #[test]
    fn reconstructs_seven_vertex_adjacency() {
        let m = NeighborhoodMatrix::from_rows(rows(fixtures::SEVEN_VERTEX_NM), None).unwrap();
        let g = reconstruct_adjacency(&m).unwrap();
        assert_eq!(g.adjacency_matrix(), rows(fixtures::SEVEN_VERTEX_ADJACENCY));
        assert_eq!(g, fixtures::seven_vertex());

        let zero = NeighborhoodMatrix::from_rows(vec![vec![0; 3]; 3], None).unwrap();
        assert_eq!(reconstruct_adjacency(&zero).unwrap().edge_count(), 0);
    }

    #[test]
    fn reconstruct_rejects_inconsistent_matrices() {
        let m = build_nm(&fixtures::seven_vertex());
        // η_12 stays positive but no longer matches |N(2) \ N(1)|
        let bumped = m.with_entry(0, 1, 3);
        assert!(matches!(
            reconstruct_adjacency(&bumped),
            Err(Error::NotNeighborhoodMatrix(_))
        ));
        // breaks positivity symmetry
        let flipped = m.with_entry(0, 1, -1);
        assert!(matches!(
            reconstruct_adjacency(&flipped),
            Err(Error::NotNeighborhoodMatrix(_))
        ));
        let positive_diagonal = m.with_entry(2, 2, 1);
        assert!(reconstruct_adjacency(&positive_diagonal).is_err());
    }

    #[test]
    fn sums() {
        let g = fixtures::seven_vertex();
        let m = build_nm(&g);
        assert_eq!(row_sums(&m), vec![0; 7]);
        let columns = column_sums(&m, &g).unwrap();
        assert_eq!(columns[4], 7);
        assert_eq!(
            column_sum_formula(&g, 4),
            (4 - 2) + (4 - 2) + (4 - 3) + (4 - 2)
        );

        let c5 = fixtures::cycle(5);
        assert_eq!(column_sums(&build_nm(&c5), &c5).unwrap(), vec![0; 5]);
        let empty = Graph::empty(3);
        assert_eq!(column_sums(&build_nm(&empty), &empty).unwrap(), vec![0; 3]);
    }

    #[test]
    fn column_sum_mismatch_is_reported() {
        let g = fixtures::seven_vertex();
        let m = build_nm(&g).with_entry(0, 4, -1);
        assert_eq!(
            column_sums(&m, &g).unwrap_err(),
            Error::ColumnSumMismatch {
                column: 4,
                summed: 8,
                formula: 7
            }
        );
        assert!(matches!(
            column_sums(&m, &Graph::empty(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn symmetry() {
        assert!(!is_symmetric(&build_nm(&fixtures::seven_vertex())));
        assert!(is_symmetric(&build_nm(&fixtures::two_squares())));
        assert!(is_symmetric(&build_nm(&Graph::empty(1))));
    }

    #[test]
    fn from_rows_validates_shape() {
        assert!(NeighborhoodMatrix::from_rows(vec![vec![0, 0], vec![0]], None).is_err());
        assert!(NeighborhoodMatrix::from_rows(vec![vec![0]], Some(vec![1, 2])).is_err());
    }

    #[test]
    fn triplets_skip_zeros() {
        let m = build_nm(&fixtures::complete(2));
        let t: Vec<_> = m.triplets().collect();
        assert_eq!(t, vec![(0, 0, -1), (0, 1, 1), (1, 0, 1), (1, 1, -1)]);
    }
}

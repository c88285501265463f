//! Exact determinants by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::nm::NeighborhoodMatrix;

/// Determinant of an integer matrix given as rows. The empty matrix has
/// determinant 1.
///
/// Every intermediate value is itself a minor of the input, so each division
/// by the previous pivot is exact.
pub fn bareiss_determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut previous = BigInt::one();
    let mut negate = false;

    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = value / &previous;
            }
        }
        previous = a[k][k].clone();
    }

    let det = if n == 0 { BigInt::one() } else { previous };
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant of a neighbourhood matrix; zero for every genuine one.
pub fn determinant_exact(m: &NeighborhoodMatrix) -> BigInt {
    bareiss_determinant(&m.to_rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nm::build_nm;
    use proptest::prelude::*;

    /// Laplace expansion along the first row.
    fn cofactor_determinant(rows: &[Vec<i64>]) -> i128 {
        let n = rows.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return rows[0][0] as i128;
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != c)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * rows[0][c] as i128 * cofactor_determinant(&minor)
            })
            .sum()
    }

    #[test]
    fn known_determinants() {
        assert_eq!(bareiss_determinant(&[]), BigInt::from(1));
        assert_eq!(bareiss_determinant(&[vec![7]]), BigInt::from(7));
        assert_eq!(
            bareiss_determinant(&[vec![0, 1], vec![1, 0]]),
            BigInt::from(-1)
        );
        assert_eq!(
            bareiss_determinant(&[vec![2, -3, 1], vec![2, 0, -1], vec![1, 4, 5]]),
            BigInt::from(49)
        );
    }

    #[test]
    fn neighbourhood_matrices_are_singular() {
        assert!(determinant_exact(&build_nm(&fixtures::seven_vertex())).is_zero());
        assert!(determinant_exact(&build_nm(&crate::graph::Graph::empty(3))).is_zero());
        assert!(determinant_exact(&build_nm(&fixtures::petersen())).is_zero());
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(
            rows in (1usize..6).prop_flat_map(|n| {
                proptest::collection::vec(proptest::collection::vec(-9i64..10, n), n)
            })
        ) {
            prop_assert_eq!(
                bareiss_determinant(&rows),
                BigInt::from(cofactor_determinant(&rows))
            );
        }
    }
}

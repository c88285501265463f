//! Naive dense integer matrices. Only the oracle paths use these.

pub type Dense = Vec<Vec<i64>>;

pub fn zeros(n: usize) -> Dense {
    vec![vec![0; n]; n]
}

/// Schoolbook `a * b` for square matrices of equal size.
pub fn multiply(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zeros(n);
    for (i, row) in a.iter().enumerate() {
        let target = &mut out[i];
        for (k, &aik) in row.iter().enumerate() {
            let bk = &b[k];
            for j in 0..n {
                target[j] += aik * bk[j];
            }
        }
    }
    out
}

pub fn subtract(a: &Dense, b: &Dense) -> Dense {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn diagonal(values: &[i64]) -> Dense {
    let mut out = zeros(values.len());
    for (i, &v) in values.iter().enumerate() {
        out[i][i] = v;
    }
    out
}

pub fn trace(a: &Dense) -> i64 {
    a.iter().enumerate().map(|(i, row)| row[i]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_product() {
        let a = vec![vec![1, 2], vec![3, 4]];
        let b = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(multiply(&a, &b), vec![vec![2, 1], vec![4, 3]]);
        assert_eq!(trace(&a), 5);
        assert_eq!(subtract(&a, &a), zeros(2));
        assert_eq!(diagonal(&[2, 3]), vec![vec![2, 0], vec![0, 3]]);
    }
}

//! Text serialization of neighbourhood matrices.
//!
//! Two forms are supported, both exact integer text:
//!
//! * dense: an optional `# labels: ...` comment, a line holding `n`, then `n`
//!   lines of `n` whitespace-separated integers;
//! * Matrix Market: `%%MatrixMarket matrix coordinate integer general`, an
//!   optional `% labels: ...` comment, the size line `n n nnz`, then one
//!   1-based `i j value` triplet per non-zero entry in row-major order.
//!
//! Without a labels comment, vertices are labelled `1..=n`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::nm::NeighborhoodMatrix;

const MM_BANNER: &str = "%%MatrixMarket matrix coordinate integer general";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Dense,
    MatrixMarket,
}

fn labels_line(m: &NeighborhoodMatrix) -> String {
    let labels: Vec<String> = m.labels().iter().map(u64::to_string).collect();
    format!("labels: {}", labels.join(" "))
}

pub fn write_dense(m: &NeighborhoodMatrix) -> String {
    let mut out = String::new();
    if m.dimension() > 0 {
        let _ = writeln!(out, "# {}", labels_line(m));
    }
    let _ = writeln!(out, "{}", m.dimension());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn write_matrix_market(m: &NeighborhoodMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MM_BANNER}");
    let _ = writeln!(out, "% {}", labels_line(m));
    let n = m.dimension();
    let _ = writeln!(out, "{n} {n} {}", m.triplets().count());
    for (i, j, v) in m.triplets() {
        let _ = writeln!(out, "{} {} {v}", i + 1, j + 1);
    }
    out
}

pub fn write_matrix(m: &NeighborhoodMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Dense => write_dense(m),
        MatrixFormat::MatrixMarket => write_matrix_market(m),
    }
}

/// Reads either form, chosen by the presence of the Matrix Market banner.
pub fn read_matrix(text: &str) -> Result<NeighborhoodMatrix> {
    if text.trim_start().starts_with("%%MatrixMarket") {
        read_matrix_market(text)
    } else {
        read_dense(text)
    }
}

fn format_error(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn parse_labels(line: usize, body: &str) -> Result<Vec<u64>> {
    body.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| format_error(line, format!("bad label `{t}`")))
        })
        .collect()
}

fn parse_int<T: std::str::FromStr>(line: usize, token: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| format_error(line, format!("`{token}` is not an integer")))
}

/// Non-comment lines with their 1-based line numbers; collects a labels
/// comment if one appears.
fn content_lines<'a>(
    text: &'a str,
    comment: char,
    labels: &mut Option<Vec<u64>>,
) -> Result<Vec<(usize, &'a str)>> {
    let mut out = Vec::new();
    for (offset, raw) in text.lines().enumerate() {
        let line = offset + 1;
        let trimmed = raw.trim();
        if let Some(rest) = trimmed.strip_prefix(comment) {
            if let Some(body) = rest.trim().strip_prefix("labels:") {
                *labels = Some(parse_labels(line, body)?);
            }
            continue;
        }
        if !trimmed.is_empty() {
            out.push((line, trimmed));
        }
    }
    Ok(out)
}

fn finish(rows: Vec<Vec<i64>>, labels: Option<Vec<u64>>) -> Result<NeighborhoodMatrix> {
    if let Some(labels) = &labels {
        if labels.len() != rows.len() {
            return Err(format_error(
                0,
                format!("{} labels for dimension {}", labels.len(), rows.len()),
            ));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(**l)) {
            return Err(format_error(0, format!("duplicate label {dup}")));
        }
    }
    NeighborhoodMatrix::from_rows(rows, labels)
}

pub fn read_dense(text: &str) -> Result<NeighborhoodMatrix> {
    let mut labels = None;
    let lines = content_lines(text, '#', &mut labels)?;
    let mut lines = lines.into_iter();
    let (line, header) = lines
        .next()
        .ok_or_else(|| format_error(1, "missing dimension line"))?;
    let n: usize = parse_int(line, header)?;

    let mut rows = Vec::with_capacity(n);
    for (line, body) in lines {
        if rows.len() == n {
            return Err(format_error(line, "more rows than the stated dimension"));
        }
        let row = body
            .split_whitespace()
            .map(|t| parse_int::<i64>(line, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(format_error(
                line,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(format_error(
            0,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    finish(rows, labels)
}

pub fn read_matrix_market(text: &str) -> Result<NeighborhoodMatrix> {
    let first = text.lines().next().unwrap_or("").trim();
    let banner: Vec<String> = first.split_whitespace().map(str::to_lowercase).collect();
    if banner
        != [
            "%%matrixmarket",
            "matrix",
            "coordinate",
            "integer",
            "general",
        ]
    {
        return Err(format_error(
            1,
            format!("unsupported header `{first}`; expected `{MM_BANNER}`"),
        ));
    }

    let mut labels = None;
    let lines = content_lines(text, '%', &mut labels)?;
    let mut lines = lines.into_iter();
    let (line, size) = lines
        .next()
        .ok_or_else(|| format_error(2, "missing size line"))?;
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(|t| parse_int(line, t))
        .collect::<Result<_>>()?;
    let (n, nnz) = match dims.as_slice() {
        [r, c, nnz] if r == c => (*r, *nnz),
        [_, _, _] => return Err(format_error(line, "matrix must be square")),
        _ => return Err(format_error(line, "size line must be `rows cols nnz`")),
    };

    let mut rows = vec![vec![0i64; n]; n];
    let mut seen = HashSet::new();
    let mut count = 0;
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [i, j, v] = tokens.as_slice() else {
            return Err(format_error(line, "entry must be `i j value`"));
        };
        let (i, j): (usize, usize) = (parse_int(line, i)?, parse_int(line, j)?);
        let v: i64 = parse_int(line, v)?;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(format_error(
                line,
                format!("index ({i}, {j}) outside 1..={n}"),
            ));
        }
        if !seen.insert((i, j)) {
            return Err(format_error(line, format!("duplicate entry ({i}, {j})")));
        }
        rows[i - 1][j - 1] = v;
        count += 1;
    }
    if count != nnz {
        return Err(format_error(
            0,
            format!("size line promises {nnz} entries, found {count}"),
        ));
    }
    finish(rows, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nm::build_nm;
    use proptest::prelude::*;

    #[test]
    fn dense_layout() {
        let m = build_nm(&fixtures::complete(2));
        assert_eq!(write_dense(&m), "# labels: 1 2\n2\n-1 1\n1 -1\n");
        let empty = build_nm(&crate::graph::Graph::empty(0));
        assert_eq!(write_dense(&empty), "0\n");
        assert_eq!(read_dense("0\n").unwrap().dimension(), 0);
    }

    #[test]
    fn matrix_market_layout() {
        let m = build_nm(&fixtures::path(3));
        let text = write_matrix_market(&m);
        assert_eq!(
            text,
            "%%MatrixMarket matrix coordinate integer general\n\
             % labels: 1 2 3\n\
             3 3 9\n\
             1 1 -1\n1 2 2\n1 3 -1\n2 1 1\n2 2 -2\n2 3 1\n3 1 -1\n3 2 2\n3 3 -1\n"
        );
        assert_eq!(read_matrix(&text).unwrap(), m);
        let truncated = text.trim_end().rsplit_once('\n').unwrap().0;
        assert!(read_matrix(truncated).is_err());
    }

    #[test]
    fn labels_survive() {
        let m = NeighborhoodMatrix::from_rows(vec![vec![-1, 1], vec![1, -1]], Some(vec![10, 3]))
            .unwrap();
        for format in [MatrixFormat::Dense, MatrixFormat::MatrixMarket] {
            let back = read_matrix(&write_matrix(&m, format)).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn missing_labels_default_to_one_based() {
        let m = read_dense("2\n-1 1\n1 -1\n").unwrap();
        assert_eq!(m.labels(), &[1, 2]);
    }

    #[test]
    fn malformed_dense() {
        assert!(matches!(read_dense(""), Err(Error::Format { line: 1, .. })));
        assert!(matches!(
            read_dense("x\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(matches!(
            read_dense("2\n1 2\n3\n"),
            Err(Error::Format { line: 3, .. })
        ));
        assert!(read_dense("2\n1 2\n").is_err());
        assert!(read_dense("1\n0\n0\n").is_err());
        assert!(read_dense("1\n1.5\n").is_err());
        assert!(read_dense("# labels: 4 4\n2\n0 0\n0 0\n").is_err());
        assert!(read_dense("# labels: 4\n2\n0 0\n0 0\n").is_err());
    }

    #[test]
    fn malformed_matrix_market() {
        let header = "%%MatrixMarket matrix coordinate integer general\n";
        assert!(
            read_matrix_market("%%MatrixMarket matrix coordinate real general\n1 1 0\n").is_err()
        );
        assert!(read_matrix_market(&format!("{header}2 3 0\n")).is_err());
        assert!(read_matrix_market(&format!("{header}2 2 1\n3 1 4\n")).is_err());
        assert!(read_matrix_market(&format!("{header}2 2 2\n1 1 4\n1 1 4\n")).is_err());
        assert!(read_matrix_market(&format!("{header}2 2 1\n1 1\n")).is_err());
        assert!(read_matrix_market(&format!("{header}2 2 2\n1 1 4\n")).is_err());
        let ok = read_matrix_market(&format!("{header}2 2 1\n2 1 -3\n")).unwrap();
        assert_eq!(ok.to_rows(), vec![vec![0, 0], vec![-3, 0]]);
    }

    proptest! {
        #[test]
        fn both_forms_round_trip(
            rows in (0usize..6).prop_flat_map(|n| {
                proptest::collection::vec(proptest::collection::vec(-7i64..8, n), n)
            })
        ) {
            let m = NeighborhoodMatrix::from_rows(rows, None).unwrap();
            prop_assert_eq!(read_matrix(&write_dense(&m)).unwrap(), m.clone());
            prop_assert_eq!(read_matrix(&write_matrix_market(&m)).unwrap(), m);
        }
    }
}

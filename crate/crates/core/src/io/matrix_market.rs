//! Matrix Market `coordinate real symmetric` reader and writer.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::io::format::{format_float, write_atomic};
use crate::operator::SymmetricOperator;

pub const BANNER: &str = "%%MatrixMarket matrix coordinate real symmetric";

pub fn read_matrix_market(path: impl AsRef<Path>) -> Result<SymmetricOperator> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_matrix_market(BufReader::new(file), &path.display().to_string())
}

/// Parses from any reader; `source` labels error messages.
pub fn parse_matrix_market(reader: impl BufRead, source: &str) -> Result<SymmetricOperator> {
    let err = |line: usize, message: String| Error::Parse {
        path: source.to_string(),
        line,
        message,
    };
    let mut lines = reader.lines().enumerate().map(|(i, l)| (i + 1, l));

    let (_, banner) = lines
        .next()
        .ok_or_else(|| err(1, "empty file, expected a %%MatrixMarket banner".into()))?;
    let banner = banner.map_err(|e| err(1, e.to_string()))?;
    check_banner(&banner).map_err(|m| err(1, m))?;

    let mut size: Option<(usize, usize)> = None;
    let mut entries = Vec::new();
    for (lineno, line) in lines {
        let line = line.map_err(|e| err(lineno, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match size {
            None => {
                if fields.len() != 3 {
                    return Err(err(lineno, format!("expected `rows cols nnz`, got `{line}`")));
                }
                let nums = fields
                    .iter()
                    .map(|f| f.parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| err(lineno, format!("invalid size line `{line}`")))?;
                if nums[0] != nums[1] {
                    return Err(err(
                        lineno,
                        format!("symmetric matrix must be square, got {} x {}", nums[0], nums[1]),
                    ));
                }
                if nums[0] == 0 {
                    return Err(err(lineno, "matrix dimension must be positive".into()));
                }
                size = Some((nums[0], nums[2]));
                entries.reserve(nums[2]);
            }
            Some((n, nnz)) => {
                if fields.len() != 3 {
                    return Err(err(lineno, format!("expected `row col value`, got `{line}`")));
                }
                if entries.len() == nnz {
                    return Err(err(lineno, format!("more than the declared {nnz} entries")));
                }
                let index = |f: &str| -> Result<usize> {
                    let i: usize = f.parse().map_err(|_| err(lineno, format!("invalid index `{f}`")))?;
                    if i == 0 || i > n {
                        return Err(err(lineno, format!("index {i} out of range 1..={n}")));
                    }
                    Ok(i - 1)
                };
                let (i, j) = (index(fields[0])?, index(fields[1])?);
                let value: f64 = fields[2]
                    .parse()
                    .map_err(|_| err(lineno, format!("invalid value `{}`", fields[2])))?;
                entries.push((i, j, value));
            }
        }
    }
    let (n, nnz) = size.ok_or_else(|| err(1, "missing size line".into()))?;
    if entries.len() != nnz {
        return Err(err(0, format!("declared {nnz} entries but found {}", entries.len())));
    }
    SymmetricOperator::sparse(n, entries).map_err(|e| err(0, e.to_string()))
}

fn check_banner(line: &str) -> std::result::Result<(), String> {
    let tokens: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
    if tokens.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(format!("missing banner, expected `{BANNER}`"));
    }
    let want = ["matrix", "coordinate", "real", "symmetric"];
    let got: Vec<&str> = tokens[1..].iter().map(String::as_str).collect();
    if got.len() != 4 {
        return Err(format!("malformed banner `{line}`, expected `{BANNER}`"));
    }
    if got[0] != want[0] || got[1] != want[1] {
        return Err(format!(
            "only `matrix coordinate` storage is supported, got `{} {}`",
            got[0], got[1]
        ));
    }
    if got[2] != "real" && got[2] != "integer" {
        return Err(format!("field `{}` is not supported, expected `real`", got[2]));
    }
    if got[3] != "symmetric" {
        return Err(format!(
            "symmetry kind `{}` is not supported; store the lower triangle and declare \
             `symmetric` in the banner (`{BANNER}`)",
            got[3]
        ));
    }
    Ok(())
}

/// Writes the stored lower triangle (dense operators are written from their
/// lower triangle, zeros skipped).
pub fn write_matrix_market(a: &SymmetricOperator, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    render_matrix_market(a, &mut buf).map_err(|e| Error::io(path.as_ref(), e))?;
    write_atomic(path.as_ref(), &buf)
}

pub fn render_matrix_market(a: &SymmetricOperator, out: &mut impl Write) -> std::io::Result<()> {
    let entries: Vec<(usize, usize, f64)> = match a.sparse_entries() {
        Some(e) => e.iter().map(|e| (e.row, e.col, e.value)).collect(),
        None => {
            let d = a.to_dense();
            (0..a.dim())
                .flat_map(|i| (0..=i).map(move |j| (i, j)))
                .filter(|&(i, j)| d[(i, j)] != 0.0)
                .map(|(i, j)| (i, j, d[(i, j)]))
                .collect()
        }
    };
    writeln!(out, "{BANNER}")?;
    writeln!(out, "{} {} {}", a.dim(), a.dim(), entries.len())?;
    for (i, j, v) in entries {
        writeln!(out, "{} {} {}", i + 1, j + 1, format_float(v))?;
    }
    Ok(())
}

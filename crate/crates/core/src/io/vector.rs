use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Reads whitespace-separated reals; `%` and `#` start comments.
pub fn read_vector(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split(['%', '#']).next().unwrap_or("");
        for tok in body.split_whitespace() {
            let v: f64 = tok.parse().map_err(|_| Error::Parse {
                path: path.display().to_string(),
                line: lineno + 1,
                message: format!("invalid number `{tok}`"),
            })?;
            out.push(v);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse {
            path: path.display().to_string(),
            line: 0,
            message: "no values found".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_layout() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("v.txt");
        fs::write(&p, "# start\n1 2\n3.5e0 % tail\n\n-4\n").unwrap();
        assert_eq!(read_vector(&p).unwrap(), vec![1.0, 2.0, 3.5, -4.0]);
        fs::write(&p, "1 x\n").unwrap();
        assert!(read_vector(&p).is_err());
        fs::write(&p, "% nothing\n").unwrap();
        assert!(read_vector(&p).is_err());
    }
}

use std::path::{Path, PathBuf};

use ritzsym::io::{build_case, read_matrix_market, read_vector, CaseSpec};
use ritzsym::lanczos::reorthogonalizations;
use ritzsym::{Reorthogonalization, SymmetricOperator};

use crate::{usage, CliError};

pub(crate) struct MatrixInput {
    pub operator: SymmetricOperator,
    pub case: Option<CaseSpec>,
    pub case_start: Option<Vec<f64>>,
}

pub(crate) fn case_input(id: u8, nd3k: Option<&Path>) -> Result<MatrixInput, CliError> {
    let spec = CaseSpec::from_id(id, nd3k.map(Path::to_path_buf))?;
    let built = build_case(&spec)?;
    Ok(MatrixInput {
        operator: built.operator,
        case: Some(spec),
        case_start: Some(built.start),
    })
}

/// `case:N` or a Matrix Market path.
pub(crate) fn matrix_input(spec: &str, nd3k: Option<&Path>) -> Result<MatrixInput, CliError> {
    if let Some(id) = spec.strip_prefix("case:") {
        let id: u8 = id
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad case number in `{spec}`")))?;
        return case_input(id, nd3k);
    }
    Ok(MatrixInput {
        operator: read_matrix_market(PathBuf::from(spec))?,
        case: None,
        case_start: None,
    })
}

/// `ones`, `case`, or a vector file. Without a spec, a case matrix uses its
/// own start vector and a file matrix uses `ones`.
pub(crate) fn vector_input(spec: Option<&str>, input: &MatrixInput) -> Result<Vec<f64>, CliError> {
    let n = input.operator.dim();
    let v = match spec {
        Some("ones") => vec![1.0; n],
        Some("case") => input
            .case_start
            .clone()
            .ok_or_else(|| usage("`--vector case` needs a `case:N` matrix"))?,
        Some(path) => read_vector(path)?,
        None => input.case_start.clone().unwrap_or_else(|| vec![1.0; n]),
    };
    if v.len() != n {
        return Err(usage(format!("vector has {} entries, matrix is {n}x{n}", v.len())));
    }
    Ok(v)
}

pub(crate) fn reorth(name: &str) -> Result<Box<dyn Reorthogonalization>, CliError> {
    Ok(reorthogonalizations().build(name)?)
}

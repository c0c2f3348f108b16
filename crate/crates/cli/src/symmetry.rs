use std::fs;
use std::time::Instant;

use ritzsym::bounds::bounds_report;
use ritzsym::eigen::{dense_solvers, DenseEigenOptions};
use ritzsym::io::{format_float, to_json_string, write_atomic, CaseSpec, CsvTable};
use ritzsym::symmetry::{analyze_symmetry, SpectralMeasure, SymmetryAnalysis};
use serde_json::{json, Value};

use crate::inputs::{case_input, reorth, vector_input, MatrixInput};
use crate::{usage, CliError, SymmetryArgs};

pub(crate) fn run(args: &SymmetryArgs) -> Result<String, CliError> {
    if args.m == 0 {
        return Err(usage("--m must be positive"));
    }
    if !(args.tol >= 0.0 && args.tol.is_finite()) {
        return Err(usage("--tol must be a nonnegative number"));
    }
    dense_solvers().build(&args.dense_solver)?;
    let started = Instant::now();
    let (input, vector_label) = match (args.case, &args.matrix) {
        (Some(id), _) => (case_input(id, args.nd3k.as_deref())?, "case".to_string()),
        (None, Some(path)) => {
            let operator = ritzsym::io::read_matrix_market(path)?;
            let input = MatrixInput {
                operator,
                case: None,
                case_start: None,
            };
            (input, args.vector.clone().unwrap_or_default())
        }
        (None, None) => return Err(usage("give --case N, or --matrix and --vector")),
    };
    let v = vector_input(args.vector.as_deref(), &input)?;
    let n = input.operator.dim();

    let env = DenseEigenOptions::from_env().with_solver(args.dense_solver.clone());
    let (dense, with_condition) = if n <= env.cap {
        (env, true)
    } else if args.allow_dense_cap_override {
        (env.with_cap(n), true)
    } else {
        (env, false)
    };
    let analysis = analyze_symmetry(
        &input.operator,
        &v,
        args.m,
        reorth(&args.reorth)?,
        args.tol,
        with_condition,
        &dense,
    )?;

    let report = report_json(args, &input, &vector_label, &analysis, &dense, started)?;
    let report_text = to_json_string(&report);
    if let Some(dir) = &args.out_dir {
        fs::create_dir_all(dir).map_err(|e| ritzsym::Error::Io {
            path: dir.clone(),
            source: e,
        })?;
        write_atomic(&dir.join("ritz.csv"), ritz_csv(&analysis).as_bytes())?;
        if let Some(measure) = &analysis.measure {
            write_atomic(&dir.join("measure.csv"), measure_csv(measure).as_bytes())?;
        }
        write_atomic(&dir.join("report.json"), report_text.as_bytes())?;
    }
    Ok(report_text)
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "Yes",
        Some(false) => "No",
        None => "unknown",
    }
}

fn report_json(
    args: &SymmetryArgs,
    input: &MatrixInput,
    vector_label: &str,
    analysis: &SymmetryAnalysis,
    dense: &DenseEigenOptions,
    started: Instant,
) -> Result<Value, CliError> {
    let verdict = analysis.report.verdict();
    let holds = analysis.report.condition.as_ref().map(|c| c.holds);
    let mut inputs = json!({
        "n": input.operator.dim(),
        "m": args.m,
        "tol": args.tol,
        "reorth": args.reorth,
        "dense_solver": dense.solver,
        "vector": vector_label,
    });
    match &input.case {
        Some(spec) => {
            inputs["case"] = json!(spec.id());
            if let CaseSpec::Nd3k { path } = spec {
                inputs["matrix"] = json!(path.display().to_string());
                inputs["vector_split"] = json!(format!(
                    "first {} entries +1, remaining {} entries -1",
                    input.operator.dim() / 2,
                    input.operator.dim() - input.operator.dim() / 2
                ));
            }
        }
        None => {
            inputs["matrix"] = json!(args.matrix.as_ref().map(|p| p.display().to_string()));
        }
    }

    let bounds = match &analysis.eigenvalues {
        Some(eigs) if eigs[0] > 0.0 && eigs[eigs.len() - 1] > eigs[0] => {
            let kappa = eigs[eigs.len() - 1] / eigs[0];
            Some(bounds_report(kappa, None, 0.0, 0)?)
        }
        _ => None,
    };

    let mut report = json!({
        "command": "symmetry",
        "inputs": inputs,
        "table": {
            "symmetric_eigenvalues": yes_no(verdict.symmetric_spectrum),
            "mu_absolute_palindrome": yes_no(verdict.palindrome),
            "ritz_values_symmetric": yes_no(Some(verdict.ritz_symmetric)),
            "sufficient_condition": match holds {
                Some(true) => "Yes",
                _ => "?",
            },
        },
        "verdict": verdict,
        "report": analysis.report,
        "quadrature": analysis.rule,
        "tridiagonal": analysis.tridiagonal,
        "steps_completed": analysis.steps_completed,
        "breakdown": analysis.breakdown,
        "bounds": bounds,
        "measure_emitted": analysis.measure.is_some(),
    });
    if analysis.measure.is_none() {
        report["dense_skipped"] = json!(format!(
            "dimension {} exceeds the dense cap {}; pass --allow-dense-cap-override \
             or raise RITZSYM_DENSE_CAP to check the hypotheses and emit the measure",
            input.operator.dim(),
            dense.cap
        ));
    }
    if args.timings {
        report["timings"] = json!({ "total_seconds": started.elapsed().as_secs_f64() });
    }
    Ok(report)
}

pub(crate) fn measure_csv(measure: &SpectralMeasure) -> String {
    let mut t = CsvTable::new(["t_start", "t_end", "value"]);
    for s in measure.steps() {
        t.push(vec![
            format_float(s.start),
            s.end.map(format_float).unwrap_or_else(|| "inf".into()),
            format_float(s.value),
        ]);
    }
    t.render()
}

pub(crate) fn ritz_csv(analysis: &SymmetryAnalysis) -> String {
    let mut t = CsvTable::new(["index", "node", "weight"]);
    for (k, (x, w)) in analysis.rule.nodes.iter().zip(&analysis.rule.weights).enumerate() {
        t.push(vec![(k + 1).to_string(), format_float(*x), format_float(*w)]);
    }
    t.render()
}

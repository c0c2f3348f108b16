use std::time::Instant;

use ritzsym::io::{format_float, to_json_string, CsvTable};
use ritzsym::{estimate_quadratic_form, parse_function, quadratic_form_oracle, DenseEigenOptions};
use serde_json::json;

use crate::inputs::{matrix_input, reorth, vector_input};
use crate::{emit, usage, CliError, EstimateArgs, Format};

pub(crate) fn run(args: &EstimateArgs) -> Result<String, CliError> {
    if args.m == 0 {
        return Err(usage("--m must be positive"));
    }
    let started = Instant::now();
    let f = parse_function(&args.function)?;
    let input = matrix_input(&args.matrix, args.nd3k.as_deref())?;
    let u = vector_input(args.vector.as_deref(), &input)?;
    let est = estimate_quadratic_form(&input.operator, &u, &*f, args.m, reorth(&args.reorth)?)?;
    let lanczos_secs = started.elapsed().as_secs_f64();

    let oracle = if args.oracle {
        Some(quadratic_form_oracle(
            &input.operator,
            &u,
            &*f,
            &DenseEigenOptions::from_env(),
        )?)
    } else {
        None
    };
    let relative_error = oracle.map(|o| (est.value - o).abs() / o.abs().max(f64::MIN_POSITIVE));

    let text = match args.format {
        Format::Json => {
            let mut report = json!({
                "command": "estimate",
                "inputs": {
                    "matrix": args.matrix,
                    "vector": args.vector.clone().unwrap_or_else(|| "default".into()),
                    "f": f.spec(),
                    "m": args.m,
                    "n": input.operator.dim(),
                    "reorth": args.reorth,
                },
                "estimate": est.value,
                "norm_squared": est.norm_squared,
                "steps_completed": est.steps_completed,
                "breakdown": est.breakdown,
                "quadrature": est.rule,
                "tridiagonal": est.tridiagonal,
                "oracle": oracle,
                "relative_error": relative_error,
            });
            if args.timings {
                report["timings"] =
                    json!({ "total_seconds": started.elapsed().as_secs_f64(), "lanczos_seconds": lanczos_secs });
            }
            to_json_string(&report)
        }
        Format::Csv => {
            let mut t = CsvTable::new(["quantity", "value"]);
            let mut put = |k: String, v: String| t.push(vec![k, v]);
            put("estimate".into(), format_float(est.value));
            put("norm_squared".into(), format_float(est.norm_squared));
            put("steps_completed".into(), est.steps_completed.to_string());
            put(
                "breakdown".into(),
                est.breakdown.map(|b| b.to_string()).unwrap_or_default(),
            );
            if let Some(o) = oracle {
                put("oracle".into(), format_float(o));
            }
            if let Some(r) = relative_error {
                put("relative_error".into(), format_float(r));
            }
            for (k, (x, w)) in est.rule.nodes.iter().zip(&est.rule.weights).enumerate() {
                put(format!("node_{}", k + 1), format_float(*x));
                put(format!("weight_{}", k + 1), format_float(*w));
            }
            if args.timings {
                put("total_seconds".into(), format_float(started.elapsed().as_secs_f64()));
            }
            t.render()
        }
    };
    emit(text, args.out.as_ref())
}

use ritzsym::bounds::{bounds_report, BoundsReport, REFERENCE_KAPPA_GRID};
use ritzsym::io::{format_float, to_json_string, CsvTable};
use ritzsym::{parse_function, MatrixFunction};
use serde_json::json;

use crate::{emit, usage, BoundsArgs, CliError, Format};

struct Row {
    kappa: f64,
    result: Result<BoundsReport, ritzsym::Error>,
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    if spec.trim() == "paper" {
        return Ok(REFERENCE_KAPPA_GRID.to_vec());
    }
    spec.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("bad condition number `{}` in --kappa-grid", tok.trim())))
        })
        .collect()
}

pub(crate) fn run(args: &BoundsArgs) -> Result<String, CliError> {
    if !(args.epsilon > 0.0 && args.epsilon.is_finite()) {
        return Err(usage("--epsilon must be positive"));
    }
    let f: Option<Box<dyn MatrixFunction>> = args.function.as_deref().map(parse_function).transpose()?;
    let kappas = match (&args.kappa_grid, args.lambda_min, args.lambda_max) {
        (Some(_), _, Some(_)) => {
            return Err(usage("--lambda-max sets kappa itself; drop it or drop --kappa-grid"));
        }
        (Some(grid), _, None) => parse_grid(grid)?,
        (None, Some(lo), Some(hi)) => vec![hi / lo],
        (None, None, Some(_)) => return Err(usage("--lambda-max needs --lambda-min")),
        (None, _, None) => REFERENCE_KAPPA_GRID.to_vec(),
    };
    if f.is_some() && args.lambda_min.is_none() {
        return Err(usage("--f needs --lambda-min to place the ellipse"));
    }
    if f.is_some() && args.samples == 0 {
        return Err(usage("--samples must be positive"));
    }
    let rows: Vec<Row> = kappas
        .iter()
        .map(|&kappa| Row {
            kappa,
            result: bounds_report(kappa, f.as_deref().zip(args.lambda_min), args.epsilon, args.samples),
        })
        .collect();

    let text = match args.format {
        Format::Csv => render_csv(&rows, f.is_some()),
        Format::Json => render_json(&rows, args, f.as_deref()),
    };
    emit(text, args.out.as_ref())
}

fn render_csv(rows: &[Row], with_function: bool) -> String {
    let mut header = vec!["kappa", "rho", "lower", "upper", "average", "exact"];
    if with_function {
        header.extend(["m_rho", "m_sym_floor", "m_asym_floor"]);
    }
    header.push("status");
    let width = header.len();
    let mut t = CsvTable::new(header);
    for row in rows {
        let mut cells = vec![format_float(row.kappa)];
        match &row.result {
            Ok(r) => {
                cells.push(format_float(r.rho));
                cells.push(format_float(r.m_star.lower));
                cells.push(format_float(r.m_star.upper));
                cells.push(format_float(r.m_star.average()));
                cells.push(format_float(r.m_star.exact));
                if let Some(fb) = &r.function {
                    cells.push(format_float(fb.m_rho.value()));
                    cells.push(fb.m_sym.floor.to_string());
                    cells.push(fb.m_asym.floor.to_string());
                }
                cells.push("ok".into());
            }
            Err(e) => {
                cells.resize(width - 1, String::new());
                cells.push(format!("error: {}", e.to_string().replace([',', '\n', '"'], ";")));
            }
        }
        t.push(cells);
    }
    t.render()
}

fn render_json(rows: &[Row], args: &BoundsArgs, f: Option<&dyn MatrixFunction>) -> String {
    let rows: Vec<_> = rows
        .iter()
        .map(|row| match &row.result {
            Ok(r) => json!({
                "kappa": row.kappa,
                "status": "ok",
                "rho": r.rho,
                "lower": r.m_star.lower,
                "upper": r.m_star.upper,
                "average": r.m_star.average(),
                "exact": r.m_star.exact,
                "function": r.function,
            }),
            Err(e) => json!({
                "kappa": row.kappa,
                "status": "error",
                "error": e.to_string(),
            }),
        })
        .collect();
    to_json_string(&json!({
        "command": "bounds",
        "inputs": {
            "epsilon": args.epsilon,
            "f": f.map(|f| f.spec()),
            "lambda_min": args.lambda_min,
            "samples": args.samples,
        },
        "rows": rows,
    }))
}

//! The `color`, `verify`, `exact`, and `gen` subcommands.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use cfcn_core::{
    cfcn_color, exact_chi_cn, generate, parse_edge_list, verify_cfcn, ExactCount, Graph, GraphKind,
    OracleError,
};

use crate::document::ColoringDocument;
use crate::Failure;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, payload: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, payload).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            std::io::stdout().write_all(payload.as_bytes())?;
            Ok(())
        }
    }
}

pub fn color(graph: &Path, seed: u64, c1: f64, out: Option<&Path>) -> Result<(), Failure> {
    if !c1.is_finite() || c1 <= 0.0 {
        return Err(Failure::Usage(format!("--c1 must be positive, got {c1}")));
    }
    let g = read_graph(graph)?;
    let (coloring, stats) = cfcn_color(&g, c1, seed)?;
    // Never persist an unchecked coloring.
    let report = verify_cfcn(&g, &coloring.colors).map_err(|e| Failure::Invalid(e.to_string()))?;
    if let Some(v) = report.first_violation() {
        return Err(Failure::Invalid(format!(
            "internal error: produced coloring violates the closed neighborhood of vertex {v}"
        )));
    }
    emit(
        out,
        &ColoringDocument::from_run(&coloring, &stats).to_json(),
    )
}

pub fn verify(graph: &Path, coloring: &Path) -> Result<(), Failure> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(coloring)
        .map_err(|e| Failure::Usage(format!("{}: {e}", coloring.display())))?;
    let doc: ColoringDocument = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", coloring.display())))?;
    if doc.colors.len() != doc.n {
        return Err(Failure::Usage(format!(
            "{}: document declares n={} but carries {} colors",
            coloring.display(),
            doc.n,
            doc.colors.len()
        )));
    }
    if doc.n != g.vertex_count() {
        return Err(Failure::Usage(format!(
            "graph has {} vertices but the document colors {}",
            g.vertex_count(),
            doc.n
        )));
    }
    let report = verify_cfcn(&g, &doc.colors).map_err(|e| match e {
        OracleError::ColoringLengthMismatch { .. } => Failure::Usage(e.to_string()),
        _ => Failure::Invalid(e.to_string()),
    })?;
    match report.first_violation() {
        None => {
            println!("valid: every closed neighborhood has a unique color");
            Ok(())
        }
        Some(v) => Err(Failure::Invalid(format!(
            "closed neighborhood of vertex {v} has no unique color"
        ))),
    }
}

pub fn exact(graph: &Path, max_colors: u32) -> Result<(), Failure> {
    let g = read_graph(graph)?;
    match exact_chi_cn(&g, max_colors) {
        Ok(ExactCount::Colors(k)) => {
            println!("{k}");
            Ok(())
        }
        Ok(ExactCount::ExceedsMax) => {
            println!("exceeds max ({max_colors})");
            Ok(())
        }
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

pub fn gen(spec: &[String], out: Option<&Path>) -> Result<(), Failure> {
    let kind = parse_gen_spec(spec)?;
    let g = generate(&kind);
    emit(out, &g.to_edge_list())
}

fn parse_gen_spec(spec: &[String]) -> Result<GraphKind, Failure> {
    let usage = |what: &str| {
        Failure::Usage(format!(
            "{what}; expected `path N`, `cycle N`, `complete N`, `star LEAVES`, \
             `grid ROWS COLS`, or `gnp N P SEED`"
        ))
    };
    let arg = |i: usize| -> Option<&str> { spec.get(i).map(|s| s.as_str()) };
    let count = |want: usize| -> Result<(), Failure> {
        if spec.len() == want + 1 {
            Ok(())
        } else {
            Err(usage(&format!("`{}` takes {want} parameter(s)", spec[0])))
        }
    };
    let int = |i: usize| -> Result<usize, Failure> {
        arg(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| usage(&format!("parameter {i} must be an integer")))
    };
    match arg(0) {
        Some("path") => {
            count(1)?;
            Ok(GraphKind::Path { n: int(1)? })
        }
        Some("cycle") => {
            count(1)?;
            let n = int(1)?;
            if n < 3 {
                return Err(Failure::Usage(format!(
                    "cycle needs at least 3 vertices, got {n}"
                )));
            }
            Ok(GraphKind::Cycle { n })
        }
        Some("complete") => {
            count(1)?;
            Ok(GraphKind::Complete { n: int(1)? })
        }
        Some("star") => {
            count(1)?;
            Ok(GraphKind::Star { leaves: int(1)? })
        }
        Some("grid") => {
            count(2)?;
            Ok(GraphKind::Grid {
                rows: int(1)?,
                cols: int(2)?,
            })
        }
        Some("gnp") => {
            count(3)?;
            let n = int(1)?;
            let p: f64 = arg(2)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| usage("parameter 2 must be a probability"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Usage(format!(
                    "gnp probability must be in [0, 1], got {p}"
                )));
            }
            let seed: u64 = arg(3)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| usage("parameter 3 must be a seed"))?;
            Ok(GraphKind::Gnp { n, p, seed })
        }
        Some(other) => Err(usage(&format!("unknown kind `{other}`"))),
        None => Err(usage("missing kind")),
    }
}

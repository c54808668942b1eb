//! The `bench` subcommand: sweep, measure, emit CSV, summarize.
//!
//! Every sweep point × seed becomes one CSV row. Rows are computed in
//! parallel but emitted in sweep order, so the CSV is reproducible for a
//! fixed request — except the `wall_time_ms` column, which is honest
//! timing. A failed run (budget exhaustion, or a verification failure,
//! which would indicate a bug) is recorded in-row with `FAIL` in the
//! `total_colors` column and surfaces in the exit code.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use cfcn_core::{
    cfcn_color, color_count, generate, greedy_cfcn_baseline, iteration_cap, verify_cfcn, GraphKind,
    PipelineError,
};
use rayon::prelude::*;

use crate::Failure;

pub const CSV_HEADER: &str = "kind,n,p,seed,delta,k_target,total_colors,baseline_colors,\
K,doublings,rounds,wall_time_ms,ratio";

pub struct Request {
    pub deltas: Option<String>,
    pub gnp_grid: Option<String>,
    pub family: Option<String>,
    pub sizes: Option<String>,
    pub seeds: String,
    pub c1: f64,
    pub baseline: bool,
    pub out: Option<PathBuf>,
}

struct Job {
    kind: GraphKind,
    seed: u64,
}

#[derive(Clone, Copy, PartialEq)]
enum RowFailure {
    Budget,
    Internal,
}

struct Row {
    line: String,
    ratio: Option<f64>,
    failure: Option<RowFailure>,
}

pub fn run(req: Request) -> Result<(), Failure> {
    if !req.c1.is_finite() || req.c1 <= 0.0 {
        return Err(Failure::Usage(format!(
            "--c1 must be positive, got {}",
            req.c1
        )));
    }
    let seeds: Vec<u64> = parse_list(&req.seeds, "--seeds")?;
    let jobs = build_jobs(&req, &seeds)?;

    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|job| run_job(job, req.c1, req.baseline))
        .collect();

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.line);
        csv.push('\n');
    }

    let ratios: Vec<f64> = rows.iter().filter_map(|r| r.ratio).collect();
    let failures = rows.iter().filter(|r| r.failure.is_some()).count();
    let summary = match (ratios
        .iter()
        .cloned()
        .fold(None::<f64>, |m, r| Some(m.map_or(r, |m| m.max(r)))),)
    {
        (Some(max),) => {
            let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
            format!(
                "rows: {}, failures: {failures}, max ratio: {max:.6}, mean ratio: {mean:.6}",
                rows.len()
            )
        }
        (None,) => format!(
            "rows: {}, failures: {failures}, max ratio: n/a, mean ratio: n/a",
            rows.len()
        ),
    };

    match &req.out {
        Some(path) => {
            fs::write(path, &csv)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => {
            std::io::stdout().write_all(csv.as_bytes())?;
            eprintln!("{summary}");
        }
    }

    if rows.iter().any(|r| r.failure == Some(RowFailure::Budget)) {
        Err(Failure::Budget(format!(
            "{failures} of {} runs failed",
            rows.len()
        )))
    } else if failures > 0 {
        Err(Failure::Invalid(format!(
            "{failures} of {} runs failed",
            rows.len()
        )))
    } else {
        Ok(())
    }
}

fn build_jobs(req: &Request, seeds: &[u64]) -> Result<Vec<Job>, Failure> {
    let mut jobs = Vec::new();
    if let Some(deltas) = &req.deltas {
        for d in parse_list::<usize>(deltas, "--deltas")? {
            if d == 0 {
                return Err(Failure::Usage("--deltas entries must be positive".into()));
            }
            // Near-regular: n scales with the target degree, p pins the
            // expected degree to it.
            let n = (6 * d).max(50);
            let p = d as f64 / (n - 1) as f64;
            for &seed in seeds {
                jobs.push(Job {
                    kind: GraphKind::Gnp { n, p, seed },
                    seed,
                });
            }
        }
    }
    if let Some(grid) = &req.gnp_grid {
        let (ns, ps) = parse_grid(grid)?;
        for &n in &ns {
            for &p in &ps {
                for &seed in seeds {
                    jobs.push(Job {
                        kind: GraphKind::Gnp { n, p, seed },
                        seed,
                    });
                }
            }
        }
    }
    if let (Some(family), Some(sizes)) = (&req.family, &req.sizes) {
        let sizes: Vec<usize> = parse_list(sizes, "--sizes")?;
        for &size in &sizes {
            let kind = match family.as_str() {
                "path" => GraphKind::Path { n: size },
                "cycle" if size >= 3 => GraphKind::Cycle { n: size },
                "cycle" => {
                    return Err(Failure::Usage(format!(
                        "cycle needs at least 3 vertices, got {size}"
                    )))
                }
                "complete" => GraphKind::Complete { n: size },
                "star" => GraphKind::Star { leaves: size },
                other => {
                    return Err(Failure::Usage(format!(
                        "--family must be path, cycle, complete, or star, got `{other}`"
                    )))
                }
            };
            for &seed in seeds {
                jobs.push(Job {
                    kind: kind.clone(),
                    seed,
                });
            }
        }
    }
    Ok(jobs)
}

fn run_job(job: &Job, c1: f64, baseline: bool) -> Row {
    let g = generate(&job.kind);
    let (kind, n, p) = describe(&job.kind);
    let delta = g.max_degree();
    let k_target = iteration_cap(delta);
    let prefix = format!("{kind},{n},{p},{},{delta},{k_target}", job.seed);

    let started = Instant::now();
    let outcome = cfcn_color(&g, c1, job.seed);
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    let fail = |kind: RowFailure| Row {
        line: format!("{prefix},FAIL,,,,,,"),
        ratio: None,
        failure: Some(kind),
    };
    let (coloring, stats) = match outcome {
        Ok(pair) => pair,
        Err(PipelineError::Coloring(_)) => return fail(RowFailure::Budget),
        Err(_) => return fail(RowFailure::Internal),
    };
    let verified = verify_cfcn(&g, &coloring.colors)
        .map(|r| r.valid())
        .unwrap_or(false);
    if !verified {
        return fail(RowFailure::Internal);
    }

    let baseline_colors = if baseline {
        color_count(&greedy_cfcn_baseline(&g)).to_string()
    } else {
        String::new()
    };
    let ratio = (delta >= 2).then(|| stats.total_colors as f64 / (delta as f64).log2().powi(2));
    let ratio_str = ratio.map_or(String::new(), |r| format!("{r:.6}"));
    Row {
        line: format!(
            "{prefix},{},{baseline_colors},{},{},{},{wall_ms:.3},{ratio_str}",
            stats.total_colors, stats.palette, stats.doublings, stats.rounds
        ),
        ratio,
        failure: None,
    }
}

fn describe(kind: &GraphKind) -> (&'static str, usize, String) {
    match *kind {
        GraphKind::Path { n } => ("path", n, String::new()),
        GraphKind::Cycle { n } => ("cycle", n, String::new()),
        GraphKind::Complete { n } => ("complete", n, String::new()),
        GraphKind::Star { leaves } => ("star", leaves + 1, String::new()),
        GraphKind::Grid { rows, cols } => ("grid", rows * cols, String::new()),
        GraphKind::Gnp { n, p, .. } => ("gnp", n, format!("{p}")),
    }
}

fn parse_list<T: FromStr>(text: &str, flag: &str) -> Result<Vec<T>, Failure> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<T>()
                .map_err(|_| Failure::Usage(format!("{flag}: cannot parse `{tok}`")))
        })
        .collect()
}

/// Grid spec: `n=<list>;p=<list>`, e.g. `n=100,200;p=0.02,0.1`.
fn parse_grid(text: &str) -> Result<(Vec<usize>, Vec<f64>), Failure> {
    let mut ns: Option<Vec<usize>> = None;
    let mut ps: Option<Vec<f64>> = None;
    for part in text.split(';') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--gnp-grid: `{part}` is not key=value")))?;
        match key.trim() {
            "n" => ns = Some(parse_list(value, "--gnp-grid n")?),
            "p" => ps = Some(parse_list(value, "--gnp-grid p")?),
            other => {
                return Err(Failure::Usage(format!("--gnp-grid: unknown key `{other}`")));
            }
        }
    }
    let ns = ns.ok_or_else(|| Failure::Usage("--gnp-grid: missing `n=`".into()))?;
    let ps = ps.ok_or_else(|| Failure::Usage("--gnp-grid: missing `p=`".into()))?;
    if let Some(p) = ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Failure::Usage(format!(
            "--gnp-grid: probability {p} outside [0, 1]"
        )));
    }
    Ok((ns, ps))
}

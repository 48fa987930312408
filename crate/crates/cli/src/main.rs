//! `edl`: densities of cliques and independent sets — exact counting,
//! shifting, threshold models, extremal bounds, and verification suites.
//!
//! Every stdout document is JSON (or CSV with `--format csv` where
//! applicable) and is byte-identical for identical arguments and seeds;
//! timing and diagnostics go to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use edl_cli::formats;
use edl_cli::json::Json;
use edl_cli::verify::{self, VerificationReport};
use edl_core::{optim, solve, Profile, SetSystem, ThresholdCheck};

#[derive(Parser)]
#[command(name = "edl", version, about = "Clique and independent-set density toolkit")]
struct Cli {
    /// Worker threads for parallel suites (fallback: EDL_THREADS, then all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Shift,
    Threshold,
    Maxmin,
    Conditional,
    Goodman,
    Copies,
    All,
}

fn parse_min(s: &str, min: usize, what: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|e| format!("{e}"))?;
    if v < min {
        return Err(format!("{what} must be at least {min}"));
    }
    Ok(v)
}

fn parse_size2(s: &str) -> Result<usize, String> {
    parse_min(s, 2, "subset size")
}

fn parse_size3(s: &str) -> Result<usize, String> {
    parse_min(s, 3, "subset size")
}

fn parse_steps(s: &str) -> Result<usize, String> {
    parse_min(s, 2, "steps")
}

fn parse_blocks(s: &str) -> Result<usize, String> {
    let v = parse_min(s, 1, "block count")?;
    if v > 5 {
        return Err("block count must be at most 5".into());
    }
    Ok(v)
}

fn parse_starts(s: &str) -> Result<usize, String> {
    parse_min(s, 1, "start count")
}

fn parse_unit(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(0.0..=1.0).contains(&v) {
        return Err("value must lie in [0, 1]".into());
    }
    Ok(v)
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(v > 0.0 && v.is_finite()) {
        return Err("value must be positive".into());
    }
    Ok(v)
}

#[derive(Subcommand)]
enum Command {
    /// Largest K_s density given r-independent-set density at least p
    Bound {
        #[arg(long, value_parser = parse_size2)]
        r: usize,
        #[arg(long, value_parser = parse_size2)]
        s: usize,
        #[arg(long, value_parser = parse_unit)]
        p: f64,
    },
    /// The max-min density root and value for K_r vs its complement
    Maxmin {
        #[arg(long, value_parser = parse_size3)]
        r: usize,
    },
    /// Density trade-off curves of the two reference families
    Curve {
        #[arg(long, value_parser = parse_size2)]
        r: usize,
        #[arg(long, value_parser = parse_size2)]
        s: usize,
        #[arg(long, value_parser = parse_steps)]
        steps: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Step-model JSON file; adds one extra row evaluated from the model
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Multistart maximization of min{a p_s, b q_r} over block profiles
    Optimize {
        #[arg(long, value_parser = parse_positive)]
        a: f64,
        #[arg(long, value_parser = parse_positive)]
        b: f64,
        #[arg(long, value_parser = parse_size2)]
        r: usize,
        #[arg(long, value_parser = parse_size2)]
        s: usize,
        #[arg(long, value_parser = parse_blocks)]
        k: usize,
        #[arg(long, value_parser = parse_starts, default_value = "64")]
        starts: usize,
        #[arg(long, default_value = "0")]
        seed: u64,
        /// Profile JSON file used as an extra deterministic start
        #[arg(long)]
        init: Option<PathBuf>,
    },
    /// Apply one (u,v)-shift or run to the shifted fixpoint
    Shift {
        /// Input set-system or graph file
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, requires = "v", conflicts_with = "fixpoint")]
        u: Option<usize>,
        #[arg(long, requires = "u", conflicts_with = "fixpoint")]
        v: Option<usize>,
        /// Apply shifts until the system is shifted
        #[arg(long)]
        fixpoint: bool,
        /// Also write the resulting system in the text format
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Threshold recognition with an ordering witness
    Threshold {
        /// Input graph file
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Verification suites (exhaustive searches and seeded fuzzing)
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value = "6")]
        max_n: usize,
        #[arg(long, default_value = "10000")]
        trials: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// The 13-dimensional Hamming-graph density checkpoint
    FranekRodl,
}

enum AppError {
    Usage(String),
    Domain(String),
}

impl AppError {
    fn domain(e: impl std::fmt::Display) -> AppError {
        AppError::Domain(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Domain(format!("{}: {e}", path.display())))
}

fn family_json(family: solve::Family) -> Json {
    Json::string(family.to_string())
}

fn report_json(report: &VerificationReport) -> Json {
    eprintln!(
        "[edl] suite {}: {} trials, {} violations in {:?}",
        report.suite, report.trials, report.violations, report.elapsed
    );
    Json::Object(vec![
        ("suite", Json::string(report.suite.clone())),
        ("trials", Json::Int(report.trials as i128)),
        ("violations", Json::Int(report.violations as i128)),
        (
            "witnesses",
            Json::Array(report.witnesses.iter().map(Json::string).collect()),
        ),
        ("pass", Json::Bool(report.passed())),
    ])
}

fn report_csv_row(report: &VerificationReport) -> String {
    eprintln!(
        "[edl] suite {}: {} trials, {} violations in {:?}",
        report.suite, report.trials, report.violations, report.elapsed
    );
    format!(
        "{},{},{},{}",
        report.suite,
        report.trials,
        report.violations,
        report.passed()
    )
}

fn run_suites(
    suite: SuiteArg,
    max_n: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<VerificationReport>, AppError> {
    let one = |r: Result<VerificationReport, verify::VerifyError>| {
        r.map(|rep| vec![rep]).map_err(AppError::domain)
    };
    match suite {
        SuiteArg::Shift => one(verify::fuzz_shift_monotonicity(trials, max_n, seed)),
        SuiteArg::Threshold => one(verify::threshold_equivalence(max_n)),
        SuiteArg::Maxmin => one(verify::maxmin_trend(3, max_n.min(7).max(5))),
        SuiteArg::Conditional => one(verify::conditional_sweep(max_n.min(6), 3, 3)),
        SuiteArg::Goodman => one(verify::goodman_trend(max_n.min(7).max(5))),
        SuiteArg::Copies => Ok(vec![verify::fuzz_copy_monotonicity(trials, seed)]),
        SuiteArg::All => {
            let mut reports = Vec::new();
            reports.extend(run_suites(SuiteArg::Shift, max_n.min(12), trials, seed)?);
            reports.extend(run_suites(SuiteArg::Threshold, max_n.min(6), trials, seed)?);
            reports.extend(run_suites(SuiteArg::Maxmin, max_n, trials, seed)?);
            reports.extend(run_suites(SuiteArg::Conditional, max_n, trials, seed)?);
            reports.extend(run_suites(SuiteArg::Goodman, max_n, trials, seed)?);
            reports.extend(run_suites(SuiteArg::Copies, max_n, trials, seed)?);
            Ok(reports)
        }
    }
}

/// Mass-based support class of the reduced profile: the two collapsed shapes
/// correspond to a clique and a complement of a clique.
fn support_label(profile: &Profile) -> &'static str {
    const MASS_TOL: f64 = 1e-4;
    let reduced = profile.reduce_nondegenerate();
    let x = reduced.x();
    let y = reduced.y();
    let total: f64 = x.iter().chain(y.iter()).sum();
    let outside_x1y1 = total - x[0] - y[0];
    if outside_x1y1 <= MASS_TOL {
        return "x1,y1";
    }
    let x2 = if x.len() > 1 { x[1] } else { 0.0 };
    let outside_y1x2 = total - y[0] - x2;
    if outside_y1x2 <= MASS_TOL {
        return "y1,x2";
    }
    "mixed"
}

fn run(command: Command) -> Result<String, AppError> {
    match command {
        Command::Bound { r, s, p } => {
            let point = solve::m_bound(r, s, p).map_err(AppError::domain)?;
            Ok(Json::document(vec![
                ("value", Json::Float(point.value)),
                ("family", family_json(point.family)),
                ("t", Json::Float(point.t)),
                ("q", Json::Float(point.root("q").expect("solver reports q"))),
            ])
            .render())
        }
        Command::Maxmin { r } => {
            let point = solve::rho_maxmin(r).map_err(AppError::domain)?;
            Ok(Json::document(vec![
                ("rho", Json::Float(point.root("rho").expect("solver reports rho"))),
                ("value", Json::Float(point.value)),
            ])
            .render())
        }
        Command::Curve { r, s, steps, format, model } => {
            let mut rows: Vec<(f64, String, f64, f64)> = solve::curve(r, s, steps)
                .map_err(AppError::domain)?
                .into_iter()
                .map(|row| (row.theta, row.family.to_string(), row.q_density, row.p_density))
                .collect();
            if let Some(path) = model {
                let text = read_file(&path)?;
                let m = formats::read_step_model(&text).map_err(AppError::domain)?;
                let (pa, _) = m.densities(r);
                let (_, pc) = m.densities(s);
                rows.push((m.x(), "model".to_string(), pa, pc));
            }
            match format {
                OutputFormat::Csv => {
                    let mut out = String::from("theta,family,q_density,p_density\n");
                    for (theta, family, q, p) in rows {
                        out.push_str(&format!(
                            "{},{family},{},{}\n",
                            formats::csv_f64(theta),
                            formats::csv_f64(q),
                            formats::csv_f64(p)
                        ));
                    }
                    Ok(out.trim_end().to_string())
                }
                OutputFormat::Json => {
                    let rows_json: Vec<Json> = rows
                        .into_iter()
                        .map(|(theta, family, q, p)| {
                            Json::Object(vec![
                                ("theta", Json::Float(theta)),
                                ("family", Json::string(family)),
                                ("q_density", Json::Float(q)),
                                ("p_density", Json::Float(p)),
                            ])
                        })
                        .collect();
                    Ok(Json::document(vec![
                        ("r", Json::Int(r as i128)),
                        ("s", Json::Int(s as i128)),
                        ("rows", Json::Array(rows_json)),
                    ])
                    .render())
                }
            }
        }
        Command::Optimize { a, b, r, s, k, starts, seed, init } => {
            let init_point = match init {
                Some(path) => {
                    let text = read_file(&path)?;
                    let profile = formats::read_profile(&text).map_err(AppError::domain)?;
                    if profile.k() != k {
                        return Err(AppError::Usage(format!(
                            "--init profile has k={}, expected k={k}",
                            profile.k()
                        )));
                    }
                    let mut w = profile.x().to_vec();
                    w.extend_from_slice(profile.y());
                    Some(w)
                }
                None => None,
            };
            use rayon::prelude::*;
            let mut best: Option<(usize, f64, Vec<f64>)> = init_point
                .map(|w| {
                    let (point, value) = optim::local_maximize(a, b, r, s, &w);
                    (0usize, value, point)
                });
            let random_results: Vec<(usize, f64, Vec<f64>)> = (0..starts)
                .into_par_iter()
                .map(|idx| {
                    let start = optim::random_start(k, seed, idx as u64);
                    let (point, value) = optim::local_maximize(a, b, r, s, &start);
                    (idx + 1, value, point)
                })
                .collect();
            for candidate in random_results {
                let better = match &best {
                    None => true,
                    Some((order, value, _)) => {
                        candidate.1 > *value || (candidate.1 == *value && candidate.0 < *order)
                    }
                };
                if better {
                    best = Some(candidate);
                }
            }
            let (_, value, w) = best.expect("at least one start");
            let (x, y) = w.split_at(k);
            let profile =
                Profile::new(x.to_vec(), y.to_vec()).expect("projected point is a profile");
            if r >= 3 && s >= 3 {
                let reference = solve::phi_max(a, b, r, s).map_err(AppError::domain)?;
                if value < reference.value - 1e-6 {
                    eprintln!(
                        "[edl] optimize diagnostic: best value {value:.12} is below the \
                         closed-form optimum {:.12}",
                        reference.value
                    );
                }
            }
            Ok(Json::document(vec![
                ("value", Json::Float(value)),
                ("profile", formats::profile_json(&profile)),
                ("support", Json::string(support_label(&profile))),
            ])
            .render())
        }
        Command::Shift { input, u, v, fixpoint, out } => {
            let text = read_file(&input)?;
            let system = formats::read_set_system(&text).map_err(AppError::domain)?;
            let result = if fixpoint {
                system.shift_to_fixpoint()
            } else {
                match (u, v) {
                    (Some(u), Some(v)) => system.shift(u, v).map_err(AppError::domain)?,
                    _ => {
                        return Err(AppError::Usage(
                            "shift needs either --fixpoint or both --u and --v".into(),
                        ))
                    }
                }
            };
            if let Some(path) = out {
                std::fs::write(&path, formats::write_set_system(&result))
                    .map_err(|e| AppError::Domain(format!("{}: {e}", path.display())))?;
            }
            let members: Vec<Json> = result
                .members_as_vecs()
                .into_iter()
                .map(|m| Json::Array(m.into_iter().map(|e| Json::Int(e as i128)).collect()))
                .collect();
            Ok(Json::document(vec![
                ("ground_n", Json::Int(result.ground_n() as i128)),
                ("size", Json::Int(result.len() as i128)),
                ("members", Json::Array(members)),
                ("is_shifted", Json::Bool(result.is_shifted())),
                ("potential", Json::Int(result.potential() as i128)),
            ])
            .render())
        }
        Command::Threshold { input } => {
            let text = read_file(&input)?;
            let graph = formats::read_graph(&text).map_err(AppError::domain)?;
            let doc = match edl_core::is_threshold(&graph) {
                ThresholdCheck::Threshold { order } => Json::document(vec![
                    ("threshold", Json::Bool(true)),
                    (
                        "order",
                        Json::Array(order.into_iter().map(|v| Json::Int(v as i128)).collect()),
                    ),
                ]),
                ThresholdCheck::NotThreshold { stuck } => Json::document(vec![
                    ("threshold", Json::Bool(false)),
                    (
                        "stuck",
                        Json::Array(stuck.into_iter().map(|v| Json::Int(v as i128)).collect()),
                    ),
                ]),
            };
            Ok(doc.render())
        }
        Command::Verify { suite, max_n, trials, seed, format } => {
            let reports = run_suites(suite, max_n, trials, seed)?;
            match format {
                OutputFormat::Csv => {
                    let mut out = String::from("suite,trials,violations,pass\n");
                    for report in &reports {
                        out.push_str(&report_csv_row(report));
                        out.push('\n');
                    }
                    Ok(out.trim_end().to_string())
                }
                OutputFormat::Json => {
                    if reports.len() == 1 {
                        let body = report_json(&reports[0]);
                        match body {
                            Json::Object(fields) => Ok(Json::document(fields).render()),
                            _ => unreachable!("report_json builds an object"),
                        }
                    } else {
                        Ok(Json::document(vec![(
                            "reports",
                            Json::Array(reports.iter().map(report_json).collect()),
                        )])
                        .render())
                    }
                }
            }
        }
        Command::FranekRodl => {
            let report = verify::franek_rodl_check();
            eprintln!(
                "[edl] franek-rodl: degree {}, subsample ratio {:.4}, elapsed {:?}",
                report.degree, report.subsample_ratio, report.elapsed
            );
            Ok(Json::document(vec![
                ("d4", Json::Float(report.d4)),
                ("dbar4", Json::Float(report.dbar4)),
                ("d4_bound", Json::Float(report.d4_bound)),
                ("dbar4_bound", Json::Float(report.dbar4_bound)),
                ("c1", Json::Int(report.c[0] as i128)),
                ("c2", Json::Int(report.c[1] as i128)),
                ("c3", Json::Int(report.c[2] as i128)),
                ("c4", Json::Int(report.c[3] as i128)),
                ("i4", Json::Int(report.i4 as i128)),
                ("pass", Json::Bool(report.pass)),
            ])
            .render())
        }
    }
}

fn configure_threads(flag: Option<usize>) {
    let from_env = std::env::var("EDL_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    if let Some(threads) = flag.or(from_env) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("[edl] thread pool setup failed: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match run(cli.command) {
        Ok(document) => {
            println!("{document}");
            ExitCode::SUCCESS
        }
        Err(AppError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
        Err(AppError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

//! Command-line front end: evaluate distributions, run order checks, execute
//! theorem scenarios and counterexample scans from config files, and emit
//! machine-readable results and plot data.
//!
//! Exit codes: 0 when every assertion holds, 1 when an order or scenario is
//! violated, 2 on usage/validation errors. Scans always exit 0 (finding
//! violations is their job). CSV output uses a header row, comma separators,
//! LF line endings, and 17-significant-digit scientific floats.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stochord::config::{parse_config, run_scans, run_verify, RunConfig};
use stochord::dist::hazard_shape_of;
use stochord::orders::{check_order, lorenz_curve, merged_x_grid, OrderName};
use stochord::verify::{counterexample_scan, ScanMode, ScanSettings, TheoremId};
use stochord::ProbGrid;

mod dspec;
use dspec::parse_dist;

#[derive(Parser)]
#[command(
    name = "stochord",
    version,
    about = "Lifetime distributions, stochastic orders, and ordering-theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    grid: GridOpts,
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized commands (overrides config seeds).
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Args)]
struct GridOpts {
    /// Number of probability grid points.
    #[arg(long, global = true, default_value_t = 512)]
    grid_points: usize,
    /// Left end of the probability grid.
    #[arg(long, global = true, default_value_t = 1e-4)]
    u_min: f64,
    /// Right end of the probability grid.
    #[arg(long, global = true, default_value_t = 1.0 - 1e-4)]
    u_max: f64,
}

impl GridOpts {
    fn build(&self) -> Result<ProbGrid, String> {
        ProbGrid::new(self.grid_points, self.u_min, self.u_max).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a distribution: cdf, pdf, quantile, hazard, or hazard shape.
    Eval {
        /// Distribution spec, e.g. enh:2,1,1 or max:enh:1,1,1|enh:2,1,1.
        #[arg(long)]
        dist: String,
        #[arg(long, value_enum)]
        what: EvalWhat,
        /// Comma-separated evaluation points (x values, or u levels for
        /// quantile). Ignored for shape.
        #[arg(long, default_value = "")]
        points: String,
    },
    /// Check one stochastic order between two distributions.
    CheckOrder {
        /// st | hr | lr | disp | rs | convex-transform | lorenz.
        #[arg(long)]
        order: String,
        #[arg(long)]
        dist_f: String,
        #[arg(long)]
        dist_g: String,
    },
    /// Run the theorem scenarios listed in a config file; one JSON report per
    /// line.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run counterexample scans, from a config file or from flags.
    Scan {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Theorem to scan (flag mode), e.g. T3_5.
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: u32,
        #[arg(long, value_enum, default_value_t = ScanModeArg::Free)]
        mode: ScanModeArg,
        /// Fixed sample size (flag mode); omitted means n in {2,...,5}.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Emit long-format CSV curve data for external plotting.
    Plotdata {
        #[arg(long, value_enum)]
        kind: PlotKind,
        /// Distribution specs; repeat the flag for multiple series.
        #[arg(long = "dist", required = true)]
        dists: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalWhat {
    Cdf,
    Pdf,
    Quantile,
    Hazard,
    Shape,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanModeArg {
    Free,
    WithinHypotheses,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    HazardCurves,
    OrderingCurves,
    LorenzCurves,
}

/// 17 significant digits: enough to reproduce any f64 exactly.
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Eval { dist, what, points } => cmd_eval(&cli, dist, *what, points),
        Command::CheckOrder {
            order,
            dist_f,
            dist_g,
        } => cmd_check_order(&cli, order, dist_f, dist_g),
        Command::Verify { config } => cmd_verify(&cli, config),
        Command::Scan {
            config,
            theorem,
            samples,
            mode,
            n,
        } => cmd_scan(
            &cli,
            config.as_ref(),
            theorem.as_deref(),
            *samples,
            *mode,
            *n,
        ),
        Command::Plotdata { kind, dists } => cmd_plotdata(&cli, *kind, dists),
    }
}

fn parse_points(points: &str) -> Result<Vec<f64>, String> {
    if points.trim().is_empty() {
        return Err("--points is required for this evaluation".into());
    }
    points
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("point `{t}` is not a number"))
        })
        .collect()
}

fn cmd_eval(cli: &Cli, dist: &str, what: EvalWhat, points: &str) -> Result<ExitCode, String> {
    let d = parse_dist(dist)?;
    if matches!(what, EvalWhat::Shape) {
        let grid = cli.grid.build()?;
        let shape = hazard_shape_of(d.as_ref(), &grid).map_err(|e| e.to_string())?;
        let content = match cli.format {
            Format::Json => format!("{{\"dist\":{dist:?},\"shape\":\"{shape}\"}}\n"),
            Format::Csv => format!("dist,shape\n{dist},{shape}\n"),
        };
        emit(&cli.out, &content)?;
        return Ok(ExitCode::SUCCESS);
    }
    let xs = parse_points(points)?;
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let value = match what {
            EvalWhat::Cdf => {
                require_nonneg(x)?;
                d.cdf(x)
            }
            EvalWhat::Pdf => {
                require_nonneg(x)?;
                d.pdf(x)
            }
            EvalWhat::Quantile => {
                if !(x > 0.0 && x < 1.0) {
                    return Err(format!("u must lie in (0,1) (got {x})"));
                }
                d.quantile(x)
            }
            EvalWhat::Hazard => {
                require_nonneg(x)?;
                d.hazard(x)
            }
            EvalWhat::Shape => unreachable!(),
        };
        rows.push((x, value));
    }
    let content = match cli.format {
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|(x, v)| format!("{{\"point\":{x},\"value\":{v}}}"))
                .collect();
            format!("[{}]\n", items.join(","))
        }
        Format::Csv => {
            let mut s = String::from("point,value\n");
            for (x, v) in rows {
                let _ = writeln!(s, "{},{}", fmt_f64(x), fmt_f64(v));
            }
            s
        }
    };
    emit(&cli.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn require_nonneg(x: f64) -> Result<(), String> {
    if x < 0.0 || !x.is_finite() {
        return Err(format!("x must be nonnegative (got {x})"));
    }
    Ok(())
}

fn cmd_check_order(cli: &Cli, order: &str, dist_f: &str, dist_g: &str) -> Result<ExitCode, String> {
    let order = OrderName::from_str(order).map_err(|e| e.to_string())?;
    let f = parse_dist(dist_f)?;
    let g = parse_dist(dist_g)?;
    let grid = cli.grid.build()?;
    let v = check_order(order, f.as_ref(), g.as_ref(), &grid).map_err(|e| e.to_string())?;
    let content = match cli.format {
        Format::Json => {
            let mut obj = serde_json::to_value(v).map_err(|e| e.to_string())?;
            obj["grid"] = serde_json::json!({
                "points": cli.grid.grid_points,
                "u_min": cli.grid.u_min,
                "u_max": cli.grid.u_max,
            });
            format!("{obj}\n")
        }
        Format::Csv => format!(
            "order,holds,worst_margin,witness,skipped\n{},{},{},{},{}\n",
            v.order,
            v.holds,
            fmt_f64(v.worst_margin),
            fmt_f64(v.witness),
            v.skipped
        ),
    };
    emit(&cli.out, &content)?;
    Ok(if v.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn load_config(cli: &Cli, path: &PathBuf) -> Result<RunConfig, String> {
    let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut cfg = parse_config(&raw).map_err(|e| e.to_string())?;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
        for sc in &mut cfg.scenarios {
            sc.seed = None;
        }
        for sc in &mut cfg.scans {
            sc.seed = None;
        }
    }
    Ok(cfg)
}

fn cmd_verify(cli: &Cli, config: &PathBuf) -> Result<ExitCode, String> {
    let cfg = load_config(cli, config)?;
    let (reports, all_passed) = run_verify(&cfg).map_err(|e| e.to_string())?;
    let mut content = String::new();
    for r in &reports {
        let _ = writeln!(
            content,
            "{}",
            serde_json::to_string(r).map_err(|e| e.to_string())?
        );
    }
    emit(&cli.out, &content)?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_scan(
    cli: &Cli,
    config: Option<&PathBuf>,
    theorem: Option<&str>,
    samples: u32,
    mode: ScanModeArg,
    n: Option<usize>,
) -> Result<ExitCode, String> {
    let reports = match (config, theorem) {
        (Some(path), None) => {
            let cfg = load_config(cli, path)?;
            run_scans(&cfg).map_err(|e| e.to_string())?
        }
        (None, Some(theorem)) => {
            let theorem_id = TheoremId::from_str(theorem).map_err(|e| e.to_string())?;
            let grid = cli.grid.build()?;
            let settings = ScanSettings {
                theorem_id,
                samples,
                seed: cli.seed.unwrap_or(stochord::config::DEFAULT_SEED),
                mode: match mode {
                    ScanModeArg::Free => ScanMode::Free,
                    ScanModeArg::WithinHypotheses => ScanMode::WithinHypotheses,
                },
                n,
                ranges: None,
            };
            vec![counterexample_scan(&settings, &grid).map_err(|e| e.to_string())?]
        }
        _ => return Err("scan needs exactly one of --config or --theorem".into()),
    };
    let mut content = String::new();
    for r in &reports {
        let _ = writeln!(
            content,
            "{}",
            serde_json::to_string(r).map_err(|e| e.to_string())?
        );
    }
    emit(&cli.out, &content)?;
    // Scans report what they find; they never fail the run.
    Ok(ExitCode::SUCCESS)
}

fn cmd_plotdata(cli: &Cli, kind: PlotKind, dists: &[String]) -> Result<ExitCode, String> {
    let grid = cli.grid.build()?;
    let mut content = String::from("series,x_or_u,value\n");
    match kind {
        PlotKind::HazardCurves => {
            for spec in dists {
                let d = parse_dist(spec)?;
                for &u in grid.points() {
                    let x = d.quantile(u);
                    let _ = writeln!(content, "{spec},{},{}", fmt_f64(x), fmt_f64(d.hazard(x)));
                }
            }
        }
        PlotKind::OrderingCurves => {
            if dists.len() != 2 {
                return Err("ordering-curves needs exactly two --dist specs".into());
            }
            let f = parse_dist(&dists[0])?;
            let g = parse_dist(&dists[1])?;
            let xs = merged_x_grid(f.as_ref(), g.as_ref(), &grid);
            for (d, spec) in [(&f, &dists[0]), (&g, &dists[1])] {
                for &x in &xs {
                    let _ = writeln!(content, "sf:{spec},{},{}", fmt_f64(x), fmt_f64(d.sf(x)));
                }
            }
        }
        PlotKind::LorenzCurves => {
            for spec in dists {
                let d = parse_dist(spec)?;
                let curve = lorenz_curve(d.as_ref(), &grid).map_err(|e| e.to_string())?;
                for (&u, &l) in grid.points().iter().zip(curve.iter()) {
                    let _ = writeln!(content, "{spec},{},{}", fmt_f64(u), fmt_f64(l));
                }
            }
        }
    }
    emit(&cli.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

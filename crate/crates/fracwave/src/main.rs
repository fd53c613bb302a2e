use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fracwave::config::RunConfig;
use fracwave::extension::{dtn_spacetime, energy_check, LaplaceLine};
use fracwave::geometry::{global_ads_table, product_dtn_coeffs, EigenBasis};
use fracwave::grid::ScalarField;
use fracwave::hypersingular::{box_alpha_integral, box_alpha_kernel2, NullKernelSpec, QuadratureSpec};
use fracwave::io::{read_field, read_modes, write_field, write_modes};
use fracwave::report::{load_reports, rollup, CheckRecord, ValidationReport};
use fracwave::solver::dtn_time_domain;
use fracwave::symbol::apply_box_alpha_spectral;
use fracwave::validate::{run_suite, specfun_selftest};
use fracwave::{Error, FractionalOrder};
use fracwave_core::ads::GlobalAdsMode;
use fracwave_core::extension::{neumann_extract_profile, profile_eval, ExtensionProfile, LadderSpec};
use fracwave_core::qcalc::{default_l, QScheme};
use fracwave_core::Complex64;

#[derive(Parser)]
#[command(
    name = "fracwave",
    version,
    about = "Fractional powers of the wave operator on gridded data"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyRoute {
    Spectral,
    Integral,
    Kernel2,
}

#[derive(Clone, Copy, ValueEnum)]
enum DtnMethod {
    ClosedForm,
    TimeDomain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ManifoldArg {
    Circle,
    Sphere,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply □^α to a field (spectral) or at probe points (integral, kernel2)
    Apply {
        #[arg(long, value_enum, default_value = "spectral")]
        route: ApplyRoute,
        #[arg(long)]
        alpha: f64,
        #[arg(long = "in")]
        input: PathBuf,
        /// output field (spectral) or probe table (integral routes)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long)]
        l: Option<u32>,
        /// probe CSV with header `t,x1[,x2]`
        #[arg(long)]
        points: Option<PathBuf>,
        /// compare the output with this field file; with --bless, overwrite it
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long)]
        bless: bool,
    },
    /// Dirichlet-to-Neumann map of the extension problem
    Dtn {
        #[arg(long, value_enum, default_value = "closed-form")]
        method: DtnMethod,
        #[arg(long)]
        alpha: f64,
        /// Bromwich abscissa (closed form); defaults to 4/T
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Closed-form extension profile of one Laplace–Fourier mode and its Neumann data
    Extend {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.1)]
        s_re: f64,
        #[arg(long, default_value_t = 2.0)]
        s_im: f64,
        #[arg(long, default_value_t = 1.0)]
        xi: f64,
        #[arg(long, value_delimiter = ',', default_value = "0.001,0.01,0.1,1,5,10")]
        y: Vec<f64>,
    },
    /// Energy identity: bulk energy, symbol form and their ratio as CSV
    Energy {
        #[arg(long)]
        alpha: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "0.04,0.02,0.01")]
        eps: Vec<f64>,
    },
    Geometry {
        #[command(subcommand)]
        which: GeometryCmd,
    },
    /// Run the acceptance suite described by a config
    Validate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Merge reports and recompute the rollup
    Report {
        paths: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(hide = true)]
    SpecfunSelftest,
}

#[derive(Subcommand)]
enum GeometryCmd {
    /// Mode-wise DtN on ℝ × M from a `mode,lambda,t,re,im` table
    Product {
        #[arg(long, value_enum, default_value = "circle")]
        manifold: ManifoldArg,
        #[arg(long)]
        alpha: f64,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// sphere parameter n (harmonics λ² = j(j+n−3))
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long)]
        eps: Option<f64>,
    },
    /// Global-AdS multiplier along s = ε + iτ as CSV
    GlobalAds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long, value_delimiter = ',', default_value = "8,16,32,64,128")]
        tau_ladder: Vec<f64>,
        #[arg(long, default_value_t = 0.01)]
        eps: f64,
    },
}

/// Usage and input problems exit 1; failed checks exit 2.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<fracwave_core::MathError> for Failure {
    fn from(e: fracwave_core::MathError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read_points(path: &Path, rank: usize) -> Result<Vec<Vec<f64>>, Error> {
    let mut rd = csv::Reader::from_path(path)?;
    let mut pts = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let p = rec
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Format(format!("not a number: {s}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if p.len() != rank {
            return Err(Error::Shape(format!(
                "probe has {} coordinates, expected {rank}",
                p.len()
            )));
        }
        pts.push(p);
    }
    Ok(pts)
}

fn write_probe_table(path: Option<&Path>, pts: &[Vec<f64>], rows: &[(f64, f64)]) -> Result<(), Error> {
    let mut buf = Vec::new();
    {
        let mut wr = csv::Writer::from_writer(&mut buf);
        let mut header: Vec<String> = vec!["t".into()];
        header.extend((1..pts.first().map_or(1, |p| p.len())).map(|a| format!("x{a}")));
        header.extend(["value".into(), "indicator".into()]);
        wr.write_record(&header)?;
        for (p, (v, ind)) in pts.iter().zip(rows) {
            let mut rec: Vec<String> = p.iter().map(|c| format!("{c:?}")).collect();
            rec.push(format!("{v:?}"));
            rec.push(format!("{ind:e}"));
            wr.write_record(&rec)?;
        }
        wr.flush()?;
    }
    match path {
        Some(p) => std::fs::write(p, buf)?,
        None => print!("{}", String::from_utf8_lossy(&buf)),
    }
    Ok(())
}

fn compare_golden(out: &ScalarField, golden: &Path, bless: bool) -> Outcome {
    if bless {
        write_field(out, golden)?;
        eprintln!("blessed {}", golden.display());
        return Ok(());
    }
    let g = read_field(golden)?;
    if g.grid.dims() != out.grid.dims() {
        return Err(Failure::Check("golden file has a different shape".into()));
    }
    let scale = g.max_abs().max(f64::MIN_POSITIVE);
    let diff = out
        .values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
        / scale;
    if diff > 1e-12 {
        return Err(Failure::Check(format!("output differs from golden by {diff:e}")));
    }
    eprintln!("golden match ({diff:.1e})");
    Ok(())
}

fn cmd_apply(
    route: ApplyRoute,
    alpha: f64,
    input: &Path,
    out: Option<&Path>,
    q: f64,
    l: Option<u32>,
    points: Option<&Path>,
    golden: Option<&Path>,
    bless: bool,
) -> Outcome {
    let order = FractionalOrder::new(alpha)?;
    let f = read_field(input)?;
    match route {
        ApplyRoute::Spectral => {
            let g = apply_box_alpha_spectral(&f, &order)?;
            if let Some(o) = out {
                write_field(&g, o)?;
            }
            if let Some(gp) = golden {
                compare_golden(&g, gp, bless)?;
            }
            Ok(())
        }
        ApplyRoute::Integral | ApplyRoute::Kernel2 => {
            let pts = match points {
                Some(p) => read_points(p, f.grid.nx.len() + 1)?,
                None => return Err(Failure::Usage("--points is required for the integral routes".into())),
            };
            let rows: Vec<(f64, f64)> = if matches!(route, ApplyRoute::Integral) {
                let scheme = QScheme::new(&order, f.grid.n(), q, l.unwrap_or(default_l(alpha)))?;
                let vals = box_alpha_integral(&f, &order, &scheme, &QuadratureSpec::default(), &pts)?;
                let flagged = vals.iter().filter(|v| !v.converged).count();
                if flagged > 0 {
                    eprintln!("warning: {flagged} probe values exceed the quadrature indicator tolerance");
                }
                vals.iter().map(|v| (v.value, v.indicator)).collect()
            } else {
                box_alpha_kernel2(&f, &order, &NullKernelSpec::default(), &pts)?
                    .into_iter()
                    .map(|v| (v, f64::NAN))
                    .collect()
            };
            write_probe_table(out, &pts, &rows)?;
            Ok(())
        }
    }
}

fn cmd_validate(config: &Path, report: Option<&Path>) -> Outcome {
    let cfg = RunConfig::load(config)?;
    cfg.require_comparison()?;
    let records = run_suite(&cfg.tolerances, &cfg.checks);
    let mut rep = ValidationReport::new(records);
    rep.config = Some(serde_json::to_value(&cfg).map_err(Error::from)?);
    print_records(&rep.records);
    if let Some(p) = report.or(cfg.report.as_deref()) {
        rep.save(p)?;
    }
    if rep.pass {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} of {} checks failed",
            rep.failed,
            rep.records.len()
        )))
    }
}

fn print_records(records: &[CheckRecord]) {
    for r in records {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{:>2} {:<24} {verdict} error={:.3e} tol={:.1e} {}",
            r.id, r.name, r.error, r.tolerance, r.detail
        );
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Apply {
            route,
            alpha,
            input,
            out,
            q,
            l,
            points,
            golden,
            bless,
        } => cmd_apply(
            route,
            alpha,
            &input,
            out.as_deref(),
            q,
            l,
            points.as_deref(),
            golden.as_deref(),
            bless,
        ),
        Cmd::Dtn {
            method,
            alpha,
            eps,
            input,
            out,
        } => {
            let order = FractionalOrder::new(alpha)?;
            let f = read_field(&input)?;
            let g = match method {
                DtnMethod::ClosedForm => {
                    let e = eps.unwrap_or_else(|| LaplaceLine::default_eps(&f.grid));
                    dtn_spacetime(&f, &order, e)?
                }
                DtnMethod::TimeDomain => dtn_time_domain(&f, &order)?,
            };
            write_field(&g, &out)?;
            Ok(())
        }
        Cmd::Extend {
            alpha,
            s_re,
            s_im,
            xi,
            y,
        } => {
            let order = FractionalOrder::new(alpha)?;
            let s = Complex64::new(s_re, s_im);
            let one = Complex64::new(1.0, 0.0);
            println!("y,re,im");
            for yy in y {
                let u = profile_eval(&order, s, xi, one, yy)?;
                println!("{yy:?},{:?},{:?}", u.re, u.im);
            }
            let p = ExtensionProfile::on_ladder(&order, s, xi, one, &LadderSpec::for_order(&order))?;
            let v = neumann_extract_profile(&p)?;
            let m = fracwave_core::symbol::dtn_multiplier(&order, s, xi);
            eprintln!(
                "neumann {v} multiplier {m} relative difference {:.2e}",
                (v - m).norm() / m.norm()
            );
            Ok(())
        }
        Cmd::Energy { alpha, input, eps } => {
            let order = FractionalOrder::new(alpha)?;
            let f = read_field(&input)?;
            let e = energy_check(&f, &order, &eps)?;
            println!("lhs,rhs_re,rhs_im,ratio");
            println!("{:?},{:?},{:?},{:?}", e.lhs, e.rhs.re, e.rhs.im, e.ratio);
            Ok(())
        }
        Cmd::Geometry { which } => {
            match which {
                GeometryCmd::Product {
                    manifold,
                    alpha,
                    input,
                    out,
                    n,
                    eps,
                } => {
                    let order = FractionalOrder::new(alpha)?;
                    let (mut modes, dt) = read_modes(std::fs::File::open(&input).map_err(Error::from)?)?;
                    if let ManifoldArg::Sphere = manifold {
                        let count = modes.iter().map(|m| m.mode).max().unwrap_or(0).max(0) as usize + 1;
                        let basis = EigenBasis::sphere(n, count)?;
                        for m in &mut modes {
                            if m.mode < 0 {
                                return Err(Failure::Usage("sphere modes are indexed from 0".into()));
                            }
                            m.lambda = basis.lambda(m.mode as usize);
                        }
                    }
                    let res = product_dtn_coeffs(&modes, &order, dt, eps)?;
                    match out {
                        Some(p) => write_modes(&res, dt, 0.0, std::fs::File::create(p).map_err(Error::from)?)?,
                        None => write_modes(&res, dt, 0.0, std::io::stdout())?,
                    }
                    Ok(())
                }
                GeometryCmd::GlobalAds {
                    n,
                    alpha,
                    lambda,
                    tau_ladder,
                    eps,
                } => {
                    let mode = GlobalAdsMode::new(n, FractionalOrder::new(alpha)?, lambda)?;
                    let rows = global_ads_table(&mode, eps, &tau_ladder)?;
                    println!("s_re,s_im,multiplier_re,multiplier_im,printed_re,printed_im,sigma_re,sigma_im,ratio_re,ratio_im");
                    for r in rows {
                        println!(
                            "{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?}",
                            r.s.re,
                            r.s.im,
                            r.multiplier.re,
                            r.multiplier.im,
                            r.printed.re,
                            r.printed.im,
                            r.sigma.re,
                            r.sigma.im,
                            r.ratio.re,
                            r.ratio.im
                        );
                    }
                    Ok(())
                }
            }
        }
        Cmd::Validate { config, report } => cmd_validate(&config, report.as_deref()),
        Cmd::Report { paths, out } => {
            let reports = load_reports(&paths)?;
            let merged = rollup(&reports)?;
            match out {
                Some(p) => merged.save(&p)?,
                None => println!("{}", merged.to_json()),
            }
            if merged.pass {
                Ok(())
            } else {
                Err(Failure::Check(format!("{} checks failed", merged.failed)))
            }
        }
        Cmd::SpecfunSelftest => {
            let results = specfun_selftest();
            for (name, err, pass) in &results {
                println!("{} {name}: {err:.2e}", if *pass { "PASS" } else { "FAIL" });
            }
            if results.iter().all(|r| r.2) {
                Ok(())
            } else {
                Err(Failure::Check("special-function identities failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("FRACWAVE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(2)
        }
    }
}

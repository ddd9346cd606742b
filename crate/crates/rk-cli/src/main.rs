//! `rk` — command-line front end for the resolvent-condition toolkit.
//!
//! Commands: `classify`, `region`, `verify`, `powers`, `interp`, `figures`.
//! Exit codes: 0 success (including warnings), 2 usage or parse errors,
//! 3 spectral collision on an evaluation grid, 4 overflow guard.

mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use rk_core::contour::{self, ContourSpec, Series};
use rk_core::error::CoreError;
use rk_core::growth::{self, GrowthRegime};
use rk_core::linalg::{self, mat_power, ComplexMatrix};
use rk_core::regions::{self, RegionDescriptor};
use rk_core::rk::{self, LambdaGrid, RKParams};
use rk_core::zoo;

use config::Config;

#[derive(Parser)]
#[command(name = "rk", version, about = "Resolvent-condition toolkit", max_term_width = 100)]
struct Cli {
    /// Optional key=value config file; flags override config entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for any randomized sampling (reports embed it).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output path; stdout when omitted.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the power and difference growth regimes of a parameter pair.
    Classify(ClassifyArgs),
    /// Emit the spectral-localization region boundary as CSV or SVG.
    Region(RegionArgs),
    /// Verify a matrix against the condition and its region prediction.
    Verify(VerifyArgs),
    /// Measure norm sequences, fit regimes, and cross-check with contours.
    Powers(PowersArgs),
    /// Interpolate a Kreiss-type and a Ritt-type bound across l^p spaces.
    Interp(InterpArgs),
    /// Reproduce the three reference region figures.
    Figures(FiguresArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Optional constant; adds the localization region to the report.
    #[arg(long)]
    c: Option<f64>,
}

#[derive(Args)]
struct RegionArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    c: f64,
    /// Boundary sample count (>= 16).
    #[arg(long)]
    points: Option<usize>,
    /// `csv` or `svg`.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args, Clone)]
struct MatrixSource {
    /// Matrix file: { "dim": d, "entries": [[re, im], ...] } row-major.
    #[arg(long, conflicts_with = "preset")]
    matrix: Option<PathBuf>,
    /// Built-in operator: diag | stolz | jordan | cesaro-witness.
    #[arg(long)]
    preset: Option<String>,
    /// Preset dimension (diag eigenvalue count, Stolz point count, Jordan size).
    #[arg(long)]
    preset_dim: Option<usize>,
    /// Preset modulus: eigenvalue radius for diag, eigenvalue for jordan.
    #[arg(long)]
    preset_rho: Option<f64>,
    /// Stolz ratio for the stolz preset.
    #[arg(long)]
    preset_sigma: Option<f64>,
}

impl MatrixSource {
    fn load(&self) -> Result<ComplexMatrix, CliError> {
        match (&self.matrix, &self.preset) {
            (Some(path), None) => read_matrix(path),
            (None, Some(name)) => {
                let dim = self.preset_dim.unwrap_or(match name.as_str() {
                    "jordan" => 2,
                    "cesaro-witness" => 2,
                    _ => 20,
                });
                let rho = self.preset_rho.unwrap_or(match name.as_str() {
                    "jordan" => 1.0,
                    _ => 0.9,
                });
                let sigma = self.preset_sigma.unwrap_or(2.0);
                let m = match name.as_str() {
                    // Eigenvalues spread evenly on the circle of radius rho.
                    "diag" => {
                        let spectrum: Vec<Complex64> = (0..dim)
                            .map(|j| {
                                Complex64::from_polar(
                                    rho,
                                    std::f64::consts::TAU * j as f64 / dim as f64,
                                )
                            })
                            .collect();
                        zoo::diag_from_spectrum(&spectrum)?
                    }
                    "stolz" => {
                        let spectrum = zoo::stolz_spectrum(sigma, 1.0, dim)?;
                        zoo::diag_from_spectrum(&spectrum)?
                    }
                    "jordan" => zoo::jordan(Complex64::new(rho, 0.0), dim)?,
                    // Alternating rotation: Cesàro means stay bounded while
                    // the operator sits on the unit circle.
                    "cesaro-witness" => zoo::diag_from_spectrum(&[
                        Complex64::new(-1.0, 0.0),
                        Complex64::new(1.0, 0.0),
                    ])?,
                    other => {
                        return Err(usage(format!(
                            "unknown preset {other:?} (diag|stolz|jordan|cesaro-witness)"
                        )))
                    }
                };
                Ok(m)
            }
            _ => Err(usage("pass exactly one of --matrix or --preset")),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: MatrixSource,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    /// Declared spectrum (JSON [[re,im],...]) for non-triangular input.
    #[arg(long)]
    spectrum: Option<PathBuf>,
    #[arg(long)]
    grid_radii: Option<usize>,
    #[arg(long)]
    grid_angles: Option<usize>,
    /// Smallest grid offset r - 1.
    #[arg(long)]
    grid_rmin: Option<f64>,
    /// Largest grid offset r - 1.
    #[arg(long)]
    grid_rmax: Option<f64>,
    /// Safety factor applied to the measured constant before region checks.
    #[arg(long)]
    safety: Option<f64>,
    /// Region inflation tolerance for the inclusion verdict.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct PowersArgs {
    #[command(flatten)]
    source: MatrixSource,
    #[arg(long)]
    n_max: u64,
    /// Integration-by-parts order for the contour cross-check.
    #[arg(long)]
    k: Option<u32>,
    /// Optional declared parameters for a comparison verdict.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Optional CSV destination for the raw norm sequence.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct InterpArgs {
    #[arg(long)]
    c0: f64,
    #[arg(long)]
    p0: f64,
    #[arg(long)]
    c1: f64,
    /// Use `inf` for the supremum norm endpoint.
    #[arg(long)]
    p1: f64,
    #[arg(long)]
    theta: f64,
}

#[derive(Args)]
struct FiguresArgs {
    /// Reference figure: 1, 2 or 3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    case: u8,
    #[arg(long)]
    points: Option<usize>,
}

// ---------------------------------------------------------------------------
// Errors and exit codes.

enum CliError {
    Usage(String),
    Io(String),
    Core(CoreError),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
            CliError::Core(CoreError::SingularResolvent { .. }) => 3,
            CliError::Core(CoreError::OverflowGuard { .. }) => 4,
            CliError::Core(CoreError::Parse(_)) | CliError::Core(CoreError::Domain(_)) => 2,
            CliError::Core(_) => 2,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn check_param_range(alpha: f64, beta: f64) -> Result<(), CliError> {
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if !(0.0..=8.0).contains(&v) || !v.is_finite() {
            return Err(usage(format!(
                "{name} = {v} is outside the studied range [0, 8]"
            )));
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Io(format!("serialization failed: {e}")))
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let config = Config::load(cli.config.as_deref()).map_err(usage)?;
    let seed = config.resolve(cli.seed, "seed", 0u64).map_err(usage)?;
    let output = cli.output.as_deref();
    match cli.command {
        Command::Classify(args) => cmd_classify(args, output),
        Command::Region(args) => cmd_region(args, &config, output),
        Command::Verify(args) => cmd_verify(args, &config, output),
        Command::Powers(args) => cmd_powers(args, &config, output, seed),
        Command::Interp(args) => cmd_interp(args, output),
        Command::Figures(args) => cmd_figures(args, &config, output),
    }
}

// ---------------------------------------------------------------------------
// Shared report pieces.

#[derive(Serialize)]
struct Provenance {
    case: String,
    notes: Vec<String>,
    ledger_flags: Vec<String>,
}

fn regime_ledger_flags(alpha: f64, diff: &GrowthRegime) -> Vec<String> {
    let mut flags = Vec::new();
    if diff.case == "diff-k" {
        if let Some(k) = diff.optimal_k {
            if alpha * (k as f64 + 1.0) > 2.0 {
                // This branch rests on the (r-1)^{-gamma+2} reading of the
                // J-integral bound; surfaced so reports carry the caveat.
                flags.push("j_integral_power_exponent_read_as_minus_gamma_plus_2".into());
            }
        }
    }
    flags
}

// ---------------------------------------------------------------------------
// classify

#[derive(Serialize)]
struct ClassifyReport {
    command: &'static str,
    alpha: f64,
    beta: f64,
    c: Option<f64>,
    power_regime: GrowthRegime,
    difference_regime: GrowthRegime,
    is_ritt: bool,
    power_bounded_pair: growth::PairWitness,
    region: Option<RegionDescriptor>,
    provenance: Provenance,
}

fn cmd_classify(args: ClassifyArgs, output: Option<&Path>) -> Result<u8, CliError> {
    check_param_range(args.alpha, args.beta)?;
    let power = growth::classify_powers(args.alpha, args.beta)?;
    let diff = growth::classify_differences(args.alpha, args.beta)?;
    let region = match args.c {
        Some(c) => Some(regions::region_for(&RKParams::new(args.alpha, args.beta, c)?)),
        None => None,
    };
    let ledger_flags = regime_ledger_flags(args.alpha, &diff);
    let report = ClassifyReport {
        command: "classify",
        alpha: args.alpha,
        beta: args.beta,
        c: args.c,
        is_ritt: growth::is_ritt(args.alpha, args.beta),
        power_bounded_pair: growth::no_power_bounded_pair_witness(args.alpha, args.beta),
        provenance: Provenance {
            case: power.case.clone(),
            notes: vec![format!(
                "power case {} with optimal k {:?}; difference selection {}",
                power.case, power.optimal_k, diff.case
            )],
            ledger_flags,
        },
        power_regime: power,
        difference_regime: diff,
        region,
    };
    write_output(output, &to_json(&report)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// region

fn cmd_region(args: RegionArgs, config: &Config, output: Option<&Path>) -> Result<u8, CliError> {
    check_param_range(args.alpha, args.beta)?;
    let points = config.resolve(args.points, "points", 512).map_err(usage)?;
    if points < 16 {
        return Err(usage(format!("points must be >= 16, got {points}")));
    }
    let format = config
        .resolve(args.format.clone(), "format", "csv".to_string())
        .map_err(usage)?;
    let params = RKParams::new(args.alpha, args.beta, args.c)?;
    let region = regions::region_for(&params);
    if args.beta >= 1.0 {
        eprintln!(
            "note: beta = {} >= 1 gives no localization beyond the closed unit disk",
            args.beta
        );
    }
    let content = match format.as_str() {
        "csv" => regions::boundary_csv(&region, points),
        "svg" => regions::region_svg(&region, points, generalized_stolz_border(&region)),
        other => return Err(usage(format!("unknown region format {other:?} (csv|svg)"))),
    };
    write_output(output, &content)?;
    Ok(0)
}

/// The generalized-Stolz case (exponent above 1) gets its border traced in
/// cyan, matching the reference figure for that regime.
fn generalized_stolz_border(region: &RegionDescriptor) -> bool {
    matches!(region.kind, rk_core::regions::RegionKind::StolzClosure { a, .. } if a > 1.0)
}

// ---------------------------------------------------------------------------
// verify

#[derive(Serialize)]
struct RefinementReport {
    c_hat_refined: f64,
    growth_factor: f64,
    diverging: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    alpha: f64,
    beta: f64,
    c_hat: f64,
    argmax_lambda: [f64; 2],
    safety: f64,
    c_used: f64,
    torus_constant: Option<f64>,
    kreiss_floor_ok: Option<bool>,
    region: RegionDescriptor,
    spectrum_source: String,
    spectrum_check: regions::SpectrumCheck,
    refinement: RefinementReport,
    provenance: Provenance,
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(linalg::matrix_from_json(&text)?)
}

fn read_spectrum(path: &Path) -> Result<Vec<Complex64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let pairs: Vec<[f64; 2]> = serde_json::from_str(&text)
        .map_err(|e| CliError::Core(CoreError::Parse(e.to_string())))?;
    Ok(pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
}

fn cmd_verify(args: VerifyArgs, config: &Config, output: Option<&Path>) -> Result<u8, CliError> {
    check_param_range(args.alpha, args.beta)?;
    let matrix = args.source.load()?;
    let n_radii = config.resolve(args.grid_radii, "grid-radii", rk::DEFAULT_RADII).map_err(usage)?;
    let n_angles =
        config.resolve(args.grid_angles, "grid-angles", rk::DEFAULT_ANGLES).map_err(usage)?;
    let rmin = config.resolve(args.grid_rmin, "grid-rmin", rk::DEFAULT_RMIN).map_err(usage)?;
    let rmax = config.resolve(args.grid_rmax, "grid-rmax", rk::DEFAULT_RMAX).map_err(usage)?;
    let safety = config.resolve(args.safety, "safety", 1.01).map_err(usage)?;
    let tol = config.resolve(args.tol, "tol", 1e-9).map_err(usage)?;

    let spectrum = match &args.spectrum {
        Some(path) => (read_spectrum(path)?, "declared".to_string()),
        None if matrix.is_triangular() => (matrix.diag(), "triangular-diagonal".to_string()),
        None => {
            return Err(usage(
                "matrix is not triangular: pass --spectrum with the declared eigenvalues",
            ))
        }
    };

    let grid = LambdaGrid::log_spaced(n_radii, n_angles, rmin, rmax)?;
    let (c_hat, argmax) = rk::estimate_min_c(&matrix, args.alpha, args.beta, &grid)?;

    // Divergence probe: a denser grid reaching two decades closer to the
    // unit circle, evaluated without the singularity guard. A measured
    // constant that keeps climbing flags "no finite C at this resolution".
    let probe_grid =
        LambdaGrid::log_spaced(2 * n_radii, 2 * n_angles, (rmin / 100.0).max(1e-12), rmax)?;
    let (c_refined, _) =
        rk::estimate_min_c_unguarded(&matrix, args.alpha, args.beta, &probe_grid)?;
    let growth_factor = if c_hat > 0.0 { c_refined / c_hat } else { f64::INFINITY };
    let diverging = growth_factor >= 10.0;

    let c_used = (safety * c_hat).max(1.0);
    let params = RKParams::new(args.alpha, args.beta, c_used)?;
    let torus = rk::torus_constant(&params).ok();
    let floor_ok = regions::kreiss_floor_ok(&params).ok();
    let region = regions::region_for(&params);
    let check = regions::check_spectrum(&spectrum.0, &region, tol);

    let mut notes = vec![format!(
        "c_hat is a grid lower bound; region built with c = max(1, {safety} * c_hat)"
    )];
    if diverging {
        notes.push(format!(
            "no finite C at tested resolution: refined grid grew the estimate by {growth_factor:.2}x"
        ));
    }
    let report = VerifyReport {
        command: "verify",
        alpha: args.alpha,
        beta: args.beta,
        c_hat,
        argmax_lambda: [argmax.re, argmax.im],
        safety,
        c_used,
        torus_constant: torus,
        kreiss_floor_ok: floor_ok,
        spectrum_source: spectrum.1,
        spectrum_check: check,
        refinement: RefinementReport { c_hat_refined: c_refined, growth_factor, diverging },
        provenance: Provenance {
            case: region.provenance.clone(),
            notes,
            ledger_flags: vec![],
        },
        region,
    };
    write_output(output, &to_json(&report)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// powers

#[derive(Serialize)]
struct ContourCrossCheck {
    n: u64,
    k: u32,
    rel_error: f64,
}

#[derive(Serialize)]
struct PowersReport {
    command: &'static str,
    n_max: u64,
    k: u32,
    seed: u64,
    fitted_power_slope: f64,
    fitted_diff_slope: f64,
    log_detected: bool,
    diff_log_detected: bool,
    gelfand_estimate: f64,
    fitted_regime: Option<GrowthRegime>,
    fitted_diff_regime: Option<GrowthRegime>,
    declared: Option<[f64; 2]>,
    classified: Option<GrowthRegime>,
    verdict: Option<String>,
    contour_cross_check: Vec<ContourCrossCheck>,
    overflow_at: Option<u64>,
    provenance: Provenance,
}

fn cmd_powers(
    args: PowersArgs,
    config: &Config,
    output: Option<&Path>,
    seed: u64,
) -> Result<u8, CliError> {
    let matrix = args.source.load()?;
    let k = config.resolve(args.k, "k", 1u32).map_err(usage)?;
    if args.n_max == 0 || args.n_max > 1_000_000 {
        return Err(usage(format!("n-max must lie in [1, 1e6], got {}", args.n_max)));
    }
    let declared = match (args.alpha, args.beta) {
        (Some(a), Some(b)) => {
            check_param_range(a, b)?;
            Some([a, b])
        }
        (None, None) => None,
        _ => return Err(usage("pass both --alpha and --beta or neither")),
    };

    let report = contour::norm_sequence(&matrix, args.n_max)?;
    if let Some(csv_path) = &args.csv {
        write_output(Some(csv_path), &report.to_csv())?;
    }

    // Contour cross-check at five sampled n, capped at 512 so the node
    // count stays at desk scale.
    let n_cap = args.n_max.min(512).max(1);
    let mut cross = Vec::new();
    for j in 0..5u32 {
        let n = ((n_cap as f64).powf((j as f64 + 1.0) / 5.0).round() as u64).clamp(1, n_cap);
        if cross.iter().any(|c: &ContourCrossCheck| c.n == n) {
            continue;
        }
        let spec = ContourSpec::for_power(n);
        let via = contour::power_via_contour(&matrix, n, k, &spec)?;
        let direct = mat_power(&matrix, n);
        let scale = direct.frobenius_norm().max(1e-300);
        cross.push(ContourCrossCheck {
            n,
            k,
            rel_error: via.sub(&direct).frobenius_norm() / scale,
        });
    }

    let fitted_regime = contour::fit_regime(&report, Series::Powers).ok();
    let fitted_diff_regime = contour::fit_regime(&report, Series::Differences).ok();
    let classified = match declared {
        Some([a, b]) => Some(growth::classify_powers(a, b)?),
        None => None,
    };
    let verdict = match (&fitted_regime, &classified) {
        (Some(fit), Some(cls)) => Some(compare_fit_to_class(fit, cls)),
        _ => None,
    };

    let overflowed = report.overflow_at;
    let out = PowersReport {
        command: "powers",
        n_max: args.n_max,
        k,
        seed,
        fitted_power_slope: report.fitted_power_slope,
        fitted_diff_slope: report.fitted_diff_slope,
        log_detected: report.log_detected,
        diff_log_detected: report.diff_log_detected,
        gelfand_estimate: report.gelfand_estimate,
        fitted_regime,
        fitted_diff_regime,
        declared,
        classified,
        verdict,
        contour_cross_check: cross,
        overflow_at: overflowed,
        provenance: Provenance {
            case: "empirical-fit".into(),
            notes: vec![
                "slopes fitted on the window n in [max(16, n_max/4), n_max]".into(),
                "contour cross-check n values capped at 512".into(),
            ],
            ledger_flags: vec![],
        },
    };
    write_output(output, &to_json(&out)?)?;
    if let Some(n) = overflowed {
        eprintln!("note: overflow guard tripped at n = {n}; partial output retained");
        return Ok(4);
    }
    Ok(0)
}

fn compare_fit_to_class(fit: &GrowthRegime, cls: &GrowthRegime) -> String {
    use rk_core::growth::RegimeKind;
    let consistent = match (fit.kind, cls.kind) {
        (RegimeKind::ExpDecay, RegimeKind::ExpDecay) => true,
        (RegimeKind::ExpDecay, _) => cls.exponent >= -0.05,
        (_, RegimeKind::ExpDecay) => fit.exponent <= 0.05,
        _ => (fit.exponent - cls.exponent).abs() <= 0.1,
    };
    if consistent {
        format!(
            "consistent: fitted slope {:.4} vs classified exponent {:.4} ({})",
            fit.exponent, cls.exponent, cls.case
        )
    } else {
        format!(
            "mismatch: fitted slope {:.4} vs classified exponent {:.4} ({}); the \
             classification is an upper bound, so a lower fit is expected for \
             non-extremal operators",
            fit.exponent, cls.exponent, cls.case
        )
    }
}

// ---------------------------------------------------------------------------
// interp

#[derive(Serialize)]
struct InterpReport {
    command: &'static str,
    c0: f64,
    p0: f64,
    c1: f64,
    p1: f64,
    theta: f64,
    p: f64,
    params: RKParams,
    is_ritt: bool,
    provenance: Provenance,
}

fn cmd_interp(args: InterpArgs, output: Option<&Path>) -> Result<u8, CliError> {
    let out = zoo::interpolate_rk(args.c0, args.p0, args.c1, args.p1, args.theta)?;
    let report = InterpReport {
        command: "interp",
        c0: args.c0,
        p0: args.p0,
        c1: args.c1,
        p1: args.p1,
        theta: args.theta,
        p: out.p,
        params: out.params,
        is_ritt: growth::is_ritt(out.params.alpha, out.params.beta),
        provenance: Provenance {
            case: "interpolation".into(),
            notes: vec![
                "constants combine as c0^(1-theta) c1^theta; exponents land on (theta, 1-theta)"
                    .into(),
            ],
            ledger_flags: vec![],
        },
    };
    write_output(output, &to_json(&report)?)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// figures

fn cmd_figures(args: FiguresArgs, config: &Config, output: Option<&Path>) -> Result<u8, CliError> {
    let points = config.resolve(args.points, "points", 720).map_err(usage)?;
    if points < 16 {
        return Err(usage(format!("points must be >= 16, got {points}")));
    }
    let (alpha, beta, c) = match args.case {
        1 => (0.25, 0.25, 2.0),
        2 => (0.5, 0.5, 2.0),
        3 => (0.75, 0.5, 2.0),
        _ => unreachable!("range-checked by clap"),
    };
    let params = RKParams::new(alpha, beta, c)?;
    let region = regions::region_for(&params);
    let svg = regions::region_svg(&region, points, generalized_stolz_border(&region));
    write_output(output, &svg)?;
    Ok(0)
}

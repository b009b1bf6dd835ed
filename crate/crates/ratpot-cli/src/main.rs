//! Command-line front end: construct models, tabulate polynomials and
//! wavefunctions, run verification suites, sweep parameters, export
//! CSV/JSON.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parameter error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ratpot::orthopoly::ClassicalFamily;
use ratpot::potentials::{
    DescriptorParams, LinearBranch, ModelDescriptor, PotentialModel, QuadCase,
};
use ratpot::scalar::{format_rational, parse_rational, Rational, Scalar};
use ratpot::spectral::{fd_eigensolve, GridSpec};
use ratpot::susy::shape_invariance_report;
use ratpot::verify::{run_all, run_suite, Suite, VerifyRecord};
use ratpot::wavefunctions::{eigenfunction, gram_matrix};
use ratpot::xpoly::{
    exceptional_polynomial, expansion_coefficients, gegenbauer_limit_rhs, limit_alpha_to_zero,
    limit_beta_to_alpha, ExceptionalFamily,
};

#[derive(Parser)]
#[command(
    name = "ratpot",
    version,
    about = "Rationally-extended solvable potentials and exceptional orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analytic vs finite-difference spectrum of a potential model
    Spectrum(SpectrumArgs),
    /// Exact coefficients of a polynomial family member
    Poly(PolyArgs),
    /// Run the verification suites
    Verify(VerifyArgs),
    /// Sweep one parameter and run a check per point
    Sweep(SweepArgs),
    /// Limiting relations of the X1-Jacobi family
    Limits(LimitsArgs),
}

#[derive(Args, Clone)]
struct ModelArgs {
    /// radial | scarf | radial-ext-linear | radial-ext-quad |
    /// scarf-ext-linear | scarf-ext-quad
    #[arg(long)]
    family: Option<String>,
    /// Oscillator frequency (rationals like 3/2 accepted)
    #[arg(long)]
    omega: Option<String>,
    /// Angular-momentum parameter l
    #[arg(long)]
    l: Option<String>,
    /// Scarf parameter A
    #[arg(long = "A")]
    cap_a: Option<String>,
    /// Scarf parameter B
    #[arg(long = "B")]
    cap_b: Option<String>,
    /// Quadratic case: I | II | III
    #[arg(long)]
    case: Option<String>,
    /// Linear radial branch: upper | lower
    #[arg(long)]
    branch: Option<String>,
    /// Full model descriptor as inline JSON {family, parameters, case, branch}
    #[arg(long)]
    model_json: Option<String>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Number of levels to compare
    #[arg(long, default_value_t = 3)]
    levels: usize,
    /// Grid points for the finite-difference oracle
    #[arg(long = "grid-n", default_value_t = 4000)]
    grid_n: usize,
    /// Pass tolerance on |E_fd − E_analytic|
    #[arg(long, default_value_t = 5e-3)]
    tol: f64,
    /// Also tabulate x, V(x), ψ_0..ψ_K columns into --output
    #[arg(long)]
    psi: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// csv | json
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct PolyArgs {
    /// laguerre | jacobi | gegenbauer | x1-laguerre | l1 | l2 | l3 |
    /// x1-jacobi | p1 | p3
    #[arg(long)]
    family: String,
    #[arg(long)]
    nu: usize,
    /// Rational parameter, e.g. 3/2
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// polynomials | identities | residuals | isospectrality | extra-levels |
    /// orthonormality | shape-invariance | limits | susy-map | gates | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Which parameter to sweep: omega | l | A | B
    #[arg(long)]
    param: String,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long)]
    steps: usize,
    /// spectrum | residual | shape-invariance | gram
    #[arg(long, default_value = "residual")]
    check: String,
    #[arg(long = "grid-n", default_value_t = 2000)]
    grid_n: usize,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct LimitsArgs {
    /// beta-to-alpha | alpha-to-zero
    #[arg(long)]
    which: String,
    #[arg(long)]
    nu: usize,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    /// Print the finite-ε convergence table as well
    #[arg(long)]
    eps_sweep: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
}

/// 12 significant digits, locale-independent.
fn ffmt(v: f64) -> String {
    format!("{v:.11e}")
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_output(path: &std::path::Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os("RATPOT_OUTPUT_DIR") {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}

fn write_output(path: &std::path::Path, contents: &str) -> Result<(), String> {
    let path = resolve_output(path);
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| e.to_string())?;
        }
    }
    std::fs::write(&path, contents).map_err(|e| e.to_string())?;
    println!("wrote {}", path.display());
    Ok(())
}

impl ModelArgs {
    fn build(&self) -> Result<PotentialModel, String> {
        if let Some(js) = &self.model_json {
            let desc: ModelDescriptor =
                serde_json::from_str(js).map_err(|e| format!("invalid model JSON: {e}"))?;
            return PotentialModel::from_descriptor(&desc).map_err(|e| e.to_string());
        }
        let family = self
            .family
            .clone()
            .ok_or_else(|| "missing --family (or --model-json)".to_string())?;
        let num = |s: &Option<String>| -> Result<Option<f64>, String> {
            s.as_ref()
                .map(|v| parse_rational(v).map(|r| r.to_f64()))
                .transpose()
        };
        let case = match self.case.as_deref() {
            None => None,
            Some("I" | "i" | "1") => Some(QuadCase::I),
            Some("II" | "ii" | "2") => Some(QuadCase::II),
            Some("III" | "iii" | "3") => Some(QuadCase::III),
            Some(other) => return Err(format!("unknown case '{other}' (use I, II, or III)")),
        };
        let branch = match self.branch.as_deref() {
            None => None,
            Some("upper") => Some(LinearBranch::Upper),
            Some("lower") => Some(LinearBranch::Lower),
            Some(other) => return Err(format!("unknown branch '{other}' (use upper or lower)")),
        };
        let desc = ModelDescriptor {
            family,
            parameters: DescriptorParams {
                omega: num(&self.omega)?,
                l: num(&self.l)?,
                a: num(&self.cap_a)?,
                b: num(&self.cap_b)?,
            },
            case,
            branch,
        };
        PotentialModel::from_descriptor(&desc).map_err(|e| e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Poly(args) => cmd_poly(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Limits(args) => cmd_limits(args),
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> ExitCode {
    let model = match args.model.build() {
        Ok(m) => m,
        Err(e) => return usage_err(e),
    };
    if args.levels == 0 {
        return usage_err("--levels must be at least 1");
    }
    let analytic = model.analytic_spectrum(args.levels);
    let grid = GridSpec::for_model(&model, args.grid_n, args.levels);
    let rep = match fd_eigensolve(&model, &grid, args.levels) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("finite-difference solve failed: {e}");
            return ExitCode::from(1);
        }
    };
    println!("model: {}", model.describe());
    if let Some(w) = &rep.warning {
        println!("warning: {w}");
    }
    println!("{:>4}  {:>20}  {:>20}  {:>12}", "nu", "E_analytic", "E_fd", "abs_error");
    let mut worst = 0.0f64;
    let mut rows = Vec::new();
    for (k, (ana, fd)) in analytic.iter().zip(&rep.eigenvalues).enumerate() {
        let err = (fd - ana).abs();
        worst = worst.max(err);
        println!("{k:>4}  {:>20}  {:>20}  {:>12.3e}", ffmt(*ana), ffmt(*fd), err);
        rows.push((k, *ana, *fd, err));
    }
    println!("max |E_fd - E_analytic| = {worst:.3e} (tolerance {:.3e})", args.tol);

    if let Some(path) = &args.output {
        let contents = match args.format.as_str() {
            "csv" => {
                let mut s = String::from("nu,E_analytic,E_fd,abs_error\n");
                for (k, a, f, e) in &rows {
                    s.push_str(&format!("{k},{},{},{}\n", ffmt(*a), ffmt(*f), ffmt(*e)));
                }
                if let Some(kmax) = args.psi {
                    s.push('\n');
                    if let Err(e) = tabulate_psi(&model, &grid, kmax, &mut s) {
                        return usage_err(e);
                    }
                }
                s
            }
            "json" => {
                let v = json!({
                    "schema": 1,
                    "model": model.to_descriptor(),
                    "grid": {"x_min": grid.x_min, "x_max": grid.x_max, "n": grid.n},
                    "rows": rows.iter().map(|(k, a, f, e)| json!({
                        "nu": k, "analytic": a, "fd": f, "abs_error": e
                    })).collect::<Vec<_>>(),
                    "max_abs_error": worst,
                    "pass": worst < args.tol,
                });
                serde_json::to_string_pretty(&v).expect("report serializes")
            }
            other => return usage_err(format!("unknown format '{other}'")),
        };
        if let Err(e) = write_output(path, &contents) {
            return usage_err(e);
        }
    } else if args.psi.is_some() {
        return usage_err("--psi requires --output");
    }
    if worst < args.tol {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn tabulate_psi(
    model: &PotentialModel,
    grid: &GridSpec,
    kmax: usize,
    out: &mut String,
) -> Result<(), String> {
    let specs: Result<Vec<_>, _> = (0..=kmax).map(|k| eigenfunction(model, k)).collect();
    let specs = specs.map_err(|e| e.to_string())?;
    // the FD ground state rides along as an independent cross-check column
    let fd = ratpot::spectral::fd_eigenvector(model, grid, 0).map_err(|e| e.to_string())?;
    let fd_sign = fd
        .iter()
        .map(|(x, p)| p * specs[0].eval(*x).unwrap_or(0.0))
        .sum::<f64>()
        .signum();
    out.push_str("x,V");
    for k in 0..=kmax {
        out.push_str(&format!(",psi{k}"));
    }
    out.push_str(",fd_psi0\n");
    for (i, x) in grid.points().into_iter().enumerate() {
        let v = model.evaluate(x).map_err(|e| e.to_string())?;
        out.push_str(&format!("{},{}", ffmt(x), ffmt(v)));
        for spec in &specs {
            out.push_str(&format!(",{}", ffmt(spec.eval(x).map_err(|e| e.to_string())?)));
        }
        out.push_str(&format!(",{}\n", ffmt(fd_sign * fd[i].1)));
    }
    Ok(())
}

fn cmd_poly(args: PolyArgs) -> ExitCode {
    let parse = |v: &Option<String>, name: &str| -> Result<Rational, String> {
        v.as_ref()
            .ok_or_else(|| format!("family '{}' requires --{name}", args.family))
            .and_then(|s| parse_rational(s))
    };
    enum Kind {
        Classical(ClassicalFamily<Rational>),
        Exceptional(ExceptionalFamily<Rational>),
    }
    let kind = match args.family.as_str() {
        "laguerre" => Kind::Classical(ClassicalFamily::Laguerre {
            alpha: match parse(&args.alpha, "alpha") {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            },
        }),
        "jacobi" => {
            let (alpha, beta) = match (parse(&args.alpha, "alpha"), parse(&args.beta, "beta")) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_err(e),
            };
            Kind::Classical(ClassicalFamily::Jacobi { alpha, beta })
        }
        "gegenbauer" => Kind::Classical(ClassicalFamily::Gegenbauer {
            lambda: match parse(&args.lambda, "lambda") {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            },
        }),
        "x1-laguerre" | "l1" | "l2" | "l3" => {
            let alpha = match parse(&args.alpha, "alpha") {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            };
            Kind::Exceptional(match args.family.as_str() {
                "x1-laguerre" => ExceptionalFamily::X1Laguerre { alpha },
                "l1" => ExceptionalFamily::L1 { alpha },
                "l2" => ExceptionalFamily::L2 { alpha },
                _ => ExceptionalFamily::L3 { alpha },
            })
        }
        "x1-jacobi" | "p1" | "p3" => {
            let (alpha, beta) = match (parse(&args.alpha, "alpha"), parse(&args.beta, "beta")) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_err(e),
            };
            Kind::Exceptional(match args.family.as_str() {
                "x1-jacobi" => ExceptionalFamily::X1Jacobi { alpha, beta },
                "p1" => ExceptionalFamily::P1 { alpha, beta },
                _ => ExceptionalFamily::P3 { alpha, beta },
            })
        }
        other => return usage_err(format!("unknown polynomial family '{other}'")),
    };

    let (poly, expansion) = match &kind {
        Kind::Classical(fam) => match fam.polynomial(args.nu) {
            Ok(p) => (p, None),
            Err(e) => return usage_err(e),
        },
        Kind::Exceptional(fam) => {
            let p = match exceptional_polynomial(fam, args.nu) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            let exp = expansion_coefficients(fam, args.nu).ok();
            (p, exp)
        }
    };
    let coeffs: Vec<String> = poly.coeffs().iter().map(format_rational).collect();
    println!("family: {}  nu: {}", args.family, args.nu);
    println!("coefficients (low to high): [{}]", coeffs.join(", "));
    if let Some(exp) = &expansion {
        let terms: Vec<String> = exp
            .terms
            .iter()
            .map(|(k, c)| format!("{k}: {}", format_rational(c)))
            .collect();
        println!("classical-basis expansion: {{{}}}", terms.join(", "));
    }
    if let Some(path) = &args.output {
        let contents = match args.format.as_str() {
            "json" => {
                let v = json!({
                    "schema": 1,
                    "family": args.family,
                    "nu": args.nu,
                    "coefficients": coeffs,
                    "expansion": expansion.as_ref().map(|e| e.terms.iter().map(|(k, c)| {
                        json!({"index": k, "coefficient": format_rational(c)})
                    }).collect::<Vec<_>>()),
                });
                serde_json::to_string_pretty(&v).expect("serializes")
            }
            "csv" => {
                let mut s = String::from("power,coefficient\n");
                for (k, c) in coeffs.iter().enumerate() {
                    s.push_str(&format!("{k},{c}\n"));
                }
                s
            }
            other => return usage_err(format!("unknown format '{other}'")),
        };
        if let Err(e) = write_output(path, &contents) {
            return usage_err(e);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let records: Vec<VerifyRecord> = if args.suite == "all" {
        run_all()
    } else {
        match Suite::from_name(&args.suite) {
            Some(s) => run_suite(s),
            None => {
                return usage_err(format!(
                    "unknown suite '{}'; use one of {} or all",
                    args.suite,
                    Suite::ALL.map(|s| s.name()).join(", ")
                ))
            }
        }
    };
    let all_pass = records.iter().all(|r| r.pass);
    for r in &records {
        println!(
            "{:4}  {:<44}  value {:>12.4e}  tol {:>8.1e}  [{}]",
            if r.pass { "ok" } else { "FAIL" },
            r.check,
            r.value,
            r.tolerance,
            r.params,
        );
    }
    println!(
        "{} of {} checks passed",
        records.iter().filter(|r| r.pass).count(),
        records.len()
    );
    if let Some(path) = &args.output {
        let contents = match args.format.as_str() {
            "json" => {
                let v = json!({
                    "schema": 1,
                    "suite": args.suite,
                    "results": records.iter().map(|r| json!({
                        "check": r.check,
                        "params": r.params,
                        "value": r.value,
                        "tolerance": r.tolerance,
                        "pass": r.pass,
                    })).collect::<Vec<_>>(),
                    "pass": all_pass,
                });
                serde_json::to_string_pretty(&v).expect("serializes")
            }
            "csv" => {
                let mut s = String::from("check,params,value,tolerance,pass\n");
                for r in &records {
                    s.push_str(&format!(
                        "\"{}\",\"{}\",{},{},{}\n",
                        r.check,
                        r.params,
                        ffmt(r.value),
                        ffmt(r.tolerance),
                        r.pass
                    ));
                }
                s
            }
            other => return usage_err(format!("unknown format '{other}'")),
        };
        if let Err(e) = write_output(path, &contents) {
            return usage_err(e);
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    if args.steps < 2 {
        return usage_err("--steps must be at least 2");
    }
    let (from, to) = match (parse_rational(&args.from), parse_rational(&args.to)) {
        (Ok(a), Ok(b)) => (a.to_f64(), b.to_f64()),
        (Err(e), _) | (_, Err(e)) => return usage_err(e),
    };
    let base = args.model.clone();
    let mut rows: Vec<(f64, String, f64, bool)> = Vec::new();
    let mut all_pass = true;
    for i in 0..args.steps {
        let value = from + (to - from) * i as f64 / (args.steps - 1) as f64;
        let mut m = base.clone();
        let vs = format!("{value}");
        match args.param.as_str() {
            "omega" => m.omega = Some(vs),
            "l" => m.l = Some(vs),
            "A" => m.cap_a = Some(vs),
            "B" => m.cap_b = Some(vs),
            other => return usage_err(format!("unknown sweep parameter '{other}'")),
        }
        let (status, metric, pass) = match m.build() {
            Err(e) => (format!("rejected: {e}"), f64::NAN, false),
            Ok(model) => match run_sweep_check(&args, &model) {
                Err(e) => (format!("error: {e}"), f64::NAN, false),
                Ok((metric, pass)) => (String::from("ok"), metric, pass),
            },
        };
        all_pass &= pass;
        rows.push((value, status, metric, pass));
    }
    println!("{:>18}  {:>12}  {:>6}  note", args.param, "value", "pass");
    for (v, status, metric, pass) in &rows {
        println!(
            "{:>18}  {:>12.4e}  {:>6}  {}",
            ffmt(*v),
            metric,
            pass,
            if status == "ok" { "" } else { status.as_str() }
        );
    }
    if let Some(path) = &args.output {
        let contents = match args.format.as_str() {
            "csv" => {
                let mut s = format!("{},check_value,pass,note\n", args.param);
                for (v, status, metric, pass) in &rows {
                    s.push_str(&format!(
                        "{},{},{},\"{}\"\n",
                        ffmt(*v),
                        ffmt(*metric),
                        pass,
                        status
                    ));
                }
                s
            }
            "json" => {
                let v = json!({
                    "schema": 1,
                    "param": args.param,
                    "check": args.check,
                    "rows": rows.iter().map(|(v, status, metric, pass)| json!({
                        "value": v, "check_value": metric, "pass": pass, "note": status,
                    })).collect::<Vec<_>>(),
                    "pass": all_pass,
                });
                serde_json::to_string_pretty(&v).expect("serializes")
            }
            other => return usage_err(format!("unknown format '{other}'")),
        };
        if let Err(e) = write_output(path, &contents) {
            return usage_err(e);
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_sweep_check(args: &SweepArgs, model: &PotentialModel) -> Result<(f64, bool), String> {
    match args.check.as_str() {
        "spectrum" => {
            let tol = args.tol.unwrap_or(5e-3);
            let grid = GridSpec::for_model(model, args.grid_n, 3);
            let rep = fd_eigensolve(model, &grid, 3).map_err(|e| e.to_string())?;
            let err = rep.max_abs_error.unwrap_or(f64::INFINITY);
            Ok((err, err < tol))
        }
        "residual" => {
            let tol = args.tol.unwrap_or(1e-10);
            let mut worst = 0.0f64;
            for nu in 0..=3 {
                let wf = eigenfunction(model, nu).map_err(|e| e.to_string())?;
                let r = ratpot::spectral::schrodinger_residual(model, &wf)
                    .map_err(|e| e.to_string())?;
                worst = worst.max(r);
            }
            Ok((worst, worst < tol))
        }
        "shape-invariance" => {
            let tol = args.tol.unwrap_or(1e-10);
            let r = shape_invariance_report(model).map_err(|e| e.to_string())?;
            Ok((r, r < tol))
        }
        "gram" => {
            let tol = args.tol.unwrap_or(1e-8);
            let g = gram_matrix(model, 3).map_err(|e| e.to_string())?;
            let mut worst = 0.0f64;
            for (i, row) in g.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((v - expect).abs());
                }
            }
            Ok((worst, worst < tol))
        }
        other => Err(format!("unknown check '{other}'")),
    }
}

fn cmd_limits(args: LimitsArgs) -> ExitCode {
    let parse = |v: &Option<String>, name: &str| -> Result<Rational, String> {
        v.as_ref()
            .ok_or_else(|| format!("--{name} is required for this limit"))
            .and_then(|s| parse_rational(s))
    };
    let (limit, crosscheck, sweep_param) = match args.which.as_str() {
        "beta-to-alpha" => {
            let alpha = match parse(&args.alpha, "alpha") {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            };
            let lim = match limit_beta_to_alpha(args.nu, &alpha) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            let rhs = match gegenbauer_limit_rhs(args.nu, &alpha) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            println!(
                "lim (beta-alpha)*Phat_(nu+1) at nu={}, alpha={}:",
                args.nu,
                format_rational(&alpha)
            );
            println!("exact match with the Gegenbauer multiple: {}", lim == rhs);
            (lim, rhs, alpha.to_f64())
        }
        "alpha-to-zero" => {
            let beta = match parse(&args.beta, "beta") {
                Ok(v) => v,
                Err(e) => return usage_err(e),
            };
            let lim = match limit_alpha_to_zero(args.nu, &beta) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            let member = match exceptional_polynomial(
                &ExceptionalFamily::X1Jacobi {
                    alpha: Rational::from_integer(0.into()),
                    beta: beta.clone(),
                },
                args.nu,
            ) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            println!(
                "lim Phat_(nu+1) as alpha -> 0 at nu={}, beta={}:",
                args.nu,
                format_rational(&beta)
            );
            println!("exact match with the alpha = 0 member: {}", lim == member);
            (lim, member, beta.to_f64())
        }
        other => return usage_err(format!("unknown limit '{other}'")),
    };
    let coeffs: Vec<String> = limit.coeffs().iter().map(format_rational).collect();
    println!("limit coefficients (low to high): [{}]", coeffs.join(", "));

    let mut sweep_rows = Vec::new();
    if args.eps_sweep {
        let zs: Vec<f64> = (-9..=9).map(|i| i as f64 / 10.0).collect();
        let limf = limit.to_f64();
        println!("{:>10}  {:>14}", "eps", "sup |diff|");
        let mut prev: Option<f64> = None;
        for k in 2..=5 {
            let eps = 10f64.powi(-k);
            let fam = match args.which.as_str() {
                "beta-to-alpha" => ExceptionalFamily::X1Jacobi {
                    alpha: sweep_param,
                    beta: sweep_param + eps,
                },
                _ => ExceptionalFamily::X1Jacobi { alpha: eps, beta: sweep_param },
            };
            let scale = if args.which == "beta-to-alpha" { eps } else { 1.0 };
            let p = match exceptional_polynomial(&fam, args.nu) {
                Ok(p) => p.scale(&scale),
                Err(e) => return usage_err(e),
            };
            let err = zs
                .iter()
                .map(|z| (p.eval(z) - limf.eval(z)).abs())
                .fold(0.0f64, f64::max);
            let rate = prev.map(|p0: f64| (p0 / err).log10());
            match rate {
                Some(r) => println!("{eps:>10.1e}  {err:>14.6e}  (rate {r:.3})"),
                None => println!("{eps:>10.1e}  {err:>14.6e}"),
            }
            sweep_rows.push((eps, err, rate));
            prev = Some(err);
        }
    }
    if let Some(path) = &args.output {
        let contents = match args.format.as_str() {
            "json" => {
                let v = json!({
                    "schema": 1,
                    "which": args.which,
                    "nu": args.nu,
                    "coefficients": coeffs,
                    "exact_match": limit == crosscheck,
                    "eps_sweep": sweep_rows.iter().map(|(e, d, r)| json!({
                        "eps": e, "sup_diff": d, "rate": r,
                    })).collect::<Vec<_>>(),
                });
                serde_json::to_string_pretty(&v).expect("serializes")
            }
            "csv" => {
                let mut s = String::from("power,coefficient\n");
                for (k, c) in coeffs.iter().enumerate() {
                    s.push_str(&format!("{k},{c}\n"));
                }
                s
            }
            other => return usage_err(format!("unknown format '{other}'")),
        };
        if let Err(e) = write_output(path, &contents) {
            return usage_err(e);
        }
    }
    ExitCode::SUCCESS
}

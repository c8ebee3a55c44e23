use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use rug::{Complex, Float};
use serde_json::{json, Value};
use thiserror::Error;
use torusasym::asymptotics::{
    describe_tail, growth_diagnostic, kashaev_expansion, ExpansionReport, TailOrder,
};
use torusasym::charvar::enumerate_components;
use torusasym::exact::a_coefficients;
use torusasym::exact::precision::{abs, format_float};
use torusasym::quadrature::{kashaev_integral, QuadratureConfig, QuadratureResult};
use torusasym::torsion::{nonabelian_torsion, nonabelian_torsion_exact};
use torusasym::verify::{
    chern_simons_suite, main_theorem_suite, residue_theorem_suite, table1_suite, SuiteReport,
};
use torusasym::{Precision, TorusKnot};

use crate::render::{complex, decimal, rational, tex_rational, to_json};
use crate::{Command, CommonArgs, Format, KnotArgs, Method, Suite};

const PRECISION_ENV: &str = "TORUSASYM_MAX_PRECISION";
const DEFAULT_MAX_DIGITS: u32 = 2000;
/// Quadrature is cross-checked at this many digits inside `verify main-theorem`.
const CROSS_CHECK_DIGITS: u32 = 20;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] torusasym::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Engine(e) => e.kind(),
            CliError::Io(_) => "Io",
            CliError::Csv(_) => "Csv",
            CliError::Usage(_) => "Usage",
        }
    }
}

pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Outcome::Success => ExitCode::SUCCESS,
            Outcome::VerificationFailed => ExitCode::from(1),
        }
    }

    fn from_pass(passed: bool) -> Self {
        if passed {
            Outcome::Success
        } else {
            Outcome::VerificationFailed
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Components { knot, format, common } => components(knot, format, &common),
        Command::Invariant {
            knot,
            n,
            method,
            phi,
            common,
        } => invariant(knot, n, method, phi, &common),
        Command::Series {
            knot,
            n_max,
            format,
            common,
        } => series(knot, n_max, format, &common),
        Command::Growth {
            knot,
            jmax,
            format,
            common,
        } => growth(knot, jmax, format, &common),
        Command::Verify {
            suite,
            p,
            q,
            n,
            common,
        } => verify(suite, p, q, n, &common),
    }
}

fn max_digits() -> Result<u32> {
    match std::env::var(PRECISION_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{PRECISION_ENV}={raw:?} is not a digit count"))),
        Err(_) => Ok(DEFAULT_MAX_DIGITS),
    }
}

/// Requested precision, refused above the cap.
fn precision(common: &CommonArgs) -> Result<(Precision, u32)> {
    let cap = max_digits()?;
    if common.digits > cap {
        return Err(torusasym::Error::PrecisionExhausted {
            cap,
            demand: common.digits,
        }
        .into());
    }
    if common.digits == 0 {
        return Err(CliError::Usage("--digits must be positive".into()));
    }
    Ok((Precision::digits(common.digits), cap))
}

fn knot(args: KnotArgs) -> Result<TorusKnot> {
    Ok(TorusKnot::new(args.p, args.q)?)
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn knot_json(k: &TorusKnot) -> Value {
    json!({ "p": k.p(), "q": k.q() })
}

fn components(args: KnotArgs, format: Format, common: &CommonArgs) -> Result<Outcome> {
    let (prec, _) = precision(common)?;
    let k = knot(args)?;
    let digits = common.digits;
    let comps = enumerate_components(&k);
    let text = match format {
        Format::Json => {
            let rows: Vec<Value> = comps
                .iter()
                .map(|c| {
                    json!({
                        "index": c.index,
                        "alpha": c.alpha,
                        "beta": c.beta,
                        "k_minus": c.k_minus,
                        "k_plus": c.k_plus,
                        "m": c.m,
                        "a_diamond": c.a_diamond,
                        "a_triangle": rational(&c.a_triangle),
                        "epsilon": c.epsilon,
                        "torsion_exact": nonabelian_torsion_exact(&k, c).to_string(),
                        "torsion": decimal(&nonabelian_torsion(&k, c, prec), digits),
                    })
                })
                .collect();
            to_json(&json!({ "knot": knot_json(&k), "components": rows }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "index",
                "alpha",
                "beta",
                "k_minus",
                "k_plus",
                "m",
                "a_diamond",
                "a_triangle",
                "epsilon",
                "torsion_exact",
                "torsion",
            ])?;
            for c in &comps {
                w.write_record([
                    c.index.to_string(),
                    c.alpha.to_string(),
                    c.beta.to_string(),
                    c.k_minus.to_string(),
                    c.k_plus.to_string(),
                    c.m.to_string(),
                    c.a_diamond.to_string(),
                    format!("{}/{}", c.a_triangle.numer(), c.a_triangle.denom()),
                    c.epsilon.to_string(),
                    nonabelian_torsion_exact(&k, c).to_string(),
                    format_float(&nonabelian_torsion(&k, c, prec), digits),
                ])?;
            }
            csv_text(w)?
        }
        Format::Tex => tex_components(&k, &comps),
    };
    emit(common.output.as_deref(), &text)?;
    Ok(Outcome::Success)
}

fn csv_text(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV fields are UTF-8"))
}

fn tex_components(k: &TorusKnot, comps: &[torusasym::charvar::CharVarComponent]) -> String {
    let mut out = String::from("\\begin{tabular}{|c|c|c|c|c|c|}\n\\hline\n");
    out.push_str(
        "$(p,q)$ & $N_{p,q}$ & $(k^-_\\ell,k^+_\\ell)$ & $m_\\ell$ & $A^\\diamond_\\ell$ & $A^\\triangleright_\\ell$ \\\\\n\\hline\n",
    );
    for (i, c) in comps.iter().enumerate() {
        let lead = if i == 0 {
            format!("$({},{})$ & ${}$", k.p(), k.q(), comps.len())
        } else {
            " & ".to_string()
        };
        out.push_str(&format!(
            "{lead} & $({},{})$ & ${}$ & ${}$ & ${}$ \\\\\n",
            c.k_minus,
            c.k_plus,
            c.m,
            c.a_diamond,
            tex_rational(&c.a_triangle)
        ));
        out.push_str(if i + 1 == comps.len() {
            "\\hline\n"
        } else {
            "\\cline{3-6}\n"
        });
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn expansion_json(r: &ExpansionReport, digits: u32) -> Value {
    let terms: Vec<Value> = r
        .residue_terms
        .iter()
        .map(|(k, v)| json!({ "k": k, "value": complex(v, digits) }))
        .collect();
    json!({
        "value": complex(&r.assembled_value, digits),
        "residue_terms": terms,
        "residue_sum": complex(&r.residue_sum, digits),
        "tail": complex(&r.tail.value, digits),
        "tail_truncation_index": r.tail.truncation_index,
        "tail_optimal_index": r.tail.optimal_index,
        "error_estimate": decimal(&r.tail.error_estimate, 6),
        "z_invariant": complex(&r.z_invariant, digits),
        "note": describe_tail(&r.tail),
    })
}

fn quadrature_json(r: &QuadratureResult, digits: u32) -> Value {
    json!({
        "value": complex(&r.value, digits),
        "error_estimate": decimal(&r.error_estimate, 6),
        "truncation_bound": decimal(&r.truncation_bound, 6),
        "refinement_delta": decimal(&r.refinement_delta, 6),
        "nodes_used": r.nodes_used,
        "working_digits": r.working_precision,
        "path_angle": r.path_angle,
        "truncation_radius": r.truncation_radius,
        "converged": r.converged,
    })
}

fn invariant(args: KnotArgs, n: u64, method: Method, phi: f64, common: &CommonArgs) -> Result<Outcome> {
    let (prec, cap) = precision(common)?;
    let k = knot(args)?;
    if !(phi > 0.0 && phi < std::f64::consts::FRAC_PI_2) {
        return Err(CliError::Usage(format!("--phi {phi} must lie in (0, pi/2)")));
    }
    if n < 2 {
        return Err(torusasym::Error::InvalidArgument(format!("N = {n} must be at least 2")).into());
    }
    let digits = common.digits;
    let config = QuadratureConfig {
        phi,
        max_digits: cap,
        ..QuadratureConfig::default()
    };
    let expansion = match method {
        Method::Expansion | Method::Both => Some(kashaev_expansion(&k, n, prec, TailOrder::Auto)?),
        Method::Quadrature => None,
    };
    let quadrature = match method {
        Method::Quadrature | Method::Both => Some(kashaev_integral(&k, n, digits.max(10), &config)?),
        Method::Expansion => None,
    };

    let mut doc = json!({ "knot": knot_json(&k), "N": n, "digits": digits });
    let mut outcome = Outcome::Success;
    if let Some(e) = &expansion {
        doc["expansion"] = expansion_json(e, digits);
    }
    if let Some(q) = &quadrature {
        doc["quadrature"] = quadrature_json(q, digits);
    }
    if let (Some(e), Some(q)) = (&expansion, &quadrature) {
        let bits = prec.bits();
        let gap = abs(&Complex::with_val(bits, &e.assembled_value - &q.value));
        let threshold = Float::with_val(bits, &e.tail.error_estimate + &q.error_estimate) * 2u32;
        let within = gap <= threshold;
        doc["discrepancy"] = json!({
            "value": decimal(&gap, 6),
            "threshold": decimal(&threshold, 6),
            "within_threshold": within,
        });
        outcome = Outcome::from_pass(within);
    }
    emit(common.output.as_deref(), &to_json(&doc))?;
    Ok(outcome)
}

fn series(args: KnotArgs, n_max: usize, format: Format, common: &CommonArgs) -> Result<Outcome> {
    let k = knot(args)?;
    let a = a_coefficients(&k, n_max);
    let text = match format {
        Format::Json => to_json(&json!({
            "knot": knot_json(&k),
            "a": a.iter().map(rational).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "a_n"])?;
            for (i, c) in a.iter().enumerate() {
                w.write_record([i.to_string(), format!("{}/{}", c.numer(), c.denom())])?;
            }
            csv_text(w)?
        }
        Format::Tex => {
            let mut out = String::from("\\begin{tabular}{|c|c|}\n\\hline\n$n$ & $a_n$ \\\\\n\\hline\n");
            for (i, c) in a.iter().enumerate() {
                out.push_str(&format!("${i}$ & ${}$ \\\\\n", tex_rational(c)));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            out
        }
    };
    emit(common.output.as_deref(), &text)?;
    Ok(Outcome::Success)
}

fn growth(args: KnotArgs, jmax: u32, format: Format, common: &CommonArgs) -> Result<Outcome> {
    let (prec, _) = precision(common)?;
    let k = knot(args)?;
    let points = growth_diagnostic(&k, jmax, prec)?;
    let digits = common.digits;
    let text = match format {
        Format::Json => to_json(&json!({
            "knot": knot_json(&k),
            "points": points
                .iter()
                .map(|g| json!({ "j": g.j, "N": g.n, "ratio": decimal(&g.ratio, digits) }))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["j", "N", "ratio"])?;
            for g in &points {
                w.write_record([g.j.to_string(), g.n.to_string(), format_float(&g.ratio, digits)])?;
            }
            csv_text(w)?
        }
        Format::Tex => {
            return Err(CliError::Usage("growth supports --format json or csv".into()));
        }
    };
    emit(common.output.as_deref(), &text)?;
    Ok(Outcome::Success)
}

fn verify(
    suite: Suite,
    p: Option<i64>,
    q: Option<i64>,
    n: Option<u64>,
    common: &CommonArgs,
) -> Result<Outcome> {
    let (prec, cap) = precision(common)?;
    let pick = |default: (i64, i64)| -> Result<TorusKnot> {
        Ok(TorusKnot::new(p.unwrap_or(default.0), q.unwrap_or(default.1))?)
    };
    let report: SuiteReport = match suite {
        Suite::Table1 => table1_suite(),
        Suite::MainTheorem => {
            let k = pick((2, 3))?;
            let n = n.unwrap_or(7);
            if n < 2 {
                return Err(torusasym::Error::InvalidArgument(format!("N = {n} must be at least 2")).into());
            }
            let config = QuadratureConfig {
                max_digits: cap,
                ..QuadratureConfig::default()
            };
            let independent = kashaev_integral(&k, n, CROSS_CHECK_DIGITS, &config)?;
            main_theorem_suite(&k, n, prec, Some(&independent.value))?
        }
        Suite::ResidueTheorem => residue_theorem_suite(&pick((4, 7))?, prec)?,
        Suite::ChernSimons => chern_simons_suite(&pick((3, 4))?, prec)?,
    };
    let mut text = String::new();
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    text.push_str(&format!(
        "{}: {passed}/{} checks passed\n",
        report.suite,
        report.checks.len()
    ));
    emit(common.output.as_deref(), &text)?;
    Ok(Outcome::from_pass(report.passed()))
}

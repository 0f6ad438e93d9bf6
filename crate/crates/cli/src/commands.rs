//! Subcommands and the run report they produce.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use liefour_core::algebra::{
    check_equivariance, check_generalized_jacobi, check_generalized_jacobi_tables,
    check_quartic_transfer, check_super_jacobi, check_super_jacobi_tables, induce_quartic,
    quartic_cross_report,
};
use liefour_core::clifford::{
    build_generalized_clifford, clifford_verify, oscillator_form, quadratic_compatibility_check,
    PolynomialTarget,
};
use liefour_core::spinor::{convention_reports, sigma_set};
use liefour_core::susy::{
    build_little_algebra_rep, build_n2_presentation, build_quartic_poincare_presentation,
    hermiticity_spot_check, transcribed_coefficients, verify_abstract_quartic_poincare,
    verify_induced_n2_quartic, verify_little_algebra_display, verify_zero_central_charge, Charge,
    LittleAlgebraRep,
};
use liefour_core::{Failure, LedgerEntry, Matrix, Scalar, VerificationReport};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::format::{self, FormatError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] liefour_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(
    name = "liefour",
    version,
    about = "Exact checks for Lie algebras of order four"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Only emit JSON; no text summary on stderr.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Params {
    /// Mass parameter: a Gaussian rational or a symbol.
    #[arg(long, default_value = "m", value_parser = parse_scalar, allow_hyphen_values = true)]
    pub m: Scalar,
    /// Central charge: a Gaussian rational or a symbol.
    #[arg(long, default_value = "z", value_parser = parse_scalar, allow_hyphen_values = true)]
    pub z: Scalar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Epsilon tables and sigma/gamma anticommutators.
    Conventions,
    /// Super-Jacobi identities of a superalgebra (and of a representation).
    VerifySuper {
        /// Presentation or representation document; defaults to the N=2 algebra.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Include the Lorentz generators in the built-in algebra.
        #[arg(long)]
        lorentz: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Induce the order-four algebra and check its structure constants.
    Induce {
        /// Superalgebra document; defaults to the N=2 algebra
        #[arg(long)]
        file: Option<PathBuf>,
        /// Include the Lorentz generators in the built-in algebra
        #[arg(long)]
        lorentz: bool,
    },
    /// Compare four-brackets with a reference.
    VerifyQuartic {
        #[arg(long, value_enum)]
        against: Against,
        #[command(flatten)]
        params: Params,
    },
    /// Build the 16-dimensional little-algebra representation.
    LittleRep {
        #[command(flatten)]
        params: Params,
    },
    /// Check (Σ x_k M_k)^d = f·1 for the matrices of a form document.
    Clifford {
        #[arg(long)]
        matrices: PathBuf,
        #[arg(long)]
        degree: u32,
        /// Target polynomial; defaults to P^(d/2) when the form squares to P.
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        target: Option<Scalar>,
    },
    /// Clock-and-shift generalised Clifford witness.
    Gcal {
        #[arg(long)]
        n: usize,
    },
    /// Write a built-in object as a document.
    Export {
        #[arg(long, value_enum)]
        what: Export,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Against {
    /// The induced closed form, evaluated in the representation.
    Induced,
    /// The transcribed abstract quartic Poincaré algebra.
    Eq4,
    /// The rest-frame display in m and z.
    Little,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Export {
    N2,
    N2Lorentz,
    QuarticPoincare,
    Induced,
    LittleRep,
    FockForm,
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse().map_err(|e: liefour_core::Error| e.to_string())
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub reports: Vec<VerificationReport>,
    pub ledger: Vec<LedgerEntry>,
    pub status: Status,
    pub data: Value,
}

impl RunReport {
    fn new(command: &str, inputs: Value) -> Self {
        let digest = Sha256::digest(format!("{command}\n{inputs}").as_bytes());
        RunReport {
            command: command.to_string(),
            inputs_digest: hex::encode(digest),
            reports: Vec::new(),
            ledger: Vec::new(),
            status: Status::Pass,
            data: Value::Null,
        }
    }

    /// Ledger entries are findings and never change the status.
    fn finish(mut self) -> Self {
        self.status = if self.reports.iter().all(VerificationReport::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            s.push_str(&format!("{}\n", r.summary()));
        }
        for l in &self.ledger {
            let ratio = l.ratio.as_deref().unwrap_or("-");
            s.push_str(&format!("ledger {}: ratio {ratio}; {}\n", l.topic, l.note));
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        s.push_str(&format!("{}: {status}\n", self.command));
        s
    }
}

/// What a command produced.
pub enum Output {
    Report(RunReport),
    Document(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn params_json(p: &Params) -> Value {
    json!({"m": p.m.to_string(), "z": p.z.to_string()})
}

fn little(p: &Params) -> Result<LittleAlgebraRep, CliError> {
    Ok(build_little_algebra_rep(p.m.clone(), p.z.clone())?)
}

pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Conventions => {
            let mut run = RunReport::new("conventions", json!({}));
            run.reports = convention_reports();
            run.data = sigma_set().to_json();
            Ok(Output::Report(run.finish()))
        }
        Command::VerifySuper {
            file,
            lorentz,
            params,
        } => verify_super(file.as_deref(), *lorentz, params),
        Command::Induce { file, lorentz } => induce(file.as_deref(), *lorentz),
        Command::VerifyQuartic { against, params } => verify_quartic(*against, params),
        Command::LittleRep { params } => little_rep(params),
        Command::Clifford {
            matrices,
            degree,
            target,
        } => clifford(matrices, *degree, target.as_ref()),
        Command::Gcal { n } => gcal(*n),
        Command::Export { what, params } => export(*what, params).map(Output::Document),
    }
}

fn verify_super(file: Option<&Path>, lorentz: bool, params: &Params) -> Result<Output, CliError> {
    if let Some(path) = file {
        let text = read(path)?;
        let doc = format::parse_document(&text)?;
        let mut run = RunReport::new("verify-super", json!({"file": text}));
        run.reports
            .push(check_super_jacobi_tables(&doc.presentation));
        if let Some(rep) = &doc.representation {
            run.reports
                .push(check_super_jacobi(&doc.presentation, &rep.bound())?);
        }
        run.data = json!({"generators": doc.presentation.generators().len()});
        return Ok(Output::Report(run.finish()));
    }
    let mut inputs = params_json(params);
    inputs["lorentz"] = json!(lorentz);
    let mut run = RunReport::new("verify-super", inputs);
    let p = build_n2_presentation(lorentz)?;
    run.reports.push(check_super_jacobi_tables(&p));
    let l = little(params)?;
    run.reports.push(l.self_check.clone());
    run.data = json!({"generators": p.generators().len(), "dim": l.rep.dim()});
    Ok(Output::Report(run.finish()))
}

fn induce(file: Option<&Path>, lorentz: bool) -> Result<Output, CliError> {
    let (p, inputs, builtin) = match file {
        Some(path) => {
            let text = read(path)?;
            (
                format::parse_presentation(&text)?,
                json!({"file": text}),
                false,
            )
        }
        None => (
            build_n2_presentation(lorentz)?,
            json!({"lorentz": lorentz}),
            true,
        ),
    };
    let mut run = RunReport::new("induce", inputs);
    let q = induce_quartic(&p)?;
    run.reports.push(check_generalized_jacobi_tables(&q)?);
    if builtin {
        run.reports.push(verify_zero_central_charge(&q)?);
        run.ledger = quartic_cross_report(&p)?;
    }
    run.data = json!({
        "name": q.name,
        "generators": q.generators().len(),
        "quartic_entries": q.quartic_len(),
    });
    Ok(Output::Report(run.finish()))
}

fn verify_quartic(against: Against, params: &Params) -> Result<Output, CliError> {
    let mut inputs = params_json(params);
    inputs["against"] = json!(format!("{against:?}").to_lowercase());
    let mut run = RunReport::new("verify-quartic", inputs);
    match against {
        Against::Eq4 => {
            run.reports = verify_abstract_quartic_poincare()?;
            let p = build_quartic_poincare_presentation()?;
            run.data = json!({"name": p.name, "quartic_entries": p.quartic_len()});
        }
        Against::Induced => {
            let l = little(params)?;
            let q = induce_quartic(&l.presentation)?;
            run.reports.push(check_quartic_transfer(&q, &l.rep)?);
            run.reports.push(check_equivariance(&q, &l.rep)?);
            let odd: Vec<String> = Charge::all().iter().map(|c| c.name()).collect();
            run.reports.push(check_generalized_jacobi(&odd, &l.rep)?);
            run.reports.push(verify_zero_central_charge(&q)?);
            let display = verify_induced_n2_quartic(&l)?;
            run.reports.push(display.report);
            run.ledger = l.ledger.clone();
            run.ledger.extend(display.ledger);
            run.ledger.extend(quartic_cross_report(&l.presentation)?);
            run.data = json!({"dim": l.rep.dim(), "multisets": q.quartic_len()});
        }
        Against::Little => {
            let l = little(params)?;
            let display = verify_little_algebra_display(&l)?;
            run.reports.push(display.report);
            run.ledger = l.ledger.clone();
            run.ledger.extend(display.ledger);
            run.data = json!({"dim": l.rep.dim()});
        }
    }
    Ok(Output::Report(run.finish()))
}

fn little_rep(params: &Params) -> Result<Output, CliError> {
    let mut run = RunReport::new("little-rep", params_json(params));
    let l = little(params)?;
    run.reports.push(l.self_check.clone());
    run.ledger = l.ledger.clone();
    if let (Some(m), Some(z)) = (params.m.as_constant(), params.z.as_constant()) {
        match hermiticity_spot_check(&m, &z) {
            Ok(r) => run.reports.push(r),
            Err(e) => run.ledger.push(LedgerEntry {
                topic: "hermiticity".into(),
                computed: "skipped".into(),
                reference: "(Q^I_a)† = Qb_Ia".into(),
                ratio: None,
                note: e.to_string(),
            }),
        }
    }
    let strings = |c: &[Scalar; 4]| c.iter().map(ToString::to_string).collect::<Vec<_>>();
    run.data = json!({
        "dim": l.rep.dim(),
        "coefficients": strings(&l.coefficients),
        "transcribed_coefficients": strings(&transcribed_coefficients(&l.m, &l.z)),
    });
    Ok(Output::Report(run.finish()))
}

fn clifford(path: &Path, degree: u32, target: Option<&Scalar>) -> Result<Output, CliError> {
    let text = read(path)?;
    let form = format::parse_form(&text)?;
    let inputs = json!({
        "form": text,
        "degree": degree,
        "target": target.map(ToString::to_string),
    });
    let mut run = RunReport::new("clifford", inputs);
    let compat = quadratic_compatibility_check(&form);
    let poly = match target {
        Some(t) => t.clone(),
        None => {
            let mut r = VerificationReport::new("quadratic-compatibility", "form");
            r.total = 1;
            if !compat.compatible {
                r.failures
                    .push(Failure::new(vec![], "square is not scalar".into()));
            }
            run.reports.push(r);
            match (&compat.quadratic, degree % 2) {
                (Some(p), 0) => p.pow(degree / 2),
                (Some(_), _) => {
                    return Err(CliError::Usage(
                        "odd degree needs an explicit --target".into(),
                    ))
                }
                (None, _) => {
                    run.data = json!({"dim": form.dim(), "quadratic": Value::Null});
                    return Ok(Output::Report(run.finish()));
                }
            }
        }
    };
    let target = PolynomialTarget::new(poly, degree, &form.symbol_set())?;
    run.reports.push(clifford_verify(&form, &target)?);
    run.data = json!({
        "dim": form.dim(),
        "indeterminates": form.indeterminates().iter().map(|x| x.name()).collect::<Vec<_>>(),
        "quadratic": compat.quadratic.as_ref().map(ToString::to_string),
        "target": target.poly.to_string(),
    });
    Ok(Output::Report(run.finish()))
}

/// First entry showing that a matrix is not a multiple of the identity.
fn non_scalar_entry(m: &Matrix) -> Option<(usize, usize)> {
    let n = m.dim();
    for r in 0..n {
        for c in 0..n {
            let bad = if r == c {
                m.get(r, c) != m.get(0, 0)
            } else {
                !m.get(r, c).is_zero()
            };
            if bad {
                return Some((r, c));
            }
        }
    }
    None
}

fn gcal(n: usize) -> Result<Output, CliError> {
    let mut run = RunReport::new("gcal", json!({"n": n}));
    let g = build_generalized_clifford(n)?;
    let e = g.form.matrices();
    let i = Scalar::i();
    let mut omega = VerificationReport::new("omega-commutation", "clock-shift");
    for j in 0..n {
        for k in j + 1..n {
            omega.total += 1;
            let residual = &(&e[j] * &e[k]) - &(&e[k] * &e[j]).scale(&i);
            if !residual.is_zero() {
                omega.failures.push(Failure::new(
                    vec![format!("e{}", j + 1), format!("e{}", k + 1)],
                    residual.to_sparse_json(),
                ));
            }
        }
    }
    run.reports.push(omega);
    run.reports.push(clifford_verify(&g.form, &g.target)?);
    let compat = quadratic_compatibility_check(&g.form);
    let mut incompat = VerificationReport::new("quadratic-incompatibility", "clock-shift");
    incompat.total = 1;
    if compat.compatible {
        incompat
            .failures
            .push(Failure::new(vec![], "square is scalar".into()));
    }
    run.reports.push(incompat);
    let certificate = non_scalar_entry(&compat.square)
        .map(|(r, c)| json!({"row": r, "col": c, "value": compat.square.get(r, c).to_string()}));
    run.data = json!({
        "dim": g.form.dim(),
        "target": g.target.poly.to_string(),
        "fourth_powers": g.fourth_powers.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "certificate": certificate,
    });
    Ok(Output::Report(run.finish()))
}

pub fn export(what: Export, params: &Params) -> Result<String, CliError> {
    Ok(match what {
        Export::N2 => format::emit_document(&build_n2_presentation(false)?, None),
        Export::N2Lorentz => format::emit_document(&build_n2_presentation(true)?, None),
        Export::QuarticPoincare => {
            format::emit_document(&build_quartic_poincare_presentation()?, None)
        }
        Export::Induced => {
            format::emit_document(&induce_quartic(&build_n2_presentation(false)?)?, None)
        }
        Export::LittleRep => {
            let l = little(params)?;
            format::emit_document(&l.presentation, Some(&l.rep))
        }
        Export::FockForm => format::emit_form(&oscillator_form(&little(params)?)?),
    })
}

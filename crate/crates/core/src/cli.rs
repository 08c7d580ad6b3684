//! Command dispatch shared by the `lebdecomp` binary and the tests.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::adapters::{form_decompose, functional_decompose_detailed, induces_measure, is_closable, measure_decompose};
use crate::error::{Error, Result};
use crate::io;
use crate::lebesgue::{
    check_ac, check_mutual_ac, check_singular, decompose, domination_alpha, douglas_solve, limit_ab_traced,
    parallel_sum, rn_witness,
};
use crate::linalg::frobenius;
use crate::psd::{make_psd, PsdMatrix};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Decompose,
    ParallelSum,
    Limit,
    CheckAc,
    CheckSingular,
    CheckMutual,
    Douglas,
    Alpha,
    RnWitness,
    Form,
    Measure,
    Functional,
    InducesMeasure,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::ParallelSum => "parallel-sum",
            Command::Limit => "limit",
            Command::CheckAc => "check-ac",
            Command::CheckSingular => "check-singular",
            Command::CheckMutual => "check-mutual",
            Command::Douglas => "douglas",
            Command::Alpha => "alpha",
            Command::RnWitness => "rn-witness",
            Command::Form => "form",
            Command::Measure => "measure",
            Command::Functional => "functional",
            Command::InducesMeasure => "induces-measure",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Command::InducesMeasure => 1,
            _ => 2,
        }
    }

    fn roles(self) -> &'static [&'static str] {
        match self {
            Command::Douglas => &["T1", "T2"],
            Command::Form => &["t", "w"],
            Command::Measure => &["alpha", "beta"],
            Command::Functional => &["f", "g"],
            Command::InducesMeasure => &["A"],
            _ => &["A", "B"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Optional per-field overrides of [`Tolerance::default`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ToleranceOverrides {
    pub rel_rank: Option<f64>,
    pub abs_zero: Option<f64>,
    pub psd_slack: Option<f64>,
    pub conv_tol: Option<f64>,
}

impl ToleranceOverrides {
    pub fn resolve(&self) -> Result<Tolerance> {
        let d = Tolerance::default();
        Tolerance::new(
            self.rel_rank.unwrap_or(d.rel_rank),
            self.abs_zero.unwrap_or(d.abs_zero),
            self.psd_slack.unwrap_or(d.psd_slack),
            self.conv_tol.unwrap_or(d.conv_tol),
        )
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    /// JSON array for `rn-witness`, or `@path` to read it from a file.
    pub vector: Option<String>,
    pub tolerance: ToleranceOverrides,
    /// `None` writes to stdout.
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command, inputs: Vec<PathBuf>) -> Self {
        RunConfig {
            command,
            inputs,
            vector: None,
            tolerance: ToleranceOverrides::default(),
            output: None,
            format: Format::Json,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_input_error() {
        2
    } else {
        1
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    match render(config) {
        Ok(doc) => match &config.output {
            Some(path) => match fs::write(path, &doc) {
                Ok(()) => RunOutcome {
                    exit_code: 0,
                    stdout: String::new(),
                    stderr: String::new(),
                },
                Err(e) => failure(&Error::Io(format!("{}: {e}", path.display()))),
            },
            None => RunOutcome {
                exit_code: 0,
                stdout: doc,
                stderr: String::new(),
            },
        },
        Err(err) => failure(&err),
    }
}

fn failure(err: &Error) -> RunOutcome {
    RunOutcome {
        exit_code: exit_code(err),
        stdout: String::new(),
        stderr: format!("{}: {err}\n", err.name()),
    }
}

struct Input {
    role: &'static str,
    path: String,
    text: String,
}

fn read_input(role: &'static str, path: &Path) -> Result<Input> {
    let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|_| Error::Parse(format!("{}: not UTF-8", path.display())))?;
    Ok(Input {
        role,
        path: path.display().to_string(),
        text,
    })
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn psd_input(input: &Input, tol: &Tolerance) -> Result<PsdMatrix> {
    make_psd(&io::parse_matrix(&input.text)?, tol)
}

fn psd_value(m: &PsdMatrix) -> Value {
    json!({
        "matrix": io::matrix_to_value(m.entries()),
        "eigenvalues": m.eigenvalues(),
        "rank": m.rank(),
    })
}

fn render(config: &RunConfig) -> Result<String> {
    let tol = config.tolerance.resolve()?;
    let command = config.command;
    if config.inputs.len() != command.arity() {
        return Err(Error::Parse(format!(
            "{} takes {} input file(s), got {}",
            command.name(),
            command.arity(),
            config.inputs.len()
        )));
    }
    let mut inputs = config
        .inputs
        .iter()
        .zip(command.roles())
        .map(|(path, &role)| read_input(role, path))
        .collect::<Result<Vec<_>>>()?;
    match (command, &config.vector) {
        (Command::RnWitness, None) => return Err(Error::Parse("rn-witness needs a vector y".into())),
        (Command::RnWitness, Some(spec)) => {
            let input = match spec.strip_prefix('@') {
                Some(path) => read_input("y", Path::new(path))?,
                None => Input {
                    role: "y",
                    path: "<argument>".into(),
                    text: spec.clone(),
                },
            };
            inputs.push(input);
        }
        (_, Some(_)) => return Err(Error::Parse(format!("{} does not take a vector", command.name()))),
        (_, None) => {}
    }

    let result = compute(command, &inputs, &tol)?;
    match config.format {
        Format::Json => {
            let hashes: Vec<Value> = inputs
                .iter()
                .map(|i| json!({ "role": i.role, "path": i.path, "sha256": sha256_hex(&i.text) }))
                .collect();
            let doc = json!({
                "command": command.name(),
                "inputs": hashes,
                "tolerance": io::tolerance_to_value(&tol),
                "result": result,
            });
            Ok(io::to_deterministic_string(&doc) + "\n")
        }
        Format::Text => Ok(text_report(command, &result)),
    }
}

fn compute(command: Command, inputs: &[Input], tol: &Tolerance) -> Result<Value> {
    let pair = || -> Result<(PsdMatrix, PsdMatrix)> { Ok((psd_input(&inputs[0], tol)?, psd_input(&inputs[1], tol)?)) };
    let value = match command {
        Command::Decompose => {
            let (a, b) = pair()?;
            let parts = decompose(&a, &b)?;
            json!({
                "b_abs": psd_value(&parts.b_abs),
                "b_sing": psd_value(&parts.b_sing),
                "m_dim": parts.m_basis.dim(),
                "m_basis": io::matrix_to_value(parts.m_basis.vectors()),
                "projection_p": io::matrix_to_value(&parts.projection_p),
            })
        }
        Command::ParallelSum => {
            let (a, b) = pair()?;
            json!({ "parallel_sum": psd_value(&parallel_sum(&a, &b)?) })
        }
        Command::Limit => {
            let (a, b) = pair()?;
            let traced = limit_ab_traced(&a, &b, tol)?;
            json!({
                "limit": psd_value(&traced.limit),
                "doublings": traced.doublings,
                "last_step": traced.last_step,
            })
        }
        Command::CheckAc => {
            let (a, b) = pair()?;
            json!({ "report": io::to_value(&check_ac(&a, &b)?) })
        }
        Command::CheckSingular => {
            let (a, b) = pair()?;
            json!({ "report": io::to_value(&check_singular(&a, &b)?) })
        }
        Command::CheckMutual => {
            let (a, b) = pair()?;
            json!({ "report": io::to_value(&check_mutual_ac(&a, &b)?) })
        }
        Command::Douglas => {
            let t1 = io::parse_matrix(&inputs[0].text)?;
            let t2 = io::parse_matrix(&inputs[1].text)?;
            let solution = douglas_solve(&t1, &t2, tol)?;
            let conditions = solution.conditions(&t1, &t2, tol);
            json!({
                "factor_d": io::matrix_to_value(&solution.factor_d),
                "alpha_min": solution.alpha_min,
                "conditions": io::to_value(&conditions),
                "conditions_hold": conditions.hold(frobenius(&t1)),
            })
        }
        Command::Alpha => {
            let (a, b) = pair()?;
            json!({ "alpha": domination_alpha(&a, &b)? })
        }
        Command::RnWitness => {
            let (a, b) = pair()?;
            let y = io::parse_vector(&inputs[2].text)?;
            let witness = rn_witness(&a, &b, &y)?;
            json!({
                "y": io::vector_to_value(&y),
                "z": io::vector_to_value(&witness.z),
                "residual": witness.residual,
            })
        }
        Command::Form => {
            let t = io::parse_form(&inputs[0].text, tol)?;
            let w = io::parse_form(&inputs[1].text, tol)?;
            let closable = is_closable(&t, &w)?;
            let (regular, singular) = form_decompose(&t, &w)?;
            json!({
                "closable": closable,
                "t_abs": io::form_to_value(&regular),
                "t_sing": io::form_to_value(&singular),
            })
        }
        Command::Measure => {
            let alpha = io::parse_measure(&inputs[0].text)?;
            let beta = io::parse_measure(&inputs[1].text)?;
            let (abs, sing) = measure_decompose(&alpha, &beta, tol)?;
            json!({
                "beta_abs": io::measure_to_value(&abs),
                "beta_sing": io::measure_to_value(&sing),
            })
        }
        Command::Functional => {
            let f = io::parse_functional(&inputs[0].text, tol)?;
            let g = io::parse_functional(&inputs[1].text, tol)?;
            let split = functional_decompose_detailed(&f, &g)?;
            json!({
                "g_abs": io::functional_to_value(&split.absolutely_continuous),
                "g_sing": io::functional_to_value(&split.singular),
                "sum_error": split.sum_error,
            })
        }
        Command::InducesMeasure => {
            let a = psd_input(&inputs[0], tol)?;
            json!({ "induces_measure": induces_measure(&a)? })
        }
    };
    Ok(value)
}

fn fmt_list(values: &Value) -> String {
    let items: Vec<String> = values
        .as_array()
        .map(|xs| xs.iter().map(fmt_scalar).collect())
        .unwrap_or_default();
    format!("[{}]", items.join(", "))
}

fn fmt_scalar(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => format!("{:.6e}", n.as_f64().unwrap_or(f64::NAN)),
        other => other.to_string(),
    }
}

fn text_fields(out: &mut String, prefix: &str, map: &Map<String, Value>) {
    for (key, value) in map {
        let name = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
        match value {
            Value::Object(inner) if inner.contains_key("entries") => {
                let _ = writeln!(out, "{name}: {} rows", inner["n"]);
            }
            Value::Object(inner) => text_fields(out, &name, inner),
            Value::Array(_) => {
                let _ = writeln!(out, "{name}: {}", fmt_list(value));
            }
            other => {
                let _ = writeln!(out, "{name}: {}", fmt_scalar(other));
            }
        }
    }
}

fn text_report(command: Command, result: &Value) -> String {
    let mut out = String::new();
    if command == Command::Decompose {
        let _ = writeln!(out, "eigenvalues(B_a): {}", fmt_list(&result["b_abs"]["eigenvalues"]));
        let _ = writeln!(out, "eigenvalues(B_s): {}", fmt_list(&result["b_sing"]["eigenvalues"]));
        let _ = writeln!(out, "dim M: {}", result["m_dim"]);
        return out;
    }
    if let Value::Object(map) = result {
        text_fields(&mut out, "", map);
    }
    out
}

//! Command runner behind the `invdecomp` binary: reads JSON inputs, runs a
//! named check or pipeline, and assembles a deterministic report.

pub mod acceptance;
pub mod schema;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::armature::class_label;
use crate::decompose::{
    lemma32_exchange, lift_by_q, lift_by_t, prop31_normalize, scramble, split_factors_in_lambda_form,
    thm1_descend, thm2_descend, DecompError, DecompositionWitness, Prop31,
};
use crate::gauge::ArmatureGauge;
use crate::oracle;
use crate::scalar::{BaseField, Fp, Rational};
use schema::{InputError, WitnessOrPresentation};

/// Primes accepted by `--field fp:<p>`.
/// Each one monomorphizes every pipeline, so the list stays short.
pub const SUPPORTED_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    GaugeCheck,
    Exchange,
    Normalize,
    DescendT,
    DescendQ,
    Residue,
    Factorize,
    Selftest,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::GaugeCheck => "gauge-check",
            Command::Exchange => "exchange",
            Command::Normalize => "normalize",
            Command::DescendT => "descend-t",
            Command::DescendQ => "descend-q",
            Command::Residue => "residue",
            Command::Factorize => "factorize",
            Command::Selftest => "selftest",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSel {
    Rational,
    Prime(u64),
}

impl FromStr for FieldSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "q" {
            return Ok(FieldSel::Rational);
        }
        let p: u64 = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| format!("expected `q` or `fp:<p>`, got {s:?}"))?;
        if p < 3 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(format!("{p} is not an odd prime"));
        }
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(format!("unsupported prime {p}; supported: {SUPPORTED_PRIMES:?}"));
        }
        Ok(FieldSel::Prime(p))
    }
}

impl fmt::Display for FieldSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSel::Rational => write!(f, "q"),
            FieldSel::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub seed: u64,
    /// Random samples for gauge checks.
    pub samples: usize,
    /// Scramble moves for the round-trip pipelines.
    pub moves: usize,
    pub field: FieldSel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Usage,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Usage => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Usage => "usage_error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub report: Value,
}

enum RunError {
    Usage(String),
    Contract(String),
}

impl From<InputError> for RunError {
    fn from(e: InputError) -> Self {
        RunError::Usage(e.to_string())
    }
}

impl From<DecompError> for RunError {
    fn from(e: DecompError) -> Self {
        RunError::Contract(e.to_string())
    }
}

fn contract(e: impl ToString) -> RunError {
    RunError::Contract(e.to_string())
}

macro_rules! with_prime {
    ($p:expr, $f:ident, $($arg:expr),*) => {
        match $p {
            3 => $f::<Fp<3>>($($arg),*),
            5 => $f::<Fp<5>>($($arg),*),
            7 => $f::<Fp<7>>($($arg),*),
            11 => $f::<Fp<11>>($($arg),*),
            13 => $f::<Fp<13>>($($arg),*),
            p => Err(RunError::Usage(format!("unsupported prime {p}"))),
        }
    };
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let result = if cfg.command == Command::Selftest {
        selftest(cfg)
    } else {
        match &cfg.input {
            None => Err(RunError::Usage(format!("{} needs an input file", cfg.command.name()))),
            Some(path) => match std::fs::read_to_string(path) {
                Err(e) => Err(RunError::Usage(format!("cannot read {}: {e}", path.display()))),
                Ok(text) => match cfg.field {
                    FieldSel::Rational => run_with::<Rational>(cfg, &text),
                    FieldSel::Prime(p) => with_prime!(p, run_with, cfg, &text),
                },
            },
        }
    };
    let (status, body) = match result {
        Ok((true, body)) => (Status::Pass, body),
        Ok((false, body)) => (Status::Fail, body),
        Err(RunError::Contract(msg)) => (Status::Fail, json!({ "error": msg })),
        Err(RunError::Usage(msg)) => (Status::Usage, json!({ "error": msg })),
    };
    let mut report = json!({
        "command": cfg.command.name(),
        "field": cfg.field.to_string(),
        "seed": cfg.seed,
        "status": status.label(),
    });
    if let (Value::Object(out), Value::Object(extra)) = (&mut report, body) {
        out.extend(extra);
    }
    Outcome { status, report }
}

fn selftest(cfg: &RunConfig) -> Result<(bool, Value), RunError> {
    if cfg.field != FieldSel::Rational {
        return Err(RunError::Usage("selftest runs over q only".into()));
    }
    let results = acceptance::run_acceptance(cfg.seed);
    let passed = results.iter().all(|r| r.passed);
    Ok((
        passed,
        json!({
            "criteria": results,
            "lines": results.iter().map(|r| r.line()).collect::<Vec<_>>(),
        }),
    ))
}

fn run_with<F: BaseField>(cfg: &RunConfig, text: &str) -> Result<(bool, Value), RunError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match cfg.command {
        Command::GaugeCheck => {
            let p = schema::presentation::<F>(&schema::from_json(text)?, "presentation")?;
            let gauge = ArmatureGauge::new(&p);
            let pairs: Vec<_> = (0..cfg.samples)
                .map(|_| {
                    (
                        oracle::random_element(&mut rng, &p, 4),
                        oracle::random_element(&mut rng, &p, 4),
                    )
                })
                .collect();
            let singles: Vec<_> = pairs.iter().map(|(x, _)| x.clone()).collect();
            let surm = gauge.check_surmultiplicative(&pairs);
            let special = gauge.check_special(&singles);
            let hom = gauge.check_homomorphism();
            let passed = surm.passed() && special.passed() && hom.passed();
            let grades: Vec<String> = (0..p.rank()).map(|k| gauge.grade(1 << k).to_string()).collect();
            Ok((
                passed,
                json!({
                    "generator_grades": grades,
                    "surmultiplicative": schema::report_json(&surm),
                    "special": schema::report_json(&special),
                    "homomorphism": schema::report_json(&hom),
                }),
            ))
        }
        Command::Exchange => {
            let spec: schema::ExchangeSpec = schema::from_json(text)?;
            let h1 = schema::algebra::<F>(&spec.first, "first")?;
            let h2 = schema::algebra::<F>(&spec.second, "second")?;
            let e = lemma32_exchange(&h1, &h2)?;
            let verification = e.witness.verify();
            let gens: Vec<Vec<String>> = e
                .input_generators
                .iter()
                .map(|(i, j)| vec![i.to_string(), j.to_string()])
                .collect();
            Ok((
                verification.passed(),
                json!({
                    "identity": e.identity,
                    "swapped": e.swapped,
                    "first": schema::factor_json(e.first()),
                    "second": schema::factor_json(e.second()),
                    "input_generators": gens,
                    "witness": schema::witness_json(&e.witness),
                }),
            ))
        }
        Command::Normalize => {
            let spec: schema::WitnessSpec = schema::from_json(text)?;
            let d = schema::witness::<F>(&spec)?;
            match prop31_normalize(&d) {
                Ok(n) => Ok((n.witness.verify().passed(), normalized_json(&n))),
                // the contradiction branch is an answer, not a failure
                Err(DecompError::Contradiction(residual)) => Ok((
                    true,
                    json!({ "outcome": "contradiction", "residual": residual }),
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::DescendT => {
            let (d, moves, input_split) = match schema::from_json(text)? {
                WitnessOrPresentation::Witness(w) => {
                    let d = schema::witness::<F>(&w)?;
                    let n = d.split_count.saturating_sub(1);
                    (d, Value::Null, n)
                }
                WitnessOrPresentation::Presentation(p) => {
                    let w = DecompositionWitness::standard(schema::presentation::<F>(&p, "presentation")?)?;
                    let (d, moves) = scramble(&lift_by_t(&w)?, cfg.moves, &mut rng, |_| true)?;
                    (d, serde_json::to_value(moves).unwrap(), w.split_count)
                }
            };
            let n = prop31_normalize(&d)?;
            let t = thm1_descend(&n)?;
            let verification = t.witness.verify();
            Ok((
                verification.passed() && t.witness.split_count >= input_split,
                json!({
                    "moves": moves,
                    "scrambled": schema::witness_json(&d),
                    "normalized": normalized_json(&n),
                    "central_class": class_label(t.central_class),
                    "descended": schema::witness_json(&t.witness),
                    "expected_split_count": input_split,
                }),
            ))
        }
        Command::DescendQ => {
            let (d, moves) = match schema::from_json(text)? {
                WitnessOrPresentation::Witness(w) => (schema::witness::<F>(&w)?, Value::Null),
                WitnessOrPresentation::Presentation(p) => {
                    let w = DecompositionWitness::standard(schema::presentation::<F>(&p, "presentation")?)?;
                    let lifted = lift_by_q(&w, (-1, -1))?;
                    if !split_factors_in_lambda_form(&lifted) {
                        return Err(contract("split factors must have the form Ad⟨⟨λ⟩⟩ = (1, λ)"));
                    }
                    let (d, moves) = scramble(&lifted, cfg.moves, &mut rng, split_factors_in_lambda_form)?;
                    (d, serde_json::to_value(moves).unwrap())
                }
            };
            let t = thm2_descend(&d)?;
            let verification = t.witness.verify();
            Ok((
                verification.passed() && t.witness.split_count == d.split_count,
                json!({
                    "moves": moves,
                    "scrambled": schema::witness_json(&d),
                    "lambdas": t.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                    "q_twist": t.lm22.twist.to_string(),
                    "descended": schema::witness_json(&t.witness),
                }),
            ))
        }
        Command::Residue => {
            let p = schema::presentation::<F>(&schema::from_json(text)?, "presentation")?;
            let rep = ArmatureGauge::new(&p).kernel_and_residue().map_err(contract)?;
            let alg = rep.degree0_algebra();
            let semisimple = alg.is_semisimple().ok();
            let idempotent = alg
                .central_idempotent()
                .ok()
                .map(|e| e.map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
            Ok((
                rep.cardinality_law_holds(),
                json!({
                    "kernel": rep.kernel.iter().map(|&c| class_label(c)).collect::<Vec<_>>(),
                    "image_size": rep.image_size,
                    "cardinality_law": rep.cardinality_law_holds(),
                    "residue": schema::presentation_json(&rep.residue),
                    "semisimple": semisimple,
                    "central_idempotent": idempotent,
                }),
            ))
        }
        Command::Factorize => {
            let p = schema::presentation::<F>(&schema::from_json(text)?, "presentation")?;
            let base = p.symplectic_base().map_err(contract)?;
            let w = DecompositionWitness::standard(p)?;
            let base: Vec<[String; 2]> = base.iter().map(|&(a, b)| [class_label(a), class_label(b)]).collect();
            Ok((
                w.verify().passed(),
                json!({
                    "symplectic_base": base,
                    "witness": schema::witness_json(&w),
                }),
            ))
        }
        Command::Selftest => unreachable!("handled before field dispatch"),
    }
}

fn normalized_json<F: BaseField>(n: &Prop31<F>) -> Value {
    json!({
        "outcome": "normalized",
        "a_prime": n.a_prime.to_string(),
        "steps": n.steps,
        "input_split_count": n.input_split_count,
        "witness": schema::witness_json(&n.witness),
    })
}

/// Report bytes: pretty JSON, or sorted `path: value` lines.
pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut lines = Vec::new();
            if let Some(Value::Array(pre)) = outcome.report.get("lines") {
                lines.extend(pre.iter().filter_map(|l| l.as_str().map(String::from)));
            }
            flatten("", &outcome.report, &mut lines);
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if prefix.is_empty() && k == "lines" {
                    continue;
                }
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) => {
            for (k, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{k}]"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}: {s}")),
        other => out.push(format!("{prefix}: {other}")),
    }
}

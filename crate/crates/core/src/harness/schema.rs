//! JSON input schemas and report serialization.
//!
//! Scalars are strings in the scalar grammar (`"3t"`, `"(1+t1)/t2"`);
//! elements are maps from class labels (`"0"`, `"e1+e3"`) to scalars.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::armature::{class_label, ArmatureElement, ArmaturePresentation, Class, MAX_GENERATORS};
use crate::decompose::{DecompositionWitness, WitnessFactor};
use crate::gauge::CheckReport;
use crate::quaternion::{QuatAlg, QuatElem, QuatInvolution};
use crate::scalar::{parse_scalar, BaseField, LaurentScalar};

type S<F> = LaurentScalar<F>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: column {column}: {message}")]
    Scalar {
        field: String,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

impl InputError {
    fn invalid(field: impl Into<String>, message: impl ToString) -> Self {
        InputError::Invalid {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

/// `(a, b)` over a tower of height `tower`, with involution `Int(u)∘γ`,
/// `u = twist[0] + twist[1] i + twist[2] j + twist[3] ij` (γ when absent).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub tower: usize,
    pub a: String,
    pub b: String,
    #[serde(default)]
    pub twist: Option<[String; 4]>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExchangeSpec {
    pub first: AlgebraSpec,
    pub second: AlgebraSpec,
}

/// Generator squares and involution signs; the pairing defaults to the
/// standard block form `(i₁, j₁, i₂, j₂, …)`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub tower: usize,
    pub squares: Vec<String>,
    pub signs: Vec<i8>,
    #[serde(default)]
    pub pairing: Option<Vec<Vec<i8>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub i: BTreeMap<String, String>,
    pub j: BTreeMap<String, String>,
    // written by reports, ignored on input
    #[serde(default)]
    pub algebra: Option<Value>,
    #[serde(default)]
    pub a: Option<Value>,
    #[serde(default)]
    pub b: Option<Value>,
    #[serde(default)]
    pub signs: Option<Value>,
    #[serde(default)]
    pub twist: Option<Value>,
    #[serde(default)]
    pub split: Option<Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    pub presentation: PresentationSpec,
    pub factors: Vec<FactorSpec>,
    #[serde(default)]
    pub split_count: Option<Value>,
    #[serde(default)]
    pub verification: Option<Value>,
}

/// Either a full witness or a bare presentation.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum WitnessOrPresentation {
    Witness(WitnessSpec),
    Presentation(PresentationSpec),
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn scalar<F: BaseField>(field: &str, src: &str, arity: usize) -> Result<S<F>, InputError> {
    parse_scalar(src, arity).map_err(|e| InputError::Scalar {
        field: field.to_string(),
        column: e.column,
        message: e.message,
    })
}

pub fn parse_class(label: &str) -> Option<Class> {
    let label = label.trim();
    if label == "0" {
        return Some(0);
    }
    let mut c: Class = 0;
    for part in label.split('+') {
        let k: usize = part.trim().strip_prefix('e')?.parse().ok()?;
        if k == 0 || k > MAX_GENERATORS {
            return None;
        }
        c ^= 1 << (k - 1);
    }
    Some(c)
}

pub fn algebra<F: BaseField>(
    spec: &AlgebraSpec,
    field: &str,
) -> Result<QuatInvolution<F>, InputError> {
    let n = spec.tower;
    let a = scalar(&format!("{field}.a"), &spec.a, n)?;
    let b = scalar(&format!("{field}.b"), &spec.b, n)?;
    let alg = QuatAlg::new(a, b)
        .map_err(|e| InputError::invalid(field, e))?
        .with_arity(n);
    let u = match &spec.twist {
        None => QuatElem::basis(0),
        Some(c) => {
            let mut x = Vec::with_capacity(4);
            for (k, src) in c.iter().enumerate() {
                x.push(scalar(&format!("{field}.twist[{k}]"), src, n)?);
            }
            QuatElem::new(x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone())
        }
    };
    QuatInvolution::twisted(&alg, u).map_err(|e| InputError::invalid(format!("{field}.twist"), e))
}

pub fn presentation<F: BaseField>(
    spec: &PresentationSpec,
    field: &str,
) -> Result<ArmaturePresentation<F>, InputError> {
    let n = spec.tower;
    let squares = spec
        .squares
        .iter()
        .enumerate()
        .map(|(k, s)| scalar(&format!("{field}.squares[{k}]"), s, n))
        .collect::<Result<Vec<_>, _>>()?;
    let p = match &spec.pairing {
        Some(m) => ArmaturePresentation::new(n, squares, m.clone(), spec.signs.clone()),
        None => ArmaturePresentation::standard(n, squares, spec.signs.clone()),
    };
    p.map(|p| p.with_arity(n)).map_err(|e| InputError::invalid(field, e))
}

pub fn element<F: BaseField>(
    map: &BTreeMap<String, String>,
    field: &str,
    rank: usize,
    arity: usize,
) -> Result<ArmatureElement<F>, InputError> {
    let mut x = ArmatureElement::zero();
    for (label, src) in map {
        let c = parse_class(label)
            .filter(|&c| c >> rank == 0)
            .ok_or_else(|| InputError::invalid(field, format!("bad class label {label:?}")))?;
        x = x.add(&ArmatureElement::term(c, scalar(&format!("{field}[{label}]"), src, arity)?));
    }
    Ok(x)
}

pub fn witness<F: BaseField>(spec: &WitnessSpec) -> Result<DecompositionWitness<F>, InputError> {
    let p = presentation::<F>(&spec.presentation, "presentation")?;
    let mut images = Vec::new();
    for (k, f) in spec.factors.iter().enumerate() {
        let i = element(&f.i, &format!("factors[{k}].i"), p.rank(), p.arity())?;
        let j = element(&f.j, &format!("factors[{k}].j"), p.rank(), p.arity())?;
        images.push((i, j));
    }
    DecompositionWitness::from_images(p, images).map_err(|e| InputError::invalid("factors", e))
}

// ---------------------------------------------------------------------------
// output

pub fn element_json<F: BaseField>(x: &ArmatureElement<F>) -> Value {
    let map: serde_json::Map<String, Value> = x
        .terms()
        .map(|(c, s)| (class_label(c), Value::String(s.to_string())))
        .collect();
    Value::Object(map)
}

pub fn presentation_json<F: BaseField>(p: &ArmaturePresentation<F>) -> Value {
    json!({
        "tower": p.arity(),
        "squares": p.squares().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "signs": p.signs(),
        "pairing": p.pairing_matrix(),
    })
}

pub fn factor_json<F: BaseField>(f: &WitnessFactor<F>) -> Value {
    json!({
        "algebra": f.symbol(),
        "a": f.alg.a().to_string(),
        "b": f.alg.b().to_string(),
        "signs": [f.signs.0, f.signs.1],
        "twist": f.inv.twist().to_string(),
        "split": f.split,
        "i": element_json(&f.i_image),
        "j": element_json(&f.j_image),
    })
}

pub fn report_json(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("serializable report")
}

/// Re-readable as a [`WitnessSpec`], plus derived fields.
pub fn witness_json<F: BaseField>(w: &DecompositionWitness<F>) -> Value {
    json!({
        "presentation": presentation_json(&w.source),
        "factors": w.factors.iter().map(factor_json).collect::<Vec<_>>(),
        "split_count": w.split_count,
        "verification": report_json(&w.verify()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn class_labels_round_trip() {
        for c in [0, 1, 5, 0b1011_0000] {
            assert_eq!(parse_class(&class_label(c)), Some(c));
        }
        assert_eq!(parse_class("e0"), None);
        assert_eq!(parse_class("x1"), None);
    }

    #[test]
    fn witness_json_reads_back() {
        let spec: WitnessSpec = from_json(
            r#"{"presentation": {"tower": 1, "squares": ["-1", "-1", "1", "t"], "signs": [-1, -1, 1, -1]},
                "factors": [{"i": {"e1": "1"}, "j": {"e2": "1"}}, {"i": {"e3": "1"}, "j": {"e4": "1"}}]}"#,
        )
        .unwrap();
        let w = witness::<Rational>(&spec).unwrap();
        let text = witness_json(&w).to_string();
        let again: WitnessSpec = from_json(&text).unwrap();
        let w2 = witness::<Rational>(&again).unwrap();
        assert_eq!(w2.images(), w.images());
        assert_eq!(w2.split_count, 1);
    }

    #[test]
    fn errors_carry_positions() {
        let bad = from_json::<PresentationSpec>("{\n  \"tower\": 1,\n  \"squares\": [1]\n}");
        assert!(matches!(bad, Err(InputError::Json { line: 3, .. })));
        let spec = AlgebraSpec {
            tower: 1,
            a: "t^^2".into(),
            b: "1".into(),
            twist: None,
        };
        assert_eq!(
            algebra::<Rational>(&spec, "first").unwrap_err(),
            InputError::Scalar {
                field: "first.a".into(),
                column: 3,
                message: parse_scalar::<Rational>("t^^2", 1).unwrap_err().message,
            }
        );
    }
}

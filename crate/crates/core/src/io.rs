//! JSON file formats for operad presentations and braidings.
//!
//! Scalars are always strings, `"p"` or `"p/q"`, so that values round-trip
//! exactly.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, BraidedSpace};
use crate::coherence::UnitAction;
use crate::linalg::{format_rational, parse_rational, LinalgError, Matrix, Rational};
use crate::operad::{LeftTerm, OperadError, OperadPresentation, QuadraticRelation, RightTerm};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] LinalgError),
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("braiding matrix must have {expected} rows of {expected} entries")]
    BadBraidingShape { expected: usize },
}

#[derive(Serialize, Deserialize)]
struct RawLeft {
    inner: String,
    outer: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RawRight {
    outer: String,
    inner: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RawRelation {
    #[serde(default)]
    left: Vec<RawLeft>,
    #[serde(default)]
    right: Vec<RawRight>,
}

#[derive(Serialize, Deserialize)]
struct RawUnitAction {
    alpha: BTreeMap<String, String>,
    beta: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct RawOperad {
    name: String,
    generators: Vec<String>,
    star: BTreeMap<String, String>,
    #[serde(default)]
    relations: Vec<RawRelation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit_action: Option<RawUnitAction>,
}

/// A parsed operad file: the presentation and, if present, its unit action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadFile {
    pub presentation: OperadPresentation,
    pub unit_action: Option<UnitAction>,
}

fn index_of(names: &[String], name: &str) -> Result<usize, IoError> {
    names
        .iter()
        .position(|g| g == name)
        .ok_or_else(|| IoError::UnknownGenerator(name.to_string()))
}

/// Reads `{name: rational}` into generator coordinates; missing names are 0.
fn dual_vector(names: &[String], map: &BTreeMap<String, String>) -> Result<Vec<Rational>, IoError> {
    let mut v = vec![Rational::zero(); names.len()];
    for (name, value) in map {
        v[index_of(names, name)?] = parse_rational(value)?;
    }
    Ok(v)
}

fn named_map(names: &[String], v: &[Rational]) -> BTreeMap<String, String> {
    names
        .iter()
        .zip(v)
        .map(|(n, c)| (n.clone(), format_rational(c)))
        .collect()
}

pub fn parse_operad(text: &str) -> Result<OperadFile, IoError> {
    let raw: RawOperad = serde_json::from_str(text)?;
    let names = raw.generators;
    for (i, g) in names.iter().enumerate() {
        if names[..i].contains(g) {
            return Err(IoError::DuplicateGenerator(g.clone()));
        }
    }
    let star = dual_vector(&names, &raw.star)?;
    let mut relations = Vec::with_capacity(raw.relations.len());
    for r in raw.relations {
        let left = r
            .left
            .iter()
            .map(|t| {
                Ok(LeftTerm {
                    inner: index_of(&names, &t.inner)?,
                    outer: index_of(&names, &t.outer)?,
                    coeff: parse_rational(&t.coeff)?,
                })
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        let right = r
            .right
            .iter()
            .map(|t| {
                Ok(RightTerm {
                    outer: index_of(&names, &t.outer)?,
                    inner: index_of(&names, &t.inner)?,
                    coeff: parse_rational(&t.coeff)?,
                })
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        relations.push(QuadraticRelation { left, right });
    }
    let unit_action = raw
        .unit_action
        .map(|ua| -> Result<UnitAction, IoError> {
            Ok(UnitAction::new(
                dual_vector(&names, &ua.alpha)?,
                dual_vector(&names, &ua.beta)?,
            ))
        })
        .transpose()?;
    let presentation = OperadPresentation::new(raw.name, names, star, relations)?;
    Ok(OperadFile {
        presentation,
        unit_action,
    })
}

pub fn operad_to_json(file: &OperadFile) -> String {
    let p = &file.presentation;
    let names = p.generator_names();
    let raw = RawOperad {
        name: p.name().to_string(),
        generators: names.to_vec(),
        star: named_map(names, p.star()),
        relations: p
            .relations()
            .iter()
            .map(|r| RawRelation {
                left: r
                    .left
                    .iter()
                    .map(|t| RawLeft {
                        inner: names[t.inner].clone(),
                        outer: names[t.outer].clone(),
                        coeff: format_rational(&t.coeff),
                    })
                    .collect(),
                right: r
                    .right
                    .iter()
                    .map(|t| RawRight {
                        outer: names[t.outer].clone(),
                        inner: names[t.inner].clone(),
                        coeff: format_rational(&t.coeff),
                    })
                    .collect(),
            })
            .collect(),
        unit_action: file.unit_action.as_ref().map(|ua| RawUnitAction {
            alpha: named_map(names, ua.alpha()),
            beta: named_map(names, ua.beta()),
        }),
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct RawBraiding {
    dim: usize,
    sigma: Vec<Vec<String>>,
}

pub fn parse_braiding(text: &str) -> Result<BraidedSpace, IoError> {
    let raw: RawBraiding = serde_json::from_str(text)?;
    let dd = raw.dim * raw.dim;
    if raw.sigma.len() != dd || raw.sigma.iter().any(|r| r.len() != dd) {
        return Err(IoError::BadBraidingShape { expected: dd });
    }
    let rows = raw
        .sigma
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect())
        .collect::<Result<Vec<Vec<Rational>>, LinalgError>>()?;
    let m = Matrix::from_rows(dd, rows)?;
    Ok(BraidedSpace::new(raw.dim, m)?)
}

pub fn braiding_to_json(space: &BraidedSpace) -> String {
    let raw = RawBraiding {
        dim: space.dim(),
        sigma: space
            .sigma()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect(),
    };
    serde_json::to_string(&raw).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};
    use crate::presets;

    #[test]
    fn preset_round_trip() {
        for name in presets::NAMES {
            let file = parse_operad(presets::source(name).unwrap()).unwrap();
            let again = parse_operad(&operad_to_json(&file)).unwrap();
            assert_eq!(file, again);
        }
    }

    #[test]
    fn braiding_round_trip() {
        let q = vec![vec![rat(1), frac(-3, 7)], vec![frac(-7, 3), rat(2)]];
        let space = BraidedSpace::diagonal(&q);
        let text = braiding_to_json(&space);
        assert!(text.contains("\"-3/7\""));
        assert_eq!(parse_braiding(&text).unwrap(), space);
    }

    #[test]
    fn input_errors() {
        assert!(matches!(parse_operad("{"), Err(IoError::Json(_))));
        let bad_gen = r#"{"name":"x","generators":["m"],"star":{"n":"1"}}"#;
        assert!(matches!(
            parse_operad(bad_gen),
            Err(IoError::UnknownGenerator(_))
        ));
        let bad_rat = r#"{"name":"x","generators":["m"],"star":{"m":"1/0"}}"#;
        assert!(matches!(parse_operad(bad_rat), Err(IoError::Rational(_))));
        let zero_star = r#"{"name":"x","generators":["m"],"star":{"m":"0"}}"#;
        assert!(matches!(
            parse_operad(zero_star),
            Err(IoError::Operad(OperadError::BadStar))
        ));
        let shape = r#"{"dim":2,"sigma":[["1"]]}"#;
        assert!(matches!(
            parse_braiding(shape),
            Err(IoError::BadBraidingShape { expected: 4 })
        ));
    }
}

//! JSON input documents.

use std::fs;
use std::path::Path;

use ditlab::classical::{JointDist, ProbDist};
use ditlab::density::{DensityMatrix, StateVector};
use ditlab::linalg::{c, CMatrix, CVector};
use ditlab::quantum::Observable;
use ditlab::weight::parse_rational;
use ditlab::{Partition, Universe};
use num_rational::BigRational;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Number(f64),
}

type Complex = [f64; 2];

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputDocument {
    Partition { n: usize, blocks: Vec<Vec<usize>> },
    Dist { weights: Vec<Scalar> },
    Joint { x: usize, y: usize, matrix: Vec<Vec<Scalar>> },
    Formula { text: String },
    State { amplitudes: Vec<Complex> },
    Observable { eigenbasis: Option<Vec<Vec<Complex>>>, eigenvalues: Vec<f64> },
    Density { matrix: Vec<Vec<Complex>> },
}

impl InputDocument {
    fn kind(&self) -> &'static str {
        match self {
            InputDocument::Partition { .. } => "partition",
            InputDocument::Dist { .. } => "dist",
            InputDocument::Joint { .. } => "joint",
            InputDocument::Formula { .. } => "formula",
            InputDocument::State { .. } => "state",
            InputDocument::Observable { .. } => "observable",
            InputDocument::Density { .. } => "density",
        }
    }
}

/// A parsed document together with the digest of its bytes.
pub struct Loaded {
    pub sha256: String,
    pub doc: InputDocument,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
    let doc = serde_json::from_slice(&bytes).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))?;
    Ok(Loaded { sha256: digest(&bytes), doc })
}

fn wrong_kind(want: &str, got: &InputDocument) -> CliError {
    CliError::Schema(format!("expected a {want} document, found {}", got.kind()))
}

pub fn partition(doc: &InputDocument) -> Result<Partition, CliError> {
    match doc {
        InputDocument::Partition { n, blocks } => Ok(Partition::new(Universe::new(*n)?, blocks.clone())?),
        other => Err(wrong_kind("partition", other)),
    }
}

/// Weights in one arithmetic: all strings (rational) or all numbers (float).
pub enum Weights {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

fn weights(values: &[Scalar]) -> Result<Weights, CliError> {
    if values.iter().all(|v| matches!(v, Scalar::Text(_))) {
        let parsed = values
            .iter()
            .map(|v| match v {
                Scalar::Text(t) => parse_rational(t).ok_or_else(|| CliError::Schema(format!("not a rational: {t:?}"))),
                Scalar::Number(_) => unreachable!(),
            })
            .collect::<Result<_, _>>()?;
        Ok(Weights::Exact(parsed))
    } else if values.iter().all(|v| matches!(v, Scalar::Number(_))) {
        Ok(Weights::Float(values.iter().map(|v| if let Scalar::Number(x) = v { *x } else { 0.0 }).collect()))
    } else {
        Err(CliError::Schema("weights mix rational strings and floats".into()))
    }
}

pub enum Dist {
    Exact(ProbDist<BigRational>),
    Float(ProbDist<f64>),
}

pub fn dist(doc: &InputDocument) -> Result<Dist, CliError> {
    match doc {
        InputDocument::Dist { weights: w } => Ok(match weights(w)? {
            Weights::Exact(v) => Dist::Exact(ProbDist::new(v)?),
            Weights::Float(v) => Dist::Float(ProbDist::new(v)?),
        }),
        other => Err(wrong_kind("dist", other)),
    }
}

pub enum Joint {
    Exact(JointDist<BigRational>),
    Float(JointDist<f64>),
}

pub fn joint(doc: &InputDocument) -> Result<Joint, CliError> {
    match doc {
        InputDocument::Joint { x, y, matrix } => {
            if matrix.len() != *x || matrix.iter().any(|row| row.len() != *y) {
                return Err(CliError::Schema(format!("joint matrix is not {x}x{y}")));
            }
            let flat: Vec<Scalar> = matrix.iter().flatten().cloned().collect();
            Ok(match weights(&flat)? {
                Weights::Exact(v) => Joint::Exact(JointDist::new(rows(&v, *y))?),
                Weights::Float(v) => Joint::Float(JointDist::new(rows(&v, *y))?),
            })
        }
        other => Err(wrong_kind("joint", other)),
    }
}

fn rows<T: Clone>(flat: &[T], width: usize) -> Vec<Vec<T>> {
    flat.chunks(width).map(|r| r.to_vec()).collect()
}

pub fn formula_text(doc: &InputDocument) -> Result<String, CliError> {
    match doc {
        InputDocument::Formula { text } => Ok(text.clone()),
        other => Err(wrong_kind("formula", other)),
    }
}

fn square(rows: &[Vec<Complex>]) -> Result<CMatrix, CliError> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Schema("matrix must be square and non-empty".into()));
    }
    Ok(CMatrix::from_fn(n, n, |j, k| c(rows[j][k][0], rows[j][k][1])))
}

pub fn state(doc: &InputDocument) -> Result<StateVector, CliError> {
    match doc {
        InputDocument::State { amplitudes } => {
            let v = CVector::from_iterator(amplitudes.len(), amplitudes.iter().map(|a| c(a[0], a[1])));
            Ok(StateVector::new(v)?)
        }
        other => Err(wrong_kind("state", other)),
    }
}

pub fn observable(doc: &InputDocument) -> Result<Observable, CliError> {
    match doc {
        InputDocument::Observable { eigenbasis: None, eigenvalues } => Ok(Observable::diagonal(eigenvalues.clone())?),
        InputDocument::Observable { eigenbasis: Some(rows), eigenvalues } => {
            Ok(Observable::new(square(rows)?, eigenvalues.clone())?)
        }
        other => Err(wrong_kind("observable", other)),
    }
}

/// A density document, or a state document read as its pure density matrix.
pub fn density(doc: &InputDocument) -> Result<DensityMatrix, CliError> {
    match doc {
        InputDocument::Density { matrix } => Ok(DensityMatrix::validate(square(matrix)?)?),
        InputDocument::State { .. } => Ok(state(doc)?.density()),
        other => Err(wrong_kind("density", other)),
    }
}

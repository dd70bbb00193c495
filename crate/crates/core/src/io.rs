//! JSON documents: algebras, bivectors, cocycles and bilinear forms.
//!
//! Scalars are strings `"p"` or `"p/q"`. Files are written as pretty JSON
//! followed by a newline, and reading then writing a canonical file gives
//! back the same bytes.

use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra, Vector};
use crate::bialgebra::Cocycle;
use crate::geometry::{self, GeometryError, OrthogonalStructure};
use crate::linalg::Matrix;
use crate::multivector::Bivector;
use crate::oscillator::{self, OscillatorAlgebra, OscillatorError};
use crate::scalar::{self, ParseScalarError, Scalar};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("invalid oscillator parameters: {0}")]
    Oscillator(#[from] OscillatorError),
    #[error("invalid form: {0}")]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OscillatorSpec {
    pub lambda: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

/// Structure constants listed for `i < j`; missing pairs bracket to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAlgebraSpec {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Oscillator { oscillator: OscillatorSpec },
    Explicit(ExplicitAlgebraSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntrySpec {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

/// Skew entries for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BivectorSpec {
    pub entries: Vec<EntrySpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormSpec {
    /// `"k_lambda"` on an oscillator algebra, `"sl2_trace"` on sl(2).
    Builtin { builtin: String },
    /// Symmetric entries for `i ≤ j`.
    Entries { entries: Vec<EntrySpec> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bivector: Option<BivectorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Vec<BivectorSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<ExplicitAlgebraSpec>,
}

/// An algebra read from a document, remembering the oscillator structure when
/// it was given by the shorthand.
#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub algebra: LieAlgebra,
    pub oscillator: Option<OscillatorAlgebra>,
}

fn parse_all(xs: &[String]) -> Result<Vec<Scalar>, IoError> {
    xs.iter().map(|s| scalar::parse(s).map_err(IoError::from)).collect()
}

fn format_all(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(scalar::format).collect()
}

impl ExplicitAlgebraSpec {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let d = g.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let v = g.structure(i, j);
                if !v.is_zero() {
                    brackets.push(BracketSpec { i, j, coeffs: format_all(v.components()) });
                }
            }
        }
        Self { dim: d, labels: g.labels().to_vec(), brackets }
    }

    pub fn build(&self) -> Result<LieAlgebra, IoError> {
        let d = self.dim;
        if self.labels.len() != d {
            return Err(IoError::Invalid(format!("{} labels for dimension {d}", self.labels.len())));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            if b.i >= b.j || b.j >= d {
                return Err(IoError::Invalid(format!("bracket ({}, {}) must satisfy i < j < {d}", b.i, b.j)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(IoError::Invalid(format!("bracket ({}, {}) listed twice", b.i, b.j)));
            }
            if b.coeffs.len() != d {
                return Err(IoError::Invalid(format!("bracket ({}, {}) has {} coefficients", b.i, b.j, b.coeffs.len())));
            }
            out.push((b.i, b.j, Vector::new(parse_all(&b.coeffs)?)));
        }
        Ok(LieAlgebra::from_upper_brackets(self.labels.clone(), out)?)
    }
}

impl AlgebraSpec {
    pub fn oscillator(lambda: &[Scalar]) -> Self {
        AlgebraSpec::Oscillator { oscillator: OscillatorSpec { lambda: format_all(lambda) } }
    }

    pub fn load(&self) -> Result<LoadedAlgebra, IoError> {
        match self {
            AlgebraSpec::Oscillator { oscillator: o } => {
                let g = oscillator::build_oscillator(&parse_all(&o.lambda)?)?;
                Ok(LoadedAlgebra { algebra: g.algebra().clone(), oscillator: Some(g) })
            }
            AlgebraSpec::Explicit(e) => Ok(LoadedAlgebra { algebra: e.build()?, oscillator: None }),
        }
    }

    /// Expands the oscillator shorthand.
    pub fn expanded(&self) -> Result<ExplicitAlgebraSpec, IoError> {
        match self {
            AlgebraSpec::Explicit(e) => Ok(e.clone()),
            AlgebraSpec::Oscillator { .. } => Ok(ExplicitAlgebraSpec::from_algebra(&self.load()?.algebra)),
        }
    }
}

fn check_entry(e: &EntrySpec, dim: usize, strict: bool) -> Result<(), IoError> {
    let ok = if strict { e.i < e.j } else { e.i <= e.j };
    if !ok || e.j >= dim {
        let rel = if strict { "<" } else { "≤" };
        return Err(IoError::Invalid(format!("entry ({}, {}) must satisfy i {rel} j < {dim}", e.i, e.j)));
    }
    Ok(())
}

impl BivectorSpec {
    pub fn from_bivector(r: &Bivector) -> Self {
        let entries = r
            .upper_entries()
            .filter(|(_, _, v)| !v.is_zero())
            .map(|(i, j, v)| EntrySpec { i, j, value: scalar::format(v) })
            .collect();
        Self { entries }
    }

    pub fn to_bivector(&self, dim: usize) -> Result<Bivector, IoError> {
        let mut r = Bivector::zero(dim);
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.entries {
            check_entry(e, dim, true)?;
            if !seen.insert((e.i, e.j)) {
                return Err(IoError::Invalid(format!("entry ({}, {}) listed twice", e.i, e.j)));
            }
            r.set(e.i, e.j, scalar::parse(&e.value)?);
        }
        Ok(r)
    }
}

pub fn cocycle_to_spec(xi: &Cocycle) -> Vec<BivectorSpec> {
    xi.images().iter().map(BivectorSpec::from_bivector).collect()
}

pub fn cocycle_from_spec(specs: &[BivectorSpec], dim: usize) -> Result<Cocycle, IoError> {
    if specs.len() != dim {
        return Err(IoError::Invalid(format!("cocycle needs {dim} images, got {}", specs.len())));
    }
    let images = specs.iter().map(|s| s.to_bivector(dim)).collect::<Result<Vec<_>, _>>()?;
    Cocycle::new(images).map_err(|e| IoError::Invalid(e.to_string()))
}

impl FormSpec {
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for j in i..m.cols() {
                if !m[(i, j)].is_zero() {
                    entries.push(EntrySpec { i, j, value: scalar::format(&m[(i, j)]) });
                }
            }
        }
        FormSpec::Entries { entries }
    }

    pub fn to_matrix(&self, g: &LoadedAlgebra) -> Result<Matrix, IoError> {
        let d = g.algebra.dim();
        match self {
            FormSpec::Builtin { builtin } => match (builtin.as_str(), &g.oscillator) {
                ("k_lambda", Some(o)) => Ok(o.k_lambda()?.matrix().clone()),
                ("k_lambda", None) => Err(IoError::Invalid("k_lambda needs an oscillator algebra".into())),
                ("sl2_trace", _) if d == 3 => Ok(geometry::sl2_trace_form()),
                ("sl2_trace", _) => Err(IoError::Invalid("sl2_trace needs a 3-dimensional algebra".into())),
                (other, _) => Err(IoError::Invalid(format!("unknown builtin form {other:?}"))),
            },
            FormSpec::Entries { entries } => {
                let mut m = Matrix::zeros(d, d);
                for e in entries {
                    check_entry(e, d, false)?;
                    let v = scalar::parse(&e.value)?;
                    m[(e.i, e.j)] = v.clone();
                    m[(e.j, e.i)] = v;
                }
                Ok(m)
            }
        }
    }

    pub fn load(&self, g: &LoadedAlgebra) -> Result<OrthogonalStructure, IoError> {
        Ok(geometry::validate_orthogonal(&g.algebra, &self.to_matrix(g)?)?)
    }
}

impl Document {
    pub fn new(algebra: AlgebraSpec) -> Self {
        Self { algebra, bivector: None, cocycle: None, form: None, dual: None }
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, IoError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
        Self::from_json(&text)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        to_canonical_string(self)
    }

    pub fn bivector(&self, g: &LoadedAlgebra) -> Result<Option<Bivector>, IoError> {
        self.bivector.as_ref().map(|b| b.to_bivector(g.algebra.dim())).transpose()
    }

    pub fn cocycle(&self, g: &LoadedAlgebra) -> Result<Option<Cocycle>, IoError> {
        self.cocycle.as_ref().map(|c| cocycle_from_spec(c, g.algebra.dim())).transpose()
    }
}

pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    std::fs::write(path, text).map_err(|source| IoError::Write { path: path.display().to_string(), source })
}

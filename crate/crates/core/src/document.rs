//! JSON space documents.
//!
//! ```json
//! {
//!   "points": ["a", "b"],
//!   "opens": [[], ["a"], ["a", "b"]],
//!   "aura": { "a": ["a"], "b": ["a", "b"] },
//!   "name": "sierpinski"
//! }
//! ```
//!
//! `opens` must list a full topology. The canonical serializer emits the keys
//! in the order `points`, `opens`, `aura`, `name`, sets as sorted label
//! arrays, opens in canonical family order and aura entries in point order.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aura::{AuraError, AuraSpace, ScopeFunction};
use crate::finite_space::FiniteTopSpace;
use crate::pointset::{PointSet, Universe, UniverseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: unknown point `{label}`")]
    UnknownPoint { path: String, label: String },
    #[error("{path}: duplicate point `{label}`")]
    DuplicatePoint { path: String, label: String },
    #[error("points: {0} points exceed the supported maximum")]
    TooManyPoints(usize),
    #[error("aura: no entry for point `{0}`")]
    MissingAura(String),
    #[error("aura.{0}: value is not listed in opens")]
    OpenSetNotInTopology(String),
    #[error("aura.{0}: point is not in its own aura")]
    PointNotInOwnAura(String),
    #[error("opens: {0}")]
    TopologyAxiomViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    pub aura: IndexMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl SpaceDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_space(&self) -> Result<AuraSpace, DocumentError> {
        let universe = Universe::new(self.points.iter().cloned()).map_err(|e| match e {
            UniverseError::DuplicateLabel(label) => DocumentError::DuplicatePoint {
                path: "points".into(),
                label,
            },
            UniverseError::TooLarge(n) => DocumentError::TooManyPoints(n),
            other => DocumentError::TopologyAxiomViolation(other.to_string()),
        })?;
        let universe = Arc::new(universe);

        let resolve = |path: String, labels: &[String]| -> Result<PointSet, DocumentError> {
            labels.iter().try_fold(PointSet::EMPTY, |acc, l| {
                universe
                    .index_of(l)
                    .map(|i| acc.with(i))
                    .map_err(|_| DocumentError::UnknownPoint {
                        path: path.clone(),
                        label: l.clone(),
                    })
            })
        };

        let mut opens = Vec::with_capacity(self.opens.len());
        for (i, labels) in self.opens.iter().enumerate() {
            opens.push(resolve(format!("opens[{i}]"), labels)?);
        }
        for key in self.aura.keys() {
            if universe.index_of(key).is_err() {
                return Err(DocumentError::UnknownPoint {
                    path: "aura".into(),
                    label: key.clone(),
                });
            }
        }
        let mut aura = Vec::with_capacity(universe.len());
        for label in universe.names() {
            let value = self
                .aura
                .get(label)
                .ok_or_else(|| DocumentError::MissingAura(label.clone()))?;
            aura.push(resolve(format!("aura.{label}"), value)?);
        }

        let space = FiniteTopSpace::validate(universe.clone(), opens).map_err(|e| {
            DocumentError::TopologyAxiomViolation(describe_topology_error(&universe, &e))
        })?;
        AuraSpace::new(Arc::new(space), ScopeFunction::new(aura)).map_err(|e| match e {
            AuraError::OpenSetNotInTopology(x) => {
                DocumentError::OpenSetNotInTopology(universe.name(x).to_string())
            }
            AuraError::PointNotInOwnAura(x) => {
                DocumentError::PointNotInOwnAura(universe.name(x).to_string())
            }
            AuraError::WrongLength { .. } => DocumentError::TopologyAxiomViolation(e.to_string()),
        })
    }

    pub fn from_space(space: &AuraSpace, name: Option<String>) -> Self {
        let u = space.universe();
        let labels =
            |s: PointSet| -> Vec<String> { u.labels(s).into_iter().map(String::from).collect() };
        SpaceDocument {
            points: u.names().to_vec(),
            opens: space
                .space()
                .topology()
                .opens()
                .iter()
                .map(|&s| labels(s))
                .collect(),
            aura: (0..space.len())
                .map(|x| (u.name(x).to_string(), labels(space.aura(x))))
                .collect(),
            name,
        }
    }

    /// Canonical pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

fn describe_topology_error(u: &Universe, e: &crate::finite_space::TopologyError) -> String {
    use crate::finite_space::TopologyError::*;
    match e {
        MissingEmpty => "the empty set is missing".into(),
        MissingWhole => "the whole space is missing".into(),
        NotClosedUnderUnion(a, b) => format!(
            "not closed under union: {} ∪ {} is missing",
            u.format_set(*a),
            u.format_set(*b)
        ),
        NotClosedUnderIntersection(a, b) => format!(
            "not closed under intersection: {} ∩ {} is missing",
            u.format_set(*a),
            u.format_set(*b)
        ),
        Universe(inner) => inner.to_string(),
    }
}

/// Parses and validates a space document in one step.
pub fn parse_space(text: &str) -> Result<AuraSpace, DocumentError> {
    SpaceDocument::parse(text)?.to_space()
}

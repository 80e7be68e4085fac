//! JSON document format for oriented hypergraphs.
//!
//! ```json
//! {"name": "optional", "vertices": ["a", "b"], "edges": [{"tails": ["a"], "heads": ["b"]}]}
//! ```
//!
//! Vertex and edge order in the document fixes every basis and matrix layout.

use hypergraph_homology::{EdgeSpec, HypergraphSpec, OrientedHypergraph, Violation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub tails: Vec<String>,
    pub heads: Vec<String>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid hypergraph: {}", join(.0))]
    Invalid(Vec<Violation>),
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl HypergraphDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn from_hypergraph(h: &OrientedHypergraph, name: Option<String>) -> Self {
        let spec = h.to_spec();
        HypergraphDocument {
            name,
            vertices: spec.vertices,
            edges: spec
                .edges
                .into_iter()
                .map(|e| EdgeDocument {
                    tails: e.tails,
                    heads: e.heads,
                })
                .collect(),
        }
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        HypergraphSpec {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec::new(e.tails.iter().cloned(), e.heads.iter().cloned()))
                .collect(),
        }
    }

    /// Every violated invariant, empty when the document is valid.
    pub fn validate(&self) -> Vec<Violation> {
        self.to_spec().validate()
    }

    pub fn to_hypergraph(&self) -> Result<OrientedHypergraph, DocumentError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(DocumentError::Invalid(violations));
        }
        OrientedHypergraph::from_spec(&self.to_spec()).map_err(|e| match e {
            hypergraph_homology::Error::InvalidHypergraph(v) => DocumentError::Invalid(v),
            other => unreachable!("validated spec rejected: {other}"),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

pub fn parse_document(text: &str) -> Result<OrientedHypergraph, DocumentError> {
    HypergraphDocument::parse(text)?.to_hypergraph()
}

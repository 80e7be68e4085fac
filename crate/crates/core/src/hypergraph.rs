//! Oriented hypergraphs and their validation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// An oriented edge `(A, B)`: `tails` is `A`, the vertices the edge points
/// away from, `heads` is `B`, the vertices it points to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    tails: BTreeSet<usize>,
    heads: BTreeSet<usize>,
}

impl Edge {
    pub fn new(
        tails: impl IntoIterator<Item = usize>,
        heads: impl IntoIterator<Item = usize>,
    ) -> Self {
        Edge {
            tails: tails.into_iter().collect(),
            heads: heads.into_iter().collect(),
        }
    }

    pub fn tails(&self) -> &BTreeSet<usize> {
        &self.tails
    }

    pub fn heads(&self) -> &BTreeSet<usize> {
        &self.heads
    }

    pub fn inverse(&self) -> Edge {
        Edge {
            tails: self.heads.clone(),
            heads: self.tails.clone(),
        }
    }

    /// `(∅, ∅)` is its own inverse and has zero boundary.
    pub fn is_empty(&self) -> bool {
        self.tails.is_empty() && self.heads.is_empty()
    }
}

/// An invariant violated by a hypergraph description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateVertex { name: String },
    RepeatedVertexInEdge { edge: usize, vertex: String },
    UnknownVertex { edge: usize, vertex: String },
    TailHeadOverlap { edge: usize, vertex: String },
    InversePair { first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertex { name } => write!(f, "duplicate vertex name {name:?}"),
            Violation::RepeatedVertexInEdge { edge, vertex } => {
                write!(f, "edge {edge} lists vertex {vertex:?} twice on one side")
            }
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "edge {edge} refers to unknown vertex {vertex:?}")
            }
            Violation::TailHeadOverlap { edge, vertex } => {
                write!(f, "edge {edge}: A∩B nonempty (vertex {vertex:?} is both tail and head)")
            }
            Violation::InversePair { first, second } => {
                write!(f, "inverse pair: edge {second} is the inverse of edge {first}")
            }
        }
    }
}

/// A named, unchecked hypergraph description, e.g. as read from a file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HypergraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSpec {
    pub tails: Vec<String>,
    pub heads: Vec<String>,
}

impl EdgeSpec {
    pub fn new<S: Into<String>>(
        tails: impl IntoIterator<Item = S>,
        heads: impl IntoIterator<Item = S>,
    ) -> Self {
        EdgeSpec {
            tails: tails.into_iter().map(Into::into).collect(),
            heads: heads.into_iter().map(Into::into).collect(),
        }
    }
}

impl HypergraphSpec {
    /// Lists every violated invariant. An empty list means the description
    /// can be turned into an [`OrientedHypergraph`].
    pub fn validate(&self) -> Vec<Violation> {
        self.resolve().err().unwrap_or_default()
    }

    fn resolve(&self) -> std::result::Result<OrientedHypergraph, Vec<Violation>> {
        let mut violations = Vec::new();
        let mut index = HashMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                violations.push(Violation::DuplicateVertex { name: name.clone() });
            }
        }

        let mut edges = Vec::with_capacity(self.edges.len());
        for (e, spec) in self.edges.iter().enumerate() {
            let mut side = |names: &[String]| {
                let mut set = BTreeSet::new();
                for name in names {
                    match index.get(name.as_str()) {
                        Some(&v) => {
                            if !set.insert(v) {
                                violations.push(Violation::RepeatedVertexInEdge {
                                    edge: e,
                                    vertex: name.clone(),
                                });
                            }
                        }
                        None => violations.push(Violation::UnknownVertex {
                            edge: e,
                            vertex: name.clone(),
                        }),
                    }
                }
                set
            };
            let tails = side(&spec.tails);
            let heads = side(&spec.heads);
            edges.push(Edge { tails, heads });
        }

        let vertices = self.vertices.clone();
        violations.extend(structural_violations(&vertices, &edges));
        if violations.is_empty() {
            Ok(OrientedHypergraph { vertices, edges })
        } else {
            Err(violations)
        }
    }
}

/// Overlap and inverse-pair checks on index-resolved edges.
fn structural_violations(vertices: &[String], edges: &[Edge]) -> Vec<Violation> {
    let mut violations = Vec::new();
    let name = |v: usize| {
        vertices
            .get(v)
            .cloned()
            .unwrap_or_else(|| format!("#{v}"))
    };
    for (e, edge) in edges.iter().enumerate() {
        for &v in edge.tails.iter().chain(&edge.heads) {
            if v >= vertices.len() {
                violations.push(Violation::UnknownVertex {
                    edge: e,
                    vertex: name(v),
                });
            }
        }
        for &v in edge.tails.intersection(&edge.heads) {
            violations.push(Violation::TailHeadOverlap {
                edge: e,
                vertex: name(v),
            });
        }
    }
    // (∅,∅) equals its own inverse; copies of it count as parallel edges.
    let mut first_seen: HashMap<&Edge, usize> = HashMap::new();
    for (e, edge) in edges.iter().enumerate() {
        first_seen.entry(edge).or_insert(e);
    }
    for (e, edge) in edges.iter().enumerate() {
        if edge.is_empty() {
            continue;
        }
        if let Some(&f) = first_seen.get(&edge.inverse()) {
            if f < e {
                violations.push(Violation::InversePair { first: f, second: e });
            }
        }
    }
    violations
}

/// A validated oriented hypergraph. Vertex order is the basis of `C₀`, edge
/// order the basis of `C₁`; parallel edges are distinct basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl OrientedHypergraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut violations = Vec::new();
        let mut seen = BTreeSet::new();
        for name in &vertices {
            if !seen.insert(name.as_str()) {
                violations.push(Violation::DuplicateVertex { name: name.clone() });
            }
        }
        violations.extend(structural_violations(&vertices, &edges));
        if violations.is_empty() {
            Ok(OrientedHypergraph { vertices, edges })
        } else {
            Err(Error::InvalidHypergraph(violations))
        }
    }

    /// Vertices named `v0, v1, …`; edges given as `(tails, heads)` index lists.
    pub fn from_index_edges<'a>(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (&'a [usize], &'a [usize])>,
    ) -> Result<Self> {
        let vertices = (0..vertex_count).map(|i| format!("v{i}")).collect();
        let edges = edges
            .into_iter()
            .map(|(tails, heads)| Edge::new(tails.iter().copied(), heads.iter().copied()))
            .collect();
        Self::new(vertices, edges)
    }

    pub fn from_spec(spec: &HypergraphSpec) -> Result<Self> {
        spec.resolve().map_err(Error::InvalidHypergraph)
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        let names = |set: &BTreeSet<usize>| set.iter().map(|&v| self.vertices[v].clone()).collect();
        HypergraphSpec {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    tails: names(&e.tails),
                    heads: names(&e.heads),
                })
                .collect(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Every edge has exactly one tail and one head.
    pub fn is_graph(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.tails.len() == 1 && e.heads.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(vertices: &[&str], edges: &[(&[&str], &[&str])]) -> HypergraphSpec {
        HypergraphSpec {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(t, h)| EdgeSpec::new(t.iter().copied(), h.iter().copied()))
                .collect(),
        }
    }

    #[test]
    fn overlapping_sides_rejected() {
        let s = spec(&["a"], &[(&["a"], &["a"])]);
        assert_eq!(
            s.validate(),
            vec![Violation::TailHeadOverlap {
                edge: 0,
                vertex: "a".into()
            }]
        );
        assert!(OrientedHypergraph::from_spec(&s).is_err());
    }

    #[test]
    fn inverse_pair_rejected() {
        let s = spec(&["a", "b"], &[(&["a"], &["b"]), (&["b"], &["a"])]);
        assert_eq!(
            s.validate(),
            vec![Violation::InversePair { first: 0, second: 1 }]
        );
    }

    #[test]
    fn parallel_edges_accepted() {
        let s = spec(&["u", "v"], &[(&["u"], &["v"]), (&["u"], &["v"])]);
        assert!(s.validate().is_empty());
        let h = OrientedHypergraph::from_spec(&s).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h.is_graph());
    }

    #[test]
    fn unknown_and_duplicate_names() {
        let s = spec(&["a", "a"], &[(&["a"], &["z"])]);
        let v = s.validate();
        assert!(v.contains(&Violation::DuplicateVertex { name: "a".into() }));
        assert!(v.contains(&Violation::UnknownVertex {
            edge: 0,
            vertex: "z".into()
        }));
    }

    #[test]
    fn empty_sides_permitted() {
        let h = OrientedHypergraph::from_index_edges(2, [(&[][..], &[0][..]), (&[1][..], &[][..])]);
        assert!(h.is_ok());
        let e = OrientedHypergraph::from_index_edges(1, [(&[][..], &[][..]), (&[][..], &[][..])]);
        assert!(e.is_ok(), "copies of the empty edge are parallel, not inverse");
    }

    #[test]
    fn index_out_of_range_rejected() {
        let err = OrientedHypergraph::from_index_edges(1, [(&[0][..], &[3][..])]).unwrap_err();
        assert!(matches!(err, Error::InvalidHypergraph(_)));
    }

    #[test]
    fn spec_round_trip() {
        let s = spec(&["a", "b", "c"], &[(&["b", "c"], &["a"]), (&[], &["b"])]);
        let h = OrientedHypergraph::from_spec(&s).unwrap();
        assert_eq!(h.to_spec(), s);
    }
}

//! Built-in example hypergraphs.

use crate::document::{EdgeDocument, HypergraphDocument};

pub const NAMES: [&str; 4] = ["main-example", "parallel-edges", "triangle-graph", "path-graph"];

fn edge(tails: &[&str], heads: &[&str]) -> EdgeDocument {
    EdgeDocument {
        tails: tails.iter().map(|s| s.to_string()).collect(),
        heads: heads.iter().map(|s| s.to_string()).collect(),
    }
}

fn document(name: &str, vertices: &[&str], edges: Vec<EdgeDocument>) -> HypergraphDocument {
    HypergraphDocument {
        name: Some(name.to_string()),
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        edges,
    }
}

/// The fixture called `name`, if any.
pub fn fixture(name: &str) -> Option<HypergraphDocument> {
    let doc = match name {
        // e_i = ({v_j, v_k}, {v_i}) for {i, j, k} = {1, 2, 3}
        "main-example" => document(
            name,
            &["v1", "v2", "v3"],
            vec![
                edge(&["v2", "v3"], &["v1"]),
                edge(&["v1", "v3"], &["v2"]),
                edge(&["v1", "v2"], &["v3"]),
            ],
        ),
        // e and t, both from v to w
        "parallel-edges" => document(
            name,
            &["v", "w"],
            vec![edge(&["v"], &["w"]), edge(&["v"], &["w"])],
        ),
        "triangle-graph" => document(
            name,
            &["u", "v", "w"],
            vec![edge(&["u"], &["v"]), edge(&["v"], &["w"]), edge(&["u"], &["w"])],
        ),
        "path-graph" => document(
            name,
            &["a", "b", "c"],
            vec![edge(&["a"], &["b"]), edge(&["b"], &["c"])],
        ),
        _ => return None,
    };
    Some(doc)
}

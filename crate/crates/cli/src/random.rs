//! Seeded pseudo-random instances.
//!
//! ChaCha8 keyed by a `u64` seed; all ranges are drawn as `u32`, so output
//! depends only on the seed and the options, not on the platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::document::{EdgeDocument, HypergraphDocument};

/// Redraws allowed per edge before giving up.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomOptions {
    pub vertices: u32,
    pub edges: u32,
    /// Upper bound `K` on `|A|` and on `|B|`.
    pub max_arity: u32,
    /// Whether `(∅, ∅)` may be drawn.
    pub allow_empty_edges: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RandomError {
    #[error("no admissible edge on {vertices} vertices with max arity {max_arity}")]
    NoAdmissibleEdge { vertices: u32, max_arity: u32 },
    #[error("edge {edge} could not be placed after {MAX_ATTEMPTS} attempts")]
    AttemptsExhausted { edge: u32 },
}

fn vertex_names(n: u32) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Edges as index sets, `(tails, heads)`.
type IndexEdge = (Vec<u32>, Vec<u32>);

fn is_inverse(a: &IndexEdge, b: &IndexEdge) -> bool {
    a.0 == b.1 && a.1 == b.0
}

fn to_document(name: String, n: u32, edges: &[IndexEdge]) -> HypergraphDocument {
    let names = vertex_names(n);
    let side = |s: &[u32]| s.iter().map(|&v| names[v as usize].clone()).collect();
    HypergraphDocument {
        name: Some(name),
        vertices: names.clone(),
        edges: edges
            .iter()
            .map(|(t, h)| EdgeDocument {
                tails: side(t),
                heads: side(h),
            })
            .collect(),
    }
}

/// Draws one edge: an arity pair uniform in `[0,K]²`, then disjoint vertex
/// sets of those sizes. Pairs that do not fit are redrawn.
fn draw_edge(rng: &mut ChaCha8Rng, opts: &RandomOptions) -> Option<IndexEdge> {
    let a = rng.gen_range(0..=opts.max_arity);
    let b = rng.gen_range(0..=opts.max_arity);
    if (a == 0 && b == 0 && !opts.allow_empty_edges) || a + b > opts.vertices {
        return None;
    }
    let mut pool: Vec<u32> = (0..opts.vertices).collect();
    let (chosen, _) = pool.partial_shuffle(rng, (a + b) as usize);
    let mut tails = chosen[..a as usize].to_vec();
    let mut heads = chosen[a as usize..].to_vec();
    tails.sort_unstable();
    heads.sort_unstable();
    Some((tails, heads))
}

pub fn random_hypergraph(opts: &RandomOptions, seed: u64) -> Result<HypergraphDocument, RandomError> {
    let nonempty_possible = opts.vertices > 0 && opts.max_arity > 0;
    if opts.edges > 0 && !nonempty_possible && !opts.allow_empty_edges {
        return Err(RandomError::NoAdmissibleEdge {
            vertices: opts.vertices,
            max_arity: opts.max_arity,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<IndexEdge> = Vec::new();
    for edge in 0..opts.edges {
        let placed = (0..MAX_ATTEMPTS)
            .filter_map(|_| draw_edge(&mut rng, opts))
            .find(|e| !edges.iter().any(|f| is_inverse(e, f) && e != f));
        match placed {
            Some(e) => edges.push(e),
            None => return Err(RandomError::AttemptsExhausted { edge }),
        }
    }
    Ok(to_document(format!("random-{seed}"), opts.vertices, &edges))
}

/// A connected directed graph with `2..=max_vertices` vertices and at most
/// `max_edges` edges: a random tree with random orientations plus extra
/// edges, parallel ones included, never an inverse pair.
pub fn random_connected_graph(max_vertices: u32, max_edges: u32, seed: u64) -> HypergraphDocument {
    assert!(max_vertices >= 2 && max_edges + 1 >= max_vertices);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_vertices);
    let mut edges: Vec<IndexEdge> = Vec::new();
    for child in 1..n {
        let parent = rng.gen_range(0..child);
        edges.push(if rng.gen_bool(0.5) {
            (vec![parent], vec![child])
        } else {
            (vec![child], vec![parent])
        });
    }
    let extra = rng.gen_range(0..=max_edges - (n - 1));
    while edges.len() < (n - 1 + extra) as usize {
        let u = rng.gen_range(0..n);
        let w = rng.gen_range(0..n);
        let e = (vec![u], vec![w]);
        if u != w && !edges.iter().any(|f| is_inverse(&e, f)) {
            edges.push(e);
        }
    }
    to_document(format!("connected-graph-{seed}"), n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(vertices: u32, edges: u32, max_arity: u32) -> RandomOptions {
        RandomOptions {
            vertices,
            edges,
            max_arity,
            allow_empty_edges: false,
        }
    }

    #[test]
    fn same_seed_same_document() {
        let o = opts(5, 6, 2);
        assert_eq!(random_hypergraph(&o, 11), random_hypergraph(&o, 11));
        assert_ne!(random_hypergraph(&o, 11), random_hypergraph(&o, 12));
    }

    #[test]
    fn generated_documents_validate() {
        for seed in 0..200 {
            let doc = random_hypergraph(&opts(4, 6, 3), seed).unwrap();
            assert!(doc.validate().is_empty(), "seed {seed}");
            assert_eq!(doc.edges.len(), 6);
            assert!(doc.edges.iter().all(|e| !(e.tails.is_empty() && e.heads.is_empty())));
            let g = random_connected_graph(8, 12, seed);
            assert!(g.validate().is_empty(), "seed {seed}");
            assert!(g.edges.len() <= 12);
        }
    }

    #[test]
    fn empty_edges_only_when_allowed() {
        let mut o = opts(0, 3, 2);
        assert!(matches!(random_hypergraph(&o, 0), Err(RandomError::NoAdmissibleEdge { .. })));
        o.allow_empty_edges = true;
        let doc = random_hypergraph(&o, 0).unwrap();
        assert!(doc.validate().is_empty());
        assert_eq!(doc.edges.len(), 3);
    }

    #[test]
    fn arity_is_bounded() {
        let doc = random_hypergraph(&opts(6, 6, 1), 3).unwrap();
        assert!(doc.edges.iter().all(|e| e.tails.len() <= 1 && e.heads.len() <= 1));
    }
}

#![allow(dead_code)]

use hypergraph_homology::{Edge, OrientedHypergraph};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub fn main_example() -> OrientedHypergraph {
    OrientedHypergraph::from_index_edges(
        3,
        [
            (&[1, 2][..], &[0][..]),
            (&[0, 2][..], &[1][..]),
            (&[0, 1][..], &[2][..]),
        ],
    )
    .unwrap()
}

pub fn parallel_edges() -> OrientedHypergraph {
    OrientedHypergraph::from_index_edges(2, [(&[0][..], &[1][..]), (&[0][..], &[1][..])]).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Edges from per-vertex roles: 0 = absent, 1 = tail, 2 = head.
fn edges_from_roles(roles: &[Vec<u8>]) -> Vec<Edge> {
    roles
        .iter()
        .map(|r| {
            let tails = r.iter().enumerate().filter(|(_, &x)| x == 1).map(|(i, _)| i);
            let heads = r.iter().enumerate().filter(|(_, &x)| x == 2).map(|(i, _)| i);
            Edge::new(tails, heads)
        })
        .collect()
}

/// Random valid hypergraphs with up to `max_vertices` vertices and
/// `max_edges` edges; invalid draws (inverse pairs) are rejected.
pub fn arb_hypergraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = OrientedHypergraph> {
    (1..=max_vertices)
        .prop_flat_map(move |n| {
            proptest::collection::vec(proptest::collection::vec(0u8..3, n), 0..=max_edges)
                .prop_map(move |roles| (n, roles))
        })
        .prop_filter_map("inverse pair", |(n, roles)| {
            let vertices = (0..n).map(|i| format!("v{i}")).collect();
            OrientedHypergraph::new(vertices, edges_from_roles(&roles)).ok()
        })
}

/// Random connected directed graphs: a random tree plus extra edges.
pub fn arb_connected_graph(max_vertices: usize, max_extra: usize) -> impl Strategy<Value = OrientedHypergraph> {
    (2..=max_vertices)
        .prop_flat_map(move |n| {
            let tree = proptest::collection::vec((any::<prop::sample::Index>(), any::<bool>()), n - 1);
            let extra = proptest::collection::vec((0..n, 0..n), 0..=max_extra);
            (Just(n), tree, extra)
        })
        .prop_filter_map("inverse pair", |(n, tree, extra)| {
            let mut edges = Vec::new();
            for (k, (parent, flip)) in tree.into_iter().enumerate() {
                let child = k + 1;
                let p = parent.index(child);
                edges.push(if flip { Edge::new([child], [p]) } else { Edge::new([p], [child]) });
            }
            for (a, b) in extra {
                if a != b {
                    edges.push(Edge::new([a], [b]));
                }
            }
            let vertices = (0..n).map(|i| format!("v{i}")).collect();
            OrientedHypergraph::new(vertices, edges).ok()
        })
}

pub fn arb_int_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
    })
}

// ---- independent oracles -------------------------------------------------

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Elementary divisors via determinantal divisors: `D_k` is the gcd of all
/// `k×k` minors and `d_k = D_k / D_{k−1}`.
pub fn determinantal_divisors(m: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// Rank and determinant by fraction-field elimination.
pub fn fraction_rank(m: &[Vec<BigInt>], cols: usize) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn fraction_det(m: &[Vec<BigInt>]) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            let pivot = a[c].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot).skip(c) {
                *x -= p * &f;
            }
        }
    }
    det
}

/// Every integer vector in `[-bound, bound]^len`.
pub fn box_vectors(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Classical fundamental cycles and cuts of a connected directed graph for
/// the spanning tree `tree`, by path search in the tree.
///
/// A chord `u → w` gets the cycle `e` followed by the tree path `w ⇝ u`.
/// A tree edge `t` gets the cut `δφ` with `φ = 1` on the head side of `T − t`.
pub struct GraphOracle {
    pub cycles: std::collections::BTreeMap<usize, Vec<i64>>,
    pub cuts: std::collections::BTreeMap<usize, Vec<i64>>,
}

fn endpoints(h: &OrientedHypergraph, e: usize) -> (usize, usize) {
    let edge = &h.edges()[e];
    let tail = *edge.tails().iter().next().expect("graph edge");
    let head = *edge.heads().iter().next().expect("graph edge");
    (tail, head)
}

/// Tree edges on the path `from ⇝ to`, each with `+1` when traversed tail to head.
fn tree_path(h: &OrientedHypergraph, tree: &[usize], from: usize, to: usize) -> Option<Vec<(usize, i64)>> {
    let n = h.vertex_count();
    let mut prev: Vec<Option<(usize, usize, i64)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        for &t in tree {
            let (a, b) = endpoints(h, t);
            let step = if a == u { Some((b, 1)) } else if b == u { Some((a, -1)) } else { None };
            if let Some((w, sign)) = step {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((u, t, sign));
                    queue.push_back(w);
                }
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, t, sign) = prev[cur].unwrap();
        path.push((t, sign));
        cur = p;
    }
    Some(path)
}

/// Whether `tree` is a combinatorial spanning tree: `n − 1` edges reaching every vertex.
pub fn is_combinatorial_spanning_tree(h: &OrientedHypergraph, tree: &[usize]) -> bool {
    let n = h.vertex_count();
    tree.len() + 1 == n && (0..n).all(|v| tree_path(h, tree, 0, v).is_some())
}

pub fn graph_oracle(h: &OrientedHypergraph, tree: &[usize]) -> GraphOracle {
    let m = h.edge_count();
    let mut cycles = std::collections::BTreeMap::new();
    let mut cuts: std::collections::BTreeMap<usize, Vec<i64>> = tree
        .iter()
        .map(|&t| {
            let mut v = vec![0; m];
            v[t] = 1;
            (t, v)
        })
        .collect();
    for e in (0..m).filter(|e| !tree.contains(e)) {
        let (u, w) = endpoints(h, e);
        let mut cycle = vec![0; m];
        cycle[e] = 1;
        for (t, sign) in tree_path(h, tree, w, u).expect("connected") {
            cycle[t] += sign;
        }
        cycles.insert(e, cycle);
        for (t, sign) in tree_path(h, tree, u, w).expect("connected") {
            cuts.get_mut(&t).unwrap()[e] = sign;
        }
    }
    GraphOracle { cycles, cuts }
}

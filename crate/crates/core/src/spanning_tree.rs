//! Algebraic spanning trees.
//!
//! A set `T ⊆ E` is a spanning tree when
//!
//! 1. the cut module `B = γ⁻¹(Im δ⁰)` has a basis `(x_t)_{t∈T}` with
//!    `⟨x_t, t'⟩ = δ_{tt'}` on `T`, and
//! 2. the cycle module `C = Ker ∂₁` has a basis `(x_e)_{e∉T}` with
//!    `⟨x_e, e'⟩ = δ_{ee'}` on the chords.
//!
//! Over ℚ such a tree always exists: take `T` maximal with `∂T` independent,
//! let `x_e = e − x'_e` where `x'_e` is the unique chain supported on `T` with
//! `∂x'_e = ∂e`, and define `x_t` through its values `γ(x_t)(t') = δ_{tt'}`,
//! `γ(x_t)(e) = −γ(x_e)(t)`. Over ℤ the trees are exactly the rational trees
//! whose cycles are integral and whose cut cochains are coboundaries of
//! integer 0-cochains; [`find_spanning_tree_integer`] searches for one.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::boundary::{boundary, boundary_matrix};
use crate::chain::{Chain, Degree};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::linalg::{
    integer_image_basis, integer_kernel_basis, nullspace, rank, rref, solve_integer,
    solve_rational, sublattice_equal, IntMatrix, RatMatrix,
};
use crate::scalar::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    ring: Ring,
    tree_edges: Vec<usize>,
    fundamental_cuts: BTreeMap<usize, Chain>,
    fundamental_cycles: BTreeMap<usize, Chain>,
}

impl SpanningTree {
    /// Assembles a tree from its parts without checking the axioms; use
    /// [`verify_tree_axioms`] for that.
    pub fn from_parts(
        ring: Ring,
        tree_edges: Vec<usize>,
        fundamental_cuts: BTreeMap<usize, Chain>,
        fundamental_cycles: BTreeMap<usize, Chain>,
    ) -> Self {
        SpanningTree {
            ring,
            tree_edges,
            fundamental_cuts,
            fundamental_cycles,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn chords(&self) -> Vec<usize> {
        self.fundamental_cycles.keys().copied().collect()
    }

    pub fn fundamental_cuts(&self) -> &BTreeMap<usize, Chain> {
        &self.fundamental_cuts
    }

    pub fn fundamental_cycles(&self) -> &BTreeMap<usize, Chain> {
        &self.fundamental_cycles
    }

    pub fn cut(&self, tree_edge: usize) -> Option<&Chain> {
        self.fundamental_cuts.get(&tree_edge)
    }

    pub fn cycle(&self, chord: usize) -> Option<&Chain> {
        self.fundamental_cycles.get(&chord)
    }

    /// Reinterprets every cut and cycle over `ring`.
    pub fn to_ring(&self, ring: Ring) -> Result<SpanningTree> {
        let convert = |m: &BTreeMap<usize, Chain>| -> Result<BTreeMap<usize, Chain>> {
            m.iter()
                .map(|(&k, c)| Ok((k, c.to_ring(ring)?)))
                .collect()
        };
        Ok(SpanningTree {
            ring,
            tree_edges: self.tree_edges.clone(),
            fundamental_cuts: convert(&self.fundamental_cuts)?,
            fundamental_cycles: convert(&self.fundamental_cycles)?,
        })
    }
}

type KeyedVectors = BTreeMap<usize, Vec<BigRational>>;

/// Fundamental cuts and cycles of `tree` with respect to the kernel of
/// `map`, whose columns are indexed by the basis. `None` if the columns at
/// `tree` are not a basis of the column space of `map`.
fn cuts_and_cycles(map: &RatMatrix, tree: &[usize]) -> Option<(KeyedVectors, KeyedVectors)> {
    let n = map.cols();
    let tree_cols = map.select_columns(tree);
    if rank(&tree_cols) != tree.len() || rank(map) != tree.len() {
        return None;
    }
    let in_tree: BTreeSet<usize> = tree.iter().copied().collect();

    let mut cycles = BTreeMap::new();
    let mut cuts: BTreeMap<usize, Vec<BigRational>> = tree
        .iter()
        .map(|&t| {
            let mut x = vec![BigRational::zero(); n];
            x[t] = BigRational::one();
            (t, x)
        })
        .collect();

    for chord in (0..n).filter(|s| !in_tree.contains(s)) {
        // x'_e = Σ λ_t t with the tree columns applied to λ equal to the chord's column
        let lambda = solve_rational(&tree_cols, &map.column(chord))?;
        let mut x = vec![BigRational::zero(); n];
        x[chord] = BigRational::one();
        for (k, &t) in tree.iter().enumerate() {
            x[t] = -lambda[k].clone();
            // γ(x_t)(e) = −γ(x_e)(t) = λ_t
            cuts.get_mut(&t).expect("tree edge")[chord] = lambda[k].clone();
        }
        cycles.insert(chord, x);
    }
    Some((cuts, cycles))
}

fn rational_map(h: &OrientedHypergraph) -> RatMatrix {
    boundary_matrix(h).as_matrix().to_rational()
}

fn to_chains(
    m: BTreeMap<usize, Vec<BigRational>>,
    ring: Ring,
) -> Result<BTreeMap<usize, Chain>> {
    m.into_iter()
        .map(|(k, v)| Ok((k, Chain::from_rationals(Degree::Edge, ring, v)?)))
        .collect()
}

/// The rational spanning tree built on `tree_edges`, if `∂T` is a basis of
/// `Im ∂₁` over ℚ.
pub fn rational_tree_on(h: &OrientedHypergraph, tree_edges: &[usize]) -> Option<SpanningTree> {
    let (cuts, cycles) = cuts_and_cycles(&rational_map(h), tree_edges)?;
    Some(SpanningTree {
        ring: Ring::Rational,
        tree_edges: tree_edges.to_vec(),
        fundamental_cuts: to_chains(cuts, Ring::Rational).ok()?,
        fundamental_cycles: to_chains(cycles, Ring::Rational).ok()?,
    })
}

/// Greedy spanning tree over ℚ: edges are taken in input order whenever their
/// boundary is independent of the boundaries already chosen.
pub fn find_spanning_tree_rational(h: &OrientedHypergraph) -> SpanningTree {
    let map = rational_map(h);
    // Pivot columns of the echelon form are exactly the greedy choice.
    let tree = rref(&map).1;
    rational_tree_on(h, &tree).expect("greedy tree spans the image")
}

/// Outcome of re-checking the spanning-tree axioms on a candidate tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAxiomReport {
    /// Cuts and cycles have the right shape and ring; their keys partition `E`.
    pub partition: bool,
    /// `⟨x_t, t'⟩ = δ_{tt'}` for `t, t' ∈ T`.
    pub cut_kronecker: bool,
    /// `⟨x_e, e'⟩ = δ_{ee'}` for chords `e, e'`.
    pub cycle_kronecker: bool,
    /// Every `x_e` lies in `Ker ∂₁`.
    pub cycles_in_kernel: bool,
    /// Every `γ(x_t)` is `δ⁰φ` for some 0-cochain `φ` over the tree's ring.
    pub cuts_are_coboundaries: bool,
    /// The cuts form a basis of `B` over the tree's ring.
    pub cuts_form_basis: bool,
    /// The cycles form a basis of `C` over the tree's ring.
    pub cycles_form_basis: bool,
}

impl TreeAxiomReport {
    pub fn all_passed(&self) -> bool {
        self.partition
            && self.cut_kronecker
            && self.cycle_kronecker
            && self.cycles_in_kernel
            && self.cuts_are_coboundaries
            && self.cuts_form_basis
            && self.cycles_form_basis
    }
}

fn kronecker(family: &BTreeMap<usize, Chain>) -> bool {
    family.iter().all(|(&a, x)| {
        family.keys().all(|&b| {
            let want = if a == b {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            x.rational_coefficient(b) == want
        })
    })
}

fn independent(vectors: &[Vec<BigRational>], ambient: usize) -> bool {
    rank(&RatMatrix::from_columns(ambient, vectors)) == vectors.len()
}

/// Re-checks both axioms from scratch, independently of how the tree was built.
pub fn verify_tree_axioms(h: &OrientedHypergraph, tree: &SpanningTree) -> TreeAxiomReport {
    let m = h.edge_count();
    let ring = tree.ring;
    let bmat = boundary_matrix(h);
    let cob = bmat.coboundary_matrix();

    let tree_set: BTreeSet<usize> = tree.tree_edges.iter().copied().collect();
    let cut_keys: BTreeSet<usize> = tree.fundamental_cuts.keys().copied().collect();
    let chord_keys: BTreeSet<usize> = tree.fundamental_cycles.keys().copied().collect();
    let all_chains_ok = tree
        .fundamental_cuts
        .values()
        .chain(tree.fundamental_cycles.values())
        .all(|c| c.degree() == Degree::Edge && c.len() == m && c.ring() == ring);
    let partition = all_chains_ok
        && tree_set.len() == tree.tree_edges.len()
        && cut_keys == tree_set
        && cut_keys.is_disjoint(&chord_keys)
        && cut_keys.len() + chord_keys.len() == m
        && cut_keys.union(&chord_keys).all(|&k| k < m);
    if !partition {
        return TreeAxiomReport {
            partition,
            cut_kronecker: false,
            cycle_kronecker: false,
            cycles_in_kernel: false,
            cuts_are_coboundaries: false,
            cuts_form_basis: false,
            cycles_form_basis: false,
        };
    }

    let cycles_in_kernel = tree
        .fundamental_cycles
        .values()
        .all(|x| boundary(h, x).map(|b| b.is_zero()).unwrap_or(false));

    let cut_vectors: Vec<Vec<BigRational>> =
        tree.fundamental_cuts.values().map(Chain::to_dense).collect();
    let cycle_vectors: Vec<Vec<BigRational>> =
        tree.fundamental_cycles.values().map(Chain::to_dense).collect();

    let (cuts_are_coboundaries, cuts_form_basis, cycles_form_basis) = match ring {
        Ring::Rational => {
            let cob_q = cob.to_rational();
            let coboundaries = cut_vectors
                .iter()
                .all(|x| solve_rational(&cob_q, x).is_some());
            let d = rank(&bmat.as_matrix().to_rational());
            let cuts_basis = cut_vectors.len() == d && independent(&cut_vectors, m);
            let cycles_basis = cycle_vectors.len() == m - d && independent(&cycle_vectors, m);
            (coboundaries, cuts_basis, cycles_basis)
        }
        Ring::Integer => {
            let as_int = |vs: &[Vec<BigRational>]| -> Option<Vec<Vec<BigInt>>> {
                vs.iter()
                    .map(|v| v.iter().map(|q| q.is_integer().then(|| q.to_integer())).collect())
                    .collect()
            };
            match (as_int(&cut_vectors), as_int(&cycle_vectors)) {
                (Some(cuts), Some(cycles)) => {
                    let coboundaries = cuts.iter().all(|x| solve_integer(&cob, x).is_some());
                    let cuts_basis = independent(&cut_vectors, m)
                        && sublattice_equal(&cuts, &integer_image_basis(&cob), m);
                    let cycles_basis = independent(&cycle_vectors, m)
                        && sublattice_equal(
                            &cycles,
                            &integer_kernel_basis(bmat.as_matrix()),
                            m,
                        );
                    (coboundaries, cuts_basis, cycles_basis)
                }
                _ => (false, false, false),
            }
        }
    };

    TreeAxiomReport {
        partition,
        cut_kronecker: kronecker(&tree.fundamental_cuts),
        cycle_kronecker: kronecker(&tree.fundamental_cycles),
        cycles_in_kernel,
        cuts_are_coboundaries,
        cuts_form_basis,
        cycles_form_basis,
    }
}

/// Whether a rational tree is integral: every fundamental cycle has integer
/// coefficients and every `γ(x_t)` is the coboundary of an integer 0-cochain.
pub fn is_integral(h: &OrientedHypergraph, tree: &SpanningTree) -> bool {
    if !tree.fundamental_cycles.values().all(Chain::is_integral) {
        return false;
    }
    let cob = boundary_matrix(h).coboundary_matrix();
    tree.fundamental_cuts.values().all(|x| match x.to_integer_vec() {
        Some(v) => solve_integer(&cob, &v).is_some(),
        None => false,
    })
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every rational spanning tree whose edge set is a column basis of the
/// boundary matrix, in lexicographic order of edge sets.
pub fn rational_tree_candidates(h: &OrientedHypergraph) -> Vec<SpanningTree> {
    let d = rank(&rational_map(h));
    Combinations::new(h.edge_count(), d)
        .filter_map(|t| rational_tree_on(h, &t))
        .collect()
}

/// Searches the column bases of `∂₁` in lexicographic order for an integral
/// rational tree and returns the first one over ℤ.
///
/// `search_limit` bounds the number of `rank(∂₁)`-subsets examined.
/// `Ok(None)` means every candidate was examined and none is integral;
/// running out of budget first is [`Error::SearchLimitExceeded`].
pub fn find_spanning_tree_integer(
    h: &OrientedHypergraph,
    search_limit: usize,
) -> Result<Option<SpanningTree>> {
    let map = rational_map(h);
    let d = rank(&map);
    for (examined, subset) in Combinations::new(h.edge_count(), d).enumerate() {
        if examined >= search_limit {
            return Err(Error::SearchLimitExceeded {
                limit: search_limit,
            });
        }
        let Some(candidate) = rational_tree_on(h, &subset) else {
            continue;
        };
        if is_integral(h, &candidate) {
            return candidate.to_ring(Ring::Integer).map(Some);
        }
    }
    Ok(None)
}

/// Spanning tree of `ℚⁿ` (standard basis) with respect to a subspace `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSpaceTree {
    pub tree: Vec<usize>,
    /// Basis of `U^⊥`, Kronecker on the tree.
    pub cuts: BTreeMap<usize, Vec<BigRational>>,
    /// Basis of `U`, Kronecker on the complement of the tree.
    pub cycles: BTreeMap<usize, Vec<BigRational>>,
}

/// The hypergraph construction with the projection `ℚⁿ → ℚⁿ/U` in place of
/// `∂₁`. The projection is realised by a matrix whose rows span `U^⊥`, so its
/// kernel is exactly `U`.
pub fn vector_space_spanning_tree(
    ambient_dim: usize,
    generators: &[Vec<BigRational>],
) -> Result<VectorSpaceTree> {
    if let Some(g) = generators.iter().find(|g| g.len() != ambient_dim) {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: g.len(),
        });
    }
    let gen_rows = RatMatrix::from_columns(ambient_dim, generators).transpose();
    let perp = nullspace(&gen_rows);
    let projection = RatMatrix::from_columns(ambient_dim, &perp).transpose();
    let tree = rref(&projection).1;
    let (cuts, cycles) = cuts_and_cycles(&projection, &tree)
        .ok_or_else(|| Error::InternalInconsistency("greedy tree is not a basis".into()))?;
    Ok(VectorSpaceTree { tree, cuts, cycles })
}

/// Integer matrix with the boundaries of `tree` as columns.
pub fn tree_boundary_matrix(h: &OrientedHypergraph, tree: &[usize]) -> IntMatrix {
    boundary_matrix(h).as_matrix().select_columns(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn combinations_in_lex_order() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![vec![]]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn triangle_fundamental_cycle() {
        // u→v, v→w, u→w
        let h = OrientedHypergraph::from_index_edges(
            3,
            [(&[0][..], &[1][..]), (&[1][..], &[2][..]), (&[0][..], &[2][..])],
        )
        .unwrap();
        let tree = find_spanning_tree_rational(&h);
        assert_eq!(tree.tree_edges(), &[0, 1]);
        let x = tree.cycle(2).unwrap();
        assert_eq!(x.to_dense(), vec![q(-1), q(-1), q(1)]);
        assert!(verify_tree_axioms(&h, &tree).all_passed());
    }

    #[test]
    fn empty_edge_is_a_chord() {
        let h = OrientedHypergraph::from_index_edges(1, [(&[][..], &[][..])]).unwrap();
        let tree = find_spanning_tree_rational(&h);
        assert!(tree.tree_edges().is_empty());
        assert_eq!(tree.cycle(0).unwrap().to_dense(), vec![q(1)]);
        assert!(verify_tree_axioms(&h, &tree).all_passed());
    }

    #[test]
    fn edgeless_integer_tree() {
        let h = OrientedHypergraph::from_index_edges(3, []).unwrap();
        let tree = find_spanning_tree_integer(&h, 10).unwrap().unwrap();
        assert!(tree.tree_edges().is_empty());
        assert!(tree.fundamental_cuts().is_empty());
        assert!(tree.fundamental_cycles().is_empty());
    }

    #[test]
    fn search_limit_is_distinct_from_none() {
        let h = OrientedHypergraph::from_index_edges(2, [(&[0][..], &[1][..])]).unwrap();
        assert!(matches!(
            find_spanning_tree_integer(&h, 0),
            Err(Error::SearchLimitExceeded { limit: 0 })
        ));
        assert!(find_spanning_tree_integer(&h, 1).unwrap().is_some());
    }

    #[test]
    fn vector_space_trivial_subspaces() {
        let t = vector_space_spanning_tree(3, &[]).unwrap();
        assert_eq!(t.tree, vec![0, 1, 2]);
        assert!(t.cycles.is_empty());
        assert_eq!(t.cuts[&1], vec![q(0), q(1), q(0)]);

        let full: Vec<Vec<BigRational>> = (0..3)
            .map(|i| (0..3).map(|j| q((i == j) as i64)).collect())
            .collect();
        let t = vector_space_spanning_tree(3, &full).unwrap();
        assert!(t.tree.is_empty());
        assert!(t.cuts.is_empty());
        assert_eq!(t.cycles[&2], vec![q(0), q(0), q(1)]);
    }

    #[test]
    fn vector_space_line() {
        let t = vector_space_spanning_tree(2, &[vec![q(1), q(-1)]]).unwrap();
        assert_eq!(t.tree, vec![0]);
        assert_eq!(t.cycles[&1], vec![q(-1), q(1)]);
        assert_eq!(t.cuts[&0], vec![q(1), q(1)]);
    }

    #[test]
    fn vector_space_dimension_checked() {
        assert!(matches!(
            vector_space_spanning_tree(2, &[vec![q(1)]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

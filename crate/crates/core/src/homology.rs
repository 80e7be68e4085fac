//! Homology `H₁ = Ker ∂₁`, cohomology `H¹ = C¹ / Im δ⁰`, and the conditions
//! under which a hypergraph is algebraically graph-like over ℤ.
//!
//! Notation: `C = Ker ∂₁` is the cycle module, `B = γ⁻¹(Im δ⁰)` the cut
//! module, `D = Im(δ ∘ γ ∘ ∂₁)`, and `U` the image of `π ∘ γ ∘ ∂₁` in
//! `C⁰ / Ker δ⁰`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::boundary::{boundary, boundary_matrix, psi_partial};
use crate::chain::{Chain, Cochain, Degree};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::linalg::{
    annihilator_basis, column_space_basis, generator_matrix, image_rank, integer_image_basis,
    integer_kernel_basis, is_direct_summand, lattice_contains, nullspace, quotient_structure,
    rank, saturation_basis, smith_normal_form, solve_integer, sublattice_equal, IntMatrix,
    ModuleStructure, RatMatrix,
};
use crate::scalar::Ring;

fn edge_chains(vectors: &[Vec<BigInt>], ring: Ring) -> Vec<Chain> {
    vectors
        .iter()
        .map(|v| Chain::from_integers(Degree::Edge, ring, v))
        .collect()
}

fn edge_cochains(vectors: &[Vec<BigInt>]) -> Vec<Cochain> {
    vectors
        .iter()
        .map(|v| Cochain::from_integers(Degree::Edge, Ring::Integer, v))
        .collect()
}

fn dense_ints<I: IntoIterator<Item = BigRational>>(values: I) -> Vec<BigInt> {
    values.into_iter().map(|q| q.to_integer()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub ring: Ring,
    /// Basis of `Ker ∂₁` over `ring`.
    pub cycle_basis: Vec<Chain>,
    pub h1: ModuleStructure,
    pub h1_cohomology: ModuleStructure,
    /// Rank `d` of `Im ∂₁`.
    pub boundary_rank: usize,
}

/// `H₁` and `H¹` over `ring`. Over ℚ only free ranks are meaningful.
pub fn homology(h: &OrientedHypergraph, ring: Ring) -> HomologyReport {
    let b = boundary_matrix(h);
    let m = h.edge_count();
    match ring {
        Ring::Integer => {
            let kernel = integer_kernel_basis(b.as_matrix());
            let cohomology = quotient_structure(&b.coboundary_matrix());
            HomologyReport {
                ring,
                h1: ModuleStructure::free(kernel.len()),
                cycle_basis: edge_chains(&kernel, ring),
                h1_cohomology: cohomology,
                boundary_rank: image_rank(b.as_matrix()),
            }
        }
        Ring::Rational => {
            let q = b.as_matrix().to_rational();
            let d = rank(&q);
            let cycle_basis = nullspace(&q)
                .into_iter()
                .map(|v| Chain::from_rationals(Degree::Edge, ring, v).expect("rational ring"))
                .collect();
            HomologyReport {
                ring,
                cycle_basis,
                h1: ModuleStructure::free(m - d),
                h1_cohomology: ModuleStructure::free(m - d),
                boundary_rank: d,
            }
        }
    }
}

/// Basis of the annihilator of `Ker ∂₁` in `C¹` over ℤ.
pub fn annihilator_of_cycles(h: &OrientedHypergraph) -> Vec<Cochain> {
    edge_cochains(&annihilator_lattice(h))
}

fn annihilator_lattice(h: &OrientedHypergraph) -> Vec<Vec<BigInt>> {
    let kernel = integer_kernel_basis(boundary_matrix(h).as_matrix());
    annihilator_basis(&kernel, h.edge_count())
}

/// A concrete certificate that a condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A 1-cochain annihilating `Ker ∂₁` that is not in `Im δ⁰`.
    AnnihilatorNotCoboundary(Cochain),
    /// A 1-chain orthogonal to `Ker ∂₁` that is not in `B`.
    PerpNotInCutModule(Chain),
    /// A 0-chain `x ∉ Im ∂₁` with `divisor · x ∈ Im ∂₁`, `divisor > 1`.
    ImageNotSaturated { chain: Chain, divisor: BigInt },
    /// A nonzero class `[ψ] ∈ H¹` whose restriction to `Ker ∂₁` vanishes,
    /// so `[ψ] ↦ ψ↾Ker ∂₁` is not injective; `order · ψ ∈ Im δ⁰`.
    RestrictionNotInjective { cochain: Cochain, order: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// The five equivalent characterisations of algebraic graph-likeness, each
/// computed by its own route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphLikenessReport {
    /// (i) `H₁` and `H¹` canonically isomorphic. This is the lattice equality
    /// `Ker i* = Im δ⁰`, so it is evaluated as (ii) and shares its witness.
    pub canonical_iso: Condition,
    /// (ii) the annihilator of `Ker ∂₁` in `C¹` equals `Im δ⁰`.
    pub annihilator_equals_image: Condition,
    /// (iii) `B = C^⊥` over ℤ.
    pub cut_module_equals_cycle_perp: Condition,
    /// (iv) `Im ∂₁` is a direct summand of `C₀`.
    pub boundary_image_direct_summand: Condition,
    /// (v) `[ψ] ↦ ψ↾Ker ∂₁` is an isomorphism `H¹ → Hom(H₁, ℤ)`.
    pub hom_iso: Condition,
    /// Not one of the five: whether `Im δ⁰` is a direct summand of `C¹`.
    pub coboundary_image_direct_summand: bool,
    pub h1: ModuleStructure,
    pub h1_cohomology: ModuleStructure,
}

impl GraphLikenessReport {
    pub fn conditions(&self) -> [&Condition; 5] {
        [
            &self.canonical_iso,
            &self.annihilator_equals_image,
            &self.cut_module_equals_cycle_perp,
            &self.boundary_image_direct_summand,
            &self.hom_iso,
        ]
    }

    pub fn is_graph_like(&self) -> bool {
        self.conditions().iter().all(|c| c.holds)
    }
}

/// First generator of `candidates` outside the lattice spanned by `lattice`,
/// preferring standard basis vectors that lie in the candidate lattice.
fn first_outside(
    candidates: &[Vec<BigInt>],
    lattice: &[Vec<BigInt>],
    ambient: usize,
) -> Option<Vec<BigInt>> {
    let standard = (0..ambient).map(|i| {
        let mut v = vec![BigInt::zero(); ambient];
        v[i] = BigInt::from(1);
        v
    });
    standard
        .filter(|v| lattice_contains(candidates, ambient, v))
        .chain(candidates.iter().cloned())
        .find(|v| !lattice_contains(lattice, ambient, v))
}

/// Evaluates the five conditions independently and checks that they agree.
/// Disagreement is reported as [`Error::InternalInconsistency`].
pub fn graph_likeness(h: &OrientedHypergraph) -> Result<GraphLikenessReport> {
    let m = h.edge_count();
    let n = h.vertex_count();
    let b = boundary_matrix(h);
    let bt = b.coboundary_matrix();

    // (ii): annihilator of the integer kernel vs. the image lattice of δ⁰.
    let annihilator = annihilator_lattice(h);
    let coboundary_image = integer_image_basis(&bt);
    let ann_eq = sublattice_equal(&annihilator, &coboundary_image, m);
    let ann_witness = (!ann_eq)
        .then(|| first_outside(&annihilator, &coboundary_image, m))
        .flatten()
        .map(|v| Witness::AnnihilatorNotCoboundary(Cochain::from_integers(Degree::Edge, Ring::Integer, &v)));

    // (iii): C^⊥ as the saturation of the row space of ∂₁, compared with B.
    let cycle_perp = saturation_basis(&bt);
    let perp_eq = sublattice_equal(&cycle_perp, &coboundary_image, m);
    let perp_witness = (!perp_eq)
        .then(|| first_outside(&cycle_perp, &coboundary_image, m))
        .flatten()
        .map(|v| Witness::PerpNotInCutModule(Chain::from_integers(Degree::Edge, Ring::Integer, &v)));

    // (iv): elementary divisors of Im ∂₁ in C₀.
    let snf = smith_normal_form(b.as_matrix());
    let summand = is_direct_summand(b.as_matrix());
    let summand_witness = snf
        .divisors()
        .iter()
        .enumerate()
        .find(|(_, d)| **d != BigInt::from(1))
        .map(|(i, d)| Witness::ImageNotSaturated {
            chain: Chain::from_integers(Degree::Vertex, Ring::Integer, &snf.left_inverse.column(i)),
            divisor: d.clone(),
        });
    debug_assert_eq!(n, snf.left_inverse.rows());

    // (v): H¹ torsion-free of the same rank as H₁.
    let h1 = ModuleStructure::free(integer_kernel_basis(b.as_matrix()).len());
    let h1_cohomology = quotient_structure(&bt);
    let hom_iso = h1_cohomology.is_free() && h1_cohomology.free_rank == h1.free_rank;
    let hom_witness = if hom_iso {
        None
    } else {
        let cosnf = smith_normal_form(&bt);
        cosnf
            .divisors()
            .iter()
            .enumerate()
            .find(|(_, d)| **d != BigInt::from(1))
            .map(|(i, d)| Witness::RestrictionNotInjective {
                cochain: Cochain::from_integers(
                    Degree::Edge,
                    Ring::Integer,
                    &cosnf.left_inverse.column(i),
                ),
                order: d.clone(),
            })
    };

    let values = [ann_eq, ann_eq, perp_eq, summand, hom_iso];
    if values.iter().any(|&v| v != values[0]) {
        return Err(Error::InternalInconsistency(format!(
            "graph-likeness conditions disagree: (ii)={ann_eq} (iii)={perp_eq} (iv)={summand} (v)={hom_iso}"
        )));
    }

    Ok(GraphLikenessReport {
        canonical_iso: Condition {
            holds: ann_eq,
            witness: ann_witness.clone(),
        },
        annihilator_equals_image: Condition {
            holds: ann_eq,
            witness: ann_witness,
        },
        cut_module_equals_cycle_perp: Condition {
            holds: perp_eq,
            witness: perp_witness,
        },
        boundary_image_direct_summand: Condition {
            holds: summand,
            witness: summand_witness,
        },
        hom_iso: Condition {
            holds: hom_iso,
            witness: hom_witness,
        },
        coboundary_image_direct_summand: is_direct_summand(&bt),
        h1,
        h1_cohomology,
    })
}

/// `H¹ → Hom(H₁, ℤ)` is an isomorphism iff `H¹` is free of rank `rank H₁`.
pub fn hom_h1_iso_check(h: &OrientedHypergraph) -> bool {
    let report = homology(h, Ring::Integer);
    report.h1_cohomology.is_free() && report.h1_cohomology.free_rank == report.h1.free_rank
}

/// `C` and `B` over ℚ, with the checks of the orthogonal decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalDecomposition {
    pub cycles: Vec<Chain>,
    pub cuts: Vec<Chain>,
    /// `⟨c, b⟩ = 0` for all basis vectors.
    pub orthogonal: bool,
    /// `dim C + dim B = |E|`.
    pub dimensions_add_up: bool,
    /// `C + B = C₁`.
    pub spans_everything: bool,
}

pub fn orthogonal_decomposition_rational(h: &OrientedHypergraph) -> RationalDecomposition {
    let m = h.edge_count();
    let b = boundary_matrix(h);
    let cycles_q = nullspace(&b.as_matrix().to_rational());
    let cuts_q = column_space_basis(&b.coboundary_matrix().to_rational());
    let to_chain = |v: &Vec<BigRational>| {
        Chain::from_rationals(Degree::Edge, Ring::Rational, v.clone()).expect("rational ring")
    };
    let cycles: Vec<Chain> = cycles_q.iter().map(to_chain).collect();
    let cuts: Vec<Chain> = cuts_q.iter().map(to_chain).collect();
    let orthogonal = cycles.iter().all(|c| {
        cuts.iter()
            .all(|b| c.dot(b).map(|s| s.is_zero()).unwrap_or(false))
    });
    let all: Vec<Vec<BigRational>> = cycles_q.iter().chain(&cuts_q).cloned().collect();
    RationalDecomposition {
        dimensions_add_up: cycles.len() + cuts.len() == m,
        spans_everything: rank(&RatMatrix::from_columns(m, &all)) == m,
        orthogonal,
        cycles,
        cuts,
    }
}

/// `C` and `B` over ℤ with sum and intersection diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerDecomposition {
    pub cycles: Vec<Chain>,
    pub cuts: Vec<Chain>,
    /// `C ∩ B = {0}`.
    pub intersection_trivial: bool,
    /// `C + B = C₁`.
    pub sum_is_everything: bool,
    /// `[C₁ : C + B]` when `C + B` has full rank.
    pub sum_index: Option<BigInt>,
    /// Edges `e` with `e ∉ C + B`.
    pub edges_outside_sum: Vec<usize>,
}

pub fn integer_decomposition(h: &OrientedHypergraph) -> IntegerDecomposition {
    let m = h.edge_count();
    let b = boundary_matrix(h);
    let cycles = integer_kernel_basis(b.as_matrix());
    let cuts = integer_image_basis(&b.coboundary_matrix());
    let all: Vec<Vec<BigInt>> = cycles.iter().chain(&cuts).cloned().collect();
    let sum = generator_matrix(&all, m);
    let snf = smith_normal_form(&sum);
    let sum_index = (snf.rank() == m).then(|| snf.divisors().iter().product());
    let edges_outside_sum = (0..m)
        .filter(|&e| {
            let mut v = vec![BigInt::zero(); m];
            v[e] = BigInt::from(1);
            solve_integer(&sum, &v).is_none()
        })
        .collect();
    IntegerDecomposition {
        intersection_trivial: snf.rank() == cycles.len() + cuts.len(),
        sum_is_everything: sum_index == Some(BigInt::from(1)),
        sum_index,
        edges_outside_sum,
        cycles: edge_chains(&cycles, Ring::Integer),
        cuts: edge_chains(&cuts, Ring::Integer),
    }
}

/// Whether `C = B^⊥` over ℤ: the annihilator of a basis of `B` is compared
/// with the integer kernel of `∂₁`. Returns the first generator of `B^⊥`
/// outside `C` on failure.
pub fn check_cycles_equal_cut_perp(h: &OrientedHypergraph) -> (bool, Option<Chain>) {
    let m = h.edge_count();
    let b = boundary_matrix(h);
    let cuts = integer_image_basis(&b.coboundary_matrix());
    let cut_perp = annihilator_basis(&cuts, m);
    let cycles = integer_kernel_basis(b.as_matrix());
    if sublattice_equal(&cut_perp, &cycles, m) {
        (true, None)
    } else {
        let w = cut_perp
            .iter()
            .find(|v| !lattice_contains(&cycles, m, v))
            .or_else(|| cycles.iter().find(|v| !lattice_contains(&cut_perp, m, v)))
            .map(|v| Chain::from_integers(Degree::Edge, Ring::Integer, v));
        (false, w)
    }
}

/// Lattice basis of `D = Im(δ ∘ γ ∘ ∂₁) ⊆ C¹`, the image of `Bᵀ·B`.
pub fn compute_d(h: &OrientedHypergraph) -> Vec<Cochain> {
    edge_cochains(&integer_image_basis(&gram_matrix(h)))
}

fn gram_matrix(h: &OrientedHypergraph) -> IntMatrix {
    let b = boundary_matrix(h);
    b.coboundary_matrix().mul(b.as_matrix())
}

/// Whether `φ ≡ γ(∂x) mod Ker δ⁰` for some integer 1-chain `x`, i.e. whether
/// `[φ]` lies in `U`. Decided by integer solvability of `[B | K₀]·(x, λ) = φ`
/// where the columns of `K₀` span `Ker δ⁰`.
pub fn membership_in_u(h: &OrientedHypergraph, candidate: &Cochain) -> Result<bool> {
    let n = h.vertex_count();
    if candidate.degree() != Degree::Vertex || candidate.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: candidate.len(),
        });
    }
    let Some(target) = candidate.to_integer_vec() else {
        return Ok(false);
    };
    let b = boundary_matrix(h);
    let cocycles = integer_kernel_basis(&b.coboundary_matrix());
    let system = b.as_matrix().hstack(&generator_matrix(&cocycles, n));
    Ok(solve_integer(&system, &target).is_some())
}

/// Checks that `x ↦ ψ_∂x` induces an isomorphism `C₁ / Ker ∂₁ → D`:
/// `rank D = |E| − rank Ker ∂₁`, and on every sample, `ψ_∂x = 0` forces `∂x = 0`.
pub fn prop_d_isomorphism_check(h: &OrientedHypergraph, samples: &[Chain]) -> Result<bool> {
    let kernel_rank = integer_kernel_basis(boundary_matrix(h).as_matrix()).len();
    let rank_ok = image_rank(&gram_matrix(h)) == h.edge_count() - kernel_rank;
    for x in samples {
        if psi_partial(h, x)?.is_zero() && !boundary(h, x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(rank_ok)
}

/// First `δ(φ_v)` that lies in `Im δ⁰` but not in `D`, if `D ≠ Im δ⁰`.
pub fn d_strictness_witness(h: &OrientedHypergraph) -> Option<Cochain> {
    let m = h.edge_count();
    let bt = boundary_matrix(h).coboundary_matrix();
    let d = integer_image_basis(&gram_matrix(h));
    (0..h.vertex_count())
        .map(|v| bt.column(v))
        .find(|col| !lattice_contains(&d, m, col))
        .map(|col| Cochain::from_integers(Degree::Edge, Ring::Integer, &col))
}

/// Whether every generator of `D` lies in `Im δ⁰`.
pub fn d_within_coboundaries(h: &OrientedHypergraph) -> bool {
    let m = h.edge_count();
    let image = integer_image_basis(&boundary_matrix(h).coboundary_matrix());
    compute_d(h)
        .iter()
        .all(|c| lattice_contains(&image, m, &dense_ints(c.to_dense())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn main_example() -> OrientedHypergraph {
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

    fn parallel_edges() -> OrientedHypergraph {
        OrientedHypergraph::from_index_edges(2, [(&[0][..], &[1][..]), (&[0][..], &[1][..])]).unwrap()
    }

    #[test]
    fn edgeless_homology_is_trivial() {
        let h = OrientedHypergraph::from_index_edges(3, []).unwrap();
        let r = homology(&h, Ring::Integer);
        assert!(r.h1.is_trivial());
        assert!(r.h1_cohomology.is_trivial());
        assert!(hom_h1_iso_check(&h));
        let d = orthogonal_decomposition_rational(&h);
        assert!(d.cycles.is_empty() && d.cuts.is_empty() && d.dimensions_add_up);
    }

    #[test]
    fn main_example_is_not_graph_like() {
        let h = main_example();
        let r = graph_likeness(&h).unwrap();
        assert!(!r.is_graph_like());
        assert!(r.conditions().iter().all(|c| !c.holds && c.witness.is_some()));
        match &r.annihilator_equals_image.witness {
            Some(Witness::AnnihilatorNotCoboundary(psi)) => {
                assert_eq!(psi, &Cochain::from_i64s(Degree::Edge, &[1, 0, 0]));
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(!hom_h1_iso_check(&h));
    }

    #[test]
    fn single_hyperedge_is_graph_like() {
        let h = OrientedHypergraph::from_index_edges(3, [(&[0][..], &[1, 2][..])]).unwrap();
        assert!(graph_likeness(&h).unwrap().is_graph_like());
    }

    #[test]
    fn parallel_edges_decompositions() {
        let h = parallel_edges();
        let q = orthogonal_decomposition_rational(&h);
        assert!(q.orthogonal && q.dimensions_add_up && q.spans_everything);
        let z = integer_decomposition(&h);
        assert!(z.intersection_trivial);
        assert!(!z.sum_is_everything);
        assert_eq!(z.sum_index, Some(BigInt::from(2)));
        assert_eq!(z.edges_outside_sum, vec![0, 1]);
        assert!(check_cycles_equal_cut_perp(&h).0);
    }

    #[test]
    fn u_membership_in_connected_graph() {
        let h = parallel_edges();
        let phi_v = Cochain::basis(Degree::Vertex, Ring::Integer, 2, 0).unwrap();
        assert!(!membership_in_u(&h, &phi_v).unwrap());
        let zero = Cochain::zero(Degree::Vertex, Ring::Integer, 2);
        assert!(membership_in_u(&h, &zero).unwrap());
        let boundary_like = Cochain::from_i64s(Degree::Vertex, &[-1, 1]);
        assert!(membership_in_u(&h, &boundary_like).unwrap());
    }

    #[test]
    fn d_is_strict_in_main_example() {
        let h = main_example();
        assert!(d_within_coboundaries(&h));
        assert!(d_strictness_witness(&h).is_some());
        assert_eq!(compute_d(&h).len(), 3);
        assert!(prop_d_isomorphism_check(&h, &[]).unwrap());
    }
}

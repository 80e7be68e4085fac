//! Boundary `∂₁: C₁ → C₀`, coboundary `δ⁰: C⁰ → C¹`, and the boundary
//! inner product `⟨x, y⟩_∂ = Σ_v α_v β_v` where `∂x = Σ α_v v`, `∂y = Σ β_v v`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::chain::{gamma, Chain, Cochain, Degree};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::linalg::IntMatrix;
use crate::scalar::Scalar;

/// The `|V| × |E|` matrix of `∂₁`: entry `(v, e)` is `+1` if `v` is a head of
/// `e`, `−1` if it is a tail, `0` otherwise. Its transpose represents `δ⁰`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix(IntMatrix);

impl BoundaryMatrix {
    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    /// Matrix of `δ⁰`.
    pub fn coboundary_matrix(&self) -> IntMatrix {
        self.0.transpose()
    }

    pub fn entry(&self, vertex: usize, edge: usize) -> i8 {
        let x = self.0.get(vertex, edge);
        if x.is_zero() {
            0
        } else if *x > BigInt::zero() {
            1
        } else {
            -1
        }
    }
}

pub fn boundary_matrix(h: &OrientedHypergraph) -> BoundaryMatrix {
    let mut m = IntMatrix::zeros(h.vertex_count(), h.edge_count());
    for (j, edge) in h.edges().iter().enumerate() {
        for &v in edge.heads() {
            m.set(v, j, BigInt::from(1));
        }
        for &v in edge.tails() {
            m.set(v, j, BigInt::from(-1));
        }
    }
    BoundaryMatrix(m)
}

fn expect_shape(degree: Degree, len: usize, want_degree: Degree, want_len: usize) -> Result<()> {
    if degree != want_degree {
        return Err(Error::DegreeMismatch {
            expected: want_degree.as_usize(),
            found: degree.as_usize(),
        });
    }
    if len != want_len {
        return Err(Error::DimensionMismatch {
            expected: want_len,
            found: len,
        });
    }
    Ok(())
}

/// `∂₁x`, the linear extension of `(A, B) ↦ Σ_{v∈B} v − Σ_{v∈A} v`.
pub fn boundary(h: &OrientedHypergraph, x: &Chain) -> Result<Chain> {
    expect_shape(x.degree(), x.len(), Degree::Edge, h.edge_count())?;
    let mut acc = vec![BigRational::zero(); h.vertex_count()];
    for (e, coeff) in x.iter() {
        let edge = &h.edges()[e];
        for &v in edge.heads() {
            acc[v] += coeff;
        }
        for &v in edge.tails() {
            acc[v] -= coeff;
        }
    }
    Chain::from_rationals(Degree::Vertex, x.ring(), acc)
}

/// `δ⁰φ = φ ∘ ∂₁`, evaluated edge by edge.
pub fn coboundary(h: &OrientedHypergraph, phi: &Cochain) -> Result<Cochain> {
    expect_shape(phi.degree(), phi.len(), Degree::Vertex, h.vertex_count())?;
    let values = h
        .edges()
        .iter()
        .map(|edge| {
            let heads: BigRational = edge.heads().iter().map(|&v| phi.rational_coefficient(v)).sum();
            let tails: BigRational = edge.tails().iter().map(|&v| phi.rational_coefficient(v)).sum();
            heads - tails
        })
        .collect();
    Cochain::from_rationals(Degree::Edge, phi.ring(), values)
}

/// `ψ_∂x = δ(γ(∂x))`.
pub fn psi_partial(h: &OrientedHypergraph, x: &Chain) -> Result<Cochain> {
    coboundary(h, &gamma(&boundary(h, x)?))
}

/// `⟨x, y⟩_∂`, computed as the canonical inner product of `∂x` and `∂y`.
pub fn boundary_inner_product(h: &OrientedHypergraph, x: &Chain, y: &Chain) -> Result<Scalar> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch {
            expected: x.ring(),
            found: y.ring(),
        });
    }
    boundary(h, x)?.dot(&boundary(h, y)?)
}

/// `⟨x, y⟩` with the basis orthonormal.
pub fn canonical_inner_product(x: &Chain, y: &Chain) -> Result<Scalar> {
    x.dot(y)
}

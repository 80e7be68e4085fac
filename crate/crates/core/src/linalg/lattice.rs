//! Integer lattices: kernels, images, saturation, solvability, annihilators.
//!
//! A lattice is given by a list of generators together with its ambient
//! dimension; the dimension is always explicit so that an empty generator
//! list is unambiguous.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::rational;
use super::smith::smith_normal_form;
use crate::scalar::Ring;

/// Isomorphism type `ℤ^free_rank ⊕ ℤ/t₁ ⊕ … ⊕ ℤ/t_k` of a finitely generated
/// abelian group, with `t₁ | t₂ | …` and every `tᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl ModuleStructure {
    pub fn free(rank: usize) -> Self {
        ModuleStructure {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for ModuleStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Matrix whose columns are `vectors`, each of length `ambient`.
pub fn generator_matrix(vectors: &[Vec<BigInt>], ambient: usize) -> IntMatrix {
    IntMatrix::from_columns(ambient, vectors)
}

/// Basis of the integer kernel `{x ∈ ℤᶜ : M·x = 0}`. The returned lattice is
/// always saturated.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank()..m.cols()).map(|j| snf.right.column(j)).collect()
}

/// Basis of the image lattice `M·ℤᶜ ⊆ ℤʳ`.
pub fn integer_image_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    snf.divisors()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            snf.left_inverse
                .column(i)
                .into_iter()
                .map(|x| x * d)
                .collect()
        })
        .collect()
}

/// Basis of the saturation `(M·ℚᶜ) ∩ ℤʳ` of the image lattice.
pub fn saturation_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (0..snf.rank()).map(|i| snf.left_inverse.column(i)).collect()
}

/// Kernel basis over the given ring, as rational vectors. Over ℤ the vectors
/// are integral and form a lattice basis.
pub fn kernel_basis(m: &IntMatrix, ring: Ring) -> Vec<Vec<BigRational>> {
    match ring {
        Ring::Rational => rational::nullspace(&m.to_rational()),
        Ring::Integer => to_rational_vectors(integer_kernel_basis(m)),
    }
}

/// Image basis over the given ring, as rational vectors.
pub fn image_basis(m: &IntMatrix, ring: Ring) -> Vec<Vec<BigRational>> {
    match ring {
        Ring::Rational => rational::column_space_basis(&m.to_rational()),
        Ring::Integer => to_rational_vectors(integer_image_basis(m)),
    }
}

pub fn image_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// The column lattice of `M` is a direct summand of `ℤʳ` iff all its
/// elementary divisors are 1.
pub fn is_direct_summand(m: &IntMatrix) -> bool {
    smith_normal_form(m).divisors().iter().all(One::is_one)
}

/// Some `x ∈ ℤᶜ` with `M·x = b`, or `None` if there is no integer solution
/// (even when a rational one exists).
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let snf = smith_normal_form(m);
    // S·y = U·b with x = V·y
    let ub = snf.left.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, d) in snf.divisors().iter().enumerate() {
        let (q, r) = ub[i].div_rem(d);
        if !r.is_zero() {
            return None;
        }
        y[i] = q;
    }
    if ub[snf.rank()..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(snf.right.mul_vec(&y))
}

/// Whether `v` lies in the lattice generated by `generators`.
pub fn lattice_contains(generators: &[Vec<BigInt>], ambient: usize, v: &[BigInt]) -> bool {
    solve_integer(&generator_matrix(generators, ambient), v).is_some()
}

/// Basis of `{ y ∈ ℤᵐ : ⟨y, k⟩ = 0 for every k in generators }`. This is the
/// integer kernel of the matrix whose rows are the generators, hence saturated.
pub fn annihilator_basis(generators: &[Vec<BigInt>], ambient: usize) -> Vec<Vec<BigInt>> {
    let rows = generator_matrix(generators, ambient).transpose();
    integer_kernel_basis(&rows)
}

/// `ℤʳ / M·ℤᶜ`: free rank `r − rank M`, torsion the divisors exceeding 1.
pub fn quotient_structure(m: &IntMatrix) -> ModuleStructure {
    let snf = smith_normal_form(m);
    ModuleStructure {
        free_rank: m.rows() - snf.rank(),
        torsion: snf.divisors().into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Whether two generator lists span the same lattice: every generator of
/// each side is an integer combination of the other side's generators.
pub fn sublattice_equal(a: &[Vec<BigInt>], b: &[Vec<BigInt>], ambient: usize) -> bool {
    let ma = generator_matrix(a, ambient);
    let mb = generator_matrix(b, ambient);
    a.iter().all(|v| solve_integer(&mb, v).is_some())
        && b.iter().all(|v| solve_integer(&ma, v).is_some())
}

fn to_rational_vectors(vs: Vec<Vec<BigInt>>) -> Vec<Vec<BigRational>> {
    vs.into_iter()
        .map(|v| v.into_iter().map(BigRational::from_integer).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solve_integer_parity() {
        let m = IntMatrix::from_i64_rows(&[&[2]]);
        assert_eq!(solve_integer(&m, &ints(&[1])), None);
        assert_eq!(solve_integer(&m, &ints(&[4])), Some(ints(&[2])));
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let z = IntMatrix::zeros(2, 3);
        let k = integer_kernel_basis(&z);
        assert_eq!(k.len(), 3);
        assert!(sublattice_equal(
            &k,
            &[ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])],
            3
        ));
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator_basis(&[], 3).len(), 3);
        let ann = annihilator_basis(&[ints(&[1, 0])], 2);
        assert!(sublattice_equal(&ann, &[ints(&[0, 1])], 2));
        let ann = annihilator_basis(&[ints(&[1, -1])], 2);
        assert!(sublattice_equal(&ann, &[ints(&[1, 1])], 2));
    }

    #[test]
    fn sublattice_examples() {
        assert!(sublattice_equal(&[ints(&[1, 1])], &[ints(&[-1, -1])], 2));
        assert!(!sublattice_equal(&[ints(&[2, 0])], &[ints(&[1, 0])], 2));
        assert!(sublattice_equal(&[], &[], 2));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_structure(&IntMatrix::identity(3)), ModuleStructure::free(0));
        assert_eq!(quotient_structure(&IntMatrix::zeros(4, 2)), ModuleStructure::free(4));
        let q = quotient_structure(&IntMatrix::from_i64_rows(&[&[2, 0], &[0, 0]]));
        assert_eq!(q.free_rank, 1);
        assert_eq!(q.torsion, ints(&[2]));
        assert_eq!(q.to_string(), "Z + Z/2");
    }

    #[test]
    fn image_and_saturation() {
        let m = IntMatrix::from_i64_rows(&[&[2], &[4]]);
        let img = integer_image_basis(&m);
        assert!(sublattice_equal(&img, &[ints(&[2, 4])], 2));
        let sat = saturation_basis(&m);
        assert!(sublattice_equal(&sat, &[ints(&[1, 2])], 2));
        assert!(!is_direct_summand(&m));
        assert_eq!(image_rank(&m), 1);
    }
}

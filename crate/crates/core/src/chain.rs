//! Chains and cochains in degrees 0 and 1.
//!
//! Both are stored as sparse coefficient maps over the vertex or edge basis.
//! A cochain is a homomorphism from chains to the coefficient ring; it is
//! represented by its values on the basis, so evaluation is a dot product
//! and `gamma` is a reinterpretation of the same coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

/// Degree of a chain: 0 is indexed by vertices, 1 by edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Vertex = 0,
    Edge = 1,
}

impl Degree {
    pub fn as_usize(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct SparseVector {
    degree: Degree,
    ring: Ring,
    len: usize,
    // Canonical form: no explicit zeros; integral when `ring` is Integer.
    coeffs: BTreeMap<usize, BigRational>,
}

impl SparseVector {
    fn zero(degree: Degree, ring: Ring, len: usize) -> Self {
        SparseVector {
            degree,
            ring,
            len,
            coeffs: BTreeMap::new(),
        }
    }

    fn from_dense(degree: Degree, ring: Ring, values: Vec<BigRational>) -> Result<Self> {
        let len = values.len();
        let mut coeffs = BTreeMap::new();
        for (i, q) in values.into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if ring == Ring::Integer && !q.is_integer() {
                return Err(Error::NotIntegral(q.to_string()));
            }
            coeffs.insert(i, q);
        }
        Ok(SparseVector {
            degree,
            ring,
            len,
            coeffs,
        })
    }

    fn set(&mut self, index: usize, value: BigRational) -> Result<()> {
        if index >= self.len {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len,
            });
        }
        if self.ring == Ring::Integer && !value.is_integer() {
            return Err(Error::NotIntegral(value.to_string()));
        }
        if value.is_zero() {
            self.coeffs.remove(&index);
        } else {
            self.coeffs.insert(index, value);
        }
        Ok(())
    }

    fn get(&self, index: usize) -> BigRational {
        self.coeffs.get(&index).cloned().unwrap_or_else(BigRational::zero)
    }

    fn compatible(&self, other: &SparseVector) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                expected: self.ring,
                found: other.ring,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree.as_usize(),
                found: other.degree.as_usize(),
            });
        }
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    fn combine(&self, other: &SparseVector, sign: i32) -> Result<SparseVector> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (&i, q) in &other.coeffs {
            let v = if sign > 0 {
                out.get(i) + q
            } else {
                out.get(i) - q
            };
            out.set(i, v)?;
        }
        Ok(out)
    }

    fn scale(&self, factor: &BigRational) -> Result<SparseVector> {
        if self.ring == Ring::Integer && !factor.is_integer() {
            return Err(Error::NotIntegral(factor.to_string()));
        }
        let mut out = SparseVector::zero(self.degree, self.ring, self.len);
        if factor.is_zero() {
            return Ok(out);
        }
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(&i, q)| (i, q * factor))
            .collect();
        Ok(out)
    }

    fn dot(&self, other: &SparseVector) -> Result<BigRational> {
        self.compatible(other)?;
        let mut acc = BigRational::zero();
        for (i, q) in &self.coeffs {
            if let Some(r) = other.coeffs.get(i) {
                acc += q * r;
            }
        }
        Ok(acc)
    }

    fn to_ring(&self, ring: Ring) -> Result<SparseVector> {
        if ring == Ring::Integer {
            if let Some(q) = self.coeffs.values().find(|q| !q.is_integer()) {
                return Err(Error::NotIntegral(q.to_string()));
            }
        }
        Ok(SparseVector {
            ring,
            ..self.clone()
        })
    }
}

macro_rules! sparse_wrapper {
    ($name:ident) => {
        #[allow(clippy::len_without_is_empty)]
        impl $name {
            pub fn zero(degree: Degree, ring: Ring, len: usize) -> Self {
                $name(SparseVector::zero(degree, ring, len))
            }

            /// The basis element at `index`.
            pub fn basis(degree: Degree, ring: Ring, len: usize, index: usize) -> Result<Self> {
                let mut v = SparseVector::zero(degree, ring, len);
                v.set(index, BigRational::one())?;
                Ok($name(v))
            }

            pub fn from_rationals(
                degree: Degree,
                ring: Ring,
                values: Vec<BigRational>,
            ) -> Result<Self> {
                SparseVector::from_dense(degree, ring, values).map($name)
            }

            pub fn from_integers(degree: Degree, ring: Ring, values: &[BigInt]) -> Self {
                let values = values
                    .iter()
                    .map(|n| BigRational::from_integer(n.clone()))
                    .collect();
                $name(SparseVector::from_dense(degree, ring, values).expect("integral input"))
            }

            /// Integer-ring convenience constructor from machine integers.
            pub fn from_i64s(degree: Degree, values: &[i64]) -> Self {
                let values: Vec<BigInt> = values.iter().map(|&n| BigInt::from(n)).collect();
                Self::from_integers(degree, Ring::Integer, &values)
            }

            pub fn degree(&self) -> Degree {
                self.0.degree
            }

            pub fn ring(&self) -> Ring {
                self.0.ring
            }

            /// Size of the basis this vector is expressed over.
            pub fn len(&self) -> usize {
                self.0.len
            }

            pub fn is_zero(&self) -> bool {
                self.0.coeffs.is_empty()
            }

            pub fn coefficient(&self, index: usize) -> Scalar {
                Scalar::from_rational(self.0.ring, self.0.get(index))
                    .expect("canonical form keeps integer-ring coefficients integral")
            }

            pub fn rational_coefficient(&self, index: usize) -> BigRational {
                self.0.get(index)
            }

            pub fn set(&mut self, index: usize, value: &Scalar) -> Result<()> {
                if value.ring() != self.0.ring {
                    return Err(Error::RingMismatch {
                        expected: self.0.ring,
                        found: value.ring(),
                    });
                }
                self.0.set(index, value.to_rational())
            }

            /// Nonzero entries in index order.
            pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> + '_ {
                self.0.coeffs.iter().map(|(&i, q)| (i, q))
            }

            pub fn support(&self) -> Vec<usize> {
                self.0.coeffs.keys().copied().collect()
            }

            pub fn to_dense(&self) -> Vec<BigRational> {
                (0..self.0.len).map(|i| self.0.get(i)).collect()
            }

            /// Dense integer coefficients, or `None` if some coefficient is fractional.
            pub fn to_integer_vec(&self) -> Option<Vec<BigInt>> {
                self.to_dense()
                    .into_iter()
                    .map(|q| q.is_integer().then(|| q.to_integer()))
                    .collect()
            }

            pub fn is_integral(&self) -> bool {
                self.0.coeffs.values().all(|q| q.is_integer())
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                self.0.combine(&other.0, 1).map($name)
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self> {
                self.0.combine(&other.0, -1).map($name)
            }

            pub fn scale(&self, factor: &Scalar) -> Result<Self> {
                if factor.ring() != self.0.ring {
                    return Err(Error::RingMismatch {
                        expected: self.0.ring,
                        found: factor.ring(),
                    });
                }
                self.0.scale(&factor.to_rational()).map($name)
            }

            pub fn neg(&self) -> Self {
                $name(
                    self.0
                        .scale(&-BigRational::one())
                        .expect("-1 is integral"),
                )
            }

            /// Reinterprets the coefficients over another ring. Moving to the
            /// integers fails if a coefficient is fractional.
            pub fn to_ring(&self, ring: Ring) -> Result<Self> {
                self.0.to_ring(ring).map($name)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let prefix = match self.0.degree {
                    Degree::Vertex => "v",
                    Degree::Edge => "e",
                };
                if self.0.coeffs.is_empty() {
                    return f.write_str("0");
                }
                for (k, (i, q)) in self.0.coeffs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({q})·{prefix}{i}")?;
                }
                Ok(())
            }
        }
    };
}

/// A formal linear combination of vertices (degree 0) or edges (degree 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain(SparseVector);

/// A homomorphism from chains of the same degree to the coefficient ring,
/// stored as its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain(SparseVector);

sparse_wrapper!(Chain);
sparse_wrapper!(Cochain);

impl Chain {
    /// Canonical inner product `⟨x, y⟩` with the basis orthonormal.
    pub fn dot(&self, other: &Chain) -> Result<Scalar> {
        let q = self.0.dot(&other.0)?;
        Scalar::from_rational(self.0.ring, q)
    }
}

impl Cochain {
    /// Evaluates this cochain on a chain of the same degree and ring.
    pub fn evaluate(&self, chain: &Chain) -> Result<Scalar> {
        let q = self.0.dot(&chain.0)?;
        Scalar::from_rational(self.0.ring, q)
    }
}

/// Turns a chain into the cochain taking each basis element to its coefficient.
pub fn gamma(chain: &Chain) -> Cochain {
    Cochain(chain.0.clone())
}

pub fn gamma_inverse(cochain: &Cochain) -> Chain {
    Chain(cochain.0.clone())
}

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring of chains, cochains and lattices.
///
/// Real coefficients are realised as exact rationals: every input is
/// integral, so every linear system that arises has a rational solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integer,
    Rational,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => f.write_str("integer"),
            Ring::Rational => f.write_str("rational"),
        }
    }
}

/// A ring-tagged exact scalar. Rationals are kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Integer(BigInt),
    Rational(BigRational),
}

impl Scalar {
    pub fn zero(ring: Ring) -> Self {
        match ring {
            Ring::Integer => Scalar::Integer(BigInt::zero()),
            Ring::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(ring: Ring) -> Self {
        match ring {
            Ring::Integer => Scalar::Integer(BigInt::one()),
            Ring::Rational => Scalar::Rational(BigRational::one()),
        }
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        Scalar::Integer(value.into())
    }

    pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Scalar::Rational(BigRational::new(numer.into(), denom.into()))
    }

    /// Builds a scalar of `ring` from a rational value, failing if the ring
    /// is `Integer` and the value has a nontrivial denominator.
    pub fn from_rational(ring: Ring, value: BigRational) -> Result<Self> {
        match ring {
            Ring::Rational => Ok(Scalar::Rational(value)),
            Ring::Integer if value.is_integer() => Ok(Scalar::Integer(value.to_integer())),
            Ring::Integer => Err(Error::NotIntegral(value.to_string())),
        }
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Integer(_) => Ring::Integer,
            Scalar::Rational(_) => Ring::Rational,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Integer(n) => BigRational::from_integer(n.clone()),
            Scalar::Rational(q) => q.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Integer(n) => n.is_zero(),
            Scalar::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Integer(n) => n.is_positive(),
            Scalar::Rational(q) => q.is_positive(),
        }
    }

    fn check_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: self.ring(),
                found: other.ring(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            (a, b) => Scalar::Rational(a.to_rational() + b.to_rational()),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_ring(other)?;
        Ok(match (self, other) {
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            (a, b) => Scalar::Rational(a.to_rational() * b.to_rational()),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Integer(n) => Scalar::Integer(-n),
            Scalar::Rational(q) => Scalar::Rational(-q),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Integer(n) => write!(f, "{n}"),
            Scalar::Rational(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = Scalar::rational(6, -4);
        assert_eq!(q, Scalar::rational(-3, 2));
        if let Scalar::Rational(r) = q {
            assert!(r.denom().is_positive());
        }
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let err = Scalar::integer(1).checked_add(&Scalar::rational(1, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::RingMismatch {
                expected: Ring::Integer,
                found: Ring::Rational
            }
        );
    }

    #[test]
    fn integer_ring_rejects_fractions() {
        let half = BigRational::new(1.into(), 2.into());
        assert!(Scalar::from_rational(Ring::Integer, half.clone()).is_err());
        assert_eq!(
            Scalar::from_rational(Ring::Rational, half.clone()).unwrap(),
            Scalar::Rational(half)
        );
        let two = BigRational::from_integer(2.into());
        assert_eq!(
            Scalar::from_rational(Ring::Integer, two).unwrap(),
            Scalar::integer(2)
        );
    }

    #[test]
    fn no_overflow() {
        let big = Scalar::integer(i64::MAX);
        let sq = big.checked_mul(&big).unwrap();
        assert_eq!(
            sq.to_string(),
            "85070591730234615847396907784232501249"
        );
    }
}

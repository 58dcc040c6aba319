//! Coefficient rings.
//!
//! A [`CoeffRing`] is a context object describing a commutative ring with 1
//! together with a reduction relation on its elements. The polynomial layer
//! only ever talks to coefficients through this trait, so a new ring can be
//! plugged in by implementing it.
//!
//! The reduction relation must satisfy three properties:
//!
//! - a non-zero multiple of `b` reduces to 0 by `b`;
//! - if `c` reduces to `d` by `b` then `c - d` is a multiple of `b`;
//! - if `a` reduces by `b` and `b` reduces by `c`, then `a` reduces by `c`.
//!
//! Beyond reduction, completion needs two subroutines from the ring: a
//! Gröbner basis of a finite set of elements with representations in both
//! directions ([`CoeffRing::groebner`]), and a generating set of the solution
//! module of `a1*c1 + ... + aj*cj = 0` ([`CoeffRing::syzygy_basis`]).
//!
//! Three instances ship with the crate: [`PrimeField`], [`RationalField`] and
//! [`IntegerRing`].

mod euclid;
mod integers;
mod prime_field;
mod rationals;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

pub use euclid::{extended_gcd, ExtendedGcd};
pub use integers::IntegerRing;
pub use prime_field::{is_prime, PrimeField, Residue};
pub use rationals::RationalField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero element where a non-zero element is required")]
    ZeroElement,
    #[error("empty basis")]
    EmptyBasis,
    #[error("syzygies of {0} coefficients are not supported; only pairs are")]
    UnsupportedArity(usize),
    #[error("non-integer coefficient {0}")]
    NonIntegerCoefficient(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient {0} does not fit the coefficient type")]
    Overflow(String),
    #[error("unknown ring `{0}` (expected gf(p), qq or zz)")]
    UnknownRing(String),
}

/// Which ring a session computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    PrimeField(u64),
    Rationals,
    Integers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    pub kind: RingKind,
    /// Whether the reduction relation yields strong (unique normal form)
    /// Gröbner bases. True for every shipped ring.
    pub admits_strong_gb: bool,
}

impl RingDescriptor {
    /// Builds a descriptor, checking primality for prime fields.
    pub fn new(kind: RingKind) -> Result<Self, RingError> {
        if let RingKind::PrimeField(p) = kind {
            if !is_prime(p) {
                return Err(RingError::NotPrime(p));
            }
        }
        Ok(Self {
            kind,
            admits_strong_gb: true,
        })
    }

    pub fn is_field(&self) -> bool {
        !matches!(self.kind, RingKind::Integers)
    }
}

impl Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::PrimeField(p) => write!(f, "gf({p})"),
            RingKind::Rationals => f.write_str("qq"),
            RingKind::Integers => f.write_str("zz"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = RingError;

    /// Parses the CLI ring selector: `gf(p)`, `qq` or `zz`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        let kind = match t.as_str() {
            "qq" => RingKind::Rationals,
            "zz" => RingKind::Integers,
            _ => {
                let inner = t
                    .strip_prefix("gf(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| RingError::UnknownRing(s.to_string()))?;
                let p = inner
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| RingError::UnknownRing(s.to_string()))?;
                RingKind::PrimeField(p)
            }
        };
        RingDescriptor::new(kind)
    }
}

/// A solution `<a1, ..., aj>` of `a1*c1 + ... + aj*cj = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyzygyVector<E> {
    pub entries: Vec<E>,
}

/// Output of [`CoeffRing::groebner`].
///
/// `to_gb[i]` writes `gb[i]` over the input basis; `from_gb[k]` writes the
/// k-th input element over `gb`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingGroebner<E> {
    pub gb: Vec<E>,
    pub to_gb: Vec<Vec<E>>,
    pub from_gb: Vec<Vec<E>>,
}

/// A commutative ring with 1 and a well-founded reduction relation.
pub trait CoeffRing: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Display + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Embeds the rational number `num/den`, failing when it has no image in
    /// the ring (non-integer over Z, zero denominator).
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, RingError>;

    /// One reduction step of `c` by `b`: returns `(k, d)` with `c = k*b + d`
    /// and `d` strictly smaller than `c`, or `None` when `c` is in normal
    /// form with respect to `b`.
    fn reduce_step(
        &self,
        c: &Self::Elem,
        b: &Self::Elem,
    ) -> Result<Option<(Self::Elem, Self::Elem)>, RingError>;

    /// Gröbner basis of the ideal generated by `basis`, with representations
    /// in both directions.
    fn groebner(&self, basis: &[Self::Elem]) -> Result<RingGroebner<Self::Elem>, RingError>;

    /// Generators of the module of solutions of `sum a_i * coeffs_i = 0`.
    fn syzygy_basis(
        &self,
        coeffs: &[Self::Elem],
    ) -> Result<Vec<SyzygyVector<Self::Elem>>, RingError>;

    /// A unit `u` such that `u * a` is the canonical associate of `a`
    /// (1 over a field after scaling, the positive representative over Z).
    fn unit_normal(&self, a: &Self::Elem) -> Self::Elem;

    /// Whether the element prints with a leading minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_field(&self) -> bool {
        self.descriptor().is_field()
    }

    /// Dot product of `a` and `b`, which must have equal length.
    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        debug_assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }
}

/// Checks the shared preconditions of `groebner`.
pub(crate) fn check_basis<R: CoeffRing>(ring: &R, basis: &[R::Elem]) -> Result<(), RingError> {
    if basis.is_empty() {
        return Err(RingError::EmptyBasis);
    }
    if basis.iter().any(|c| ring.is_zero(c)) {
        return Err(RingError::ZeroElement);
    }
    Ok(())
}

/// Checks the shared preconditions of `syzygy_basis` for the pairwise rings.
pub(crate) fn check_pair<R: CoeffRing>(ring: &R, coeffs: &[R::Elem]) -> Result<(), RingError> {
    if coeffs.iter().any(|c| ring.is_zero(c)) {
        return Err(RingError::ZeroElement);
    }
    if coeffs.len() != 2 {
        return Err(RingError::UnsupportedArity(coeffs.len()));
    }
    Ok(())
}

/// Groebner basis over a field: the unit ideal, generated by 1.
pub(crate) fn field_groebner<R: CoeffRing>(
    ring: &R,
    basis: &[R::Elem],
    inverse: impl Fn(&R::Elem) -> R::Elem,
) -> Result<RingGroebner<R::Elem>, RingError> {
    check_basis(ring, basis)?;
    let mut row = vec![ring.zero(); basis.len()];
    row[0] = inverse(&basis[0]);
    Ok(RingGroebner {
        gb: vec![ring.one()],
        to_gb: vec![row],
        from_gb: basis.iter().map(|c| vec![c.clone()]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ring_selectors() {
        assert_eq!(
            "gf(7)".parse::<RingDescriptor>().unwrap().kind,
            RingKind::PrimeField(7)
        );
        assert_eq!("qq".parse::<RingDescriptor>().unwrap().kind, RingKind::Rationals);
        assert_eq!("ZZ".parse::<RingDescriptor>().unwrap().kind, RingKind::Integers);
        assert_eq!(
            "gf(8)".parse::<RingDescriptor>(),
            Err(RingError::NotPrime(8))
        );
        assert!(matches!(
            "rr".parse::<RingDescriptor>(),
            Err(RingError::UnknownRing(_))
        ));
        assert!("gf(x)".parse::<RingDescriptor>().is_err());
    }

    #[test]
    fn descriptor_display_round_trips() {
        for s in ["gf(5)", "qq", "zz"] {
            let d: RingDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            assert!(d.admits_strong_gb);
        }
    }
}

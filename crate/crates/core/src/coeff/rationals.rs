use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{
    check_pair, field_groebner, CoeffRing, RingDescriptor, RingError, RingGroebner, RingKind,
    SyzygyVector,
};

/// The rational numbers. Every non-zero element reduces to 0 by every other
/// non-zero element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalField<T = BigInt>(PhantomData<T>);

impl<T> RationalField<T> {
    pub const fn new() -> Self {
        Self(PhantomData)
    }
}

impl<T> Default for RationalField<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn convert<T: TryFrom<BigInt>>(n: &BigInt) -> Result<T, RingError> {
    T::try_from(n.clone()).map_err(|_| RingError::Overflow(n.to_string()))
}

impl<T> CoeffRing for RationalField<T>
where
    T: Integer + Signed + Clone + Hash + Debug + Display + Send + Sync + From<i64> + TryFrom<BigInt>,
{
    type Elem = Ratio<T>;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor {
            kind: RingKind::Rationals,
            admits_strong_gb: true,
        }
    }

    fn zero(&self) -> Ratio<T> {
        Ratio::zero()
    }
    fn one(&self) -> Ratio<T> {
        Ratio::one()
    }
    fn is_zero(&self, a: &Ratio<T>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a + b
    }
    fn sub(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a - b
    }
    fn neg(&self, a: &Ratio<T>) -> Ratio<T> {
        -a
    }
    fn mul(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a * b
    }

    fn from_i64(&self, n: i64) -> Ratio<T> {
        Ratio::from_integer(T::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Ratio<T>, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Ratio::new(convert(num)?, convert(den)?))
    }

    fn reduce_step(
        &self,
        c: &Ratio<T>,
        b: &Ratio<T>,
    ) -> Result<Option<(Ratio<T>, Ratio<T>)>, RingError> {
        if b.is_zero() {
            return Err(RingError::ZeroElement);
        }
        if c.is_zero() {
            return Ok(None);
        }
        Ok(Some((c / b, Ratio::zero())))
    }

    fn groebner(&self, basis: &[Ratio<T>]) -> Result<RingGroebner<Ratio<T>>, RingError> {
        field_groebner(self, basis, |c| c.recip())
    }

    fn syzygy_basis(
        &self,
        coeffs: &[Ratio<T>],
    ) -> Result<Vec<SyzygyVector<Ratio<T>>>, RingError> {
        check_pair(self, coeffs)?;
        Ok(vec![SyzygyVector {
            entries: vec![coeffs[1].clone(), -coeffs[0].clone()],
        }])
    }

    fn unit_normal(&self, a: &Ratio<T>) -> Ratio<T> {
        if a.is_zero() {
            Ratio::one()
        } else {
            a.recip()
        }
    }

    fn is_negative(&self, a: &Ratio<T>) -> bool {
        a.is_negative()
    }
}

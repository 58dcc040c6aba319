use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{
    check_basis, check_pair, extended_gcd, CoeffRing, RingDescriptor, RingError, RingGroebner,
    RingKind, SyzygyVector,
};

/// The integers, with reduction by symmetric remainder.
///
/// `c` reduces by `b` to `d = c - k*b` where `d` is the representative of
/// `c mod b` in `(-|b|/2, |b|/2]`, provided `d != c`. On the tie the positive
/// representative is kept, so `-1` reduces by `2` to `1` but `1` is already
/// in normal form.
///
/// Generic over the integer type; [`crate::Integers`] uses `BigInt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegerRing<T = BigInt>(PhantomData<T>);

impl<T> IntegerRing<T> {
    pub const fn new() -> Self {
        Self(PhantomData)
    }
}

impl<T> Default for IntegerRing<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> IntegerRing<T>
where
    T: Integer + Signed + Clone,
{
    /// Representative of `c mod b` in `(-|b|/2, |b|/2]`.
    pub fn symmetric_remainder(c: &T, b: &T) -> T {
        let m = b.abs();
        let r = c.mod_floor(&m);
        let two = T::one() + T::one();
        if r.clone() * two > m {
            r - m
        } else {
            r
        }
    }
}

impl<T> CoeffRing for IntegerRing<T>
where
    T: Integer + Signed + Clone + Hash + Debug + Display + Send + Sync + From<i64> + TryFrom<BigInt>,
{
    type Elem = T;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor {
            kind: RingKind::Integers,
            admits_strong_gb: true,
        }
    }

    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn neg(&self, a: &T) -> T {
        -a.clone()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn from_i64(&self, n: i64) -> T {
        T::from(n)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<T, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = num.div_rem(den);
        if !r.is_zero() {
            return Err(RingError::NonIntegerCoefficient(format!("{num}/{den}")));
        }
        T::try_from(q.clone()).map_err(|_| RingError::Overflow(q.to_string()))
    }

    fn reduce_step(&self, c: &T, b: &T) -> Result<Option<(T, T)>, RingError> {
        if b.is_zero() {
            return Err(RingError::ZeroElement);
        }
        let d = Self::symmetric_remainder(c, b);
        if d == *c {
            return Ok(None);
        }
        let k = (c.clone() - d.clone()) / b.clone();
        Ok(Some((k, d)))
    }

    /// The positive gcd, with Bezout coefficients from iterated extended
    /// Euclid.
    fn groebner(&self, basis: &[T]) -> Result<RingGroebner<T>, RingError> {
        check_basis(self, basis)?;
        let n = basis.len();
        let mut g = basis[0].clone();
        let mut row = vec![T::zero(); n];
        row[0] = T::one();
        for (i, c) in basis.iter().enumerate().skip(1) {
            let e = extended_gcd(&g, c);
            for h in row.iter_mut().take(i) {
                *h = h.clone() * e.x.clone();
            }
            row[i] = e.y;
            g = e.gcd;
        }
        if g.is_negative() {
            g = -g;
            for h in row.iter_mut() {
                *h = -h.clone();
            }
        }
        let from_gb = basis.iter().map(|c| vec![c.clone() / g.clone()]).collect();
        Ok(RingGroebner {
            gb: vec![g],
            to_gb: vec![row],
            from_gb,
        })
    }

    /// `<lcm/a, -lcm/b>` with the positive lcm.
    fn syzygy_basis(&self, coeffs: &[T]) -> Result<Vec<SyzygyVector<T>>, RingError> {
        check_pair(self, coeffs)?;
        let (a, b) = (&coeffs[0], &coeffs[1]);
        let l = a.lcm(b);
        Ok(vec![SyzygyVector {
            entries: vec![l.clone() / a.clone(), -(l / b.clone())],
        }])
    }

    fn unit_normal(&self, a: &T) -> T {
        if a.is_negative() {
            -T::one()
        } else {
            T::one()
        }
    }

    fn is_negative(&self, a: &T) -> bool {
        a.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> IntegerRing<BigInt> {
        IntegerRing::new()
    }

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Exhaustive search for `c = k*b + d` with `d` in `(-|b|/2, |b|/2]`.
    fn brute_reduce(c: i64, b: i64) -> Option<(i64, i64)> {
        let hits: Vec<_> = (-40..=40)
            .filter_map(|k| {
                let d = c - k * b;
                (2 * d > -b.abs() && 2 * d <= b.abs()).then_some((k, d))
            })
            .collect();
        assert_eq!(hits.len(), 1);
        let (k, d) = hits[0];
        (d != c).then_some((k, d))
    }

    #[test]
    fn reduce_step_examples() {
        let r = zz();
        assert_eq!(r.reduce_step(&z(7), &z(3)).unwrap(), Some((z(2), z(1))));
        assert_eq!(brute_reduce(7, 3), Some((2, 1)));
        assert_eq!(r.reduce_step(&z(4), &z(2)).unwrap(), Some((z(2), z(0))));
        assert_eq!(r.reduce_step(&z(1), &z(2)).unwrap(), None);
        assert_eq!(brute_reduce(1, 2), None);
        assert_eq!(r.reduce_step(&z(1), &z(0)), Err(RingError::ZeroElement));
    }

    #[test]
    fn reduce_step_matches_brute_force() {
        let r = IntegerRing::<i64>::new();
        for c in -20i64..=20 {
            for b in (-9i64..=9).filter(|b| *b != 0) {
                assert_eq!(r.reduce_step(&c, &b).unwrap(), brute_reduce(c, b), "c={c} b={b}");
            }
        }
    }

    #[test]
    fn tie_keeps_positive_representative() {
        let r = zz();
        assert_eq!(r.reduce_step(&z(-1), &z(2)).unwrap(), Some((z(-1), z(1))));
        assert_eq!(r.reduce_step(&z(2), &z(4)).unwrap(), None);
        assert_eq!(r.reduce_step(&z(-2), &z(-4)).unwrap(), Some((z(1), z(2))));
    }

    #[test]
    fn groebner_examples() {
        let r = zz();
        let g = r.groebner(&[z(4), z(6)]).unwrap();
        assert_eq!(g.gb, vec![z(2)]);
        assert_eq!(g.to_gb, vec![vec![z(-1), z(1)]]);
        assert_eq!(g.from_gb, vec![vec![z(2)], vec![z(3)]]);

        let g = r.groebner(&[z(6)]).unwrap();
        assert_eq!((g.gb, g.to_gb), (vec![z(6)], vec![vec![z(1)]]));

        let g = r.groebner(&[z(-6)]).unwrap();
        assert_eq!((g.gb, g.to_gb), (vec![z(6)], vec![vec![z(-1)]]));

        assert_eq!(r.groebner(&[]), Err(RingError::EmptyBasis));
        assert_eq!(r.groebner(&[z(3), z(0)]), Err(RingError::ZeroElement));
    }

    #[test]
    fn groebner_representations_remultiply() {
        let r = IntegerRing::<i64>::new();
        let bases: [&[i64]; 4] = [&[12, -18, 30], &[-7], &[5, 7, 11], &[-8, -12]];
        for basis in bases {
            let g = r.groebner(basis).unwrap();
            let gcd = basis.iter().fold(0i64, |acc, c| num_integer::gcd(acc, *c));
            assert_eq!(g.gb, vec![gcd]);
            assert_eq!(r.dot(&g.to_gb[0], basis), gcd);
            for (c, row) in basis.iter().zip(&g.from_gb) {
                assert_eq!(r.dot(row, &g.gb), *c);
            }
        }
    }

    #[test]
    fn syzygy_examples() {
        let r = zz();
        let s = r.syzygy_basis(&[z(2), z(3)]).unwrap();
        assert_eq!(s[0].entries, vec![z(3), z(-2)]);
        let s = r.syzygy_basis(&[z(-4), z(6)]).unwrap();
        assert_eq!(r.dot(&s[0].entries, &[z(-4), z(6)]), z(0));
        assert_eq!(
            r.syzygy_basis(&[z(1), z(2), z(3)]),
            Err(RingError::UnsupportedArity(3))
        );
        assert_eq!(r.syzygy_basis(&[z(0), z(2)]), Err(RingError::ZeroElement));
    }

    #[test]
    fn from_ratio_rejects_fractions() {
        let r = zz();
        assert_eq!(r.from_ratio(&z(4), &z(2)).unwrap(), z(2));
        assert!(matches!(
            r.from_ratio(&z(1), &z(2)),
            Err(RingError::NonIntegerCoefficient(_))
        ));
        assert_eq!(r.from_ratio(&z(1), &z(0)), Err(RingError::DivisionByZero));
        assert!(matches!(
            IntegerRing::<i64>::new().from_ratio(&(z(1) << 80), &z(1)),
            Err(RingError::Overflow(_))
        ));
    }
}

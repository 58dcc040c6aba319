use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{
    check_pair, field_groebner, CoeffRing, RingDescriptor, RingError, RingGroebner, RingKind,
    SyzygyVector,
};

/// An element of GF(p), stored as its residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue(pub u64);

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> Residue {
        Residue(v % self.p)
    }

    /// All elements, in increasing residue order.
    pub fn elements(&self) -> impl Iterator<Item = Residue> {
        (0..self.p).map(Residue)
    }

    pub fn inverse(&self, a: &Residue) -> Option<Residue> {
        if a.0 == 0 {
            return None;
        }
        Some(Residue(pow_mod(a.0, self.p - 2, self.p)))
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits in u64")
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl CoeffRing for PrimeField {
    type Elem = Residue;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor {
            kind: RingKind::PrimeField(self.p),
            admits_strong_gb: true,
        }
    }

    fn zero(&self) -> Residue {
        Residue(0)
    }
    fn one(&self) -> Residue {
        Residue(1 % self.p)
    }
    fn is_zero(&self, a: &Residue) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(((a.0 as u128 + b.0 as u128) % self.p as u128) as u64)
    }
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Residue) -> Residue {
        if a.0 == 0 {
            *a
        } else {
            Residue(self.p - a.0)
        }
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        Residue(mul_mod(a.0, b.0, self.p))
    }

    fn from_i64(&self, n: i64) -> Residue {
        Residue((n as i128).rem_euclid(self.p as i128) as u64)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Residue, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let d = self
            .inverse(&Residue(self.reduce_big(den)))
            .ok_or(RingError::DivisionByZero)?;
        Ok(self.mul(&Residue(self.reduce_big(num)), &d))
    }

    fn reduce_step(
        &self,
        c: &Residue,
        b: &Residue,
    ) -> Result<Option<(Residue, Residue)>, RingError> {
        let inv = self.inverse(b).ok_or(RingError::ZeroElement)?;
        if c.0 == 0 {
            return Ok(None);
        }
        Ok(Some((self.mul(c, &inv), Residue(0))))
    }

    fn groebner(&self, basis: &[Residue]) -> Result<RingGroebner<Residue>, RingError> {
        field_groebner(self, basis, |c| self.inverse(c).expect("non-zero"))
    }

    fn syzygy_basis(&self, coeffs: &[Residue]) -> Result<Vec<SyzygyVector<Residue>>, RingError> {
        check_pair(self, coeffs)?;
        Ok(vec![SyzygyVector {
            entries: vec![coeffs[1], self.neg(&coeffs[0])],
        }])
    }

    fn unit_normal(&self, a: &Residue) -> Residue {
        self.inverse(a).unwrap_or_else(|| self.one())
    }
}

use num_integer::Integer;
use num_traits::Signed;

/// `gcd = a*x + b*y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedGcd<T> {
    pub gcd: T,
    pub x: T,
    pub y: T,
}

/// Extended Euclid with truncating quotients. The gcd is returned with
/// whatever sign the iteration produces; callers normalize.
pub fn extended_gcd<T: Integer + Signed + Clone>(a: &T, b: &T) -> ExtendedGcd<T> {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.clone() / r.clone();
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    ExtendedGcd {
        gcd: old_r,
        x: old_s,
        y: old_t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_small() {
        let e = extended_gcd(&4i64, &6);
        assert_eq!((e.gcd, e.x, e.y), (2, -1, 1));
        let e = extended_gcd(&2i64, &3);
        assert_eq!((e.gcd, e.x, e.y), (1, -1, 1));
    }

    #[test]
    fn bezout_identity_exhaustive() {
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                let e = extended_gcd(&a, &b);
                assert_eq!(a * e.x + b * e.y, e.gcd, "a={a} b={b}");
                assert_eq!(e.gcd.abs(), num_integer::gcd(a, b));
            }
        }
    }
}

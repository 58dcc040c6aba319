//! G-polynomials and M-polynomials of pairs of basis polynomials.
//!
//! Write `p1 = c1*t1 + r1`, `p2 = c2*t2 + r2` with `t = lcm(t1, t2) =
//! s1*t1 = s2*t2`.
//!
//! - For each element `g = h1*c1 + h2*c2` of a Gröbner basis of `{c1, c2}`
//!   in the coefficient ring, `h1*s1*p1 + h2*s2*p2` is a G-polynomial. Its
//!   head monomial is `g*t`.
//! - For each generator `<b1, b2>` of the syzygies of `(c1, c2)`,
//!   `b1*s1*p1 + b2*s2*p2` is an M-polynomial. The `t` monomials cancel, so
//!   its head term is below `t`.
//!
//! All shipped coefficient rings are principal ideal domains, where pairs
//! suffice; larger subsets are not formed.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::coeff::{CoeffRing, RingError};
use crate::poly::{PolyRing, Polynomial, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalPairError {
    #[error("critical pairs need non-zero polynomials")]
    ZeroPolynomial,
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    G,
    M,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::G => "G",
            PairKind::M => "M",
        })
    }
}

/// A pending critical-pair obligation between `basis[i]` and `basis[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub lcm: Term,
    pub kind: PairKind,
}

/// A critical polynomial together with the monomial factors that build it:
/// `poly = factors[0].0 * factors[0].1 * p1 + factors[1].0 * factors[1].1 * p2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPolynomial<E> {
    pub kind: PairKind,
    pub poly: Polynomial<E>,
    pub factors: [(E, Term); 2],
}

impl<R: CoeffRing> PolyRing<R> {
    fn pair_heads<'a>(
        &self,
        p1: &'a Polynomial<R::Elem>,
        p2: &'a Polynomial<R::Elem>,
    ) -> Result<([&'a R::Elem; 2], [Term; 2]), CriticalPairError> {
        let (Some(h1), Some(h2)) = (p1.head(), p2.head()) else {
            return Err(CriticalPairError::ZeroPolynomial);
        };
        let t = h1.term.lcm(&h2.term);
        let s1 = t.checked_div(&h1.term).expect("lcm is a multiple");
        let s2 = t.checked_div(&h2.term).expect("lcm is a multiple");
        Ok(([&h1.coeff, &h2.coeff], [s1, s2]))
    }

    fn combine(
        &self,
        kind: PairKind,
        a: [R::Elem; 2],
        s: &[Term; 2],
        p1: &Polynomial<R::Elem>,
        p2: &Polynomial<R::Elem>,
    ) -> CriticalPolynomial<R::Elem> {
        let poly = self.add(
            &self.mul_monomial(&a[0], &s[0], p1),
            &self.mul_monomial(&a[1], &s[1], p2),
        );
        let [a0, a1] = a;
        CriticalPolynomial {
            kind,
            poly,
            factors: [(a0, s[0].clone()), (a1, s[1].clone())],
        }
    }

    pub fn g_polynomials(
        &self,
        p1: &Polynomial<R::Elem>,
        p2: &Polynomial<R::Elem>,
    ) -> Result<Vec<CriticalPolynomial<R::Elem>>, CriticalPairError> {
        let (c, s) = self.pair_heads(p1, p2)?;
        let gb = self.ring().groebner(&[c[0].clone(), c[1].clone()])?;
        Ok(gb
            .to_gb
            .into_iter()
            .map(|row| {
                let [h1, h2]: [R::Elem; 2] = row.try_into().expect("two coefficients");
                self.combine(PairKind::G, [h1, h2], &s, p1, p2)
            })
            .collect())
    }

    pub fn m_polynomials(
        &self,
        p1: &Polynomial<R::Elem>,
        p2: &Polynomial<R::Elem>,
    ) -> Result<Vec<CriticalPolynomial<R::Elem>>, CriticalPairError> {
        let (c, s) = self.pair_heads(p1, p2)?;
        let syz = self.ring().syzygy_basis(&[c[0].clone(), c[1].clone()])?;
        Ok(syz
            .into_iter()
            .map(|v| {
                let [b1, b2]: [R::Elem; 2] = v.entries.try_into().expect("two entries");
                self.combine(PairKind::M, [b1, b2], &s, p1, p2)
            })
            .collect())
    }

    pub fn critical_polynomials(
        &self,
        kind: PairKind,
        p1: &Polynomial<R::Elem>,
        p2: &Polynomial<R::Elem>,
    ) -> Result<Vec<CriticalPolynomial<R::Elem>>, CriticalPairError> {
        match kind {
            PairKind::G => self.g_polynomials(p1, p2),
            PairKind::M => self.m_polynomials(p1, p2),
        }
    }

    /// The two records for `basis[i]`, `basis[j]`.
    pub fn pair_records(
        &self,
        basis: &[Polynomial<R::Elem>],
        i: usize,
        j: usize,
    ) -> [PairRecord; 2] {
        let (i, j) = (i.min(j), i.max(j));
        let lcm = basis[i]
            .head_term()
            .expect("non-zero")
            .lcm(basis[j].head_term().expect("non-zero"));
        [PairKind::G, PairKind::M].map(|kind| PairRecord {
            i,
            j,
            lcm: lcm.clone(),
            kind,
        })
    }

    /// Selection order: ascending lcm, then index pair, then G before M.
    pub fn pair_cmp(&self, a: &PairRecord, b: &PairRecord) -> Ordering {
        self.order()
            .compare(&a.lcm, &b.lcm)
            .then((a.i, a.j).cmp(&(b.i, b.j)))
            .then(a.kind.cmp(&b.kind))
    }

    /// A G record and an M record for every unordered pair of `basis`,
    /// sorted by [`PolyRing::pair_cmp`]. Zero polynomials are skipped.
    pub fn all_pairs(&self, basis: &[Polynomial<R::Elem>]) -> Vec<PairRecord> {
        let mut out: Vec<PairRecord> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                if basis[i].is_zero() || basis[j].is_zero() {
                    continue;
                }
                out.extend(self.pair_records(basis, i, j));
            }
        }
        out.sort_by(|a, b| self.pair_cmp(a, b));
        out
    }
}

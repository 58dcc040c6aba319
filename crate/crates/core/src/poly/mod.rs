//! Sparse multivariate polynomials over a [`CoeffRing`].
//!
//! A [`Polynomial`] is a list of monomials kept strictly descending in the
//! session's [`TermOrder`] with no zero coefficients; the zero polynomial is
//! the empty list. Since canonical form depends on the order, polynomials are
//! built and combined through a [`PolyRing`], which bundles the coefficient
//! ring with the order.

mod order;
mod term;

use std::cmp::Ordering;

use thiserror::Error;

use crate::coeff::CoeffRing;

pub use order::{OrderKind, TermOrder};
pub use term::{min_terms, Term};

/// Upper bound on the number of variables in a session.
pub const MAX_VARS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("variable precedence {0:?} is not a permutation")]
    BadPrecedence(Vec<usize>),
    #[error("unknown term order `{0}` (expected lex or deglex)")]
    UnknownOrder(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial<E> {
    pub coeff: E,
    pub term: Term,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<Monomial<E>>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial<E>] {
        &self.terms
    }

    pub fn into_monomials(self) -> Vec<Monomial<E>> {
        self.terms
    }

    /// Head monomial.
    pub fn head(&self) -> Option<&Monomial<E>> {
        self.terms.first()
    }

    pub fn head_term(&self) -> Option<&Term> {
        self.head().map(|m| &m.term)
    }

    pub fn head_coeff(&self) -> Option<&E> {
        self.head().map(|m| &m.coeff)
    }

    /// Everything but the head monomial.
    pub fn rest(&self) -> Polynomial<E>
    where
        E: Clone,
    {
        Polynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter().map(|m| &m.term)
    }
}

/// Coefficient ring plus term order: everything needed to keep polynomials
/// canonical.
#[derive(Debug, Clone)]
pub struct PolyRing<R: CoeffRing> {
    ring: R,
    order: TermOrder,
}

impl<R: CoeffRing> PolyRing<R> {
    pub fn new(ring: R, order: TermOrder) -> Result<Self, PolyError> {
        if order.nvars() > MAX_VARS {
            return Err(PolyError::TooManyVariables(order.nvars()));
        }
        Ok(Self { ring, order })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn zero(&self) -> Polynomial<R::Elem> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<R::Elem> {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, c: R::Elem) -> Polynomial<R::Elem> {
        self.monomial(c, Term::one(self.nvars()))
    }

    pub fn var(&self, i: usize) -> Polynomial<R::Elem> {
        self.monomial(self.ring.one(), Term::var(self.nvars(), i))
    }

    pub fn monomial(&self, coeff: R::Elem, term: Term) -> Polynomial<R::Elem> {
        assert_eq!(term.nvars(), self.nvars(), "term has wrong variable count");
        if self.ring.is_zero(&coeff) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Monomial { coeff, term }],
        }
    }

    /// Builds a canonical polynomial from monomials in any order, merging
    /// repeated terms and dropping zero coefficients.
    pub fn from_terms(
        &self,
        monomials: impl IntoIterator<Item = (R::Elem, Term)>,
    ) -> Polynomial<R::Elem> {
        let mut terms: Vec<Monomial<R::Elem>> = monomials
            .into_iter()
            .map(|(coeff, term)| {
                assert_eq!(term.nvars(), self.nvars(), "term has wrong variable count");
                Monomial { coeff, term }
            })
            .collect();
        terms.sort_by(|a, b| self.order.compare(&b.term, &a.term));
        let mut out: Vec<Monomial<R::Elem>> = Vec::with_capacity(terms.len());
        for m in terms {
            match out.last_mut() {
                Some(last) if last.term == m.term => {
                    last.coeff = self.ring.add(&last.coeff, &m.coeff);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if self.ring.is_zero(&last.coeff) {
                            out.pop();
                        }
                    }
                    out.push(m);
                }
            }
        }
        if out.last().is_some_and(|m| self.ring.is_zero(&m.coeff)) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// Convenience constructor from integer coefficients and exponent
    /// vectors.
    pub fn from_i64(&self, monomials: &[(i64, &[u32])]) -> Polynomial<R::Elem> {
        self.from_terms(
            monomials
                .iter()
                .map(|(c, e)| (self.ring.from_i64(*c), Term::new(e.to_vec()))),
        )
    }

    /// Re-canonicalizes an existing polynomial; identity on canonical input.
    pub fn normalize(&self, p: Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        self.from_terms(p.terms.into_iter().map(|m| (m.coeff, m.term)))
    }

    /// Checks the canonical-form invariants.
    pub fn is_canonical(&self, p: &Polynomial<R::Elem>) -> bool {
        p.terms
            .iter()
            .all(|m| !self.ring.is_zero(&m.coeff) && m.term.nvars() == self.nvars())
            && p.terms
                .windows(2)
                .all(|w| self.order.compare(&w[0].term, &w[1].term) == Ordering::Greater)
    }

    pub fn coeff_of<'a>(&self, p: &'a Polynomial<R::Elem>, t: &Term) -> Option<&'a R::Elem> {
        p.terms
            .binary_search_by(|m| self.order.compare(t, &m.term))
            .ok()
            .map(|i| &p.terms[i].coeff)
    }

    pub fn add(&self, p: &Polynomial<R::Elem>, q: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        self.merge(p, q, |c| c.clone())
    }

    pub fn sub(&self, p: &Polynomial<R::Elem>, q: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        self.merge(p, q, |c| self.ring.neg(c))
    }

    pub fn neg(&self, p: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|m| Monomial {
                    coeff: self.ring.neg(&m.coeff),
                    term: m.term.clone(),
                })
                .collect(),
        }
    }

    /// `c * p`.
    pub fn scale(&self, c: &R::Elem, p: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        self.mul_monomial(c, &Term::one(self.nvars()), p)
    }

    /// `c * t * p`. Term multiplication preserves the order, so only zero
    /// products (zero divisors or `c = 0`) need removing.
    pub fn mul_monomial(
        &self,
        c: &R::Elem,
        t: &Term,
        p: &Polynomial<R::Elem>,
    ) -> Polynomial<R::Elem> {
        Polynomial {
            terms: p
                .terms
                .iter()
                .filter_map(|m| {
                    let coeff = self.ring.mul(c, &m.coeff);
                    (!self.ring.is_zero(&coeff)).then(|| Monomial {
                        coeff,
                        term: t.mul(&m.term),
                    })
                })
                .collect(),
        }
    }

    pub fn mul(&self, p: &Polynomial<R::Elem>, q: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        self.from_terms(p.terms.iter().flat_map(|a| {
            q.terms
                .iter()
                .map(move |b| (self.ring.mul(&a.coeff, &b.coeff), a.term.mul(&b.term)))
        }))
    }

    /// `p - c * t * q`.
    pub fn sub_mul(
        &self,
        p: &Polynomial<R::Elem>,
        c: &R::Elem,
        t: &Term,
        q: &Polynomial<R::Elem>,
    ) -> Polynomial<R::Elem> {
        let shifted = self.mul_monomial(c, t, q);
        self.sub(p, &shifted)
    }

    /// `sum factors[i] * polys[i]`.
    pub fn dot(
        &self,
        factors: &[Polynomial<R::Elem>],
        polys: &[Polynomial<R::Elem>],
    ) -> Polynomial<R::Elem> {
        assert_eq!(factors.len(), polys.len());
        factors
            .iter()
            .zip(polys)
            .fold(self.zero(), |acc, (f, p)| self.add(&acc, &self.mul(f, p)))
    }

    fn merge(
        &self,
        p: &Polynomial<R::Elem>,
        q: &Polynomial<R::Elem>,
        q_sign: impl Fn(&R::Elem) -> R::Elem,
    ) -> Polynomial<R::Elem> {
        let mut out = Vec::with_capacity(p.len() + q.len());
        let (mut i, mut j) = (0, 0);
        while i < p.terms.len() && j < q.terms.len() {
            let (a, b) = (&p.terms[i], &q.terms[j]);
            match self.order.compare(&a.term, &b.term) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Monomial {
                        coeff: q_sign(&b.coeff),
                        term: b.term.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = self.ring.add(&a.coeff, &q_sign(&b.coeff));
                    if !self.ring.is_zero(&coeff) {
                        out.push(Monomial {
                            coeff,
                            term: a.term.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(p.terms[i..].iter().cloned());
        out.extend(q.terms[j..].iter().map(|b| Monomial {
            coeff: q_sign(&b.coeff),
            term: b.term.clone(),
        }));
        Polynomial { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Integers, Rationals};

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    #[test]
    fn normalize_examples() {
        let pr = PolyRing::new(Integers::new(), TermOrder::lex(2)).unwrap();
        let p = pr.from_i64(&[(1, &[1, 0]), (2, &[1, 0])]);
        assert_eq!(p, pr.from_i64(&[(3, &[1, 0])]));
        assert!(pr.from_i64(&[(1, &[1, 0]), (-1, &[1, 0])]).is_zero());
        let p = pr.from_i64(&[(2, &[0, 1]), (1, &[2, 0])]);
        assert_eq!(p.head_term(), Some(&t(&[2, 0])));
        assert_eq!(p.monomials()[1].term, t(&[0, 1]));
        assert!(pr.is_canonical(&p));
        // zeros in the middle of a run are dropped too
        let p = pr.from_i64(&[(1, &[2, 0]), (0, &[1, 0]), (1, &[0, 0]), (-1, &[0, 0])]);
        assert_eq!(p, pr.from_i64(&[(1, &[2, 0])]));
    }

    #[test]
    fn arithmetic_examples() {
        let qq = PolyRing::new(Rationals::new(), TermOrder::lex(1)).unwrap();
        let a = qq.from_i64(&[(1, &[1]), (1, &[0])]);
        let b = qq.from_i64(&[(1, &[1]), (-1, &[0])]);
        assert_eq!(qq.add(&a, &b), qq.from_i64(&[(2, &[1])]));
        assert_eq!(qq.add(&a, &qq.zero()), a);
        assert!(qq.sub(&a, &a).is_zero());
        assert_eq!(
            qq.mul(&a, &b),
            qq.from_i64(&[(1, &[2]), (-1, &[0])])
        );

        let zz = PolyRing::new(Integers::new(), TermOrder::lex(2)).unwrap();
        let p = zz.from_i64(&[(2, &[1, 0]), (1, &[0, 0])]);
        let r = zz.mul_monomial(&zz.ring().from_i64(3), &t(&[0, 1]), &p);
        assert_eq!(r, zz.from_i64(&[(6, &[1, 1]), (3, &[0, 1])]));
    }

    #[test]
    fn head_decomposition() {
        let zz = PolyRing::new(Integers::new(), TermOrder::lex(2)).unwrap();
        let p = zz.from_i64(&[(2, &[2, 1]), (-3, &[0, 1]), (1, &[0, 0])]);
        assert_eq!(p.head_coeff(), Some(&zz.ring().from_i64(2)));
        assert_eq!(p.rest(), zz.from_i64(&[(-3, &[0, 1]), (1, &[0, 0])]));
        assert_eq!(zz.coeff_of(&p, &t(&[0, 1])), Some(&zz.ring().from_i64(-3)));
        assert_eq!(zz.coeff_of(&p, &t(&[1, 1])), None);
    }

    #[test]
    fn too_many_variables() {
        assert_eq!(
            PolyRing::new(Integers::new(), TermOrder::lex(17)).unwrap_err(),
            PolyError::TooManyVariables(17)
        );
    }
}

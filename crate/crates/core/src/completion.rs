//! The completion loop.
//!
//! Starting from the generators, critical pairs are drained smallest lcm
//! first. Each G- or M-polynomial is reduced to a normal form against the
//! current basis; non-zero normal forms are appended and paired with every
//! earlier element. When the queue is empty every G- and M-polynomial of the
//! basis reduces to 0, which makes the basis a Gröbner basis, strong when the
//! coefficient ring's own Gröbner bases are strong.
//!
//! Worked example over Q, lex with `x > y`, generators `x^2 - y` and
//! `x*y - 1`:
//!
//! 1. Pair (0, 1), lcm `x^2*y`. The G-polynomial is `y*(x^2 - y)`, which
//!    reduces to 0. The M-polynomial is `y*(x^2 - y) - x*(x*y - 1) = x - y^2`,
//!    irreducible, so it is added as element 2.
//! 2. Pair (1, 2), lcm `x*y`. The M-polynomial `(x*y - 1) - y*(x - y^2)` is
//!    `y^3 - 1`, added as element 3.
//! 3. Every remaining pair reduces to 0. Interreduction removes the two
//!    generators, leaving `x - y^2`, `y^3 - 1`.
//!
//! Over Z the generators `2x`, `3y` give the G-polynomial
//! `-1*y*(2x) + 1*x*(3y) = x*y` from `1 = -1*2 + 1*3`; nothing else survives,
//! so the basis is `2x, 3y, x*y`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::coeff::CoeffRing;
use crate::critical_pairs::{CriticalPairError, PairRecord};
use crate::poly::{PolyRing, Polynomial};
use crate::reduction::Strategy;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("completion exceeded {0} pair reductions")]
    StepCeiling(usize),
    #[error(transparent)]
    CriticalPair(#[from] CriticalPairError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionConfig {
    /// Safety valve on the number of critical polynomials reduced.
    pub max_pair_reductions: usize,
    /// Keep, for every basis element, its representation over the
    /// generators.
    pub track_certificates: bool,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        Self {
            max_pair_reductions: 1_000_000,
            track_certificates: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionTrace<E> {
    /// The non-zero input generators, in input order.
    pub generators: Vec<Polynomial<E>>,
    /// Critical polynomials reduced.
    pub iterations: usize,
    /// Pair records taken from the queue.
    pub pairs_processed: usize,
    /// Basis elements added by completion, in order.
    pub added: Vec<Polynomial<E>>,
    /// Generators followed by `added`.
    pub basis: Vec<Polynomial<E>>,
    /// `basis[k] = sum certificates[k][l] * generators[l]`, when tracked.
    pub certificates: Option<Vec<Vec<Polynomial<E>>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership<E> {
    /// `p = sum certificate[l] * generators[l]`, one entry per input
    /// generator.
    Member { certificate: Vec<Polynomial<E>> },
    NotMember { normal_form: Polynomial<E> },
}

impl<E> Membership<E> {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

/// Completion driver bound to a polynomial ring.
#[derive(Debug, Clone)]
pub struct Completion<'a, R: CoeffRing> {
    pr: &'a PolyRing<R>,
    config: CompletionConfig,
}

impl<'a, R: CoeffRing> Completion<'a, R> {
    pub fn new(pr: &'a PolyRing<R>) -> Self {
        Self::with_config(pr, CompletionConfig::default())
    }

    pub fn with_config(pr: &'a PolyRing<R>, config: CompletionConfig) -> Self {
        Self { pr, config }
    }

    pub fn poly_ring(&self) -> &PolyRing<R> {
        self.pr
    }

    /// Runs completion. Zero generators are dropped.
    pub fn complete(
        &self,
        generators: &[Polynomial<R::Elem>],
    ) -> Result<CompletionTrace<R::Elem>, CompletionError> {
        let pr = self.pr;
        let generators: Vec<_> = generators.iter().filter(|p| !p.is_zero()).cloned().collect();
        let n = generators.len();
        let mut basis = generators.clone();
        let mut certs: Option<Vec<Vec<Polynomial<R::Elem>>>> =
            self.config.track_certificates.then(|| {
                (0..n)
                    .map(|k| {
                        (0..n)
                            .map(|l| if k == l { pr.one() } else { pr.zero() })
                            .collect()
                    })
                    .collect()
            });

        // Kept sorted descending so the next pair pops off the end.
        let mut queue = pr.all_pairs(&basis);
        queue.reverse();

        let mut added = Vec::new();
        let mut iterations = 0;
        let mut pairs_processed = 0;
        while let Some(pair) = queue.pop() {
            pairs_processed += 1;
            let crits = pr.critical_polynomials(pair.kind, &basis[pair.i], &basis[pair.j])?;
            for crit in crits {
                if iterations >= self.config.max_pair_reductions {
                    return Err(CompletionError::StepCeiling(iterations));
                }
                iterations += 1;
                let nf = pr
                    .normal_form_with(&crit.poly, &basis, &mut Strategy::HeadFirst, None)
                    .expect("no step limit");
                if nf.remainder.is_zero() {
                    continue;
                }
                if let Some(certs) = certs.as_mut() {
                    let [(a1, s1), (a2, s2)] = &crit.factors;
                    let mut cert: Vec<_> = (0..n)
                        .map(|l| {
                            pr.add(
                                &pr.mul_monomial(a1, s1, &certs[pair.i][l]),
                                &pr.mul_monomial(a2, s2, &certs[pair.j][l]),
                            )
                        })
                        .collect();
                    for (q, bc) in nf.cofactors.iter().zip(certs.iter()) {
                        if q.is_zero() {
                            continue;
                        }
                        for (c, b) in cert.iter_mut().zip(bc) {
                            *c = pr.sub(c, &pr.mul(q, b));
                        }
                    }
                    certs.push(cert);
                }
                basis.push(nf.remainder.clone());
                added.push(nf.remainder);
                let k = basis.len() - 1;
                for i in 0..k {
                    for rec in pr.pair_records(&basis, i, k) {
                        insert_sorted(pr, &mut queue, rec);
                    }
                }
            }
        }

        Ok(CompletionTrace {
            generators,
            iterations,
            pairs_processed,
            added,
            basis,
            certificates: certs,
        })
    }

    /// Whether every G- and M-polynomial of `basis` reduces to 0 by `basis`.
    pub fn is_gb_certificate(&self, basis: &[Polynomial<R::Elem>]) -> Result<bool, CompletionError> {
        let pr = self.pr;
        for pair in pr.all_pairs(basis) {
            for crit in pr.critical_polynomials(pair.kind, &basis[pair.i], &basis[pair.j])? {
                if !pr.reduces_to_zero(&crit.poly, basis) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Canonical form of a Gröbner basis: every element irreducible by the
    /// others, heads unit-normalized (monic over fields, positive over Z),
    /// sorted descending by head term.
    pub fn interreduce(
        &self,
        basis: &[Polynomial<R::Elem>],
    ) -> Result<Vec<Polynomial<R::Elem>>, CompletionError> {
        let pr = self.pr;
        let mut b: Vec<_> = basis
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| self.unit_normalize(p))
            .collect();
        loop {
            'scan: loop {
                for i in 0..b.len() {
                    let others: Vec<_> = b
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, p)| p.clone())
                        .collect();
                    let r = pr.normal_form(&b[i], &others);
                    let r = self.unit_normalize(&r);
                    if r != b[i] {
                        if r.is_zero() {
                            b.remove(i);
                        } else {
                            b[i] = r;
                        }
                        continue 'scan;
                    }
                }
                break;
            }
            if self.is_gb_certificate(&b)? {
                break;
            }
            // Replacing an element by a reduced form changed the head set in a
            // way the remaining elements do not cover; restore closure.
            b = self.complete(&b)?.basis;
        }
        b.sort_by(|p, q| self.canonical_cmp(q, p));
        Ok(b)
    }

    /// Completion followed by interreduction.
    pub fn groebner_basis(
        &self,
        generators: &[Polynomial<R::Elem>],
    ) -> Result<Vec<Polynomial<R::Elem>>, CompletionError> {
        let trace = self.complete(generators)?;
        self.interreduce(&trace.basis)
    }

    /// Decides `p` in the ideal of `generators` by reducing against the
    /// completed basis.
    pub fn ideal_membership(
        &self,
        p: &Polynomial<R::Elem>,
        generators: &[Polynomial<R::Elem>],
    ) -> Result<Membership<R::Elem>, CompletionError> {
        let pr = self.pr;
        let tracked = Completion::with_config(
            pr,
            CompletionConfig {
                track_certificates: true,
                ..self.config.clone()
            },
        );
        let trace = tracked.complete(generators)?;
        let nf = pr
            .normal_form_with(p, &trace.basis, &mut Strategy::HeadFirst, None)
            .expect("no step limit");
        if !nf.remainder.is_zero() {
            return Ok(Membership::NotMember {
                normal_form: nf.remainder,
            });
        }
        let certs = trace.certificates.expect("tracked");
        let mut over_nonzero = vec![pr.zero(); trace.generators.len()];
        for (q, bc) in nf.cofactors.iter().zip(&certs) {
            for (acc, c) in over_nonzero.iter_mut().zip(bc) {
                *acc = pr.add(acc, &pr.mul(q, c));
            }
        }
        let mut it = over_nonzero.into_iter();
        let certificate = generators
            .iter()
            .map(|g| {
                if g.is_zero() {
                    pr.zero()
                } else {
                    it.next().expect("one per non-zero generator")
                }
            })
            .collect();
        Ok(Membership::Member { certificate })
    }

    fn unit_normalize(&self, p: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        match p.head_coeff() {
            Some(c) => {
                let u = self.pr.ring().unit_normal(c);
                if self.pr.ring().is_one(&u) {
                    p.clone()
                } else {
                    self.pr.scale(&u, p)
                }
            }
            None => p.clone(),
        }
    }

    /// Total order on polynomials: monomial by monomial, term first, then
    /// the coefficient's printed form; a proper prefix is smaller.
    fn canonical_cmp(&self, p: &Polynomial<R::Elem>, q: &Polynomial<R::Elem>) -> Ordering {
        for (a, b) in p.monomials().iter().zip(q.monomials()) {
            let o = self
                .pr
                .order()
                .compare(&a.term, &b.term)
                .then_with(|| a.coeff.to_string().cmp(&b.coeff.to_string()));
            if o != Ordering::Equal {
                return o;
            }
        }
        p.len().cmp(&q.len())
    }
}

fn insert_sorted<R: CoeffRing>(pr: &PolyRing<R>, queue: &mut Vec<PairRecord>, rec: PairRecord) {
    let at = queue.partition_point(|q| pr.pair_cmp(q, &rec) == Ordering::Greater);
    queue.insert(at, rec);
}

//! Polynomial reduction with respect to a finite basis.
//!
//! `p` reduces to `q` by `b` when some monomial `c*t` of `p` has `HT(b)`
//! dividing `t`, say `t = t' * HT(b)`, and the coefficient `c` reduces by
//! `HC(b)` in the coefficient ring as `c = k*HC(b) + d`. Then
//! `q = p - k*t'*b`, and the coefficient of `t` in `q` is `d`.
//!
//! Any monomial may be reduced, not only the head, so normal forms are fully
//! reduced.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coeff::CoeffRing;
use crate::poly::{PolyRing, Polynomial, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("reduction step does not apply to this polynomial")]
    StaleStep,
    #[error("normal form did not finish within {0} steps")]
    StepLimit(usize),
}

/// One application of the reduction relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep<E> {
    /// Index of the reducing polynomial in the basis.
    pub reducer: usize,
    /// Term of the monomial being reduced.
    pub term: Term,
    /// `term / HT(reducer)`.
    pub cofactor_term: Term,
    /// Quotient `k` of the coefficient by `HC(reducer)`.
    pub cofactor_coeff: E,
    /// Coefficient of `term` before the step.
    pub coeff: E,
    /// Coefficient of `term` after the step.
    pub remainder: E,
}

/// How to pick among the available reduction steps.
#[derive(Debug, Clone, Default)]
pub enum Strategy {
    /// Largest reducible monomial first, lowest basis index first.
    #[default]
    HeadFirst,
    /// Uniform choice among every valid (monomial, reducer) pair.
    Randomized(ChaCha8Rng),
}

impl Strategy {
    pub fn randomized(seed: u64) -> Self {
        Strategy::Randomized(ChaCha8Rng::seed_from_u64(seed))
    }
}

/// `p = sum cofactors[i] * basis[i] + remainder`, with `remainder`
/// irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<E> {
    pub remainder: Polynomial<E>,
    pub cofactors: Vec<Polynomial<E>>,
    pub steps: usize,
}

impl<R: CoeffRing> PolyRing<R> {
    fn step_at(
        &self,
        p: &Polynomial<R::Elem>,
        index: usize,
        basis: &[Polynomial<R::Elem>],
        reducer: usize,
    ) -> Option<ReductionStep<R::Elem>> {
        let m = &p.monomials()[index];
        let head = basis[reducer].head()?;
        let cofactor_term = m.term.checked_div(&head.term)?;
        let (k, d) = self
            .ring()
            .reduce_step(&m.coeff, &head.coeff)
            .expect("head coefficients are non-zero")?;
        Some(ReductionStep {
            reducer,
            term: m.term.clone(),
            cofactor_term,
            cofactor_coeff: k,
            coeff: m.coeff.clone(),
            remainder: d,
        })
    }

    fn first_step_from(
        &self,
        p: &Polynomial<R::Elem>,
        basis: &[Polynomial<R::Elem>],
        start: usize,
    ) -> Option<ReductionStep<R::Elem>> {
        (start..p.len()).find_map(|i| (0..basis.len()).find_map(|j| self.step_at(p, i, basis, j)))
    }

    /// Every valid step, in head-first order.
    pub fn all_reductions(
        &self,
        p: &Polynomial<R::Elem>,
        basis: &[Polynomial<R::Elem>],
    ) -> Vec<ReductionStep<R::Elem>> {
        (0..p.len())
            .flat_map(|i| (0..basis.len()).filter_map(move |j| self.step_at(p, i, basis, j)))
            .collect()
    }

    /// A reduction step for `p` chosen by `strategy`, or `None` if `p` is in
    /// normal form with respect to `basis`.
    pub fn find_reduction(
        &self,
        p: &Polynomial<R::Elem>,
        basis: &[Polynomial<R::Elem>],
        strategy: &mut Strategy,
    ) -> Option<ReductionStep<R::Elem>> {
        match strategy {
            Strategy::HeadFirst => self.first_step_from(p, basis, 0),
            Strategy::Randomized(rng) => {
                let steps = self.all_reductions(p, basis);
                steps.choose(rng).cloned()
            }
        }
    }

    /// `p - k*t'*basis[reducer]`. Fails if the step was not computed for `p`.
    pub fn apply_step(
        &self,
        p: &Polynomial<R::Elem>,
        step: &ReductionStep<R::Elem>,
        basis: &[Polynomial<R::Elem>],
    ) -> Result<Polynomial<R::Elem>, ReductionError> {
        let reducer = basis.get(step.reducer).ok_or(ReductionError::StaleStep)?;
        let head = reducer.head().ok_or(ReductionError::StaleStep)?;
        if self.coeff_of(p, &step.term) != Some(&step.coeff)
            || step.cofactor_term.mul(&head.term) != step.term
        {
            return Err(ReductionError::StaleStep);
        }
        let expected = self.ring().reduce_step(&step.coeff, &head.coeff);
        if expected != Ok(Some((step.cofactor_coeff.clone(), step.remainder.clone()))) {
            return Err(ReductionError::StaleStep);
        }
        Ok(self.sub_mul(p, &step.cofactor_coeff, &step.cofactor_term, reducer))
    }

    /// Normal form under the default strategy.
    pub fn normal_form(
        &self,
        p: &Polynomial<R::Elem>,
        basis: &[Polynomial<R::Elem>],
    ) -> Polynomial<R::Elem> {
        self.normal_form_with(p, basis, &mut Strategy::HeadFirst, None)
            .expect("no step limit")
            .remainder
    }

    /// Reduces `p` to a normal form, recording the cofactors of each basis
    /// element and the number of steps. `max_steps` bounds the work.
    pub fn normal_form_with(
        &self,
        p: &Polynomial<R::Elem>,
        basis: &[Polynomial<R::Elem>],
        strategy: &mut Strategy,
        max_steps: Option<usize>,
    ) -> Result<NormalForm<R::Elem>, ReductionError> {
        let mut cofactor_terms: Vec<Vec<(R::Elem, Term)>> = vec![Vec::new(); basis.len()];
        let mut current = p.clone();
        let mut steps = 0;
        // Under HeadFirst, monomials above the last reduced term never change
        // and stay irreducible, so scanning resumes there.
        let mut bound: Option<Term> = None;
        loop {
            let step = match strategy {
                Strategy::HeadFirst => {
                    let start = match &bound {
                        None => 0,
                        Some(t) => current
                            .monomials()
                            .iter()
                            .position(|m| self.order().compare(&m.term, t).is_le())
                            .unwrap_or(current.len()),
                    };
                    self.first_step_from(&current, basis, start)
                }
                Strategy::Randomized(_) => self.find_reduction(&current, basis, strategy),
            };
            let Some(step) = step else { break };
            if max_steps.is_some_and(|limit| steps >= limit) {
                return Err(ReductionError::StepLimit(steps));
            }
            current = self.sub_mul(
                &current,
                &step.cofactor_coeff,
                &step.cofactor_term,
                &basis[step.reducer],
            );
            cofactor_terms[step.reducer].push((step.cofactor_coeff, step.cofactor_term.clone()));
            bound = Some(step.term);
            steps += 1;
        }
        Ok(NormalForm {
            remainder: current,
            cofactors: cofactor_terms
                .into_iter()
                .map(|ts| self.from_terms(ts))
                .collect(),
            steps,
        })
    }

    pub fn reduces_to_zero(
        &self,
        p: &Polynomial<R::Elem>,
        basis: &[Polynomial<R::Elem>],
    ) -> bool {
        self.normal_form(p, basis).is_zero()
    }

    /// Whether no monomial of `p` is reducible by `basis`.
    pub fn is_normal_form(&self, p: &Polynomial<R::Elem>, basis: &[Polynomial<R::Elem>]) -> bool {
        self.first_step_from(p, basis, 0).is_none()
    }
}

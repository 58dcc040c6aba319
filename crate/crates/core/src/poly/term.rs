use std::fmt;

/// A power product `x1^e1 * ... * xn^en`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn new(exponents: Vec<u32>) -> Self {
        Term(exponents)
    }

    /// The unit term `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Term(vec![0; nvars])
    }

    /// The variable with index `var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Term(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Term) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// # Panics
    ///
    /// Panics if an exponent overflows `u32`.
    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Term) -> Option<Term> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Term)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The divisibility-minimal elements of `terms`, deduplicated, in first
/// occurrence order.
pub fn min_terms(terms: &[Term]) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let dominated = terms
            .iter()
            .enumerate()
            .any(|(j, s)| s.divides(t) && (s != t || j < i));
        if !dominated {
            out.push(t.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(t(&[1, 1]).divides(&t(&[2, 1])));
        assert!(!t(&[2, 0]).divides(&t(&[1, 1])));
        assert!(Term::one(2).divides(&t(&[3, 7])));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(t(&[2, 1, 0]).lcm(&t(&[1, 0, 1])), t(&[2, 1, 1]));
        assert_eq!(t(&[2, 5]).lcm(&t(&[2, 5])), t(&[2, 5]));
        assert_eq!(t(&[3, 0]).lcm(&t(&[0, 2])), t(&[3, 2]));
    }

    #[test]
    fn division() {
        assert_eq!(t(&[2, 1]).checked_div(&t(&[1, 1])), Some(t(&[1, 0])));
        assert_eq!(t(&[1, 1]).checked_div(&t(&[2, 0])), None);
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_checked() {
        t(&[u32::MAX]).mul(&t(&[1]));
    }

    #[test]
    fn min_terms_examples() {
        assert_eq!(
            min_terms(&[t(&[2, 0]), t(&[2, 1]), t(&[3, 0])]),
            vec![t(&[2, 0])]
        );
        assert_eq!(
            min_terms(&[t(&[1, 0]), t(&[0, 1])]),
            vec![t(&[1, 0]), t(&[0, 1])]
        );
        assert!(min_terms(&[]).is_empty());
        assert_eq!(min_terms(&[t(&[1, 1]), t(&[1, 1])]), vec![t(&[1, 1])]);
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{PolyError, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Pure lexicographic.
    Lex,
    /// Total degree first, ties broken lexicographically.
    DegLex,
}

impl FromStr for OrderKind {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            _ => Err(PolyError::UnknownOrder(s.to_string())),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
        })
    }
}

/// A term order: the kind plus a variable precedence.
///
/// `precedence[0]` is the index of the largest variable. Both shipped kinds
/// are total, well-founded and compatible with multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl TermOrder {
    /// Precedence `x0 > x1 > ... > x(n-1)`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn deglex(nvars: usize) -> Self {
        Self::new(OrderKind::DegLex, nvars)
    }

    /// `precedence` must be a permutation of `0..n`.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, PolyError> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return Err(PolyError::BadPrecedence(precedence));
            }
        }
        Ok(Self { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn compare(&self, a: &Term, b: &Term) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        if self.kind == OrderKind::DegLex {
            let by_degree = a.degree().cmp(&b.degree());
            if by_degree != Ordering::Equal {
                return by_degree;
            }
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        self.precedence
            .iter()
            .map(|&v| ea[v].cmp(&eb[v]))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    #[test]
    fn examples() {
        let lex = TermOrder::lex(2);
        assert_eq!(lex.compare(&t(&[2, 1]), &t(&[1, 2])), Ordering::Greater);
        let deglex = TermOrder::deglex(2);
        assert_eq!(deglex.compare(&t(&[0, 3]), &t(&[2, 0])), Ordering::Greater);
        assert_eq!(lex.compare(&t(&[1, 3]), &t(&[1, 3])), Ordering::Equal);
        // lex: x beats any power of y
        assert_eq!(lex.compare(&t(&[1, 0]), &t(&[0, 9])), Ordering::Greater);
    }

    #[test]
    fn precedence_reorders_variables() {
        let yx = TermOrder::with_precedence(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(yx.compare(&t(&[1, 0]), &t(&[0, 1])), Ordering::Less);
        assert!(TermOrder::with_precedence(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(TermOrder::with_precedence(OrderKind::Lex, vec![0, 2]).is_err());
    }

    #[test]
    fn parses_kinds() {
        assert_eq!("lex".parse::<OrderKind>().unwrap(), OrderKind::Lex);
        assert_eq!("DegLex".parse::<OrderKind>().unwrap(), OrderKind::DegLex);
        assert!("grevlex".parse::<OrderKind>().is_err());
    }
}

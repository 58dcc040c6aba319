//! Gröbner bases for polynomial ideals over `R[x1, ..., xn]`, where `R` is a
//! pluggable coefficient ring with a reduction relation.
//!
//! The completion procedure generalizes Buchberger's algorithm: for each pair
//! of basis polynomials it forms *G-polynomials*, built from a Gröbner basis
//! of the two head coefficients in `R`, and *M-polynomials*, built from the
//! syzygies of the head coefficients, and adds their non-zero normal forms
//! until everything reduces to 0. Over a field the M-polynomial is the
//! classical S-polynomial; over the integers the G-polynomials are what lets
//! `(2x, 3y)` pick up `xy`.
//!
//! ```
//! use groebner::{Completion, PolyRing, Rationals, TermOrder};
//!
//! let pr = PolyRing::new(Rationals::new(), TermOrder::lex(2)).unwrap();
//! // x^2 - y, x*y - 1
//! let gens = [
//!     pr.from_i64(&[(1, &[2, 0]), (-1, &[0, 1])]),
//!     pr.from_i64(&[(1, &[1, 1]), (-1, &[0, 0])]),
//! ];
//! let gb = Completion::new(&pr).groebner_basis(&gens).unwrap();
//! assert_eq!(gb.len(), 2); // x - y^2, y^3 - 1
//! ```

pub mod cli;
pub mod coeff;
pub mod completion;
pub mod critical_pairs;
pub mod poly;
pub mod reduction;
pub mod text;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use coeff::{
    CoeffRing, IntegerRing, PrimeField, RationalField, Residue, RingDescriptor, RingError,
    RingGroebner, RingKind, SyzygyVector,
};
pub use completion::{
    Completion, CompletionConfig, CompletionError, CompletionTrace, Membership,
};
pub use critical_pairs::{CriticalPolynomial, PairKind, PairRecord};
pub use poly::{min_terms, Monomial, OrderKind, PolyError, PolyRing, Polynomial, Term, TermOrder};
pub use reduction::{NormalForm, ReductionError, ReductionStep, Strategy};
pub use text::{ParseError, ParseErrorKind, Variables};

/// The integers with arbitrary-precision elements.
pub type Integers = IntegerRing<BigInt>;
/// The rationals with arbitrary-precision numerators and denominators.
pub type Rationals = RationalField<BigInt>;

pub type IntPoly = Polynomial<BigInt>;
pub type RatPoly = Polynomial<BigRational>;
pub type GfPoly = Polynomial<Residue>;

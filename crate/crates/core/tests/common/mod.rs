//! Random ideals and an independent field Buchberger used by the integration
//! tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use groebner::{BigInt, BigRational, CoeffRing, PolyRing, Polynomial, Residue, Term};
use rand::Rng;

/// Random polynomial in two variables of total degree at most `max_deg`:
/// each monomial is present with probability 1/2, with a coefficient drawn
/// from `[-c, c]`.
pub fn random_poly<R: CoeffRing>(
    pr: &PolyRing<R>,
    rng: &mut impl Rng,
    max_deg: u32,
    c: i64,
) -> Polynomial<R::Elem> {
    let mut monomials = Vec::new();
    for dx in 0..=max_deg {
        for dy in 0..=max_deg - dx {
            if rng.gen_bool(0.5) {
                let coeff = pr.ring().from_i64(rng.gen_range(-c..=c));
                monomials.push((coeff, Term::new(vec![dx, dy])));
            }
        }
    }
    pr.from_terms(monomials)
}

pub fn random_nonzero_poly<R: CoeffRing>(
    pr: &PolyRing<R>,
    rng: &mut impl Rng,
    max_deg: u32,
    c: i64,
) -> Polynomial<R::Elem> {
    loop {
        let p = random_poly(pr, rng, max_deg, c);
        if !p.is_zero() {
            return p;
        }
    }
}

/// One to three non-zero generators of degree at most 2 with coefficients in
/// `[-3, 3]`.
pub fn random_ideal<R: CoeffRing>(
    pr: &PolyRing<R>,
    rng: &mut impl Rng,
) -> Vec<Polynomial<R::Elem>> {
    let n = rng.gen_range(1..=3);
    (0..n).map(|_| random_nonzero_poly(pr, rng, 2, 3)).collect()
}

/// Minimal field interface for the oracle.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
    fn is_zero(&self) -> bool {
        *self.numer() == BigInt::from(0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mod5(pub u64);

impl Field for Mod5 {
    fn zero() -> Self {
        Mod5(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Mod5((self.0 + o.0) % 5)
    }
    fn neg(&self) -> Self {
        Mod5((5 - self.0) % 5)
    }
    fn mul(&self, o: &Self) -> Self {
        Mod5(self.0 * o.0 % 5)
    }
    fn inv(&self) -> Self {
        Mod5((1..5).find(|v| v * self.0 % 5 == 1).expect("non-zero"))
    }
}

/// Dense-key polynomial in `x > y` lex: the map key is `(deg_x, deg_y)`, so
/// the largest key is the leading term.
pub type Dp<F> = BTreeMap<(u32, u32), F>;

pub fn to_dp<F: Field, E: Clone>(p: &Polynomial<E>, conv: impl Fn(&E) -> F) -> Dp<F> {
    p.monomials()
        .iter()
        .map(|m| {
            let e = m.term.exponents();
            ((e[0], e[1]), conv(&m.coeff))
        })
        .collect()
}

pub fn residue_to_mod5(r: &Residue) -> Mod5 {
    Mod5(r.0)
}

fn lead<F: Field>(p: &Dp<F>) -> ((u32, u32), F) {
    let (k, v) = p.last_key_value().expect("non-zero");
    (*k, v.clone())
}

fn divides(a: (u32, u32), b: (u32, u32)) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// `p + c * t * q`.
fn add_scaled<F: Field>(p: &Dp<F>, c: &F, t: (u32, u32), q: &Dp<F>) -> Dp<F> {
    let mut out = p.clone();
    for (k, v) in q {
        let key = (k.0 + t.0, k.1 + t.1);
        let s = out.get(&key).cloned().unwrap_or_else(F::zero).add(&c.mul(v));
        if s.is_zero() {
            out.remove(&key);
        } else {
            out.insert(key, s);
        }
    }
    out
}

fn s_poly<F: Field>(f: &Dp<F>, g: &Dp<F>) -> Dp<F> {
    let (tf, cf) = lead(f);
    let (tg, cg) = lead(g);
    let l = (tf.0.max(tg.0), tf.1.max(tg.1));
    let a = add_scaled(&Dp::new(), &cf.inv(), (l.0 - tf.0, l.1 - tf.1), f);
    add_scaled(&a, &cg.inv().neg(), (l.0 - tg.0, l.1 - tg.1), g)
}

/// Full reduction of every monomial.
fn reduce<F: Field>(p: &Dp<F>, basis: &[Dp<F>]) -> Dp<F> {
    let mut p = p.clone();
    let mut r = Dp::new();
    while let Some((t, c)) = p.last_key_value().map(|(k, v)| (*k, v.clone())) {
        match basis.iter().find(|g| divides(lead(g).0, t)) {
            Some(g) => {
                let (tg, cg) = lead(g);
                let k = c.mul(&cg.inv()).neg();
                p = add_scaled(&p, &k, (t.0 - tg.0, t.1 - tg.1), g);
            }
            None => {
                p.remove(&t);
                r.insert(t, c);
            }
        }
    }
    r
}

/// Classical Buchberger with S-polynomials, followed by the reduced monic
/// basis sorted by descending leading term.
pub fn reduced_buchberger<F: Field>(gens: &[Dp<F>]) -> Vec<Dp<F>> {
    let mut g: Vec<Dp<F>> = gens.iter().filter(|p| !p.is_empty()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let r = reduce(&s_poly(&g[i], &g[j]), &g);
        if !r.is_empty() {
            g.push(r);
            let k = g.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let mut minimal: Vec<Dp<F>> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let t = lead(p).0;
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let u = lead(q).0;
            j != i && divides(u, t) && (u != t || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let monic: Vec<Dp<F>> = minimal
        .iter()
        .map(|p| add_scaled(&Dp::new(), &lead(p).1.inv(), (0, 0), p))
        .collect();
    let mut out: Vec<Dp<F>> = (0..monic.len())
        .map(|i| {
            let others: Vec<_> = monic
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            let (t, c) = lead(&monic[i]);
            let mut tail = monic[i].clone();
            tail.remove(&t);
            let mut r = reduce(&tail, &others);
            r.insert(t, c);
            r
        })
        .collect();
    out.sort_by_key(|p| std::cmp::Reverse(lead(p).0));
    out
}

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::{same_ring, RingRef};
use crate::error::{Error, Result};

pub type Coeff = BigRational;
pub type Term = (Coeff, Monomial);

/// Order of a polynomial or ideal at a point: a natural number or `+inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderValue {
    Finite(u32),
    Infinite,
}

impl OrderValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            OrderValue::Finite(d) => Some(d),
            OrderValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == OrderValue::Infinite
    }
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::Finite(d) => write!(f, "{d}"),
            OrderValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Canonical storage order: local degree reverse lexicographic on the
/// ring's own variable order.
pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| {
        for k in (0..a.nvars()).rev() {
            let (x, y) = (a.exp(k), b.exp(k));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    })
}

pub fn rational(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept duplicate-free, with nonzero coefficients, sorted
/// descending by the canonical order.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Subtract,
    Multiply,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(c, Monomial::one(ring.nvars()))] }
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Coeff::one(), Monomial::var(ring.nvars(), i))] }
    }

    pub fn monomial(ring: &RingRef, c: Coeff, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(c, m)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef, acc: HashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| canonical_cmp(&a.1, &b.1).reverse());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    /// A unit of the local ring at the origin.
    pub fn is_local_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        same_ring(&self.ring, &other.ring)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Leading term under `ord`.
    pub fn leading(&self, ord: &MonomialOrder) -> Option<&Term> {
        self.terms.iter().max_by(|a, b| ord.compare(&a.1, &b.1))
    }

    pub fn lead_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading(ord).map(|t| &t.1)
    }

    /// Minimal total degree of a term; `+inf` for zero.
    pub fn order(&self) -> OrderValue {
        // canonical storage puts the lowest degree first
        match self.terms.first() {
            Some((_, m)) => OrderValue::Finite(m.degree()),
            None => OrderValue::Infinite,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.exp(var)).max()
    }

    /// Largest `k` such that `var^k` divides every term (0 for zero).
    pub fn var_multiplicity(&self, var: usize) -> u32 {
        self.terms.iter().map(|(_, m)| m.exp(var)).min().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(_, m)| m.degree() == d).cloned().collect(),
        }
    }

    /// Lowest-degree homogeneous component.
    pub fn initial_form(&self) -> Polynomial {
        match self.order() {
            OrderValue::Finite(d) => self.homogeneous_part(d),
            OrderValue::Infinite => self.clone(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    /// Multiplication by a single term; preserves every monomial order.
    pub fn mul_term(&self, c: &Coeff, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (a * c, m.mul(mono))).collect(),
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match canonical_cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].0 } else { b[j].0.clone() };
                    out.push((c, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].0 - &b[j].0 } else { &a[i].0 + &b[j].0 };
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| (if negate { -c } else { c.clone() }, m.clone())));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert!(self.same_ring(other), "ring mismatch in add");
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert!(self.same_ring(other), "ring mismatch in sub");
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(self.same_ring(other), "ring mismatch in mul");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (c, m) = &other.terms[0];
            return self.mul_term(c, m);
        }
        if self.terms.len() == 1 {
            let (c, m) = &self.terms[0];
            return other.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (a, ma) in &self.terms {
            for (b, mb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += a * b;
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Ring arithmetic that reports a context mismatch instead of panicking.
    pub fn arith(op: ArithOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        f.check(g)?;
        Ok(match op {
            ArithOp::Add => f.add(g),
            ArithOp::Subtract => f.sub(g),
            ArithOp::Multiply => f.mul(g),
        })
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(_, m)| m.exp(var) > 0).map(|(c, m)| {
            let e = m.exp(var);
            (c * integer(e as i64), m.with_exp(var, e - 1))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Derivative with respect to a variable given by name.
    pub fn derivative_by_name(&self, name: &str) -> Result<Polynomial> {
        let i = self.ring.index(name)?;
        Ok(self.derivative(i))
    }

    /// Repeated partial derivative `d^gamma / dx^gamma`.
    pub fn derivative_multi(&self, gamma: &[u32]) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(c, m)| {
            let mut coef = c.clone();
            let mut exps = m.exps().to_vec();
            for (i, &g) in gamma.iter().enumerate() {
                if exps[i] < g {
                    return None;
                }
                for t in 0..g {
                    coef *= integer((exps[i] - t) as i64);
                }
                exps[i] -= g;
            }
            Some((coef, Monomial::from_exps(exps)))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`. The images may
    /// live in a different ring, which makes this the ring-change primitive.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        debug_assert!(images.iter().all(|p| same_ring(&p.ring, &target)));
        let mut cache: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc = Polynomial::zero(&target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap().mul(&powers[1]);
                    powers.push(next);
                }
                t = t.mul(&powers[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitution from a partial map; unmapped variables stay fixed.
    pub fn substitute_map(&self, map: &HashMap<usize, Polynomial>) -> Result<Polynomial> {
        for p in map.values() {
            self.check(p)?;
        }
        let images: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|i| map.get(&i).cloned().unwrap_or_else(|| Polynomial::var(&self.ring, i)))
            .collect();
        Ok(self.substitute(&images))
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Coeff::zero();
        for (c, m) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Moves `point` to the origin: `x_i -> x_i + p_i`.
    pub fn translate(&self, point: &[Coeff]) -> Polynomial {
        if point.iter().all(|c| c.is_zero()) {
            return self.clone();
        }
        let images: Vec<Polynomial> = point
            .iter()
            .enumerate()
            .map(|(i, p)| Polynomial::var(&self.ring, i).add(&Polynomial::constant(&self.ring, p.clone())))
            .collect();
        self.substitute(&images)
    }

    /// Homogenization into `target`, which must be this ring with one extra
    /// variable appended.
    pub fn homogenize(&self, target: &RingRef) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars() + 1);
        let d = self.total_degree().unwrap_or(0);
        let terms = self.terms.iter().map(|(c, m)| {
            let mut exps = m.exps().to_vec();
            exps.push(d - m.degree());
            (c.clone(), Monomial::from_exps(exps))
        });
        Polynomial::from_terms(target, terms)
    }

    /// Sets the last variable to one, landing in `target`.
    pub fn dehomogenize(&self, target: &RingRef) -> Polynomial {
        assert_eq!(target.nvars() + 1, self.ring.nvars());
        let n = target.nvars();
        let terms = self.terms.iter().map(|(c, m)| (c.clone(), Monomial::from_exps(m.exps()[..n].to_vec())));
        Polynomial::from_terms(target, terms)
    }

    /// Exact division by `var^k`, if every term allows it.
    pub fn divide_by_var(&self, var: usize, k: u32) -> Option<Polynomial> {
        if k == 0 {
            return Some(self.clone());
        }
        if self.terms.iter().any(|(_, m)| m.exp(var) < k) {
            return None;
        }
        Some(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.clone(), m.with_exp(var, m.exp(var) - k))).collect(),
        })
    }

    /// Exact division by a monomial, if every term allows it.
    pub fn divide_by_monomial(&self, mono: &Monomial) -> Option<Polynomial> {
        let terms: Option<Vec<Term>> =
            self.terms.iter().map(|(c, m)| mono.quotient_of(m).map(|q| (c.clone(), q))).collect();
        terms.map(|terms| Polynomial { ring: self.ring.clone(), terms })
    }

    /// Scalar multiple with coprime integer coefficients and a positive
    /// coefficient on the canonically first term.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (c, _) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        if self.terms[0].0.is_negative() {
            num = -num;
        }
        let factor = BigRational::new(den, num);
        if factor.is_one() {
            return self.clone();
        }
        self.scale(&factor)
    }

    /// Scales so the leading coefficient under `ord` is one.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading(ord) {
            Some((c, _)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Moves the polynomial into `target` via an index map (`map[i]` is the
    /// target position of source variable `i`); `None` when a dropped
    /// variable actually occurs.
    pub fn remap(&self, target: &RingRef, map: &[Option<usize>]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                exps[map[i]?] += e;
            }
            terms.push((c.clone(), Monomial::from_exps(exps)));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    pub fn format(&self, ord: &MonomialOrder) -> String {
        super::format::format_canonical(self, ord)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.len().hash(state);
        for (c, m) in &self.terms {
            c.hash(state);
            m.hash(state);
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ord = MonomialOrder::local(self.ring.nvars());
        f.write_str(&super::format::format_canonical(self, &ord))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

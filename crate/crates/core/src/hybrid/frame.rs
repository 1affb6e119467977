use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::invariants::order_of_ideal;
use crate::poly::{Coeff, Monomial, MonomialOrder, OrderValue, Polynomial};
use crate::stdbasis::Ideal;

/// Coefficients of the degree-one terms.
pub(crate) fn linear_part(f: &Polynomial) -> Vec<Coeff> {
    let n = f.ring().nvars();
    let mut out = vec![Coeff::zero(); n];
    for (c, m) in f.terms() {
        if m.degree() == 1 {
            let i = (0..n).find(|&i| m.exp(i) == 1).expect("degree one");
            out[i] = c.clone();
        }
    }
    out
}

/// The `(d-1)`-th partials of the order-`d` elements whose linear parts can
/// be nonzero, i.e. those along monomials of the degree-`d` initial forms.
pub(crate) fn contact_candidates(elems: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for g in elems {
        if g.order() != OrderValue::Finite(d) {
            continue;
        }
        let n = g.ring().nvars();
        let mut alphas: BTreeSet<Vec<u32>> = BTreeSet::new();
        for (_, m) in g.homogeneous_part(d).terms() {
            for i in 0..n {
                if m.exp(i) > 0 {
                    let mut a = m.exps().to_vec();
                    a[i] -= 1;
                    alphas.insert(a);
                }
            }
        }
        for a in alphas {
            let p = g.derivative_multi(&a);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// True when the only term of `f` involving `x_v` is the linear one.
pub(crate) fn solvable_for(f: &Polynomial, v: usize) -> bool {
    let mut hits = f.terms().iter().filter(|(_, m)| m.exp(v) > 0);
    matches!((hits.next(), hits.next()), (Some((_, m)), None) if m.degree() == 1)
}

struct Row {
    pivot: usize,
    vec: Vec<Coeff>,
    poly: Polynomial,
}

/// Gaussian elimination on linear parts, carrying the polynomials along.
pub(crate) struct FrameBuilder<'a> {
    ord: &'a MonomialOrder,
    rows: Vec<Row>,
}

impl<'a> FrameBuilder<'a> {
    pub(crate) fn new(ord: &'a MonomialOrder) -> Self {
        FrameBuilder { ord, rows: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Seeds the elimination with a coordinate already in the flag.
    pub(crate) fn add_variable(&mut self, x: Polynomial, v: usize) {
        let mut vec = vec![Coeff::zero(); x.ring().nvars()];
        vec[v] = Coeff::one();
        self.rows.push(Row { pivot: v, vec, poly: x });
    }

    /// Adds `f` if its linear part is independent of the rows so far and
    /// returns the pivot and the reduced element, scaled so that the pivot
    /// coefficient is one.
    ///
    /// The pivot is the largest variable under the ordering among those in
    /// which the element is of the form `x + r` with `r` free of `x`; if
    /// there is none, the largest variable with a nonzero coefficient.
    pub(crate) fn offer(&mut self, f: &Polynomial) -> Option<(usize, Polynomial)> {
        let mut vec = linear_part(f);
        let mut poly = f.clone();
        for row in &self.rows {
            let a = vec[row.pivot].clone();
            if !a.is_zero() {
                for (x, y) in vec.iter_mut().zip(&row.vec) {
                    *x -= &a * y;
                }
                poly = poly.sub(&row.poly.scale(&a));
            }
        }
        let n = vec.len();
        let nonzero: Vec<usize> = (0..n).filter(|&i| !vec[i].is_zero()).collect();
        if nonzero.is_empty() {
            return None;
        }
        let larger = |a: usize, b: usize| self.ord.compare(&Monomial::var(n, a), &Monomial::var(n, b));
        let clean: Vec<usize> = nonzero.iter().copied().filter(|&c| solvable_for(&poly, c)).collect();
        let pool = if clean.is_empty() { &nonzero } else { &clean };
        let pivot = pool.iter().copied().max_by(|&a, &b| larger(a, b)).expect("nonempty");
        let inv = Coeff::one() / &vec[pivot];
        for x in vec.iter_mut() {
            *x *= &inv;
        }
        let poly = poly.scale(&inv);
        self.rows.push(Row { pivot, vec, poly: poly.clone() });
        Some((pivot, poly))
    }
}

/// Order-one elements of `Δ^{d-1}(I)` with linearly independent linear
/// parts spanning its image in `m/m^2`, each scaled to have pivot
/// coefficient one. Requires `ord(I) = d` at the origin.
pub fn maximal_contact_frame(ideal: &Ideal, d: u32, ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let actual = order_of_ideal(ideal, None)?;
    if actual != OrderValue::Finite(d) || d == 0 {
        return Err(Error::OrderMismatch { expected: d, actual: actual.to_string() });
    }
    let mut fb = FrameBuilder::new(ord);
    let mut out = Vec::new();
    for c in contact_candidates(ideal.generators(), d) {
        if let Some((_, h)) = fb.offer(&c) {
            out.push(h);
        }
    }
    if out.is_empty() {
        return Err(Error::Internal("no order-one element in the iterated Δ-ideal".into()));
    }
    Ok(out)
}

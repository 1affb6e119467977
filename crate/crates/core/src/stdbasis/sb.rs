use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::One;

use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, MonomialOrder, OrderKind, Polynomial, RingRef};

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub poly: Polynomial,
    pub lm: Monomial,
    pub lc: Coeff,
    pub ecart: u32,
}

impl Elem {
    pub fn new(poly: Polynomial, ord: &MonomialOrder) -> Option<Elem> {
        let (lc, lm) = poly.leading(ord)?.clone();
        let ecart = poly.total_degree().unwrap_or(0) - lm.degree();
        Some(Elem { poly, lm, lc, ecart })
    }
}

fn ecart_of(h: &Polynomial, lm: &Monomial) -> u32 {
    h.total_degree().unwrap_or(0) - lm.degree()
}

/// S-polynomial of `f` and `g`: the combination cancelling both leading
/// terms at their lcm.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    if !f.same_ring(g) {
        return Err(Error::ContextMismatch);
    }
    let (cf, mf) = f.leading(ord).ok_or(Error::ZeroPolynomial)?;
    let (cg, mg) = g.leading(ord).ok_or(Error::ZeroPolynomial)?;
    let l = mf.lcm(mg);
    let uf = mf.quotient_of(&l).expect("lcm divisible");
    let ug = mg.quotient_of(&l).expect("lcm divisible");
    Ok(f.mul_term(&cg.clone(), &uf).sub(&g.mul_term(&cf.clone(), &ug)))
}

/// `h - (lc h / lc g) * (lm h / lm g) * g`, cancelling the leading term of `h`.
fn reduce_once(h: &Polynomial, hc: &Coeff, hm: &Monomial, g: &Elem) -> Polynomial {
    let q = g.lm.quotient_of(hm).expect("divisible leading monomial");
    h.sub(&g.poly.mul_term(&(hc / &g.lc), &q))
}

fn pick_reducer<'a>(cands: impl Iterator<Item = &'a Elem>, m: &Monomial, ord: &MonomialOrder) -> Option<&'a Elem> {
    let mut best: Option<&Elem> = None;
    for e in cands {
        if !e.lm.divides(m) {
            continue;
        }
        best = match best {
            None => Some(e),
            Some(b) => {
                let better = e.ecart < b.ecart || (e.ecart == b.ecart && ord.compare(&e.lm, &b.lm) == Ordering::Greater);
                Some(if better { e } else { b })
            }
        };
    }
    best
}

/// Mora's weak normal form for local orders: the result's leading term is
/// not divisible by any leading monomial in `basis`, and it equals a unit
/// multiple of `f` modulo the ideal.
pub(crate) fn mora_nf(f: &Polynomial, basis: &[Elem], ord: &MonomialOrder) -> Polynomial {
    let mut extra: Vec<Elem> = Vec::new();
    let mut h = f.clone();
    loop {
        let Some((hc, hm)) = h.leading(ord).cloned() else {
            return h;
        };
        let he = ecart_of(&h, &hm);
        let g = match pick_reducer(basis.iter().chain(extra.iter()), &hm, ord) {
            Some(g) => g.clone(),
            None => return h,
        };
        if g.ecart > he {
            extra.push(Elem { poly: h.clone(), lm: hm.clone(), lc: hc.clone(), ecart: he });
        }
        h = reduce_once(&h, &hc, &hm, &g).primitive();
    }
}

/// Full multivariate division for global orders.
pub(crate) fn global_nf(f: &Polynomial, basis: &[Elem], ord: &MonomialOrder) -> Polynomial {
    let mut h = f.clone();
    let mut rem: Vec<(Coeff, Monomial)> = Vec::new();
    while let Some((hc, hm)) = h.leading(ord).cloned() {
        match pick_reducer(basis.iter(), &hm, ord) {
            Some(g) => h = reduce_once(&h, &hc, &hm, g),
            None => {
                h = h.sub(&Polynomial::monomial(h.ring(), hc.clone(), hm.clone()));
                rem.push((hc, hm));
            }
        }
    }
    Polynomial::from_terms(f.ring(), rem)
}

pub(crate) fn nf_elems(f: &Polynomial, basis: &[Elem], ord: &MonomialOrder) -> Polynomial {
    if ord.is_local() {
        mora_nf(f, basis, ord)
    } else {
        global_nf(f, basis, ord)
    }
}

/// Normal form of `f` with respect to `basis`: full remainder for global
/// orders, Mora's weak normal form for local orders.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let elems: Vec<Elem> = basis.iter().filter_map(|g| Elem::new(g.clone(), ord)).collect();
    nf_elems(f, &elems, ord)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Resumable state of a (possibly truncated) standard basis computation.
#[derive(Clone, Debug)]
pub(crate) struct SbState {
    elems: Vec<Elem>,
    pending: Vec<Pair>,
    treated: HashSet<(usize, usize)>,
}

impl SbState {
    fn new(gens: &[Polynomial], ord: &MonomialOrder) -> Self {
        let mut st = SbState { elems: Vec::new(), pending: Vec::new(), treated: HashSet::new() };
        for g in gens {
            if let Some(e) = Elem::new(g.clone(), ord) {
                st.push(e);
            }
        }
        st
    }

    fn push(&mut self, e: Elem) {
        let k = self.elems.len();
        for i in 0..k {
            let lcm = self.elems[i].lm.lcm(&e.lm);
            self.pending.push(Pair { i, j: k, lcm });
        }
        self.elems.push(e);
    }

    fn select(&mut self, ord: &MonomialOrder, limit: Option<u32>) -> Option<Pair> {
        let mut best: Option<usize> = None;
        for (idx, p) in self.pending.iter().enumerate() {
            best = match best {
                None => Some(idx),
                Some(b) => {
                    let q = &self.pending[b];
                    let key = p
                        .lcm
                        .degree()
                        .cmp(&q.lcm.degree())
                        .then_with(|| ord.compare(&q.lcm, &p.lcm))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                    Some(if key == Ordering::Less { idx } else { b })
                }
            };
        }
        let b = best?;
        if let Some(d) = limit {
            if self.pending[b].lcm.degree() > d {
                return None;
            }
        }
        Some(self.pending.swap_remove(b))
    }

    fn is_treated(&self, a: usize, b: usize) -> bool {
        self.treated.contains(&(a.min(b), a.max(b)))
    }

    /// Product criterion and the chain criterion.
    fn skippable(&self, p: &Pair) -> bool {
        let (a, b) = (&self.elems[p.i].lm, &self.elems[p.j].lm);
        if a.is_coprime(b) {
            return true;
        }
        (0..self.elems.len()).any(|k| {
            k != p.i
                && k != p.j
                && self.elems[k].lm.divides(&p.lcm)
                && self.is_treated(p.i, k)
                && self.is_treated(p.j, k)
        })
    }

    fn run(&mut self, ord: &MonomialOrder, limit: Option<u32>) {
        while let Some(p) = self.select(ord, limit) {
            self.treated.insert((p.i, p.j));
            if self.skippable(&p) {
                continue;
            }
            let s = s_polynomial(&self.elems[p.i].poly, &self.elems[p.j].poly, ord).expect("nonzero basis elements");
            let h = nf_elems(&s, &self.elems, ord).primitive();
            if let Some(e) = Elem::new(h, ord) {
                self.push(e);
            }
        }
    }

    fn finished(&self) -> bool {
        self.pending.is_empty()
    }
}

/// A standard basis, optionally only valid up to a degree.
///
/// Local orders are handled by homogenizing: a Gröbner basis of the
/// homogenized generators under [`OrderKind::HomogenizedLocal`]
/// dehomogenizes to a standard basis. The internal state lives in the
/// homogenized ring so truncated computations can be resumed.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ring: RingRef,
    ord: MonomialOrder,
    work: Work,
    basis: Vec<Polynomial>,
    reduced: bool,
    truncation: Option<u32>,
    state: Arc<SbState>,
}

#[derive(Clone, Debug)]
struct Work {
    ring: RingRef,
    ord: MonomialOrder,
}

impl Work {
    fn for_order(ring: &RingRef, ord: &MonomialOrder) -> Work {
        if ord.is_local() {
            let mut perm = ord.perm().to_vec();
            perm.push(ring.nvars());
            Work {
                ring: ring.with_fresh("t"),
                ord: MonomialOrder::new(OrderKind::HomogenizedLocal, perm).expect("valid permutation"),
            }
        } else {
            Work { ring: ring.clone(), ord: ord.clone() }
        }
    }

    fn is_homogenized(&self, ring: &RingRef) -> bool {
        self.ring.nvars() != ring.nvars()
    }
}

impl StandardBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn ordering(&self) -> &MonomialOrder {
        &self.ord
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `Some(D)` when only pairs up to degree `D` were processed and
    /// further pairs remain.
    pub fn truncation_degree(&self) -> Option<u32> {
        self.truncation
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.is_some()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::from_vec(&self.ring, self.basis.clone())
    }

    /// Continues the computation up to degree `degree` (or to completion).
    pub fn resume(&self, degree: Option<u32>) -> StandardBasis {
        let mut st = (*self.state).clone();
        st.run(&self.work.ord, degree);
        finish(&self.ring, &self.ord, self.work.clone(), st, self.reduced, degree)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let elems: Vec<Elem> = self.basis.iter().filter_map(|g| Elem::new(g.clone(), &self.ord)).collect();
        nf_elems(f, &elems, &self.ord)
    }

    /// Membership in the ideal; at local orders, in its localization.
    ///
    /// Local membership avoids long weak-normal-form chains: `I` and
    /// `I + <f>` have the same localization exactly when their leading
    /// ideals agree.
    pub fn contains(&self, f: &Polynomial) -> bool {
        if self.ord.is_global() || self.is_truncated() {
            return self.normal_form(f).is_zero();
        }
        if f.is_zero() || self.is_unit() {
            return true;
        }
        let mut gens = self.basis.clone();
        gens.push(f.clone());
        let bigger = standard_basis(&Ideal::from_vec(&self.ring, gens), &self.ord, false, None)
            .expect("same ring and order");
        bigger.leading_ideal() == self.leading_ideal()
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        if self.ord.is_global() || self.is_truncated() {
            return other.generators().iter().all(|g| self.normal_form(g).is_zero());
        }
        if self.is_unit() {
            return true;
        }
        let mut gens = self.basis.clone();
        gens.extend(other.generators().iter().cloned());
        let bigger = standard_basis(&Ideal::from_vec(&self.ring, gens), &self.ord, false, None)
            .expect("same ring and order");
        bigger.leading_ideal() == self.leading_ideal()
    }

    /// The monomial ideal of leading monomials; refused for truncated bases.
    pub fn leading_ideal(&self) -> Result<Vec<Monomial>> {
        if self.is_truncated() {
            return Err(Error::TruncatedBasis);
        }
        let lms: Vec<Monomial> = self.basis.iter().filter_map(|g| g.lead_monomial(&self.ord).cloned()).collect();
        Ok(minimalize_monomials(lms, &self.ord))
    }

    /// Whether the basis contains a local (or global) unit.
    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.lead_monomial(&self.ord).is_some_and(|m| m.is_one()))
    }
}

/// Minimal generators of a monomial ideal, sorted descending by `ord`.
pub fn minimalize_monomials(mut ms: Vec<Monomial>, ord: &MonomialOrder) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ord.compare(b, a)));
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| ord.compare(b, a));
    out
}

fn finish(ring: &RingRef, ord: &MonomialOrder, work: Work, st: SbState, reduced: bool, limit: Option<u32>) -> StandardBasis {
    let truncation = if st.finished() { None } else { limit };
    let elems: Vec<Elem> = if work.is_homogenized(ring) {
        let mut seen: Vec<Polynomial> = Vec::new();
        for e in &st.elems {
            let p = e.poly.dehomogenize(ring).primitive();
            if !p.is_zero() && !seen.contains(&p) {
                seen.push(p);
            }
        }
        seen.into_iter().filter_map(|p| Elem::new(p, ord)).collect()
    } else {
        st.elems.clone()
    };
    let mut basis: Vec<Polynomial> = if elems.iter().any(|e| e.lm.is_one()) {
        vec![Polynomial::one(ring)]
    } else if reduced {
        reduce_basis(&elems, ord)
    } else {
        elems.into_iter().map(|e| e.poly).collect()
    };
    if reduced {
        basis.sort_by(|a, b| ord.compare(b.lead_monomial(ord).unwrap(), a.lead_monomial(ord).unwrap()));
    }
    StandardBasis { ring: ring.clone(), ord: ord.clone(), work, basis, reduced, truncation, state: Arc::new(st) }
}

/// Minimal, monic, and for global orders fully tail-reduced.
fn reduce_basis(elems: &[Elem], ord: &MonomialOrder) -> Vec<Polynomial> {
    let n = elems.len();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..n {
        let dominated = (0..n).any(|j| {
            if j == i || !elems[j].lm.divides(&elems[i].lm) {
                return false;
            }
            if elems[j].lm != elems[i].lm {
                return true;
            }
            // equal leading monomials: keep the shorter one, then the earlier
            (elems[j].poly.nterms(), j) < (elems[i].poly.nterms(), i)
        });
        if !dominated {
            keep.push(i);
        }
    }
    let mut kept: Vec<Elem> = keep
        .iter()
        .map(|&i| {
            let p = elems[i].poly.scale(&(Coeff::one() / &elems[i].lc));
            Elem::new(p, ord).unwrap()
        })
        .collect();
    if ord.is_global() {
        for i in 0..kept.len() {
            let others: Vec<Elem> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.clone()).collect();
            let r = global_nf(&kept[i].poly, &others, ord);
            let r = if r.is_zero() { kept[i].poly.clone() } else { r };
            kept[i] = Elem::new(r.monic(ord), ord).unwrap();
        }
    }
    kept.into_iter().map(|e| e.poly).collect()
}

/// Generators with pairwise coprime leading monomials already form a
/// standard basis (product criterion), so no pair needs treating.
fn coprime_state(gens: &[Polynomial], ord: &MonomialOrder) -> Option<SbState> {
    let elems: Vec<Elem> = gens.iter().filter_map(|g| Elem::new(g.clone(), ord)).collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if !elems[i].lm.is_coprime(&elems[j].lm) {
                return None;
            }
        }
    }
    let treated = (0..elems.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Some(SbState { elems, pending: Vec::new(), treated })
}

/// Standard basis of `ideal` under `ord`. With `truncation = Some(D)` only
/// pairs whose lcm has degree at most `D` are processed; for local orders
/// the degree is measured after homogenization.
pub fn standard_basis(ideal: &Ideal, ord: &MonomialOrder, reduced: bool, truncation: Option<u32>) -> Result<StandardBasis> {
    let ring = ideal.ring();
    if ord.nvars() != ring.nvars() {
        return Err(Error::ContextMismatch);
    }
    if ord.is_local() && truncation.is_none() {
        if let Some(st) = coprime_state(ideal.generators(), ord) {
            let work = Work { ring: ring.clone(), ord: ord.clone() };
            return Ok(finish(ring, ord, work, st, reduced, truncation));
        }
    }
    let work = Work::for_order(ring, ord);
    let gens: Vec<Polynomial> = if work.is_homogenized(ring) {
        ideal.generators().iter().map(|g| g.homogenize(&work.ring)).collect()
    } else {
        ideal.generators().to_vec()
    };
    let mut st = SbState::new(&gens, &work.ord);
    st.run(&work.ord, truncation);
    Ok(finish(ring, ord, work, st, reduced, truncation))
}

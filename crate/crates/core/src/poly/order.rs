use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Global degree reverse lexicographic.
    DegRevLex,
    /// Local degree reverse lexicographic: lower total degree ranks higher.
    NegDegRevLex,
    /// Pure lexicographic.
    Lex,
    /// Global order on a homogenized ring whose last-ranked variable is the
    /// homogenizing one: total degree first, then the local degree reverse
    /// lexicographic order on the remaining variables.
    HomogenizedLocal,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::NegDegRevLex => "negdegrevlex",
            OrderKind::Lex => "lex",
            OrderKind::HomogenizedLocal => "hlocal",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "degrevlex" | "dp" => Some(OrderKind::DegRevLex),
            "negdegrevlex" | "ds" | "local" => Some(OrderKind::NegDegRevLex),
            "lex" | "lp" => Some(OrderKind::Lex),
            _ => None,
        }
    }
}

/// A monomial order together with the variable ranking it uses.
///
/// `perm[0]` is the index of the largest variable. Permutations are kept as
/// data so coordinates never have to be renumbered when the ranking changes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!("{perm:?}")));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, perm })
    }

    pub fn identity(kind: OrderKind, n: usize) -> Self {
        MonomialOrder { kind, perm: (0..n).collect() }
    }

    pub fn local(n: usize) -> Self {
        Self::identity(OrderKind::NegDegRevLex, n)
    }

    pub fn degrevlex(n: usize) -> Self {
        Self::identity(OrderKind::DegRevLex, n)
    }

    pub fn lex(n: usize) -> Self {
        Self::identity(OrderKind::Lex, n)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderKind::NegDegRevLex
    }

    pub fn is_global(&self) -> bool {
        !self.is_local()
    }

    pub fn with_kind(&self, kind: OrderKind) -> Self {
        MonomialOrder { kind, perm: self.perm.clone() }
    }

    /// Same kind, with `first` ranked above every other variable (in the
    /// given order) and the remaining variables keeping their relative rank.
    pub fn with_leading(&self, first: &[usize]) -> Self {
        let mut perm: Vec<usize> = first.to_vec();
        perm.extend(self.perm.iter().copied().filter(|v| !first.contains(v)));
        MonomialOrder { kind: self.kind, perm }
    }

    /// Same kind, with `last` moved to the bottom of the ranking.
    pub fn with_last(&self, last: usize) -> Self {
        let mut perm: Vec<usize> = self.perm.iter().copied().filter(|&v| v != last).collect();
        perm.push(last);
        MonomialOrder { kind: self.kind, perm }
    }

    /// Extend to a ring with one more variable, ranked last.
    pub fn extended(&self) -> Self {
        let mut perm = self.perm.clone();
        perm.push(perm.len());
        MonomialOrder { kind: self.kind, perm }
    }

    fn revlex_tiebreak(&self, a: &Monomial, b: &Monomial) -> Ordering {
        Self::revlex_over(&self.perm, a, b)
    }

    fn revlex_over(perm: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
        for &k in perm.iter().rev() {
            let (x, y) = (a.exp(k), b.exp(k));
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.kind {
            OrderKind::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| self.revlex_tiebreak(a, b)),
            OrderKind::NegDegRevLex => b
                .degree()
                .cmp(&a.degree())
                .then_with(|| self.revlex_tiebreak(a, b)),
            OrderKind::HomogenizedLocal => {
                let (rest, h) = self.perm.split_at(self.perm.len() - 1);
                let (ha, hb) = (a.exp(h[0]), b.exp(h[0]));
                a.degree().cmp(&b.degree()).then_with(|| {
                    (b.degree() - hb)
                        .cmp(&(a.degree() - ha))
                        .then_with(|| Self::revlex_over(rest, a, b))
                })
            }
            OrderKind::Lex => {
                for &k in &self.perm {
                    match a.exp(k).cmp(&b.exp(k)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Comparison that fails when the monomials come from different rings.
    pub fn compare_checked(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() || a.nvars() != self.nvars() {
            return Err(Error::ContextMismatch);
        }
        Ok(self.compare(a, b))
    }

    pub fn describe(&self, names: &[String]) -> String {
        let ranking: Vec<&str> = self.perm.iter().map(|&i| names[i].as_str()).collect();
        format!("{} {}", self.kind.name(), ranking.join(">"))
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind.name(), self.perm)
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, Coeff, MonomialOrder, Polynomial, RingRef};

/// Finitely generated ideal, kept as an explicit generator list.
///
/// Zero generators are dropped on construction; the empty list is the
/// zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if !crate::poly::ring::same_ring(g.ring(), ring) {
                return Err(Error::ContextMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: out })
    }

    /// Like [`Ideal::new`] for generators already known to share `ring`.
    pub(crate) fn from_vec(ring: &RingRef, gens: Vec<Polynomial>) -> Self {
        Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| parse_polynomial(s, ring)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)] }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when no generators are present.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Ideal {
        let gens: Vec<Polynomial> = self.gens.iter().map(f).collect();
        let ring = gens.first().map(|g| g.ring().clone()).unwrap_or_else(|| self.ring.clone());
        Ideal::from_vec(&ring, gens)
    }

    /// Image under a ring homomorphism given by variable images.
    pub fn substitute(&self, images: &[Polynomial], target: &RingRef) -> Ideal {
        Ideal::from_vec(target, self.gens.iter().map(|g| g.substitute(images)).collect())
    }

    pub fn translate(&self, point: &[Coeff]) -> Result<Ideal> {
        if point.len() != self.ring.nvars() {
            return Err(Error::PointDimension { expected: self.ring.nvars(), got: point.len() });
        }
        Ok(self.map(|g| g.translate(point)))
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if crate::poly::ring::same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        for g in &other.gens {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ok(Ideal { ring: self.ring.clone(), gens })
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens: Vec<Polynomial> = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let p = f.mul(g);
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(Ideal { ring: self.ring.clone(), gens })
    }

    /// `k`-th power; the zeroth power is the unit ideal.
    pub fn power(&self, k: i64) -> Result<Ideal> {
        if k < 0 {
            return Err(Error::InvalidArgument(format!("negative ideal power {k}")));
        }
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Generators printed one per entry, terms sorted by `ord`.
    pub fn format(&self, ord: &MonomialOrder) -> Vec<String> {
        self.gens.iter().map(|g| g.format(ord)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineKind {
    Sum,
    Product,
    Power(i64),
}

/// Generator-level sum, product or power of ideals.
pub fn ideal_combine(kind: CombineKind, args: &[Ideal]) -> Result<Ideal> {
    let first = args.first().ok_or_else(|| Error::InvalidArgument("no ideals to combine".into()))?;
    match kind {
        CombineKind::Sum => args[1..].iter().try_fold(first.clone(), |acc, i| acc.sum(i)),
        CombineKind::Product => args[1..].iter().try_fold(first.clone(), |acc, i| acc.product(i)),
        CombineKind::Power(k) => {
            if args.len() != 1 {
                return Err(Error::InvalidArgument("power takes exactly one ideal".into()));
            }
            first.power(k)
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

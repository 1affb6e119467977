//! Blowups of affine space along coordinate subspaces: chart maps and the
//! total, weak and strict transforms of ideals.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, RingRef};
use crate::stdbasis::{saturate_by_variable, standard_basis, Ideal, MAX_SATURATION_STEPS};

/// Center `V(x_i : i in vars)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Center {
    ring: RingRef,
    vars: Vec<usize>,
}

impl Center {
    /// Variables are kept in ring order. A single variable is a divisor,
    /// whose blowup is the identity, and is rejected unless it is the whole
    /// ring.
    pub fn new(ring: &RingRef, vars: &[usize]) -> Result<Center> {
        let n = ring.nvars();
        let mut sorted = vars.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vars.len() {
            return Err(Error::InvalidCenter("repeated variable".into()));
        }
        if sorted.iter().any(|&v| v >= n) {
            return Err(Error::InvalidCenter("variable out of range".into()));
        }
        if sorted.is_empty() {
            return Err(Error::InvalidCenter("empty center".into()));
        }
        if sorted.len() < 2 && n > 1 {
            return Err(Error::InvalidCenter("blowing up a divisor changes nothing; use at least two variables".into()));
        }
        Ok(Center { ring: ring.clone(), vars: sorted })
    }

    pub fn from_names(ring: &RingRef, names: &[&str]) -> Result<Center> {
        let vars = names.iter().map(|s| ring.index(s)).collect::<Result<Vec<_>>>()?;
        Center::new(ring, &vars)
    }

    /// The origin.
    pub fn point(ring: &RingRef) -> Center {
        Center { ring: ring.clone(), vars: (0..ring.nvars()).collect() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vars.contains(&v)
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|&v| self.ring.name(v)).collect();
        write!(f, "V({})", names.join(","))
    }
}

/// The affine chart where the exceptional divisor is `V(chart_var)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupChart {
    ring: RingRef,
    chart_var: usize,
    images: Vec<Polynomial>,
}

impl BlowupChart {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn chart_var(&self) -> usize {
        self.chart_var
    }

    pub fn chart_name(&self) -> &str {
        self.ring.name(self.chart_var)
    }

    /// Image of each variable under the chart map.
    pub fn substitution(&self) -> &[Polynomial] {
        &self.images
    }

    /// Generator of the exceptional divisor.
    pub fn exceptional(&self) -> Ideal {
        Ideal::from_vec(&self.ring, vec![Polynomial::var(&self.ring, self.chart_var)])
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.images)
    }
}

/// One chart per center variable, in ring order.
pub fn blowup_charts(ring: &RingRef, center: &Center) -> Result<Vec<BlowupChart>> {
    if !crate::poly::ring::same_ring(ring, center.ring()) {
        return Err(Error::ContextMismatch);
    }
    Ok(center.vars().iter().map(|&c| chart(ring, center, c)).collect())
}

fn chart(ring: &RingRef, center: &Center, c: usize) -> BlowupChart {
    let e = Polynomial::var(ring, c);
    let images = (0..ring.nvars())
        .map(|i| {
            let x = Polynomial::var(ring, i);
            if i != c && center.contains(i) {
                x.mul(&e)
            } else {
                x
            }
        })
        .collect();
    BlowupChart { ring: ring.clone(), chart_var: c, images }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Total,
    Weak,
    Strict,
}

impl TransformKind {
    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Total => "total",
            TransformKind::Weak => "weak",
            TransformKind::Strict => "strict",
        }
    }

    pub fn from_name(s: &str) -> Option<TransformKind> {
        match s {
            "total" => Some(TransformKind::Total),
            "weak" => Some(TransformKind::Weak),
            "strict" => Some(TransformKind::Strict),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformResult {
    pub ideal: Ideal,
    pub kind: TransformKind,
    /// The `b` of the weak transform.
    pub controlled_exponent: Option<u32>,
    /// Quotient steps spent by the strict transform.
    pub saturation_steps: Option<usize>,
}

fn check_ring(ideal: &Ideal, ch: &BlowupChart) -> Result<()> {
    if crate::poly::ring::same_ring(ideal.ring(), &ch.ring) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

pub fn total_transform(ideal: &Ideal, ch: &BlowupChart) -> Result<TransformResult> {
    check_ring(ideal, ch)?;
    Ok(TransformResult {
        ideal: ideal.substitute(&ch.images, &ch.ring),
        kind: TransformKind::Total,
        controlled_exponent: None,
        saturation_steps: None,
    })
}

/// `T : E^b` for the largest `b` with `E^b (T : E^b) = T`.
///
/// `E = <x>` is principal and `x` is a non-zerodivisor, so the identity
/// holds exactly when `x^b` divides every generator of `T`, and then the
/// quotient is obtained by dividing each generator by `x^b`.
pub fn weak_transform(ideal: &Ideal, ch: &BlowupChart) -> Result<TransformResult> {
    let total = total_transform(ideal, ch)?.ideal;
    let v = ch.chart_var;
    let b = total.generators().iter().map(|g| g.var_multiplicity(v)).min().unwrap_or(0);
    let weak = divide_out(&total, v, b);
    Ok(TransformResult { ideal: weak, kind: TransformKind::Weak, controlled_exponent: Some(b), saturation_steps: None })
}

fn divide_out(ideal: &Ideal, v: usize, b: u32) -> Ideal {
    ideal.map(|g| g.divide_by_var(v, b).expect("x^b divides every generator"))
}

/// `T : E^inf`. Starts from the weak transform (the first `b` quotient
/// steps are exact divisions) and saturates the rest.
pub fn strict_transform(ideal: &Ideal, ch: &BlowupChart) -> Result<TransformResult> {
    let weak = weak_transform(ideal, ch)?;
    let b = weak.controlled_exponent.unwrap_or(0) as usize;
    let ord = MonomialOrder::degrevlex(ch.ring.nvars());
    let (strict, steps) = saturate_by_variable(&weak.ideal, ch.chart_var, &ord, MAX_SATURATION_STEPS)?;
    Ok(TransformResult {
        ideal: strict,
        kind: TransformKind::Strict,
        controlled_exponent: None,
        saturation_steps: Some(b + steps),
    })
}

/// Transforms each element of the reduced standard basis of `ideal` under
/// `ord` and strips the largest power of the chart variable from each.
///
/// Agrees with [`strict_transform`] for centers inside the
/// Hilbert–Samuel stratum; not a substitute in general.
pub fn strict_transform_via_sb(ideal: &Ideal, ch: &BlowupChart, ord: &MonomialOrder) -> Result<TransformResult> {
    check_ring(ideal, ch)?;
    let sb = standard_basis(ideal, ord, true, None)?;
    let v = ch.chart_var;
    let gens: Vec<Polynomial> = sb
        .basis()
        .iter()
        .map(|f| {
            let t = ch.apply(f);
            let k = t.var_multiplicity(v);
            t.divide_by_var(v, k).expect("multiplicity divides")
        })
        .collect();
    Ok(TransformResult {
        ideal: Ideal::new(&ch.ring, gens)?,
        kind: TransformKind::Strict,
        controlled_exponent: None,
        saturation_steps: None,
    })
}

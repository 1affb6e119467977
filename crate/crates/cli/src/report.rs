use serde::Serialize;

use desing_core::blowup::{strict_transform, strict_transform_via_sb, total_transform, weak_transform, BlowupChart, TransformKind};
use desing_core::coeff::{coeff_ideal_villamayor, monomial_split, weighted_order, WeightedIdealSum};
use desing_core::invariants::{hs_sequence, order_locus_ideal, order_of_ideal};
use desing_core::poly::{Monomial, OrderValue};
use desing_core::stdbasis::{ideal_equals, ideal_membership, Ideal};
use desing_core::{Error, MonomialOrder, Result, RingRef};

pub fn gens(ideal: &Ideal, ord: &MonomialOrder) -> Vec<String> {
    ideal.format(ord)
}

pub fn monomial_text(ring: &RingRef, m: &Monomial) -> String {
    let parts: Vec<String> = (0..ring.nvars())
        .filter(|&i| m.exp(i) > 0)
        .map(|i| if m.exp(i) == 1 { ring.name(i).to_string() } else { format!("{}^{}", ring.name(i), m.exp(i)) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Drops generators that lie in the ideal of the remaining ones.
pub fn pruned(ideal: &Ideal) -> Result<Ideal> {
    let r = ideal.ring();
    let ord = MonomialOrder::degrevlex(r.nvars());
    let mut kept: Vec<_> = ideal.generators().to_vec();
    let mut i = 0;
    while i < kept.len() && kept.len() > 1 {
        let mut rest = kept.clone();
        let g = rest.remove(i);
        if ideal_membership(&g, &Ideal::new(r, rest.clone())?, &ord)? {
            kept = rest;
        } else {
            i += 1;
        }
    }
    Ideal::new(r, kept)
}

/// HS values up to `degree`, or `None` for a unit ideal.
pub fn hs_or_unit(ideal: &Ideal, degree: u32) -> Result<Option<Vec<u64>>> {
    match hs_sequence(ideal, degree, None) {
        Ok(s) => Ok(Some(s.values().to_vec())),
        Err(Error::UnitIdeal) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn hs_text(hs: &Option<Vec<u64>>) -> String {
    match hs {
        Some(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        None => "unit".into(),
    }
}

/// Order at most one everywhere: the locus of order two is empty.
pub fn non_singular(ideal: &Ideal) -> Result<bool> {
    let locus = order_locus_ideal(ideal, 2)?;
    let r = ideal.ring();
    ideal_equals(&locus, &Ideal::unit(r), &MonomialOrder::degrevlex(r.nvars()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub level: i64,
    pub exponent: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    pub monomial: String,
    pub remaining_order: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoeffReport {
    pub var: String,
    pub b: u32,
    pub ring: Vec<String>,
    pub components: Vec<ComponentReport>,
    pub weighted_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitReport>,
}

pub fn coeff_report(w: &WeightedIdealSum, var: &str, b: u32, exceptional: Option<&str>) -> Result<CoeffReport> {
    let ring = w.ring();
    let ord = MonomialOrder::local(ring.nvars());
    let components = w
        .components()
        .iter()
        .map(|c| ComponentReport { level: c.level, exponent: c.exponent.to_string(), generators: gens(&c.ideal, &ord) })
        .collect();
    let split = match (exceptional.and_then(|e| ring.index_of(e)), w.components().first()) {
        (Some(e), Some(first)) => {
            let s = monomial_split(&first.ideal, &[e])?;
            Some(SplitReport {
                monomial: monomial_text(ring, &s.monomial_part),
                remaining_order: order_of_ideal(&s.non_monomial_part, None)?.to_string(),
            })
        }
        _ => None,
    };
    Ok(CoeffReport {
        var: var.to_string(),
        b,
        ring: ring.vars().to_vec(),
        components,
        weighted_order: weighted_order(w, None)?.to_string(),
        split,
    })
}

pub fn coeff_text(c: &CoeffReport) -> Vec<String> {
    let mut out = vec![format!("coefficient ideal in {} (b = {}) over {}", c.var, c.b, c.ring.join(","))];
    for comp in &c.components {
        out.push(format!("  level {} exponent {}: {}", comp.level, comp.exponent, comp.generators.join(", ")));
    }
    out.push(format!("  weighted order {}", c.weighted_order));
    if let Some(s) = &c.split {
        out.push(format!("  monomial part {}, remaining order {}", s.monomial, s.remaining_order));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartReport {
    pub chart: String,
    pub exceptional: String,
    pub transform: String,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturation_steps: Option<usize>,
    pub order: String,
    /// `null` when the ideal is the unit ideal at the chart origin.
    pub hs: Option<Vec<u64>>,
    pub non_singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<CoeffReport>,
}

pub fn transform(ideal: &Ideal, ch: &BlowupChart, kind: TransformKind, via_sb: Option<&MonomialOrder>) -> Result<desing_core::blowup::TransformResult> {
    match (kind, via_sb) {
        (TransformKind::Total, _) => total_transform(ideal, ch),
        (TransformKind::Weak, _) => weak_transform(ideal, ch),
        (TransformKind::Strict, None) => strict_transform(ideal, ch),
        (TransformKind::Strict, Some(ord)) => strict_transform_via_sb(ideal, ch, ord),
    }
}

/// One chart block. With `coeff = Some((z, b))` the coefficient ideal of
/// the transform in `z` is attached when the transform still has order
/// `b` at the chart origin.
pub fn chart_report(
    ideal: &Ideal,
    ch: &BlowupChart,
    kind: TransformKind,
    ord: &MonomialOrder,
    degree: u32,
    via_sb: bool,
    coeff: Option<(usize, u32)>,
) -> Result<ChartReport> {
    let local = ord.with_kind(desing_core::OrderKind::NegDegRevLex);
    let t = transform(ideal, ch, kind, via_sb.then_some(&local))?;
    let order = order_of_ideal(&t.ideal, None)?;
    let coefficient = match coeff {
        Some((z, b)) if order == OrderValue::Finite(b) => {
            let w = coeff_ideal_villamayor(&t.ideal, z, b)?;
            Some(coeff_report(&w, ch.ring().name(z), b, Some(ch.chart_name()))?)
        }
        _ => None,
    };
    Ok(ChartReport {
        chart: ch.chart_name().to_string(),
        exceptional: format!("V({})", ch.chart_name()),
        transform: kind.name().to_string(),
        generators: gens(&pruned(&t.ideal)?, ord),
        b: t.controlled_exponent,
        saturation_steps: t.saturation_steps,
        order: order.to_string(),
        hs: hs_or_unit(&t.ideal, degree)?,
        non_singular: non_singular(&t.ideal)?,
        coefficient,
    })
}

pub fn chart_text(c: &ChartReport) -> Vec<String> {
    let mut head = format!("chart {}: E = {}, {} transform", c.chart, c.exceptional, c.transform);
    if let Some(b) = c.b {
        head.push_str(&format!(" (b = {b})"));
    }
    let mut out = vec![head];
    for g in &c.generators {
        out.push(format!("  {g}"));
    }
    let mut facts = format!("  order {}, HS {}", c.order, hs_text(&c.hs));
    if c.non_singular {
        facts.push_str(", non-singular");
    }
    out.push(facts);
    if let Some(k) = &c.coefficient {
        out.extend(coeff_text(k).into_iter().map(|l| format!("  {l}")));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub value: String,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub text: String,
    pub entries: Vec<EntryReport>,
    pub complete: bool,
}

pub fn invariant_report(inv: &desing_core::hybrid::HybridInvariant) -> InvariantReport {
    InvariantReport {
        text: inv.to_string(),
        entries: inv.entries.iter().map(|e| EntryReport { value: e.value.to_string(), dimension: e.dimension }).collect(),
        complete: inv.complete,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HybridReport {
    pub ordering: String,
    pub degrees: Vec<u32>,
    pub widths: Vec<usize>,
    pub flag: Vec<String>,
    /// Images of the variables when the build changed coordinates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substitution: Option<Vec<String>>,
    pub jk: Vec<String>,
    pub jk_order: String,
    pub coeff_new: CoeffReport,
    pub invariant: InvariantReport,
    pub center: String,
    pub center_vars: Vec<String>,
}

pub fn hybrid_report(h: &desing_core::hybrid::HybridData, ord: &MonomialOrder, max_depth: usize) -> Result<HybridReport> {
    use desing_core::hybrid::{modified_coeff_ideal, suggest_center_of};
    let ring = h.ring();
    let substitution = if h.substitution_is_identity() {
        None
    } else {
        Some(h.substitution().iter().enumerate().map(|(i, p)| format!("{} -> {}", ring.name(i), p.format(ord))).collect())
    };
    let w = modified_coeff_ideal(h)?;
    let flag = h.flag_names().join(",");
    let c = suggest_center_of(h, max_depth)?;
    Ok(HybridReport {
        ordering: h.ordering().describe(ring.vars()),
        degrees: h.degrees(),
        widths: h.widths(),
        flag: h.flag_names(),
        substitution,
        jk: gens(h.jk(), ord),
        jk_order: order_of_ideal(h.jk(), None)?.to_string(),
        coeff_new: coeff_report(&w, &flag, h.dk(), None)?,
        invariant: invariant_report(&c.invariant),
        center: c.to_string(),
        center_vars: c.center_vars.clone(),
    })
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn hybrid_text(r: &HybridReport) -> Vec<String> {
    let mut out = vec![
        format!("ordering {}", r.ordering),
        format!("degrees d = ({})", joined(&r.degrees)),
        format!("flag lengths e = ({})", joined(&r.widths)),
        format!("flag {}", r.flag.join(",")),
    ];
    if let Some(s) = &r.substitution {
        out.push(format!("coordinates {}", s.join(", ")));
    }
    out.push(format!("J_k = <{}>, order {}", r.jk.join(", "), r.jk_order));
    if r.coeff_new.components.is_empty() {
        out.push("modified coefficient ideal: empty (flag fills the space), weighted order inf".into());
    } else {
        out.extend(coeff_text(&r.coeff_new).into_iter().map(|l| l.replacen("coefficient ideal", "modified coefficient ideal", 1)));
    }
    out.push(format!("invariant {}", r.invariant.text));
    out.push(format!("center {}", r.center));
    out
}

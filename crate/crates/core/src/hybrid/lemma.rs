use std::cmp::Ordering;

use crate::blowup::{blowup_charts, strict_transform, weak_transform, Center};
use crate::error::{Error, Result};
use crate::invariants::{hs_compare, hs_sequence, order_of_ideal, HsSequence};
use crate::poly::{MonomialOrder, OrderValue};
use crate::stdbasis::{ideal_equals, Ideal};

use super::staging::{staged_build, staged_build_with, HybridData};

/// Comparison of the two drop criteria at one chart origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartCheck {
    pub chart: String,
    /// `None` when the strict transform is the unit ideal at the chart
    /// origin (the point left the variety).
    pub hs_strict: Option<HsSequence>,
    pub hs_drop: bool,
    pub weak_jk_order: OrderValue,
    pub order_drop: bool,
    /// Whether rebuilding `J_k` from the strict transform reproduces the
    /// weak transform of `J_k`; only checked when the HS function is
    /// unchanged.
    pub rebuilt_matches: Option<bool>,
}

impl ChartCheck {
    pub fn equivalent(&self) -> bool {
        self.hs_drop == self.order_drop
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub max_degree: u32,
    pub hs_original: HsSequence,
    pub dk: u32,
    pub charts: Vec<ChartCheck>,
}

impl LemmaReport {
    pub fn all_equivalent(&self) -> bool {
        self.charts.iter().all(|c| c.equivalent())
    }
}

/// For every chart of the blowup at `center`: does the HS function of the
/// strict transform drop exactly when the order of the weak transform of
/// `J_k` drops below `d_k`?
///
/// HS sequences are compared up to `max_degree`, by default `2 d_k`.
pub fn lemma_equivalence_check(ideal: &Ideal, center: &Center, max_degree: Option<u32>) -> Result<LemmaReport> {
    lemma_equivalence_check_of(&staged_build(ideal)?, center, max_degree)
}

/// As [`lemma_equivalence_check`], for an existing staged build. The
/// center is read in the staged coordinates.
pub fn lemma_equivalence_check_of(h: &HybridData, center: &Center, max_degree: Option<u32>) -> Result<LemmaReport> {
    if let Some(&v) = h.flag_vars().iter().find(|&&v| !center.contains(v)) {
        return Err(Error::InvalidCenter(format!("center must contain the flag variable {}", h.ring().name(v))));
    }
    let ring = h.ring();
    let dk = h.dk();
    let degree = max_degree.unwrap_or(2 * dk);
    let base = hs_sequence(h.ideal(), degree, None)?;
    let local = MonomialOrder::local(ring.nvars());
    let mut charts = Vec::new();
    for ch in blowup_charts(ring, center)? {
        let strict = strict_transform(h.ideal(), &ch)?.ideal;
        let hs_strict = match hs_sequence(&strict, degree, None) {
            Ok(s) => Some(s),
            Err(Error::UnitIdeal) => None,
            Err(e) => return Err(e),
        };
        let hs_drop = match &hs_strict {
            None => true,
            Some(s) => hs_compare(s, &base)? == Ordering::Less,
        };
        let weak_jk = weak_transform(h.jk(), &ch)?.ideal;
        let weak_jk_order = order_of_ideal(&weak_jk, None)?;
        let order_drop = weak_jk_order < OrderValue::Finite(dk);
        let rebuilt_matches = if hs_drop {
            None
        } else {
            let rebuilt = staged_build_with(&strict, h.ordering())?;
            Some(ideal_equals(&weak_jk, rebuilt.jk(), &local)?)
        };
        charts.push(ChartCheck {
            chart: ch.chart_name().to_string(),
            hs_strict,
            hs_drop,
            weak_jk_order,
            order_drop,
            rebuilt_matches,
        });
    }
    Ok(LemmaReport { max_degree: degree, hs_original: base, dk, charts })
}

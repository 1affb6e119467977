use serde_json::{json, Value};

use desing_core::blowup::{blowup_charts, Center, TransformKind};
use desing_core::coeff::coeff_ideal_villamayor;
use desing_core::hybrid::{hybrid_invariant_of, staged_build_with, HybridData};
use desing_core::invariants::{delta_iterate, hs_sequence, order_of_ideal};
use desing_core::poly::Coeff;
use desing_core::stdbasis::standard_basis;
use desing_core::{MonomialOrder, OrderKind, OrderValue};

use crate::input::IdealFile;
use crate::report::{chart_report, chart_text, coeff_report, coeff_text, gens, hybrid_report, hybrid_text, invariant_report};
use crate::{Failure, Output};

/// The shared top of every JSON document, with `payload` added under `key`.
pub fn document(file: &IdealFile, key: &str, payload: Value) -> Value {
    json!({
        "ring": file.ring.vars(),
        "order": file.order.describe(file.ring.vars()),
        "generators": gens(&file.ideal, &file.order),
        key: payload,
    })
}

fn order_json(o: OrderValue) -> Value {
    match o {
        OrderValue::Finite(d) => json!(d),
        OrderValue::Infinite => json!("inf"),
    }
}

/// The file's ordering if it is local, else the local order with the same
/// ranking.
pub fn local_order(file: &IdealFile) -> MonomialOrder {
    if file.order.is_local() {
        file.order.clone()
    } else {
        file.order.with_kind(OrderKind::NegDegRevLex)
    }
}

pub fn staged(file: &IdealFile) -> Result<HybridData, Failure> {
    Ok(staged_build_with(&file.ideal, &local_order(file))?)
}

pub fn order(file: &IdealFile) -> Result<Output, Failure> {
    let o = order_of_ideal(&file.ideal, None)?;
    Ok(Output { text: vec![o.to_string()], json: document(file, "order_value", order_json(o)) })
}

pub fn sb(file: &IdealFile) -> Result<Output, Failure> {
    let basis = standard_basis(&file.ideal, &file.order, true, None)?.ideal();
    let g = gens(&basis, &file.order);
    Ok(Output { text: g.clone(), json: document(file, "sb", json!(g)) })
}

pub fn delta(file: &IdealFile, c: u32) -> Result<Output, Failure> {
    if c == 0 {
        return Err(Failure::Usage("--iterate must be at least 1".into()));
    }
    let d = delta_iterate(&file.ideal, c)?;
    let g = gens(&d, &MonomialOrder::degrevlex(file.ring.nvars()));
    Ok(Output { text: g.clone(), json: document(file, "delta", json!({ "iterate": c, "generators": g })) })
}

fn parse_point(text: &str, n: usize) -> Result<Vec<Coeff>, Failure> {
    let coords: Vec<Coeff> = text
        .split(',')
        .map(|s| s.trim().parse::<Coeff>().map_err(|_| Failure::Usage(format!("bad coordinate `{}`", s.trim()))))
        .collect::<Result<_, _>>()?;
    if coords.len() != n {
        return Err(Failure::Usage(format!("point needs {n} coordinates, got {}", coords.len())));
    }
    Ok(coords)
}

pub fn hs(file: &IdealFile, max_degree: u32, point: Option<&str>, cumulative: bool) -> Result<Output, Failure> {
    let pt = point.map(|p| parse_point(p, file.ring.nvars())).transpose()?;
    let mut s = hs_sequence(&file.ideal, max_degree, pt.as_deref())?;
    if cumulative {
        s = s.cumulative();
    }
    let values = s.values().to_vec();
    let text = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    Ok(Output { text: vec![text], json: document(file, "hs", json!({ "cumulative": cumulative, "values": values })) })
}

fn var_index(file: &IdealFile, name: &str) -> Result<usize, Failure> {
    file.ring.index_of(name).ok_or_else(|| Failure::Usage(format!("unknown variable `{name}`")))
}

pub fn coeff(file: &IdealFile, var: &str, b: Option<u32>) -> Result<Output, Failure> {
    let z = var_index(file, var)?;
    let b = match b {
        Some(b) => b,
        None => match order_of_ideal(&file.ideal, None)? {
            OrderValue::Finite(b) if b > 0 => b,
            o => return Err(Failure::Domain(format!("ideal has order {o} at the origin; pass --order"))),
        },
    };
    let w = coeff_ideal_villamayor(&file.ideal, z, b)?;
    let r = coeff_report(&w, var, b, None)?;
    Ok(Output { text: coeff_text(&r), json: document(file, "coeff", json!(r)) })
}

pub fn hybrid(file: &IdealFile, center_only: bool) -> Result<Output, Failure> {
    let h = staged(file)?;
    let r = hybrid_report(&h, &file.order, 8)?;
    if center_only {
        return Ok(Output {
            text: vec![r.center.clone()],
            json: document(file, "hybrid", json!({ "center": r.center, "center_vars": r.center_vars })),
        });
    }
    Ok(Output { text: hybrid_text(&r), json: document(file, "hybrid", json!(r)) })
}

pub fn invariant(file: &IdealFile, max_depth: usize) -> Result<Output, Failure> {
    let h = staged(file)?;
    let inv = invariant_report(&hybrid_invariant_of(&h, max_depth)?);
    Ok(Output { text: vec![inv.text.clone()], json: document(file, "hybrid", json!({ "invariant": inv })) })
}

pub fn blowup(
    file: &IdealFile,
    center: &str,
    chart: Option<&str>,
    kind: TransformKind,
    via_sb: bool,
    degree: u32,
) -> Result<Output, Failure> {
    let names: Vec<&str> = center.split(',').map(str::trim).collect();
    let vars: Vec<usize> = names.iter().map(|v| var_index(file, v)).collect::<Result<_, _>>()?;
    let c = Center::new(&file.ring, &vars)?;
    if via_sb && kind != TransformKind::Strict {
        return Err(Failure::Usage("--via-sb applies to the strict transform only".into()));
    }
    let mut charts = blowup_charts(&file.ring, &c)?;
    if let Some(name) = chart {
        let v = var_index(file, name)?;
        charts.retain(|ch| ch.chart_var() == v);
        if charts.is_empty() {
            return Err(Failure::Usage(format!("`{name}` is not a center variable")));
        }
    }
    let mut reports = Vec::new();
    let mut text = vec![format!("blowup at {c}")];
    for ch in &charts {
        let r = chart_report(&file.ideal, ch, kind, &file.order, degree, via_sb, None)?;
        text.extend(chart_text(&r));
        reports.push(r);
    }
    Ok(Output { text, json: document(file, "charts", json!(reports)) })
}

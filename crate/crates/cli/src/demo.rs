use serde::Serialize;
use serde_json::json;

use desing_core::blowup::{blowup_charts, weak_transform, Center, TransformKind};
use desing_core::hybrid::lemma_equivalence_check_of;
use desing_core::invariants::{delta_ideal, order_of_ideal};
use desing_core::stdbasis::Ideal;
use desing_core::MonomialOrder;

use crate::commands::staged;
use crate::input::{self, IdealFile};
use crate::report::{chart_report, chart_text, gens, hs_or_unit, hs_text, hybrid_report, hybrid_text, ChartReport};
use crate::{Failure, Output};

const EX61: &str = include_str!("../fixtures/ex61.ideal");
const EX62: &str = include_str!("../fixtures/ex62.ideal");

pub fn fixture(name: &str) -> Option<&'static str> {
    match name {
        "ex61" => Some(EX61),
        "ex62" => Some(EX62),
        _ => None,
    }
}

#[derive(Serialize)]
struct LemmaRow {
    hs_drop: bool,
    weak_jk_order: String,
    order_drop: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    rebuilt_matches: Option<bool>,
    equivalent: bool,
}

#[derive(Serialize)]
struct ChartBlock {
    chart: String,
    strict: ChartReport,
    weak: ChartReport,
    weak_jk: Vec<String>,
    lemma: LemmaRow,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ideal_text(i: &Ideal, ord: &MonomialOrder) -> String {
    format!("<{}>", gens(i, ord).join(", "))
}

fn report(name: &str, file: &IdealFile) -> Result<Output, Failure> {
    let ord = &file.order;
    let h = staged(file)?;
    let ideal = h.ideal();
    let order = order_of_ideal(ideal, None)?;
    let hs = hs_or_unit(ideal, 3)?;
    let delta = delta_ideal(ideal)?;
    let hybrid = hybrid_report(&h, ord, 8)?;
    let names: Vec<&str> = hybrid.center_vars.iter().map(String::as_str).collect();
    let center = Center::from_names(&file.ring, &names)?;
    let lemma = lemma_equivalence_check_of(&h, &center, None)?;
    // coefficient ideals of transforms that keep the order, in the first
    // hypersurface of maximal contact
    let contact = Some((h.flag_vars()[0], h.degrees()[0]));

    let mut text = vec![
        format!("example {name}"),
        format!("ring {}; ordering {}", file.ring.vars().join(","), ord.describe(file.ring.vars())),
        format!("I = {}", ideal_text(ideal, ord)),
        format!("order {order}"),
        format!("HS to degree 3: {}", hs_text(&hs)),
        format!("Delta(I) = {}", ideal_text(&delta, &MonomialOrder::degrevlex(file.ring.nvars()))),
        String::new(),
        "staged construction".into(),
    ];
    text.extend(hybrid_text(&hybrid).into_iter().map(|l| format!("  {l}")));
    text.push(String::new());
    text.push(format!("blowup at {center}; lemma check up to degree {}", lemma.max_degree));

    let mut blocks = Vec::new();
    for (ch, check) in blowup_charts(&file.ring, &center)?.iter().zip(&lemma.charts) {
        let strict = chart_report(ideal, ch, TransformKind::Strict, ord, 3, false, None)?;
        let weak = chart_report(ideal, ch, TransformKind::Weak, ord, 3, false, contact)?;
        let weak_jk = weak_transform(h.jk(), ch)?.ideal;
        let row = LemmaRow {
            hs_drop: check.hs_drop,
            weak_jk_order: check.weak_jk_order.to_string(),
            order_drop: check.order_drop,
            rebuilt_matches: check.rebuilt_matches,
            equivalent: check.equivalent(),
        };
        text.push(String::new());
        text.extend(chart_text(&strict));
        text.extend(chart_text(&weak));
        text.push(format!("weak transform of J_k: {}, order {}", ideal_text(&weak_jk, ord), row.weak_jk_order));
        let mut lemma_line = format!(
            "HS drop {}, order drop below {} {}",
            yes(row.hs_drop),
            lemma.dk,
            yes(row.order_drop)
        );
        if let Some(m) = row.rebuilt_matches {
            lemma_line.push_str(&format!(", rebuilt J_k matches {}", yes(m)));
        }
        lemma_line.push_str(if row.equivalent { ": equivalent" } else { ": NOT equivalent" });
        text.push(lemma_line);
        blocks.push(ChartBlock { chart: ch.chart_name().to_string(), strict, weak, weak_jk: gens(&weak_jk, ord), lemma: row });
    }
    text.push(String::new());
    text.push(format!("lemma holds on all charts: {}", yes(lemma.all_equivalent())));

    let json = json!({
        "ring": file.ring.vars(),
        "order": ord.describe(file.ring.vars()),
        "generators": gens(ideal, ord),
        "scenario": name,
        "order_value": order.to_string(),
        "hs": hs,
        "delta": gens(&delta, &MonomialOrder::degrevlex(file.ring.nvars())),
        "hybrid": hybrid,
        "center": center.to_string(),
        "charts": blocks,
        "lemma_holds": lemma.all_equivalent(),
    });
    Ok(Output { text, json })
}

pub fn run(name: &str) -> Result<Output, Failure> {
    let text = fixture(name).ok_or_else(|| Failure::Usage(format!("unknown scenario `{name}`")))?;
    let file = input::parse(text)?;
    report(name, &file)
}

//! Line-oriented ideal files.
//!
//! ```text
//! # comment
//! ring: x, y, z
//! order: negdegrevlex z>y>x
//! gen: x^5 + y^11
//! gen: z^9 + x^9
//! ```
//!
//! `order:` is optional and defaults to the local degree reverse
//! lexicographic order ranking the variables as declared. The ranking
//! after the order name is optional too.

use std::fmt;
use std::path::Path;

use desing_core::stdbasis::Ideal;
use desing_core::{parse_polynomial, Error, MonomialOrder, OrderKind, Ring, RingRef};

#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

fn at(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError { line, column, message: message.into() }
}

#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: RingRef,
    pub order: MonomialOrder,
    pub ideal: Ideal,
}

pub fn load(path: &Path) -> Result<IdealFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| at(0, 0, format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn parse_order(ring: &RingRef, text: &str, line: usize, column: usize) -> Result<MonomialOrder, InputError> {
    let mut parts = text.split_whitespace();
    let name = parts.next().ok_or_else(|| at(line, column, "missing order name"))?;
    let kind = OrderKind::from_name(name).ok_or_else(|| at(line, column, format!("unknown order `{name}`")))?;
    let perm = match parts.next() {
        None => (0..ring.nvars()).collect(),
        Some(ranking) => ranking
            .split('>')
            .map(|v| ring.index(v.trim()).map_err(|e| at(line, column, e.to_string())))
            .collect::<Result<Vec<usize>, _>>()?,
    };
    if parts.next().is_some() {
        return Err(at(line, column, "trailing text after the ranking"));
    }
    MonomialOrder::new(kind, perm).map_err(|e| at(line, column, e.to_string()))
}

pub fn parse(text: &str) -> Result<IdealFile, InputError> {
    let mut ring: Option<RingRef> = None;
    let mut order: Option<(String, usize, usize)> = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (key, value) = content.split_once(':').ok_or_else(|| at(line, 1, "expected `ring:`, `order:` or `gen:`"))?;
        // 1-based column of the first character after the colon
        let column = key.len() + 2;
        match key.trim() {
            "ring" => {
                if ring.is_some() {
                    return Err(at(line, 1, "ring declared twice"));
                }
                let names: Vec<&str> = value.split(',').map(str::trim).collect();
                let r = Ring::new(names).map_err(|e| at(line, column, e.to_string()))?;
                ring = Some(r);
            }
            "order" => {
                if order.is_some() {
                    return Err(at(line, 1, "order declared twice"));
                }
                order = Some((value.to_string(), line, column));
            }
            "gen" => {
                let r = ring.as_ref().ok_or_else(|| at(line, 1, "generator before the ring declaration"))?;
                let f = parse_polynomial(value, r).map_err(|e| match e {
                    Error::Parse { column: c, message } => at(line, column + c - 1, message),
                    other => at(line, column, other.to_string()),
                })?;
                gens.push(f);
            }
            other => return Err(at(line, 1, format!("unknown key `{other}`"))),
        }
    }
    let ring = ring.ok_or_else(|| at(0, 0, "missing `ring:` line"))?;
    if gens.is_empty() {
        return Err(at(0, 0, "no `gen:` lines"));
    }
    let order = match order {
        Some((text, line, column)) => parse_order(&ring, &text, line, column)?,
        None => MonomialOrder::local(ring.nvars()),
    };
    let ideal = Ideal::new(&ring, gens).map_err(|e| at(0, 0, e.to_string()))?;
    Ok(IdealFile { ring, order, ideal })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_ring_order_and_generators() {
        let f = parse("# example\nring: x, y, z\norder: negdegrevlex z>y>x\ngen: x^5 + y^11\ngen: z^9 + x^9 # second\n").unwrap();
        assert_eq!(f.ring.nvars(), 3);
        assert_eq!(f.order.perm(), &[2, 1, 0]);
        assert_eq!(f.ideal.len(), 2);
    }

    #[test]
    fn default_order_is_local() {
        let f = parse("ring: a, b\ngen: a*b\n").unwrap();
        assert_eq!(f.order, MonomialOrder::local(2));
        let g = parse("ring: a, b\norder: degrevlex\ngen: a*b\n").unwrap();
        assert!(g.order.is_global());
    }

    #[test]
    fn reports_positions() {
        let e = parse("ring: x, y\ngen: x + q\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains('q'), "{e}");
        let e = parse("ring: x\nfoo: 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(parse("ring: x\n").is_err());
        assert!(parse("gen: x\n").is_err());
        assert!(parse("ring: x\norder: sideways\ngen: x\n").is_err());
    }
}

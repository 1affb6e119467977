use num_traits::{One, Signed};

use super::order::MonomialOrder;
use super::polynomial::Polynomial;

/// Deterministic text form: terms descending under `ord`, `*` between
/// factors, `^` for powers, `" + "`/`" - "` between terms.
pub fn format_canonical(f: &Polynomial, ord: &MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let mut terms: Vec<_> = f.terms().iter().collect();
    terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
    let mut out = String::new();
    for (k, (c, m)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(abs.to_string());
        }
        for &i in ord.perm() {
            match m.exp(i) {
                0 => {}
                1 => factors.push(ring.name(i).to_string()),
                e => factors.push(format!("{}^{e}", ring.name(i))),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;
    use crate::poly::ring::Ring;

    #[test]
    fn canonical_strings() {
        let r = Ring::new(["x", "y", "z", "w", "v"]).unwrap();
        let ord = MonomialOrder::local(5);
        let f = parse_polynomial("x^3*y^3 + z^2", &r).unwrap();
        assert_eq!(format_canonical(&f, &ord), "z^2 + x^3*y^3");
        let g = parse_polynomial("-1/2*x + 3 - y^2", &r).unwrap();
        assert_eq!(format_canonical(&g, &ord), "3 - 1/2*x - y^2");
        assert_eq!(format_canonical(&Polynomial::zero(&r), &ord), "0");
        let h = parse_polynomial("w^5+x^5+v^3*y^2", &r).unwrap();
        assert_eq!(format_canonical(&h, &ord), "x^5 + w^5 + y^2*v^3");
    }

    #[test]
    fn round_trip() {
        let r = Ring::new(["x", "y"]).unwrap();
        let ord = MonomialOrder::degrevlex(2);
        let f = parse_polynomial("(2/3*x - y + 1)^3", &r).unwrap();
        let s = format_canonical(&f, &ord);
        assert_eq!(parse_polynomial(&s, &r).unwrap(), f);
    }
}

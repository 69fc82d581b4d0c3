//! Canonical text form: monomials in descending order, `^` for powers and
//! `*` for products, e.g. `3*x1^2*x2 - x3 + 1`.

use std::fmt::Write;

use crate::poly::order::ExponentVector;
use crate::ring::Ring;

pub(crate) fn format_term(names: &[String], t: &ExponentVector) -> String {
    let mut out = String::new();
    for (name, &e) in names.iter().zip(t.as_slice()) {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(name);
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    out
}

pub(crate) fn format_terms<'a, R: Ring + 'a>(
    ring: &R,
    names: &[String],
    terms: impl Iterator<Item = (&'a ExponentVector, &'a R::Elem)>,
) -> String {
    let terms: Vec<_> = terms.collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let single = terms.len() == 1;
    let mut out = String::new();
    for (i, (t, c)) in terms.into_iter().enumerate() {
        let text = ring.coeff_text(c);
        match (i == 0, text.negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let body = text.body;
        if t.is_constant() {
            if text.compound && !single {
                write!(out, "({body})").unwrap();
            } else {
                out.push_str(&body);
            }
        } else {
            let term = format_term(names, t);
            if body == "1" {
                out.push_str(&term);
            } else if text.compound {
                write!(out, "({body})*{term}").unwrap();
            } else {
                write!(out, "{body}*{term}").unwrap();
            }
        }
    }
    out
}

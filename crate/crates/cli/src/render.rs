//! JSON and LaTeX renderings of library values. Scalars are always strings.

use std::collections::BTreeMap;

use letterbraid_core::{Alphabet, Monomial, Scalar, TensorElement, TruncSeries};
use serde_json::{json, Value};

pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn term(key: &Monomial, alphabet: &Alphabet, sep: &str, c: &Scalar) -> Value {
    json!({ "key": key.display(alphabet, sep), "coeff": scalar(c) })
}

/// Longest keys first, then lexicographic: the order of the text display.
fn display_order(terms: &BTreeMap<Monomial, Scalar>) -> Vec<(&Monomial, &Scalar)> {
    let mut out: Vec<_> = terms.iter().collect();
    out.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

pub fn tensor_terms(t: &TensorElement) -> Value {
    Value::Array(display_order(t.terms()).into_iter().map(|(k, c)| term(k, t.alphabet(), "|", c)).collect())
}

pub fn tensor(t: &TensorElement) -> Value {
    json!({ "weight": t.weight(), "display": t.to_string(), "terms": tensor_terms(t) })
}

pub fn series_terms(s: &TruncSeries) -> Value {
    Value::Array(display_order(s.terms()).into_iter().map(|(k, c)| term(k, s.alphabet(), " ", c)).collect())
}

/// `a12` becomes `a_{12}`.
fn latex_name(name: &str) -> String {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, digits) = name.split_at(split);
    let stem = stem.replace('_', "\\_");
    if digits.is_empty() || stem.is_empty() {
        stem + digits
    } else {
        format!("{stem}_{{{digits}}}")
    }
}

pub fn latex_tensor(t: &TensorElement) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let a = t.alphabet();
    let mut out = String::new();
    for (i, (k, c)) in display_order(t.terms()).into_iter().enumerate() {
        let negative = c.signum() < 0;
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let body: Vec<String> = k.0.iter().map(|&g| latex_name(a.name(g))).collect();
        let coeff = magnitude.to_string();
        let coeff = match coeff.split_once('/') {
            Some((n, d)) => format!("\\tfrac{{{n}}}{{{d}}}"),
            None => coeff,
        };
        if body.is_empty() {
            out.push_str(&coeff);
        } else {
            if !magnitude.is_one() {
                out.push_str(&coeff);
                out.push(' ');
            }
            out.push_str(&body.join(" \\mid "));
        }
    }
    out
}

pub fn latex_table(elements: &[TensorElement]) -> String {
    let mut out = String::from("\\begin{tabular}{r l}\nweight & invariant \\\\\n\\hline\n");
    for t in elements {
        out.push_str(&format!("{} & ${}$ \\\\\n", t.weight(), latex_tensor(t)));
    }
    out.push_str("\\end{tabular}\n");
    out
}

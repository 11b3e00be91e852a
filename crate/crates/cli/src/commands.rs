use std::fmt::Write as _;
use std::path::Path;

use letterbraid_core::johnson::johnson_tau;
use letterbraid_core::magnus::magnus_expand;
use letterbraid_core::presented::{is_invariant, pullback as pull_back};
use letterbraid_core::{
    braiding_number, braiding_polynomial, Depth, JohnsonLevel, Presentation, RingSpec, TensorElement, TruncatedQuotient,
};
use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};
use crate::input;
use crate::render;

/// A result document in every supported format.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub latex: Option<String>,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, latex: None }
    }
}

fn require_invariant(p: &Presentation, t: &TensorElement) -> Result<()> {
    if is_invariant(p, t)?.invariant {
        Ok(())
    } else {
        Err(CliError::NotInvariant(t.to_string()))
    }
}

pub fn magnus(p: &Presentation, word: &str, order: usize, ring: RingSpec) -> Result<Output> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let w = input::word(word, p.alphabet())?;
    let m = magnus_expand(&w, ring, order);
    let json = json!({ "order": order, "series": m.to_string(), "terms": render::series_terms(&m) });
    Ok(Output::new(json, format!("M({w}) = {m} + O({order})")))
}

pub fn braid(p: &Presentation, tensor: &str, word: &str, ring: RingSpec) -> Result<Output> {
    let a = p.alphabet();
    let t = input::tensor(tensor, a, ring)?;
    let w = input::word(word, a)?;
    let poly = braiding_polynomial(&t, &w)?;
    let number = braiding_number(&t, &w)?;
    let coeffs: Vec<Value> = poly.coeffs().iter().map(render::scalar).collect();
    let json = json!({ "polynomial": coeffs, "number": render::scalar(&number) });
    Ok(Output::new(json, format!("L(t) = {poly}\nnumber = {number}")))
}

pub fn pair(p: &Presentation, tensor: &str, word: &str, order: Option<usize>, ring: RingSpec) -> Result<Output> {
    let a = p.alphabet();
    let t = input::tensor(tensor, a, ring)?;
    let combo = input::combination(word, a, ring)?;
    require_invariant(p, &t)?;
    let q = TruncatedQuotient::build(p, order.unwrap_or(t.weight() + 1), ring)?;
    let value = q.pair(&t, &combo)?;
    Ok(Output::new(json!({ "value": render::scalar(&value) }), value.to_string()))
}

pub fn invariants(p: &Presentation, order: usize, ring: RingSpec) -> Result<Output> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let basis = TruncatedQuotient::build(p, order, ring)?.invariants();
    let mut json = Map::new();
    json.insert("ring".into(), json!(ring.to_string()));
    json.insert("max_weight".into(), json!(basis.max_weight));
    json.insert("dimension".into(), json!(basis.len()));
    json.insert("elements".into(), Value::Array(basis.elements.iter().map(render::tensor).collect()));
    let mut text = String::new();
    for t in &basis.elements {
        writeln!(text, "{}  {t}", t.weight()).expect("string");
    }
    if let Some(divisors) = &basis.elementary_divisors {
        let shown: Vec<String> = divisors.iter().map(ToString::to_string).collect();
        json.insert("elementary_divisors".into(), json!(shown));
        if !shown.is_empty() {
            writeln!(text, "torsion in the quotient: {}", shown.join(", ")).expect("string");
        }
    }
    Ok(Output { json: Value::Object(json), text, latex: Some(render::latex_table(&basis.elements)) })
}

pub fn check(p: &Presentation, tensor: &str, ring: RingSpec) -> Result<Output> {
    let a = p.alphabet();
    let t = input::tensor(tensor, a, ring)?;
    let verdict = is_invariant(p, &t)?;
    let mut json = Map::new();
    json.insert("invariant".into(), json!(verdict.invariant));
    json.insert("order".into(), json!(verdict.order));
    let text = match &verdict.witness {
        None => format!("{t} is an invariant"),
        Some(w) => {
            let evaluation: Vec<String> = w.words().iter().map(ToString::to_string).collect();
            json.insert(
                "witness".into(),
                json!({
                    "relator": w.relator_word.to_string(),
                    "relator_index": w.relator,
                    "left": w.left.display(a, "|"),
                    "right": w.right.display(a, "|"),
                    "value": render::scalar(&w.value),
                    "evaluation": evaluation,
                }),
            );
            format!("{t} is not an invariant: l_T({}) = {}", evaluation.join(" | "), w.value)
        }
    };
    Ok(Output::new(Value::Object(json), text))
}

pub fn depth(p: &Presentation, word: &str, order: usize, ring: RingSpec) -> Result<Output> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let w = input::word(word, p.alphabet())?;
    let d = TruncatedQuotient::build(p, order, ring)?.dimension_depth(&w)?;
    let json = match d {
        Depth::Exact(k) => json!({ "depth": k }),
        Depth::AtLeast(n) => json!({ "depth_at_least": n }),
    };
    Ok(Output::new(json, d.to_string()))
}

pub fn pullback(p: &Presentation, endo: &str, tensor: &str, ring: RingSpec) -> Result<Output> {
    let h = input::hom(endo, p.alphabet())?;
    let t = input::tensor(tensor, p.alphabet(), ring)?;
    require_invariant(p, &t)?;
    let q = TruncatedQuotient::build(p, t.weight() + 1, ring)?;
    let back = pull_back(&h, &t, &q)?;
    let mut json = Map::new();
    json.insert("source".into(), json!(h.source().to_string()));
    if let Value::Object(fields) = render::tensor(&back) {
        json.extend(fields);
    }
    Ok(Output::new(Value::Object(json), back.to_string()))
}

pub fn johnson(p: &Presentation, endo: &str, stage: usize, ring: RingSpec) -> Result<Output> {
    if stage == 0 {
        return Err(CliError::Usage("--stage must be at least 1".into()));
    }
    let phi = input::endo(endo, p)?;
    let report = johnson_tau(p, &phi, stage, ring)?;
    let shown = |ts: &[TensorElement]| -> Vec<String> { ts.iter().map(ToString::to_string).collect() };
    let matrix: Vec<Vec<Value>> =
        (0..report.matrix.rows()).map(|r| report.matrix.row(r).iter().map(render::scalar).collect()).collect();
    let warnings: Vec<String> = report.relator_warnings.iter().map(|&i| p.relators()[i].to_string()).collect();
    let mut json = Map::new();
    json.insert("stage".into(), json!(stage));
    let level_text = match report.level {
        JohnsonLevel::Exact(k) => {
            json.insert("level".into(), json!(k));
            k.to_string()
        }
        JohnsonLevel::AtLeast(k) => {
            json.insert("level_at_least".into(), json!(k));
            format!("≥ {k}")
        }
    };
    json.insert("sources".into(), json!(shown(&report.sources)));
    json.insert("leading_terms".into(), json!(shown(&report.leading_terms)));
    json.insert("targets".into(), json!(shown(&report.targets)));
    json.insert("images".into(), json!(shown(&report.images)));
    json.insert("matrix".into(), json!(matrix));
    json.insert("relator_warnings".into(), json!(warnings));
    let mut text = format!("level {level_text}\n");
    for (src, img) in report.sources.iter().zip(&report.images) {
        writeln!(text, "tau({src}) = {img}").expect("string");
    }
    for w in &warnings {
        writeln!(text, "warning: relator {w} is not preserved within the truncation").expect("string");
    }
    Ok(Output::new(Value::Object(json), text))
}

pub fn oracle(table: &Path, order: usize, p: Option<&Presentation>, ring: RingSpec) -> Result<Output> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let g = input::table(table)?;
    let sizes = g.ideal_power_dims(ring, order);
    let mut text = format!("group of order {}\n", g.size());
    let dims: Vec<Value> = sizes
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let torsion: Vec<String> = s.torsion.iter().map(ToString::to_string).collect();
            let extra = if torsion.is_empty() { String::new() } else { format!(", torsion {}", torsion.join(", ")) };
            writeln!(text, "N = {}: rank {}{extra}", i + 1, s.rank).expect("string");
            json!({ "order": i + 1, "rank": s.rank, "torsion": torsion })
        })
        .collect();
    let mut json = Map::new();
    json.insert("size".into(), json!(g.size()));
    json.insert("dimensions".into(), Value::Array(dims));
    if let Some(p) = p {
        let counts =
            (1..=order).map(|n| Ok(TruncatedQuotient::build(p, n, ring)?.rank())).collect::<Result<Vec<usize>>>()?;
        let agrees = counts.iter().zip(&sizes).all(|(c, s)| *c == s.rank);
        writeln!(text, "invariant counts {counts:?}: {}", if agrees { "agree" } else { "DISAGREE" }).expect("string");
        json.insert("invariants".into(), json!(counts));
        json.insert("agrees".into(), json!(agrees));
    }
    Ok(Output::new(Value::Object(json), text))
}

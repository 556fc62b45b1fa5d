use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, parse_rational, CycRational, Poly, RatFunc, Rational};
use crate::multisym::{KostkaTable, Sign};
use crate::partitions::{MultiPartition, TotalOrder};
use crate::symfunc::SymExpansion;
use crate::tableaux::{MultiTableau, SkewTableau};

/// Exponents above this are refused by the decoders.
pub const MAX_EXPONENT: usize = 1 << 16;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn encode_rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn decode_rational(v: &Value) -> Result<Rational> {
    v.as_str().ok_or_else(|| parse_err("a rational must be a string")).and_then(parse_rational)
}

pub fn encode_cyc(c: &CycRational) -> Value {
    Value::Array(c.coords().iter().map(encode_rational).collect())
}

pub fn decode_cyc(v: &Value, order: u32) -> Result<CycRational> {
    let items = v.as_array().ok_or_else(|| parse_err("a cyclotomic number must be an array"))?;
    let coords = items.iter().map(decode_rational).collect::<Result<Vec<_>>>()?;
    CycRational::from_coords(order, coords)
}

/// Exponent to coefficient; zero coefficients are omitted.
pub fn encode_poly(p: &Poly) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), encode_cyc(c));
    }
    Value::Object(m)
}

pub fn decode_poly(v: &Value, order: u32) -> Result<Poly> {
    let m = v.as_object().ok_or_else(|| parse_err("a polynomial must be an object"))?;
    let mut terms = Vec::with_capacity(m.len());
    for (k, c) in m {
        let canonical = k == "0" || (!k.starts_with('0') && k.bytes().all(|b| b.is_ascii_digit()));
        let e: usize = k.parse().ok().filter(|_| canonical).ok_or_else(|| parse_err(format!("bad exponent {k:?}")))?;
        if e > MAX_EXPONENT {
            return Err(parse_err(format!("exponent {e} too large")));
        }
        terms.push((e, decode_cyc(c, order)?));
    }
    let deg = terms.iter().map(|(e, _)| *e + 1).max().unwrap_or(0);
    let mut coeffs = vec![CycRational::zero(order); deg];
    for (e, c) in terms {
        coeffs[e] = c;
    }
    Ok(Poly::from_coeffs(order, coeffs))
}

/// {"num", "den"} plus "order" when the coefficients are not rational.
pub fn encode_ratfunc(f: &RatFunc) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), encode_poly(f.num()));
    m.insert("den".into(), encode_poly(f.den()));
    if f.order() != 1 {
        m.insert("order".into(), json!(f.order()));
    }
    Value::Object(m)
}

fn read_order(m: &Map<String, Value>) -> Result<u32> {
    match m.get("order") {
        None => Ok(1),
        Some(v) => v.as_u64().and_then(|k| u32::try_from(k).ok()).ok_or_else(|| parse_err("bad order")),
    }
}

fn check_keys(m: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match m.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(parse_err(format!("unexpected field {k:?}"))),
        None => Ok(()),
    }
}

pub fn decode_ratfunc(v: &Value) -> Result<RatFunc> {
    decode_ratfunc_in(v, None)
}

/// Decodes under an order inherited from the enclosing document.
fn decode_ratfunc_in(v: &Value, outer: Option<u32>) -> Result<RatFunc> {
    let m = v.as_object().ok_or_else(|| parse_err("a rational function must be an object"))?;
    check_keys(m, &["num", "den", "order"])?;
    let order = match (m.contains_key("order"), outer) {
        (false, Some(o)) => o,
        _ => read_order(m)?,
    };
    let get = |k: &str| m.get(k).ok_or_else(|| parse_err(format!("missing {k:?}")));
    let num = decode_poly(get("num")?, order)?;
    let den = decode_poly(get("den")?, order)?;
    RatFunc::new(num, den)
}

pub fn encode_expansion(e: &SymExpansion) -> Value {
    let terms: Vec<Value> = e.terms().map(|(l, c)| json!({"label": l, "coeff": encode_ratfunc(c)})).collect();
    let mut m = Map::new();
    m.insert("level".into(), json!(e.level()));
    m.insert("degree".into(), json!(e.degree()));
    if e.order() != 1 {
        m.insert("order".into(), json!(e.order()));
    }
    m.insert("terms".into(), Value::Array(terms));
    Value::Object(m)
}

pub fn decode_expansion(v: &Value) -> Result<SymExpansion> {
    let m = v.as_object().ok_or_else(|| parse_err("an expansion must be an object"))?;
    check_keys(m, &["level", "degree", "order", "terms"])?;
    let num = |k: &str| -> Result<u64> {
        m.get(k).and_then(Value::as_u64).ok_or_else(|| parse_err(format!("missing or bad {k:?}")))
    };
    let level = usize::try_from(num("level")?).map_err(|_| parse_err("bad level"))?;
    let degree = u32::try_from(num("degree")?).map_err(|_| parse_err("bad degree"))?;
    if level == 0 {
        return Err(parse_err("level must be positive"));
    }
    let order = read_order(m)?;
    let mut out = SymExpansion::zero(level, degree, order);
    let terms = m.get("terms").and_then(Value::as_array).ok_or_else(|| parse_err("missing terms"))?;
    let mut seen = BTreeSet::new();
    for t in terms {
        let tm = t.as_object().ok_or_else(|| parse_err("a term must be an object"))?;
        check_keys(tm, &["label", "coeff"])?;
        let label: MultiPartition = serde_json::from_value(tm.get("label").cloned().unwrap_or(Value::Null))
            .map_err(|e| parse_err(e.to_string()))?;
        if !seen.insert(label.clone()) {
            return Err(parse_err(format!("duplicate label {label}")));
        }
        let coeff = decode_ratfunc_in(tm.get("coeff").ok_or_else(|| parse_err("missing coeff"))?, Some(order))?;
        out.add_term(label, coeff)?;
    }
    Ok(out)
}

/// A Kostka table as read back from JSON; the engine is not rebuilt.
#[derive(Clone, Debug, PartialEq)]
pub struct KostkaDoc {
    pub n: u32,
    pub r: usize,
    pub sign: Sign,
    pub order: TotalOrder,
    pub entries: Vec<(MultiPartition, MultiPartition, RatFunc)>,
}

pub fn encode_kostka(t: &KostkaTable) -> Value {
    let entries: Vec<Value> = t
        .nonzero()
        .map(|(l, m, v)| json!({"lambda": l, "mu": m, "value": encode_ratfunc(v)}))
        .collect();
    json!({
        "n": t.n,
        "r": t.r,
        "sign": t.sign.symbol(),
        "order": t.config().order.name(),
        "conjugate": t.config().conjugate.to_string(),
        "entries": entries,
    })
}

pub fn decode_kostka(v: &Value) -> Result<KostkaDoc> {
    let m = v.as_object().ok_or_else(|| parse_err("a table must be an object"))?;
    check_keys(m, &["n", "r", "sign", "order", "conjugate", "entries"])?;
    let n = m.get("n").and_then(Value::as_u64).and_then(|x| u32::try_from(x).ok()).ok_or_else(|| parse_err("bad n"))?;
    let r = m.get("r").and_then(Value::as_u64).and_then(|x| usize::try_from(x).ok()).ok_or_else(|| parse_err("bad r"))?;
    if r == 0 {
        return Err(parse_err("r must be positive"));
    }
    let sign: Sign = m.get("sign").and_then(Value::as_str).ok_or_else(|| parse_err("missing sign"))?.parse()?;
    let order: TotalOrder = match m.get("order") {
        None => TotalOrder::default(),
        Some(o) => o.as_str().ok_or_else(|| parse_err("bad order"))?.parse()?,
    };
    if let Some(c) = m.get("conjugate") {
        c.as_str().ok_or_else(|| parse_err("bad conjugate"))?.parse::<crate::multisym::ConjugateSlot>()?;
    }
    let raw = m.get("entries").and_then(Value::as_array).ok_or_else(|| parse_err("missing entries"))?;
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(raw.len());
    for e in raw {
        let em = e.as_object().ok_or_else(|| parse_err("an entry must be an object"))?;
        check_keys(em, &["lambda", "mu", "value"])?;
        let label = |k: &str| -> Result<MultiPartition> {
            let l: MultiPartition = serde_json::from_value(em.get(k).cloned().unwrap_or(Value::Null))
                .map_err(|e| parse_err(e.to_string()))?;
            if l.level() != r || l.size() != n {
                return Err(parse_err(format!("{l} does not have size {n} and level {r}")));
            }
            Ok(l)
        };
        let (lambda, mu) = (label("lambda")?, label("mu")?);
        if !seen.insert((lambda.clone(), mu.clone())) {
            return Err(parse_err(format!("duplicate entry {lambda}, {mu}")));
        }
        let value = decode_ratfunc(em.get("value").ok_or_else(|| parse_err("missing value"))?)?;
        entries.push((lambda, mu, value));
    }
    Ok(KostkaDoc { n, r, sign, order, entries })
}

pub fn encode_tableau(t: &SkewTableau) -> Value {
    serde_json::to_value(t).expect("plain data")
}

pub fn decode_tableau(v: &Value) -> Result<SkewTableau> {
    serde_json::from_value(v.clone()).map_err(|e| parse_err(e.to_string()))
}

pub fn encode_multi_tableau(t: &MultiTableau) -> Value {
    Value::Array(t.components().iter().map(encode_tableau).collect())
}

pub fn decode_multi_tableau(v: &Value) -> Result<MultiTableau> {
    let items = v.as_array().ok_or_else(|| parse_err("a tableau tuple must be an array"))?;
    MultiTableau::new(items.iter().map(decode_tableau).collect::<Result<_>>()?)
}

/// Parses a JSON document, mapping syntax errors to [`Error::Parse`].
pub fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| parse_err(e.to_string()))
}

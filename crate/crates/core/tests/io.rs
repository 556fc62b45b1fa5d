use kostka_core::exactalg::{CycRational, Poly, RatFunc};
use kostka_core::io::*;
use kostka_core::multisym::{hl_multi, kostka_table, EngineConfig, Sign};
use kostka_core::partitions::multi;
use kostka_core::tableaux::{enumerate_sst_multi, multi_to_skew};
use serde_json::json;

#[test]
fn ratfunc_round_trip() {
    let f = RatFunc::new(Poly::from_ints(1, &[0, 1, 0, 1]), Poly::from_ints(1, &[1, 0, -2])).unwrap();
    let v = encode_ratfunc(&f);
    assert_eq!(v, json!({"num": {"1": ["-1/2"], "3": ["-1/2"]}, "den": {"0": ["-1/2"], "2": ["1"]}}));
    assert_eq!(decode_ratfunc(&v).unwrap(), f);
    let z = CycRational::zeta_pow(3, 1);
    let g = RatFunc::new(Poly::constant(z.clone()), &Poly::one(3) - &Poly::monomial(z, 1)).unwrap();
    assert_eq!(decode_ratfunc(&encode_ratfunc(&g)).unwrap(), g);
}

#[test]
fn ratfunc_rejects() {
    for bad in [
        json!({"num": {"0": ["1"]}, "den": {}}),
        json!({"num": {"00": ["1"]}, "den": {"0": ["1"]}}),
        json!({"num": {"0": ["1"]}, "den": {"0": ["1"]}, "extra": 1}),
        json!({"num": {"0": ["1", "2"]}, "den": {"0": ["1"]}}),
        json!({"num": {"0": ["1"]}, "den": {"0": ["1"]}, "order": 0}),
        json!({"num": {"99999999": ["1"]}, "den": {"0": ["1"]}}),
        json!({"num": {"0": ["1/0"]}, "den": {"0": ["1"]}}),
        json!([1, 2]),
    ] {
        assert!(decode_ratfunc(&bad).is_err(), "{bad}");
    }
}

#[test]
fn expansion_round_trip() {
    let fam = hl_multi(3, 2, Sign::Plus, EngineConfig::default()).unwrap();
    for e in &fam.expansions {
        assert_eq!(&decode_expansion(&encode_expansion(e)).unwrap(), e);
    }
    let dup = json!({"level": 1, "degree": 1, "terms": [
        {"label": [[1]], "coeff": {"num": {"0": ["1"]}, "den": {"0": ["1"]}}},
        {"label": [[1]], "coeff": {"num": {"0": ["1"]}, "den": {"0": ["1"]}}}]});
    assert!(decode_expansion(&dup).is_err());
    let wrong_size = json!({"level": 1, "degree": 2, "terms": [
        {"label": [[1]], "coeff": {"num": {"0": ["1"]}, "den": {"0": ["1"]}}}]});
    assert!(decode_expansion(&wrong_size).is_err());
}

#[test]
fn table_round_trip() {
    let t = kostka_table(2, 2, Sign::Minus, EngineConfig::default()).unwrap();
    let doc = decode_kostka(&encode_kostka(&t)).unwrap();
    assert_eq!((doc.n, doc.r, doc.sign), (2, 2, Sign::Minus));
    let expect: Vec<_> = t.nonzero().map(|(l, m, v)| (l.clone(), m.clone(), v.clone())).collect();
    assert_eq!(doc.entries, expect);
    let bad = json!({"n": 1, "r": 2, "sign": "-", "entries": [
        {"lambda": [[1]], "mu": [[1],[]], "value": {"num": {"0": ["1"]}, "den": {"0": ["1"]}}}]});
    assert!(decode_kostka(&bad).is_err());
}

#[test]
fn table_formats() {
    let t = kostka_table(1, 2, Sign::Minus, EngineConfig::default()).unwrap();
    let csv = emit_kostka(&t, Format::Csv);
    assert!(csv.starts_with("lambda,mu,value\n\"[[1],[]]\",\"[[1],[]]\",1\n"), "{csv}");
    let latex = emit_kostka(&t, Format::Latex);
    assert!(latex.contains("\\begin{tabular}{l|cc}"));
    let text = emit_kostka(&t, Format::Text);
    assert!(text.starts_with("K^- n=1 r=2"));
}

#[test]
fn tableau_round_trip() {
    for t in enumerate_sst_multi(&multi(&[&[2, 1], &[1]]), &[2, 1, 1]) {
        assert_eq!(decode_multi_tableau(&encode_multi_tableau(&t)).unwrap(), t);
        let s = multi_to_skew(&t);
        assert_eq!(decode_tableau(&encode_tableau(&s)).unwrap(), s);
    }
}

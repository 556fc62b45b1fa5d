//! Text and JSON encodings, and table emitters.

mod emit;
mod json;
mod text;

pub use emit::{emit_kostka, Format};
pub use json::{
    decode_cyc, decode_expansion, decode_kostka, decode_multi_tableau, decode_poly, decode_ratfunc, decode_rational,
    decode_tableau, encode_cyc, encode_expansion, encode_kostka, encode_multi_tableau, encode_poly, encode_ratfunc,
    encode_rational, encode_tableau, parse_json, KostkaDoc, MAX_EXPONENT,
};
pub use text::{parse_multipartition, parse_partition, parse_weight};

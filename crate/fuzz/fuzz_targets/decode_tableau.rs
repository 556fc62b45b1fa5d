//! Skew and multi tableaux. Anything accepted must be semistandard, and
//! re-encoding must give back the same tableau.

#![no_main]

use kostka_core::io::{decode_multi_tableau, decode_tableau, encode_multi_tableau, encode_tableau, parse_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(v) = parse_json(s) else { return };
    if let Ok(t) = decode_tableau(&v) {
        assert_eq!(decode_tableau(&encode_tableau(&t)).unwrap(), t);
        let _ = t.row_word();
    }
    if let Ok(m) = decode_multi_tableau(&v) {
        assert_eq!(decode_multi_tableau(&encode_multi_tableau(&m)).unwrap(), m);
    }
});

#![no_main]

use kostka_core::io::{decode_ratfunc, encode_ratfunc, parse_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(v) = parse_json(s) else { return };
    // decoded values are canonical, so they must survive a round trip
    if let Ok(f) = decode_ratfunc(&v) {
        assert_eq!(decode_ratfunc(&encode_ratfunc(&f)).unwrap(), f);
    }
});

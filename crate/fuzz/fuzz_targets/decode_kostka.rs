#![no_main]

use kostka_core::io::{decode_kostka, parse_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_json(s) {
        let _ = decode_kostka(&v);
    }
});

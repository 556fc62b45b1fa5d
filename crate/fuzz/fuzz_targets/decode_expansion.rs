#![no_main]

use kostka_core::io::{decode_expansion, encode_expansion, parse_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(v) = parse_json(s) else { return };
    if let Ok(e) = decode_expansion(&v) {
        assert_eq!(decode_expansion(&encode_expansion(&e)).unwrap(), e);
    }
});

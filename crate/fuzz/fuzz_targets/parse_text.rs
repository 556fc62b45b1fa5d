//! Partition, multipartition and weight parsers must not panic.

#![no_main]

use kostka_core::io::{parse_multipartition, parse_partition, parse_weight};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_partition(s) {
        let again = parse_partition(&format!("{:?}", p.parts())).unwrap();
        assert_eq!(again, p);
    }
    let _ = parse_multipartition(s);
    let _ = parse_weight(s);
});

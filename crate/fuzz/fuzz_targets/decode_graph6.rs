#![no_main]

use libfuzzer_sys::fuzz_target;
use totdom::io::{decode_graph6, encode_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = decode_graph6(line) {
        let s = encode_graph6(&g).unwrap();
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }
});

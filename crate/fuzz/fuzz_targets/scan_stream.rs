#![no_main]

use libfuzzer_sys::fuzz_target;
use totdom::scan::{scan, ScanOptions};

fuzz_target!(|data: &[u8]| {
    let opts = ScanOptions {
        threads: 1,
        max_n: 10,
        ..ScanOptions::default()
    };
    let mut out = Vec::new();
    let summary = scan(data, &mut out, std::io::sink(), &opts).unwrap();
    assert!(summary.matched <= summary.read);
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use qlie::frontend::{parse_algebra, render_alg_text};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 128 {
        return;
    }
    if let Ok(x) = parse_algebra(text) {
        // canonical text may exceed the input size bounds, but must never misparse
        match parse_algebra(&render_alg_text(&x)) {
            Ok(back) => assert_eq!(back, x),
            Err(e) => assert!(e.is_size_limit(), "{e}"),
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use qlie::frontend::{parse_vector, render_vector_text};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    if let Ok(v) = parse_vector(text) {
        // canonical text may exceed the input size bounds, but must never misparse
        match parse_vector(&render_vector_text(&v)) {
            Ok(back) => assert_eq!(back, v),
            Err(e) => assert!(e.is_size_limit(), "{e}"),
        }
    }
});

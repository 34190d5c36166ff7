#![no_main]

use libfuzzer_sys::fuzz_target;
use qlie::frontend::TableDocument;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = TableDocument::from_json(text) {
        let _ = doc.twist();
        if let Ok(t) = doc.table() {
            let again = TableDocument::new(&t, &[], None, None).unwrap();
            assert_eq!(again.table().unwrap(), t);
        }
    }
});

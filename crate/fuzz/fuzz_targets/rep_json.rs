#![no_main]

use libfuzzer_sys::fuzz_target;
use qlie::frontend::RepresentationDocument;
use qlie::qrep::verify_representation;
use qlie::StructureTable;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = RepresentationDocument::from_json(text) {
        if let Ok(r) = doc.representation() {
            if r.dim() <= 4 {
                let _ = verify_representation(&r, &StructureTable::quantum_sl2());
            }
        }
    }
});

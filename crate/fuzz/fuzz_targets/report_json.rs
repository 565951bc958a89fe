#![no_main]

use libfuzzer_sys::fuzz_target;
use twistlab::Report;

fuzz_target!(|data: &[u8]| {
    if let Ok(r) = serde_json::from_slice::<Report>(data) {
        let back: Report = serde_json::from_str(&r.to_json()).expect("report re-reads");
        assert_eq!(back.to_json(), r.to_json());
    }
});

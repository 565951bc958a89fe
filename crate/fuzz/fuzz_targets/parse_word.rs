#![no_main]

use libfuzzer_sys::fuzz_target;
use twistlab::parse_word;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(w) = parse_word(src) {
            assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use twistlab::eval_str;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        let _ = eval_str(src);
    }
});

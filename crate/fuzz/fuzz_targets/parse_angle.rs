#![no_main]

use libfuzzer_sys::fuzz_target;
use twistlab::parse_angle;

fuzz_target!(|data: &[u8]| {
    if let Ok(src) = std::str::from_utf8(data) {
        if let Ok(a) = parse_angle(src) {
            assert_eq!(parse_angle(&a.to_string()).unwrap(), a);
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use twistlab::parse;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(expr) = parse(src) {
        // the rendering must parse back to the same tree
        let again = parse(&expr.to_string()).expect("rendered expression parses");
        assert!(again.same_shape(&expr));
    }
});

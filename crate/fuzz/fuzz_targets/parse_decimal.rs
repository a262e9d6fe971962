#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::rigor::parse_decimal;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = parse_decimal(s) {
        // canonical text parses back to the same literal
        let again = parse_decimal(&d.to_string()).expect("canonical form parses");
        assert_eq!(again, d);
        let (lo, hi) = d.bounds();
        assert!(lo <= hi);
    }
});

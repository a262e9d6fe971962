#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::numfield::parse_poly;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_poly(s) {
        assert_eq!(parse_poly(&f.to_bracket()).expect("bracket form parses"), f);
        assert_eq!(parse_poly(&f.to_string()).expect("display form parses"), f);
    }
});

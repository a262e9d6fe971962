#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::report::parse_mu_expr;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_mu_expr(s) {
        assert_eq!(parse_mu_expr(&m.to_string()).expect("display form parses"), m);
        let _ = m.eval(64);
    }
});

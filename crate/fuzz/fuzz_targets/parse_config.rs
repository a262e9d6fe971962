#![no_main]

use libfuzzer_sys::fuzz_target;
use margulis::report::parse_config;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(settings) = parse_config(s) {
        settings.validate().expect("parsed settings are valid");
    }
});

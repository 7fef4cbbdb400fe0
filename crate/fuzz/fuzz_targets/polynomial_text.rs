#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::IntPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<IntPolynomial>() {
        let printed = p.to_string();
        assert_eq!(printed.parse::<IntPolynomial>().unwrap(), p);
    }
});

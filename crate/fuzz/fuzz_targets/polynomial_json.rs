#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::IntPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = IntPolynomial::from_json(text) {
        assert_eq!(IntPolynomial::from_json(&p.to_json()).unwrap(), p);
    }
});

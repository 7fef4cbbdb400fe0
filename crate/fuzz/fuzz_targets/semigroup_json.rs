#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = NumericalSemigroup::from_json(text) {
        assert_eq!(NumericalSemigroup::from_json(&s.to_json()).unwrap(), s);
    }
});

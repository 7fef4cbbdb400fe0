#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::relations::{feen_check, PolynomialRelation};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rel) = PolynomialRelation::from_json(text) {
        assert!(feen_check(&rel).all_pass());
        assert_eq!(PolynomialRelation::from_json(&rel.to_json()).unwrap(), rel);
    }
});

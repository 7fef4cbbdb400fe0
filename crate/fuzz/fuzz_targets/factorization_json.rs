#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::CyclotomicFactorization;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = CyclotomicFactorization::from_json(text) {
        assert_eq!(CyclotomicFactorization::from_json(&f.to_json()).unwrap(), f);
        if f.factors.iter().all(|(&d, &e)| d <= 1000 && e <= 8) {
            assert_eq!(f.expand().degree(), Some(f.degree() as usize));
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::semigroup::parse_generators;
use numsg::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gens) = parse_generators(text) {
        assert!(!gens.is_empty() && !gens.contains(&0));
        let joined = gens.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(parse_generators(&joined).unwrap(), gens);
        if gens.iter().all(|&g| g < 1 << 12) {
            let _ = NumericalSemigroup::from_generators(&gens);
        }
    }
});

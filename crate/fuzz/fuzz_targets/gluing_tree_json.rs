#![no_main]

use libfuzzer_sys::fuzz_target;
use numsg::structure::GluingTree;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(tree) = GluingTree::from_json(text) {
        assert_eq!(GluingTree::from_json(&tree.to_json()).unwrap(), tree);
        if tree.leaves().len() <= 6 && tree.gluing_degrees().iter().all(|&d| d <= 1 << 10) {
            let _ = tree.semigroup();
        }
    }
});

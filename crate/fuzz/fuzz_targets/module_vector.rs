#![no_main]
use libfuzzer_sys::fuzz_target;
use osp_core::enveloping::{shared_algebra, ModuleVector};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 4096 {
        return;
    }
    let alg = shared_algebra(3).unwrap();
    for token in s.split_whitespace().take(8) {
        let _ = alg.parse_generator(token);
    }
    if let Ok(v) = ModuleVector::parse(&alg, s) {
        assert_eq!(ModuleVector::parse(&alg, &v.to_text(&alg)).unwrap(), v);
    }
});

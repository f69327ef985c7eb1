#![no_main]
use libfuzzer_sys::fuzz_target;
use osp_core::rational::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 256 {
        return;
    }
    if let Ok(q) = parse_rational(s) {
        // Display is canonical, so it must parse back to the same value.
        assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
    }
});

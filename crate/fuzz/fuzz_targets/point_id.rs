#![no_main]
use libfuzzer_sys::fuzz_target;
use osp_core::weights::PointId;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(id) = s.parse::<PointId>() {
        assert_eq!(id.label().parse::<PointId>().unwrap(), id);
    }
});

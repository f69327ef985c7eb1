#![no_main]
use libfuzzer_sys::fuzz_target;
use osp_core::characters::CharacterSeries;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(series) = CharacterSeries::from_text(3, 6, s) {
        let text = series.to_text();
        assert_eq!(CharacterSeries::from_text(3, 6, &text).unwrap(), series);
    }
});

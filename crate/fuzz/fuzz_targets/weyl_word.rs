#![no_main]
use libfuzzer_sys::fuzz_target;
use osp_core::weyl::{parse_word, WeylElement};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(word) = parse_word(s) else { return };
    if word.len() > 64 {
        return;
    }
    // Out-of-range letters are an error, never a panic.
    if let Ok(w) = WeylElement::from_word(3, &word) {
        let again = WeylElement::from_word(3, &parse_word(&w.word_string()).unwrap()).unwrap();
        assert_eq!((again.perm, again.signs, again.length), (w.perm, w.signs, w.length));
    }
});

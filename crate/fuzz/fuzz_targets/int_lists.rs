#![no_main]
use libfuzzer_sys::fuzz_target;
use osp_core::rational::{parse_int_list, parse_labels};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let labels = parse_labels(s);
    let ints = parse_int_list(s);
    if let Ok(v) = &labels {
        let back: Vec<i64> = v.iter().map(|&x| i64::from(x)).collect();
        assert_eq!(ints.as_ref().ok(), Some(&back));
        let joined = v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(parse_labels(&joined).unwrap(), *v);
    }
});
